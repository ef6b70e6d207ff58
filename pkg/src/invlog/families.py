"""Function classes: named extremal functions and random member generation.

Members are produced from each class's defining subordination with a true
Schwarz function, so membership holds by construction; there is no
a-posteriori boundary checking of truncated series. The exception is the
bounded-distortion class ("u-lambda"), whose members come from the structure
formula f = z / (1 - a2 z + lam * z * int(omega)) with an analytic omega
bounded by 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import series
from .bounds import v_of_x
from .series import AnalyticSeries, Series, UnitSeries

CLASS_TAGS = ("full-s", "star-ab", "spiral", "gc", "u-lambda", "f-alpha")

F_ALPHA_VARIANTS = ("pow1", "pow2", "pow3", "halfconvex")


@dataclass(frozen=True)
class ClassSpec:
    """Tagged description of a function class and its parameters."""

    tag: str
    A: float | None = None
    B: float | None = None
    alpha: float | None = None
    beta: float | None = None
    c: float | None = None
    lam: float | None = None

    def __post_init__(self):
        if self.tag not in CLASS_TAGS:
            raise ValueError(f"unknown class tag {self.tag!r}")
        if self.tag == "star-ab":
            if self.A is None or self.B is None:
                raise ValueError("star-ab needs A and B")
            if not (-1 <= self.B < self.A <= 1):
                raise ValueError(f"star-ab requires -1 <= B < A <= 1, got A={self.A}, B={self.B}")
        elif self.tag == "spiral":
            if self.alpha is None or self.beta is None:
                raise ValueError("spiral needs alpha and beta")
            if not abs(self.alpha) < math.pi / 2:
                raise ValueError(f"spiral requires |alpha| < pi/2, got {self.alpha}")
            if not 0 <= self.beta < 1:
                raise ValueError(f"spiral requires 0 <= beta < 1, got {self.beta}")
        elif self.tag == "gc":
            if self.c is None:
                raise ValueError("gc needs c")
            if not 0 < self.c <= 1:
                raise ValueError(f"gc requires 0 < c <= 1, got {self.c}")
        elif self.tag == "u-lambda":
            if self.lam is None:
                raise ValueError("u-lambda needs lam")
            if not 0 < self.lam <= 1:
                raise ValueError(f"u-lambda requires 0 < lam <= 1, got {self.lam}")
        elif self.tag == "f-alpha":
            if self.alpha is None:
                raise ValueError("f-alpha needs alpha")
            if not -0.5 <= self.alpha < 1:
                raise ValueError(f"f-alpha requires -1/2 <= alpha < 1, got {self.alpha}")

    @classmethod
    def full_s(cls):
        return cls(tag="full-s")

    @classmethod
    def star_ab(cls, A, B):
        return cls(tag="star-ab", A=float(A), B=float(B))

    @classmethod
    def spiral(cls, alpha, beta):
        return cls(tag="spiral", alpha=float(alpha), beta=float(beta))

    @classmethod
    def gc(cls, c):
        return cls(tag="gc", c=float(c))

    @classmethod
    def u_lambda(cls, lam):
        return cls(tag="u-lambda", lam=float(lam))

    @classmethod
    def f_alpha(cls, alpha):
        return cls(tag="f-alpha", alpha=float(alpha))

    @property
    def delta(self) -> float:
        """(1-A)/(1-B) in [0,1); the dispatch variable for the A,B family."""
        if self.tag != "star-ab":
            raise ValueError("delta is defined for star-ab specs only")
        return (1.0 - self.A) / (1.0 - self.B)

    def label(self) -> str:
        if self.tag == "full-s":
            return "full-s"
        if self.tag == "star-ab":
            return f"star-ab(A={self.A:g},B={self.B:g})"
        if self.tag == "spiral":
            return f"spiral(alpha={self.alpha:g},beta={self.beta:g})"
        if self.tag == "gc":
            return f"gc(c={self.c:g})"
        if self.tag == "u-lambda":
            return f"u-lambda(lam={self.lam:g})"
        return f"f-alpha(alpha={self.alpha:g})"

    def params(self) -> dict:
        out = {}
        for name in ("A", "B", "alpha", "beta", "c", "lam"):
            val = getattr(self, name)
            if val is not None:
                out[name] = float(val)
        return out


@dataclass(frozen=True)
class SchwarzFn:
    """phi(z) = e^{i theta} z^m prod_j (z + a_j)/(1 + conj(a_j) z).

    phi(0) = 0 and sup |phi| < 1 on the open disk by construction; each
    Blaschke parameter must lie strictly inside the unit disk.
    """

    theta: float
    multiplicity: int = 1
    factors: tuple = ()

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("zero multiplicity must be >= 1")
        for a in self.factors:
            if abs(a) >= 1:
                raise ValueError(f"Blaschke parameter {a!r} not inside the unit disk")
        object.__setattr__(self, "factors", tuple(complex(a) for a in self.factors))


# ---------------------------------------------------------------------------
# named extremal functions


def koebe(theta: float, order: int) -> AnalyticSeries:
    """Rotated cusp map e^{-i theta} k(e^{i theta} z); coefficients n e^{i(n-1)theta}."""
    if order < 1:
        raise ValueError("koebe needs order >= 1")
    n = np.arange(order + 1, dtype=np.float64)
    coeffs = n * np.exp(1j * theta * (n - 1))
    coeffs[0] = 0.0
    coeffs[1] = 1.0
    return AnalyticSeries(coeffs)


def _one_plus_monomial(k: int, coeff, order: int) -> UnitSeries:
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = 1.0
    if k <= order:
        c[k] = coeff
    return UnitSeries(c)


def _z_times(u: Series, order: int) -> AnalyticSeries:
    if u.order < order - 1:
        raise ValueError(f"factor of order {u.order} not known to order {order - 1}")
    return AnalyticSeries(np.concatenate(([0.0], u.coeffs[:order])))


def k_AB_n(A: float, B: float, n: int, order: int) -> AnalyticSeries:
    """z (1 + B z^n)^{(A-B)/(nB)}; B = 0 takes the limit form z exp(A z^n / n)."""
    if not (-1 <= B < A <= 1):
        raise ValueError(f"requires -1 <= B < A <= 1, got A={A}, B={B}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    if B == 0:
        expo = series.monomial(n, order - 1, A / n) if n <= order - 1 else series.constant(0.0, order - 1)
        u = series.exp_zero(expo, order - 1)
    else:
        base = _one_plus_monomial(n, B, order - 1)
        u = series.pow_scalar(base, (A - B) / (n * B), order - 1)
    return _z_times(u, order)


def spiral_extremal(alpha: float, beta: float, n: int, order: int) -> AnalyticSeries:
    """z / (1 - z^n)^{gamma/n} with real exponent gamma = 2(1-beta)cos(alpha)."""
    if not abs(alpha) < math.pi / 2:
        raise ValueError(f"requires |alpha| < pi/2, got {alpha}")
    if not 0 <= beta < 1:
        raise ValueError(f"requires 0 <= beta < 1, got {beta}")
    if n < 1 or order < 1:
        raise ValueError("n and order must be >= 1")
    gamma = 2.0 * (1.0 - beta) * math.cos(alpha)
    base = _one_plus_monomial(n, -1.0, order - 1)
    return _z_times(series.pow_scalar(base, -gamma / n, order - 1), order)


def gc_extremal(c: float, m: int, order: int) -> AnalyticSeries:
    """Antiderivative of (1 - z^m)^{c/m}: the function the bound is claimed sharp for."""
    if not 0 < c <= 1:
        raise ValueError(f"requires 0 < c <= 1, got {c}")
    if m < 1 or order < 1:
        raise ValueError("m and order must be >= 1")
    base = _one_plus_monomial(m, -1.0, order - 1)
    deriv = series.pow_scalar(base, c / m, order - 1)
    return AnalyticSeries(series.integrate_termwise(deriv, order).coeffs)


def u_lambda_member(a2, omega, lam: float, order: int) -> AnalyticSeries:
    """f = z / (1 - a2 z + lam z int_0^z omega(t) dt).

    omega may be a SchwarzFn, a Series (analytic, bounded by 1 -- the caller's
    responsibility), or a complex constant of modulus <= 1. The construction
    satisfies f'(z/f)^2 - 1 = -lam z^2 omega identically.
    """
    if not 0 < lam <= 1:
        raise ValueError(f"requires 0 < lam <= 1, got {lam}")
    if order < 2:
        raise ValueError("order must be >= 2")
    dord = order - 1
    den = np.zeros(dord + 1, dtype=np.complex128)
    den[0] = 1.0
    den[1] = -complex(a2)
    if dord >= 2:
        w = _omega_coeffs(omega, dord - 2)
        # (z * int omega)[k] = omega_{k-2} / (k-1) for k >= 2
        den[2:] += lam * w / np.arange(1, dord, dtype=np.float64)
    return _z_times(series.reciprocal(Series(den), dord), order)


def _omega_coeffs(omega, order: int) -> np.ndarray:
    if isinstance(omega, SchwarzFn):
        return schwarz_series(omega, order).coeffs
    if isinstance(omega, Series):
        if omega.order < order:
            raise ValueError(f"omega of order {omega.order} not known to order {order}")
        return omega.coeffs[: order + 1]
    val = complex(omega)
    if abs(val) > 1:
        raise ValueError(f"constant omega must have modulus <= 1, got {abs(val)}")
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = val
    return c


def u_extremal(lam: float, a: float, order: int) -> AnalyticSeries:
    """The equality function for the bounded-distortion class: a2 = 1 + lam v(a),
    omega(t) = (t + a)/(1 + a t), for a in [0, 1)."""
    if not 0 <= a < 1:
        raise ValueError(f"requires 0 <= a < 1, got {a}")
    a2 = 1.0 + lam * v_of_x(a)
    omega = blaschke_series(0.0, (a,), max(order - 3, 0))
    return u_lambda_member(a2, omega, lam, order)


def f_alpha_extremal(alpha: float, variant: str, order: int) -> AnalyticSeries:
    """The convexity-type equality functions, one per bound clause.

    pow1: f' = (1-z)^{-2(1-alpha)}     pow2: f' = (1-z^2)^{-(1-alpha)}
    pow3: f' = (1-z^3)^{-2(1-alpha)/3} halfconvex: (z - z^2/2)/(1-z)^2,
    the pow1 function at alpha = -1/2 in closed form.
    """
    if not -0.5 <= alpha < 1:
        raise ValueError(f"requires -1/2 <= alpha < 1, got {alpha}")
    if variant not in F_ALPHA_VARIANTS:
        raise ValueError(f"variant must be one of {F_ALPHA_VARIANTS}, got {variant!r}")
    if order < 1:
        raise ValueError("order must be >= 1")
    if variant == "halfconvex":
        num = series.extend(Series([0.0, 1.0, -0.5]), order) if order >= 2 else series.identity(order)
        recip_sq = series.pow_scalar(_one_plus_monomial(1, -1.0, order), -2.0, order)
        return AnalyticSeries(series.multiply(num, recip_sq, order).coeffs)
    k, mu = {"pow1": (1, -2.0 * (1 - alpha)),
             "pow2": (2, -(1 - alpha)),
             "pow3": (3, -2.0 * (1 - alpha) / 3.0)}[variant]
    deriv = series.pow_scalar(_one_plus_monomial(k, -1.0, order - 1), mu, order - 1)
    return AnalyticSeries(series.integrate_termwise(deriv, order).coeffs)


# ---------------------------------------------------------------------------
# Schwarz functions and sampling


def schwarz_series(phi: SchwarzFn, order: int) -> Series:
    """Taylor coefficients of phi to the stated order; c0 is exactly zero."""
    if phi.multiplicity > order:
        return series.constant(0.0, order)
    out = series.monomial(phi.multiplicity, order, cmath.exp(1j * phi.theta))
    return _blaschke_apply(out, phi.factors, order)


def blaschke_series(theta: float, factors, order: int) -> Series:
    """e^{i theta} prod_j (z + a_j)/(1 + conj(a_j) z): unit-ball function,
    generally nonzero at the origin (no z^m factor)."""
    for a in factors:
        if abs(a) >= 1:
            raise ValueError(f"Blaschke parameter {a!r} not inside the unit disk")
    return _blaschke_apply(series.constant(cmath.exp(1j * theta), order), factors, order)


def _blaschke_apply(out: Series, factors, order: int) -> Series:
    for a in factors:
        a = complex(a)
        num = np.zeros(order + 1, dtype=np.complex128)
        num[0] = a
        if order >= 1:
            num[1] = 1.0
        den = np.zeros(order + 1, dtype=np.complex128)
        den[0] = 1.0
        if order >= 1:
            den[1] = np.conj(a)
        factor = series.multiply(Series(num), series.reciprocal(Series(den), order), order)
        out = series.multiply(out, factor, order)
    return out


def sample_schwarz(seed, degree_max: int = 4, *, radius_cap: float = 0.95,
                   degree_min: int = 1) -> SchwarzFn:
    """Draw a random Schwarz function, deterministically in the seed.

    seed may be an int or a tuple (campaign seed, sample index, ...); the
    generator is counter-based so parallel draws never share state. Radii are
    sqrt-uniform in [0, radius_cap] (area-uniform in the disk of that radius);
    multiplicity favors simple zeros but exercises the c1 = 0 branches too.
    """
    if not 0 <= radius_cap < 1:
        raise ValueError("radius_cap must lie in [0, 1)")
    if degree_min < 0 or degree_max < degree_min:
        raise ValueError("need 0 <= degree_min <= degree_max")
    rng = np.random.default_rng(seed)
    m = int(rng.choice([1, 1, 1, 2, 3]))
    d = int(rng.integers(degree_min, degree_max + 1))
    theta = float(rng.uniform(0.0, 2.0 * math.pi))
    factors = []
    for _ in range(d):
        r = radius_cap * math.sqrt(rng.uniform())
        t = rng.uniform(0.0, 2.0 * math.pi)
        factors.append(r * cmath.exp(1j * t))
    return SchwarzFn(theta=theta, multiplicity=m, factors=tuple(factors))


# ---------------------------------------------------------------------------
# members from subordination


def member_from_schwarz(spec: ClassSpec, phi, order: int) -> AnalyticSeries:
    """Solve the class's defining subordination with the given Schwarz function.

    phi is a SchwarzFn or any Series with zero constant term (a polynomial
    Schwarz function must be extend()-ed to order-1 by the caller). The
    starlike-type classes give f = z exp(int (q(phi)-1)/t dt); the convexity
    class integrates f' = exp(int 2(1-alpha) phi / (t(1-phi)) dt).
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    s = _phi_series(phi, order - 1)
    tag = spec.tag
    if tag == "u-lambda":
        raise ValueError("u-lambda members come from u_lambda_member(a2, omega, lam), not subordination")
    if tag == "f-alpha":
        g = series.multiply(series.scale(s, 2.0 * (1.0 - spec.alpha)),
                            series.reciprocal(_one_minus(s), order - 1), order - 1)
        integrand = series.divide_by_z(g)
        deriv = series.exp_zero(series.integrate_termwise(integrand, order - 1), order - 1)
        return AnalyticSeries(series.integrate_termwise(deriv, order).coeffs)
    if tag in ("full-s", "star-ab"):
        A = 1.0 if tag == "full-s" else spec.A
        B = -1.0 if tag == "full-s" else spec.B
        num = series.scale(s, A - B)
        den = series.add(series.constant(1.0, order - 1), series.scale(s, B), order - 1)
    elif tag == "spiral":
        # target (1 + A z)/(1 - z) with A = e^{i a}(e^{i a} - 2 beta cos a);
        # A + 1 = 2(1-beta)cos(a) e^{i a}
        coef = 2.0 * (1.0 - spec.beta) * math.cos(spec.alpha) * cmath.exp(1j * spec.alpha)
        num = series.scale(s, coef)
        den = _one_minus(s)
    elif tag == "gc":
        c = spec.c
        num = series.scale(s, -c / (1.0 + c))
        den = series.add(series.constant(1.0, order - 1), series.scale(s, -1.0 / (1.0 + c)), order - 1)
    else:  # pragma: no cover
        raise ValueError(f"unknown tag {tag!r}")
    g = series.multiply(num, series.reciprocal(den, order - 1), order - 1)
    integrand = series.divide_by_z(g)
    unit = series.exp_zero(series.integrate_termwise(integrand, order - 1), order - 1)
    return _z_times(unit, order)


def _phi_series(phi, order: int) -> Series:
    if isinstance(phi, SchwarzFn):
        return schwarz_series(phi, order)
    if isinstance(phi, Series):
        if phi.coeffs[0] != 0:
            raise ValueError("a Schwarz function must vanish at the origin")
        if phi.order < order:
            raise ValueError(f"phi of order {phi.order} not known to order {order}; extend() it if exact")
        return series.truncate(phi, order)
    raise TypeError("phi must be a SchwarzFn or a Series")


def _one_minus(s: Series) -> Series:
    return series.subtract(series.constant(1.0, s.order), s, s.order)
