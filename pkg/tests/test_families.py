"""Function classes: extremal constructions, membership residuals, sampling.

The heavy lifting is the residual block: every random member must satisfy
its class's defining differential relation identically in the truncation,
which is what "membership by construction" promises.
"""

import cmath
import math
import zlib

import numpy as np
import pytest

from invlog import bounds, families, series
from invlog.families import ClassSpec, SchwarzFn
from invlog.series import Series


def RNG(tag):
    return np.random.default_rng(zlib.crc32(f"families:{tag}".encode()))


def _maxabs(arr):
    return float(np.max(np.abs(arr)))


def _z_fprime_over_f(f: Series) -> Series:
    # z f'/f = f' / (f/z), both known one order below f
    fp = series.differentiate(f)
    return series.multiply(fp, series.reciprocal(series.divide_by_z(f), f.order - 1),
                           f.order - 1)


def _z_fpp_over_fp(f: Series) -> Series:
    ord2 = f.order - 2
    fpp = series.differentiate(series.differentiate(f))
    zfpp = series.shift(fpp, 1, ord2)
    fp = series.truncate(series.differentiate(f), ord2)
    return series.multiply(zfpp, series.reciprocal(fp, ord2), ord2)


def _phi(phi_fn: SchwarzFn, order: int) -> Series:
    return families.schwarz_series(phi_fn, order)


# ---------------------------------------------------------------------------
# named extremal functions


def test_koebe_coefficients():
    f = families.koebe(0.0, 10)
    assert np.allclose(f.coeffs, np.arange(11), atol=0)
    theta = 0.7
    g = families.koebe(theta, 8)
    n = np.arange(2, 9)
    assert _maxabs(g.coeffs[2:] - n * np.exp(1j * theta * (n - 1))) < 1e-15


def test_koebe_equals_one_point_map_of_widest_class():
    k = families.k_AB_n(1.0, -1.0, 1, 12)
    assert _maxabs(k.coeffs - families.koebe(0.0, 12).coeffs) < 1e-12


def test_k_AB_n_is_n_symmetric():
    f = families.k_AB_n(0.4, -0.6, 3, 13)
    for idx in range(13):
        if idx % 3 != 1:
            assert f.coeffs[idx] == 0
    assert abs(f.coeffs[4] - (0.4 + 0.6) / (3 * -0.6) * -0.6) < 1e-15  # (A-B)/n at z^4


def test_k_AB_n_limit_form_at_B_zero():
    # z exp(A z^n / n): coefficient of z^{mn+1} is (A/n)^m / m!
    A, n = 0.3, 2
    f = families.k_AB_n(A, 0.0, n, 11)
    for m in range(0, 5):
        want = (A / n) ** m / math.factorial(m)
        assert abs(f.coeffs[m * n + 1] - want) < 1e-14
    # and it is the B -> 0 limit of the power form
    g = families.k_AB_n(A, 1e-9, n, 11)
    assert _maxabs(f.coeffs - g.coeffs) < 1e-6


def test_k_AB_n_validation():
    with pytest.raises(ValueError):
        families.k_AB_n(-1.0, 1.0, 1, 5)
    with pytest.raises(ValueError):
        families.k_AB_n(0.5, 0.5, 1, 5)
    with pytest.raises(ValueError):
        families.k_AB_n(1.0, -1.0, 0, 5)


def test_spiral_extremal_with_no_tilt_reduces_to_real_family():
    for beta in (0.0, 0.25, 0.6):
        for n in (1, 2, 4):
            s = families.spiral_extremal(0.0, beta, n, 10)
            k = families.k_AB_n(1.0 - 2.0 * beta, -1.0, n, 10)
            assert _maxabs(s.coeffs - k.coeffs) < 1e-12


def test_gc_extremal_derivative_identity():
    for c, m in ((0.25, 1), (0.5, 2), (1.0, 1)):
        f = families.gc_extremal(c, m, 9)
        dp = series.differentiate(f)
        want = series.pow_scalar(
            series.subtract(series.constant(1.0, 8), series.monomial(m, 8), 8), c / m, 8)
        assert _maxabs(dp.coeffs - want.coeffs) < 1e-13
    g = families.gc_extremal(1.0, 1, 5)
    assert np.allclose(g.coeffs, [0, 1, -0.5, 0, 0, 0], atol=1e-15)


def test_f_alpha_extremal_halfconvex_closed_form():
    a = families.f_alpha_extremal(-0.5, "halfconvex", 10)
    b = families.f_alpha_extremal(-0.5, "pow1", 10)
    assert _maxabs(a.coeffs - b.coeffs) < 1e-12


def test_f_alpha_extremal_derivative_identities():
    alpha = 0.3
    for variant, k, mu in (("pow1", 1, -2.0 * 0.7), ("pow2", 2, -0.7),
                           ("pow3", 3, -2.0 * 0.7 / 3.0)):
        f = families.f_alpha_extremal(alpha, variant, 9)
        dp = series.differentiate(f)
        want = series.pow_scalar(
            series.subtract(series.constant(1.0, 8), series.monomial(k, 8), 8), mu, 8)
        assert _maxabs(dp.coeffs - want.coeffs) < 1e-13


def test_f_alpha_extremal_validation():
    with pytest.raises(ValueError):
        families.f_alpha_extremal(1.0, "pow1", 5)
    with pytest.raises(ValueError):
        families.f_alpha_extremal(0.0, "pow9", 5)


# ---------------------------------------------------------------------------
# Schwarz functions


def _schwarz_eval(phi: SchwarzFn, z: complex) -> complex:
    out = cmath.exp(1j * phi.theta) * z ** phi.multiplicity
    for a in phi.factors:
        out *= (z + a) / (1.0 + a.conjugate() * z)
    return out


def test_schwarz_series_matches_rational_evaluation():
    rng = RNG("schwarz-eval")
    for _ in range(20):
        phi = families.sample_schwarz(int(rng.integers(1 << 30)))
        s = families.schwarz_series(phi, 40)
        for t in (0.0, 1.1, 2.5):
            z = 0.3 * cmath.exp(1j * t)
            partial = sum(s.coeffs[k] * z ** k for k in range(41))
            assert abs(partial - _schwarz_eval(phi, z)) < 1e-10


def test_schwarz_series_leading_coefficients():
    a = 0.4 + 0.1j
    phi = SchwarzFn(theta=0.9, multiplicity=2, factors=(a,))
    s = families.schwarz_series(phi, 5)
    rot = cmath.exp(0.9j)
    assert abs(s.coeffs[0]) == 0 and abs(s.coeffs[1]) == 0
    assert abs(s.coeffs[2] - rot * a) < 1e-15
    assert abs(s.coeffs[3] - rot * (1.0 - abs(a) ** 2)) < 1e-15


def test_blaschke_series_leading_coefficients():
    a = -0.3 + 0.25j
    b = families.blaschke_series(0.0, (a,), 4)
    assert abs(b.coeffs[0] - a) < 1e-15
    assert abs(b.coeffs[1] - (1.0 - abs(a) ** 2)) < 1e-15
    assert abs(b.coeffs[2] + a.conjugate() * (1.0 - abs(a) ** 2)) < 1e-15


def test_blaschke_is_unimodular_on_the_circle():
    # property of the product formula itself, checked pointwise
    phi = SchwarzFn(theta=0.3, multiplicity=1, factors=(0.5, -0.2 + 0.6j))
    for t in (0.1, 1.0, 3.0, 5.5):
        assert abs(abs(_schwarz_eval(phi, cmath.exp(1j * t))) - 1.0) < 1e-12


def test_schwarz_validation():
    with pytest.raises(ValueError):
        SchwarzFn(theta=0.0, multiplicity=0)
    with pytest.raises(ValueError):
        SchwarzFn(theta=0.0, multiplicity=1, factors=(1.0,))
    with pytest.raises(ValueError):
        families.blaschke_series(0.0, (1.2,), 4)


def test_schwarz_series_high_multiplicity_is_zero_padding():
    phi = SchwarzFn(theta=0.0, multiplicity=7, factors=())
    s = families.schwarz_series(phi, 4)
    assert np.all(s.coeffs == 0)


def test_sample_schwarz_is_deterministic_and_capped():
    a = families.sample_schwarz((123, 4, 0))
    b = families.sample_schwarz((123, 4, 0))
    assert a == b
    c = families.sample_schwarz((123, 5, 0))
    assert a != c
    for i in range(50):
        phi = families.sample_schwarz((99, i), radius_cap=0.7)
        assert phi.multiplicity in (1, 2, 3)
        assert 1 <= len(phi.factors) <= 4
        assert all(abs(x) <= 0.7 for x in phi.factors)


def test_sample_schwarz_validation():
    with pytest.raises(ValueError):
        families.sample_schwarz(1, radius_cap=1.0)
    with pytest.raises(ValueError):
        families.sample_schwarz(1, degree_max=2, degree_min=3)


# ---------------------------------------------------------------------------
# members by subordination: defining-relation residuals


def _member_residual(spec: ClassSpec, phi_fn: SchwarzFn, order: int) -> float:
    f = families.member_from_schwarz(spec, phi_fn, order)
    if spec.tag == "f-alpha":
        ord2 = order - 2
        s = _phi(phi_fn, ord2)
        lhs = series.multiply(_z_fpp_over_fp(f),
                              series.subtract(series.constant(1.0, ord2), s, ord2), ord2)
        rhs = series.scale(s, 2.0 * (1.0 - spec.alpha))
        return _maxabs(series.subtract(lhs, rhs, ord2).coeffs)
    ord1 = order - 1
    s = _phi(phi_fn, ord1)
    q = _z_fprime_over_f(f)
    one = series.constant(1.0, ord1)
    if spec.tag in ("full-s", "star-ab"):
        A = 1.0 if spec.tag == "full-s" else spec.A
        B = -1.0 if spec.tag == "full-s" else spec.B
        lhs = series.multiply(q, series.add(one, series.scale(s, B), ord1), ord1)
        rhs = series.add(one, series.scale(s, A), ord1)
    elif spec.tag == "spiral":
        A = cmath.exp(1j * spec.alpha) * (cmath.exp(1j * spec.alpha)
                                          - 2.0 * spec.beta * math.cos(spec.alpha))
        lhs = series.multiply(q, series.subtract(one, s, ord1), ord1)
        rhs = series.add(one, series.scale(s, A), ord1)
    elif spec.tag == "gc":
        c = spec.c
        lhs = series.multiply(q, series.subtract(series.constant(1.0 + c, ord1), s, ord1), ord1)
        rhs = series.scale(series.subtract(one, s, ord1), 1.0 + c)
    else:
        raise AssertionError(spec.tag)
    return _maxabs(series.subtract(lhs, rhs, ord1).coeffs)


@pytest.mark.parametrize("spec", [
    ClassSpec.full_s(),
    ClassSpec.star_ab(1.0, -1.0),
    ClassSpec.star_ab(0.6, -0.4),
    ClassSpec.star_ab(0.2, 0.0),
    ClassSpec.spiral(0.5, 0.25),
    ClassSpec.spiral(-1.1, 0.7),
    ClassSpec.gc(0.5),
    ClassSpec.gc(1.0),
    ClassSpec.f_alpha(0.0),
    ClassSpec.f_alpha(-0.5),
    ClassSpec.f_alpha(0.8),
], ids=lambda s: s.label())
def test_member_satisfies_defining_relation(spec):
    rng = RNG(f"resid-{spec.label()}")
    worst = 0.0
    for i in range(25):
        phi_fn = families.sample_schwarz((int(rng.integers(1 << 30)), i))
        worst = max(worst, _member_residual(spec, phi_fn, 14))
    assert worst < 1e-10


def test_member_from_schwarz_identity_phi_gives_named_extremals():
    order = 12
    phi = series.extend(series.identity(1), order - 1)
    full = families.member_from_schwarz(ClassSpec.full_s(), phi, order)
    assert _maxabs(full.coeffs - families.koebe(0.0, order).coeffs) < 1e-12

    star = families.member_from_schwarz(ClassSpec.star_ab(0.5, -0.5), phi, order)
    assert _maxabs(star.coeffs - families.k_AB_n(0.5, -0.5, 1, order).coeffs) < 1e-12

    fa = families.member_from_schwarz(ClassSpec.f_alpha(-0.5), phi, order)
    assert _maxabs(fa.coeffs - families.f_alpha_extremal(-0.5, "pow1", order).coeffs) < 1e-12

    c = 0.5
    gc = families.member_from_schwarz(ClassSpec.gc(c), phi, order)
    base = series.subtract(series.constant(1.0, order - 1),
                           series.scale(series.extend(series.identity(1), order - 1),
                                        1.0 / (1.0 + c)), order - 1)
    want = np.concatenate([[0.0], series.pow_scalar(base, c, order - 1).coeffs])
    assert _maxabs(gc.coeffs - want) < 1e-12

    alpha, beta = 0.5, 0.25
    sp = families.member_from_schwarz(ClassSpec.spiral(alpha, beta), phi, order)
    gam = 2.0 * (1.0 - beta) * math.cos(alpha) * cmath.exp(1j * alpha)
    base = series.subtract(series.constant(1.0, order - 1),
                           series.extend(series.identity(1), order - 1), order - 1)
    want = np.concatenate([[0.0], series.pow_scalar(base, -gam, order - 1).coeffs])
    assert _maxabs(sp.coeffs - want) < 1e-12


def test_member_from_schwarz_rejects_bad_phi():
    spec = ClassSpec.star_ab(1.0, -1.0)
    with pytest.raises(ValueError):
        families.member_from_schwarz(spec, series.Series([0.5, 1.0]), 8)
    with pytest.raises(ValueError):
        families.member_from_schwarz(spec, series.identity(2), 8)  # too short
    with pytest.raises(TypeError):
        families.member_from_schwarz(spec, "z", 8)
    with pytest.raises(ValueError):
        families.member_from_schwarz(ClassSpec.u_lambda(0.5),
                                     series.extend(series.identity(1), 7), 8)


# ---------------------------------------------------------------------------
# bounded-distortion members


def test_u_lambda_member_structure_identity():
    # f' (z/f)^2 - 1 + lam z^2 omega = 0 in the truncation
    rng = RNG("u-resid")
    lam = 0.75
    order = 14
    for i in range(20):
        omega = families.blaschke_series(float(rng.uniform(0, 6)),
                                         tuple(0.8 * np.sqrt(rng.uniform(size=2))
                                               * np.exp(1j * rng.uniform(0, 6, size=2))),
                                         order)
        a2 = complex(rng.normal(), rng.normal()) * 0.5
        f = families.u_lambda_member(a2, omega, lam, order)
        ord2 = order - 2
        zf = series.reciprocal(series.divide_by_z(f), order - 1)  # z/f
        sq = series.multiply(zf, zf, ord2)
        lhs = series.multiply(series.truncate(series.differentiate(f), ord2), sq, ord2)
        resid = series.add(series.subtract(lhs, series.constant(1.0, ord2), ord2),
                           series.shift(series.scale(omega, lam), 2, ord2), ord2)
        assert _maxabs(resid.coeffs) < 1e-10


def test_u_lambda_member_accepts_three_omega_forms():
    lam, a2, order = 0.5, 0.3 + 0.1j, 10
    const = families.u_lambda_member(a2, 0.4, lam, order)
    flat = families.blaschke_series(0.0, (), order)  # constant 1
    assert abs(const.coeffs[2] - a2) < 1e-15
    via_series = families.u_lambda_member(a2, series.scale(flat, 0.4), lam, order)
    assert _maxabs(const.coeffs - via_series.coeffs) < 1e-15
    phi = SchwarzFn(theta=0.0, multiplicity=1, factors=(0.2,))
    f = families.u_lambda_member(a2, phi, lam, order)
    assert f.order == order


def test_u_lambda_member_validation():
    with pytest.raises(ValueError):
        families.u_lambda_member(0.1, 0.0, 1.5, 8)
    with pytest.raises(ValueError):
        families.u_lambda_member(0.1, 0.0, 0.5, 1)
    with pytest.raises(ValueError):
        families.u_lambda_member(0.1, 1.5, 0.5, 8)  # constant omega too large
    with pytest.raises(ValueError):
        families.u_lambda_member(0.1, series.constant(0.5, 2), 0.5, 12)  # short omega


def test_u_extremal_second_coefficient():
    for lam, a in ((0.25, 0.0), (1.0, 0.3), (0.6, 0.7)):
        f = families.u_extremal(lam, a, 9)
        assert abs(f.coeffs[2] - (1.0 + lam * bounds.v_of_x(a))) < 1e-13
    with pytest.raises(ValueError):
        families.u_extremal(0.5, 1.0, 9)


# ---------------------------------------------------------------------------
# class descriptors


def test_class_spec_validation():
    with pytest.raises(ValueError):
        ClassSpec(tag="nope")
    with pytest.raises(ValueError):
        ClassSpec.star_ab(0.5, 0.5)
    with pytest.raises(ValueError):
        ClassSpec.star_ab(1.2, -1.0)
    with pytest.raises(ValueError):
        ClassSpec.spiral(2.0, 0.5)
    with pytest.raises(ValueError):
        ClassSpec.spiral(0.0, 1.0)
    with pytest.raises(ValueError):
        ClassSpec.gc(0.0)
    with pytest.raises(ValueError):
        ClassSpec.gc(1.5)
    with pytest.raises(ValueError):
        ClassSpec.u_lambda(0.0)
    with pytest.raises(ValueError):
        ClassSpec.f_alpha(-0.6)
    with pytest.raises(ValueError):
        ClassSpec.f_alpha(1.0)
    with pytest.raises(ValueError):
        ClassSpec(tag="star-ab", A=1.0)  # missing B


def test_class_spec_delta_and_label():
    sp = ClassSpec.star_ab(0.5, -0.5)
    assert abs(sp.delta - 1.0 / 3.0) < 1e-15
    assert sp.label() == "star-ab(A=0.5,B=-0.5)"
    assert sp.params() == {"A": 0.5, "B": -0.5}
    with pytest.raises(ValueError):
        ClassSpec.gc(0.5).delta
    assert ClassSpec.full_s().label() == "full-s"
    assert ClassSpec.u_lambda(0.75).params() == {"lam": 0.75}
