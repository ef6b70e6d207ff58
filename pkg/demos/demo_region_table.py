"""The quartic-functional region map behind the third-order convexity bound.

The Gamma_3 bound for the half-plane convexity class rides on a maximum of
|upsilon + mu t + t^2| over t in [0, 1], whose sharp value is known on a
handful of (mu, upsilon) regions. This script shows where the class's
parameter segment actually travels through those regions, then sweeps the
whole segment at step 1e-3 and reports any point whose region claim fails.
"""

from invlog import bounds


def main():
    print(" alpha      mu     upsilon   region   psi bound")
    for ten in range(-5, 8):
        alpha = ten / 10.0
        mu, ups = bounds.f_alpha_mu_upsilon(alpha)
        region = bounds.ps_region(mu, ups)
        psi = bounds.ps_psi_bound(mu, ups)
        txt = "none" if psi is None else f"{psi:.4f}"
        print(f"{alpha:>6.2f}  {mu:>7.3f}  {ups:>8.4f}   {region:<7} {txt}")

    print("\nGamma_3 clause walls:")
    for alpha in (bounds.ALPHA3_LOW_HI, bounds.ALPHA3_LO, bounds.ALPHA3_HI):
        res = bounds.bound_F_gamma3(alpha)
        val = "n/a" if res.value is None else f"{res.value:.6f}"
        print(f"  alpha = {alpha:<10.6f} -> {res.branch:<10} bound {val}")
    res = bounds.bound_F_gamma3(0.18)  # inside the gap between the two ranges
    print(f"  alpha = 0.18       -> {res.branch:<10} ({res.note})")

    print("\nfull-segment sweep, step 1e-3:")
    rep = bounds.verify_d1234(step=1e-3)
    print(f"  checked {rep['checked']} grid points, ok = {rep['ok']}, "
          f"mismatches = {len(rep['mismatches'])}")
    for row in rep["rows"]:
        print(f"  {row['region']}: alpha in [{row['alpha_lo']:.6f}, {row['alpha_hi']:.6f}]")


if __name__ == "__main__":
    main()
