"""Effective ridge width of an instrument-blurred empirical theory.

Each simulated experiment drops a lognormal bump at the *observed* lengths
and times.  In the ridge coordinate zeta = ln L - ln(g/2) - 2 ln T the bump
has spread sqrt(sigma_L^2 + 4 sigma_T^2) (time enters with derivative -2),
and its center is displaced by the same instrument noise, an independent
N(0, sigma_L^2 + 4 sigma_T^2) draw.  The accumulated marginal in zeta is the
convolution, variance 2 (sigma_L^2 + 4 sigma_T^2).  Monte Carlo check: draw a
bump center, then a point inside the bump, and measure the zeta spread.
"""

import numpy as np

SIGMA_L = 0.05
SIGMA_T = 0.05


def main() -> None:
    analytic = np.sqrt(2.0 * (SIGMA_L**2 + 4.0 * SIGMA_T**2))
    print(f"sigma_eff_analytic = {analytic!r}")

    rng = np.random.default_rng(42)
    n = 2_000_000
    # True values on the law: zeta_true = 0 identically.
    center = SIGMA_L * rng.standard_normal(n) - 2.0 * SIGMA_T * rng.standard_normal(n)
    spread = SIGMA_L * rng.standard_normal(n) - 2.0 * SIGMA_T * rng.standard_normal(n)
    zeta = center + spread
    print(f"sigma_eff_mc       = {zeta.std()!r}")
    print(f"relative_error     = {abs(zeta.std() - analytic) / analytic:.2e}")


if __name__ == "__main__":
    main()
