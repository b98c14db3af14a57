"""First-digit probabilities from scale invariance.

A density proportional to 1/x over whole decades puts mass log10(1 + 1/d) on
leading digit d.  This script prints the closed form to full precision and
cross-checks with a direct Monte Carlo: u uniform on [0, 6], x = 10**u, count
leading digits.
"""

import numpy as np


def main() -> None:
    digits = np.arange(1, 10)
    probs = np.log10(1.0 + 1.0 / digits)
    for d, p in zip(digits, probs):
        print(f"P(d={d}) = {p!r}")
    print(f"sum = {probs.sum()!r}")

    rng = np.random.default_rng(20260819)
    u = rng.uniform(0.0, 6.0, size=2_000_000)
    x = 10.0**u
    lead = (x / 10.0 ** np.floor(np.log10(x))).astype(int)
    freq = np.bincount(lead, minlength=10)[1:10] / len(x)
    print(f"mc_max_abs_err = {np.max(np.abs(freq - probs)):.2e}")


if __name__ == "__main__":
    main()
