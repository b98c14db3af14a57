"""Width of the renormalized product of two unit-width Gaussians.

Two N(0, 1) factors multiply into exp(-x^2), a Gaussian with variance 1/2.
The expected standard deviation is 1/sqrt(2); this script confirms it two
ways (closed form and midpoint quadrature on the grid the tests use) so the
constant frozen into the test suite is independently derived.
"""

import numpy as np


def main() -> None:
    closed_form = 1.0 / np.sqrt(2.0)
    print(f"closed_form_sd = {closed_form!r}")

    x = np.linspace(-8.0, 8.0, 801)
    w = np.full_like(x, x[1] - x[0])
    w[0] = w[-1] = 0.5 * (x[1] - x[0])
    g = np.exp(-0.5 * x * x) / np.sqrt(2 * np.pi)
    prod = g * g
    prod /= np.sum(prod * w)
    mean = np.sum(x * prod * w)
    sd = np.sqrt(np.sum((x - mean) ** 2 * prod * w))
    print(f"quadrature_sd  = {sd!r}")
    print(f"difference     = {abs(sd - closed_form):.3e}")


if __name__ == "__main__":
    main()
