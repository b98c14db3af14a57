"""Posterior modes for the fall law under one tight measurement.

The law ties length and time through L = (g/2) T^2.  The theory density is a
lognormal ridge of width sigma_t in zeta = ln L - ln(g/2) - 2 ln T, and a
lognormal measurement of T at T0 with width sigma_m multiplies in.  The
length posterior is the T-integral

    p(L) ∝ (1/L) ∫ dT/T exp(-zeta^2 / (2 sigma_t^2))
                       exp(-(ln T - ln T0)^2 / (2 sigma_m^2))

done here by brute midpoint quadrature in ln T on a dense 1e-8-resolution
window, with the mode then refined parabolically in ln L.  Completing the
square predicts mode ln L* = ln(g/2) + 2 ln T0 exactly (the 1/L prefactor is
cancelled by the 1/L of the ridge normalization against the 1/L reference
measure; with the convention used here the ridge is centered, not shifted).
The reverse direction measures L at L0 and asks for T; the predicted mode is
sqrt(2 L0 / g).
"""

import numpy as np

G = 9.81
SIGMA_T = 1e-3  # theory ridge width
SIGMA_M = 1e-3  # measurement width


def length_posterior_mode(t0: float) -> float:
    ln_t = np.linspace(np.log(t0) - 8 * SIGMA_M, np.log(t0) + 8 * SIGMA_M, 4001)
    h = ln_t[1] - ln_t[0]
    meas = np.exp(-((ln_t - np.log(t0)) ** 2) / (2 * SIGMA_M**2))
    center = np.log(G / 2) + 2 * np.log(t0)
    width = np.sqrt(SIGMA_T**2 + 4 * SIGMA_M**2)
    ln_l = np.linspace(center - 6 * width, center + 6 * width, 2001)
    post = np.empty_like(ln_l)
    for i, ll in enumerate(ln_l):
        zeta = ll - np.log(G / 2) - 2 * ln_t
        post[i] = np.sum(np.exp(-(zeta**2) / (2 * SIGMA_T**2)) * meas) * h
    j = int(np.argmax(post))
    y0, y1, y2 = np.log(post[j - 1]), np.log(post[j]), np.log(post[j + 1])
    dl = ln_l[1] - ln_l[0]
    vertex = ln_l[j] + 0.5 * dl * (y0 - y2) / (y0 - 2 * y1 + y2)
    return float(np.exp(vertex))


def time_posterior_mode(l0: float) -> float:
    ln_l = np.linspace(np.log(l0) - 8 * SIGMA_M, np.log(l0) + 8 * SIGMA_M, 4001)
    h = ln_l[1] - ln_l[0]
    meas = np.exp(-((ln_l - np.log(l0)) ** 2) / (2 * SIGMA_M**2))
    center = 0.5 * (np.log(l0) - np.log(G / 2))
    width = np.sqrt(SIGMA_T**2 + SIGMA_M**2) / 2
    ln_t = np.linspace(center - 6 * width, center + 6 * width, 2001)
    post = np.empty_like(ln_t)
    for i, lt in enumerate(ln_t):
        zeta = ln_l - np.log(G / 2) - 2 * lt
        post[i] = np.sum(np.exp(-(zeta**2) / (2 * SIGMA_T**2)) * meas) * h
    j = int(np.argmax(post))
    y0, y1, y2 = np.log(post[j - 1]), np.log(post[j]), np.log(post[j + 1])
    dt = ln_t[1] - ln_t[0]
    vertex = ln_t[j] + 0.5 * dt * (y0 - y2) / (y0 - 2 * y1 + y2)
    return float(np.exp(vertex))


def main() -> None:
    l_mode = length_posterior_mode(1.0)
    print(f"length_mode_given_T1    = {l_mode!r}")
    print(f"predicted (g/2)         = {G / 2!r}")
    print(f"relative_error          = {abs(l_mode - G / 2) / (G / 2):.3e}")
    t_mode = time_posterior_mode(G / 2)
    print(f"time_mode_given_L4.905  = {t_mode!r}")
    print(f"predicted sqrt(2L/g)    = 1.0")
    print(f"relative_error          = {abs(t_mode - 1.0):.3e}")


if __name__ == "__main__":
    main()
