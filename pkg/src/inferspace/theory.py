"""Building physical theories as states of information over a joint grid.

A theory over (independent, dependent) parameters is the OR-accumulation of
many single-experiment densities: run an experiment at some independent value,
record the instrument densities for what was observed, multiply them into a
joint density, normalize, and add.  Enough experiments drawn from the
noninformative prior reproduce — up to instrument blur — the analytic theory,
here the free-fall law L = ½gT² wrapped in a narrow lognormal ridge.

Theories carry their null-information density μ alongside the joint, because
every later conjunction needs the same μ the theory was built against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from ._kernels import accumulate_campaign
from .density import Density, integrate, normalize, require_same_space
from .errors import (
    EmptyInput,
    GridMismatch,
    InvalidGrid,
    OutOfDomain,
    SliceCountMismatch,
    UnnormalizedSlice,
    ZeroMass,
)
from .grids import LOGARITHMIC, Axis, Grid
from .priors import (
    JEFFREYS,
    LOGNORMAL,
    NONINFORMATIVE,
    MeasurementModel,
    PriorSpec,
    jeffreys_ppf,
    make_prior,
    measurement_profile,
    noninformative_profile,
)

SET_L = "set_L"
SET_T = "set_T"


# ---------------------------------------------------------------------------
# law and theory containers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FallingBodyLaw:
    """Free fall from rest: L = ½ g T², with a lognormal theory width.

    ``sigma_theory`` is the log-space half-width of the ridge the analytic
    theory wraps around the law; ``constant`` is the overall multiplicative
    factor, conventionally 1 (theory amplitudes carry no information here).
    Axis names locate length and time on joint grids.
    """

    g: float = 9.81
    sigma_theory: float = 1e-3
    constant: float = 1.0
    length_axis: str = "L"
    time_axis: str = "T"

    def __post_init__(self) -> None:
        if not (self.g > 0.0 and np.isfinite(self.g)):
            raise InvalidGrid(f"g must be finite and > 0, got {self.g!r}")
        if not (self.sigma_theory > 0.0 and np.isfinite(self.sigma_theory)):
            raise InvalidGrid(f"sigma_theory must be finite and > 0, got {self.sigma_theory!r}")

    def fall_time(self, length):
        return np.sqrt(2.0 * np.asarray(length, dtype=float) / self.g)

    def fall_length(self, time):
        t = np.asarray(time, dtype=float)
        return 0.5 * self.g * t * t


@dataclass(frozen=True)
class Provenance:
    kind: str  # empirical | analytic | from_conditional
    n_experiments: int | None = None
    master_seed: int | None = None

    def as_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.n_experiments is not None:
            out["n_experiments"] = self.n_experiments
        if self.master_seed is not None:
            out["master_seed"] = self.master_seed
        return out

    @staticmethod
    def from_dict(d: dict) -> "Provenance":
        return Provenance(
            kind=str(d["kind"]),
            n_experiments=None if d.get("n_experiments") is None else int(d["n_experiments"]),
            master_seed=None if d.get("master_seed") is None else int(d["master_seed"]),
        )


@dataclass(frozen=True, eq=False)
class TheoryDensity:
    """A joint density over (independent, dependent) plus its μ and origin."""

    joint: Density
    mu: Density
    provenance: Provenance

    def __post_init__(self) -> None:
        require_same_space(self.joint, self.mu)


@dataclass(frozen=True, eq=False)
class ExperimentResult:
    """One simulated experiment: its joint density and what was drawn."""

    density: Density
    mode: str
    true_values: dict[str, float]
    observed: dict[str, float]


# ---------------------------------------------------------------------------
# simulation
# ---------------------------------------------------------------------------

def _locate_fall_axes(law: FallingBodyLaw, grid: Grid) -> tuple[int, int]:
    il = grid.axis_index(law.length_axis)
    it = grid.axis_index(law.time_axis)
    return il, it


def _draw_observation(model: MeasurementModel, true: float, rng: np.random.Generator) -> float:
    """Observed value around the true one under the instrument's noise.

    Noninformative instruments (including any with infinite width) observe
    nothing and consume no randomness.
    """
    kind = model.kind if math.isfinite(model.width) else NONINFORMATIVE
    if kind == NONINFORMATIVE:
        return math.nan
    if kind == LOGNORMAL:
        return float(true * math.exp(model.width * rng.standard_normal()))
    if kind == "gaussian":
        return float(true + model.width * rng.standard_normal())
    # boxcar: uniform within the instrument window
    return float(true + rng.uniform(-model.width, model.width))


def simulate_experiment(
    law: FallingBodyLaw,
    instruments: Sequence[MeasurementModel],
    i_value: float,
    mode: str,
    seed: int | np.random.Generator,
    grid: Grid,
    frame: str = "",
) -> ExperimentResult:
    """Run one fall experiment at the given independent value.

    ``mode`` fixes which parameter the experimenter sets: ``set_L`` drops from
    a chosen length, ``set_T`` exposes for a chosen time; the law supplies the
    other true value.  Instruments are matched to axes by their ``parameter``
    name; their ``center`` templates are ignored and replaced by the drawn
    observations.  Observations are drawn in grid-axis order.
    """
    if mode not in (SET_L, SET_T):
        raise InvalidGrid(f"mode must be {SET_L!r} or {SET_T!r}, got {mode!r}")
    il, it = _locate_fall_axes(law, grid)
    i_axis = grid.axes[il] if mode == SET_L else grid.axes[it]
    if not (i_axis.lower <= i_value <= i_axis.upper):
        raise OutOfDomain(
            f"independent value {i_value!r} outside axis {i_axis.name!r} box "
            f"[{i_axis.lower}, {i_axis.upper}]"
        )
    if mode == SET_L:
        true = {law.length_axis: float(i_value), law.time_axis: float(law.fall_time(i_value))}
    else:
        true = {law.time_axis: float(i_value), law.length_axis: float(law.fall_length(i_value))}

    by_axis = {m.parameter: m for m in instruments}
    missing = set(grid.names) - set(by_axis)
    if missing:
        raise GridMismatch(f"no instrument for axis(es) {sorted(missing)}")

    rng = np.random.default_rng(seed)
    observed: dict[str, float] = {}
    factors = []
    for ax in grid.axes:
        model = by_axis[ax.name]
        obs = _draw_observation(model, true[ax.name], rng)
        observed[ax.name] = obs
        if math.isnan(obs):
            factors.append(noninformative_profile(ax))
        else:
            factors.append(measurement_profile(replace(model, center=obs), ax))
    vals = factors[0] if grid.ndim == 1 else np.multiply.outer(factors[0], factors[1])
    density = Density(grid, vals, frame=frame)
    return ExperimentResult(density=density, mode=mode, true_values=true, observed=observed)


# ---------------------------------------------------------------------------
# accumulation
# ---------------------------------------------------------------------------

def accumulate_theory(results: Iterable[ExperimentResult], mu: Density) -> TheoryDensity:
    """OR-fold experiment densities into a theory, normalizing each first.

    Normalizing per experiment weights every experiment equally regardless of
    instrument sharpness; the theory's mass then counts experiments exactly.
    Accepts any iterable and accumulates streamingly.
    """
    acc = np.zeros(mu.grid.shape)
    n = 0
    for r in results:
        require_same_space(r.density, mu)
        acc += normalize(r.density).values
        n += 1
    if n == 0:
        raise EmptyInput("no experiments to accumulate")
    joint = Density(mu.grid, acc, frame=mu.frame)
    return TheoryDensity(joint, mu, Provenance("empirical", n_experiments=n))


def run_campaign(
    law: FallingBodyLaw,
    instruments: Sequence[MeasurementModel],
    n_experiments: int,
    mode: str,
    master_seed: int,
    grid: Grid,
    mu: Density | None = None,
    frame: str = "",
) -> TheoryDensity:
    """Simulate and accumulate a whole measurement campaign.

    Experiment i runs from its own generator seeded ``master_seed ⊕ i``; the
    first draw picks the independent value from the reciprocal prior on its
    axis, subsequent draws are the instrument noises.  Experiments are
    therefore independent and the campaign is reproducible from the master
    seed alone (and could be accumulated in any order or in parallel).

    All-lognormal campaigns on log-spaced grids run through a banded
    accumulation kernel; anything else takes the general per-experiment path.
    """
    if n_experiments <= 0:
        raise EmptyInput(f"need at least one experiment, got {n_experiments}")
    if mode not in (SET_L, SET_T):
        raise InvalidGrid(f"mode must be {SET_L!r} or {SET_T!r}, got {mode!r}")
    if mu is None:
        mu = make_prior(PriorSpec(JEFFREYS), grid, frame=frame)
    elif mu.grid.axes != grid.axes:
        raise GridMismatch("mu must live on the campaign grid")

    il, it = _locate_fall_axes(law, grid)
    i_idx = il if mode == SET_L else it
    i_axis = grid.axes[i_idx]
    by_axis = {m.parameter: m for m in instruments}
    missing = set(grid.names) - set(by_axis)
    if missing:
        raise GridMismatch(f"no instrument for axis(es) {sorted(missing)}")

    fast = grid.ndim == 2 and all(
        by_axis[ax.name].kind == LOGNORMAL
        and math.isfinite(by_axis[ax.name].width)
        and ax.spacing == LOGARITHMIC
        for ax in grid.axes
    )
    if fast:
        joint = _run_campaign_lognormal(law, by_axis, n_experiments, mode, master_seed, grid, i_axis, mu.frame)
    else:
        results = (
            simulate_experiment(
                law,
                instruments,
                _draw_i_value(i_axis, master_seed ^ i),
                mode,
                _experiment_rng(master_seed, i, skip_i_draw=True),
                grid,
                frame=mu.frame,
            )
            for i in range(n_experiments)
        )
        return TheoryDensity(
            accumulate_theory(results, mu).joint,
            mu,
            Provenance("empirical", n_experiments=n_experiments, master_seed=master_seed),
        )
    return TheoryDensity(
        joint, mu, Provenance("empirical", n_experiments=n_experiments, master_seed=master_seed)
    )


def _experiment_rng(master_seed: int, i: int, skip_i_draw: bool) -> np.random.Generator:
    rng = np.random.default_rng(master_seed ^ i)
    if skip_i_draw:
        rng.uniform()  # the independent-value draw, already consumed
    return rng


def _draw_i_value(i_axis: Axis, seed: int) -> float:
    rng = np.random.default_rng(seed)
    u = rng.uniform()
    if i_axis.spacing == LOGARITHMIC:
        return float(jeffreys_ppf(u, i_axis.lower, i_axis.upper))
    return float(i_axis.lower + (i_axis.upper - i_axis.lower) * u)


def _run_campaign_lognormal(law, by_axis, n, mode, master_seed, grid, i_axis, frame) -> Density:
    ax0, ax1 = grid.axes
    s0 = by_axis[ax0.name].width
    s1 = by_axis[ax1.name].width
    c0 = np.empty(n)
    c1 = np.empty(n)
    length_first = ax0.name == law.length_axis
    for i in range(n):
        rng = np.random.default_rng(master_seed ^ i)
        u = rng.uniform()
        iv = jeffreys_ppf(u, i_axis.lower, i_axis.upper)
        if mode == SET_L:
            ltrue, ttrue = iv, float(law.fall_time(iv))
        else:
            ttrue, ltrue = iv, float(law.fall_length(iv))
        t0 = ltrue if length_first else ttrue
        t1 = ttrue if length_first else ltrue
        c0[i] = math.log(t0 * math.exp(s0 * rng.standard_normal()))
        c1[i] = math.log(t1 * math.exp(s1 * rng.standard_normal()))
    acc = np.zeros(grid.shape)
    bad = accumulate_campaign(
        acc,
        ax0.param_nodes,
        ax0.weights,
        ax1.param_nodes,
        ax1.weights,
        c0,
        c1,
        s0,
        s1,
    )
    if bad:
        raise ZeroMass(f"{bad} experiment(s) produced no support on the grid")
    return Density(grid, acc, frame=frame)


# ---------------------------------------------------------------------------
# analytic theory
# ---------------------------------------------------------------------------

def analytic_fall_theory(
    law: FallingBodyLaw,
    grid: Grid,
    frame: str = "linear",
    log_refs: tuple[float, float] = (1.0, 1.0),
    label: str = "",
) -> TheoryDensity:
    """The lognormal ridge around L = ½gT², with μ = 1/(LT).

    ``frame="linear"`` expects axes named by the law (any spacing); the
    marginals are then proportional to 1/L and 1/T.  ``frame="log"`` expects
    linear axes carrying λ = ln(L/L₀), τ = ln(T/T₀) in (length, time) order
    with ``log_refs = (L₀, T₀)``; there the ridge is a plain Gaussian band
    and μ is constant.
    """
    sigma = law.sigma_theory
    k = law.constant
    if frame == "linear":
        il, it = _locate_fall_axes(law, grid)
        mesh = grid.meshes()
        lv, tv = mesh[il], mesh[it]
        zeta = np.log(lv / (0.5 * law.g * tv * tv))
        vals = (k / (lv * tv)) * np.exp(-0.5 * (zeta / sigma) ** 2)
        vals = np.broadcast_to(vals, grid.shape)
        mu = make_prior(PriorSpec(JEFFREYS), grid, frame=label)
        joint = Density(grid, vals.copy(), frame=label)
    elif frame == "log":
        if grid.ndim != 2:
            raise InvalidGrid("the log-frame theory lives on a 2D grid")
        l0, t0 = log_refs
        lam, tau = grid.meshes()
        zeta = (lam + math.log(l0)) - math.log(0.5 * law.g) - 2.0 * (tau + math.log(t0))
        vals = k * np.exp(-0.5 * (zeta / sigma) ** 2)
        joint = Density(grid, np.broadcast_to(vals, grid.shape).copy(), frame=label)
        mu = Density(grid, np.ones(grid.shape), frame=label)
    else:
        raise InvalidGrid(f"frame must be 'linear' or 'log', got {frame!r}")
    return TheoryDensity(joint, mu, Provenance("analytic"))


# ---------------------------------------------------------------------------
# theories from conditionals
# ---------------------------------------------------------------------------

def theory_from_conditional(
    cond: Sequence[Density],
    mu_i: Density,
    mu_d: Density | None = None,
    norm_tol: float = 1e-9,
) -> TheoryDensity:
    """Assemble θ(i, d) = θ(d | i) · μ(i) from per-node conditional slices.

    ``cond`` holds one normalized 1D density over the dependent axis per node
    of ``mu_i``'s axis.  The joint's μ is μ(i) ⊗ μ(d); by default μ(d) is the
    noninformative prior implied by the dependent axis's spacing.
    """
    if mu_i.grid.ndim != 1:
        raise InvalidGrid("mu_i must live on the 1D independent axis")
    i_axis = mu_i.grid.axes[0]
    if len(cond) != i_axis.count:
        raise SliceCountMismatch(
            f"{len(cond)} slices for {i_axis.count} independent-axis nodes"
        )
    first = cond[0]
    if first.grid.ndim != 1:
        raise InvalidGrid("conditional slices must live on the 1D dependent axis")
    d_axis = first.grid.axes[0]
    joint_vals = np.empty((i_axis.count, d_axis.count))
    for idx, sl in enumerate(cond):
        require_same_space(sl, first)
        m = integrate(sl)
        if abs(m - 1.0) > norm_tol:
            raise UnnormalizedSlice(f"slice {idx} has mass {m!r}, expected 1 ± {norm_tol}")
        joint_vals[idx, :] = mu_i.values[idx] * sl.values
    grid = Grid.of(i_axis, d_axis)
    frame = f"{i_axis.name},{d_axis.name}"
    joint = Density(grid, joint_vals, frame=frame)
    mu_d_vals = noninformative_profile(d_axis) if mu_d is None else mu_d.values
    if mu_d is not None and mu_d.grid.axes != (d_axis,):
        raise GridMismatch("mu_d must live on the dependent axis")
    mu = Density(grid, np.multiply.outer(mu_i.values, mu_d_vals), frame=frame)
    return TheoryDensity(joint, mu, Provenance("from_conditional"))
