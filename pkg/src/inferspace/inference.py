"""Inference as conjunction: posteriors, predictions, and conditioning.

Inference here is one operation: AND the theory with whatever is known, then
read off the axis of interest.  Conditioning on an exact value is the
degenerate limit of ANDing with an ever-thinner band, and keeping that limit
honest across coordinate changes is what the curved-slice demonstration at the
bottom of this module is about.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import and_combine, total_variation
from .coordinates import Map2D, push_forward
from .density import (
    Density,
    evaluate,
    integrate,
    marginalize,
    normalize,
    require_same_space,
)
from .errors import (
    DomainMismatch,
    EnvelopeFailure,
    InvalidGrid,
    OutOfDomain,
    ZeroSlice,
)
from .grids import LOGARITHMIC, Axis, Grid
from .priors import BOXCAR, MeasurementModel, measurement_density
from .theory import TheoryDensity


# ---------------------------------------------------------------------------
# posteriors
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Posterior:
    """A normalized state of knowledge; normalizes its density on creation."""

    density: Density

    def __post_init__(self) -> None:
        if not self.density.normalized:
            object.__setattr__(self, "density", normalize(self.density))

    def marginal(self, name: str) -> Density:
        return marginalize(self.density, name)

    def summarize(self, name: str | None = None, levels=(0.68, 0.95)) -> "Summary":
        d = self.density
        if d.grid.ndim > 1:
            if name is None:
                raise InvalidGrid("a joint posterior needs an axis name to summarize")
            d = self.marginal(name)
        return summarize(d, levels=levels)


def intersect(theory: TheoryDensity, rho: Density) -> Posterior:
    """Conjoin a theory with a measurement state and normalize.

    Raises ZeroMass when theory and measurement have disjoint support: the
    measurement contradicts the theory outright.
    """
    return Posterior(and_combine(theory.joint, rho, theory.mu))


def predict(
    theory: TheoryDensity,
    known: MeasurementModel | Density,
    query: str,
) -> Posterior:
    """What the theory says about ``query`` given one known measurement.

    ``known`` may be a measurement model (turned into a density spanning the
    theory's grid) or a ready-made measurement density.
    """
    if isinstance(known, MeasurementModel):
        rho = measurement_density(known, theory.joint.grid, frame=theory.joint.frame)
    else:
        rho = known
    post = intersect(theory, rho)
    if post.density.grid.ndim == 1:
        return post
    return Posterior(post.marginal(query))


def conditional_density(joint: Density, fixed_axis: str, fixed_value: float) -> Density:
    """The normalized slice of a joint density at an exact coordinate value.

    This is naive conditioning: interpolate along the fixed axis, renormalize
    what remains.  It is frame-dependent by construction, which is exactly
    what the curved-slice demonstration exploits.
    """
    if joint.grid.ndim != 2:
        raise InvalidGrid("conditioning needs a 2D joint density")
    idx = joint.grid.axis_index(fixed_axis)
    fax = joint.grid.axes[idx]
    if not (fax.lower <= fixed_value <= fax.upper):
        raise OutOfDomain(
            f"{fixed_axis}={fixed_value!r} outside [{fax.lower}, {fax.upper}]"
        )
    free_ax = joint.grid.axes[1 - idx]
    fixed_col = np.full(free_ax.count, float(fixed_value))
    if idx == 0:
        pts = np.column_stack([fixed_col, free_ax.nodes])
    else:
        pts = np.column_stack([free_ax.nodes, fixed_col])
    vals = evaluate(joint, pts)
    mass = float(np.dot(vals, free_ax.weights))
    if mass <= 0.0:
        raise ZeroSlice(f"joint density vanishes along {fixed_axis}={fixed_value!r}")
    return Density(Grid.of(free_ax), vals / mass, frame=free_ax.name, normalized=True)


# ---------------------------------------------------------------------------
# summaries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Summary:
    """Point and interval summaries of a 1D density.

    ``mode`` maximizes the density in the working coordinate; ``mode_log``
    maximizes the log-frame density x·p(x) and is reported for logarithmic
    axes only (NaN otherwise).  The two modes differ for skewed densities,
    which is why both are reported.
    """

    axis: str
    mean: float
    sd: float
    median: float
    mode: float
    mode_log: float
    intervals: dict[float, tuple[float, float]]

    def as_dict(self) -> dict:
        return {
            "axis": self.axis,
            "mean": self.mean,
            "sd": self.sd,
            "median": self.median,
            "mode": self.mode,
            "mode_log": None if math.isnan(self.mode_log) else self.mode_log,
            "intervals": {str(k): list(v) for k, v in self.intervals.items()},
        }


def _quantiles(ax: Axis, vals: np.ndarray, qs) -> np.ndarray:
    """Invert the piecewise-linear CDF of cell-constant density values."""
    masses = vals * ax.weights
    cum = np.concatenate([[0.0], np.cumsum(masses)])
    cum /= cum[-1]
    b = ax.cell_boundaries
    out = np.empty(len(qs))
    for i, q in enumerate(qs):
        k = int(np.searchsorted(cum, q, side="left"))
        k = min(max(k, 1), len(cum) - 1)
        c0, c1 = cum[k - 1], cum[k]
        t = 0.0 if c1 <= c0 else (q - c0) / (c1 - c0)
        out[i] = b[k - 1] + t * (b[k] - b[k - 1])
    return out


def _refined_argmax(ax: Axis, vals: np.ndarray) -> float:
    """Argmax with parabolic refinement in the axis's spacing coordinate."""
    j = int(np.argmax(vals))
    u = ax.param_nodes
    if 0 < j < len(vals) - 1:
        y0, y1, y2 = float(vals[j - 1]), float(vals[j]), float(vals[j + 1])
        denom = y0 - 2.0 * y1 + y2
        if denom < 0.0:
            shift = 0.5 * (y0 - y2) / denom
            shift = min(max(shift, -0.5), 0.5)
            h = u[1] - u[0]
            ustar = u[j] + shift * h
            return float(np.exp(ustar)) if ax.spacing == LOGARITHMIC else float(ustar)
    return float(ax.nodes[j])


def summarize(d: Density, levels=(0.68, 0.95)) -> Summary:
    """Mean, spread, median, modes, and central intervals of a 1D density."""
    if d.grid.ndim != 1:
        raise InvalidGrid("summaries are for 1D densities; marginalize first")
    dn = d if d.normalized else normalize(d)
    ax = dn.grid.axes[0]
    x = ax.nodes
    w = ax.weights
    pv = dn.values
    mean = float(np.sum(x * pv * w))
    var = float(np.sum((x - mean) ** 2 * pv * w))
    sd = math.sqrt(max(var, 0.0))
    qs = [0.5]
    for lv in levels:
        qs += [0.5 * (1.0 - lv), 0.5 * (1.0 + lv)]
    quts = _quantiles(ax, pv, qs)
    median = float(quts[0])
    intervals = {}
    for i, lv in enumerate(levels):
        intervals[float(lv)] = (float(quts[1 + 2 * i]), float(quts[2 + 2 * i]))
    mode = _refined_argmax(ax, pv)
    if ax.spacing == LOGARITHMIC:
        mode_log = _refined_argmax(ax, pv * x)
    else:
        mode_log = math.nan
    return Summary(
        axis=ax.name,
        mean=mean,
        sd=sd,
        median=median,
        mode=mode,
        mode_log=mode_log,
        intervals=intervals,
    )


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

def sample_posterior(
    d: Density,
    n: int,
    seed: int,
    chunk: int = 65536,
    min_acceptance: float = 1e-6,
) -> np.ndarray:
    """Draw exact samples by rejection against the node-max envelope.

    Interpolated values never exceed the largest node value, so proposing
    uniformly over the box and accepting with probability p/max is exact.
    Raises EnvelopeFailure when the acceptance rate is too low to be useful
    (density far too peaked for its box).
    """
    if n <= 0:
        raise InvalidGrid(f"need a positive sample count, got {n}")
    dn = d if d.normalized else normalize(d)
    top = dn.max_value()
    rng = np.random.default_rng(seed)
    axes = dn.grid.axes
    ndim = dn.grid.ndim
    out: list[np.ndarray] = []
    got = 0
    proposed = 0
    budget = max(10 * chunk, int(math.ceil(n / min_acceptance)))
    while got < n:
        if proposed >= budget:
            raise EnvelopeFailure(
                f"acceptance rate below {min_acceptance}: {got} of {n} samples "
                f"after {proposed} proposals"
            )
        cols = [rng.uniform(ax.lower, ax.upper, chunk) for ax in axes]
        pts = cols[0] if ndim == 1 else np.column_stack(cols)
        pv = evaluate(dn, pts)
        accept = rng.uniform(0.0, top, chunk) < pv
        out.append(pts[accept])
        got += int(accept.sum())
        proposed += chunk
    stacked = np.concatenate(out, axis=0)
    return stacked[:n]


# ---------------------------------------------------------------------------
# conditioning across coordinate changes
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ParadoxReport:
    """Outcome of the curved-slice conditioning demonstration.

    ``tv_naive`` measures how far naive slice conditioning in the mapped
    frame drifts from the same conditioning in the original frame —
    this is the coordinate-dependence of conditioning on a measure-zero
    event.  ``tv_band`` measures the agreement of band conditioning (AND
    with a thin boxcar) computed independently in both frames, which is the
    coordinate-free replacement.
    """

    map_kind: str
    slice_axis: str
    slice_value: float
    band_width: float
    tv_naive: float
    tv_band: float
    native_conditional: Density
    mapped_conditional: Density
    band_native: Density
    band_mapped: Density

    def as_dict(self) -> dict:
        return {
            "map_kind": self.map_kind,
            "slice_axis": self.slice_axis,
            "slice_value": self.slice_value,
            "band_width": self.band_width,
            "tv_naive": self.tv_naive,
            "tv_band": self.tv_band,
        }


def _mapped_grid(joint: Density, m: Map2D, v_name: str, v_count: int | None) -> Grid:
    ax0, ax1 = joint.grid.axes
    if v_count is None and m.separable is not None:
        # A separable map whose second factor has a representable image axis
        # gets the exact node-for-node image: pushes are then interpolation
        # free and the band comparison measures pure frame equivariance.
        try:
            return Grid.of(ax0, m.separable[1].image_axis(ax1, name=v_name))
        except DomainMismatch:
            pass
    vs = []
    for cx in (ax0.lower, ax0.upper):
        for cy in (ax1.lower, ax1.upper):
            _, v = m.forward(np.array([cx]), np.array([cy]))
            vs.append(float(v[0]))
    vlo, vhi = min(vs), max(vs)
    if not vhi > vlo:
        raise InvalidGrid(f"map collapses the second coordinate: range [{vlo}, {vhi}]")
    count = v_count if v_count is not None else 4 * (ax0.count + ax1.count)
    if ax0.spacing == LOGARITHMIC and ax1.spacing == LOGARITHMIC and vlo > 0.0:
        v_axis = Axis.logarithmic(v_name, vlo, vhi, count)
    else:
        v_axis = Axis.linear(v_name, vlo, vhi, count)
    return Grid.of(ax0, v_axis)


def borel_kolmogorov_demo(
    joint: Density,
    mu: Density,
    map2d: Map2D,
    slice_value: float,
    width_cells: float = 2.0,
    target_grid: Grid | None = None,
    v_name: str = "v",
    v_count: int | None = None,
) -> ParadoxReport:
    """Condition on the second axis two ways, in two coordinate frames.

    The event is {y = slice_value}.  Naive conditioning slices the density
    along the event and renormalizes; done in the original frame and again in
    the mapped frame (where the event is a curve, sampled along the first
    coordinate), the two disagree whenever the map's Jacobian varies along the
    event — same event, same density, different answers.  Band conditioning
    replaces the exact event by AND with a thin boxcar of finite width; pushed
    through the same map, its marginal agrees between frames up to
    interpolation error, because a conjunction of states is frame-covariant
    while a zero-width slice is not.

    The map must keep the first coordinate fixed (u = x), so the two frames
    share an axis along which the conditionals can be compared.
    """
    require_same_space(joint, mu)
    if joint.grid.ndim != 2:
        raise InvalidGrid("the demonstration needs a 2D joint density")
    ax0, ax1 = joint.grid.axes
    if not (ax1.lower <= slice_value <= ax1.upper):
        raise OutOfDomain(
            f"slice value {slice_value!r} outside axis {ax1.name!r} box"
        )

    # The map must act as (x, y) -> (x, v(x, y)).
    probe_y = np.full(3, float(slice_value))
    probe_x = np.array([ax0.lower, ax0.nodes[ax0.count // 2], ax0.upper])
    u_probe, _ = map2d.forward(probe_x, probe_y)
    scale = max(abs(ax0.lower), abs(ax0.upper))
    if np.max(np.abs(u_probe - probe_x)) > 1e-9 * scale:
        raise InvalidGrid("the demonstration needs a map that fixes the first coordinate")

    tg = target_grid if target_grid is not None else _mapped_grid(joint, map2d, v_name, v_count)
    if tg.axes[0] != ax0:
        raise InvalidGrid("the mapped grid must reuse the joint's first axis")
    lab = f"mapped:{map2d.kind}"
    pushed = push_forward(joint, map2d, tg, frame=lab, outside="zero")
    mu_pushed = push_forward(mu, map2d, tg, frame=lab, outside="zero")

    # Naive conditioning, original frame: slice at y = y0.
    native = conditional_density(joint, ax1.name, slice_value)

    # Naive conditioning, mapped frame: sample the pushed density along the
    # image curve v = v(x, y0) and renormalize over the shared axis.
    x_nodes = ax0.nodes
    _, v_curve = map2d.forward(x_nodes, np.full(ax0.count, float(slice_value)))
    curve_vals = evaluate(pushed, np.column_stack([x_nodes, v_curve]))
    curve_mass = float(np.dot(curve_vals, ax0.weights))
    if curve_mass <= 0.0:
        raise ZeroSlice("pushed density vanishes along the image curve")
    mapped_cond = Density(
        Grid.of(ax0), curve_vals / curve_mass, frame=ax0.name, normalized=True
    )
    tv_naive = total_variation(native, mapped_cond)

    # Band conditioning: AND with a thin boxcar around y0, in both frames.
    j = int(np.argmin(np.abs(ax1.nodes - slice_value)))
    bnd = ax1.cell_boundaries
    width = width_cells * (bnd[j + 1] - bnd[j])
    band_model = MeasurementModel(
        parameter=ax1.name, kind=BOXCAR, center=float(slice_value), width=width
    )
    band_rho = measurement_density(band_model, joint.grid, frame=joint.frame)
    sigma = and_combine(joint, band_rho, mu)
    band_native = normalize(marginalize(sigma, ax0.name))

    band_rho_pushed = push_forward(band_rho, map2d, tg, frame=lab, outside="zero")
    sigma_pushed = and_combine(pushed, band_rho_pushed, mu_pushed)
    band_mapped = normalize(marginalize(sigma_pushed, ax0.name))
    tv_band = total_variation(band_native, band_mapped)

    return ParadoxReport(
        map_kind=map2d.kind,
        slice_axis=ax1.name,
        slice_value=float(slice_value),
        band_width=float(width),
        tv_naive=tv_naive,
        tv_band=tv_band,
        native_conditional=native,
        mapped_conditional=mapped_cond,
        band_native=band_native,
        band_mapped=band_mapped,
    )
