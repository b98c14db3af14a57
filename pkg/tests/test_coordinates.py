"""Coordinate maps, Jacobians, push-forwards, and invariance checks."""

import numpy as np
import pytest

from inferspace import (
    Axis,
    Density,
    DomainMismatch,
    Grid,
    SingularJacobian,
    affine_map,
    compose,
    custom_map,
    evaluate,
    exp_map,
    integrate,
    log_map,
    normalize,
    null_information_density,
    power_map,
    push_forward,
    reciprocal_map,
    verify_invariance,
)

from conftest import gaussian_density


def test_jacobian_chain_rule():
    rng = np.random.default_rng(31)
    x = rng.uniform(0.5, 4.0, 64)
    inner = reciprocal_map()
    outer = log_map()
    both = compose(inner, outer)
    expected = outer.jacobian(inner.forward(x)) * inner.jacobian(x)
    np.testing.assert_allclose(both.jacobian(x), expected, rtol=1e-10)
    np.testing.assert_allclose(both.forward(x), np.log(1.0 / x), rtol=1e-13)


def test_log_then_exp_restores_identity():
    m = compose(log_map(), exp_map())
    x = np.linspace(0.3, 9.0, 40)
    np.testing.assert_allclose(m.forward(x), x, rtol=1e-12)
    np.testing.assert_allclose(m.jacobian(x), np.ones_like(x), rtol=1e-12)


def test_reciprocal_twice_is_identity():
    m = reciprocal_map()
    x = np.geomspace(0.1, 10.0, 50)
    np.testing.assert_allclose(m.forward(m.forward(x)), x, rtol=1e-12)


def test_affine_composition_collapses():
    m = compose(affine_map(2.0, 1.0), affine_map(3.0, -2.0))
    x = np.linspace(-5.0, 5.0, 11)
    np.testing.assert_allclose(m.forward(x), 3.0 * (2.0 * x + 1.0) - 2.0, rtol=1e-14)


def test_custom_map_rejects_zero_derivative():
    m = custom_map(
        forward=lambda x: x**3,
        inverse=lambda y: np.cbrt(y),
        dforward=lambda x: 3.0 * x * x,
    )
    with pytest.raises(SingularJacobian):
        m.jacobian(np.array([0.0]))


def test_reciprocal_pushforward_of_jeffreys():
    """1/T on a log axis maps to 1/nu on the reciprocal log axis.

    The noninformative form is preserved by the reciprocal change of
    variables; interior nodes must agree to 1e-6 relative.
    """
    ax = Axis.logarithmic("T", 0.1, 10.0, 301)
    grid = Grid.of(ax)
    p = normalize(Density(grid, 1.0 / ax.nodes))
    m = reciprocal_map()
    img = m.image_axis(ax, name="nu")
    pushed = push_forward(p, m, Grid.of(img))
    expected = 1.0 / img.nodes
    expected *= integrate(pushed) / np.dot(expected, img.weights)
    rel = np.abs(pushed.values - expected) / expected
    assert rel[2:-2].max() < 1e-6


def test_log_pushforward_flattens_jeffreys():
    ax = Axis.logarithmic("T", 0.1, 10.0, 301)
    p = normalize(Density(Grid.of(ax), 1.0 / ax.nodes))
    m = log_map()
    img = m.image_axis(ax, name="lnT")
    pushed = push_forward(p, m, Grid.of(img))
    interior = pushed.values[2:-2]
    assert np.max(np.abs(interior - interior.mean())) / interior.mean() < 1e-6


def test_affine_push_is_node_exact():
    rng = np.random.default_rng(8)
    ax = Axis.linear("x", -1.0, 3.0, 101)
    vals = rng.uniform(0.1, 2.0, 101)
    p = Density(Grid.of(ax), vals)
    m = affine_map(2.5, -0.5)
    img = m.image_axis(ax, name="y")
    pushed = push_forward(p, m, Grid.of(img))
    np.testing.assert_allclose(pushed.values, vals / 2.5, rtol=1e-12)


def test_push_conserves_mass():
    ax = Axis.logarithmic("T", 0.1, 10.0, 401)
    p = gaussian_density(Axis.linear("z", -4.0, 4.0, 401), 0.0, 0.7)
    q = normalize(
        Density.from_callable(
            Grid.of(ax), lambda t: np.exp(-((np.log(t)) ** 2) / (2 * 0.5**2)) / t
        )
    )
    for d, m in ((p, affine_map(3.0, 1.0)), (q, reciprocal_map()), (q, log_map())):
        src_ax = d.grid.axes[0]
        target = Grid.of(m.image_axis(src_ax, name="w"))
        pushed = push_forward(d, m, target)
        assert integrate(pushed) == pytest.approx(integrate(d), abs=1e-6)


def test_power_map_on_log_axis():
    ax = Axis.logarithmic("T", 0.5, 2.0, 101)
    p = normalize(Density(Grid.of(ax), 1.0 / ax.nodes))
    m = power_map(2.0)
    img = m.image_axis(ax, name="T2")
    assert img.lower == pytest.approx(0.25) and img.upper == pytest.approx(4.0)
    pushed = push_forward(p, m, Grid.of(img))
    assert integrate(pushed) == pytest.approx(1.0, abs=1e-9)


def test_image_axis_rejects_shifted_log():
    ax = Axis.logarithmic("T", 0.1, 10.0, 51)
    with pytest.raises(DomainMismatch):
        affine_map(2.0, 1.0).image_axis(ax)


def test_outside_zero_policy():
    ax = Axis.linear("x", 0.0, 1.0, 51)
    p = gaussian_density(ax, 0.5, 0.1)
    wide = Grid.of(Axis.linear("y", -1.0, 2.0, 151))
    pushed = push_forward(p, affine_map(1.0, 0.0), wide, outside="zero")
    assert evaluate(pushed, np.array(-0.5)) == 0.0
    assert integrate(pushed) == pytest.approx(1.0, abs=1e-3)


def test_invariance_affine_tight():
    ax = Axis.linear("x", -2.0, 2.0, 201)
    p = gaussian_density(ax, -0.3, 0.4)
    q = gaussian_density(ax, 0.5, 0.6)
    mu = null_information_density(p.grid)
    rep = verify_invariance(p, q, mu, affine_map(1.8, 0.7))
    assert rep.within(1e-10), (rep.or_discrepancy, rep.and_discrepancy)


@pytest.mark.parametrize("factory", [reciprocal_map, log_map])
def test_invariance_nonlinear_within_interpolation_error(factory):
    ax = Axis.logarithmic("T", 0.2, 5.0, 401)
    grid = Grid.of(ax)
    p = normalize(
        Density.from_callable(grid, lambda t: np.exp(-((np.log(t) - 0.2) ** 2) / 0.18) / t)
    )
    q = normalize(
        Density.from_callable(grid, lambda t: np.exp(-((np.log(t) + 0.4) ** 2) / 0.5) / t)
    )
    mu = null_information_density(grid)
    rep = verify_invariance(p, q, mu, factory())
    assert rep.within(1e-4), (rep.or_discrepancy, rep.and_discrepancy)
    # Interpolation error is genuine here, not rounding.
    assert rep.or_discrepancy > 0.0 or rep.and_discrepancy > 0.0
