"""Shared grids and densities for the test suite."""

import numpy as np
import pytest

from inferspace import Axis, Density, Grid, normalize


@pytest.fixture
def unit_axis() -> Axis:
    return Axis.linear("x", 0.0, 1.0, 101)


@pytest.fixture
def log_axis() -> Axis:
    return Axis.logarithmic("T", 0.1, 10.0, 201)


@pytest.fixture
def small_grid_2d() -> Grid:
    return Grid.of(
        Axis.logarithmic("L", 0.5, 20.0, 41),
        Axis.linear("T", 0.0, 2.0, 33),
    )


def gaussian_density(axis: Axis, center: float, width: float) -> Density:
    grid = Grid.of(axis)
    return normalize(
        Density.from_callable(
            grid, lambda x: np.exp(-((x - center) ** 2) / (2.0 * width * width))
        )
    )


def boxcar_density(axis: Axis, lower: float, upper: float) -> Density:
    grid = Grid.of(axis)
    vals = np.where((axis.nodes >= lower) & (axis.nodes <= upper), 1.0, 0.0)
    return normalize(Density(grid, vals))
