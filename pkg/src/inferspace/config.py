"""Default numerical tolerances, overridable per call or via CLI config."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Named tolerances used across the package.

    exact        : identities that must hold to float rounding (weight sums,
                   idempotence, algebra axioms)
    normalization: acceptable |mass - 1| after normalize()
    quadrature   : target accuracy of grid quadrature against closed forms
    matching     : relative slack when checking that a map carries one box
                   onto another
    """

    exact: float = 1e-12
    normalization: float = 1e-9
    quadrature: float = 1e-6
    matching: float = 1e-9

    def with_overrides(self, **kwargs: float) -> "Tolerances":
        return replace(self, **kwargs)


DEFAULT_TOLERANCES = Tolerances()
