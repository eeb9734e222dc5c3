"""Propagating degrees of freedom of the graviton, and spin multiplicities."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Spin:
    """A spin stored as the integer 2j, so half-integers stay exact."""

    twice_j: int

    def __post_init__(self):
        if not (isinstance(self.twice_j, int) and self.twice_j >= 0):
            raise ValueError("twice_j must be a nonnegative integer")

    @property
    def j(self) -> float:
        return self.twice_j / 2.0

    @classmethod
    def from_j(cls, j: float) -> "Spin":
        twice = round(2.0 * j)
        if abs(2.0 * j - twice) > 1e-12 or twice < 0:
            raise ValueError("j must be a nonnegative integer or half-integer")
        return cls(int(twice))


def _check_dim(dim: int) -> int:
    if not (isinstance(dim, int) and dim >= 3):
        raise ValueError("spacetime dimension must be an integer >= 3")
    return dim


def massless_graviton_dof(dim: int) -> int:
    """D(D-3)/2 transverse traceless polarizations; 2 in four dimensions."""
    d = _check_dim(dim)
    return d * (d - 3) // 2


def massive_graviton_dof(dim: int) -> int:
    """D(D-1)/2 - 1 components of a massive spin-2 field; 5 in four dimensions."""
    d = _check_dim(dim)
    return d * (d - 1) // 2 - 1


def spin_multiplicity(spin: Spin) -> int:
    """2j + 1 magnetic sublevels."""
    return spin.twice_j + 1
