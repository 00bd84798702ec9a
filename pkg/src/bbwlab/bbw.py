"""Borel–Bott–Weil cohomology of equivariant bundles.

The weight reported in each degree is the highest weight ``mu`` with
``H^l = V_mu^*``: tables carry "dual-of" semantics, and consumers that need
the representation itself apply :func:`repchar.dual_weight` once.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .repchar import weyl_dim_doubled
from .rootsys import RootSystem, Weight, dotted_action_doubled


class BottViolation(AssertionError):
    """An irreducible bundle produced cohomology in more than one degree."""


@dataclass(frozen=True)
class CohomologyTable:
    """Graded cohomology: ``entries`` are sorted ``(degree, doubled weight, multiplicity)``."""

    system: RootSystem
    entries: tuple[tuple[int, tuple[int, ...], int], ...] = ()
    reports_dual: bool = True

    @classmethod
    def from_terms(cls, system: RootSystem, terms: Iterable[tuple[int, tuple[int, ...], int]]):
        acc: dict = defaultdict(int)
        for deg, w, c in terms:
            acc[(deg, w)] += c
        entries = tuple(sorted((d, w, c) for (d, w), c in acc.items() if c))
        return cls(system, entries)

    def __add__(self, other: "CohomologyTable") -> "CohomologyTable":
        if other.system != self.system:
            raise ValueError("cannot add tables over different groups")
        return CohomologyTable.from_terms(self.system, self.entries + other.entries)

    def scaled(self, c: int) -> "CohomologyTable":
        return CohomologyTable.from_terms(self.system, ((d, w, c * m) for d, w, m in self.entries))

    @property
    def degrees(self) -> dict[int, dict[Weight, int]]:
        out: dict[int, dict[Weight, int]] = {}
        for d, w, m in self.entries:
            out.setdefault(d, {})[Weight(w, self.system)] = m
        return out

    @property
    def dims(self) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for d, w, m in self.entries:
            out[d] += m * weyl_dim_doubled(self.system, w)
        return {d: v for d, v in sorted(out.items()) if v}

    def dim(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** d * v for d, v in self.dims.items())

    def is_zero(self) -> bool:
        return not self.entries

    def nonzero_degrees(self) -> list[int]:
        return sorted({d for d, _, _ in self.entries})

    def to_json(self) -> dict:
        return {
            "reports_dual": self.reports_dual,
            "entries": [
                {"degree": d, "weight": list(w), "multiplicity": m, "dim": weyl_dim_doubled(self.system, w)}
                for d, w, m in self.entries
            ],
            "dims": {str(d): v for d, v in self.dims.items()},
        }

    def __str__(self):
        if not self.entries:
            return "0"
        return "; ".join(f"deg {d}: dim {v}" for d, v in self.dims.items())


@lru_cache(maxsize=None)
def _line_cohomology(system: RootSystem, d: tuple[int, ...]) -> CohomologyTable:
    res = dotted_action_doubled(system, d)
    if res is None:
        return CohomologyTable(system)
    length, mu = res
    return CohomologyTable(system, ((length, mu, 1),))


def line_bundle_cohomology(system: RootSystem, alpha: Weight) -> CohomologyTable:
    """Cohomology of the line bundle ``L_alpha`` on the full flag variety."""
    if alpha.system != system:
        raise ValueError(f"weight of {alpha.system} passed for {system}")
    return _line_cohomology(system, alpha.doubled)


def bundle_cohomology(space, bundle) -> CohomologyTable:
    """Cohomology of a sum of irreducible equivariant bundles on ``space``.

    Each summand is pushed to the flag variety through ``space.embed``; the
    coefficients of ``bundle`` must be nonnegative.
    """
    table = CohomologyTable(space.ambient)
    for irr, c in bundle.items():
        if c < 0:
            raise ValueError("cohomology of a virtual bundle is not defined; use chi")
        t = _line_cohomology(space.ambient, space.embed(irr))
        if len(t.nonzero_degrees()) > 1:
            raise BottViolation(f"{irr} has cohomology in degrees {t.nonzero_degrees()}")
        table = table + t.scaled(c)
    return table


def euler_characteristic(space, bundle) -> int:
    """Euler characteristic, linear in the (possibly negative) coefficients."""
    total = 0
    for irr, c in bundle.items():
        total += c * _line_cohomology(space.ambient, space.embed(irr)).euler_characteristic
    return total
