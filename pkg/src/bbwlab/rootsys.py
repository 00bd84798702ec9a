"""Root data for GL_n (type A), B_m and C_m in epsilon coordinates.

Weights are stored *doubled* (``2*lambda``) so that the half-integral spin
weights of type B are exact integers.  Roots themselves are integral and are
kept as plain integer tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, NamedTuple, Sequence

KINDS = ("A", "B", "C")


@dataclass(frozen=True)
class RootSystem:
    """A root system of kind ``A`` (the GL_n model), ``B`` or ``C``.

    For kind ``A`` the rank is ``n`` and weights live in ``Z^n``.  Rank 0 is
    accepted for B/C so that the trivial semisimple part of a Levi factor
    (e.g. B_0 for OGr(2,5)) needs no special casing.
    """

    kind: str
    rank: int

    def __post_init__(self):
        if self.kind == "D":
            raise NotImplementedError("type D root systems are not supported")
        if self.kind not in KINDS:
            raise ValueError(f"unknown root system kind {self.kind!r}")
        if not isinstance(self.rank, int) or self.rank < 0:
            raise ValueError(f"rank must be a nonnegative integer, got {self.rank!r}")
        if self.kind == "A" and self.rank == 0:
            raise ValueError("GL_0 is not a root system")

    def __str__(self):
        return f"{self.kind}{self.rank}"

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                v = [0] * n
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
                if self.kind != "A":
                    v = [0] * n
                    v[i], v[j] = 1, 1
                    roots.append(tuple(v))
        if self.kind in ("B", "C"):
            c = 1 if self.kind == "B" else 2
            for i in range(n):
                v = [0] * n
                v[i] = c
                roots.append(tuple(v))
        return tuple(roots)

    @cached_property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        out = []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            out.append(tuple(v))
        if self.kind in ("B", "C") and n:
            v = [0] * n
            v[-1] = 1 if self.kind == "B" else 2
            out.append(tuple(v))
        return tuple(out)

    @cached_property
    def rho_doubled(self) -> tuple[int, ...]:
        """Doubled rho.  Type A uses the convention (n, n-1, ..., 1)."""
        n = self.rank
        if self.kind == "A":
            return tuple(2 * (n - i) for i in range(n))
        if self.kind == "B":
            return tuple(2 * (n - i) - 1 for i in range(n))
        return tuple(2 * (n - i) for i in range(n))

    @cached_property
    def rho_half_doubled(self) -> tuple[int, ...]:
        """Doubled genuine half-sum of positive roots."""
        if self.kind == "A":
            n = self.rank
            return tuple(n - 1 - 2 * i for i in range(n))
        return self.rho_doubled

    @property
    def weyl_order(self) -> int:
        if self.kind == "A":
            return factorial(self.rank)
        return 2**self.rank * factorial(self.rank)

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def check_doubled(self, doubled: Sequence[int]) -> tuple[int, ...]:
        """Validate a doubled coordinate vector as a weight of this system."""
        d = tuple(int(x) for x in doubled)
        if len(d) != self.rank:
            raise ValueError(f"weight of length {len(d)} does not match {self}")
        if self.kind == "A":
            if any(x % 2 for x in d):
                raise ValueError("type A weights must be integral")
        elif self.kind == "C":
            if any(x % 2 for x in d):
                raise ValueError("type C weights must be integral")
        elif d and len({x % 2 for x in d}) > 1:
            raise ValueError("type B weights must be all integral or all half-integral")
        return d

    def weight(self, coords: Iterable) -> "Weight":
        """Build a :class:`Weight` from ordinary (possibly half-integral) coordinates."""
        doubled = []
        for c in coords:
            f = Fraction(c) * 2
            if f.denominator != 1:
                raise ValueError(f"coordinate {c} is not in (1/2)Z")
            doubled.append(int(f))
        return Weight(tuple(doubled), self)

    def zero(self) -> "Weight":
        return Weight((0,) * self.rank, self)


@dataclass(frozen=True)
class Weight:
    """A weight, stored doubled, attached to its root system."""

    doubled: tuple[int, ...]
    system: RootSystem

    def __post_init__(self):
        object.__setattr__(self, "doubled", self.system.check_doubled(self.doubled))

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def __add__(self, other: "Weight") -> "Weight":
        _same(self, other)
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)), self.system)

    def __sub__(self, other: "Weight") -> "Weight":
        _same(self, other)
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled)), self.system)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.doubled), self.system)

    def is_dominant(self) -> bool:
        return is_dominant_doubled(self.system, self.doubled)

    def __str__(self):
        parts = []
        for c in self.coords:
            parts.append(str(c.numerator) if c.denominator == 1 else f"{c.numerator}/2")
        return "(" + ",".join(parts) + ")"


def _same(a: Weight, b: Weight) -> None:
    if a.system != b.system:
        raise ValueError(f"weights of {a.system} and {b.system} cannot be combined")


class DottedResult(NamedTuple):
    """Outcome of the dotted Weyl action; ``dominant`` is ``w(alpha+rho) - rho``."""

    singular: bool
    length: int | None = None
    dominant: Weight | None = None


def pairing_doubled(v: Sequence[int], root: Sequence[int]) -> int:
    """Euclidean pairing of a doubled vector with a root; only its sign and
    vanishing are meaningful for the dotted action."""
    return sum(a * b for a, b in zip(v, root))


def is_dominant_doubled(system: RootSystem, d: Sequence[int]) -> bool:
    n = len(d)
    for i in range(n - 1):
        if d[i] < d[i + 1]:
            return False
    if system.kind != "A" and n and d[-1] < 0:
        return False
    return True


def make_dominant_doubled(system: RootSystem, d: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Dominant Weyl-orbit representative of a doubled vector and the number
    of positive roots on which the vector pairs negatively."""
    length = sum(1 for r in system.positive_roots if pairing_doubled(d, r) < 0)
    if system.kind == "A":
        dom = tuple(sorted(d, reverse=True))
    else:
        dom = tuple(sorted((abs(x) for x in d), reverse=True))
    return dom, length


def root_data(system: RootSystem) -> tuple[list[Weight], Weight, int]:
    """Positive roots, rho and the order of the Weyl group."""
    if system.rank < 1:
        raise ValueError("root_data needs rank >= 1")
    roots = [Weight(tuple(2 * x for x in r), system) for r in system.positive_roots]
    return roots, Weight(system.rho_doubled, system), system.weyl_order


def dotted_action(system: RootSystem, alpha: Weight) -> DottedResult:
    """Move ``alpha + rho`` into the dominant chamber.

    Returns a singular result when ``alpha + rho`` lies on a wall, otherwise
    the length ``#{beta > 0 : <alpha+rho, beta> < 0}`` and ``w(alpha+rho) - rho``.
    """
    if alpha.system != system:
        if len(alpha.doubled) != system.rank:
            raise ValueError(f"weight of length {len(alpha.doubled)} does not match {system}")
        raise ValueError(f"weight of {alpha.system} passed for {system}")
    res = dotted_action_doubled(system, alpha.doubled)
    if res is None:
        return DottedResult(True)
    length, dom = res
    return DottedResult(False, length, Weight(dom, system))


def dotted_action_doubled(system: RootSystem, d: Sequence[int]):
    """Raw version of :func:`dotted_action`; ``None`` when singular."""
    rho = system.rho_doubled
    v = [a + b for a, b in zip(d, rho)]
    length = 0
    for r in system.positive_roots:
        p = pairing_doubled(v, r)
        if p == 0:
            return None
        if p < 0:
            length += 1
    dom, _ = make_dominant_doubled(system, v)
    return length, tuple(a - b for a, b in zip(dom, rho))


def make_dominant(system: RootSystem, v: Weight) -> tuple[Weight, int]:
    """Ordinary (undotted) Weyl normalisation of ``v``."""
    dom, length = make_dominant_doubled(system, v.doubled)
    return Weight(dom, system), length
