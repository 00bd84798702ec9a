"""Slow independent reference implementations used to cross-check the engine."""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .rootsys import RootSystem


def _reflect(v: tuple[int, ...], root: tuple[int, ...]) -> tuple[int, ...]:
    rr = sum(r * r for r in root)
    c = 2 * sum(a * b for a, b in zip(v, root))
    if c % rr:
        # doubled weights stay in the lattice; this cannot happen for valid input
        raise ArithmeticError("reflection left the doubled lattice")
    c //= rr
    return tuple(a - c * b for a, b in zip(v, root))


def weyl_group_orbit_lengths(system: RootSystem, v: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Breadth-first search over simple reflections: orbit point -> minimal word length.

    For a regular vector the orbit is in bijection with the Weyl group.
    """
    start = tuple(v)
    seen = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for r in system.simple_roots:
            y = _reflect(x, r)
            if y not in seen:
                seen[y] = seen[x] + 1
                queue.append(y)
    return seen


def _strictly_dominant(system: RootSystem, v: Sequence[int]) -> bool:
    return all(sum(a * b for a, b in zip(v, r)) > 0 for r in system.simple_roots)


def brute_force_dotted(system: RootSystem, d: Sequence[int]) -> Optional[tuple[int, tuple[int, ...]]]:
    """Dotted action by enumerating the Weyl orbit of ``d + rho`` (doubled)."""
    rho = system.rho_doubled
    v = tuple(a + b for a, b in zip(d, rho))
    if any(sum(a * b for a, b in zip(v, r)) == 0 for r in system.positive_roots):
        return None
    for x, length in weyl_group_orbit_lengths(system, v).items():
        if _strictly_dominant(system, x):
            return length, tuple(a - b for a, b in zip(x, rho))
    raise AssertionError("no dominant point in a regular orbit")


def weyl_group_order(system: RootSystem) -> int:
    """Size of the orbit of a regular vector."""
    return len(weyl_group_orbit_lengths(system, system.rho_doubled))
