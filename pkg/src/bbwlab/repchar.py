"""Characters of irreducible representations of GL_n, Spin_{2m+1} and Sp_{2m}.

Multiplicities come from Freudenthal's recursion, computed on the dominant
chamber only and memoised per ``(system, highest weight)``.  Tensor products
are decomposed by multiplying characters and peeling off the
lexicographically largest dominant weight.
"""

from __future__ import annotations

import json
import os
import threading
from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb
from typing import Dict, Iterator, Mapping

from .rootsys import (
    RootSystem,
    Weight,
    is_dominant_doubled,
    make_dominant_doubled,
)

CACHE_FORMAT_VERSION = 1

_rank_limit = 8
_cache: dict[tuple[str, int, tuple[int, ...]], dict[tuple[int, ...], int]] = {}
_cache_lock = threading.Lock()


class RankLimitExceeded(ValueError):
    """Raised when a character computation exceeds the configured rank guard."""


class PeelingError(ArithmeticError):
    """Tensor decomposition produced a negative or non-integral multiplicity.

    This signals an internal inconsistency, never a user error.
    """


def set_rank_limit(limit: int) -> None:
    global _rank_limit
    if limit < 1:
        raise ValueError("rank limit must be positive")
    _rank_limit = limit


def get_rank_limit() -> int:
    return _rank_limit


def _check_dominant(system: RootSystem, lam: Weight) -> None:
    if lam.system != system:
        raise ValueError(f"weight of {lam.system} passed for {system}")
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant for {system}")


def _ip(x, y) -> int:
    return sum(a * b for a, b in zip(x, y))


def weyl_dim_doubled(system: RootSystem, d: tuple[int, ...]) -> int:
    rho = system.rho_half_doubled
    num = 1
    den = 1
    for r in system.positive_roots:
        num *= _ip([a + b for a, b in zip(d, rho)], r)
        den *= _ip(rho, r)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {q} for {d} in {system}")
    return int(q)


def weyl_dim(system: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible representation with highest weight ``lam``."""
    _check_dominant(system, lam)
    return weyl_dim_doubled(system, lam.doubled)


def _coroot_pairing(d: tuple[int, ...], root: tuple[int, ...]) -> int:
    # <lambda, alpha^vee> = 2(lambda, alpha)/(alpha, alpha) with lambda doubled
    num = _ip(d, root)
    den = _ip(root, root)
    if num % den:
        raise ArithmeticError(f"{d} is not in the weight lattice")
    return num // den


def _dominant_weights(system: RootSystem, top: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = {top}
    stack = [top]
    while stack:
        mu = stack.pop()
        for r in system.positive_roots:
            p = _coroot_pairing(mu, r)
            for k in range(1, p + 1):
                nu = tuple(a - 2 * k * b for a, b in zip(mu, r))
                nu, _ = make_dominant_doubled(system, nu)
                if nu not in seen:
                    seen.add(nu)
                    stack.append(nu)
    return list(seen)


def dominant_character_doubled(system: RootSystem, top: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Dominant part of the character of V(top) as ``{doubled weight: mult}``."""
    key = (system.kind, system.rank, top)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    if system.rank > _rank_limit:
        raise RankLimitExceeded(f"character of {system} exceeds rank limit {_rank_limit}")
    if not is_dominant_doubled(system, top):
        raise ValueError(f"{top} is not dominant for {system}")
    rho = system.rho_half_doubled
    weights = _dominant_weights(system, top)
    weights.sort(key=lambda mu: -_ip(mu, rho))
    lr = [a + b for a, b in zip(top, rho)]
    norm_top = _ip(lr, lr)
    mult: dict[tuple[int, ...], int] = {top: 1}
    for mu in weights:
        if mu == top:
            continue
        total = 0
        for r in system.positive_roots:
            r2 = tuple(2 * x for x in r)
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, r2))
                dom, _ = make_dominant_doubled(system, nu)
                m = mult.get(dom)
                if m is None:
                    break
                total += m * _ip(nu, r2)
                k += 1
        mr = [a + b for a, b in zip(mu, rho)]
        den = norm_top - _ip(mr, mr)
        value = Fraction(2 * total, den)
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"Freudenthal produced {value} at {mu} in V({top})")
        if value:
            mult[mu] = int(value)
    with _cache_lock:
        _cache.setdefault(key, mult)
    return mult


def weyl_orbit_doubled(system: RootSystem, d: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if system.kind == "A":
        yield from set(permutations(d))
        return
    seen = set()
    for perm in set(permutations(d)):
        for signs in product((1, -1), repeat=len(d)):
            v = tuple(s * x for s, x in zip(signs, perm))
            if v not in seen:
                seen.add(v)
                yield v


def full_character_doubled(system: RootSystem, top: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    out = {}
    for mu, m in dominant_character_doubled(system, top).items():
        for v in weyl_orbit_doubled(system, mu):
            out[v] = m
    return out


class Character(Mapping):
    """Weight multiplicities of an irreducible representation."""

    def __init__(self, system: RootSystem, multiplicities: Dict[Weight, int]):
        self.system = system
        self._mult = dict(multiplicities)

    def __getitem__(self, w: Weight) -> int:
        return self._mult[w]

    def __iter__(self):
        return iter(self._mult)

    def __len__(self):
        return len(self._mult)

    @property
    def mass(self) -> int:
        return sum(self._mult.values())

    def __repr__(self):
        items = ", ".join(f"{w}: {m}" for w, m in sorted(self._mult.items(), key=lambda t: t[0].doubled, reverse=True))
        return f"Character({self.system}, {{{items}}})"


def character(system: RootSystem, lam: Weight) -> Character:
    """Full weight-multiplicity map of V(lam)."""
    _check_dominant(system, lam)
    full = full_character_doubled(system, lam.doubled)
    return Character(system, {Weight(d, system): m for d, m in full.items()})


def _is_one_dimensional(system: RootSystem, d: tuple[int, ...]) -> bool:
    if system.kind == "A":
        return len(set(d)) <= 1
    return not any(d)


def tensor_decompose_doubled(system: RootSystem, lam: tuple[int, ...], mu: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    if _is_one_dimensional(system, mu):
        return {tuple(a + b for a, b in zip(lam, mu)): 1}
    if _is_one_dimensional(system, lam):
        return {tuple(a + b for a, b in zip(lam, mu)): 1}
    small, big = (lam, mu) if weyl_dim_doubled(system, lam) <= weyl_dim_doubled(system, mu) else (mu, lam)
    small_full = full_character_doubled(system, small)
    big_full = full_character_doubled(system, big)
    remaining: Counter = Counter()
    for a, ma in small_full.items():
        for b, mb in big_full.items():
            v = tuple(x + y for x, y in zip(a, b))
            if is_dominant_doubled(system, v):
                remaining[v] += ma * mb
    return peel(system, remaining)


def peel(system: RootSystem, remaining: Mapping[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
    """Split a Weyl-invariant dominant multiset into irreducible characters."""
    rest = Counter({k: v for k, v in remaining.items() if v})
    out: dict[tuple[int, ...], int] = {}
    while rest:
        top = max(rest)
        c = rest[top]
        if c < 0:
            raise PeelingError(f"negative multiplicity {c} at {top}")
        mass_before = sum(rest.values())
        out[top] = c
        for w, m in dominant_character_doubled(system, top).items():
            rest[w] -= c * m
            if rest[w] == 0:
                del rest[w]
            elif rest[w] < 0:
                raise PeelingError(f"negative multiplicity {rest[w]} at {w} after removing V({top})")
        if sum(rest.values()) >= mass_before:
            raise PeelingError("peeling did not reduce the remaining mass")
    return out


def tensor_decompose(system: RootSystem, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Decompose V(lam) (x) V(mu) into irreducibles ``{highest weight: multiplicity}``."""
    _check_dominant(system, lam)
    _check_dominant(system, mu)
    res = tensor_decompose_doubled(system, lam.doubled, mu.doubled)
    return {Weight(d, system): m for d, m in res.items()}


def dual_weight_doubled(system: RootSystem, d: tuple[int, ...]) -> tuple[int, ...]:
    return make_dominant_doubled(system, tuple(-x for x in d))[0]


def dual_weight(system: RootSystem, lam: Weight) -> Weight:
    """Highest weight of the dual representation."""
    _check_dominant(system, lam)
    return Weight(dual_weight_doubled(system, lam.doubled), system)


def exterior_power_decompose(system: RootSystem, vector_weights, degree: int) -> dict[tuple[int, ...], int]:
    """Decompose the ``degree``-th exterior power of a representation whose
    weights (doubled, with repetition) are given."""
    counts: Counter = Counter()
    for sub in combinations(range(len(vector_weights)), degree):
        v = tuple(sum(vector_weights[i][j] for i in sub) for j in range(system.rank))
        if is_dominant_doubled(system, v):
            counts[v] += 1
    if system.rank == 0:
        n = len(vector_weights)
        return {(): comb(n, degree)} if comb(n, degree) else {}
    return peel(system, counts)


def standard_weights(system: RootSystem) -> list[tuple[int, ...]]:
    """Doubled weights of the defining representation (dimension 2m+1 for B, 2m for C, n for A)."""
    n = system.rank
    out = []
    for i in range(n):
        v = [0] * n
        v[i] = 2
        out.append(tuple(v))
        if system.kind != "A":
            out.append(tuple(-x for x in v))
    if system.kind == "B":
        out.append((0,) * n)
    return out


def cache_clear() -> None:
    with _cache_lock:
        _cache.clear()


def cache_size() -> int:
    return len(_cache)


def save_cache(path: str | os.PathLike) -> None:
    """Write the memoised dominant characters as versioned JSON."""
    with _cache_lock:
        entries = [
            {"kind": k, "rank": r, "top": list(top), "mult": sorted([list(w), m] for w, m in mult.items())}
            for (k, r, top), mult in sorted(_cache.items())
        ]
    payload = {"format": "bbwlab-character-cache", "version": CACHE_FORMAT_VERSION, "entries": entries}
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, separators=(",", ":"))
    os.replace(tmp, path)


def load_cache(path: str | os.PathLike) -> int:
    """Load a cache written by :func:`save_cache`; returns the number of entries read.

    Files with an unknown version are ignored.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except FileNotFoundError:
        return 0
    if payload.get("format") != "bbwlab-character-cache" or payload.get("version") != CACHE_FORMAT_VERSION:
        return 0
    n = 0
    with _cache_lock:
        for e in payload["entries"]:
            key = (e["kind"], e["rank"], tuple(e["top"]))
            _cache.setdefault(key, {tuple(w): m for w, m in e["mult"]})
            n += 1
    return n
