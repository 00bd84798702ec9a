"""Lefschetz exceptional collections on Gr(2,n), SGr(2,2m), OGr(2,2m+1)
and odd quadrics.

Objects are indexed as in the usual ``(k, l)`` picture: ``(k, l)`` stands
for ``S^l U^*(k)``, and ``(k, "spin")`` for the spinor bundle ``S(k)``.
A collection is stored as its first block plus its support partition; the
object list is derived from them, column by column.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence

from .linalg import determinant, is_upper_unitriangular, solve_upper_unitriangular
from .spaces import BundleError, BundleSum, Space, chi, ext

SPIN = "spin"
K0_LABEL = "K0-membership (necessary condition only)"
READINGS = ("ceil", "floor")


class NoIntegralSolution(ArithmeticError):
    """The target has no integral class in the span of the collection."""


# index sets


def upsilon_set(family: str, param: int) -> list:
    """The index set of the collection on the space with parameter ``param``.

    ``param`` is ``n`` for ``gr`` (on Gr(2,n)) and ``m`` for ``sgr``/``ogr``.
    For ``ogr`` the spinor markers ``(k, "spin")`` are included.
    """
    if family == "gr":
        n = param
        if n < 2:
            raise ValueError("Gr(2,n) needs n >= 2")
        m = n // 2
        return [
            (k, l)
            for k in range(n)
            for l in range(m)
            if not (n % 2 == 0 and k >= m and l > m - 2)
        ]
    if family == "sgr":
        m = param
        _check_m(m)
        return [(k, l) for k in range(2 * m - 1) for l in range(m) if not (k >= m - 1 and l > m - 2)]
    if family == "ogr":
        m = param
        _check_m(m)
        out: list = []
        for k in range(2 * m - 2):
            out.extend((k, l) for l in range(m - 1))
            out.append((k, SPIN))
        return out
    raise ValueError(f"unsupported family {family!r}")


def tilde_upsilon_set(family: str, param: int, reading: str = "ceil") -> list:
    """The enlarged index sets used in the fullness arguments.

    For ``gr`` the condition depends on how ``m`` is read for odd ``n``:
    ``reading="ceil"`` uses ``m = ceil(n/2)``, which makes the set contain
    the collection's index set; ``"floor"`` uses ``m = floor(n/2)``.
    """
    if family == "gr":
        if reading not in READINGS:
            raise ValueError(f"unknown reading {reading!r}")
        n = param
        m = ceil(n / 2) if reading == "ceil" else n // 2
        return [
            (k, l)
            for k in range(n)
            for l in range(m)
            if not (n % 2 == 1 and k >= m - 1 and l > m - 2)
        ]
    if family == "sgr":
        m = param
        _check_m(m)
        return [(k, l) for k in range(2 * m - 1) for l in range(m + 1) if not (k >= m - 2 and l > m - 1)]
    if family == "ogr":
        m = param
        _check_m(m)
        return [(k, l) for k in range(2 * m - 2) for l in range(m)]
    raise ValueError(f"unsupported family {family!r}")


def tilde_difference(family: str, param: int, reading: str = "ceil") -> list:
    base = set(upsilon_set(family, param))
    return sorted(p for p in tilde_upsilon_set(family, param, reading) if p not in base)


def _check_m(m: int) -> None:
    if m < 2:
        raise ValueError("m must be at least 2")


def index_bundle(space: Space, idx) -> BundleSum:
    k, l = idx
    if l == SPIN:
        return space.spinor(k)
    return space.sym(l, k)


def space_for(family: str, param: int) -> Space:
    if family == "gr":
        return Space.gr(param)
    if family == "sgr":
        return Space.sgr(param)
    if family == "ogr":
        return Space.ogr(param)
    if family == "quadric":
        return Space.quadric(param)
    raise ValueError(f"unsupported family {family!r}")


# collections


@dataclass(frozen=True)
class LefschetzCollection:
    space: Space
    first_block: tuple[BundleSum, ...]
    partition: tuple[int, ...]

    def __post_init__(self):
        p = self.partition
        if not p or any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"bad support partition {p}")
        if p[0] != len(self.first_block):
            raise ValueError("first partition entry must equal the first block length")
        for b in self.first_block:
            if b.space != self.space:
                raise BundleError("collection object on the wrong space")

    @property
    def blocks(self) -> list[list[BundleSum]]:
        return [[e.twist(j) for e in self.first_block[:lam]] for j, lam in enumerate(self.partition)]

    @property
    def objects(self) -> list[BundleSum]:
        return [e for block in self.blocks for e in block]

    @property
    def positions(self) -> list[tuple[int, int]]:
        """``(block, position in block)`` for each object."""
        return [(j, p) for j, lam in enumerate(self.partition) for p in range(lam)]

    def __len__(self):
        return sum(self.partition)

    @property
    def labels(self) -> list[str]:
        return [str(e) for e in self.objects]

    def index_of(self, block: int, pos: int) -> int:
        return sum(self.partition[:block]) + pos

    def retarget(self, space: Space) -> "LefschetzCollection":
        """Move the collection to another space with the same GL part; the
        objects must have trivial semisimple part."""
        block = []
        for e in self.first_block:
            terms = {}
            for b, c in e.items():
                if any(b.ss):
                    raise BundleError(f"{b} cannot be moved to {space}")
                terms[space.irreducible(b.gl)] = c
            block.append(BundleSum(space, terms))
        return LefschetzCollection(space, tuple(block), self.partition)


def build_collection(family: str, param: int) -> LefschetzCollection:
    """The collection on Gr(2,n), SGr(2,2m), OGr(2,2m+1) or the quadric in P^{n-1}."""
    if family == "gr":
        if param < 3:
            raise ValueError("Gr(2,n) collections need n >= 3")
        sp = Space.gr(param)
        n, m = param, param // 2
        first = tuple(sp.sym(l) for l in range(m))
        part = (m,) * (2 * m + 1) if n % 2 else (m,) * m + (m - 1,) * m
        return LefschetzCollection(sp, first, part)
    if family == "sgr":
        _check_m(param)
        m = param
        sp = Space.sgr(m)
        first = tuple(sp.sym(l) for l in range(m))
        return LefschetzCollection(sp, first, (m,) * (m - 1) + (m - 1,) * m)
    if family == "ogr":
        _check_m(param)
        m = param
        sp = Space.ogr(m)
        first = tuple(sp.sym(l) for l in range(m - 1)) + (sp.spinor(0),)
        return LefschetzCollection(sp, first, (m,) * (2 * m - 2))
    if family == "quadric":
        sp = Space.quadric(param)
        return LefschetzCollection(sp, (sp.O(), sp.spinor()), (2,) + (1,) * (param - 3))
    raise ValueError(f"unsupported family {family!r}")


def collection_from_indices(space: Space, indices: Sequence) -> list[BundleSum]:
    return [index_bundle(space, i) for i in indices]


def restrict_hyperplane(coll: LefschetzCollection) -> LefschetzCollection:
    """Restriction to a hyperplane section: drop the last twist and keep the
    first ``lambda_1`` objects as the new first block."""
    if len(coll.partition) < 2:
        raise ValueError("a single-block collection has no hyperplane restriction")
    new_part = coll.partition[1:]
    return LefschetzCollection(coll.space, coll.first_block[: new_part[0]], new_part)


def rank_k0(space: Space) -> int:
    return space.rank_k0


# verification


@dataclass(frozen=True)
class Violation:
    """``Ext^degree(E_j, E_i)`` has dimension ``dim``; ``i == j`` marks a bad self-Ext."""

    i: int
    j: int
    degree: int
    dim: int

    def as_list(self) -> list[int]:
        return [self.i, self.j, self.degree, self.dim]


@dataclass
class ExceptionalityReport:
    space: Space
    mode: str
    violations: list[Violation]
    gram: list[list[int]]
    labels: list[str]
    family: str = ""
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def first_violation(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def to_json(self) -> dict:
        return {
            "space": str(self.space),
            "family": self.family or self.space.family,
            "params": dict(sorted(self.params.items())),
            "mode": self.mode,
            "verdict": self.verdict,
            "violations": [v.as_list() for v in self.violations],
            "gram": self.gram,
            "objects": self.labels,
            "gram_upper_unitriangular": is_upper_unitriangular(self.gram),
            "lengths": {"collection": len(self.labels), "rank_k0": self.space.rank_k0},
        }


def _self_violations(space: Space, e: BundleSum, i: int) -> list[Violation]:
    dims = ext(space, e, e).dims
    out = []
    for d, v in dims.items():
        if (d, v) != (0, 1):
            out.append(Violation(i, i, d, v))
    if 0 not in dims:
        out.append(Violation(i, i, 0, 0))
    return out


def _pair_violations(space: Space, objs: Sequence[BundleSum], pairs: Sequence[tuple[int, int]]) -> list[Violation]:
    out = []
    for i, j in pairs:
        if i == j:
            out.extend(_self_violations(space, objs[i], i))
            continue
        for d, v in ext(space, objs[j], objs[i]).dims.items():
            out.append(Violation(i, j, d, v))
    return out


def _work(args):
    space, objs, pairs = args
    return _pair_violations(space, objs, pairs)


def _run_pairs(space: Space, objs: list[BundleSum], pairs: list[tuple[int, int]], jobs: int) -> list[Violation]:
    if jobs <= 1 or len(pairs) < 2 * jobs:
        res = _pair_violations(space, objs, pairs)
    else:
        chunks = [pairs[c::jobs] for c in range(jobs)]
        res = []
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_work, [(space, objs, ch) for ch in chunks]):
                res.extend(part)
    return sorted(set(res), key=lambda v: (v.i, v.j, v.degree))


def gram_matrix(space: Space, objects: Sequence[BundleSum]) -> list[list[int]]:
    """``G[i][j] = chi(E_i, E_j)``."""
    return [[chi(space, a, b) for b in objects] for a in objects]


def verify_exceptional(
    space: Space,
    coll,
    mode: str = "full",
    jobs: int = 1,
) -> ExceptionalityReport:
    """Check exceptionality of a :class:`LefschetzCollection` or a plain list of objects.

    ``full`` examines every ordered pair; ``reduced`` checks the first block
    pairwise and then only ``Ext(E_p, E_q(-k))`` for objects ``E_p`` of
    block ``k``, which suffices for Lefschetz collections.
    """
    if mode not in ("full", "reduced"):
        raise ValueError(f"unknown mode {mode!r}")
    if isinstance(coll, LefschetzCollection):
        if coll.space != space:
            raise BundleError("collection lives on a different space")
        objs = coll.objects
    else:
        if mode == "reduced":
            raise ValueError("reduced mode needs a Lefschetz collection")
        objs = list(coll)
    n = len(objs)
    if mode == "full":
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
        violations = _run_pairs(space, objs, pairs, jobs)
    else:
        first = list(coll.first_block)
        lam0 = len(first)
        pairs = [(i, j) for i in range(lam0) for j in range(i, lam0)]
        violations = _run_pairs(space, objs, pairs, jobs)
        twisted = []
        for k in range(1, len(coll.partition)):
            for p in range(coll.partition[k]):
                for q in range(lam0):
                    twisted.append((q, coll.index_of(k, p)))
        violations = sorted(set(violations) | set(_run_pairs(space, objs, twisted, jobs)), key=lambda v: (v.i, v.j, v.degree))
    gram = gram_matrix(space, objs)
    return ExceptionalityReport(space, mode, violations, gram, [str(o) for o in objs])


# K-theory


@dataclass(frozen=True)
class KDecomposition:
    coefficients: tuple[int, ...]
    labels: tuple[str, ...]
    label: str = K0_LABEL

    def nonzero(self) -> dict[str, int]:
        return {lab: c for lab, c in zip(self.labels, self.coefficients) if c}

    def to_json(self) -> dict:
        return {"certificate": self.label, "coefficients": list(self.coefficients), "objects": list(self.labels)}


def k_decompose(
    space: Space,
    coll,
    target: BundleSum,
    gram: Optional[list[list[int]]] = None,
    probe_twists: Sequence[int] = (-1, 1),
) -> KDecomposition:
    """Coefficients of ``[target]`` in the basis given by the collection.

    Solves ``G c = v`` with ``v_i = chi(E_i, target)`` and then checks the
    answer against ``chi(target, E_j)`` and against probes ``E_i(t)``.
    A success certifies K_0 membership only.
    """
    objs = coll.objects if isinstance(coll, LefschetzCollection) else list(coll)
    if target.space != space:
        raise BundleError("target lives on a different space")
    if len(objs) != space.rank_k0:
        raise ValueError(f"collection has {len(objs)} objects but K_0 has rank {space.rank_k0}")
    g = gram if gram is not None else gram_matrix(space, objs)
    if not is_upper_unitriangular(g):
        raise ValueError("Gram matrix is not upper unitriangular")
    v = [chi(space, e, target) for e in objs]
    c = solve_upper_unitriangular(g, v)
    if any(x.denominator != 1 for x in c):
        raise NoIntegralSolution(f"non-integral coefficients for {target}")
    ci = [int(x) for x in c]
    n = len(objs)
    for j in range(n):
        lhs = chi(space, target, objs[j])
        rhs = sum(ci[i] * g[i][j] for i in range(n))
        if lhs != rhs:
            raise NoIntegralSolution(f"chi({target}, {objs[j]}) = {lhs} but the solution predicts {rhs}")
    for t in probe_twists:
        for e in objs:
            p = e.twist(t)
            lhs = chi(space, p, target)
            rhs = sum(ci[i] * chi(space, p, objs[i]) for i in range(n) if ci[i])
            if lhs != rhs:
                raise NoIntegralSolution(f"probe {p}: chi = {lhs}, predicted {rhs}")
    return KDecomposition(tuple(ci), tuple(str(o) for o in objs))


def gram_determinant(gram: list[list[int]]) -> Fraction:
    return determinant(gram)
