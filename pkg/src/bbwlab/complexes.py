"""Formal complexes of bundles and K-theoretic exactness certificates.

A :class:`FormalComplex` keeps only its terms ``T_0, ..., T_N``; there are
no differentials.  Exactness is certified at the level of classes: the
alternating sum of ranks vanishes and the alternating sum of Euler pairings
against a set of probe bundles vanishes for every twist in a range.
Multiplicity spaces such as ``Lambda^i W^*`` enter as plain multiplicities
``C(n, i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Optional, Sequence

from .spaces import BundleError, BundleSum, Space, chi, dual_bundle, tensor_bundles

KINDS = ("skus", "sku", "crucial", "bicomplex", "koszul-shape", "custom")


@dataclass(frozen=True)
class FormalComplex:
    space: Space
    terms: tuple[BundleSum, ...]
    kind: str = "custom"
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown complex kind {self.kind!r}")
        if len(self.terms) < 2:
            raise ValueError("a complex needs at least two terms")
        for t in self.terms:
            if t.space != self.space:
                raise BundleError("complex term on the wrong space")
            if t.is_zero():
                raise ValueError("complex terms must be nonzero")

    def __len__(self):
        return len(self.terms)

    @property
    def ranks(self) -> list[int]:
        return [t.rank for t in self.terms]

    @property
    def rank_alternating_sum(self) -> int:
        return sum((-1) ** i * r for i, r in enumerate(self.ranks))

    def k_class(self) -> BundleSum:
        """``sum_i (-1)^i [T_i]``."""
        total = BundleSum.zero(self.space)
        for i, t in enumerate(self.terms):
            total = total + t.scaled((-1) ** i)
        return total

    def twist(self, t: int) -> "FormalComplex":
        return FormalComplex(self.space, tuple(x.twist(t) for x in self.terms), self.kind, self.params)

    def drop(self, i: int) -> "FormalComplex":
        """The same list with term ``i`` removed (for negative tests)."""
        terms = self.terms[:i] + self.terms[i + 1 :]
        return FormalComplex(self.space, terms, "custom", self.params)

    def __str__(self):
        return " -> ".join(f"[{t}]" for t in self.terms)


def _skus_terms(sp: Space, k: int) -> list[BundleSum]:
    n = sp.n
    return [sp.wedge_uperp(k)] + [sp.sym(i).scaled(comb(n, k - i)) for i in range(k + 1)]


def build_sequence(space: Space, kind: str, **params) -> FormalComplex:
    """Build one of the named complexes.

    ``skus(k)``      0 -> L^k U^perp -> L^k W^* (x) O -> ... -> W^* (x) S^{k-1}U^* -> S^k U^* -> 0
    ``sku(k)``       its dual form ending in ``Lambda^{n-2-k}(W/U)``
    ``crucial(k)``   the glued sequence from ``S^{n-2-k}U^*`` to ``S^k U^*(n-k-1)``
    ``bicomplex(m)`` the total complex on SGr(2,2m) resolving ``S^{m-1}U^*(m-1)``
    """
    n = space.n
    if kind in ("skus", "sku", "crucial"):
        k = params.get("k")
        if k is None or not 0 <= k <= n - 2:
            raise ValueError(f"{kind} needs 0 <= k <= {n - 2}")
        if space.k != 2:
            raise ValueError(f"{kind} is defined for rank 2 tautological bundles")
        if kind == "skus":
            terms = _skus_terms(space, k)
        elif kind == "sku":
            j = n - 2 - k
            terms = [space.sym(j - i, i - j).scaled(comb(n, i)) for i in range(j + 1)]
            terms.append(space.wedge_quotient(j))
        else:
            j = n - 2 - k
            terms = [space.sym(j - i, i).scaled(comb(n, i)) for i in range(j + 1)]
            terms += [space.sym(i, n - k - 1).scaled(comb(n, k - i)) for i in range(k + 1)]
        return FormalComplex(space, tuple(terms), kind, (("k", k),))
    if kind == "bicomplex":
        if space.family != "sgr":
            raise ValueError("the bicomplex lives on SGr(2,2m)")
        m = params.get("m", space.m)
        if m != space.m or m < 2:
            raise ValueError(f"bicomplex needs m = {space.m} >= 2")
        terms = []
        for d in range(2 * m - 1):
            acc = BundleSum.zero(space)
            for t in range(m):
                j = d - t
                if 0 <= j <= t:
                    acc = acc + space.sym(m - 1 - t + j, t).scaled(comb(2 * m, t - j))
            terms.append(acc)
        return FormalComplex(space, tuple(terms), kind, (("m", m),))
    raise ValueError(f"unknown complex kind {kind!r}")


@dataclass
class ExactnessCertificate:
    passed: bool
    rank_sum: int
    checks: int
    failure: Optional[tuple[str, int, int]] = None
    kind: str = ""
    params: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": dict(sorted(self.params.items())),
            "passed": self.passed,
            "rank_alternating_sum": self.rank_sum,
            "checks": self.checks,
            "failure": None if self.failure is None else list(self.failure),
        }


def default_probes(space: Space) -> list[BundleSum]:
    from .lefschetz import build_collection

    fam = space.family
    if fam == "gr" and space.k == 2 and space.n >= 3:
        return list(build_collection("gr", space.n).first_block)
    if fam in ("sgr", "ogr"):
        return list(build_collection(fam, space.m).first_block)
    if fam == "quadric":
        return list(build_collection("quadric", space.n).first_block)
    return [space.O()]


def check_k_exact(
    space: Space,
    cx: FormalComplex,
    twists: Optional[Iterable[int]] = None,
    probes: Optional[Sequence[BundleSum]] = None,
) -> ExactnessCertificate:
    """Certify that the alternating class of ``cx`` vanishes against probes.

    Returns the first failing ``(probe, twist, value)`` when it does not.
    """
    if cx.space != space:
        raise BundleError("complex lives on a different space")
    probes = default_probes(space) if probes is None else list(probes)
    twists = list(range(0, -space.canonical_twist + 1)) if twists is None else list(twists)
    rank_sum = cx.rank_alternating_sum
    cls = cx.k_class()
    checks = 0
    failure = None
    for p in probes:
        for t in twists:
            checks += 1
            val = chi(space, p, cls.twist(t))
            if val and failure is None:
                failure = (str(p), t, val)
        if failure:
            break
    passed = rank_sum == 0 and failure is None
    return ExactnessCertificate(passed, rank_sum, checks, failure, cx.kind, dict(cx.params))


# spinor bundle identities


@dataclass
class Relation:
    name: str
    lhs: BundleSum
    rhs: BundleSum
    rank_lhs: int
    rank_rhs: int
    passed: bool
    witness: Optional[tuple[str, int]] = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "rank_lhs": self.rank_lhs,
            "rank_rhs": self.rank_rhs,
            "passed": self.passed,
            "witness": None if self.witness is None else list(self.witness),
        }


def _probe_equal(space: Space, a: BundleSum, b: BundleSum, probes, twists) -> Optional[tuple[str, int]]:
    diff = a - b
    for p in probes:
        for t in twists:
            v = chi(space, p, diff.twist(t))
            if v:
                return (str(p), t)
    return None


def spinor_relations(space: Space) -> list[Relation]:
    """The K-theoretic identities satisfied by the spinor bundle on OGr(2,2m+1).

    1. ``2^m O - S(-1) - S = S (x) U``: cohomology of ``S(-1) -> BS (x) O -> S``.
    2. ``2^m S^* = sum_s Lambda^{2s} U^perp``: the filtration of ``BS (x) S^*``.
    3. ``S^* = S(-1)`` as weights.

    Probing runs against the whole collection, which spans K_0, so a pass
    is an identity of classes.
    """
    if space.family != "ogr":
        raise ValueError("spinor relations need OGr(2,2m+1)")
    from .lefschetz import build_collection

    m = space.m
    coll = build_collection("ogr", m)
    probes = coll.objects
    twists = (0, 1)
    S = space.spinor()
    out = []

    lhs = space.trivial(2**m) - space.spinor(-1) - S
    rhs = tensor_bundles(space, S, space.U())
    w = _probe_equal(space, lhs, rhs, probes, twists)
    out.append(Relation("spinor_tautological", lhs, rhs, lhs.rank, rhs.rank, w is None and lhs.rank == rhs.rank, w))

    lhs = dual_bundle(space, S).scaled(2**m)
    rhs = BundleSum.zero(space)
    for s in range(m):
        rhs = rhs + space.wedge_uperp(2 * s)
    w = _probe_equal(space, lhs, rhs, probes, twists)
    out.append(Relation("spinor_square", lhs, rhs, lhs.rank, rhs.rank, w is None and lhs.rank == rhs.rank, w))

    lhs = dual_bundle(space, S)
    rhs = space.spinor(-1)
    ok = lhs == rhs
    out.append(Relation("spinor_selfdual", lhs, rhs, lhs.rank, rhs.rank, ok, None if ok else ("weights differ", 0)))
    return out
