"""The twelve acceptance criteria as runnable checks.

Each ``criterion_N`` returns a :class:`CriterionResult`; nothing here is
tolerant, every comparison is exact.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .bbw import CohomologyTable
from .clifford import QuadSpace, radical_filtration, random_phi, splitting_independence, verify_even_structure
from .complexes import build_sequence, check_k_exact
from .lefschetz import (
    NoIntegralSolution,
    build_collection,
    gram_matrix,
    index_bundle,
    k_decompose,
    space_for,
    tilde_difference,
    verify_exceptional,
)
from .linalg import is_upper_unitriangular
from .oracles import brute_force_dotted
from .repchar import full_character_doubled, tensor_decompose_doubled, weyl_dim_doubled
from .rootsys import RootSystem, dotted_action_doubled
from .spaces import Space, chi, cohomology, dual_bundle, ext, tensor_bundles

SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    checks: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" first failure: {self.failures[0]}" if self.failures else ""
        return f"[{status}] criterion {self.number:2d} {self.title} ({self.checks} checks, {self.seconds:.1f}s){extra}"

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "title": self.title,
            "passed": self.passed,
            "checks": self.checks,
            "failures": [str(f) for f in self.failures[:20]],
            "failure_count": len(self.failures),
        }


class _Tally:
    def __init__(self):
        self.checks = 0
        self.failures: list = []

    def check(self, ok: bool, witness) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(witness)
        return ok


def _result(number: int, title: str, tally: _Tally, start: float, extra_ok: bool = True) -> CriterionResult:
    return CriterionResult(
        number,
        title,
        extra_ok and not tally.failures and tally.checks > 0,
        tally.checks,
        tally.failures,
        time.perf_counter() - start,
    )


# 1


def gr2n_expected(n: int, l1: int, l2: int, k: int) -> tuple:
    """Closed-form Ext table of ``(S^{l1}U^*, S^{l2}U^*(-k))`` on Gr(2,n) as table entries."""
    if l1 <= l2 and k == 0:
        return ((0, (2 * (l2 - l1),) + (0,) * (n - 1), 1),)
    if n % 2 == 0 and l1 == l2 == n // 2 - 1 and k == n // 2:
        return ((n - 2, (0,) * n, 1),)
    return ()


def _mod_det(table: CohomologyTable) -> tuple:
    """Table entries as SL(V) data: weights normalised to last coordinate 0."""
    return tuple(sorted((d, tuple(x - w[-1] for x in w), c) for d, w, c in table.entries))


def criterion_1(max_l: Callable[[int], int] = lambda n: (n + 1) // 2 - 1, ns=range(4, 13)) -> CriterionResult:
    """Ext table on Gr(2,n) against the closed form, ``0 <= l <= ceil(n/2)-1``."""
    start = time.perf_counter()
    tally = _Tally()
    for n in ns:
        sp = Space.gr(n)
        for l1 in range(max_l(n) + 1):
            for l2 in range(max_l(n) + 1):
                for k in range(n):
                    got = ext(sp, sp.sym(l1), sp.sym(l2, -k))
                    want = CohomologyTable(sp.ambient, gr2n_expected(n, l1, l2, k))
                    tally.check(_mod_det(got) == _mod_det(want), (n, l1, l2, k, str(got)))
    elapsed = time.perf_counter() - start
    return _result(1, "Ext table on Gr(2,n) matches closed form", tally, start, elapsed < 120)


# 2-4, 11


def _collection_criterion(number: int, title: str, family: str, params, length, extra=None) -> CriterionResult:
    start = time.perf_counter()
    tally = _Tally()
    for p in params:
        sp = space_for(family, p)
        coll = build_collection(family, p)
        rep = verify_exceptional(sp, coll, "full")
        tally.check(rep.passed, (family, p, "violation", rep.first_violation))
        tally.check(is_upper_unitriangular(rep.gram), (family, p, "gram not unitriangular"))
        tally.check(len(coll.objects) == length(p) == sp.rank_k0, (family, p, "length", len(coll.objects), length(p)))
        if extra:
            extra(tally, sp, coll, p)
    return _result(number, title, tally, start)


def criterion_2() -> CriterionResult:
    return _collection_criterion(2, "Gr(2,n) collections exceptional, n=3..10", "gr", range(3, 11), lambda n: comb(n, 2))


def _sgr_m2(tally: _Tally, sp: Space, coll, m: int) -> None:
    if m == 2:
        want = [sp.O(), sp.U_dual(), sp.O(1), sp.O(2)]
        tally.check(coll.objects == want, ("sgr", 2, [str(o) for o in coll.objects]))


def criterion_3() -> CriterionResult:
    return _collection_criterion(
        3, "SGr(2,2m) collections exceptional, m=2..5", "sgr", range(2, 6), lambda m: 2 * m * (m - 1), _sgr_m2
    )


def _ogr_spin_pairs(tally: _Tally, sp: Space, coll, m: int) -> None:
    spins = [i for i, o in enumerate(coll.objects) if sp.has_spinor and "Spin" in str(o)]
    tally.check(len(spins) == 2 * m - 2, ("ogr", m, "spinor count", len(spins)))


def criterion_4() -> CriterionResult:
    return _collection_criterion(
        4, "OGr(2,2m+1) collections exceptional, m=2..5", "ogr", range(2, 6), lambda m: 2 * m * (m - 1), _ogr_spin_pairs
    )


def criterion_11() -> CriterionResult:
    def quad_shape(tally, sp, coll, n):
        want = [sp.O(), sp.spinor()] + [sp.O(t) for t in range(1, n - 2)]
        tally.check(coll.objects == want, ("quadric", n, [str(o) for o in coll.objects]))

    return _collection_criterion(
        11, "odd quadric spinor collections exceptional, n=5,7,9", "quadric", (5, 7, 9), lambda n: n - 1, quad_shape
    )


# 5-7


def criterion_5() -> CriterionResult:
    start = time.perf_counter()
    tally = _Tally()
    for m in range(2, 6):
        sp = Space.ogr(m)
        for p in range(1, 2 * m - 2):
            h = cohomology(sp, sp.spinor(-p))
            tally.check(h.is_zero(), (m, p, str(h)))
        e = ext(sp, sp.spinor(), sp.spinor())
        tally.check(e.entries == ((0, (0,) * m, 1),), (m, "Ext(S,S)", str(e)))
    return _result(5, "spinor twists acyclic and S exceptional on OGr", tally, start)


def criterion_6() -> CriterionResult:
    start = time.perf_counter()
    tally = _Tally()
    for m in range(3, 6):
        sp = Space.ogr(m)
        s = sp.spinor()
        for l in range(m - 1):
            sym_u = dual_bundle(sp, sp.sym(l))
            base = tensor_bundles(sp, s, sym_u)
            for k in range(1 - l, 2 * m - 1):
                h = cohomology(sp, base.twist(-k))
                tally.check(h.is_zero(), (m, l, k, str(h)))
    return _result(6, "H(S x S^l U(-k)) vanishes on OGr, m=3..5", tally, start)


def criterion_7() -> CriterionResult:
    start = time.perf_counter()
    tally = _Tally()
    for m in range(3, 7):
        sp = Space.ogr(m)
        s = sp.spinor()
        tally.check(s.rank == 2 ** (m - 2), (m, "rank", s.rank))
        tally.check(s.det_charge == 2 ** (m - 3), (m, "det", s.det_charge))
    sp = Space.ogr(2)
    s, o1 = sp.spinor(), sp.O(1)
    tally.check(s.rank == 1, (2, "rank", s.rank))
    (irr_s,), (irr_o,) = list(s), list(o1)
    tally.check(sp.embed(irr_o) == tuple(2 * x for x in sp.embed(irr_s)), (2, "O(1) is S^2 at weight level"))
    for t in range(-6, 7):
        tally.check(chi(sp, sp.O(), sp.spinor(t)) == _p3_chi(2 * t + 1), (2, "chi S", t))
        tally.check(chi(sp, sp.O(), sp.O(t)) == _p3_chi(2 * t), (2, "chi O", t))
    h0 = cohomology(sp, s)
    tally.check(h0.dims == {0: 4}, (2, "H0(S)", str(h0)))
    return _result(7, "spinor rank/determinant and the P^3 model at m=2", tally, start)


def _p3_chi(d: int) -> int:
    """``chi(P^3, O(d))``."""
    return (d + 3) * (d + 2) * (d + 1) // 6


# 8


def criterion_8() -> CriterionResult:
    start = time.perf_counter()
    tally = _Tally()
    for n in range(4, 10):
        sp = Space.gr(n)
        for k in range(n - 1):
            cx = build_sequence(sp, "crucial", k=k)
            cert = check_k_exact(sp, cx, twists=range(0, n + 1))
            tally.check(cert.passed, ("crucial", n, k, cert.rank_sum, cert.failure))
    for m in range(2, 6):
        sp = Space.sgr(m)
        cx = build_sequence(sp, "bicomplex", m=m)
        cert = check_k_exact(sp, cx)
        tally.check(cx.rank_alternating_sum == 0, ("bicomplex", m, "rank", cx.rank_alternating_sum))
        tally.check(cert.passed, ("bicomplex", m, cert.failure))
    return _result(8, "crucial sequences and the bicomplex are K-exact", tally, start)


# 9


def criterion_9() -> CriterionResult:
    start = time.perf_counter()
    tally = _Tally()
    plan = [("gr", n) for n in range(4, 9)] + [("sgr", m) for m in range(2, 5)] + [("ogr", m) for m in range(2, 5)]
    for fam, p in plan:
        sp = space_for(fam, p)
        coll = build_collection(fam, p)
        gram = gram_matrix(sp, coll.objects)
        for idx in tilde_difference(fam, p):
            try:
                k_decompose(sp, coll, index_bundle(sp, idx), gram=gram)
                tally.check(True, None)
            except NoIntegralSolution as exc:
                tally.check(False, (fam, p, idx, str(exc)))
    for m in (3, 4):
        sp = Space.ogr(m)
        coll = build_collection("ogr", m)
        gram = gram_matrix(sp, coll.objects)
        for k in range(2 * m - 3):
            target = tensor_bundles(sp, sp.spinor(), sp.U_dual(k))
            try:
                k_decompose(sp, coll, target, gram=gram)
                tally.check(True, None)
            except NoIntegralSolution as exc:
                tally.check(False, ("S x U*", m, k, str(exc)))
    return _result(9, "integral K0 decompositions of the enlarged index sets", tally, start)


# 10


def criterion_10(samples: int = 20, seed: int = SEED) -> CriterionResult:
    start = time.perf_counter()
    tally = _Tally()
    rng = random.Random(seed)
    for n in range(4, 10):
        qs = QuadSpace(n)
        rep = verify_even_structure(qs, seed=seed)
        tally.check(rep.passed, (n, "even structure", rep.to_json()))
        for k in range(1, qs.m + 1):
            for eps in ((1,) if qs.odd else (1, -1)):
                f = radical_filtration(qs, k, eps)
                tally.check(f.passed, (n, k, eps, f.to_json()))
            for i in range(samples):
                phi = random_phi(qs, k, rng)
                tally.check(splitting_independence(qs, k, phi), (n, k, i, phi))
    return _result(10, "Clifford suite n=4..9", tally, start)


# 12


def criterion_12(samples: int = 60, seed: int = SEED) -> CriterionResult:
    start = time.perf_counter()
    tally = _Tally()
    rng = random.Random(seed)
    spaces = [Space.gr(4), Space.gr(5), Space.sgr(3), Space.ogr(3), Space.quadric(7)]

    def rand_bundle(sp: Space):
        l = rng.randint(0, 2)
        t = rng.randint(-3, 3)
        if sp.has_spinor and rng.random() < 0.3:
            return sp.spinor(t)
        return sp.sym(l, t) if sp.k == 2 else sp.O(t)

    for _ in range(samples):
        sp = rng.choice(spaces)
        e, f = rand_bundle(sp), rand_bundle(sp)
        t = rng.randint(-3, 3)
        a, b = ext(sp, e, f), ext(sp, e.twist(t), f.twist(t))
        tally.check(a.entries == b.entries, ("twist", str(sp), str(e), str(f), t))
        omega = sp.O(sp.canonical_twist)
        lhs = chi(sp, e, f)
        rhs = (-1) ** sp.dimension * chi(sp, f, tensor_bundles(sp, e, omega))
        tally.check(lhs == rhs, ("serre", str(sp), str(e), str(f), lhs, rhs))

    def rand_dom(system: RootSystem, bound: int):
        if system.kind == "A":
            xs = sorted((rng.randint(-bound, bound) for _ in range(system.rank)), reverse=True)
            return tuple(2 * x for x in xs)
        xs = sorted((rng.randint(0, bound) for _ in range(system.rank)), reverse=True)
        if system.kind == "B" and rng.random() < 0.5:
            return tuple(2 * x + 1 for x in xs)
        return tuple(2 * x for x in xs)

    systems = [RootSystem(k, r) for k in "ABC" for r in (1, 2, 3)]
    for _ in range(samples):
        system = rng.choice(systems)
        lam, mu = rand_dom(system, 2), rand_dom(system, 2)
        dec = tensor_decompose_doubled(system, lam, mu)
        lhs = weyl_dim_doubled(system, lam) * weyl_dim_doubled(system, mu)
        rhs = sum(c * weyl_dim_doubled(system, w) for w, c in dec.items())
        tally.check(lhs == rhs, ("tensor balance", str(system), lam, mu))
        mass = sum(full_character_doubled(system, lam).values())
        tally.check(mass == weyl_dim_doubled(system, lam), ("mass", str(system), lam))
        raw = tuple(x + 2 * rng.randint(-4, 4) for x in rand_dom(system, 0))
        tally.check(dotted_action_doubled(system, raw) == brute_force_dotted(system, raw), ("dotted", str(system), raw))
    return _result(12, "property suites", tally, start)


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
    12: criterion_12,
}


def run_all(only=None) -> list[CriterionResult]:
    return [CRITERIA[i]() for i in sorted(CRITERIA) if only is None or i in only]
