"""Exact Clifford algebras of split quadratic forms and their spinor modules.

Basis of ``E`` (in this order): ``e_1..e_m`` spanning ``E_1``, ``f_1..f_m``
spanning ``E_2``, and ``e0`` when ``n = 2m+1``.  The symmetric form has
``B(e_i, f_i) = 1/2`` and ``B(e0, e0) = 1``, all other pairings zero, and
the algebra relation is ``xy + yx = 2 B(x, y)``.

Clifford monomials are bitmasks over this basis (increasing order).  The
spinor module is ``Lambda^* E_1`` with basis bitmasks over ``e_1..e_m``:
``e_i`` acts by wedge, ``f_i`` by contraction, ``e0`` by the parity sign.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .linalg import EchelonBasis, same_span, vec_axpy, vec_scale

HALF = Fraction(1, 2)
MAX_DIM = 12


class DimensionGuard(ValueError):
    """Requested dimension exceeds the resource guard."""


@dataclass(frozen=True)
class QuadSpace:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1

    def e(self, i: int) -> int:
        """Index of ``e_i`` (1-based)."""
        return i - 1

    def f(self, i: int) -> int:
        return self.m + i - 1

    @property
    def e0(self) -> int:
        if not self.odd:
            raise ValueError("e0 exists only in odd dimension")
        return 2 * self.m

    def form(self, a: int, b: int) -> Fraction:
        return _form(self.n, a, b)

    def basis_name(self, g: int) -> str:
        m = self.m
        if g < m:
            return f"e{g + 1}"
        if g < 2 * m:
            return f"f{g - m + 1}"
        return "e0"

    def vector(self, coeffs: dict[int, Fraction]) -> "CliffordElement":
        return CliffordElement(self, {1 << g: Fraction(c) for g, c in coeffs.items() if c})

    def gen(self, g: int) -> "CliffordElement":
        return CliffordElement(self, {1 << g: Fraction(1)})

    def one(self) -> "CliffordElement":
        return CliffordElement(self, {0: Fraction(1)})

    def monomial(self, mask: int) -> "CliffordElement":
        return CliffordElement(self, {mask: Fraction(1)})

    def even_monomials(self) -> list[int]:
        return [mask for mask in range(1 << self.n) if bin(mask).count("1") % 2 == 0]

    @property
    def spinor_dim(self) -> int:
        return 1 << self.m


@lru_cache(maxsize=None)
def _form(n: int, a: int, b: int) -> Fraction:
    m = n // 2
    if a > b:
        a, b = b, a
    if a < m and b == a + m:
        return HALF
    if n % 2 and a == b == 2 * m:
        return Fraction(1)
    return Fraction(0)


@lru_cache(maxsize=None)
def _mono_gen(n: int, mask: int, g: int) -> tuple[tuple[int, Fraction], ...]:
    """Straighten ``v_mask * v_g`` into increasing monomials."""
    if mask == 0:
        return ((1 << g, Fraction(1)),)
    top = mask.bit_length() - 1
    rest = mask ^ (1 << top)
    if top < g:
        return ((mask | (1 << g), Fraction(1)),)
    out: dict[int, Fraction] = {}
    if top == g:
        c = _form(n, g, g)
        if c:
            out[rest] = c
        return tuple(out.items())
    # v_rest v_top v_g = -(v_rest v_g) v_top + 2B(top, g) v_rest
    for mk, c in _mono_gen(n, rest, g):
        # every index in mk is below top, so appending v_top is free
        key = mk | (1 << top)
        out[key] = out.get(key, 0) - c
    b = _form(n, top, g)
    if b:
        out[rest] = out.get(rest, 0) + 2 * b
    return tuple((k, v) for k, v in out.items() if v)


@lru_cache(maxsize=None)
def _mono_mono(n: int, a: int, b: int) -> tuple[tuple[int, Fraction], ...]:
    cur: dict[int, Fraction] = {a: Fraction(1)}
    g = 0
    while b >> g:
        if (b >> g) & 1:
            nxt: dict[int, Fraction] = {}
            for mk, c in cur.items():
                for mk2, c2 in _mono_gen(n, mk, g):
                    v = nxt.get(mk2, 0) + c * c2
                    if v:
                        nxt[mk2] = v
                    else:
                        nxt.pop(mk2, None)
            cur = nxt
        g += 1
    return tuple(cur.items())


class CliffordElement:
    """Element of the Clifford algebra as ``{monomial bitmask: Fraction}``."""

    __slots__ = ("space", "terms")

    def __init__(self, space: QuadSpace, terms: dict[int, Fraction] | None = None):
        self.space = space
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    def _check(self, other: "CliffordElement"):
        if other.space != self.space:
            raise ValueError("Clifford elements over different quadratic spaces")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        vec_axpy(t, 1, other.terms)
        return CliffordElement(self.space, t)

    def __sub__(self, other):
        self._check(other)
        t = dict(self.terms)
        vec_axpy(t, -1, other.terms)
        return CliffordElement(self.space, t)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "CliffordElement":
        return CliffordElement(self.space, vec_scale(Fraction(c), self.terms))

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            return self.scale(other)
        return clifford_product(self, other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, CliffordElement) and self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def parity(self) -> Optional[int]:
        """0 or 1 for homogeneous elements, None for mixed ones (zero is even)."""
        ps = {bin(k).count("1") % 2 for k in self.terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            name = "*".join(self.space.basis_name(g) for g in range(self.space.n) if k >> g & 1) or "1"
            parts.append(f"{self.terms[k]}*{name}")
        return " + ".join(parts)


def clifford_product(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    a._check(b)
    n = a.space.n
    out: dict[int, Fraction] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            for k, c in _mono_mono(n, ka, kb):
                v = out.get(k, 0) + ca * cb * c
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    return CliffordElement(a.space, out)


def wedge_product_embedding(space: QuadSpace, vectors: Sequence[CliffordElement]) -> CliffordElement:
    """Antisymmetrised product ``v_1 ^ ... ^ v_r`` inside the Clifford algebra,
    via ``v ^ X = (vX + (-1)^r Xv) / 2`` for ``X`` of degree ``r``."""
    x = space.one()
    for r, v in enumerate(reversed(vectors)):
        x = (v * x + (x * v).scale((-1) ** r)).scale(HALF)
    return x


# spinor module


def _popcount_below(mask: int, i: int) -> int:
    return bin(mask & ((1 << i) - 1)).count("1")


def act_generator(space: QuadSpace, g: int, s: int) -> Optional[tuple[int, int]]:
    """Action of a basis vector on the spinor basis element ``s``: ``(image, sign)`` or None."""
    m = space.m
    if g < m:
        if s >> g & 1:
            return None
        return s | (1 << g), (-1) ** _popcount_below(s, g)
    if g < 2 * m:
        i = g - m
        if not s >> i & 1:
            return None
        return s ^ (1 << i), (-1) ** _popcount_below(s, i)
    return s, (-1) ** bin(s).count("1")


@lru_cache(maxsize=None)
def _act_mono(n: int, mask: int, s: int) -> Optional[tuple[int, int]]:
    space = QuadSpace(n)
    sign = 1
    # v_{g1} ... v_{gr} acts with the last generator first
    for g in reversed([g for g in range(n) if mask >> g & 1]):
        r = act_generator(space, g, s)
        if r is None:
            return None
        s, sg = r
        sign *= sg
    return s, sign


def act(a: CliffordElement, vec: dict[int, Fraction]) -> dict[int, Fraction]:
    """Apply a Clifford element to a spinor ``{basis mask: coefficient}``."""
    out: dict[int, Fraction] = {}
    n = a.space.n
    for k, c in a.terms.items():
        for s, cs in vec.items():
            r = _act_mono(n, k, s)
            if r is None:
                continue
            t, sign = r
            v = out.get(t, 0) + sign * c * cs
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


def action_matrix(a: CliffordElement, domain: Sequence[int]) -> dict[tuple[int, int], Fraction]:
    """Matrix entries ``{(row, col): value}`` of ``a`` on the given spinor basis columns."""
    out = {}
    for col in domain:
        for row, v in act(a, {col: Fraction(1)}).items():
            out[(row, col)] = v
    return out


@dataclass
class SpinorModule:
    space: QuadSpace

    @property
    def basis(self) -> list[int]:
        return list(range(1 << self.space.m))

    def half(self, eps: int) -> list[int]:
        """Basis of ``S_+`` (eps=+1, even degree) or ``S_-`` (eps=-1)."""
        p = 0 if eps > 0 else 1
        return [s for s in self.basis if bin(s).count("1") % 2 == p]

    def pieces(self) -> list[list[int]]:
        if self.space.odd:
            return [self.basis]
        return [self.half(1), self.half(-1)]


def spinor_pairing(space: QuadSpace, s: dict[int, Fraction], t: dict[int, Fraction]) -> Fraction:
    """Top-degree coefficient of ``rev(s) ^ t`` in ``Lambda^* E_1``."""
    m = space.m
    top = (1 << m) - 1
    total = Fraction(0)
    for a, ca in s.items():
        d = bin(a).count("1")
        rev = (-1) ** (d * (d - 1) // 2)
        for b, cb in t.items():
            if a & b or (a | b) != top:
                continue
            # sign of e_a ^ e_b relative to e_top
            sign = 1
            for i in range(m):
                if b >> i & 1:
                    sign *= (-1) ** bin(a >> (i + 1)).count("1")
            total += rev * sign * ca * cb
    return total


def pairing_signs(space: QuadSpace) -> dict[str, set[int]]:
    """Signs ``c`` with ``<x s, t> = c <s, x t>`` observed over basis vectors ``x`` and spinors."""
    mod = SpinorModule(space)
    out: dict[str, set[int]] = {}
    for g in range(space.n):
        x = space.gen(g)
        signs = set()
        for s in mod.basis:
            for t in mod.basis:
                lhs = spinor_pairing(space, act(x, {s: Fraction(1)}), {t: Fraction(1)})
                rhs = spinor_pairing(space, {s: Fraction(1)}, act(x, {t: Fraction(1)}))
                if lhs == 0 and rhs == 0:
                    continue
                if rhs == 0 or lhs == 0:
                    signs.add(0)
                else:
                    signs.add(int(lhs / rhs))
        out[space.basis_name(g)] = signs
    return out


# even part structure


@dataclass
class EvenStructureReport:
    n: int
    dim_even: int
    target_dims: list[int]
    action_rank: int
    relations_ok: bool
    blocks_preserved: bool
    multiplicative: bool
    matrix_units_hit: int
    matrix_units_total: int

    @property
    def passed(self) -> bool:
        return (
            self.relations_ok
            and self.blocks_preserved
            and self.multiplicative
            and self.dim_even == sum(d * d for d in self.target_dims)
            and self.action_rank == self.dim_even
            and self.matrix_units_hit == self.matrix_units_total
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim_even": self.dim_even,
            "target_dims": self.target_dims,
            "action_rank": self.action_rank,
            "relations_ok": self.relations_ok,
            "blocks_preserved": self.blocks_preserved,
            "multiplicative": self.multiplicative,
            "matrix_units": [self.matrix_units_hit, self.matrix_units_total],
            "passed": self.passed,
        }


def _guard(n: int) -> None:
    if n > MAX_DIM:
        raise DimensionGuard(f"dimension {n} exceeds the guard {MAX_DIM}")


def check_relations(space: QuadSpace) -> bool:
    """``xy + yx = 2B(x,y)`` for basis vectors, both in the algebra and on spinors."""
    mod = SpinorModule(space)
    for a in range(space.n):
        for b in range(space.n):
            x, y = space.gen(a), space.gen(b)
            lhs = x * y + y * x
            rhs = space.one().scale(2 * space.form(a, b))
            if lhs != rhs:
                return False
            for s in mod.basis:
                v = {s: Fraction(1)}
                w = act(x, act(y, v))
                vec_axpy(w, 1, act(y, act(x, v)))
                if w != vec_scale(2 * space.form(a, b), v):
                    return False
    return True


def verify_even_structure(space: QuadSpace, samples: int = 40, seed: int = 0) -> EvenStructureReport:
    """Certify ``B^0 -> prod End(S_eps)`` is an algebra isomorphism.

    Checks the defining relations, that the even part preserves the pieces,
    multiplicativity on random pairs of monomials, that the images of the
    ``2^{n-1}`` even monomials are independent, and that every matrix unit
    has an explicit preimage.
    """
    _guard(space.n)
    mod = SpinorModule(space)
    pieces = mod.pieces()
    piece_of = {s: i for i, p in enumerate(pieces) for s in p}
    evens = space.even_monomials()
    basis = EchelonBasis(track=True)
    blocks_ok = True
    for mask in evens:
        mat = action_matrix(space.monomial(mask), mod.basis)
        if any(piece_of[r] != piece_of[c] for r, c in mat):
            blocks_ok = False
        basis.add(mat)
    rng = random.Random(seed)
    mult_ok = True
    for _ in range(samples):
        a, b = space.monomial(rng.choice(evens)), space.monomial(rng.choice(evens))
        ab = action_matrix(a * b, mod.basis)
        comp = {}
        bm = action_matrix(b, mod.basis)
        for (r, c), v in bm.items():
            for r2, v2 in act(a, {r: v}).items():
                comp[(r2, c)] = comp.get((r2, c), 0) + v2
        if {k: v for k, v in comp.items() if v} != ab:
            mult_ok = False
            break
    hit = 0
    total = 0
    for p in pieces:
        for r in p:
            for c in p:
                total += 1
                unit = {(r, c): Fraction(1)}
                combo = basis.express(unit)
                if combo is None:
                    continue
                elt = CliffordElement(space, {evens[i]: x for i, x in combo.items()})
                if action_matrix(elt, mod.basis) == unit:
                    hit += 1
    return EvenStructureReport(
        space.n,
        len(evens),
        [len(p) for p in pieces],
        basis.rank,
        check_relations(space),
        blocks_ok,
        mult_ok,
        hit,
        total,
    )


# filtrations attached to an isotropic subspace U of E_1


def _u_vectors(space: QuadSpace, k: int, u: Optional[Sequence[dict[int, Fraction]]]) -> list[CliffordElement]:
    m = space.m
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= {m}")
    if u is None:
        return [space.gen(space.e(i)) for i in range(1, k + 1)]
    vecs = []
    for coeffs in u:
        if any(g >= m for g in coeffs):
            raise ValueError("U must lie inside E_1")
        vecs.append(space.vector(coeffs))
    if len(vecs) != k or EchelonBasis().extend(v.terms for v in vecs) != k:
        raise ValueError(f"U must be spanned by {k} independent vectors")
    for a in vecs:
        for b in vecs:
            if not (a * b + b * a).is_zero():
                raise ValueError("U is not isotropic")
    return vecs


def u_perp_basis(space: QuadSpace, u: Sequence[CliffordElement]) -> list[CliffordElement]:
    """Basis of the orthogonal complement of ``U`` in ``E``."""
    n = space.n
    rows = []
    for v in u:
        row = {}
        for g in range(n):
            val = sum((c * space.form(k.bit_length() - 1, g) for k, c in v.terms.items()), Fraction(0))
            if val:
                row[g] = val
        rows.append(row)
    # null space of the k x n system
    eb = EchelonBasis()
    eb.extend(rows)
    pivots = set(eb.rows)
    out = []
    for free in range(n):
        if free in pivots:
            continue
        x = {free: Fraction(1)}
        for p in sorted(pivots, reverse=True):
            row = eb.rows[p]
            s = sum((c * x.get(g, 0) for g, c in row.items() if g != p), Fraction(0))
            if s:
                x[p] = -s
        out.append(space.vector(x))
    return out


def spinor_u_dim(space: QuadSpace, k: int, eps: int) -> int:
    """Dimension of the (half-)spinor module of ``U^perp/U``."""
    m = space.m
    if space.odd:
        return 1 << (m - k)
    if m == k:
        return 1 if eps > 0 else 0
    return 1 << (m - k - 1)


@dataclass
class FiltrationReport:
    n: int
    k: int
    eps: int
    dims: list[int]
    quotient_dims: list[int]
    expected_quotient_dims: list[int]
    chain_ok: bool
    invariant: bool
    radical_shifts: bool

    @property
    def passed(self) -> bool:
        return self.chain_ok and self.invariant and self.radical_shifts and self.quotient_dims == self.expected_quotient_dims

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "eps": self.eps,
            "dims": self.dims,
            "quotient_dims": self.quotient_dims,
            "expected_quotient_dims": self.expected_quotient_dims,
            "chain_ok": self.chain_ok,
            "invariant": self.invariant,
            "radical_shifts": self.radical_shifts,
            "passed": self.passed,
        }


def _filtration_piece(space: QuadSpace, u: Sequence[CliffordElement], t: int, source: Sequence[int]) -> list[dict]:
    vecs = []
    for idx in combinations(range(len(u)), t):
        x = space.one()
        for i in idx:
            x = x * u[i]
        for s in source:
            v = act(x, {s: Fraction(1)})
            if v:
                vecs.append(v)
    return vecs


def _spinor_piece(space: QuadSpace, eps: int) -> list[int]:
    mod = SpinorModule(space)
    return mod.basis if space.odd else mod.half(eps)


def radical_filtration(
    space: QuadSpace,
    k: int,
    eps: int = 1,
    u: Optional[Sequence[dict[int, Fraction]]] = None,
) -> FiltrationReport:
    """The filtration ``F_t = Lambda^t U . S_{(-1)^t eps}`` of ``S_eps``.

    ``eps`` is ignored in odd dimension.  ``U`` defaults to the span of
    ``e_1..e_k``; otherwise pass ``k`` vectors of ``E_1`` as coefficient dicts.
    """
    _guard(space.n)
    if space.odd:
        eps = 0
    uvec = _u_vectors(space, k, u)
    pieces = []
    for t in range(k + 2):
        src = _spinor_piece(space, eps * (-1) ** t) if eps else _spinor_piece(space, 1)
        vecs = _filtration_piece(space, uvec, t, src) if t <= k else []
        eb = EchelonBasis()
        eb.extend(vecs)
        pieces.append((eb, vecs))
    dims = [eb.rank for eb, _ in pieces]
    top = _spinor_piece(space, eps if eps else 1)
    chain_ok = dims[0] == len(top) and dims[k + 1] == 0
    for t in range(k + 1):
        eb, _ = pieces[t]
        if not all(eb.contains(v) for v in pieces[t + 1][1]):
            chain_ok = False
    quotients = [dims[t] - dims[t + 1] for t in range(k + 1)]
    expected = [spinor_u_dim(space, k, (eps or 1) * (-1) ** t) * comb(k, t) for t in range(k + 1)]

    perp = u_perp_basis(space, uvec)
    gens = [a * b for i, a in enumerate(perp) for b in perp[i:]]
    invariant = True
    for t in range(k + 1):
        eb, vecs = pieces[t]
        for g in gens:
            if not all(eb.contains(act(g, v)) for v in vecs):
                invariant = False
                break
    # the radical U of U^perp moves F_t into the next step of the opposite piece
    shifts = True
    if eps:
        other = []
        for t in range(k + 2):
            src = _spinor_piece(space, -eps * (-1) ** t)
            vecs = _filtration_piece(space, uvec, t, src) if t <= k else []
            eb = EchelonBasis()
            eb.extend(vecs)
            other.append(eb)
    else:
        other = [eb for eb, _ in pieces]
    for t in range(k + 1):
        _, vecs = pieces[t]
        for x in uvec:
            if not all(other[t + 1].contains(act(x, v)) for v in vecs):
                shifts = False
    return FiltrationReport(space.n, k, eps, dims[: k + 1], quotients, expected, chain_ok, invariant, shifts)


# independence of the splitting


def _lambda_even_perp(space: QuadSpace, perp: Sequence[CliffordElement]) -> dict[int, list[CliffordElement]]:
    """``Lambda^{2s} U^perp`` inside the Clifford algebra, keyed by ``s``."""
    out: dict[int, list[CliffordElement]] = {}
    for r in range(0, len(perp) + 1, 2):
        out[r // 2] = [wedge_product_embedding(space, [perp[i] for i in idx]) for idx in combinations(range(len(perp)), r)]
    return out


def _psi(space: QuadSpace, a: CliffordElement, lifts: Sequence[CliffordElement], k: int) -> dict:
    """``a`` composed with the embedding of ``Lambda^*(E_1/U)`` given by ``lifts``."""
    m = space.m
    out = {}
    for j in range(1 << (m - k)):
        idx = [i for i in range(m - k) if j >> i & 1]
        v = {0: Fraction(1)}
        for i in reversed(idx):
            v = act(lifts[i], v)
        for row, c in act(a, v).items():
            out[(row, j)] = c
    return out


@dataclass
class SplittingReport:
    n: int
    k: int
    isomorphism: bool
    filtration_equal: list[bool]
    decomposition_equal: list[bool]

    @property
    def independent(self) -> bool:
        return self.isomorphism and all(self.filtration_equal)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "isomorphism": self.isomorphism,
            "filtration_equal": self.filtration_equal,
            "decomposition_equal": self.decomposition_equal,
        }


def splitting_report(space: QuadSpace, k: int, phi: Sequence[dict[int, Fraction]]) -> SplittingReport:
    """Compare the transported filtrations for the standard splitting and the
    one twisted by ``phi``.

    ``phi[i]`` gives ``phi(e_{k+1+i})`` as coefficients over ``e_1..e_k``.
    """
    _guard(space.n)
    m = space.m
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= {m}")
    if len(phi) != m - k:
        raise ValueError(f"phi needs {m - k} images")
    uvec = _u_vectors(space, k, None)
    perp = u_perp_basis(space, uvec)
    std = [space.gen(space.e(k + 1 + i)) for i in range(m - k)]
    twisted = []
    for i, img in enumerate(phi):
        if any(not 0 <= g < k for g in img):
            raise ValueError("phi must take values in U")
        twisted.append(std[i] + space.vector(img))
    pieces = _lambda_even_perp(space, perp)
    top = max(pieces)
    iso_basis = EchelonBasis()
    img0 = {s: [_psi(space, a, std, k) for a in pieces[s]] for s in pieces}
    imgp = {s: [_psi(space, a, twisted, k) for a in pieces[s]] for s in pieces}
    iso_basis.extend(v for s in pieces for v in imgp[s])
    total = sum(len(p) for p in pieces.values())
    filt = []
    for t in range(top + 1):
        a = [v for s in pieces if s >= t for v in img0[s]]
        b = [v for s in pieces if s >= t for v in imgp[s]]
        filt.append(same_span(a, b))
    deco = [same_span(img0[s], imgp[s]) for s in sorted(pieces)]
    return SplittingReport(space.n, k, iso_basis.rank == total, filt, deco)


def splitting_independence(space: QuadSpace, k: int, phi: Sequence[dict[int, Fraction]]) -> bool:
    """True when the transported filtration does not depend on the splitting."""
    return splitting_report(space, k, phi).independent


def random_phi(space: QuadSpace, k: int, rng: random.Random, bound: int = 5) -> list[dict[int, Fraction]]:
    """A random rational linear map ``E_1' -> U``."""
    out = []
    for _ in range(space.m - k):
        img = {}
        for g in range(k):
            c = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            if c:
                img[g] = c
        out.append(img)
    return out


@dataclass
class CliffordSuiteResult:
    n: int
    even: EvenStructureReport
    filtrations: list[FiltrationReport] = field(default_factory=list)
    splittings: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.even.passed and all(f.passed for f in self.filtrations) and all(ok == tot for _, ok, tot in self.splittings)


def clifford_suite(n: int, samples: int = 20, seed: int = 0) -> CliffordSuiteResult:
    """Run every structural check at dimension ``n``."""
    space = QuadSpace(n)
    res = CliffordSuiteResult(n, verify_even_structure(space, seed=seed))
    rng = random.Random(seed * 1000 + n)
    for k in range(0, space.m + 1):
        for eps in ((1,) if space.odd else (1, -1)):
            res.filtrations.append(radical_filtration(space, k, eps))
        if 1 <= k:
            ok = sum(1 for _ in range(samples) if splitting_independence(space, k, random_phi(space, k, rng)))
            res.splittings.append((k, ok, samples))
    return res
