"""Homogeneous spaces G/P and their equivariant bundles.

A bundle is described by a highest weight of the Levi factor
``GL_k x L'``: a nonincreasing GL part and a dominant weight of the
semisimple part ``L'``.  All weights are doubled integer tuples.

=========  ================  ===================  ===============
family     ambient group     Levi                 dimension
=========  ================  ===================  ===============
gr(k,n)    GL_n  (type A)    GL_k x GL_{n-k}      k(n-k)
sgr(m)     Sp_{2m} (C_m)     GL_2 x Sp_{2m-4}     4m-5
ogr(m)     Spin_{2m+1} (B_m) GL_2 x Spin_{2m-3}   4m-5
quadric(n) Spin_n (B_m)      GL_1 x Spin_{n-2}    n-2
=========  ================  ===================  ===============

For ``gr`` the semisimple slot holds the weight ``gamma`` of
``Sigma^gamma U^perp`` and the embedding into the flag variety is the
concatenation ``(beta, gamma)``.  For the isotropic families it is the
epsilon-coordinate vector ``(GL part, L' part)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterator, Mapping

from .bbw import CohomologyTable, bundle_cohomology, euler_characteristic
from .repchar import (
    dual_weight_doubled,
    exterior_power_decompose,
    standard_weights,
    tensor_decompose_doubled,
    weyl_dim_doubled,
)
from .rootsys import RootSystem, is_dominant_doubled

FAMILIES = ("gr", "sgr", "ogr", "quadric")


class BundleError(ValueError):
    """Invalid bundle data or an expression that does not parse."""


@dataclass(frozen=True)
class Space:
    family: str
    n: int
    k: int = 2

    def __post_init__(self):
        f, n, k = self.family, self.n, self.k
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}")
        if f == "gr":
            if not (1 <= k < n):
                raise ValueError(f"Gr({k},{n}) needs 1 <= k < n")
        elif f == "sgr":
            if k != 2 or n % 2 or n < 4:
                raise ValueError("SGr(2,2m) needs m >= 2")
        elif f == "ogr":
            if k != 2 or n % 2 == 0 or n < 5:
                raise ValueError("OGr(2,2m+1) needs m >= 2")
        else:
            if k != 1 or n % 2 == 0 or n < 3:
                raise ValueError("odd quadrics need odd n >= 3")

    @classmethod
    def gr(cls, n: int, k: int = 2) -> "Space":
        return cls("gr", n, k)

    @classmethod
    def sgr(cls, m: int) -> "Space":
        return cls("sgr", 2 * m, 2)

    @classmethod
    def ogr(cls, m: int) -> "Space":
        return cls("ogr", 2 * m + 1, 2)

    @classmethod
    def quadric(cls, n: int) -> "Space":
        """The quadric hypersurface in ``P^{n-1}``; it has dimension ``n-2``."""
        return cls("quadric", n, 1)

    def __str__(self):
        return {
            "gr": f"Gr({self.k},{self.n})",
            "sgr": f"SGr(2,{self.n})",
            "ogr": f"OGr(2,{self.n})",
            "quadric": f"Q^{self.n - 2}",
        }[self.family]

    @property
    def m(self) -> int:
        return self.n // 2

    @cached_property
    def ambient(self) -> RootSystem:
        if self.family == "gr":
            return RootSystem("A", self.n)
        if self.family == "sgr":
            return RootSystem("C", self.m)
        return RootSystem("B", self.m)

    @cached_property
    def levi_ss(self) -> RootSystem:
        if self.family == "gr":
            return RootSystem("A", self.n - self.k)
        if self.family == "sgr":
            return RootSystem("C", self.m - 2)
        if self.family == "ogr":
            return RootSystem("B", self.m - 2)
        return RootSystem("B", self.m - 1)

    @cached_property
    def gl(self) -> RootSystem:
        return RootSystem("A", self.k)

    @property
    def has_spinor(self) -> bool:
        return self.family in ("ogr", "quadric")

    @cached_property
    def dimension(self) -> int:
        return self.ambient.num_positive_roots - self.gl.num_positive_roots - self.levi_ss.num_positive_roots

    @property
    def canonical_twist(self) -> int:
        """``t`` with ``omega_X = O(t)``."""
        return {
            "gr": -self.n,
            "sgr": 1 - 2 * self.m,
            "ogr": 2 - 2 * self.m,
            "quadric": -(self.n - 2),
        }[self.family]

    @property
    def rank_k0(self) -> int:
        """Number of Schubert cells, ``|W| / |W_L|``."""
        wl = factorial(self.k) * self.levi_ss.weyl_order
        return self.ambient.weyl_order // wl

    def embed(self, b: "IrreducibleBundle") -> tuple[int, ...]:
        if b.space != self:
            raise BundleError(f"bundle on {b.space} used on {self}")
        return b.gl + b.ss

    # vocabulary

    def irreducible(self, gl, ss=None) -> "IrreducibleBundle":
        if ss is None:
            ss = (0,) * self.levi_ss.rank
        return IrreducibleBundle(self, tuple(gl), tuple(ss))

    def O(self, t: int = 0) -> "BundleSum":
        return BundleSum.of(self.irreducible((2 * t,) * self.k))

    def sym(self, l: int, t: int = 0) -> "BundleSum":
        """``S^l U^*(t)``."""
        if l < 0:
            raise BundleError("negative symmetric power")
        gl = (2 * (t + l),) + (2 * t,) * (self.k - 1)
        return BundleSum.of(self.irreducible(gl))

    def U_dual(self, t: int = 0) -> "BundleSum":
        return self.sym(1, t)

    def U(self, t: int = 0) -> "BundleSum":
        gl = (2 * t,) * (self.k - 1) + (2 * t - 2,)
        return BundleSum.of(self.irreducible(gl))

    def sigma(self, gl_coords, ss_coords=None, t: int = 0) -> "BundleSum":
        """``Sigma^{gl}U^* (x) (L' part)`` twisted by ``O(t)``; coordinates may be half-integers."""
        gl = tuple(_double(x) + 2 * t for x in gl_coords)
        ss = None if ss_coords is None else tuple(_double(x) for x in ss_coords)
        return BundleSum.of(self.irreducible(gl, ss))

    def spinor(self, t: int = 0) -> "BundleSum":
        """The spinor bundle ``S(t)``; orthogonal families only."""
        if not self.has_spinor:
            raise BundleError(f"no spinor bundle on {self}")
        gl = (2 * t + 1,) * self.k
        ss = (1,) * self.levi_ss.rank
        return BundleSum.of(self.irreducible(gl, ss))

    def trivial(self, r: int) -> "BundleSum":
        return self.O(0).scaled(r)

    def wedge_uperp(self, i: int) -> "BundleSum":
        """``Lambda^i U^perp``.

        On ``gr`` this is irreducible.  On the isotropic families it is the
        class of the associated graded ``sum_{a+b=i} Lambda^a U (x)
        Lambda^b(U^perp/U)``, which has the same Euler pairings.
        """
        if self.family == "gr":
            r = self.n - self.k
            if not 0 <= i <= r:
                return BundleSum.zero(self)
            return BundleSum.of(self.irreducible((0,) * self.k, (2,) * i + (0,) * (r - i)))
        std = standard_weights(self.levi_ss)
        if self.levi_ss.kind == "B" and self.levi_ss.rank == 0:
            std = [()]
        terms: dict = {}
        for a in range(0, min(i, self.k) + 1):
            b = i - a
            if b > len(std):
                continue
            # Lambda^a U has GL weight (0^{k-a}, (-1)^a)
            gl = (0,) * (self.k - a) + (-2,) * a
            for w, c in exterior_power_decompose(self.levi_ss, std, b).items():
                irr = self.irreducible(gl, w)
                terms[irr] = terms.get(irr, 0) + c
        return BundleSum(self, terms)

    def wedge_quotient(self, i: int) -> "BundleSum":
        """``Lambda^i (W/U)``, the dual of ``Lambda^i U^perp``."""
        return dual_bundle(self, self.wedge_uperp(i))

    def parse(self, text: str) -> "BundleSum":
        return parse_bundle(self, text)


def _double(x) -> int:
    f = Fraction(x) * 2
    if f.denominator != 1:
        raise BundleError(f"coordinate {x} is not in (1/2)Z")
    return int(f)


@dataclass(frozen=True, order=False)
class IrreducibleBundle:
    """Irreducible equivariant bundle given by a Levi highest weight (doubled)."""

    space: Space
    gl: tuple[int, ...]
    ss: tuple[int, ...]

    def __post_init__(self):
        sp = self.space
        object.__setattr__(self, "gl", tuple(int(x) for x in self.gl))
        object.__setattr__(self, "ss", tuple(int(x) for x in self.ss))
        if len(self.gl) != sp.k or len(self.ss) != sp.levi_ss.rank:
            raise BundleError(f"weight shape ({len(self.gl)},{len(self.ss)}) does not match {sp}")
        if any(self.gl[i] < self.gl[i + 1] for i in range(len(self.gl) - 1)):
            raise BundleError(f"GL part {self.gl} is not nonincreasing")
        if not is_dominant_doubled(sp.levi_ss, self.ss):
            raise BundleError(f"semisimple part {self.ss} is not dominant for {sp.levi_ss}")
        try:
            sp.ambient.check_doubled(self.gl + self.ss)
        except ValueError as e:
            raise BundleError(f"weight {self.gl + self.ss} is not a weight of {sp.ambient}: {e}") from None
        if sp.family == "gr" and any(x % 2 for x in self.ss):
            raise BundleError("U^perp weights must be integral")

    @property
    def key(self):
        return (self.gl, self.ss)

    def __lt__(self, other):
        return self.key < other.key

    @cached_property
    def rank(self) -> int:
        gl = self.gl
        s = gl[0] % 2 if gl else 0
        return weyl_dim_doubled(self.space.gl, tuple(x - s for x in gl)) * weyl_dim_doubled(self.space.levi_ss, self.ss)

    @property
    def det_charge(self) -> Fraction:
        """``c`` with ``det = O(c)``."""
        return Fraction(self.rank * sum(self.gl), 2 * self.space.k)

    def twist(self, t: int) -> "IrreducibleBundle":
        return IrreducibleBundle(self.space, tuple(x + 2 * t for x in self.gl), self.ss)

    @property
    def name(self) -> str:
        return bundle_name(self)

    def __str__(self):
        return self.name


def _fmt(d: int) -> str:
    return str(d // 2) if d % 2 == 0 else f"{d}/2"


def bundle_name(b: IrreducibleBundle) -> str:
    sp = b.space
    gl, ss = b.gl, b.ss
    t2 = gl[-1]
    t = t2 // 2
    tw = f"({t})" if t else ""
    if not any(ss):
        if all(x % 2 == 0 for x in gl):
            if all(x == t2 for x in gl):
                return f"O{tw}"
            if all(x == t2 for x in gl[1:]):
                l = (gl[0] - t2) // 2
                return f"U*{tw}" if l == 1 else f"Sym^{l} U*{tw}"
    elif sp.family == "gr" and all(x == t2 for x in gl):
        i = sum(1 for x in ss if x == 2)
        if ss == (2,) * i + (0,) * (len(ss) - i):
            return f"Wedge^{i} Uperp{tw}"
        i = sum(1 for x in ss if x == -2)
        if ss == (0,) * (len(ss) - i) + (-2,) * i:
            return f"Wedge^{i} Q{tw}"
    if sp.has_spinor and all(x == 1 for x in ss) and len(set(gl)) == 1 and gl[0] % 2:
        s = (gl[0] - 1) // 2
        return f"Spin({s})" if s else "Spin"
    inner = ",".join(_fmt(x) for x in gl)
    if any(ss):
        inner += ";" + ",".join(_fmt(x) for x in ss)
    return f"Sigma[{inner}]"


class BundleSum(Mapping):
    """Formal integer combination of irreducible bundles on one space."""

    __slots__ = ("space", "_terms", "_hash")

    def __init__(self, space: Space, terms: Mapping[IrreducibleBundle, int] | None = None):
        self.space = space
        clean = {}
        for b, c in (terms or {}).items():
            if b.space != space:
                raise BundleError(f"bundle on {b.space} added to a sum on {space}")
            if c:
                clean[b] = clean.get(b, 0) + c
        self._terms = tuple(sorted(((b, c) for b, c in clean.items() if c), key=lambda t: t[0].key))
        self._hash = None

    @classmethod
    def of(cls, b: IrreducibleBundle, c: int = 1) -> "BundleSum":
        return cls(b.space, {b: c})

    @classmethod
    def zero(cls, space: Space) -> "BundleSum":
        return cls(space)

    def __getitem__(self, b):
        for x, c in self._terms:
            if x == b:
                return c
        raise KeyError(b)

    def __iter__(self) -> Iterator[IrreducibleBundle]:
        return (b for b, _ in self._terms)

    def __len__(self):
        return len(self._terms)

    def items(self):
        return list(self._terms)

    def __eq__(self, other):
        if not isinstance(other, BundleSum):
            return NotImplemented
        return self.space == other.space and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.space, self._terms))
        return self._hash

    def _combine(self, other: "BundleSum", sign: int) -> "BundleSum":
        if other.space != self.space:
            raise BundleError(f"cannot combine bundles on {self.space} and {other.space}")
        acc = dict(self._terms)
        for b, c in other._terms:
            acc[b] = acc.get(b, 0) + sign * c
        return BundleSum(self.space, acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c: int) -> "BundleSum":
        return BundleSum(self.space, {b: c * x for b, x in self._terms})

    def __rmul__(self, c: int):
        return self.scaled(c)

    def twist(self, t: int) -> "BundleSum":
        return BundleSum(self.space, {b.twist(t): c for b, c in self._terms})

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def rank(self) -> int:
        return sum(c * b.rank for b, c in self._terms)

    @property
    def det_charge(self) -> Fraction:
        return sum((c * b.det_charge for b, c in self._terms), Fraction(0))

    def is_effective(self) -> bool:
        return all(c > 0 for _, c in self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for b, c in self._terms:
            s = b.name if abs(c) == 1 else f"{abs(c)}*{b.name}"
            parts.append(("- " if c < 0 else "+ ") + s)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self):
        return f"BundleSum({self.space}, {self})"


# tensor products and duals


def _gl_tensor(k: int, a: tuple[int, ...], b: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    # shift half-integral GL weights to integral ones, decompose, shift back
    sa, sb = a[0] % 2, b[0] % 2
    res = tensor_decompose_doubled(RootSystem("A", k), tuple(x - sa for x in a), tuple(x - sb for x in b))
    return {tuple(x + sa + sb for x in w): c for w, c in res.items()}


@lru_cache(maxsize=None)
def _tensor_irr(e: IrreducibleBundle, f: IrreducibleBundle) -> tuple[tuple[IrreducibleBundle, int], ...]:
    sp = e.space
    gl = _gl_tensor(sp.k, e.gl, f.gl)
    if sp.levi_ss.rank == 0:
        ss = {(): 1}
    else:
        ss = tensor_decompose_doubled(sp.levi_ss, e.ss, f.ss)
    out = []
    for g, cg in gl.items():
        for s, cs in ss.items():
            out.append((IrreducibleBundle(sp, g, s), cg * cs))
    return tuple(out)


def tensor_bundles(space: Space, e: BundleSum, f: BundleSum) -> BundleSum:
    """Bilinear tensor product, decomposed factor by factor on the Levi."""
    if e.space != space or f.space != space:
        raise BundleError("tensor of bundles on different spaces")
    acc: dict = {}
    for a, ca in e.items():
        for b, cb in f.items():
            x, y = (a, b) if a.key <= b.key else (b, a)
            for irr, c in _tensor_irr(x, y):
                acc[irr] = acc.get(irr, 0) + ca * cb * c
    return BundleSum(space, acc)


@lru_cache(maxsize=None)
def _dual_irr(e: IrreducibleBundle) -> IrreducibleBundle:
    gl = tuple(-x for x in reversed(e.gl))
    ss = dual_weight_doubled(e.space.levi_ss, e.ss) if e.ss else ()
    return IrreducibleBundle(e.space, gl, ss)


def dual_bundle(space: Space, e: BundleSum) -> BundleSum:
    if e.space != space:
        raise BundleError("bundle lives on a different space")
    return BundleSum(space, {_dual_irr(b): c for b, c in e.items()})


# Ext and Euler pairing


@lru_cache(maxsize=None)
def _ext_irr(e: IrreducibleBundle, f: IrreducibleBundle) -> CohomologyTable:
    sp = e.space
    hom = tensor_bundles(sp, BundleSum.of(_dual_irr(e)), BundleSum.of(f))
    return bundle_cohomology(sp, hom)


@lru_cache(maxsize=None)
def _chi_irr(e: IrreducibleBundle, f: IrreducibleBundle) -> int:
    sp = e.space
    hom = tensor_bundles(sp, BundleSum.of(_dual_irr(e)), BundleSum.of(f))
    return euler_characteristic(sp, hom)


def ext(space: Space, e: BundleSum, f: BundleSum) -> CohomologyTable:
    """``Ext^*(E, F) = H^*(E^* (x) F)`` as a graded table."""
    if e.space != space or f.space != space:
        raise BundleError("ext of bundles on different spaces")
    table = CohomologyTable(space.ambient)
    for a, ca in e.items():
        for b, cb in f.items():
            if ca * cb < 0:
                raise ValueError("ext of virtual bundles is not defined; use chi")
            table = table + _ext_irr(a, b).scaled(ca * cb)
    return table


def chi(space: Space, e: BundleSum, f: BundleSum) -> int:
    """Euler pairing ``sum_p (-1)^p dim Ext^p(E, F)``, bilinear in classes."""
    if e.space != space or f.space != space:
        raise BundleError("chi of bundles on different spaces")
    return sum(ca * cb * _chi_irr(a, b) for a, ca in e.items() for b, cb in f.items())


def cohomology(space: Space, e: BundleSum) -> CohomologyTable:
    if e.space != space:
        raise BundleError("bundle lives on a different space")
    return bundle_cohomology(space, e)


def clear_caches() -> None:
    for fn in (_tensor_irr, _dual_irr, _ext_irr, _chi_irr):
        fn.cache_clear()


# bundle expressions

_TOKEN = re.compile(
    r"""
    (?P<num>\d+)
  | (?P<sym>Sym\^)
  | (?P<wedge>Wedge\^)
  | (?P<sigma>Sigma\[(?P<sigbody>[^\]]*)\])
  | (?P<uperp>Uperp)
  | (?P<spin>Spin)
  | (?P<bs>BS\*?)
  | (?P<udual>U\*)
  | (?P<u>U)
  | (?P<o>O)
  | (?P<w>W\*?)
  | (?P<q>Q)
  | (?P<tensor>\(x\)|⊗)
  | (?P<op>[-+*()])
    """,
    re.VERBOSE,
)


def _tokens(text: str) -> list[tuple[str, str]]:
    s = "".join(text.split())
    if not s:
        raise BundleError("empty bundle expression")
    pos = 0
    out = []
    while pos < len(s):
        mt = _TOKEN.match(s, pos)
        if mt is None:
            raise BundleError(f"unexpected input at {s[pos:]!r}")
        kind = mt.lastgroup
        if kind == "sigbody":
            kind = "sigma"
        if kind == "sigma":
            out.append(("sigma", mt.group("sigbody")))
        else:
            out.append((kind, mt.group(0)))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, space: Space, text: str):
        self.space = space
        self.toks = _tokens(text)
        self.i = 0

    def peek(self, kind=None, value=None):
        if self.i >= len(self.toks):
            return None
        k, v = self.toks[self.i]
        if kind and k != kind:
            return None
        if value and v != value:
            return None
        return self.toks[self.i]

    def take(self, kind, value=None):
        t = self.peek(kind, value)
        if t is None:
            got = self.toks[self.i][1] if self.i < len(self.toks) else "end of input"
            raise BundleError(f"expected {value or kind}, got {got!r}")
        self.i += 1
        return t[1]

    def integer(self) -> int:
        sign = 1
        if self.peek("op", "-"):
            self.i += 1
            sign = -1
        elif self.peek("op", "+"):
            self.i += 1
        return sign * int(self.take("num"))

    def parse(self) -> BundleSum:
        total = BundleSum.zero(self.space)
        sign = 1
        if self.peek("op", "-"):
            self.i += 1
            sign = -1
        elif self.peek("op", "+"):
            self.i += 1
        total = total + self.term().scaled(sign)
        while self.i < len(self.toks):
            op = self.take("op")
            if op not in "+-":
                raise BundleError(f"expected + or -, got {op!r}")
            total = total + self.term().scaled(1 if op == "+" else -1)
        return total

    def term(self) -> BundleSum:
        coef = 1
        if self.peek("num"):
            coef = int(self.take("num"))
            self.take("op", "*")
        acc = self.factor()
        while self.peek("tensor"):
            self.i += 1
            acc = tensor_bundles(self.space, acc, self.factor())
        return acc.scaled(coef)

    def factor(self) -> BundleSum:
        atom = self.atom()
        if self.peek("op", "("):
            self.i += 1
            t = self.integer()
            self.take("op", ")")
            atom = atom.twist(t)
        return atom

    def atom(self) -> BundleSum:
        sp = self.space
        t = self.peek()
        if t is None:
            raise BundleError("unexpected end of expression")
        kind, val = t
        self.i += 1
        if kind == "o":
            return sp.O()
        if kind == "udual":
            return sp.U_dual()
        if kind == "u":
            return sp.U()
        if kind == "uperp":
            return sp.wedge_uperp(1)
        if kind == "sym":
            l = int(self.take("num"))
            self.take("udual")
            return sp.sym(l)
        if kind == "wedge":
            i = int(self.take("num"))
            if self.peek("uperp"):
                self.i += 1
                return sp.wedge_uperp(i)
            if self.peek("q"):
                self.i += 1
                return sp.wedge_quotient(i)
            raise BundleError("Wedge^i must be followed by Uperp or Q")
        if kind == "sigma":
            return _parse_sigma(sp, val)
        if kind == "spin":
            return sp.spinor()
        if kind == "w":
            return sp.trivial(sp.n)
        if kind == "bs":
            if not sp.has_spinor:
                raise BundleError(f"no spinor module on {sp}")
            return sp.trivial(2**sp.m)
        raise BundleError(f"unexpected {val!r}")


def _parse_sigma(sp: Space, body: str) -> BundleSum:
    parts = body.split(";")
    if len(parts) > 2:
        raise BundleError(f"bad Sigma weight {body!r}")
    try:
        gl = [Fraction(x) for x in parts[0].split(",")]
        ss = [Fraction(x) for x in parts[1].split(",")] if len(parts) == 2 and parts[1] else None
    except (ValueError, ZeroDivisionError):
        raise BundleError(f"bad Sigma weight {body!r}") from None
    return sp.sigma(gl, ss)


def parse_bundle(space: Space, text: str) -> BundleSum:
    """Parse a bundle expression such as ``"Sym^2 U*(1) - 2*O(-1)"``."""
    return _Parser(space, text).parse()


def vocabulary(space: Space, name: str) -> BundleSum:
    return parse_bundle(space, name)

