"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``{key: Fraction}``; explicit zeros are tolerated on input
and never stored.  Keys only need to be orderable.  Matrices are lists of rows of Python ints/Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Optional, Sequence

SparseVec = dict


def vec_clean(v: SparseVec) -> SparseVec:
    return {k: c for k, c in v.items() if c}


def vec_axpy(y: SparseVec, a, x: SparseVec) -> None:
    """In place: ``y += a*x``."""
    for k, c in x.items():
        nv = y.get(k, 0) + a * c
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)


def vec_scale(a, x: SparseVec) -> SparseVec:
    if not a:
        return {}
    return {k: a * c for k, c in x.items()}


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace.

    Each stored row is normalised so that its coefficient at its pivot (the
    smallest key in the row) is 1.  Pivots are distinct, which is all that
    membership tests and rank need; rows are not fully back-reduced.

    With ``track=True`` every row also records the combination of the
    original inputs (by insertion index) that produced it, so that
    :meth:`express` can return preimages.
    """

    def __init__(self, track: bool = False):
        self.rows: dict[Hashable, SparseVec] = {}
        self.track = track
        self.combos: dict[Hashable, SparseVec] = {}
        self._count = 0

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce_min(self, v: SparseVec, combo: Optional[SparseVec]):
        # only the leading key matters for insertion
        v = vec_clean(v)
        combo = dict(combo) if combo is not None else None
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                return v, combo, p
            c = v[p]
            vec_axpy(v, -c, row)
            if combo is not None:
                vec_axpy(combo, -c, self.combos[p])
        return v, combo, None

    def add(self, v: SparseVec) -> bool:
        """Insert ``v``; returns True when it was independent of the span."""
        idx = self._count
        self._count += 1
        combo = {idx: Fraction(1)} if self.track else None
        r, combo, p = self._reduce_min(v, combo)
        if p is None:
            return False
        inv = Fraction(1) / r[p]
        self.rows[p] = vec_scale(inv, r)
        if self.track:
            self.combos[p] = vec_scale(inv, combo)
        return True

    def extend(self, vs: Iterable[SparseVec]) -> int:
        return sum(1 for v in vs if self.add(v))

    def contains(self, v: SparseVec) -> bool:
        r, _, p = self._reduce_min(v, None)
        return p is None

    def express(self, v: SparseVec) -> Optional[SparseVec]:
        """Coefficients over the inserted vectors summing to ``v``, or None."""
        if not self.track:
            raise ValueError("express() needs a tracking basis")
        r, combo, p = self._reduce_min(v, {})
        if p is not None:
            return None
        return vec_scale(-1, combo) if combo else {}


def span_rank(vectors: Iterable[SparseVec]) -> int:
    b = EchelonBasis()
    return b.extend(vectors)


def same_span(a: Sequence[SparseVec], b: Sequence[SparseVec]) -> bool:
    ea = EchelonBasis()
    ea.extend(a)
    if not all(ea.contains(v) for v in b):
        return False
    eb = EchelonBasis()
    eb.extend(b)
    return ea.rank == eb.rank


def is_upper_unitriangular(g: Sequence[Sequence[int]]) -> bool:
    n = len(g)
    for i in range(n):
        if g[i][i] != 1:
            return False
        for j in range(i):
            if g[i][j] != 0:
                return False
    return True


def determinant(g: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in g]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def solve_upper_unitriangular(g: Sequence[Sequence[int]], v: Sequence[int]) -> list[Fraction]:
    """Solve ``g c = v`` for upper unitriangular ``g`` by back substitution."""
    n = len(g)
    if len(v) != n:
        raise ValueError("dimension mismatch")
    c = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(v[i]) - sum(g[i][j] * c[j] for j in range(i + 1, n))
        c[i] = s / g[i][i]
    return c
