from collections import Counter
from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bbwlab import repchar
from bbwlab.repchar import (
    PeelingError,
    RankLimitExceeded,
    character,
    dual_weight_doubled,
    exterior_power_decompose,
    full_character_doubled,
    peel,
    standard_weights,
    tensor_decompose_doubled,
    weyl_dim,
    weyl_dim_doubled,
)
from bbwlab.rootsys import RootSystem


def ssyt_character(shape, n):
    """Character of the GL_n irreducible with partition ``shape`` by
    enumerating semistandard tableaux (rows weakly, columns strictly increasing)."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    out = Counter()

    def fill(i, tab):
        if i == len(cells):
            w = [0] * n
            for v in tab.values():
                w[v] += 1
            out[tuple(w)] += 1
            return
        r, c = cells[i]
        lo = 0
        if c > 0:
            lo = max(lo, tab[(r, c - 1)])
        if r > 0:
            lo = max(lo, tab[(r - 1, c)] + 1)
        for v in range(lo, n):
            tab[(r, c)] = v
            fill(i + 1, tab)
            del tab[(r, c)]

    fill(0, {})
    return dict(out)


partitions = st.integers(1, 4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(0, 3), min_size=n, max_size=n).map(lambda xs: tuple(sorted(xs, reverse=True))),
    )
)


@given(partitions)
def test_freudenthal_matches_tableaux_in_type_a(case):
    n, shape = case
    got = full_character_doubled(RootSystem("A", n), tuple(2 * x for x in shape))
    want = {tuple(2 * x for x in w): m for w, m in ssyt_character(shape, n).items()}
    assert got == want


def _dom(kind):
    @st.composite
    def build(draw):
        r = draw(st.integers(1, 3))
        if kind == "A":
            xs = sorted(draw(st.lists(st.integers(-2, 2), min_size=r, max_size=r)), reverse=True)
            return RootSystem(kind, r), tuple(2 * x for x in xs)
        xs = sorted(draw(st.lists(st.integers(0, 2), min_size=r, max_size=r)), reverse=True)
        half = kind == "B" and draw(st.booleans())
        return RootSystem(kind, r), tuple(2 * x + (1 if half else 0) for x in xs)

    return build()


@pytest.mark.parametrize("kind", "ABC")
@given(data=st.data())
def test_character_mass_equals_weyl_dimension(kind, data):
    s, lam = data.draw(_dom(kind))
    assert sum(full_character_doubled(s, lam).values()) == weyl_dim_doubled(s, lam)


@pytest.mark.parametrize("kind", "ABC")
@given(data=st.data())
def test_tensor_dimension_balance_and_symmetry(kind, data):
    s, lam = data.draw(_dom(kind))
    mu = data.draw(_dom(kind).filter(lambda t: t[0] == s))[1]
    dec = tensor_decompose_doubled(s, lam, mu)
    assert weyl_dim_doubled(s, lam) * weyl_dim_doubled(s, mu) == sum(c * weyl_dim_doubled(s, w) for w, c in dec.items())
    assert dec == tensor_decompose_doubled(s, mu, lam)


@pytest.mark.parametrize("kind", "ABC")
@given(data=st.data())
def test_dual_is_an_involution_with_same_dimension(kind, data):
    s, lam = data.draw(_dom(kind))
    d = dual_weight_doubled(s, lam)
    assert dual_weight_doubled(s, d) == lam
    assert weyl_dim_doubled(s, d) == weyl_dim_doubled(s, lam)


def test_frozen_dimensions():
    assert weyl_dim_doubled(RootSystem("B", 2), (1, 1)) == 4
    assert weyl_dim_doubled(RootSystem("B", 3), (1, 1, 1)) == 8
    assert weyl_dim_doubled(RootSystem("C", 3), (2, 2, 2)) == 14
    assert weyl_dim_doubled(RootSystem("B", 3), (2, 0, 0)) == 7
    assert weyl_dim_doubled(RootSystem("A", 4), (4, 2, 0, 0)) == 20
    s = RootSystem("B", 2)
    assert weyl_dim(s, s.weight((1, 1))) == 10


def test_frozen_decompositions():
    b2 = RootSystem("B", 2)
    assert tensor_decompose_doubled(b2, (1, 1), (1, 1)) == {(2, 2): 1, (2, 0): 1, (0, 0): 1}
    b3 = RootSystem("B", 3)
    assert exterior_power_decompose(b3, standard_weights(b3), 2) == {(2, 2, 0): 1}
    # Sym^2 (x) Sym^2 for GL_2
    a2 = RootSystem("A", 2)
    assert tensor_decompose_doubled(a2, (4, 0), (4, 0)) == {(8, 0): 1, (6, 2): 1, (4, 4): 1}


def test_spin_character_is_all_sign_vectors():
    for m in (1, 2, 3, 4):
        ch = full_character_doubled(RootSystem("B", m), (1,) * m)
        assert len(ch) == 2**m and set(ch.values()) == {1}


@pytest.mark.parametrize("kind,rank", [("A", 4), ("B", 3), ("C", 3)])
def test_exterior_powers_have_binomial_dimension(kind, rank):
    s = RootSystem(kind, rank)
    std = standard_weights(s)
    for d in range(len(std) + 1):
        dec = exterior_power_decompose(s, std, d)
        assert sum(c * weyl_dim_doubled(s, w) for w, c in dec.items()) == comb(len(std), d)


def test_rank_zero_exterior_power():
    assert exterior_power_decompose(RootSystem("B", 0), [()], 1) == {(): 1}


def test_symmetric_power_oracle_for_gl():
    # Sym^d of the standard GL_3 module via multisets
    n, d = 3, 3
    weights = Counter()
    for ms in combinations_with_replacement(range(n), d):
        w = [0] * n
        for i in ms:
            w[i] += 2
        weights[tuple(w)] += 1
    assert full_character_doubled(RootSystem("A", n), (2 * d, 0, 0)) == dict(weights)


def test_peeling_rejects_non_characters():
    with pytest.raises(PeelingError):
        peel(RootSystem("A", 2), {(4, 0): 1})


def test_rank_limit_guard():
    old = repchar.get_rank_limit()
    try:
        repchar.set_rank_limit(2)
        repchar.cache_clear()
        with pytest.raises(RankLimitExceeded):
            full_character_doubled(RootSystem("B", 3), (2, 0, 0))
    finally:
        repchar.set_rank_limit(old)


def test_character_object():
    s = RootSystem("C", 2)
    ch = character(s, s.weight((1, 0)))
    assert ch.mass == 4 and len(ch) == 4
    with pytest.raises(ValueError):
        character(s, s.weight((0, 1)))


def test_cache_round_trip(tmp_path):
    repchar.cache_clear()
    full_character_doubled(RootSystem("B", 3), (3, 1, 1))
    n = repchar.cache_size()
    assert n > 0
    p = tmp_path / "c.json"
    repchar.save_cache(p)
    repchar.cache_clear()
    assert repchar.load_cache(p) == n
    assert repchar.cache_size() == n
    p.write_text('{"format": "bbwlab-character-cache", "version": 999, "entries": []}')
    assert repchar.load_cache(p) == 0
    assert repchar.load_cache(tmp_path / "missing.json") == 0
