from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bbwlab.linalg import EchelonBasis, determinant, is_upper_unitriangular, same_span, solve_upper_unitriangular, span_rank

vectors = st.dictionaries(st.integers(0, 5), st.integers(-4, 4).map(Fraction), max_size=4)


@given(st.lists(vectors, max_size=6), st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_echelon_contains_combinations_and_expresses_them(vs, coeffs):
    eb = EchelonBasis(track=True)
    eb.extend(vs)
    combo = {}
    for v, c in zip(vs, coeffs):
        for k, x in v.items():
            combo[k] = combo.get(k, 0) + c * x
    combo = {k: x for k, x in combo.items() if x}
    assert eb.contains(combo)
    expr = eb.express(combo)
    rebuilt = {}
    for i, c in expr.items():
        for k, x in vs[i].items():
            rebuilt[k] = rebuilt.get(k, 0) + c * x
    assert {k: x for k, x in rebuilt.items() if x} == combo


@given(st.lists(vectors, max_size=5))
def test_span_rank_is_order_independent(vs):
    assert span_rank(vs) == span_rank(list(reversed(vs)))
    assert same_span(vs, list(reversed(vs)))


def test_determinant_and_solve():
    assert determinant([[2, 1], [1, 1]]) == 1
    assert determinant([[1, 2], [2, 4]]) == 0
    g = [[1, 2, 3], [0, 1, 4], [0, 0, 1]]
    assert is_upper_unitriangular(g)
    c = solve_upper_unitriangular(g, [1, 2, 3])
    assert [sum(g[i][j] * c[j] for j in range(3)) for i in range(3)] == [1, 2, 3]
    assert not is_upper_unitriangular([[1, 0], [1, 1]])


def test_express_needs_tracking():
    eb = EchelonBasis()
    eb.add({0: Fraction(1)})
    with pytest.raises(ValueError):
        eb.express({0: Fraction(1)})
