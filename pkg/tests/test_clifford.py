import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bbwlab.clifford import (
    MAX_DIM,
    CliffordElement,
    DimensionGuard,
    QuadSpace,
    SpinorModule,
    act,
    clifford_product,
    pairing_signs,
    radical_filtration,
    random_phi,
    spinor_pairing,
    spinor_u_dim,
    splitting_independence,
    splitting_report,
    verify_even_structure,
    wedge_product_embedding,
)


def rewrite_word(space, word):
    """Reduce a word in the tensor algebra by adjacent rewriting:
    ``ba -> -ab + 2B(a,b)`` for ``b > a`` and ``aa -> B(a,a)``."""
    todo = [(tuple(word), Fraction(1))]
    out = {}
    while todo:
        w, c = todo.pop()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a > b:
                todo.append((w[:i] + (b, a) + w[i + 2 :], -c))
                f = space.form(a, b)
                if f:
                    todo.append((w[:i] + w[i + 2 :], 2 * f * c))
                break
            if a == b:
                f = space.form(a, a)
                if f:
                    todo.append((w[:i] + w[i + 2 :], f * c))
                break
        else:
            mask = sum(1 << g for g in w)
            out[mask] = out.get(mask, 0) + c
    return {k: v for k, v in out.items() if v}


def words(n):
    return st.lists(st.integers(0, n - 1), max_size=6)


@pytest.mark.parametrize("n", range(1, 7))
@given(data=st.data())
def test_product_agrees_with_tensor_algebra_oracle(n, data):
    sp = QuadSpace(n)
    w1, w2 = data.draw(words(n)), data.draw(words(n))
    a = CliffordElement(sp, rewrite_word(sp, w1))
    b = CliffordElement(sp, rewrite_word(sp, w2))
    assert (a * b).terms == rewrite_word(sp, w1 + w2)


def elements(sp):
    return st.dictionaries(st.integers(0, (1 << sp.n) - 1), st.integers(-3, 3).map(Fraction), max_size=4).map(
        lambda d: CliffordElement(sp, d)
    )


@pytest.mark.parametrize("n", [2, 3, 5, 8])
@given(data=st.data())
def test_associativity(n, data):
    sp = QuadSpace(n)
    a, b, c = (data.draw(elements(sp)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("n", [3, 4, 6])
@given(data=st.data())
def test_parity_is_multiplicative(n, data):
    sp = QuadSpace(n)
    a = CliffordElement(sp, {data.draw(st.integers(0, (1 << n) - 1)): Fraction(1)})
    b = CliffordElement(sp, {data.draw(st.integers(0, (1 << n) - 1)): Fraction(2)})
    ab = a * b
    if not ab.is_zero():
        assert ab.parity == (a.parity + b.parity) % 2


@pytest.mark.parametrize("n", [4, 5, 6])
@given(data=st.data())
def test_spinor_action_is_a_module(n, data):
    sp = QuadSpace(n)
    a, b = data.draw(elements(sp)), data.draw(elements(sp))
    s = data.draw(st.integers(0, (1 << sp.m) - 1))
    assert act(a * b, {s: Fraction(1)}) == act(a, act(b, {s: Fraction(1)}))


@pytest.mark.parametrize("n", range(2, 10))
def test_even_structure(n):
    rep = verify_even_structure(QuadSpace(n))
    assert rep.passed, rep.to_json()
    assert rep.dim_even == 2 ** (n - 1)
    m = n // 2
    assert rep.target_dims == ([2**m] if n % 2 else [2 ** (m - 1)] * 2)


def test_module_dimensions():
    for n in range(2, 11):
        mod = SpinorModule(QuadSpace(n))
        m = n // 2
        assert len(mod.basis) == 2**m
        if n % 2 == 0:
            assert len(mod.half(1)) == len(mod.half(-1)) == 2 ** (m - 1)


@pytest.mark.parametrize(
    "n,k,eps,quotients",
    [(7, 1, 1, [4, 4]), (6, 2, 1, [1, 2, 1]), (6, 2, -1, [1, 2, 1]), (8, 1, 1, [4, 4]), (9, 2, 1, [4, 8, 4]), (4, 2, 1, [1, 0, 1])],
)
def test_filtration_examples(n, k, eps, quotients):
    rep = radical_filtration(QuadSpace(n), k, eps)
    assert rep.passed, rep.to_json()
    assert rep.quotient_dims == quotients


@pytest.mark.parametrize("n", range(4, 10))
def test_filtration_quotients_all_k(n):
    sp = QuadSpace(n)
    for k in range(sp.m + 1):
        for eps in (1, -1):
            rep = radical_filtration(sp, k, eps)
            assert rep.passed
            assert rep.quotient_dims == [spinor_u_dim(sp, k, (1 if sp.odd else eps) * (-1) ** t) * comb(k, t) for t in range(k + 1)]


def test_filtration_with_a_non_coordinate_subspace():
    sp = QuadSpace(7)
    u = [{0: Fraction(1), 1: Fraction(2)}, {2: Fraction(1), 1: Fraction(-1)}]
    rep = radical_filtration(sp, 2, 1, u=u)
    assert rep.passed and rep.quotient_dims == [2, 4, 2]
    with pytest.raises(ValueError):
        radical_filtration(sp, 1, 1, u=[{3: Fraction(1)}])
    with pytest.raises(ValueError):
        radical_filtration(sp, 2, 1, u=[{0: Fraction(1)}, {0: Fraction(2)}])


def test_splitting_trivial_and_random():
    sp = QuadSpace(7)
    assert splitting_independence(sp, 1, [{}, {}])
    rng = random.Random(7)
    for _ in range(20):
        assert splitting_independence(sp, 1, random_phi(sp, 1, rng))


@pytest.mark.parametrize("n,k", [(6, 1), (7, 1), (8, 2), (9, 2)])
def test_decomposition_depends_on_splitting(n, k):
    sp = QuadSpace(n)
    phi = [{0: Fraction(1)}] + [{} for _ in range(sp.m - k - 1)]
    rep = splitting_report(sp, k, phi)
    assert rep.independent
    assert not all(rep.decomposition_equal)
    zero = splitting_report(sp, k, [{} for _ in range(sp.m - k)])
    assert all(zero.decomposition_equal)


def test_wedge_embedding_is_antisymmetric():
    sp = QuadSpace(6)
    e1, f1, e2 = sp.gen(sp.e(1)), sp.gen(sp.f(1)), sp.gen(sp.e(2))
    assert wedge_product_embedding(sp, [e1, f1]) == wedge_product_embedding(sp, [f1, e1]).scale(-1)
    assert wedge_product_embedding(sp, [e1, e1]).is_zero()
    assert wedge_product_embedding(sp, [e1, e2]) == e1 * e2
    assert wedge_product_embedding(sp, [e1, f1]) == (e1 * f1 - f1 * e1).scale(Fraction(1, 2))


@pytest.mark.parametrize("n", range(2, 7))
def test_pairing_sign_is_uniform(n):
    signs = pairing_signs(QuadSpace(n))
    for name, s in signs.items():
        assert len(s) == 1 and s <= {1, -1}, (name, s)
    # basis vectors of E_1 and E_2 are self-adjoint, e0 picks up (-1)^m
    for name, s in signs.items():
        if name == "e0":
            assert s == {(-1) ** (n // 2)}
        else:
            assert s == {1}


def test_pairing_is_nondegenerate():
    sp = QuadSpace(6)
    mod = SpinorModule(sp)
    for s in mod.basis:
        assert any(spinor_pairing(sp, {s: Fraction(1)}, {t: Fraction(1)}) for t in mod.basis)


def test_guards_and_errors():
    with pytest.raises(DimensionGuard):
        verify_even_structure(QuadSpace(MAX_DIM + 1))
    with pytest.raises(ValueError):
        QuadSpace(0)
    with pytest.raises(ValueError):
        QuadSpace(6).e0
    with pytest.raises(ValueError):
        radical_filtration(QuadSpace(6), 4)
    with pytest.raises(ValueError):
        splitting_report(QuadSpace(7), 1, [{}])
    with pytest.raises(ValueError):
        splitting_report(QuadSpace(7), 1, [{2: Fraction(1)}, {}])
    with pytest.raises(ValueError):
        QuadSpace(4).one() + QuadSpace(5).one()


def test_relations_on_generators():
    sp = QuadSpace(5)
    e1, f1, e0 = sp.gen(sp.e(1)), sp.gen(sp.f(1)), sp.gen(sp.e0)
    assert e1 * f1 + f1 * e1 == sp.one()
    assert e0 * e0 == sp.one()
    assert (e1 * e1).is_zero()
    assert clifford_product(e1, sp.gen(sp.e(2))) == (sp.gen(sp.e(2)) * e1).scale(-1)
