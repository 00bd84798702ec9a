from math import comb

import pytest

from bbwlab.bbw import BottViolation, CohomologyTable, bundle_cohomology, euler_characteristic, line_bundle_cohomology
from bbwlab.rootsys import RootSystem
from bbwlab.spaces import Space


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("d", range(-9, 6))
def test_projective_space_line_bundles(n, d):
    # P^{n-1} = Gr(1,n)
    sp = Space.gr(n, 1)
    h = bundle_cohomology(sp, sp.O(d))
    if d >= 0:
        assert h.dims == {0: comb(n - 1 + d, d)}
    elif d <= -n:
        e = -d - n
        assert h.dims == {n - 1: comb(n - 1 + e, e)}
    else:
        assert h.is_zero()


@pytest.mark.parametrize("t", range(-7, 5))
def test_gr24_hilbert_polynomial(t):
    # Gr(2,4) is a quadric in P^5
    sp = Space.gr(4)
    assert euler_characteristic(sp, sp.O(t)) == (t + 1) * (t + 2) ** 2 * (t + 3) // 12


def test_table_arithmetic_and_json():
    s = RootSystem("A", 3)
    a = CohomologyTable.from_terms(s, [(0, (2, 0, 0), 1), (1, (0, 0, 0), 2)])
    b = CohomologyTable.from_terms(s, [(1, (0, 0, 0), -2)])
    assert (a + b).entries == ((0, (2, 0, 0), 1),)
    assert a.scaled(3).dims == {0: 9, 1: 6}
    assert a.euler_characteristic == 3 - 2
    j = a.to_json()
    assert j["reports_dual"] is True and j["dims"] == {"0": 3, "1": 2}
    assert str(CohomologyTable(s)) == "0"
    assert str(a) == "deg 0: dim 3; deg 1: dim 2"
    with pytest.raises(ValueError):
        a + CohomologyTable(RootSystem("A", 2))


def test_line_bundle_on_flags_and_errors():
    s = RootSystem("C", 2)
    assert line_bundle_cohomology(s, s.weight((1, 0))).dims == {0: 4}
    with pytest.raises(ValueError):
        line_bundle_cohomology(s, RootSystem("B", 2).weight((1, 0)))
    sp = Space.gr(4)
    with pytest.raises(ValueError):
        bundle_cohomology(sp, sp.O().scaled(-1))


def test_bott_violation_is_an_assertion():
    assert issubclass(BottViolation, AssertionError)
