from math import factorial

import pytest

from epoly.exactpoly import ONE, Q, RatPoly, exact_div, q_int
from epoly.heckedeg import (
    generic_degree_A,
    generic_degree_B,
    generic_degree_D,
    poincare,
)
from epoly.verify import hecke_identities
from epoly.weylrep import (
    DLabel,
    deg_A,
    deg_B,
    deg_D,
    irr_A,
    irr_B,
    irr_D,
    restrict_B_to_D,
    sign_dual_A,
    sign_dual_B,
)


@pytest.mark.parametrize("lam,d", [((4,), 1), ((2, 1), 2), ((1, 1, 1), 1), ((3, 2), 5)])
def test_deg_A(lam, d):
    assert deg_A(lam) == d


@pytest.mark.parametrize("b,d", [(((3,), ()), 1), (((1,), (1,)), 2), (((), (1, 1, 1)), 1)])
def test_deg_B(b, d):
    assert deg_B(b) == d


def test_irr_counts():
    assert len(irr_B(0)) == 1
    assert len(irr_B(1)) == 2
    assert set(irr_B(2)) == {((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1))}


def _bipartition_counts(upto):
    # coefficients of prod_k (1 - T^k)^-2
    c = [1] + [0] * upto
    for _ in range(2):
        for k in range(1, upto + 1):
            for i in range(k, upto + 1):
                c[i] += c[i - k]
    return c


@pytest.mark.parametrize("m", range(11))
def test_irr_B_count_generating_function(m):
    assert len(irr_B(m)) == _bipartition_counts(10)[m]


@pytest.mark.parametrize("m", range(1, 7))
def test_sum_of_squares(m):
    assert sum(deg_A(x) ** 2 for x in irr_A(m)) == factorial(m)
    assert sum(deg_B(x) ** 2 for x in irr_B(m)) == 2**m * factorial(m)
    if m >= 2:
        assert sum(deg_D(x) ** 2 for x in irr_D(m)) == 2 ** (m - 1) * factorial(m)


def test_restrict_B_to_D():
    split = restrict_B_to_D(((1,), (1,)))
    assert len(split) == 2 and {d.split_tag for d in split} == {"plus", "minus"}
    assert all(deg_D(d) == 1 for d in split)
    assert restrict_B_to_D(((2,), ())) == [DLabel.of((2,), ())]
    assert deg_D(DLabel.of((2,), ())) == 1
    assert len(restrict_B_to_D(((1,), ()))) == 1


def test_restriction_preserves_degree():
    for m in range(1, 6):
        for b in irr_B(m):
            assert sum(deg_D(d) for d in restrict_B_to_D(b)) == deg_B(b)


def test_dlabel_validation():
    with pytest.raises(ValueError):
        DLabel.of((1,), (1,))
    with pytest.raises(ValueError):
        DLabel.of((2,), (1,), "plus")


def test_sign_duals():
    assert sign_dual_A((2, 1)) == (2, 1)
    assert sign_dual_A((4,)) == (1, 1, 1, 1)
    assert sign_dual_B(((3,), ())) == ((), (1, 1, 1))
    for m in range(6):
        for b in irr_B(m):
            assert sign_dual_B(sign_dual_B(b)) == b
            assert deg_B(sign_dual_B(b)) == deg_B(b)


def test_poincare_examples():
    assert poincare(("B", 1)) == Q + 1
    assert poincare(("A", 3)) == (1 + Q) * (1 + Q + Q**2)
    assert poincare(("D", 1)) == ONE
    assert poincare(("D", 0)) == ONE


@pytest.mark.parametrize("m", range(1, 7))
def test_poincare_B_over_D(m):
    assert exact_div(poincare(("B", m)), poincare(("D", m))) == Q**m + 1


@pytest.mark.parametrize("fam,m", [("A", m) for m in range(1, 6)] + [("B", m) for m in range(5)])
def test_poincare_at_one_is_group_order(fam, m):
    order = factorial(m) if fam == "A" else 2**m * factorial(m)
    assert poincare((fam, m))(1) == order


def test_generic_degree_A():
    assert generic_degree_A((3,)) == RatPoly(ONE)
    assert generic_degree_A((1, 1)) == RatPoly(Q)
    assert generic_degree_A((2, 1)) == RatPoly(Q**2 + Q)
    assert generic_degree_A((1, 1, 1, 1)).num == Q**6


def test_generic_degree_B():
    assert generic_degree_B(((2,), ())) == RatPoly(ONE)
    assert generic_degree_B(((), (1,))) == RatPoly(Q)
    for m in range(1, 5):
        assert generic_degree_B(((), (1,) * m)) == RatPoly(Q ** (m * m))


def test_generic_degree_D_split_pair():
    plus, minus = restrict_B_to_D(((1,), (1,)))
    assert generic_degree_D(plus) == generic_degree_D(minus)
    assert generic_degree_D(plus).eval(1) == 1
    assert generic_degree_D(DLabel.of((2,), ())) == RatPoly(ONE)


@pytest.mark.parametrize(
    "fam,m",
    [("A", m) for m in range(1, 8)] + [("B", m) for m in range(6)] + [("D", m) for m in range(2, 6)],
)
def test_hecke_identities(fam, m):
    assert hecke_identities(fam, m) == (True, True)


def test_q_int_factorial_matches_poincare_A():
    p = ONE
    for i in range(1, 6):
        p = p * q_int(i)
    assert poincare(("A", 5)) == p
