from collections import Counter
from math import factorial

import pytest

from epoly.exactpoly import ONE, Q, RatPoly, reverse
from epoly.heckedeg import poincare
from epoly.typesum import (
    PSType,
    C_tau,
    E_total,
    H_tau,
    N_total,
    chi_degree,
    dual_type,
    enumerate_types,
    euler_characteristic,
    expected_degree,
    group_order,
    is_palindromic,
)
from epoly.weylrep import irr_A, irr_B

E = ()
TRIV1 = PSType(E, 1, 0, (), ((1,), ()), (E, E))
STEIN1 = PSType(E, 1, 0, (), ((), (1,)), (E, E))
GEN1 = PSType((1,), 0, 0, ((1,),), (E, E), (E, E))


def test_type_counts():
    assert len(enumerate_types(1)) == 5
    assert len(enumerate_types(2)) == 21
    with pytest.raises(ValueError):
        enumerate_types(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_type_count_formula(n):
    # ordered type-A labels: prod p(lam_i) per shape
    from math import prod

    from epoly.combinat import partitions_of

    want = 0
    for c in range(n + 1):
        for lam in partitions_of(c):
            for a1 in range(n - c + 1):
                ae = n - c - a1
                want += prod(len(irr_A(p)) for p in lam) * len(irr_B(a1)) * len(irr_B(ae))
    assert len(enumerate_types(n)) == want


def test_types_distinct():
    ts = enumerate_types(3)
    assert len(set(ts)) == len(ts)


def test_pstype_validation():
    with pytest.raises(ValueError):
        PSType((2,), 0, 0, ((1,),), (E, E), (E, E))


def test_chi_degree_n1():
    assert chi_degree(TRIV1) == RatPoly(ONE)
    assert chi_degree(STEIN1) == RatPoly(Q)
    assert chi_degree(GEN1) == RatPoly(Q + 1)
    halves = [t for t in enumerate_types(1) if t.ae == 1]
    assert len(halves) == 2
    assert all(chi_degree(t) == RatPoly(Q + 1, 2) for t in halves)


def test_group_order():
    assert group_order(1) == Q**3 - Q
    g2 = group_order(2)
    assert g2.degree == 10 and g2.lead == 1
    assert g2(3) == 51840


def test_H_tau_n1():
    assert H_tau(TRIV1) == Q**3 - Q
    assert H_tau(STEIN1) == Q**2 - 1
    for t in enumerate_types(1):
        if t.ae == 1:
            assert H_tau(t) == 2 * Q**2 - 2 * Q


def test_C_tau_n1():
    assert [C_tau(t) for t in enumerate_types(1)] == [1, 1, 1, 1, -2]
    assert C_tau(TRIV1) == 1
    assert C_tau(GEN1) == -2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_trivial_type_has_C_one(n):
    t = PSType(E, n, 0, (), ((n,), ()), (E, E))
    assert C_tau(t) == 1 and H_tau(t) == group_order(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_H_tau_times_chi_is_group_order(n):
    for t in enumerate_types(n):
        h, chi = H_tau(t), chi_degree(t)
        assert h * chi.num == group_order(n) * chi.den
        assert h.lead & (h.lead - 1) == 0  # a power of two


def test_N_total_n1():
    for g in (1, 2, 3):
        k = 2 * g - 1
        want = (Q**3 - Q) ** k + (Q**2 - 1) ** k + (2 ** (2 * g) - 2) * (Q**2 - Q) ** k
        assert N_total(1, g) == want
    assert N_total(1, 1)(7) == 468
    assert N_total(1, 2)(7) == 39_080_880


def test_E_total_examples():
    assert E_total(1, 1) == Q**2 + 4 * Q + 1
    assert E_total(2, 1)(1) == 72
    assert E_total(3, 1)(1) == 1056


@pytest.mark.parametrize("n,g", [(n, g) for n in (1, 2, 3) for g in (1, 2, 3)])
def test_E_total_invariants(n, g):
    e = E_total(n, g)
    assert e.degree == expected_degree(n, g) == (2 * g - 1) * n * (2 * n + 1) - n
    assert e.lead == 1
    assert is_palindromic(e)


def _three_colour_partitions(upto):
    c = [1] + [0] * upto
    for _ in range(3):
        for k in range(1, upto + 1):
            for i in range(k, upto + 1):
                c[i] += c[i - k]
    return c


@pytest.mark.parametrize("n", [1, 2, 3])
def test_euler_characteristic(n):
    want = _three_colour_partitions(3)[n] * 2**n * factorial(n)
    assert euler_characteristic(n, 1) == E_total(n, 1)(1) == want
    assert euler_characteristic(n, 2) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_duality(n):
    N = n * (2 * n + 1)
    for t in enumerate_types(n):
        d = dual_type(t)
        assert dual_type(d) == t
        assert reverse(H_tau(t), N) == H_tau(d) * (-1) ** n
        assert C_tau(d) == C_tau(t)


def test_dual_of_trivial_is_steinberg():
    assert dual_type(TRIV1) == STEIN1
    t = PSType(E, 2, 0, (), ((2,), ()), (E, E))
    assert dual_type(t).betaB1 == ((), (1, 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_H_tau_shape_multiplicity(n):
    # types with equal H share chi(1); the grouped sum must agree with the plain one
    g = 2
    plain = sum((C_tau(t) * H_tau(t) ** (2 * g - 1) for t in enumerate_types(n)), start=0 * Q)
    assert plain == N_total(n, g)
    assert len(Counter(H_tau(t) for t in enumerate_types(n))) <= len(enumerate_types(n))


def test_parallel_matches_serial(monkeypatch):
    from epoly import typesum

    monkeypatch.setenv("EPOLY_THREADS", "2")
    par = typesum.N_total.__wrapped__(3, 2)
    monkeypatch.setenv("EPOLY_THREADS", "1")
    ser = typesum.N_total.__wrapped__(3, 2)
    assert par == ser


def test_polys_pickle():
    import pickle

    p = Q**5 - 3 * Q + 10**30
    assert pickle.loads(pickle.dumps(p)) == p
    r = RatPoly(Q + 1, 2)
    assert pickle.loads(pickle.dumps(r)) == r


def test_poincare_B_degree():
    assert poincare(("B", 3)).degree == 9
