import pytest

from epoly.combinat import F2Subspace, SetPartition, gaussian_binomial
from epoly.exactpoly import Q, exact_div
from epoly.strata import (
    NotContained,
    SignSubgroup,
    E_stratum,
    N_subgroup,
    Ntilde_stratum,
    enumerate_subgroups,
    kernel_partition,
    moebius_subgroup,
)
from epoly.typesum import E_total, N_total


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 16), (5, 67)])
def test_subgroup_counts(n, count):
    subs = enumerate_subgroups(n)
    assert len(subs) == count
    assert all((1 << n) - 1 in s.space for s in subs)
    assert len({s.space.basis for s in subs}) == count


def test_subgroup_ranks_follow_gaussian_binomials():
    subs = enumerate_subgroups(4)
    for r in range(4):
        assert sum(s.rank == r for s in subs) == gaussian_binomial(3, r)


def test_rejects_subspace_without_minus_one():
    with pytest.raises(ValueError):
        SignSubgroup(F2Subspace.span(2, [0b01]))


def test_kernel_partition_examples():
    z3 = SignSubgroup.span(3, [])
    assert kernel_partition(z3) == SetPartition.of([[1, 2, 3]])
    full2 = SignSubgroup.span(2, [0b01])
    assert kernel_partition(full2) == SetPartition.of([[1], [2]])
    s = SignSubgroup.span(3, [0b011])
    assert kernel_partition(s) == SetPartition.of([[1, 2], [3]])


def test_kernel_partition_matches_all_vectors():
    # the implementation reads only the echelon basis; compare with every element
    for n in (3, 4, 5):
        for sub in enumerate_subgroups(n):
            vecs = sub.space.vectors()
            sig = {}
            for i in range(n):
                sig.setdefault(tuple(v >> i & 1 for v in vecs), []).append(i + 1)
            assert kernel_partition(sub) == SetPartition.of(sig.values())


def test_moebius_values():
    subs = enumerate_subgroups(3)
    z, full = subs[0], subs[-1]
    assert moebius_subgroup(z, z) == 1
    assert moebius_subgroup(z, subs[1]) == -1
    assert moebius_subgroup(z, full) == 2
    with pytest.raises(NotContained):
        moebius_subgroup(full, z)


@pytest.mark.parametrize("g", [1, 2])
def test_N_subgroup(g):
    assert N_subgroup(SignSubgroup.span(3, []), g) == N_total(3, g)
    assert N_subgroup(SignSubgroup.span(2, [0b01]), g) == N_total(1, g) ** 2
    assert N_subgroup(enumerate_subgroups(1)[0], g) == N_total(1, g)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_E_stratum_n1_n2(g):
    (z1,) = enumerate_subgroups(1)
    assert E_stratum(z1, g) == E_total(1, g)
    z, full = enumerate_subgroups(2)
    assert E_stratum(full, g) == E_total(1, g) ** 2
    assert E_stratum(z, g) == E_total(2, g) - E_total(1, g) ** 2


@pytest.mark.parametrize("n,g", [(n, g) for n in (1, 2, 3, 4) for g in (1, 2)])
def test_strata_sum_to_total(n, g):
    subs = enumerate_subgroups(n)
    total = 0 * Q
    for h in subs:
        total = total + E_stratum(h, g, subs)
    assert total == E_total(n, g)


@pytest.mark.parametrize("q", [7, 13])
@pytest.mark.parametrize("n", [2, 3])
def test_Ntilde_nonnegative_at_prime_powers(n, q):
    subs = enumerate_subgroups(n)
    for h in subs:
        nt = Ntilde_stratum(h, 1, subs)
        assert nt(q) >= 0
        exact_div(nt, (Q - 1) ** n)


def test_descriptor_and_strings():
    s = SignSubgroup.span(3, [0b011])
    assert s.vector_strings() == ["--+", "++-"]
    assert s.descriptor() == "rk=1 blocks=(2, 1) basis=--+,++-"
