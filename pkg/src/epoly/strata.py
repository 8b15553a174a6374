"""Stratification by torus stabilizer: sign subgroups ``Z <= H <= mu_2^n``.

A sign subgroup is stored as a subspace of ``F_2^n`` (bit ``i`` set means
the ``i``-th sign is ``-1``) that contains the all-ones vector, i.e. the
centre ``Z = {+-1}``.  Its rank is ``dim - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import F2Subspace, SetPartition, f2_subspaces, rref
from .exactpoly import ONE, Q, IntPoly, exact_div, mul
from .typesum import N_total

__all__ = [
    "SignSubgroup",
    "NotContained",
    "enumerate_subgroups",
    "kernel_partition",
    "moebius_subgroup",
    "N_subgroup",
    "Ntilde_stratum",
    "E_stratum",
]


class NotContained(ValueError):
    pass


def _ones(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class SignSubgroup:
    space: F2Subspace

    def __post_init__(self):
        if _ones(self.space.dim) not in self.space:
            raise ValueError("sign subgroup must contain -1 (the all-ones vector)")

    @classmethod
    def span(cls, n: int, gens) -> SignSubgroup:
        return cls(F2Subspace.span(n, [_ones(n), *gens]))

    @property
    def n(self) -> int:
        return self.space.dim

    @property
    def rank(self) -> int:
        return self.space.rank - 1

    def __le__(self, other: SignSubgroup) -> bool:
        return self.space.issubspace(other.space)

    def vector_strings(self) -> list[str]:
        """Basis as sign strings, e.g. ``"--+"``."""
        n = self.n
        return ["".join("-" if v >> i & 1 else "+" for i in range(n)) for v in self.space.basis]

    def descriptor(self) -> str:
        blocks = sorted((len(b) for b in kernel_partition(self).blocks), reverse=True)
        return f"rk={self.rank} blocks={tuple(blocks)} basis={','.join(self.vector_strings())}"


def enumerate_subgroups(n: int) -> list[SignSubgroup]:
    """Subspaces of ``F_2^n`` through the all-ones vector, by lifting from ``F_2^(n-1)``.

    Quotienting by the all-ones vector identifies them with subspaces of
    ``F_2^(n-1)`` (drop the last coordinate after normalising it to 0).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ones = _ones(n)
    out = []
    for sub in f2_subspaces(n - 1):
        out.append(SignSubgroup(F2Subspace(n, rref([ones, *sub.basis]))))
    out.sort(key=lambda s: (s.rank, s.space.basis))
    return out


def kernel_partition(s: SignSubgroup) -> SetPartition:
    """Coordinates ``i ~ j`` iff ``v_i == v_j`` for every ``v`` in ``s``.

    Checking the basis suffices; the relation is linear.
    """
    n = s.n
    sig: dict[tuple[int, ...], list[int]] = {}
    for i in range(n):
        key = tuple(v >> i & 1 for v in s.space.basis)
        sig.setdefault(key, []).append(i + 1)
    return SetPartition.of(sig.values())


def moebius_subgroup(h: SignSubgroup, s: SignSubgroup) -> int:
    if not h <= s:
        raise NotContained("H is not contained in S")
    r = s.rank - h.rank
    return (-1) ** r * 2 ** (r * (r - 1) // 2)


def N_subgroup(s: SignSubgroup, g: int) -> IntPoly:
    out = ONE
    for block in kernel_partition(s).blocks:
        out = mul(out, N_total(len(block), g))
    return out


def Ntilde_stratum(h: SignSubgroup, g: int, subgroups: list[SignSubgroup] | None = None) -> IntPoly:
    """Point count of the locus whose stabilizer is exactly ``h`` (before the torus quotient)."""
    if subgroups is None:
        subgroups = enumerate_subgroups(h.n)
    total = IntPoly()
    for s in subgroups:
        if h <= s:
            total = total + N_subgroup(s, g) * moebius_subgroup(h, s)
    return total


def E_stratum(h: SignSubgroup, g: int, subgroups: list[SignSubgroup] | None = None) -> IntPoly:
    if g < 1:
        raise ValueError("g must be >= 1")
    return exact_div(Ntilde_stratum(h, g, subgroups), (Q - 1) ** h.n)
