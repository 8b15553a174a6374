"""Poincare polynomials and equal-parameter generic degrees for types A, B, D.

Generic degrees for B and D come from Lusztig symbols.  For a bipartition
``(alpha, beta)`` pad ``alpha`` to ``k+1`` parts and ``beta`` to ``k`` parts
(type B) or both to ``k`` parts (type D), and read off the strictly
increasing rows ``l_i = alpha_(i) + i``, ``u_j = beta_(j) + j`` (parts taken
in increasing order, ``i, j`` from 0).  Then

    d = R(q) * V(l) * V(u) * prod_{i,j} (q^l_i + q^u_j)
        / (2^e * q^s * prod_i [l_i]!! * prod_j [u_j]!!)

with ``V(x) = prod_{i<j} (q^x_j - q^x_i)``, ``[a]!! = prod_{h<=a} (q^(2h) - 1)``,
``R`` the product of ``q^(2i) - 1`` (type B) or ``(q^m - 1) prod_{i<m} (q^(2i) - 1)``
(type D), ``s = sum_{t>=1} binom(N - 2t, 2)`` for a symbol with ``N`` entries,
and ``e = (N - 1) // 2`` for B, ``N/2 - 1`` for non-degenerate D and ``N/2``
for degenerate D (the two constituents share the value).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .combinat import Partition, hook_lengths, n_stat
from .exactpoly import ONE, Q, IntPoly, RatPoly, exact_div, mul, q_int
from .weylrep import BLabel, DLabel

__all__ = [
    "CoxeterFamily",
    "poincare",
    "generic_degree_A",
    "generic_degree_B",
    "generic_degree_D",
    "symbol_B",
    "symbol_D",
]


@dataclass(frozen=True)
class CoxeterFamily:
    family: str  # "A" (S_m), "B" or "D"
    m: int

    def __post_init__(self):
        if self.family not in ("A", "B", "D"):
            raise ValueError(f"unknown Coxeter family {self.family!r}")
        if self.m < 0:
            raise ValueError("rank parameter must be non-negative")


def _prod(polys) -> IntPoly:
    out = ONE
    for p in polys:
        out = mul(out, p)
    return out


def _qm1(k: int) -> IntPoly:
    """q^k - 1."""
    return IntPoly.monomial(k) - 1


@lru_cache(maxsize=None)
def _q_factorial(m: int) -> IntPoly:
    return _prod(q_int(i) for i in range(1, m + 1))


@lru_cache(maxsize=None)
def _poincare(family: str, m: int) -> IntPoly:
    if family == "A":
        return _q_factorial(m)
    if family == "B":
        return _prod(q_int(2 * i) for i in range(1, m + 1))
    if m <= 1:
        return ONE
    return _prod([q_int(m)] + [q_int(2 * i) for i in range(1, m)])


def poincare(fam: CoxeterFamily | tuple[str, int]) -> IntPoly:
    if isinstance(fam, tuple):
        fam = CoxeterFamily(*fam)
    return _poincare(fam.family, fam.m)


@lru_cache(maxsize=None)
def _gd_A(lam: Partition) -> IntPoly:
    num = mul(IntPoly.monomial(n_stat(lam)), _q_factorial(sum(lam)))
    return exact_div(num, _prod(q_int(h) for h in hook_lengths(lam)))


def generic_degree_A(lam: Partition) -> RatPoly:
    return RatPoly(_gd_A(tuple(lam)))


def _row(parts: Partition, length: int) -> tuple[int, ...]:
    inc = sorted(parts) + []
    inc = [0] * (length - len(inc)) + inc
    return tuple(p + i for i, p in enumerate(inc))


def symbol_B(b: BLabel) -> tuple[tuple[int, ...], tuple[int, ...]]:
    alpha, beta = b
    k = max(len(alpha) - 1, len(beta), 0)
    return _row(alpha, k + 1), _row(beta, k)


def symbol_D(pair: tuple[Partition, Partition]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    alpha, beta = pair
    k = max(len(alpha), len(beta))
    return _row(alpha, k), _row(beta, k)


@lru_cache(maxsize=None)
def _dfact(a: int) -> IntPoly:
    return _prod(_qm1(2 * h) for h in range(1, a + 1))


def _symbol_degree(top, bottom, rank_factor: IntPoly, two_power: int) -> RatPoly:
    num = rank_factor
    for row in (top, bottom):
        for i in range(len(row)):
            for j in range(i + 1, len(row)):
                num = mul(num, IntPoly.monomial(row[j]) - IntPoly.monomial(row[i]))
    for x in top:
        for y in bottom:
            num = mul(num, IntPoly.monomial(x) + IntPoly.monomial(y))
    N = len(top) + len(bottom)
    shift = sum(comb(N - 2 * t, 2) for t in range(1, N // 2 + 1))
    den = _prod([IntPoly.monomial(shift)] + [_dfact(x) for x in top] + [_dfact(y) for y in bottom])
    return RatPoly(exact_div(num, den), 2**two_power)


@lru_cache(maxsize=None)
def _gd_B(b: BLabel) -> RatPoly:
    m = sum(b[0]) + sum(b[1])
    top, bottom = symbol_B(b)
    rank_factor = _prod(_qm1(2 * i) for i in range(1, m + 1))
    return _symbol_degree(top, bottom, rank_factor, (len(top) + len(bottom) - 1) // 2)


def generic_degree_B(b: BLabel) -> RatPoly:
    return _gd_B((tuple(b[0]), tuple(b[1])))


@lru_cache(maxsize=None)
def _gd_D(pair, degenerate: bool) -> RatPoly:
    m = sum(pair[0]) + sum(pair[1])
    if m <= 1:
        return RatPoly(ONE)
    top, bottom = symbol_D(pair)
    rank_factor = _prod([_qm1(m)] + [_qm1(2 * i) for i in range(1, m)])
    half = len(top)
    return _symbol_degree(top, bottom, rank_factor, half if degenerate else half - 1)


def generic_degree_D(d: DLabel) -> RatPoly:
    # both constituents of a split label get the same value
    return _gd_D(d.pair, d.degenerate)
