"""Partitions, set partitions of ``[c]`` and subspaces of ``F_2^d``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import factorial
from typing import Iterator

__all__ = [
    "Partition",
    "SetPartition",
    "F2Subspace",
    "NotComparable",
    "partitions_of",
    "partition_count",
    "hook_lengths",
    "n_stat",
    "multiplicities",
    "transpose",
    "set_partitions",
    "refines",
    "moebius_partition",
    "f2_subspaces",
    "gaussian_binomial",
]


class NotComparable(ValueError):
    pass


Partition = tuple
"""A partition is a weakly decreasing tuple of positive ints; ``()`` is empty."""


def _check_partition(lam: Partition) -> None:
    if any(p < 1 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {lam!r}")


@lru_cache(maxsize=None)
def partitions_of(c: int) -> tuple[Partition, ...]:
    """All partitions of ``c`` in lexicographically descending order."""
    if c < 0:
        raise ValueError("c must be non-negative")

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(c, c))


@lru_cache(maxsize=None)
def partition_count(c: int) -> int:
    """p(c) by Euler's pentagonal recurrence (independent of the enumerator)."""
    if c < 0:
        return 0
    if c == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > c:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(c - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= c:
            total += sign * partition_count(c - g2)
        k += 1
    return total


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    """Hook length of every cell, row by row."""
    conj = transpose(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def n_stat(lam: Partition) -> int:
    """``n(lambda) = sum_i (i-1) * lambda_i``."""
    return sum(i * p for i, p in enumerate(lam))


def multiplicities(lam: Partition) -> dict[int, int]:
    return dict(Counter(lam))


@dataclass(frozen=True)
class SetPartition:
    """A set partition of ``{1..c}``; blocks are sorted tuples, sorted by minimum."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks) -> SetPartition:
        bs = tuple(sorted(tuple(sorted(b)) for b in blocks))
        return cls(bs)

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(x for b in self.blocks for x in b)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def set_partitions(c: int) -> list[SetPartition]:
    """All Bell(c) set partitions of ``{1..c}`` via restricted growth strings."""
    if c < 1:
        raise ValueError("c must be positive")
    out: list[SetPartition] = []

    def grow(prefix: list[int], top: int) -> None:
        if len(prefix) == c:
            blocks: dict[int, list[int]] = {}
            for elem, b in enumerate(prefix, start=1):
                blocks.setdefault(b, []).append(elem)
            out.append(SetPartition(tuple(tuple(blocks[b]) for b in sorted(blocks))))
            return
        for b in range(top + 2):
            prefix.append(b)
            grow(prefix, max(top, b))
            prefix.pop()

    grow([0], 0)
    return out


def refines(pi: SetPartition, sigma: SetPartition) -> bool:
    """True iff every block of ``pi`` sits inside a block of ``sigma``."""
    where = sigma.block_of()
    for b in pi.blocks:
        if len({where.get(x, -1) for x in b}) != 1 or where.get(b[0], -1) < 0:
            return False
    return True


def moebius_partition(pi: SetPartition, sigma: SetPartition) -> int:
    """Moebius function of the refinement order on set partitions."""
    if pi.ground != sigma.ground or not refines(pi, sigma):
        raise NotComparable(f"{pi} does not refine {sigma}")
    where = sigma.block_of()
    inside = Counter(where[b[0]] for b in pi.blocks)
    mu = 1
    for k in inside.values():
        mu *= (-1) ** (k - 1) * factorial(k - 1)
    return mu


@dataclass(frozen=True)
class F2Subspace:
    """Subspace of ``F_2^dim`` given by its reduced row echelon basis.

    Vectors are ints; bit ``i`` holds coordinate ``i`` (0-based).  Pivots are
    the lowest set bit of each row, rows sorted by pivot.
    """

    dim: int
    basis: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[int]:
        out = []
        for coeffs in product((0, 1), repeat=len(self.basis)):
            v = 0
            for c, b in zip(coeffs, self.basis):
                if c:
                    v ^= b
            out.append(v)
        return out

    def __contains__(self, v: int) -> bool:
        for b in self.basis:
            p = b & -b
            if v & p:
                v ^= b
        return v == 0

    def issubspace(self, other: F2Subspace) -> bool:
        return all(b in other for b in self.basis)

    @classmethod
    def span(cls, dim: int, gens) -> F2Subspace:
        return cls(dim, rref(gens))


def rref(gens) -> tuple[int, ...]:
    """Reduced echelon basis (pivot = lowest set bit) of the span of ``gens``."""
    rows: list[int] = []
    for v in gens:
        for r in rows:
            if v & (r & -r):
                v ^= r
        if v:
            p = v & -v
            rows = [r ^ v if r & p else r for r in rows]
            rows.append(v)
    return tuple(sorted(rows, key=lambda r: r & -r))


def f2_subspaces(d: int) -> list[F2Subspace]:
    """Every subspace of ``F_2^d`` exactly once, enumerated by pivot set.

    For a pivot set the free entries of each row are the non-pivot positions
    above its pivot, which gives each subspace a unique RREF.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    out: list[F2Subspace] = []
    for k in range(d + 1):
        for pivots in combinations(range(d), k):
            pset = set(pivots)
            free = [[j for j in range(p + 1, d) if j not in pset] for p in pivots]
            for fill in product(*[product((0, 1), repeat=len(f)) for f in free]):
                rows = []
                for p, f, bits in zip(pivots, free, fill):
                    v = 1 << p
                    for j, bit in zip(f, bits):
                        if bit:
                            v |= 1 << j
                    rows.append(v)
                out.append(F2Subspace(d, tuple(rows)))
    return out


def gaussian_binomial(n: int, k: int, q: int = 2) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
