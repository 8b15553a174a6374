"""Irreducible character labels and degrees for S_m, B_m (= W_m) and D_m.

Labels:

* type A: a partition of ``m``;
* type B: an ordered pair ``(alpha, beta)`` of partitions, ``|alpha|+|beta| = m``;
* type D: ``DLabel`` -- an unordered pair, plus a ``+``/``-`` tag when the two
  partitions coincide (the restriction from B_m then splits in two).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, prod

from .combinat import Partition, hook_lengths, partitions_of, transpose

__all__ = [
    "BLabel",
    "DLabel",
    "deg_A",
    "deg_B",
    "deg_D",
    "irr_A",
    "irr_B",
    "irr_D",
    "restrict_B_to_D",
    "sign_dual_A",
    "sign_dual_B",
]

BLabel = tuple  # (alpha, beta)


@dataclass(frozen=True, order=True)
class DLabel:
    pair: tuple[Partition, Partition]  # sorted so pair[0] >= pair[1]
    split_tag: str = "none"  # "none" | "plus" | "minus"

    @classmethod
    def of(cls, alpha: Partition, beta: Partition, split_tag: str = "none") -> DLabel:
        a, b = (alpha, beta) if alpha >= beta else (beta, alpha)
        if (a == b) != (split_tag != "none"):
            raise ValueError("split tag must be set exactly when alpha == beta")
        if split_tag not in ("none", "plus", "minus"):
            raise ValueError(f"bad split tag {split_tag!r}")
        return cls((a, b), split_tag)

    @property
    def rank(self) -> int:
        return sum(self.pair[0]) + sum(self.pair[1])

    @property
    def degenerate(self) -> bool:
        return self.split_tag != "none"


def deg_A(lam: Partition) -> int:
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def deg_B(b: BLabel) -> int:
    alpha, beta = b
    m = sum(alpha) + sum(beta)
    return comb(m, sum(alpha)) * deg_A(alpha) * deg_A(beta)


def deg_D(d: DLabel) -> int:
    full = deg_B(d.pair)
    return full // 2 if d.degenerate else full


def irr_A(m: int) -> tuple[Partition, ...]:
    return partitions_of(m)


def irr_B(m: int) -> list[BLabel]:
    """All bipartitions of ``m``: by decreasing ``|alpha|``, then partition order."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return [(a, b) for k in range(m, -1, -1) for a in partitions_of(k) for b in partitions_of(m - k)]


def irr_D(m: int) -> list[DLabel]:
    """Irreducible labels of D_m for ``m >= 2``; D_0 and D_1 are trivial groups."""
    if m == 0:
        return [DLabel(((), ()))]
    if m == 1:
        return [DLabel.of((1,), ())]
    seen: list[DLabel] = []
    for a, b in irr_B(m):
        for d in restrict_B_to_D((a, b)):
            if d not in seen:
                seen.append(d)
    return seen


def restrict_B_to_D(b: BLabel) -> list[DLabel]:
    alpha, beta = b
    if alpha == beta:
        return [DLabel.of(alpha, beta, "plus"), DLabel.of(alpha, beta, "minus")]
    return [DLabel.of(alpha, beta)]


def sign_dual_A(lam: Partition) -> Partition:
    return transpose(lam)


def sign_dual_B(b: BLabel) -> BLabel:
    alpha, beta = b
    return (transpose(beta), transpose(alpha))
