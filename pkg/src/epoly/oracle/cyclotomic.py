"""Exact arithmetic in ``Z[x]/Phi_m(x)``, i.e. in ``Z[zeta_m]``."""

from __future__ import annotations

from functools import lru_cache

from ..exactpoly import IntPoly, exact_div

__all__ = ["Cyclotomic", "cyclotomic_poly", "NonRationalInteger"]


class NonRationalInteger(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPoly:
    """``Phi_m`` via ``x^m - 1 = prod_{d | m} Phi_d``."""
    if m < 1:
        raise ValueError("conductor must be positive")
    p = IntPoly.monomial(m) - 1
    for d in range(1, m):
        if m % d == 0:
            p = exact_div(p, cyclotomic_poly(d))
    return p


class Cyclotomic:
    """Element of ``Z[zeta_m]`` as a coefficient vector of length ``phi(m)``."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=()):
        self.m = m
        self.coeffs = _reduce(m, list(coeffs))

    @classmethod
    def from_exponent_counts(cls, m: int, counts) -> Cyclotomic:
        """``sum_e counts[e] * zeta^e`` for ``e`` in ``0..m-1``."""
        return cls(m, counts)

    @classmethod
    def zeta_power(cls, m: int, e: int) -> Cyclotomic:
        e %= m
        return cls(m, [0] * e + [1])

    @classmethod
    def integer(cls, m: int, k: int) -> Cyclotomic:
        return cls(m, [k])

    def __add__(self, other: Cyclotomic) -> Cyclotomic:
        self._same(other)
        a, b = self.coeffs, other.coeffs
        return Cyclotomic(self.m, [x + y for x, y in zip(a, b)])

    def __mul__(self, other) -> Cyclotomic:
        if isinstance(other, int):
            return Cyclotomic(self.m, [c * other for c in self.coeffs])
        self._same(other)
        out = [0] * (2 * len(self.coeffs))
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Cyclotomic(self.m, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Cyclotomic.integer(self.m, other)
        return isinstance(other, Cyclotomic) and self.m == other.m and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Cyclotomic(m={self.m}, {list(self.coeffs)})"

    def _same(self, other: Cyclotomic) -> None:
        if self.m != other.m:
            raise ValueError("mixed conductors")

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise NonRationalInteger(f"{self!r} is not a rational integer")
        return self.coeffs[0]


def _reduce(m: int, cs: list[int]) -> tuple[int, ...]:
    phi = cyclotomic_poly(m).coeffs
    k = len(phi) - 1
    # x^j for j >= m folds to x^(j mod m) first; keeps the vector short
    if len(cs) > m:
        folded = [0] * m
        for j, c in enumerate(cs):
            folded[j % m] += c
        cs = folded
    cs = cs + [0] * max(0, k - len(cs))
    for d in range(len(cs) - 1, k - 1, -1):
        c = cs[d]
        if c:
            for i in range(k + 1):
                cs[d - k + i] -= c * phi[i]
    return tuple(cs[:k])
