"""Brute-force and character-theoretic counts of commutator equations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from . import kernels
from .field import _gf
from .groups import GroupTable, sl2_diag, sl2_table

__all__ = [
    "XiSpec",
    "NonIntegerResult",
    "validate_generic",
    "commutator_histogram",
    "commutator_count",
    "commutator_count_direct",
    "frobenius_count",
    "sl2_xi",
    "brute_force_N1",
    "quasi_polynomial_value",
    "quasi_polynomial_check",
]


class NonIntegerResult(ArithmeticError):
    pass


@dataclass(frozen=True)
class XiSpec:
    """``xi = diag(phi^m_1, ..., phi^m_n, ...)`` with ``phi`` of order ``m`` in ``F_q``."""

    m: int
    exponents: tuple[int, ...]
    q: int

    @property
    def n(self) -> int:
        return len(self.exponents)

    def q_compatible(self) -> bool:
        return (self.q - 1) % (2 * self.m) == 0


def validate_generic(spec: XiSpec) -> bool:
    """No signed subset sum of exponents vanishes mod ``m``, and ``2 m_i != 0``."""
    m = spec.m
    if any((2 * e) % m == 0 for e in spec.exponents):
        return False
    for signs in product((-1, 0, 1), repeat=spec.n):
        if any(signs) and sum(s * e for s, e in zip(signs, spec.exponents)) % m == 0:
            return False
    return True


def commutator_histogram(G: GroupTable) -> np.ndarray:
    """``hist[z] = #{(a, b) in G^2 : [a, b] = z}``."""
    cached = getattr(G, "_comm_hist", None)
    if cached is not None:
        return cached
    if G.sl2 is not None:
        F = G.sl2["field"]
        hist = kernels.commutator_hist_sl2(
            G.sl2["elems"], F.add, F.mul, F.neg, G.sl2["lookup"], G.sl2["q"]
        )
    elif G.table is not None:
        hist = kernels.commutator_hist_cayley(G.table, G.inv)
    else:
        raise TypeError("group has neither a Cayley table nor an SL(2) model")
    G._comm_hist = hist
    return hist


def commutator_count(G: GroupTable, z: int, g: int) -> int:
    """Number of 2g-tuples with ``prod_i [a_i, b_i] = z``.

    For ``g > 1`` the one-commutator distribution is convolved with itself;
    every iterate is a class function, so only class representatives are
    evaluated.
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    f1 = commutator_histogram(G).astype(object)
    f = f1
    everyone = np.arange(G.order)
    reps = [int(c[0]) for c in G.classes]
    for _ in range(g - 1):
        values = {}
        for k, r in enumerate(reps):
            # f_new(r) = sum_x f(x) f1(x^-1 r)
            idx = G.mul_many(G.inv, r)
            values[k] = int(np.dot(f, f1[idx]))
        f = np.array([values[int(c)] for c in G.class_of], dtype=object)
    return int(f[z])


def commutator_count_direct(G: GroupTable, z: int, g: int) -> int:
    """Plain enumeration of all 2g-tuples; only for toy groups."""
    n = G.order
    if n ** (2 * g) > 10**7:
        raise ValueError("too many tuples for direct enumeration")
    count = 0
    for tup in product(range(n), repeat=2 * g):
        acc = G.identity
        for a, b in zip(tup[0::2], tup[1::2]):
            comm = G.mul(G.mul(a, b), G.mul(int(G.inv[a]), int(G.inv[b])))
            acc = G.mul(acc, comm)
        count += acc == z
    return count


def frobenius_count(G: GroupTable, char_table, z: int, g: int) -> int:
    """``sum_chi chi(z) (|G| / chi(1))^(2g-1)``.

    This counts tuples with ``prod [x_i, y_i] z = 1``; for groups whose
    characters are real it equals the count for ``prod [x_i, y_i] = z``.
    ``char_table`` rows are characters, columns follow ``G.classes``.
    """
    table = np.asarray(char_table)
    col = int(G.class_of[z])
    id_col = int(G.class_of[G.identity])
    total = Fraction(0)
    for row in table:
        total += Fraction(int(row[col])) * Fraction(G.order, int(row[id_col])) ** (2 * g - 1)
    if total.denominator != 1:
        raise NonIntegerResult(f"Frobenius sum is not an integer: {total}")
    return int(total)


def sl2_xi(G: GroupTable, m: int, exponent: int = 1) -> int:
    """``diag(phi^e, phi^-e)`` with ``phi = gen^((q-1)/m)``."""
    F = _gf(G.sl2["q"])
    q = F.q
    if (q - 1) % m:
        raise ValueError(f"F_{q} has no element of order {m}")
    phi = F.power(F.generator, (q - 1) // m)
    return sl2_diag(G, F.power(phi, exponent))


def brute_force_N1(q: int, m: int, g: int, exponent: int = 1) -> int:
    G = sl2_table(q)
    return commutator_count(G, sl2_xi(G, m, exponent), g)


def quasi_polynomial_value(q: int, g: int) -> int:
    """Closed form for ``xi = diag(i, -i)`` when only ``q = 1 mod 4`` is assumed."""
    sign = -1 if ((q - 1) // 4) % 2 else 1
    return (q**3 - q) ** (2 * g - 1) + (q**2 - 1) ** (2 * g - 1) + (sign * (2 ** (2 * g) - 1) - 1) * (q**2 - q) ** (
        2 * g - 1
    )


def quasi_polynomial_check(q: int, g: int) -> tuple[bool, int, int]:
    """Brute-force count against the quasi-polynomial; returns ``(ok, count, formula)``."""
    if q % 4 != 1:
        raise ValueError("need q = 1 mod 4")
    count = brute_force_N1(q, 4, g)
    formula = quasi_polynomial_value(q, g)
    return count == formula, count, formula
