"""Principal-series types of Sp(2n, F_q) and the E-polynomial they add up to.

A type is ``(lam, a1, ae, beta)``: ``lam`` records how the non-special
torus-character exponents cluster, ``a1`` and ``ae`` count the exponents
equal to ``0`` and ``(q-1)/2``, and ``beta`` is an irreducible character of
``prod S_{lam_j} x W_{a1} x W_{ae}``.  Every constituent of a given type has
the same degree ``chi_tau(1)``, and the character values at the generic
``xi`` sum to the integer ``C_tau``, so

    #{2g-tuples with commutator product xi} = sum_tau C_tau * H_tau^(2g-1),
    H_tau = |Sp(2n, F_q)| / chi_tau(1).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial, prod

from .combinat import Partition, multiplicities, partitions_of
from .exactpoly import ONE, Q, IntPoly, RatPoly, exact_div, mul, ratpoly_div_group_order, reverse
from .heckedeg import generic_degree_A, generic_degree_B, generic_degree_D, poincare
from .weylrep import (
    BLabel,
    deg_A,
    deg_B,
    irr_B,
    restrict_B_to_D,
    sign_dual_A,
    sign_dual_B,
)

__all__ = [
    "PSType",
    "NonIntegerC",
    "InvariantViolation",
    "enumerate_types",
    "chi_degree",
    "group_order",
    "H_tau",
    "C_tau",
    "N_total",
    "E_total",
    "dual_type",
    "euler_characteristic",
    "expected_degree",
    "is_palindromic",
]


class NonIntegerC(ArithmeticError):
    pass


class InvariantViolation(AssertionError):
    """A structural property guaranteed by theory failed to hold."""


@dataclass(frozen=True)
class PSType:
    lam: Partition
    a1: int
    ae: int
    betaA: tuple[Partition, ...]
    betaB1: BLabel
    betaBe: BLabel

    def __post_init__(self):
        if len(self.betaA) != len(self.lam):
            raise ValueError("one type-A label per part of lam")
        for part, lab in zip(self.lam, self.betaA):
            if sum(lab) != part:
                raise ValueError(f"label {lab} does not match part {part}")
        if sum(map(sum, self.betaB1)) != self.a1 or sum(map(sum, self.betaBe)) != self.ae:
            raise ValueError("B labels do not match a1/ae")

    @property
    def n(self) -> int:
        return sum(self.lam) + self.a1 + self.ae

    @property
    def beta_degree(self) -> int:
        return prod(deg_A(x) for x in self.betaA) * deg_B(self.betaB1) * deg_B(self.betaBe)

    def __str__(self) -> str:
        def p(x):
            return "(" + ",".join(map(str, x)) + ")" if x else "-"

        def b(x):
            return f"[{p(x[0])}|{p(x[1])}]"

        lam = p(self.lam)
        a = " ".join(p(x) for x in self.betaA) or "-"
        return f"{lam};{self.a1};{self.ae}  A:{a} B1:{b(self.betaB1)} Be:{b(self.betaBe)}"


def enumerate_types(n: int) -> list[PSType]:
    """All types for Sp(2n); type-A labels are ordered along the parts of ``lam``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for c in range(n + 1):
        for lam in partitions_of(c):
            for a1 in range(n - c, -1, -1):
                ae = n - c - a1
                for betaA in product(*[partitions_of(p) for p in lam]):
                    for b1 in irr_B(a1):
                        for be in irr_B(ae):
                            out.append(PSType(lam, a1, ae, tuple(betaA), b1, be))
    return out


@lru_cache(maxsize=None)
def group_order(n: int) -> IntPoly:
    """|Sp(2n, F_q)| = q^(n^2) prod_{i=1..n} (q^(2i) - 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = IntPoly.monomial(n * n)
    for i in range(1, n + 1):
        out = mul(out, IntPoly.monomial(2 * i) - 1)
    return out


@lru_cache(maxsize=None)
def chi_degree(t: PSType) -> RatPoly:
    num = poincare(("B", t.n))
    den_poly = ONE
    den = 1
    for part, lab in zip(t.lam, t.betaA):
        num = mul(num, generic_degree_A(lab).num)
        den_poly = mul(den_poly, poincare(("A", part)))
    d1 = generic_degree_B(t.betaB1)
    num = mul(num, d1.num)
    den *= d1.den
    den_poly = mul(den_poly, poincare(("B", t.a1)))
    if t.ae:
        constituents = restrict_B_to_D(t.betaBe)
        de = generic_degree_D(constituents[0])
        num = mul(num, de.num)
        den *= de.den
        den_poly = mul(den_poly, poincare(("D", t.ae)))
        if len(constituents) == 1:
            den *= 2
    return RatPoly(exact_div(num, den_poly), den)


@lru_cache(maxsize=None)
def H_tau(t: PSType) -> IntPoly:
    return ratpoly_div_group_order(group_order(t.n), chi_degree(t))


@lru_cache(maxsize=None)
def C_tau(t: PSType) -> int:
    lam = t.lam
    l = len(lam)
    num = factorial(t.n) * t.beta_degree * 2 ** sum(lam) * (-1) ** l * factorial(l)
    den = (
        prod(factorial(k) for k in multiplicities(lam).values())
        * prod(factorial(p) for p in lam)
        * factorial(t.a1)
        * factorial(t.ae)
    )
    c, r = divmod(num, den)
    if r:
        raise NonIntegerC(f"C_tau not integral for {t}: {num}/{den}")
    return c


def _workers() -> int:
    raw = os.environ.get("EPOLY_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        k = 1
    if k == 0:
        return os.cpu_count() or 1
    return max(k, 1)


def _scaled_power(args):
    h, e, c = args
    return h**e * c


@lru_cache(maxsize=None)
def N_total(n: int, g: int) -> IntPoly:
    """Count of 2g-tuples in Sp(2n, F_q) with commutator product ``xi``.

    ``N_total(0, g)`` is 1 (the empty group of eigenvalues is a point).
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    if n == 0:
        return ONE
    # types sharing an H_tau are merged before the expensive power
    weights: dict[IntPoly, int] = {}
    for t in enumerate_types(n):
        h = H_tau(t)
        weights[h] = weights.get(h, 0) + C_tau(t)
    jobs = [(h, 2 * g - 1, c) for h, c in weights.items() if c]
    workers = _workers()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            terms = list(ex.map(_scaled_power, jobs))
    else:
        terms = [_scaled_power(j) for j in jobs]
    total = IntPoly()
    for term in terms:
        total = total + term
    return total


def expected_degree(n: int, g: int) -> int:
    """Dimension of the character variety: (2g-1) n (2n+1) - n."""
    return (2 * g - 1) * n * (2 * n + 1) - n


def is_palindromic(p: IntPoly) -> bool:
    return bool(p) and reverse(p, len(p.coeffs) - 1) == p


@lru_cache(maxsize=None)
def E_total(n: int, g: int) -> IntPoly:
    if n < 1 or g < 1:
        raise ValueError("need n >= 1 and g >= 1")
    e = exact_div(N_total(n, g), (Q - 1) ** n)
    if e.degree != expected_degree(n, g):
        raise InvariantViolation(f"E_{n} has degree {e.degree}, expected {expected_degree(n, g)}")
    if e.lead != 1:
        raise InvariantViolation(f"E_{n} has leading coefficient {e.lead}")
    if not is_palindromic(e):
        raise InvariantViolation(f"E_{n} is not palindromic")
    return e


def dual_type(t: PSType) -> PSType:
    return PSType(
        t.lam,
        t.a1,
        t.ae,
        tuple(sign_dual_A(x) for x in t.betaA),
        sign_dual_B(t.betaB1),
        sign_dual_B(t.betaBe),
    )


def euler_characteristic(n: int, g: int) -> int:
    return E_total(n, g)(1)
