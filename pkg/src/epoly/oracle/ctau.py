"""Independent evaluations of ``C_tau = sum_{chi of type tau} chi(xi)``.

Two routes, both exact in ``Z[zeta_m]``:

``ctau_orbit_sum``
    From the character formula: a constituent of type ``tau`` in the
    principal series of ``theta`` takes the value ``beta(1)/|S_theta| *
    sum_{w in W_n} theta^w(xi^-1)`` at ``xi``.  Summing over orbit
    representatives turns this into ``beta(1) * sum theta'(xi^-1)`` over every
    torus character ``theta'`` whose orbit has the shape ``(lam, a1, ae)``.
    All ``(q-1)^n`` torus characters are enumerated.

``ctau_cyclotomic``
    The reduced sum over set compositions of ``[c]`` with distinct
    ``k_j in {1..(q-3)/2}`` of products of ``zeta^(k m_s) + zeta^(-k m_s)``,
    times the multinomial/label prefactor.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial, prod

from ..combinat import Partition, multiplicities
from ..typesum import PSType
from .counting import XiSpec, validate_generic
from .cyclotomic import Cyclotomic

__all__ = ["NonGenericXi", "ctau_orbit_sum", "ctau_cyclotomic", "shape_of"]


class NonGenericXi(ValueError):
    pass


def _check(spec: XiSpec, t: PSType | None = None) -> None:
    if not validate_generic(spec):
        raise NonGenericXi(f"{spec} violates the genericity conditions")
    if not spec.q_compatible():
        raise NonGenericXi(f"need q = 1 mod 2m, got q={spec.q}, m={spec.m}")
    if t is not None and t.n != spec.n:
        raise ValueError(f"type has n={t.n} but xi has {spec.n} eigenvalue pairs")


def shape_of(ks: tuple[int, ...], q: int) -> tuple[Partition, int, int]:
    """Orbit shape ``(lam, a1, ae)`` of the torus character with exponents ``ks``."""
    half = (q - 1) // 2
    a1 = sum(1 for k in ks if k == 0)
    ae = sum(1 for k in ks if k == half)
    clusters: dict[int, int] = {}
    for k in ks:
        if k not in (0, half):
            key = min(k, q - 1 - k)
            clusters[key] = clusters.get(key, 0) + 1
    lam = tuple(sorted(clusters.values(), reverse=True))
    return lam, a1, ae


@lru_cache(maxsize=None)
def _orbit_sums(spec: XiSpec, galois: int) -> dict[tuple[Partition, int, int], Cyclotomic]:
    m, q = spec.m, spec.q
    counts: dict[tuple, list[int]] = {}
    for ks in product(range(q - 1), repeat=spec.n):
        # theta'(xi^-1) = zeta^(-sum k_i m_i), zeta = f(phi) of order m
        e = (-galois * sum(k * mi for k, mi in zip(ks, spec.exponents))) % m
        hist = counts.setdefault(shape_of(ks, q), [0] * m)
        hist[e] += 1
    return {sh: Cyclotomic.from_exponent_counts(m, h) for sh, h in counts.items()}


def ctau_orbit_sum(t: PSType, spec: XiSpec, galois: int = 1) -> int:
    """``C_tau`` by summing torus characters; ``galois`` picks the embedding ``zeta -> zeta^galois``."""
    _check(spec, t)
    from math import gcd

    if gcd(galois, spec.m) != 1:
        raise ValueError("galois twist must be a unit mod m")
    total = _orbit_sums(spec, galois % spec.m).get((t.lam, t.a1, t.ae))
    if total is None:
        return 0
    return t.beta_degree * total.to_int()


def _gamma(m: int, e: int) -> Cyclotomic:
    return Cyclotomic.zeta_power(m, e) + Cyclotomic.zeta_power(m, -e)


def _set_compositions(c: int, lam: Partition):
    """Ordered tuples ``(I_1, ..., I_l)`` partitioning ``{0..c-1}`` with ``|I_j| = lam_j``."""

    def rec(rest: tuple[int, ...], parts: Partition):
        if not parts:
            yield ()
            return
        for block in combinations(rest, parts[0]):
            left = tuple(x for x in rest if x not in block)
            for tail in rec(left, parts[1:]):
                yield (block,) + tail

    yield from rec(tuple(range(c)), lam)


def ctau_cyclotomic(t: PSType, spec: XiSpec, galois: int = 1) -> int:
    _check(spec, t)
    m = spec.m
    lam = t.lam
    c, l = sum(lam), len(lam)
    Q = range(1, (spec.q - 3) // 2 + 1)
    ex = [(galois * e) % m for e in spec.exponents[:c]]
    total = Cyclotomic.integer(m, 0)
    for blocks in _set_compositions(c, lam):
        for ks in permutations(Q, l):
            term = Cyclotomic.integer(m, 1)
            for k, block in zip(ks, blocks):
                for s in block:
                    term = term * _gamma(m, k * ex[s])
            total = total + term
    base = total.to_int()
    # theta positions among n slots, unordered equal parts, and beta(1)
    num = factorial(t.n) * t.beta_degree * base
    den = factorial(c) * factorial(t.a1) * factorial(t.ae) * prod(factorial(k) for k in multiplicities(lam).values())
    value, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"prefactor division not exact for {t}")
    return value
