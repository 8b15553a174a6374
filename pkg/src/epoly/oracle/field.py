"""Small finite fields GF(p^k) as lookup tables.

Elements are the integers ``0..q-1``; for ``k > 1`` an element's base-``p``
digits are its coefficients in ``F_p[t]/(f)`` for a fixed monic irreducible
``f``.  Prime fields therefore use the ordinary residues.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

__all__ = ["GF", "factor_prime_power"]


def factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def _polymulmod(a, b, f, p):
    k = len(f) - 1
    out = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    # f monic, ascending coefficients
    for d in range(len(out) - 1, k - 1, -1):
        c = out[d]
        if c:
            for i in range(k + 1):
                out[d - k + i] = (out[d - k + i] - c * f[i]) % p
    return out[:k]


def _irreducible(p: int, k: int) -> tuple[int, ...]:
    for tail in product(range(p), repeat=k):
        f = list(tail) + [1]
        if f[0] == 0:
            continue
        # no roots and no factors of degree <= k/2: test by brute force on monic divisors
        if all(not _divides(g, f, p) for d in range(1, k // 2 + 1) for g in _monics(p, d)):
            return tuple(f)
    raise RuntimeError("no irreducible polynomial found")


def _monics(p, d):
    for tail in product(range(p), repeat=d):
        yield list(tail) + [1]


def _divides(g, f, p):
    r = list(f)
    dg = len(g) - 1
    for d in range(len(r) - 1, dg - 1, -1):
        c = r[d]
        if c:
            for i in range(dg + 1):
                r[d - dg + i] = (r[d - dg + i] - c * g[i]) % p
    return not any(r[:dg])


@dataclass(frozen=True)
class GF:
    q: int
    p: int = field(init=False)
    add: np.ndarray = field(init=False, repr=False, compare=False)
    mul: np.ndarray = field(init=False, repr=False, compare=False)
    neg: np.ndarray = field(init=False, repr=False, compare=False)
    inv: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, k = factor_prime_power(self.q)
        q = self.q
        if k == 1:
            r = np.arange(q)
            add = (r[:, None] + r[None, :]) % q
            mul = (r[:, None] * r[None, :]) % q
        else:
            f = _irreducible(p, k)
            digits = [[(x // p**i) % p for i in range(k)] for x in range(q)]
            enc = lambda ds: sum(d * p**i for i, d in enumerate(ds))  # noqa: E731
            add = np.array([[enc([(a + b) % p for a, b in zip(dx, dy)]) for dy in digits] for dx in digits])
            mul = np.array([[enc(_polymulmod(dx, dy, f, p)) for dy in digits] for dx in digits])
        add = add.astype(np.int32)
        mul = mul.astype(np.int32)
        neg = np.argmin(add, axis=1).astype(np.int32)  # add[x, neg[x]] == 0
        inv = np.zeros(q, dtype=np.int32)
        for x in range(1, q):
            inv[x] = int(np.nonzero(mul[x] == 1)[0][0])
        object.__setattr__(self, "p", p)
        for name, arr in (("add", add), ("mul", mul), ("neg", neg), ("inv", inv)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def order(self, x: int) -> int:
        if x == 0:
            raise ValueError("0 has no multiplicative order")
        k, y = 1, x
        while y != 1:
            y = int(self.mul[y, x])
            k += 1
        return k

    @property
    def generator(self) -> int:
        return _generator(self)

    def power(self, x: int, e: int) -> int:
        e %= self.q - 1
        out = 1
        for _ in range(e):
            out = int(self.mul[out, x])
        return out


@lru_cache(maxsize=None)
def _gf(q: int) -> GF:
    return GF(q)


def _generator(F: GF) -> int:
    for x in range(1, F.q):
        if F.order(x) == F.q - 1:
            return x
    raise RuntimeError("no generator")
