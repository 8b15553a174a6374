"""Explicit finite groups for brute-force counting.

``GroupTable`` indexes elements ``0..N-1``.  Small toy groups carry a full
Cayley table; SL(2, F_q) multiplies by 2x2 matrix arithmetic over field
tables, since its Cayley table outgrows memory long before ``q = 31``.
"""

from __future__ import annotations

from functools import cached_property
from itertools import permutations
from typing import Callable, Sequence

import numpy as np

from .field import GF, _gf

__all__ = [
    "GroupTable",
    "FieldTooLarge",
    "from_cayley",
    "sl2_table",
    "symmetric_group",
    "s3",
    "s3_character_table",
    "quaternion_group",
    "q8_character_table",
    "check_group_axioms",
]

MAX_SL2_Q = 32


class FieldTooLarge(ValueError):
    pass


class GroupTable:
    def __init__(
        self,
        labels: Sequence,
        mul_many: Callable[[np.ndarray, np.ndarray], np.ndarray],
        inv: np.ndarray,
        identity: int,
        *,
        table: np.ndarray | None = None,
        name: str = "G",
    ):
        self.labels = list(labels)
        self._mul_many = mul_many
        self.inv = np.asarray(inv, dtype=np.int32)
        self.identity = identity
        self.table = table
        self.name = name
        self.sl2: dict | None = None

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"<GroupTable {self.name} order={self.order}>"

    def mul(self, i: int, j: int) -> int:
        return int(self._mul_many(np.array([i]), np.array([j]))[0])

    def mul_many(self, i, j) -> np.ndarray:
        i, j = np.broadcast_arrays(np.asarray(i), np.asarray(j))
        return self._mul_many(i, j)

    def index(self, label) -> int:
        return self.labels.index(label)

    @cached_property
    def class_of(self) -> np.ndarray:
        """Conjugacy class id of every element; classes numbered by least member."""
        n = self.order
        cls = np.full(n, -1, dtype=np.int64)
        everyone = np.arange(n)
        k = 0
        for x in range(n):
            if cls[x] >= 0:
                continue
            conj = self.mul_many(self.mul_many(everyone, x), self.inv)
            cls[conj] = k
            k += 1
        return cls

    @cached_property
    def classes(self) -> list[np.ndarray]:
        cls = self.class_of
        return [np.nonzero(cls == k)[0] for k in range(int(cls.max()) + 1)]

    def conjugacy_class(self, x: int) -> np.ndarray:
        return self.classes[int(self.class_of[x])]


def from_cayley(labels: Sequence, table, name: str = "G") -> GroupTable:
    table = np.ascontiguousarray(table, dtype=np.int32)
    n = len(labels)
    if table.shape != (n, n):
        raise ValueError("Cayley table shape does not match the element list")
    ident = [e for e in range(n) if np.array_equal(table[e], np.arange(n))]
    if len(ident) != 1:
        raise ValueError("no unique identity element")
    e = ident[0]
    inv = np.argmax(table == e, axis=1).astype(np.int32)
    if not np.all(table[np.arange(n), inv] == e):
        raise ValueError("some element has no inverse")
    return GroupTable(labels, lambda i, j: table[i, j], inv, e, table=table, name=name)


def check_group_axioms(G: GroupTable, samples: int = 2000, seed: int = 0) -> None:
    """Spot-check associativity, identity and inverses; raises AssertionError."""
    rng = np.random.default_rng(seed)
    n = G.order
    a, b, c = (rng.integers(0, n, samples) for _ in range(3))
    left = G.mul_many(G.mul_many(a, b), c)
    right = G.mul_many(a, G.mul_many(b, c))
    assert np.array_equal(left, right), "associativity fails"
    everyone = np.arange(n)
    assert np.array_equal(G.mul_many(everyone, G.identity), everyone), "right identity fails"
    assert np.array_equal(G.mul_many(G.identity, everyone), everyone), "left identity fails"
    assert np.all(G.mul_many(everyone, G.inv) == G.identity), "inverse fails"


def sl2_table(q: int) -> GroupTable:
    """SL(2, F_q) for odd prime powers ``q <= 32``."""
    if q > MAX_SL2_Q:
        raise FieldTooLarge(f"q={q} exceeds the brute-force limit {MAX_SL2_Q}")
    F = _gf(q)
    if F.p == 2:
        raise ValueError("q must be odd")
    add, mul, neg = F.add, F.mul, F.neg
    r = np.arange(q)
    a, b, c, d = (x.ravel() for x in np.meshgrid(r, r, r, r, indexing="ij"))
    det = add[mul[a, d], neg[mul[b, c]]]
    keep = det == 1
    elems = np.ascontiguousarray(np.stack([a[keep], b[keep], c[keep], d[keep]], axis=1).astype(np.int32))
    n = elems.shape[0]
    lookup = np.full(q**4, -1, dtype=np.int32)
    codes = ((elems[:, 0] * q + elems[:, 1]) * q + elems[:, 2]) * q + elems[:, 3]
    lookup[codes] = np.arange(n, dtype=np.int32)

    def mul_many(i, j):
        x = elems[i]
        y = elems[j]
        r0 = add[mul[x[..., 0], y[..., 0]], mul[x[..., 1], y[..., 2]]]
        r1 = add[mul[x[..., 0], y[..., 1]], mul[x[..., 1], y[..., 3]]]
        r2 = add[mul[x[..., 2], y[..., 0]], mul[x[..., 3], y[..., 2]]]
        r3 = add[mul[x[..., 2], y[..., 1]], mul[x[..., 3], y[..., 3]]]
        return lookup[((r0 * q + r1) * q + r2) * q + r3]

    inv_codes = ((elems[:, 3] * q + neg[elems[:, 1]]) * q + neg[elems[:, 2]]) * q + elems[:, 0]
    inv = lookup[inv_codes]
    ident = int(lookup[((1 * q + 0) * q + 0) * q + 1])
    labels = [tuple(int(v) for v in row) for row in elems]
    G = GroupTable(labels, mul_many, inv, ident, name=f"SL(2,{q})")
    G.sl2 = {"field": F, "elems": elems, "lookup": lookup, "q": q}
    return G


def sl2_diag(G: GroupTable, x: int) -> int:
    """Index of ``diag(x, x^-1)`` in an ``sl2_table`` group."""
    F: GF = G.sl2["field"]
    q = G.sl2["q"]
    xi = int(F.inv[x])
    return int(G.sl2["lookup"][((x * q + 0) * q + 0) * q + xi])


def symmetric_group(k: int) -> GroupTable:
    perms = list(permutations(range(k)))
    pos = {p: i for i, p in enumerate(perms)}
    # (p*r)(x) = p(r(x))
    table = [[pos[tuple(p[r[x]] for x in range(k))] for r in perms] for p in perms]
    return from_cayley(perms, table, name=f"S{k}")


def s3() -> GroupTable:
    return symmetric_group(3)


def _cycle_type(p) -> tuple[int, ...]:
    seen, out = set(), []
    for s in range(len(p)):
        if s in seen:
            continue
        k, x = 0, s
        while x not in seen:
            seen.add(x)
            x = p[x]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


def s3_character_table(G: GroupTable) -> np.ndarray:
    """Rows: trivial, sign, standard; columns follow ``G.classes``."""
    by_type = {(1, 1, 1): (1, 1, 2), (2, 1): (1, -1, 0), (3,): (1, 1, -1)}
    cols = [by_type[_cycle_type(G.labels[int(c[0])])] for c in G.classes]
    return np.array(cols, dtype=np.int64).T


def quaternion_group() -> GroupTable:
    """Q8 as unit quaternions; labels ``(sign, unit)`` with unit in 1, i, j, k."""
    units = ["1", "i", "j", "k"]
    # unit products: (unit, unit) -> (sign, unit)
    prodtab = {
        ("1", u): (1, u) for u in units
    } | {(u, "1"): (1, u) for u in units} | {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    labels = [(s, u) for s in (1, -1) for u in units]
    pos = {x: i for i, x in enumerate(labels)}
    table = []
    for s1, u1 in labels:
        row = []
        for s2, u2 in labels:
            s, u = prodtab[(u1, u2)]
            row.append(pos[(s * s1 * s2, u)])
        table.append(row)
    return from_cayley(labels, table, name="Q8")


def q8_character_table(G: GroupTable) -> np.ndarray:
    """Rows: trivial, three sign characters (kernels <i>, <j>, <k>), 2-dim."""
    rows = []
    for c in G.classes:
        s, u = G.labels[int(c[0])]
        if u == "1":
            rows.append((1, 1, 1, 1, 2 * s))
        else:
            rows.append((1,) + tuple(1 if u == v else -1 for v in "ijk") + (0,))
    return np.array(rows, dtype=np.int64).T
