"""Dense univariate polynomials in ``q`` with exact integer coefficients.

``IntPoly`` stores coefficients in ascending degree order as a tuple of
Python ints; the zero polynomial is the empty tuple.  ``RatPoly`` is an
``IntPoly`` over a positive integer denominator, which is all the rational
structure the character-degree formulas ever need.
"""

from __future__ import annotations

import json
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "IntPoly",
    "RatPoly",
    "NonExactDivision",
    "DegreeTooLarge",
    "Q",
    "ONE",
    "ZERO",
    "add",
    "mul",
    "pow",
    "exact_div",
    "eval",
    "q_int",
    "reverse",
    "ratpoly_div_group_order",
    "from_json",
]


class NonExactDivision(ArithmeticError):
    """A division that should have been exact left a remainder."""


class DegreeTooLarge(ValueError):
    pass


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    """Immutable polynomial with integer coefficients, ``coeffs[i]`` of ``q**i``."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _strip(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return (IntPoly, (self.coeffs,))

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> IntPoly:
        # caller guarantees canonical form
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls([c])

    @property
    def degree(self) -> float | int:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(("IntPoly", self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.render()

    def __neg__(self) -> IntPoly:
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other) -> IntPoly:
        return (-self) + other

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            if not other:
                return ZERO
            return IntPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        return pow(self, k)

    def __floordiv__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.const(other)
        return exact_div(self, other)

    def __call__(self, x: int) -> int:
        return eval(self, x)

    def render(self, var: str = "q") -> str:
        """Human-readable form, highest degree first: ``q^2 + 4q + 1``."""
        if not self.coeffs:
            return "0"
        out: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            if not out:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def latex(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        out: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{{{k}}}"
                body = mono if a == 1 else f"{a}{mono}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def to_json_obj(self) -> dict:
        return {"var": "q", "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


class RatPoly:
    """``num / den`` with ``den`` a positive integer, kept in lowest terms."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("RatPoly denominator is zero")
        if den < 0:
            num, den = -num, -den
        g = reduce(gcd, num.coeffs, den)
        if g > 1:
            num = IntPoly._raw(tuple(c // g for c in num.coeffs))
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    def __reduce__(self):
        return (RatPoly, (self.num, self.den))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, IntPoly)):
            other = RatPoly(other if isinstance(other, IntPoly) else IntPoly.const(other))
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatPoly", self.num.coeffs, self.den))

    def __repr__(self) -> str:
        return f"RatPoly({self.num!r}, {self.den})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"

    def __mul__(self, other) -> RatPoly:
        if isinstance(other, int):
            other = RatPoly(IntPoly.const(other))
        elif isinstance(other, IntPoly):
            other = RatPoly(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return RatPoly(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def scale_den(self, k: int) -> RatPoly:
        """Divide by the positive integer ``k``."""
        return RatPoly(self.num, self.den * k)

    def eval(self, x: int):
        from fractions import Fraction

        return Fraction(eval(self.num, x), self.den)

    def to_json_obj(self) -> dict:
        d = self.num.to_json_obj()
        d["den"] = str(self.den)
        return d


ZERO = IntPoly._raw(())
ONE = IntPoly._raw((1,))
Q = IntPoly._raw((0, 1))


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    out = list(x)
    for i, c in enumerate(y):
        out[i] += c
    return IntPoly._raw(_strip(out))


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    x, y = a.coeffs, b.coeffs
    if not x or not y:
        return ZERO
    if len(x) < len(y):
        x, y = y, x
    out = [0] * (len(x) + len(y) - 1)
    for j, c in enumerate(y):
        if c:
            for i, d in enumerate(x):
                out[i + j] += c * d
    # leading product of nonzero ints is nonzero
    return IntPoly._raw(tuple(out))


def pow(a: IntPoly, k: int) -> IntPoly:  # noqa: A001 - mirrors the operator name
    if k < 0:
        raise ValueError("negative exponent")
    result = ONE
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Long division that insists on a zero remainder and integral quotient."""
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a.coeffs:
        return ZERO
    db = len(b.coeffs) - 1
    if len(a.coeffs) - 1 < db:
        raise NonExactDivision(f"{a} is not divisible by {b}")
    rem = list(a.coeffs)
    lead = b.coeffs[-1]
    bc = b.coeffs
    quot = [0] * (len(rem) - db)
    for k in range(len(quot) - 1, -1, -1):
        c, r = divmod(rem[k + db], lead)
        if r:
            raise NonExactDivision(f"{a} / {b}: non-integral quotient coefficient")
        quot[k] = c
        if c:
            for i, d in enumerate(bc):
                rem[k + i] -= c * d
    if any(rem[:db]):
        raise NonExactDivision(f"{a} / {b}: nonzero remainder")
    return IntPoly._raw(_strip(quot))


def eval(a: IntPoly, x: int) -> int:  # noqa: A001
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def q_int(n: int) -> IntPoly:
    """The q-integer ``1 + q + ... + q**(n-1)``."""
    if n < 1:
        raise ValueError("q_int needs n >= 1")
    return IntPoly._raw((1,) * n)


def reverse(a: IntPoly, d: int) -> IntPoly:
    """``q**d * a(1/q)``."""
    if a.coeffs and len(a.coeffs) - 1 > d:
        raise DegreeTooLarge(f"degree {len(a.coeffs) - 1} exceeds window {d}")
    padded = list(a.coeffs) + [0] * (d + 1 - len(a.coeffs))
    return IntPoly(reversed(padded))


def ratpoly_div_group_order(g: IntPoly, chi: RatPoly) -> IntPoly:
    """``g / chi`` for a character degree ``chi``; must land in Z[q]."""
    if not chi.num.coeffs:
        raise ZeroDivisionError("zero character degree")
    return exact_div(g * chi.den, chi.num)


def from_json(obj: dict | str) -> IntPoly | RatPoly:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if obj.get("var", "q") != "q":
        raise ValueError(f"unsupported variable {obj['var']!r}")
    p = IntPoly(int(c) for c in obj["coeffs"])
    if "den" in obj:
        return RatPoly(p, int(obj["den"]))
    return p
