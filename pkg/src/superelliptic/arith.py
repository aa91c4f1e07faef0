"""Exact arithmetic: rationals extended by one square root, and sparse polynomials.

The classification tables need nothing beyond numbers of the form a + b*sqrt(d)
with rational a, b and a fixed square-free integer d (the tables only ever use
d = -3), together with univariate polynomials over them.  Everything here is
exact -- built on :class:`fractions.Fraction` -- and floating point is never
involved.

Conventions:

* ``QuadNum`` with b == 0 normalises its radicand to 1, so plain rationals
  compare equal regardless of which extension they were created in.
* Binary operations accept operands from the same extension, or one rational
  operand and one extension operand.  Mixing two different genuine radicands
  raises :class:`ValueError`.
* ``Poly`` is an immutable sparse map ``exponent -> QuadNum`` with no explicit
  zero coefficients.  The zero polynomial has no degree (``degree`` raises).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

RationalLike = Union[int, Fraction]
NumberLike = Union[int, Fraction, "QuadNum"]

__all__ = [
    "QuadNum",
    "Poly",
    "is_square_free",
    "poly_gcd",
    "is_separable",
]


def is_square_free(d: int) -> bool:
    """True when no square > 1 divides d.  (0 is not square-free.)"""
    if d == 0:
        return False
    d = abs(d)
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class QuadNum:
    """An exact number a + b*sqrt(d), a and b rational, d square-free."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RationalLike, b: RationalLike = 0, d: int = 1):
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            d = 1
        if d == 1:
            a, b = a + b, Fraction(0)  # sqrt(1) = 1
        elif not is_square_free(d):
            raise ValueError(f"radicand {d} is not square-free")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadNum is immutable")

    # -- helpers ---------------------------------------------------------

    @staticmethod
    def coerce(value: NumberLike) -> "QuadNum":
        if isinstance(value, QuadNum):
            return value
        return QuadNum(Fraction(value))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.a

    def _common_radicand(self, other: "QuadNum") -> int:
        if self.d == 1:
            return other.d
        if other.d == 1 or other.d == self.d:
            return self.d
        raise ValueError(f"cannot mix sqrt({self.d}) with sqrt({other.d})")

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: NumberLike) -> "QuadNum":
        o = QuadNum.coerce(other)
        d = self._common_radicand(o)
        return QuadNum(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadNum":
        return QuadNum(-self.a, -self.b, self.d)

    def __sub__(self, other: NumberLike) -> "QuadNum":
        return self + (-QuadNum.coerce(other))

    def __rsub__(self, other: NumberLike) -> "QuadNum":
        return QuadNum.coerce(other) + (-self)

    def __mul__(self, other: NumberLike) -> "QuadNum":
        o = QuadNum.coerce(other)
        d = self._common_radicand(o)
        return QuadNum(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadNum":
        if not self:
            raise ZeroDivisionError("division by zero")
        # (a + b sqrt(d))(a - b sqrt(d)) = a^2 - b^2 d, never 0 for d square-free != 1
        norm = self.a * self.a - self.b * self.b * self.d
        return QuadNum(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other: NumberLike) -> "QuadNum":
        return self * QuadNum.coerce(other).inverse()

    def __rtruediv__(self, other: NumberLike) -> "QuadNum":
        return QuadNum.coerce(other) * self.inverse()

    # -- comparisons / hashing -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadNum(other)
        if not isinstance(other, QuadNum):
            return NotImplemented
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # -- display ---------------------------------------------------------

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        root = f"sqrt({self.d})"
        if self.b == 1:
            radical = root
        elif self.b == -1:
            radical = f"-{root}"
        else:
            radical = f"{self.b}*{root}"
        if self.a == 0:
            return radical
        sign = "+" if self.b > 0 else ""
        return f"{self.a}{sign}{radical}"

    def __repr__(self) -> str:
        return f"QuadNum({self.a!r}, {self.b!r}, {self.d!r})"


_ZERO = QuadNum(0)
_ONE = QuadNum(1)


class Poly:
    """Immutable sparse univariate polynomial with QuadNum coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, NumberLike] | Iterable[tuple[int, NumberLike]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        cleaned: dict[int, QuadNum] = {}
        for e, c in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            v = QuadNum.coerce(c) + cleaned.get(e, _ZERO)
            if v:
                cleaned[e] = v
            else:
                cleaned.pop(e, None)
        object.__setattr__(self, "_coeffs", cleaned)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Poly is immutable")

    @staticmethod
    def x_power(e: int, coeff: NumberLike = 1) -> "Poly":
        return Poly([(e, coeff)])

    @staticmethod
    def constant(c: NumberLike) -> "Poly":
        return Poly([(0, c)])

    # -- structure -------------------------------------------------------

    def items(self) -> Iterator[tuple[int, QuadNum]]:
        return iter(sorted(self._coeffs.items()))

    def coefficient(self, e: int) -> QuadNum:
        return self._coeffs.get(e, _ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return max(self._coeffs)

    @property
    def leading_coefficient(self) -> QuadNum:
        return self.coefficient(self.degree)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        return Poly(list(self._coeffs.items()) + list(other._coeffs.items()))

    def __neg__(self) -> "Poly":
        return Poly([(e, -c) for e, c in self._coeffs.items()])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        acc: dict[int, QuadNum] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                v = acc.get(e, _ZERO) + c1 * c2
                if v:
                    acc[e] = v
                else:
                    acc.pop(e, None)
        return Poly(acc)

    def scale(self, k: NumberLike) -> "Poly":
        k = QuadNum.coerce(k)
        if not k:
            return Poly(())
        return Poly([(e, c * k) for e, c in self._coeffs.items()])

    def derivative(self) -> "Poly":
        return Poly([(e - 1, c * e) for e, c in self._coeffs.items() if e > 0])

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot normalise the zero polynomial")
        return self.scale(self.leading_coefficient.inverse())

    def evaluate(self, x: NumberLike) -> QuadNum:
        x = QuadNum.coerce(x)
        total = _ZERO
        for e, c in self._coeffs.items():
            term = c
            # small exponents only; repeated squaring is not worth it here
            p = _ONE
            for _ in range(e):
                p = p * x
            total = total + term * p
        return total

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q: dict[int, QuadNum] = {}
        r = self
        d = other.degree
        lead_inv = other.leading_coefficient.inverse()
        while not r.is_zero and r.degree >= d:
            shift = r.degree - d
            factor = r.leading_coefficient * lead_inv
            q[shift] = q.get(shift, _ZERO) + factor
            r = r - other * Poly([(shift, factor)])
        return Poly(q), r

    # -- comparisons / display -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted((e, hash(c)) for e, c in self._coeffs.items())))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            if e == 0:
                term = str(c)
            else:
                x = "x" if e == 1 else f"x^{e}"
                if c == _ONE:
                    term = x
                elif c == QuadNum(-1):
                    term = f"-{x}"
                elif c.is_rational:
                    term = f"{c}{x}"
                else:
                    term = f"({c}){x}"
            parts.append(term)
        text = parts[0]
        for term in parts[1:]:
            text += term if term.startswith("-") else "+" + term
        return text

    def __repr__(self) -> str:
        return f"Poly({dict(sorted(self._coeffs.items()))!r})"


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    while not q.is_zero:
        _, r = p.divmod(q)
        p, q = q, r
    if p.is_zero:
        return p
    return p.monic()


def is_separable(p: Poly) -> bool:
    """True when p has no repeated roots, i.e. gcd(p, p') is constant."""
    if p.is_zero:
        raise ValueError("separability is undefined for the zero polynomial")
    if p.degree == 0:
        return True
    g = poly_gcd(p, p.derivative())
    return g.degree == 0
