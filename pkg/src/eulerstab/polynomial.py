"""Dense univariate polynomials with exact rational coefficients.

Coefficients are `fractions.Fraction` values stored lowest degree first, so
``Polynomial([1, 4, 1])`` is ``1 + 4x + x^2``.  The zero polynomial is the
empty coefficient tuple, and every constructor strips trailing zeros, so
structural equality coincides with mathematical equality.  That exactness is
what the identity checks and stability decisions in the rest of the package
rely on; nothing here ever touches floating point, and floats are rejected
on construction rather than silently truncated.

The degree of the zero polynomial is the distinguished marker
``NEG_INFINITY`` (``float("-inf")``), which compares below every integer.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Tuple, Union

Rational = Fraction
Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INFINITY = float("-inf")


def _coerce(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {value!r}")


class Polynomial:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(cs)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls([1])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Polynomial":
        """coeff * x**power."""
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        return cls([0] * power + [coeff])

    # ------------------------------------------------------------------
    # basic structure

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree; NEG_INFINITY for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @property
    def constant_term(self) -> Fraction:
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    parts.append(xs)
                elif c == -1:
                    parts.append(f"-{xs}")
                else:
                    parts.append(f"{c}*{xs}")
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    # ------------------------------------------------------------------
    # ring operations

    def _wrap(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([_coerce(other)])

    def __add__(self, other) -> "Polynomial":
        other = self._wrap(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._wrap(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._wrap(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = _coerce(other)
            return Polynomial([c * a for a in self._coeffs])
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Polynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, point: Scalar) -> Fraction:
        """Exact evaluation by Horner's rule."""
        x = _coerce(point)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    # ------------------------------------------------------------------
    # calculus and reshaping

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self._coeffs)][1:])

    def reciprocal(self, m: int) -> "Polynomial":
        """x**m * p(1/x): reverse the coefficients into degree m.

        Requires m >= degree(p).
        """
        if m < 0:
            raise ValueError("reciprocal degree must be nonnegative")
        if self.degree > m:
            raise ValueError(f"reciprocal degree {m} is below the polynomial degree {self.degree}")
        out = [Fraction(0)] * (m + 1)
        for i, c in enumerate(self._coeffs):
            out[m - i] = c
        return Polynomial(out)

    def even_odd_split(self) -> Tuple["Polynomial", "Polynomial"]:
        """(E, O) with p(x) = E(x^2) + x * O(x^2)."""
        return Polynomial(self._coeffs[0::2]), Polynomial(self._coeffs[1::2])

    def of_x_squared(self) -> "Polynomial":
        """p(x^2)."""
        out = []
        for c in self._coeffs:
            out.append(c)
            out.append(Fraction(0))
        return Polynomial(out)

    def shift_up(self, k: int = 1) -> "Polynomial":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self._coeffs:
            return Polynomial()
        return Polynomial((Fraction(0),) * k + self._coeffs)

    # ------------------------------------------------------------------
    # division

    def __divmod__(self, other) -> Tuple["Polynomial", "Polynomial"]:
        other = self._wrap(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Polynomial(), self
        rem = list(self._coeffs)
        div = other._coeffs
        lead = div[-1]
        qlen = len(rem) - len(div) + 1
        quo = [Fraction(0)] * qlen
        for i in range(qlen - 1, -1, -1):
            c = rem[i + len(div) - 1] / lead
            if c:
                quo[i] = c
                for j, b in enumerate(div):
                    rem[i + j] -= c * b
        return Polynomial(quo), Polynomial(rem[: len(div) - 1])

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        """Division that must leave no remainder."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError(f"{other} does not divide {self} exactly")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self._coeffs[-1]
        if lead == 1:
            return self
        return Polynomial([c / lead for c in self._coeffs])


def interleave(even: Polynomial, odd: Polynomial) -> Polynomial:
    """Inverse of even_odd_split: returns even(x^2) + x * odd(x^2)."""
    e, o = even.coeffs, odd.coeffs
    out = [Fraction(0)] * max(2 * len(e), 2 * len(o) + 1)
    for i, c in enumerate(e):
        out[2 * i] = c
    for i, c in enumerate(o):
        out[2 * i + 1] = c
    return Polynomial(out)


def primitive_integer_coeffs(p: Polynomial) -> Tuple[int, ...]:
    """Integer coefficient vector of p scaled by a positive rational so the
    entries are coprime integers.  Signs are preserved."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no primitive form")
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = _int_gcd(g, abs(v))
    return tuple(v // g for v in ints)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor over the rationals.

    Remainders are rescaled to primitive integer form after every Euclidean
    step to keep coefficient growth in check.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero:
        r = a % b
        if not r.is_zero:
            r = Polynomial(primitive_integer_coeffs(r))
        a, b = b, r
    return a.monic()
