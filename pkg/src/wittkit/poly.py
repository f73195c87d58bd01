"""Dense univariate polynomials over a ring descriptor.

Coefficients are stored ascending with trailing zeros trimmed; the zero
polynomial has degree -1. Division and gcd follow the usual conventions:
gcd is monic over a field, primitive with positive leading coefficient
over Z.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Sequence

from .rings import QQ, ZZ, Ring


class Polynomial:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Sequence):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, ring: Ring) -> "Polynomial":
        return cls(ring, [])

    @classmethod
    def one(cls, ring: Ring) -> "Polynomial":
        return cls(ring, [1])

    @classmethod
    def t(cls, ring: Ring) -> "Polynomial":
        return cls(ring, [0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, n: int):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.ring.zero

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self):
        return self[0]

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        R = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(R, [R.add(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, [self.ring.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        R = self.ring
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(R)
        out = [R.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if R.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = R.add(out[i + j], R.mul(a, b))
        return Polynomial(R, out)

    def scale(self, c) -> "Polynomial":
        R = self.ring
        c = R.coerce(c)
        return Polynomial(R, [R.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return Polynomial(self.ring, [self.ring.zero] * k + list(self.coeffs))

    def evaluate(self, x):
        R = self.ring
        x = R.coerce(x)
        acc = R.zero
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, x), c)
        return acc

    def derivative(self) -> "Polynomial":
        R = self.ring
        return Polynomial(
            R, [R.mul(R.from_int(i), c) for i, c in enumerate(self.coeffs)][1:]
        )

    def reversal(self, degree: int | None = None) -> "Polynomial":
        """t^d * p(1/t) for d = degree (defaults to deg p)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        return Polynomial(self.ring, [self[d - i] for i in range(d + 1)])

    def map_ring(self, ring: Ring, convert=None) -> "Polynomial":
        if convert is None:
            convert = ring.coerce
        return Polynomial(ring, [convert(c) for c in self.coeffs])

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Quotient and remainder; divisor leading coefficient must be a unit."""
        self._check(other)
        R = self.ring
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_inv = R.inv(other.leading())
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Polynomial.zero(R), self
        quot = [R.zero] * (dq + 1)
        for i in range(dq, -1, -1):
            c = R.mul(rem[i + other.degree], lead_inv)
            if R.is_zero(c):
                continue
            quot[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] = R.sub(rem[i + j], R.mul(c, b))
        return Polynomial(R, quot), Polynomial(R, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Division that must leave no remainder.

        Long division through ring.div, so over Z every quotient
        coefficient must come out integral; any failure raises
        "inexact division".
        """
        self._check(other)
        R = self.ring
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        dq = self.degree - other.degree
        if dq < 0:
            raise ValueError("inexact division")
        rem = list(self.coeffs)
        lead = other.leading()
        quot = [R.zero] * (dq + 1)
        for i in range(dq, -1, -1):
            try:
                c = R.div(rem[i + other.degree], lead)
            except ValueError:
                raise ValueError("inexact division") from None
            if R.is_zero(c):
                continue
            quot[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] = R.sub(rem[i + j], R.mul(c, b))
        if any(not R.is_zero(x) for x in rem):
            raise ValueError("inexact division")
        return Polynomial(R, quot)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.ring.inv(self.leading()))

    def content(self) -> int:
        """Gcd of integer coefficients, sign of the leading coefficient."""
        if self.ring != ZZ:
            raise ValueError("content is defined over Z")
        if self.is_zero():
            return 0
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, c)
        return g if self.leading() > 0 else -g

    def primitive(self) -> "Polynomial":
        c = self.content()
        if c in (0, 1):
            return self
        return Polynomial(ZZ, [a // c for a in self.coeffs])

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd over a field; primitive, positive-leading over Z."""
        self._check(other)
        R = self.ring
        if R == ZZ:
            a, b = self.primitive(), other.primitive()
            # primitive pseudo-remainder sequence: stays in Z, growth
            # clamped by taking contents out at every step
            while not b.is_zero():
                r = a
                lcb = b.leading()
                while not r.is_zero() and r.degree >= b.degree:
                    shift = r.degree - b.degree
                    r = r.scale(lcb) - b.scale(r.leading()).shift(shift)
                a, b = b, r.primitive()
            return a.primitive()
        if not R.is_field:
            raise ValueError(f"gcd unsupported over {R}")
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({self.ring!r}, {list(self.coeffs)!r})"


def format_poly(p: Polynomial, var: str = "t") -> str:
    """Human form, ascending powers: '1 - 5t + 6t^2'."""
    R = p.ring
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if R.is_zero(c):
            continue
        text = R.format(c)
        neg = text.startswith("-")
        mag = text[1:] if neg else text
        if i == 0:
            body = mag
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == "1" else f"{mag}{power}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def poly_from_roots(ring: Ring, roots: Sequence) -> Polynomial:
    """prod (t - r)."""
    acc = Polynomial.one(ring)
    for r in roots:
        acc = acc * Polynomial(ring, [ring.neg(ring.coerce(r)), ring.one])
    return acc


def lift_to_z(p: Polynomial) -> Polynomial:
    """Clear denominators of a Q-polynomial and make it primitive."""
    if p.ring == ZZ:
        return p
    if p.ring != QQ:
        raise ValueError("lift_to_z expects a polynomial over Q or Z")
    den = 1
    for c in p.coeffs:
        c = Fraction(c)
        den = den * c.denominator // int_gcd(den, c.denominator)
    return Polynomial(ZZ, [int(Fraction(c) * den) for c in p.coeffs]).primitive()
