"""Truncated power series with exact coefficients.

A series carries coefficients for orders 0..N. Arithmetic truncates to
the smaller order of the operands. exp and log are restricted to Q,
which is where they are needed (ghost reconstruction, zeta expansion).
"""

from __future__ import annotations

from typing import Sequence

from .matrices import solve_linear_system
from .poly import Polynomial
from .rings import QQ, Ring


class TruncatedPowerSeries:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Sequence, order: int | None = None):
        cs = [ring.coerce(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = cs[: order + 1] + [ring.zero] * (order + 1 - len(cs))
        elif not cs:
            raise ValueError("empty series needs an explicit order")
        self.ring = ring
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"series truncated at order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedPowerSeries({self.ring!r}, {list(self.coeffs)!r})"

    def truncate(self, order: int) -> "TruncatedPowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedPowerSeries(self.ring, self.coeffs, order)

    def _join(self, other: "TruncatedPowerSeries") -> int:
        if self.ring != other.ring:
            raise ValueError("ring mismatch")
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedPowerSeries") -> "TruncatedPowerSeries":
        N = self._join(other)
        R = self.ring
        return TruncatedPowerSeries(
            R, [R.add(self.coeffs[i], other.coeffs[i]) for i in range(N + 1)]
        )

    def __neg__(self) -> "TruncatedPowerSeries":
        R = self.ring
        return TruncatedPowerSeries(R, [R.neg(c) for c in self.coeffs])

    def __sub__(self, other: "TruncatedPowerSeries") -> "TruncatedPowerSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedPowerSeries") -> "TruncatedPowerSeries":
        N = self._join(other)
        R = self.ring
        out = [R.zero] * (N + 1)
        for i in range(N + 1):
            a = self.coeffs[i]
            if R.is_zero(a):
                continue
            for j in range(N + 1 - i):
                out[i + j] = R.add(out[i + j], R.mul(a, other.coeffs[j]))
        return TruncatedPowerSeries(R, out)

    def scale(self, c) -> "TruncatedPowerSeries":
        R = self.ring
        c = R.coerce(c)
        return TruncatedPowerSeries(R, [R.mul(c, a) for a in self.coeffs])

    def __str__(self):
        from .poly import format_poly

        head = format_poly(Polynomial(self.ring, self.coeffs))
        return f"{head} + O(t^{self.order + 1})"


def series_of_polynomial(p: Polynomial, order: int) -> TruncatedPowerSeries:
    return TruncatedPowerSeries(p.ring, list(p.coeffs), order)


def series_of_rational(num: Polynomial, den: Polynomial, order: int) -> TruncatedPowerSeries:
    """Expand num/den to the given order; den(0) must be a unit."""
    if num.ring != den.ring:
        raise ValueError("ring mismatch")
    R = num.ring
    d0 = den.constant()
    inv = R.inv(d0)
    out = []
    for n in range(order + 1):
        acc = num[n]
        for k in range(1, min(n, den.degree) + 1):
            acc = R.sub(acc, R.mul(den[k], out[n - k]))
        out.append(R.mul(inv, acc))
    return TruncatedPowerSeries(R, out)


def series_exp(s: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """exp of a series with constant term 0, over Q."""
    if s.ring != QQ:
        raise ValueError("exp needs coefficients over Q")
    if s.coeffs[0] != 0:
        raise ValueError("exp needs constant term 0")
    N = s.order
    out = [QQ.one]
    # E' = s'E termwise: n*E_n = sum_{k=1..n} k*s_k*E_{n-k}
    for n in range(1, N + 1):
        acc = QQ.zero
        for k in range(1, n + 1):
            acc += k * s.coeffs[k] * out[n - k]
        out.append(acc / n)
    return TruncatedPowerSeries(QQ, out)


def series_log(s: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """log of a series with constant term 1, over Q."""
    if s.ring != QQ:
        raise ValueError("log needs coefficients over Q")
    if s.coeffs[0] != 1:
        raise ValueError("log needs constant term 1")
    N = s.order
    out = [QQ.zero]
    # f L' = f' termwise: n*f_0*L_n = n*f_n - sum_{j=1..n-1} f_j*(n-j)*L_{n-j}
    for n in range(1, N + 1):
        acc = n * s.coeffs[n]
        for j in range(1, n):
            acc -= s.coeffs[j] * (n - j) * out[n - j]
        out.append(acc / n)
    return TruncatedPowerSeries(QQ, out)


def pade_reconstruct(
    s: TruncatedPowerSeries, dnum: int, dden: int
) -> tuple[Polynomial, Polynomial]:
    """Rational form (P, Q) with deg P <= dnum, deg Q <= dden, Q(0) = 1.

    The denominator comes from the exact Toeplitz system on orders
    dnum+1 .. dnum+dden; the candidate is then re-expanded and must
    match every supplied coefficient, so the answer is a true rational
    form of the data, not just a local fit.
    """
    if dnum < 0 or dden < 0:
        raise ValueError("degrees must be >= 0")
    if s.order < dnum + dden:
        raise ValueError(
            f"series order {s.order} below dnum + dden = {dnum + dden}"
        )
    if s.ring != QQ:
        raise ValueError("pade_reconstruct needs coefficients over Q")

    def coeff(n: int):
        return s.coeffs[n] if n >= 0 else QQ.zero

    if dden == 0:
        q_tail: list = []
    else:
        A = [
            [coeff(n - j) for j in range(1, dden + 1)]
            for n in range(dnum + 1, dnum + dden + 1)
        ]
        b = [QQ.neg(coeff(n)) for n in range(dnum + 1, dnum + dden + 1)]
        sol = solve_linear_system(QQ, A, b)
        if sol is None:
            raise ValueError("no rational reconstruction")
        q_tail = sol
    den = Polynomial(QQ, [QQ.one] + q_tail)
    num = Polynomial(
        QQ,
        [
            sum((den[j] * coeff(n - j) for j in range(min(n, dden) + 1)), QQ.zero)
            for n in range(dnum + 1)
        ],
    )
    if series_of_rational(num, den, s.order).coeffs != s.coeffs:
        raise ValueError("no rational reconstruction")
    return num, den
