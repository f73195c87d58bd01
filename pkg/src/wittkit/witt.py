"""The rational Witt ring of Z, Q, or F_p.

An element is a reduced rational function f = num/den with
num(0) = den(0) = 1. Addition is multiplication of rational functions,
multiplication is the tensor construction on companion-matrix pairs,
and the ghost components g_n (with ghost(1 - at) = (a, a^2, ...)) turn
both operations into pointwise arithmetic.

The tensor determinant det(1 - t A (x) B) is evaluated through Newton
power sums rather than a literal Kronecker matrix: the power sums of
A (x) B are products of those of A and B, and both directions of the
Newton recurrence are division-free or exactly divisible, so the path
is exact over Z and, by lifting representatives, over F_p. The literal
Kronecker/Berkowitz route is kept alongside as a cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .matrices import Matrix, companion, det_one_minus_t
from .poly import Polynomial
from .rings import QQ, ZZ, PrimeField, Ring
from .series import TruncatedPowerSeries, pade_reconstruct, series_of_rational

DEFAULT_MATRIX_CAP = 64


class WittVector:
    """Canonical reduced rational function with constant terms 1."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.one(num.ring)
        if num.ring != den.ring:
            raise ValueError("ring mismatch")
        R = num.ring
        if den.is_zero():
            raise ZeroDivisionError("denominator is zero")
        if num.is_zero():
            raise ValueError("not a Witt vector: f(0) != 1")
        g = num.gcd(den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        cu, cv = num.constant(), den.constant()
        if R.is_zero(cu) or not R.eq(cu, cv):
            raise ValueError("not a Witt vector: f(0) != 1")
        if not R.eq(cu, R.one):
            if R.is_field:
                inv = R.inv(cu)
                num, den = num.scale(inv), den.scale(inv)
            else:
                try:
                    num = Polynomial(R, [R.div(c, cu) for c in num.coeffs])
                    den = Polynomial(R, [R.div(c, cu) for c in den.coeffs])
                except ValueError:
                    raise ValueError("not defined over Z") from None
        self.ring = R
        self.num = num
        self.den = den

    def __eq__(self, other):
        if not isinstance(other, WittVector):
            return NotImplemented
        return self.ring == other.ring and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.ring, self.num, self.den))

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"WittVector({self.num!r}, {self.den!r})"

    def map_ring(self, ring: Ring) -> "WittVector":
        return WittVector(self.num.map_ring(ring), self.den.map_ring(ring))

    def series(self, order: int) -> TruncatedPowerSeries:
        return series_of_rational(self.num, self.den, order)

    def to_json(self) -> dict:
        R = self.ring
        return {
            "num": [R.to_json(c) for c in self.num.coeffs],
            "den": [R.to_json(c) for c in self.den.coeffs],
            "ring": R.name,
        }

    @classmethod
    def from_json(cls, data: dict) -> "WittVector":
        from .rings import ring_by_name

        R = ring_by_name(data["ring"])
        num = Polynomial(R, [R.from_json(c) for c in data["num"]])
        den = Polynomial(R, [R.from_json(c) for c in data["den"]])
        return cls(num, den)


class MatrixPair(NamedTuple):
    A: Matrix
    B: Matrix


def witt_zero(ring: Ring = ZZ) -> WittVector:
    return WittVector(Polynomial.one(ring))


def witt_one(ring: Ring = ZZ) -> WittVector:
    return teichmuller(ring.one, ring)


def teichmuller(r, ring: Ring | None = None) -> WittVector:
    """[r] = 1 - rt."""
    if ring is None:
        ring = QQ if isinstance(r, Fraction) else ZZ
    r = ring.coerce(r)
    return WittVector(Polynomial(ring, [ring.one, ring.neg(r)]))


def witt_add(f: WittVector, g: WittVector) -> WittVector:
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    return WittVector(f.num * g.num, f.den * g.den)


def witt_neg(f: WittVector) -> WittVector:
    return WittVector(f.den, f.num)


def witt_sub(f: WittVector, g: WittVector) -> WittVector:
    return witt_add(f, witt_neg(g))


def companion_pair(f: WittVector) -> MatrixPair:
    """Almkvist representative (A, B) with det(1-tA)/det(1-tB) = f."""
    A = companion(f.num.reversal())
    B = companion(f.den.reversal())
    if det_one_minus_t(A) != f.num or det_one_minus_t(B) != f.den:
        raise RuntimeError("companion pair failed det re-expansion")
    return MatrixPair(A, B)


def power_sums(P: Polynomial, m: int) -> list:
    """p_1..p_m with p_k = sum of a_i^k where P = prod(1 - a_i t).

    Newton's identity in the direction that needs no division, so any
    coefficient ring works.
    """
    R = P.ring
    out: list = []
    for n in range(1, m + 1):
        acc = R.mul(R.from_int(-n), P[n])
        for k in range(1, n):
            acc = R.sub(acc, R.mul(out[k - 1], P[n - k]))
        out.append(acc)
    return out


def poly_from_power_sums(ring: Ring, sums: Sequence, degree: int) -> Polynomial:
    """Inverse of power_sums; the divisions by n are exact for genuine
    power-sum data (over Z they recover integer determinant coefficients)."""
    c: list = [ring.one]
    for n in range(1, degree + 1):
        acc = sums[n - 1]
        for k in range(1, n):
            acc = ring.add(acc, ring.mul(sums[k - 1], c[n - k]))
        c.append(ring.div(ring.neg(acc), ring.from_int(n)))
    return Polynomial(ring, c)


def tensor_det(P: Polynomial, Q: Polynomial) -> Polynomial:
    """det(1 - t A(x)B) for companion matrices A, B of P, Q.

    Power sums multiply under the Kronecker product. Over F_p the
    computation lifts representatives to Z and reduces afterwards,
    which commutes with taking determinants.
    """
    R = P.ring
    if not R.eq(P.constant(), R.one) or not R.eq(Q.constant(), R.one):
        raise ValueError("tensor_det needs constant terms 1")
    if isinstance(R, PrimeField):
        PZ = Polynomial(ZZ, list(P.coeffs))
        QZ = Polynomial(ZZ, list(Q.coeffs))
        return tensor_det(PZ, QZ).map_ring(R, R.from_int)
    d = P.degree * Q.degree
    sp = power_sums(P, d)
    sq = power_sums(Q, d)
    return poly_from_power_sums(R, [R.mul(a, b) for a, b in zip(sp, sq)], d)


def witt_mul(f: WittVector, g: WittVector, cap: int = DEFAULT_MATRIX_CAP) -> WittVector:
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    sizes = (
        f.num.degree * g.num.degree,
        f.den.degree * g.den.degree,
        f.num.degree * g.den.degree,
        f.den.degree * g.num.degree,
    )
    worst = max(sizes)
    if worst > cap:
        raise ValueError(f"intermediate matrix size {worst} exceeds cap {cap}")
    num = tensor_det(f.num, g.num) * tensor_det(f.den, g.den)
    den = tensor_det(f.num, g.den) * tensor_det(f.den, g.num)
    return WittVector(num, den)


def witt_mul_kronecker(f: WittVector, g: WittVector) -> WittVector:
    """Reference path: literal Kronecker products and division-free
    determinants. Slow; used to cross-check witt_mul."""
    pf, pg = companion_pair(f), companion_pair(g)
    num = det_one_minus_t(pf.A.kron(pg.A)) * det_one_minus_t(pf.B.kron(pg.B))
    den = det_one_minus_t(pf.A.kron(pg.B)) * det_one_minus_t(pf.B.kron(pg.A))
    return WittVector(num, den)


def ghost(f: WittVector, N: int) -> list:
    """g_1..g_N, the coefficients of -t (d/dt) log f."""
    if N < 1:
        raise ValueError("N must be >= 1")
    R = f.ring
    c = f.series(N).coeffs
    out: list = []
    for n in range(1, N + 1):
        acc = R.mul(R.from_int(-n), c[n])
        for k in range(1, n):
            acc = R.sub(acc, R.mul(out[k - 1], c[n - k]))
        out.append(acc)
    return out


def from_ghost(g: Sequence, dnum: int, dden: int) -> WittVector:
    """Reconstruct f over Q with the given ghost components.

    f = exp(-sum g_n t^n / n) expanded as a series, then rationalized;
    raises "no rational reconstruction" if no (dnum, dden) form matches
    every ghost component supplied.
    """
    gq = [QQ.coerce(x) for x in g]
    N = len(gq)
    if N < 1:
        raise ValueError("ghost sequence is empty")
    coeffs = [QQ.one]
    # f'/f = -sum g_n t^{n-1} gives n c_n = -(g_n + sum_{k<n} g_k c_{n-k})
    for n in range(1, N + 1):
        acc = gq[n - 1]
        for k in range(1, n):
            acc += gq[k - 1] * coeffs[n - k]
        coeffs.append(-acc / n)
    num, den = pade_reconstruct(TruncatedPowerSeries(QQ, coeffs), dnum, dden)
    return WittVector(num, den)


def _frobenius_poly(P: Polynomial, nu: int) -> Polynomial:
    """det(1 - t A^nu) for the companion matrix A of P, via power sums."""
    R = P.ring
    if isinstance(R, PrimeField):
        PZ = Polynomial(ZZ, list(P.coeffs))
        return _frobenius_poly(PZ, nu).map_ring(R, R.from_int)
    n = P.degree
    sp = power_sums(P, nu * n)
    return poly_from_power_sums(R, [sp[nu * k - 1] for k in range(1, n + 1)], n)


def frobenius(f: WittVector, nu: int) -> WittVector:
    """F_nu: on matrix pairs (A, B) -> (A^nu, B^nu); F_nu[a] = [a^nu]."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    if nu == 1:
        return f
    return WittVector(_frobenius_poly(f.num, nu), _frobenius_poly(f.den, nu))


def frobenius_via_matrices(f: WittVector, nu: int) -> WittVector:
    """Reference path: literal matrix powers and division-free
    determinants; used to cross-check frobenius."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    pair = companion_pair(f)
    return WittVector(
        det_one_minus_t(pair.A.pow(nu)), det_one_minus_t(pair.B.pow(nu))
    )


def verschiebung(f: WittVector, nu: int) -> WittVector:
    """V_nu: f(t) -> f(t^nu)."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    if nu == 1:
        return f
    R = f.ring

    def spread(p: Polynomial) -> Polynomial:
        out = [R.zero] * (p.degree * nu + 1) if not p.is_zero() else []
        for i, c in enumerate(p.coeffs):
            out[i * nu] = c
        return Polynomial(R, out)

    return WittVector(spread(f.num), spread(f.den))


def canonical_projection(f: WittVector):
    """f -> -f'(0)/f(0); equals the first ghost component."""
    return f.ring.sub(f.den[1], f.num[1])
