"""Finite-level periodic-orbit packets over a closed point.

A point at level (p, n) is a character index a mod m, m = p^n - 1,
labeling chi_a(g^k) = e^{2 pi i a k / m} for the field's fixed
generator g. Frobenius precomposes with the p-power map, so it sends a
to a*p mod m. Faithful points (gcd(a, m) = 1) fall into orbits of
length exactly n, and the packet over the closed point consists of
phi(m)/n such orbits, each of suspension length n log p.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .finitefield import finite_field_make
from .ntheory import euler_phi, is_prime


@dataclass(frozen=True)
class FiniteLevelPoint:
    p: int
    n: int
    a: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.n < 1:
            raise ValueError("level must be >= 1")
        if not 0 <= self.a < self.m:
            raise ValueError(f"index {self.a} out of range mod {self.m}")

    @property
    def m(self) -> int:
        return max(self.p**self.n - 1, 1)

    @property
    def faithful(self) -> bool:
        return math.gcd(self.a, self.m) == 1

    @property
    def generator_tag(self) -> str:
        field = finite_field_make(self.p, self.n)
        return field.format_element(field.gen)


@dataclass(frozen=True)
class PacketSummary:
    p: int
    n: int
    orbit_count: int
    orbit_length: int
    suspension_length: float
    faithful_count: int


def frobenius_power(P: FiniteLevelPoint, nu: int) -> FiniteLevelPoint:
    """F_nu on characters: index a -> a * nu mod m."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    return FiniteLevelPoint(P.p, P.n, (P.a * nu) % P.m)


def frobenius_step(P: FiniteLevelPoint) -> FiniteLevelPoint:
    return frobenius_power(P, P.p)


def orbit_of(P: FiniteLevelPoint) -> list[FiniteLevelPoint]:
    """Iterate frobenius_step until the start returns."""
    orbit = [P]
    cur = frobenius_step(P)
    while cur.a != P.a:
        orbit.append(cur)
        cur = frobenius_step(cur)
    return orbit


def _orbit_partition(p: int, n: int) -> list[list[int]]:
    """Frobenius orbits of the faithful indices, each led by its
    smallest member, listed in order of that leader."""
    m = max(p**n - 1, 1)
    if m == 1:
        return [[0]]
    seen = bytearray(m)
    orbits = []
    for a in range(1, m):
        if seen[a] or math.gcd(a, m) != 1:
            continue
        orbit = []
        cur = a
        while not seen[cur]:
            seen[cur] = 1
            orbit.append(cur)
            cur = cur * p % m
        orbits.append(orbit)
    return orbits


def packet_summary(p: int, n: int) -> PacketSummary:
    """Orbit packet over the closed point with residue field F_{p^n}.

    Every faithful orbit must have length exactly n; a violation would
    falsify the model and raises immediately.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be >= 1")
    m = p**n - 1
    if m > 10**9:
        raise ValueError(f"p^n - 1 = {m} above the 10^9 limit")
    orbits = _orbit_partition(p, n)
    expected_len = 1 if m <= 1 else n
    for orbit in orbits:
        if len(orbit) != expected_len:
            raise AssertionError(
                f"orbit {orbit} of length {len(orbit)}, expected {expected_len}"
            )
    faithful = euler_phi(max(m, 1))
    if len(orbits) * expected_len != faithful:
        raise AssertionError("orbit partition does not cover the faithful points")
    return PacketSummary(
        p=p,
        n=n,
        orbit_count=len(orbits),
        orbit_length=expected_len,
        suspension_length=n * math.log(p),
        faithful_count=faithful,
    )


def packet_report(p: int, n: int, list_limit: int = 10**4) -> dict:
    """JSON-ready packet summary; the orbit listing is included only
    when the faithful count stays within list_limit."""
    s = packet_summary(p, n)
    report = {
        "p": s.p,
        "n": s.n,
        "orbit_count": s.orbit_count,
        "orbit_length": s.orbit_length,
        "suspension_length": s.suspension_length,
        "faithful_count": s.faithful_count,
        "generator": FiniteLevelPoint(p, n, 0).generator_tag
        if p**n <= 10**7
        else None,
    }
    if s.faithful_count <= list_limit:
        report["orbits"] = _orbit_partition(p, n)
    else:
        report["orbits"] = None
        report["orbits_omitted"] = (
            f"faithful count {s.faithful_count} above listing limit {list_limit}"
        )
    return report


def evaluate_integer(f: int, P: FiniteLevelPoint) -> complex:
    """Eq. of the character pairing: 0 when p | f, else chi_a at the
    discrete log of f in F_{p^n}."""
    if f % P.p == 0:
        return 0j
    field = finite_field_make(P.p, P.n)
    k = field.discrete_log(field.gen, field.from_int(f))
    return cmath.exp(2j * cmath.pi * P.a * k / P.m)


def frobenius_equivariance_check(
    f: int, P: FiniteLevelPoint, nu: int, tol: float = 1e-9
) -> bool:
    """evaluate(f, F_nu(P)) = evaluate(f, P)^nu, to floating tolerance."""
    if math.gcd(nu, P.m) != 1:
        raise ValueError(f"nu = {nu} is not invertible mod {P.m}")
    lhs = evaluate_integer(f, frobenius_power(P, nu))
    rhs = evaluate_integer(f, P) ** nu
    return abs(lhs - rhs) < tol
