"""Quadratic residue symbols as linking numbers, the reciprocity
relation, and the Rédei triple symbol.

The Rédei symbol of distinct primes p, l, q = 1 mod 4 with all pairwise
Legendre symbols +1 is computed from a primitive solution of
x^2 - p y^2 - l z^2 = 0 normalized classically (y even, x > 0, q not
dividing z), evaluated as (x + y sqrt(p) / q). The code checks its own
normalization: every found solution and both square roots of p mod q
must give one symbol, or the computation refuses to answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ntheory import is_prime, sqrt_mod_prime

REDEI_SEARCH_START = 64
REDEI_SEARCH_CAP = 2**20


def legendre(a: int, p: int) -> int:
    """(a/p) by Euler's criterion; p must be an odd prime."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


@dataclass(frozen=True)
class LinkingEntry:
    p: int
    l: int
    p_mod4: int
    l_mod4: int
    symbol_pl: int
    symbol_lp: int
    relation_ok: bool


def reciprocity_check(p: int, l: int) -> LinkingEntry:
    """Verified reciprocity relation for distinct odd primes: symbols
    equal when p or l is 1 mod 4, opposite when both are 3 mod 4."""
    if p == l:
        raise ValueError("primes must be distinct")
    s_pl = legendre(p, l)
    s_lp = legendre(l, p)
    if p % 4 == 1 or l % 4 == 1:
        ok = s_pl == s_lp
    else:
        ok = s_pl == -s_lp
    if not ok:
        raise AssertionError(f"quadratic reciprocity violated at ({p}, {l})")
    return LinkingEntry(p, l, p % 4, l % 4, s_pl, s_lp, ok)


def linking_table(bound: int) -> list[LinkingEntry]:
    """All ordered pairs of distinct odd primes below bound, in (p, l)
    order, each with its verified relation."""
    if bound < 5:
        raise ValueError("bound must be >= 5")
    odd_primes = [p for p in range(3, bound) if is_prime(p)]
    return [
        reciprocity_check(p, l) for p in odd_primes for l in odd_primes if p != l
    ]


@dataclass(frozen=True)
class RedeiTriple:
    p: int
    l: int
    q: int
    symbol: int
    solution: tuple[int, int, int]
    solutions_checked: int


def _redei_solutions(p: int, l: int, q: int, bound: int) -> list[tuple[int, int, int]]:
    """Primitive solutions of x^2 = p y^2 + l z^2 with y even, x > 0,
    q not dividing z, within |x|, |y|, |z| <= bound."""
    out = []
    for z in range(1, bound + 1):
        if z % q == 0:
            continue
        lz2 = l * z * z
        for y in range(0, bound + 1, 2):
            x2 = p * y * y + lz2
            x = math.isqrt(x2)
            if x * x != x2 or x > bound:
                continue
            if math.gcd(math.gcd(x, y), z) != 1:
                continue
            out.append((x, y, z))
    return out


def redei_symbol(p: int, l: int, q: int, *, details: bool = False):
    """The +-1 triple symbol; see the module docstring.

    Preconditions: p, l, q distinct primes = 1 mod 4, all pairwise
    Legendre symbols +1. The search widens geometrically from 64 and
    gives up at 2^20 ("search exhausted").
    """
    for v in (p, l, q):
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        if v % 4 != 1:
            raise ValueError(f"{v} is not 1 mod 4")
    if len({p, l, q}) != 3:
        raise ValueError("primes must be distinct")
    for a, b in ((p, l), (p, q), (l, q)):
        if legendre(a, b) != 1 or legendre(b, a) != 1:
            raise ValueError(f"pairwise symbol for ({a}, {b}) is not +1")

    r = sqrt_mod_prime(p, q)
    if r is None:
        raise ValueError(f"{p} is not a square mod {q}")  # unreachable given above

    bound = REDEI_SEARCH_START
    solutions: list[tuple[int, int, int]] = []
    while not solutions:
        solutions = _redei_solutions(p, l, q, bound)
        if solutions:
            break
        if bound >= REDEI_SEARCH_CAP:
            raise ValueError(
                f"search exhausted: no solution of x^2 = {p} y^2 + {l} z^2"
                f" within |y|,|z| <= {REDEI_SEARCH_CAP}"
            )
        bound *= 2

    symbols = set()
    for x, y, z in solutions:
        for root in (r, q - r):
            u = (x + y * root) % q
            # (x+yr)(x-yr) = l z^2 mod q is a nonzero square times l... both
            # factors are units because q divides neither z nor the product
            if u == 0:
                raise AssertionError(f"normalization violated: q | x + y r at {(x, y, z)}")
            symbols.add(legendre(u, q))
    if len(symbols) != 1:
        raise AssertionError(
            "normalization violated: solutions or roots disagree on the symbol"
        )
    symbol = symbols.pop()
    if details:
        return RedeiTriple(p, l, q, symbol, solutions[0], len(solutions))
    return symbol


def redei_scan(limit: int, want: int | None = None, max_triples: int | None = None):
    """Admissible triples with p < l < q < limit and their symbols;
    optionally only those with a given symbol value."""
    primes = [v for v in range(5, limit) if is_prime(v) and v % 4 == 1]
    out = []
    for i, p in enumerate(primes):
        for j in range(i + 1, len(primes)):
            l = primes[j]
            if legendre(p, l) != 1:
                continue
            for k in range(j + 1, len(primes)):
                q = primes[k]
                if legendre(p, q) != 1 or legendre(l, q) != 1:
                    continue
                sym = redei_symbol(p, l, q)
                if want is None or sym == want:
                    out.append((p, l, q, sym))
                    if max_triples and len(out) >= max_triples:
                        return out
    return out
