import itertools

import pytest

from wittkit.ntheory import primes_upto
from wittkit.reciprocity import (
    legendre,
    linking_table,
    reciprocity_check,
    redei_scan,
    redei_symbol,
)


def test_legendre_matches_exhaustive_squares():
    for p in primes_upto(100):
        if p == 2:
            continue
        squares = {(x * x) % p for x in range(1, p)}
        for a in range(p):
            want = 0 if a == 0 else (1 if a in squares else -1)
            assert legendre(a, p) == want, (a, p)


def test_legendre_rejects_even_modulus():
    with pytest.raises(ValueError):
        legendre(3, 2)
    with pytest.raises(ValueError):
        legendre(3, 9)


def test_reciprocity_check_values():
    e = reciprocity_check(3, 5)
    assert (e.symbol_pl, e.symbol_lp) == (-1, -1)
    assert e.relation_ok
    e = reciprocity_check(3, 7)
    assert (e.symbol_pl, e.symbol_lp) == (-1, 1)
    assert e.relation_ok
    e = reciprocity_check(13, 17)
    assert (e.symbol_pl, e.symbol_lp) == (1, 1)


def test_linking_table_small():
    table = linking_table(12)
    assert len(table) == 12  # ordered pairs from {3, 5, 7, 11}
    assert (table[0].p, table[0].l) == (3, 5)
    assert all(e.relation_ok for e in table)
    assert linking_table(5) == []
    with pytest.raises(ValueError):
        linking_table(4)


def test_linking_table_no_violations_to_200():
    assert all(e.relation_ok for e in linking_table(200))


def test_redei_borromean_triple():
    assert redei_symbol(5, 41, 61) == -1
    detail = redei_symbol(5, 41, 61, details=True)
    assert detail.symbol == -1
    assert detail.solution == (11, 4, 1)
    x, y, z = detail.solution
    assert x * x == 5 * y * y + 41 * z * z
    assert detail.solutions_checked >= 1


def test_redei_permutation_invariance():
    for triple, want in [((5, 41, 61), -1), ((5, 29, 109), 1), ((13, 17, 53), -1)]:
        for perm in itertools.permutations(triple):
            assert redei_symbol(*perm) == want, perm


def test_redei_preconditions():
    with pytest.raises(ValueError, match="not 1 mod 4"):
        redei_symbol(3, 41, 61)
    with pytest.raises(ValueError, match="not prime"):
        redei_symbol(9, 41, 61)
    with pytest.raises(ValueError, match="distinct"):
        redei_symbol(5, 5, 61)
    with pytest.raises(ValueError, match="pairwise symbol"):
        redei_symbol(5, 13, 17)


def test_redei_scan_finds_known_triples():
    rows = redei_scan(120)
    assert len(rows) == 25
    table = {(p, l, q): sym for p, l, q, sym in rows}
    assert table[(5, 41, 61)] == -1
    assert table[(5, 29, 109)] == 1
    plus = redei_scan(120, want=1)
    assert all(sym == 1 for _, _, _, sym in plus)
    assert len(plus) == sum(1 for sym in table.values() if sym == 1)
