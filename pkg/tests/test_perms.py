"""Permutation primitives against independent oracles."""

from __future__ import annotations

import itertools

import pytest

from nomcode.perms import (
    PATTERNS3,
    anti_exceedances,
    as_pattern,
    as_perm,
    avoids,
    complement,
    compose,
    contains_pattern,
    cycles,
    enumerate_perms,
    exceedances,
    format_cycles,
    format_perm,
    from_cycles,
    identity,
    inverse,
    is_cyclic,
    is_perm,
    nom,
    parse_cycles,
    parse_perm,
    reverse,
    transposition,
)


def _all_perms(n):
    return itertools.permutations(range(1, n + 1))


def _contains_by_triple_loop(p, pat):
    # second containment route: explicit index loops, no combinations()
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = p[i], p[j], p[k]
                ranks = (
                    1 + (a > b) + (a > c),
                    1 + (b > a) + (b > c),
                    1 + (c > a) + (c > b),
                )
                if ranks == pat:
                    return True
    return False


def test_pattern_scan_matches_triple_loop_oracle():
    for n in range(7):
        for p in _all_perms(n):
            for pat in PATTERNS3:
                assert contains_pattern(p, pat) == _contains_by_triple_loop(p, pat)


def test_avoids_is_the_negation():
    p = (4, 2, 1, 3)
    for pat in PATTERNS3:
        assert avoids(p, pat) != contains_pattern(p, pat)


def test_as_pattern_accepts_strings_and_rejects_junk():
    assert as_pattern("132") == (1, 3, 2)
    assert as_pattern((2, 1, 3)) == (2, 1, 3)
    with pytest.raises(ValueError):
        as_pattern("12")
    with pytest.raises(ValueError):
        as_pattern((1, 2, 4))


def test_is_perm_and_as_perm():
    assert is_perm(()) and is_perm((1,)) and is_perm((3, 1, 2))
    assert not is_perm((1, 1)) and not is_perm((2, 3))
    with pytest.raises(ValueError):
        as_perm((0, 1))


def test_compose_reads_left_to_right():
    # q(p(i)) pointwise, for every pair on [4]
    for p in _all_perms(4):
        for q in _all_perms(4):
            r = compose(p, q)
            assert all(r[i - 1] == q[p[i - 1] - 1] for i in range(1, 5))
    with pytest.raises(ValueError):
        compose((1, 2), (1, 2, 3))


def test_compose_is_associative_on_s4():
    trio = ((2, 1, 4, 3), (3, 4, 1, 2), (2, 3, 4, 1))
    p, q, r = trio
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


def test_inverse_reverse_complement_are_involutions():
    for p in _all_perms(5):
        assert inverse(inverse(p)) == p
        assert reverse(reverse(p)) == p
        assert complement(complement(p)) == p
        assert compose(p, inverse(p)) == identity(5)
        # the two mirrors commute
        assert reverse(complement(p)) == complement(reverse(p))


def test_transposition_contract():
    t = transposition(5, 2, 4)
    assert t == (1, 4, 3, 2, 5)
    assert transposition(3, 2, 2) == identity(3)
    assert compose(t, t) == identity(5)
    with pytest.raises(ValueError):
        transposition(3, 0, 2)
    with pytest.raises(ValueError):
        transposition(3, 1, 4)


def test_cycles_canonical_form_and_roundtrip():
    assert cycles((1, 2, 3)) == ((1,), (2,), (3,))
    assert cycles((10, 6, 8, 5, 1, 4, 9, 3, 2, 7)) == ((1, 10, 7, 9, 2, 6, 4, 5), (3, 8))
    for n in range(7):
        for p in _all_perms(n):
            cycs = cycles(p)
            assert from_cycles(cycs, n=n) == p
            for c in cycs:
                assert c[0] == min(c)
            assert [c[0] for c in cycs] == sorted(c[0] for c in cycs)


def test_from_cycles_rejects_non_partitions():
    with pytest.raises(ValueError):
        from_cycles([(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        from_cycles([(1, 3)], n=4)


def test_is_cyclic_counts_factorially():
    for n in range(1, 7):
        full = sum(1 for p in _all_perms(n) if is_cyclic(p))
        assert full == _factorial(n - 1)
    assert not is_cyclic(())


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def test_exceedance_sets_partition_the_positions():
    for n in range(1, 7):
        for p in _all_perms(n):
            exc, axc = exceedances(p), anti_exceedances(p)
            assert exc | axc == frozenset(range(1, n + 1))
            assert not exc & axc
            assert all(p[i - 1] > i for i in exc)


def test_nom_matches_direct_orbit_walk():
    def oracle(p, i):
        v = p[i - 1]
        while v > i:
            v = p[v - 1]
        return v

    for n in range(1, 7):
        for p in _all_perms(n):
            for i in range(1, n + 1):
                assert nom(p, i) == oracle(p, i)
    sigma = (10, 6, 8, 5, 1, 4, 9, 3, 2, 7)
    assert [nom(sigma, i) for i in range(1, 11)] == [1, 1, 3, 1, 1, 4, 2, 3, 2, 7]
    with pytest.raises(ValueError):
        nom((2, 1), 3)


def test_nom_is_identity_exactly_on_cycle_minima():
    for p in _all_perms(6):
        minima = {min(c) for c in cycles(p)}
        for i in range(1, 7):
            assert (nom(p, i) == i) == (i in minima)


def test_enumerate_perms_order_and_bound():
    assert list(enumerate_perms(3)) == [
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1),
    ]
    assert list(enumerate_perms(0)) == [()]
    with pytest.raises(ValueError):
        enumerate_perms(13)
    with pytest.raises(ValueError):
        enumerate_perms(-1)


def test_text_roundtrips():
    p = (2, 3, 1, 5, 4)
    assert format_perm(p) == "2 3 1 5 4"
    assert parse_perm("2 3 1 5 4") == p
    assert parse_perm("23154") == p
    assert parse_perm("2,3,1,5,4") == p
    assert parse_perm("") == ()
    with pytest.raises(ValueError):
        parse_perm("2 3 3")
    with pytest.raises(ValueError):
        parse_perm("abc")


def test_cycle_text_roundtrips():
    cycs = ((1, 4, 7, 2), (3, 6), (5,))
    text = "(1,4,7,2)(3,6)(5)"
    assert format_cycles(cycs) == text
    assert parse_cycles(text) == cycs
    assert parse_cycles("") == ()
    with pytest.raises(ValueError):
        parse_cycles("1,2")
