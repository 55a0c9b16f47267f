"""The Catalan class of permutations with non-decreasing codes."""

from __future__ import annotations

import itertools

import pytest

from nomcode.codec import decode_transpositions, encode_nom
from nomcode.ndperm import (
    append_extension_check,
    as_ax_pairs,
    ax_pairs_of,
    check_characterization,
    enumerate_ax_pair_sets,
    enumerate_nd_perms,
    format_ax_pairs,
    is_nd_perm,
    parse_ax_pairs,
    perm_from_ax_pairs,
    reconstruct_perm,
    sef_from_ax_pairs,
    validate_ax_pairs,
)
from nomcode.sef import catalan, enumerate_nondecreasing_sefs, is_nondecreasing

# the full class on [4], code next to its permutation, checked pair by
# pair against the transposition decoder
CLASS4 = (
    ((1, 1, 1, 1), (2, 3, 4, 1)),
    ((1, 1, 1, 2), (4, 3, 1, 2)),
    ((1, 1, 1, 3), (2, 4, 1, 3)),
    ((1, 1, 2, 2), (3, 1, 4, 2)),
    ((1, 2, 2, 2), (1, 3, 4, 2)),
    ((1, 1, 2, 3), (4, 1, 2, 3)),
    ((1, 1, 1, 4), (2, 3, 1, 4)),
    ((1, 2, 2, 3), (1, 4, 2, 3)),
    ((1, 1, 3, 3), (2, 1, 4, 3)),
    ((1, 1, 2, 4), (3, 1, 2, 4)),
    ((1, 1, 3, 4), (2, 1, 3, 4)),
    ((1, 2, 2, 4), (1, 3, 2, 4)),
    ((1, 2, 3, 3), (1, 2, 4, 3)),
    ((1, 2, 3, 4), (1, 2, 3, 4)),
)


def test_class4_codes_decode_to_their_permutations():
    for f, p in CLASS4:
        assert decode_transpositions(f) == p
        assert encode_nom(p) == f
        assert is_nd_perm(p)


def test_class4_is_complete():
    members = set(enumerate_nd_perms(4))
    assert members == {p for _, p in CLASS4}
    assert len(members) == catalan(4) == 14
    outsiders = set(itertools.permutations(range(1, 5))) - members
    assert all(not is_nd_perm(p) for p in outsiders)


def test_membership_against_the_filter_route():
    # filtering all n! words must reproduce the decode route exactly
    for n in range(7):
        by_filter = {p for p in itertools.permutations(range(1, n + 1)) if is_nd_perm(p)}
        by_decode = set(enumerate_nd_perms(n))
        assert by_filter == by_decode
        assert len(by_decode) == catalan(n)


def test_characterization_agrees_with_code_monotony():
    for n in range(1, 7):
        for p in itertools.permutations(range(1, n + 1)):
            assert check_characterization(p) == is_nd_perm(p)


def test_sole_outsider_at_n3():
    assert [is_nd_perm(p) for p in itertools.permutations((1, 2, 3))] == [
        True, True, True, True, True, False,
    ]  # only 321 falls outside


def test_ax_pairs_of_golden_and_rejection():
    assert ax_pairs_of((3, 1, 4, 2)) == ((2, 1), (4, 2))
    assert ax_pairs_of((1,)) == ((1, 1),)
    with pytest.raises(ValueError):
        ax_pairs_of((3, 2, 1))


def test_pair_set_validation_conditions():
    assert as_ax_pairs(((3, 1), (4, 2)), 4) == ((3, 1), (4, 2))
    assert as_ax_pairs((), 0) == ()
    cases = (
        ((), 3),  # no pairs
        (((1, 1), (3, 2), (2, 3)), 3),  # positions not increasing
        (((2, 1),), 3),  # positions must end at n
        (((1, 2), (3, 3)), 3),  # values must start at 1
        (((1, 1), (3, 1)), 3),  # values must increase
        (((1, 1), (3, 3)), 3),  # 3 > previous position 1 plus one
        (((1, 1),), 0),  # n=0 admits only the empty set
    )
    for pairs, n in cases:
        assert not validate_ax_pairs(pairs, n)
        with pytest.raises(ValueError):
            as_ax_pairs(pairs, n)


def test_sef_from_ax_pairs_block_structure():
    pairs = ((3, 1), (4, 2), (6, 3), (9, 5))
    assert sef_from_ax_pairs(pairs) == (1, 1, 1, 2, 3, 3, 5, 5, 5)
    assert sef_from_ax_pairs((), 0) == ()
    with pytest.raises(ValueError):
        sef_from_ax_pairs(())  # empty needs an explicit n


def test_reconstruction_worked_example():
    pairs = ((3, 1), (4, 2), (6, 3), (9, 5))
    expected = (4, 7, 1, 2, 6, 3, 8, 9, 5)
    assert reconstruct_perm(pairs) == expected
    assert perm_from_ax_pairs(pairs) == expected
    assert encode_nom(expected) == (1, 1, 1, 2, 3, 3, 5, 5, 5)
    assert ax_pairs_of(expected) == pairs


def test_enumerate_ax_pair_sets_n3_golden():
    assert list(enumerate_ax_pair_sets(3)) == [
        ((3, 1),),
        ((1, 1), (3, 2)),
        ((2, 1), (3, 2)),
        ((2, 1), (3, 3)),
        ((1, 1), (2, 2), (3, 3)),
    ]


def test_pair_sets_biject_with_codes():
    for n in range(8):
        sets = list(enumerate_ax_pair_sets(n))
        assert len(sets) == catalan(n)
        codes = {sef_from_ax_pairs(pairs, n) for pairs in sets}
        assert len(codes) == len(sets)
        assert codes == set(enumerate_nondecreasing_sefs(n))
        assert all(validate_ax_pairs(pairs, n) for pairs in sets)


def test_reconstruction_equals_decoding_everywhere():
    for n in range(8):
        for pairs in enumerate_ax_pair_sets(n):
            direct = reconstruct_perm(pairs, n)
            assert direct == decode_transpositions(sef_from_ax_pairs(pairs, n))
            if n:
                assert ax_pairs_of(direct) == pairs


def test_append_extension_check_against_brute_force():
    for n in range(1, 6):
        for f in enumerate_nondecreasing_sefs(n):
            p = decode_transpositions(f)
            for j in range(p[-1], n + 2):
                if j == n + 1:
                    extended = p + (n + 1,)
                else:
                    extended = tuple(n + 1 if v == j else v for v in p) + (j,)
                assert append_extension_check(p, j) == is_nd_perm(extended)
                # appending a letter >= f_n keeps the code non-decreasing
                assert append_extension_check(p, j) == is_nondecreasing(f + (j,))


def test_append_extension_check_rejections():
    with pytest.raises(ValueError):
        append_extension_check((3, 2, 1), 3)
    with pytest.raises(ValueError):
        append_extension_check((1, 2), 1)  # j below the last letter
    with pytest.raises(ValueError):
        append_extension_check((), 1)


def test_pair_text_roundtrip():
    pairs = ((3, 1), (4, 2), (6, 3), (9, 5))
    text = "(3,1)(4,2)(6,3)(9,5)"
    assert format_ax_pairs(pairs) == text
    assert parse_ax_pairs(text) == pairs
    assert parse_ax_pairs("") == ()
    with pytest.raises(ValueError):
        parse_ax_pairs("3,1")
    with pytest.raises(ValueError):
        parse_ax_pairs("(1,2,3)")
