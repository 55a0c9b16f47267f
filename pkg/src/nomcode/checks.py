"""Named invariant suites behind the `verify` command.

Each check exhausts every object up to a size cap and returns a bool.
Caps are min(requested, per-check ceiling); the ceilings keep factorial
loops from exploding when the caller asks for a large bound.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator

from . import avoidance, codec, forest, ndperm, perms, sef

Check = tuple[str, int, Callable[[int], bool]]  # (name, ceiling, run)


def _perms(n: int) -> Iterator[perms.Perm]:
    return itertools.permutations(range(1, n + 1))


def _codes(n: int) -> Iterator[sef.Sef]:
    return sef.enumerate_sefs(n)


def _nd_codes(n: int) -> Iterator[sef.Sef]:
    return sef.enumerate_nondecreasing_sefs(n)


# -- codec ------------------------------------------------------------------------

def _roundtrip_all_codes(max_n: int) -> bool:
    for n in range(max_n + 1):
        for f in _codes(n):
            p = codec.decode_transpositions(f)
            if codec.decode_insertion(f) != p or codec.decode_cycle_insertion(f) != p:
                return False
            if codec.encode_nom(p) != f or codec.encode_selection_sort(p) != f:
                return False
    return True


def _code_matches_at_anti_exceedances(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for f in _codes(n):
            p = codec.decode_transpositions(f)
            ax = perms.anti_exceedances(p)
            if any((f[i - 1] == p[i - 1]) != (i in ax) for i in range(1, n + 1)):
                return False
    return True


def _differ_exactly_on_exceedances(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for f in _codes(n):
            p = codec.decode_transpositions(f)
            diff = frozenset(i for i in range(1, n + 1) if f[i - 1] != p[i - 1])
            if diff != perms.exceedances(p):
                return False
    return True


def _rightmost_letters_mark_anti_exceedances(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for f in _codes(n):
            p = codec.decode_transpositions(f)
            if set(sef.imrp(f)) != perms.anti_exceedances(p):
                return False
    return True


def _fixed_letters_are_cycle_minima(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for p in _perms(n):
            f = codec.encode_nom(p)
            minima = {min(c) for c in perms.cycles(p)}
            if sef.fxdp_set(f) != minima or sef.fxdp(f) != len(perms.cycles(p)):
                return False
    return True


def _grid_matches_algebra(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for f in _codes(n):
            p = codec.decode_transpositions(f)
            if codec.grid_encode(codec.perm_graph(p)) != codec.sef_graph(f):
                return False
            if codec.perm_of_graph(codec.grid_decode(codec.sef_graph(f))) != p:
                return False
    return True


# -- trees ------------------------------------------------------------------------

def _postorder_recovers_source(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for p in _perms(n):
            if forest.postorder(forest.forest_of(p)) != p:
                return False
    return True


def _forest_mirrors_code(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for p in _perms(n):
            f = codec.encode_nom(p)
            trees = forest.forest_of(p)
            if [t.label for t in trees] != sorted(sef.fxdp_set(f)):
                return False
            for t in trees:
                for node in t:
                    kids = [c.label for c in node.children]
                    if kids != sorted(kids):
                        return False
                    if any(f[c - 1] != node.label for c in kids):
                        return False
    return True


def _extension_matches_transposition(max_n: int) -> bool:
    for n in range(1, max_n):
        for p in _perms(n):
            trees = forest.forest_of(p)
            for i in range(1, n + 1):
                grown = forest.extend_with_max(trees, i)
                target = perms.compose(p + (n + 1,), perms.transposition(n + 1, n + 1, i))
                if forest.postorder(grown) != target:
                    return False
    return True


def _leaf_counts_match_eulerian(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for k in range(max(n, 1)):
            if forest.count_forests_by_leaves(n, k) != forest.eulerian(n, k):
                return False
    return True


def _stanley_matches_rotated_cycle(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for w in _perms(n):
            lifted = perms.from_cycles([(1,) + tuple(v + 1 for v in reversed(w))], n=n + 1)
            (nom_tree,) = forest.forest_of(lifted)
            shifted = forest.relabel(forest.stanley_tree(w), lambda x: x + 1)
            if forest.canonical_unordered(nom_tree) != forest.canonical_unordered(shifted):
                return False
    return True


# -- catalan ----------------------------------------------------------------------

def _nondecreasing_counts_are_catalan(max_n: int) -> bool:
    return all(
        sum(1 for _ in _nd_codes(n)) == sef.catalan(n) == sef.catalan_closed_form(n)
        for n in range(max_n + 1)
    )


def _class_count_by_permutation_filter(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        direct = sum(1 for p in _perms(n) if ndperm.is_nd_perm(p))
        if direct != sef.catalan(n):
            return False
    return True


def _characterization_agrees(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for p in _perms(n):
            if ndperm.is_nd_perm(p) != ndperm.check_characterization(p):
                return False
    return True


def _pair_sets_biject_with_codes(max_n: int) -> bool:
    for n in range(max_n + 1):
        sets = list(ndperm.enumerate_ax_pair_sets(n))
        if len(sets) != sef.catalan(n):
            return False
        codes = {ndperm.sef_from_ax_pairs(pairs, n) for pairs in sets}
        if len(codes) != len(sets) or codes != set(_nd_codes(n)):
            return False
    return True


def _reconstruction_equals_decode(max_n: int) -> bool:
    for n in range(max_n + 1):
        for pairs in ndperm.enumerate_ax_pair_sets(n):
            direct = ndperm.reconstruct_perm(pairs, n)
            if direct != codec.decode_transpositions(ndperm.sef_from_ax_pairs(pairs, n)):
                return False
            if pairs != ndperm.ax_pairs_of(direct):
                return False
    return True


def _splitting_rule_recursion(max_n: int) -> bool:
    for n in range(2, max_n + 1):
        for f in _nd_codes(n):
            split = None
            for i in range(2, n + 1):
                if f[i - 1] == i:
                    split = i
                    break
            if split is None:
                continue
            left = f[1:split - 1]
            right = tuple(v - (split - 1) for v in f[split - 1:])
            try:
                sef.as_sef(left)
                sef.as_sef(right)
            except ValueError:
                return False
            if not (sef.is_nondecreasing(left) and sef.is_nondecreasing(right)):
                return False
    return True


def _lattice_paths_roundtrip(max_n: int) -> bool:
    for n in range(max_n + 1):
        for f in _nd_codes(n):
            path = sef.to_lattice_path(f)
            if sef.from_lattice_path(path) != f:
                return False
    return True


# -- flip -------------------------------------------------------------------------

def _flip_is_involution(max_n: int) -> bool:
    for n in range(max_n + 1):
        for f in _nd_codes(n):
            g = avoidance.flip(f)
            if not sef.is_nondecreasing(g) or avoidance.flip(g) != f:
                return False
    return True


def _flip_matches_inverse_reverse_complement(max_n: int) -> bool:
    for n in range(max_n + 1):
        for f in _nd_codes(n):
            if not avoidance.flip_matches_inverse_reverse_complement(f):
                return False
    return True


def _flip_leading_plateaus(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for f in _nd_codes(n):
            if avoidance.plateau1_count(avoidance.flip(f)) != n - f[-1]:
                return False
    return True


def _flip_append_rule(max_n: int) -> bool:
    for n in range(2, max_n + 1):
        for f in _nd_codes(n):
            head, j = f[:-1], f[-1]
            base = avoidance.flip(head)
            lifted = (1,) + tuple(
                v + 1 if i >= n - j + 1 else v for i, v in enumerate(base, start=1)
            )
            if avoidance.flip(f) != lifted:
                return False
    return True


def _swaps_132_and_213(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        flipped = {
            avoidance.flip(codec.encode_nom(p)) for p in avoidance.avoiders(n, (1, 3, 2))
        }
        direct = {codec.encode_nom(p) for p in avoidance.avoiders(n, (2, 1, 3))}
        if flipped != direct:
            return False
    return True


SUITES: dict[str, tuple[Check, ...]] = {
    "codec": (
        ("all-five-codec-routes-agree-and-invert", 8, _roundtrip_all_codes),
        ("code-equals-image-exactly-at-anti-exceedances", 7, _code_matches_at_anti_exceedances),
        ("code-and-permutation-differ-exactly-on-exceedances", 7, _differ_exactly_on_exceedances),
        ("rightmost-letter-positions-are-anti-exceedances", 7, _rightmost_letters_mark_anti_exceedances),
        ("fixed-letters-are-cycle-minima", 7, _fixed_letters_are_cycle_minima),
        ("grid-moves-reproduce-both-codecs", 7, _grid_matches_algebra),
    ),
    "trees": (
        ("postorder-cycles-recover-the-permutation", 7, _postorder_recovers_source),
        ("forest-parents-siblings-and-roots-mirror-the-code", 7, _forest_mirrors_code),
        ("grafting-the-maximum-matches-appending-a-transposition", 6, _extension_matches_transposition),
        ("leaf-counts-follow-the-eulerian-table", 7, _leaf_counts_match_eulerian),
        ("rightmost-smaller-predecessor-tree-matches-the-cycle-tree", 6, _stanley_matches_rotated_cycle),
    ),
    "catalan": (
        ("non-decreasing-codes-are-catalan-counted", 12, _nondecreasing_counts_are_catalan),
        ("permutation-filter-count-agrees", 8, _class_count_by_permutation_filter),
        ("monotone-code-and-direct-characterization-agree", 8, _characterization_agrees),
        ("pair-sets-biject-with-monotone-codes", 10, _pair_sets_biject_with_codes),
        ("pair-set-reconstruction-equals-decoding", 8, _reconstruction_equals_decode),
        ("first-inner-fixed-point-splits-the-code", 9, _splitting_rule_recursion),
        ("lattice-paths-round-trip", 10, _lattice_paths_roundtrip),
    ),
    "flip": (
        ("flip-is-an-involution-on-monotone-codes", 10, _flip_is_involution),
        ("flip-tracks-inverse-reverse-complement", 9, _flip_matches_inverse_reverse_complement),
        ("flipped-codes-open-with-n-minus-last-letter-plateaus", 9, _flip_leading_plateaus),
        ("appending-a-letter-prepends-one-after-flip", 9, _flip_append_rule),
        ("flip-exchanges-the-132-and-213-classes", 8, _swaps_132_and_213),
    ),
}

SUITES["all"] = SUITES["codec"] + SUITES["trees"] + SUITES["catalan"] + SUITES["flip"]


def run_suite(suite: str, max_n: int) -> Iterator[tuple[str, int, bool]]:
    """Yield (check name, effective cap, outcome) in declaration order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    if max_n < 0:
        raise ValueError("--max-n must be non-negative")
    for name, ceiling, run in SUITES[suite]:
        cap = min(max_n, ceiling)
        yield name, cap, bool(run(cap))
