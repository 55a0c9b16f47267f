"""Permutations whose nom code is non-decreasing.

The class is Catalan-sized and has a clean internal description: a
permutation belongs to it iff its anti-exceedance letters increase from
left to right, or equivalently iff the positions sharing a common code
letter form an interval.  Since a code letter repeats only at
anti-exceedance positions, such a permutation is pinned down by the set
of pairs (i, p(i)) over its anti-exceedance positions, and those pair
sets have a four-condition characterization that makes them easy to
enumerate and to invert.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from .codec import decode_transpositions, encode_nom
from .perms import Perm, anti_exceedances, as_perm
from .sef import (
    DEFAULT_CODE_BOUND,
    Sef,
    as_sef,
    enumerate_nondecreasing_sefs,
    is_nondecreasing,
)

AxPairs = tuple[tuple[int, int], ...]


def is_nd_perm(p: Perm) -> bool:
    """True when the nom code of p is non-decreasing.

    >>> is_nd_perm((3, 1, 4, 2))
    True
    >>> is_nd_perm((3, 2, 1))
    False
    """
    return is_nondecreasing(encode_nom(as_perm(p)))


def check_characterization(p: Perm) -> bool:
    """Direct membership test, independent of code monotony.

    Checks that the anti-exceedance letters of p increase left to right
    and that each code letter occupies an interval of positions.
    """
    p = as_perm(p)
    ax_letters = [p[i - 1] for i in sorted(anti_exceedances(p))]
    if any(a >= b for a, b in zip(ax_letters, ax_letters[1:])):
        return False
    f = encode_nom(p)
    positions: dict[int, list[int]] = {}
    for i, v in enumerate(f, start=1):
        positions.setdefault(v, []).append(i)
    return all(pos[-1] - pos[0] + 1 == len(pos) for pos in positions.values())


def enumerate_nd_perms(n: int, max_n: int = DEFAULT_CODE_BOUND) -> Iterator[Perm]:
    """All members on [n], in code order; Catalan-many of them."""
    for f in enumerate_nondecreasing_sefs(n, max_n=max_n):
        yield decode_transpositions(f)


# -- anti-exceedance pair sets ---------------------------------------------------

def validate_ax_pairs(pairs: AxPairs, n: int) -> bool:
    try:
        as_ax_pairs(pairs, n)
    except ValueError:
        return False
    return True


def as_ax_pairs(pairs, n: int) -> AxPairs:
    """Check the four pair-set conditions, returning a normalized tuple.

    For ((i_1, j_1), ..., (i_k, j_k)) with n >= 1 they read:
    positions strictly increase and end at n; values strictly increase
    and start at 1; and each value fits under the previous position,
    j_s <= i_{s-1} + 1.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    pairs = tuple((int(i), int(j)) for i, j in pairs)
    if n == 0:
        if pairs:
            raise ValueError("n=0 admits only the empty pair set")
        return ()
    k = len(pairs)
    if not 1 <= k <= n:
        raise ValueError(f"need between 1 and {n} pairs, got {k}")
    ii = [i for i, _ in pairs]
    jj = [j for _, j in pairs]
    if any(a >= b for a, b in zip(ii, ii[1:])) or ii[-1] != n or ii[0] < 1:
        raise ValueError(f"positions {ii} must increase strictly and end at {n}")
    if any(a >= b for a, b in zip(jj, jj[1:])) or jj[0] != 1:
        raise ValueError(f"values {jj} must increase strictly and start at 1")
    for s in range(1, k):
        if jj[s] > ii[s - 1] + 1:
            raise ValueError(
                f"value {jj[s]} exceeds previous position {ii[s - 1]} plus one"
            )
    return pairs


def ax_pairs_of(p: Perm) -> AxPairs:
    """The pairs (i, p(i)) over anti-exceedance positions, ascending.

    Only members of the class are accepted: outside it the pair set no
    longer determines the permutation.

    >>> ax_pairs_of((3, 1, 4, 2))
    ((2, 1), (4, 2))
    """
    p = as_perm(p)
    if not is_nd_perm(p):
        raise ValueError("permutation has a decreasing nom code")
    return tuple((i, p[i - 1]) for i in sorted(anti_exceedances(p)))


def sef_from_ax_pairs(pairs: AxPairs, n: int | None = None) -> Sef:
    """The non-decreasing code determined by a pair set.

    The code is constant equal to j_s on positions i_{s-1}+1 .. i_s
    (with i_0 = 0), so it spells 1^{i_1} j_2^{i_2-i_1} ... j_k^{n-i_{k-1}}.
    """
    if n is None:
        if not pairs:
            raise ValueError("empty pair set needs an explicit n")
        n = pairs[-1][0]
    pairs = as_ax_pairs(pairs, n)
    word: list[int] = []
    prev = 0
    for i, j in pairs:
        word.extend([j] * (i - prev))
        prev = i
    return as_sef(word)


def perm_from_ax_pairs(pairs: AxPairs, n: int | None = None) -> Perm:
    """Decode the pair set through its non-decreasing code."""
    return decode_transpositions(sef_from_ax_pairs(pairs, n))


def enumerate_ax_pair_sets(n: int, max_n: int = DEFAULT_CODE_BOUND) -> Iterator[AxPairs]:
    """All valid pair sets for [n], by size then lexicographically."""
    if n < 0 or n > max_n:
        raise ValueError(f"n must lie in 0..{max_n}")
    if n == 0:
        yield ()
        return
    for k in range(1, n + 1):
        for inner in itertools.combinations(range(1, n), k - 1):
            ii = list(inner) + [n]

            def grow(jj: list[int], s: int) -> Iterator[AxPairs]:
                if s == k:
                    yield tuple(zip(ii, jj))
                    return
                for j in range(jj[-1] + 1, ii[s - 1] + 2):
                    yield from grow(jj + [j], s + 1)

            yield from grow([1], 1)


def reconstruct_perm(pairs: AxPairs, n: int | None = None) -> Perm:
    """Rebuild the member directly from its pair set, no codes involved.

    Anti-exceedance positions get their paired values.  The remaining
    positions are filled in decreasing order: position i falling between
    i_{s-1} and i_s receives the first value of the backward orbit
    j_s, p^-1(j_s), p^-2(j_s), ... (through the partial permutation built
    so far) that is not yet used as an image.  The walk is guaranteed to
    succeed within n steps; running off the assigned region would mean
    the pair set was invalid.
    """
    if n is None:
        if not pairs:
            raise ValueError("empty pair set needs an explicit n")
        n = pairs[-1][0]
    pairs = as_ax_pairs(pairs, n)
    if n == 0:
        return ()
    image: dict[int, int] = {}  # position -> value
    preimage: dict[int, int] = {}  # value -> position
    for i, j in pairs:
        image[i] = j
        preimage[j] = i
    ii = [i for i, _ in pairs]
    jj = [j for _, j in pairs]
    for i in range(n, 0, -1):
        if i in image:
            continue
        s = next(s for s, pos in enumerate(ii) if pos > i)
        x = jj[s]
        for _ in range(n):
            if x not in preimage:
                break
            x = preimage[x]
        else:
            raise AssertionError("backward orbit found no free value within n steps")
        image[i] = x
        preimage[x] = i
    return as_perm(tuple(image[i] for i in range(1, n + 1)))


def append_extension_check(p: Perm, j: int) -> bool:
    """Does appending the transposition (n, j) keep membership?

    p must already belong to the class on [n-1]; j must satisfy
    p(n-1) <= j <= n.  True exactly when the extended permutation,
    p * (n j) on [n], still has a non-decreasing code.
    """
    p = as_perm(p)
    if len(p) < 1:
        raise ValueError("need at least one letter to extend")
    if not is_nd_perm(p):
        raise ValueError("permutation has a decreasing nom code")
    n = len(p) + 1
    if not p[-1] <= j <= n:
        raise ValueError(f"j={j} outside {p[-1]}..{n}")
    if j == n:
        extended = p + (n,)
    else:
        extended = tuple(n if v == j else v for v in p) + (j,)
    return is_nd_perm(extended)


def format_ax_pairs(pairs: AxPairs) -> str:
    """Render as (i,j) groups run together.

    >>> format_ax_pairs(((3, 1), (4, 2), (6, 3), (9, 5)))
    '(3,1)(4,2)(6,3)(9,5)'
    """
    return "".join(f"({i},{j})" for i, j in pairs)


def parse_ax_pairs(text: str) -> AxPairs:
    text = text.strip()
    if not text:
        return ()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"cannot parse pair set from {text!r}")
    out = []
    for chunk in text[1:-1].split(")("):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"malformed pair ({chunk})")
        out.append((int(parts[0]), int(parts[1])))
    return tuple(out)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
