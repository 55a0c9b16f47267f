"""Length-3 pattern avoidance among permutations with non-decreasing nom codes.

Brute-force enumeration of the avoider classes, plus the structure that
makes four of the six patterns tractable on the code side:

* V: codes whose only repeated letter is 1 (necessary for 132-avoidance);
* D: the 132-avoiders among codes with no fixed point above 1, cut into
  anchored blocks and in bijection with integer partitions;
* flip: the involution on non-decreasing codes that mirrors
  inverse-reverse-complement on permutations and swaps 132 with 213;
* X: a recursively grown family of 231-avoiding codes (a lower bound);
* Y: codes fixing their whole image, exactly the 312-avoiders.

The 123 class dies at n = 6, and 321-avoidance is a monotony condition
on the exceedance letters; counts for both come from plain filtering.
"""

from __future__ import annotations

import functools
from collections.abc import Iterator
from dataclasses import dataclass

from .codec import decode_transpositions, encode_nom
from .perms import Perm, as_perm, avoids, complement, exceedances, inverse, parse_perm, reverse
from .sef import (
    DEFAULT_CODE_BOUND,
    Sef,
    as_sef,
    enumerate_nondecreasing_sefs,
    ima,
    is_nondecreasing,
    r_vector,
)

DEFAULT_AVOIDER_BOUND = 10  # avoider classes walk all C_n codes and scan triples


def _as_pattern(pattern) -> Perm:
    if isinstance(pattern, str):
        return parse_perm(pattern)
    return as_perm(pattern)


def avoiders(n: int, pattern, max_n: int = DEFAULT_AVOIDER_BOUND) -> Iterator[Perm]:
    """Members of the non-decreasing-code class avoiding ``pattern``."""
    if n < 0 or n > max_n:
        raise ValueError(f"n must lie in 0..{max_n}")
    pattern = _as_pattern(pattern)
    for f in enumerate_nondecreasing_sefs(n, max_n=max_n):
        p = decode_transpositions(f)
        if avoids(p, pattern):
            yield p


def count_avoiders(n: int, pattern, max_n: int = DEFAULT_AVOIDER_BOUND) -> int:
    """
    >>> [count_avoiders(n, (1, 2, 3)) for n in range(1, 8)]
    [1, 2, 4, 4, 3, 0, 0]
    """
    return sum(1 for _ in avoiders(n, pattern, max_n=max_n))


# -- V: plateaus only at height 1 (necessary for avoiding 132) -------------------

def in_V(f: Sef) -> bool:
    """1^k followed by a strictly increasing tail.

    >>> [in_V(f) for f in ((1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 1, 3, 3))]
    [True, True, False, False]
    """
    f = _monotone(f)
    ones = _leading_ones(f)
    tail = f[ones:]
    return all(a < b for a, b in zip(tail, tail[1:]))


def enumerate_V(n: int, max_n: int = DEFAULT_CODE_BOUND) -> Iterator[Sef]:
    return (f for f in enumerate_nondecreasing_sefs(n, max_n=max_n) if in_V(f))


def _monotone(f) -> Sef:
    f = as_sef(f)
    if not is_nondecreasing(f):
        raise ValueError(f"code {f} is not non-decreasing")
    return f


def _leading_ones(f: Sef) -> int:
    # non-decreasing, so the 1s form a prefix
    ones = 0
    for v in f:
        if v != 1:
            break
        ones += 1
    return ones


# -- D: no fixed point above 1 and the decoded permutation avoids 132 ------------

def plateau1_count(f) -> int:
    """Adjacent pairs both equal to 1.

    >>> plateau1_count((1, 1, 1, 4, 4))
    2
    """
    f = as_sef(f)
    return sum(1 for a, b in zip(f, f[1:]) if a == b == 1)


def _contains_132(word) -> bool:
    # right-to-left stack scan: `mid` is the best confirmed "2"-role value,
    # i.e. some popped letter having a larger letter to its right
    mid = 0
    stack: list[int] = []
    for x in reversed(word):
        if mid and x < mid:
            return True
        while stack and stack[-1] < x:
            mid = stack.pop()
        stack.append(x)
    return False


def in_D(f) -> bool:
    """
    >>> [in_D(f) for f in ((1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 2, 2))]
    [True, True, False, False]
    """
    f = as_sef(f)
    if not f or not is_nondecreasing(f):
        return False
    if any(v == i for i, v in enumerate(f, start=1) if i > 1):
        return False
    return not _contains_132(decode_transpositions(f))


@functools.cache
def enumerate_D(n: int, max_n: int = DEFAULT_CODE_BOUND) -> tuple[Sef, ...]:
    return tuple(f for f in enumerate_nondecreasing_sefs(n, max_n=max_n) if in_D(f))


def d_count(n: int, k: int | None = None, max_n: int = DEFAULT_CODE_BOUND) -> int:
    members = enumerate_D(n, max_n=max_n)
    if k is None:
        return len(members)
    return sum(1 for f in members if plateau1_count(f) == k)


@functools.cache
def count_132_by_recurrence(n: int) -> int:
    """Class size for pattern 132 without enumerating anything.

    The step a_n = a_{n-1} + p(n-1) holds from n = 2 on; a_0 = a_1 = 1.
    (Applied at n = 1 it would need p(0) = 0, clashing with the usual
    empty partition, so the base is spelled out instead.)

    >>> [count_132_by_recurrence(n) for n in range(1, 6)]
    [1, 2, 4, 7, 12]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= 1:
        return 1
    return count_132_by_recurrence(n - 1) + partition_count(n - 1)


# -- block decomposition and the partition bijection ------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    """The cut f = 1 | H0 | H1 | ... | Hs; blocks[0] is H0 = 1^{k0}."""

    word: Sef
    blocks: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def positions(self) -> tuple[int, ...]:
        """1-based start position of each block inside the word."""
        out, pos = [], 2
        for b in self.blocks:
            out.append(pos)
            pos += len(b)
        return tuple(out)


def _d_domain(f) -> Sef:
    f = _monotone(f)
    if not f:
        raise ValueError("the empty code has no block decomposition")
    bad = [i for i, v in enumerate(f, start=1) if i > 1 and v == i]
    if bad:
        raise ValueError(f"fixed points above 1 at positions {bad}")
    return f


def decompose_blocks(f) -> BlockDecomposition:
    """Cut the tail's maximal stair runs into blocks.

    Each run splits into pieces of the current block size b (initially
    the count k0 of 1-plateaus), a final piece of size ((l-1) mod b) + 1
    absorbing the remainder; b then becomes that last size.

    >>> decompose_blocks((1, 1, 1, 2, 3, 4, 5, 6, 7, 8)).sizes
    (2, 2, 2, 2, 1)
    """
    f = _d_domain(f)
    ones = _leading_ones(f)
    k0 = ones - 1
    blocks: list[tuple[int, ...]] = [(1,) * k0]
    runs: list[list[int]] = []
    for v in f[ones:]:
        if runs and v == runs[-1][-1] + 1:
            runs[-1].append(v)
        else:
            runs.append([v])
    b = k0
    for run in runs:
        assert b >= 1  # a non-empty tail forces k0 >= 1 once fixed points are barred
        while run:
            piece, run = run[:b], run[b:]
            blocks.append(tuple(piece))
        b = len(blocks[-1])
    dec = BlockDecomposition(word=f, blocks=tuple(blocks))
    assert (1,) + tuple(v for blk in dec.blocks for v in blk) == f
    return dec


def blocks_anchored(f) -> bool:
    """Does every block start with the previous block's start position?

    Agreement with the 132 test on its whole domain is what the test
    suite establishes; this predicate never consults the permutation.
    """
    dec = decompose_blocks(f)
    pos = dec.positions
    return all(
        dec.blocks[i][0] == pos[i - 1]
        for i in range(1, len(dec.blocks))
    )


def lift_one(f) -> Sef:
    """D_{n,k} -> D_{n+1,k+1}: bump values >= k+2, prepend a 1.

    >>> lift_one((1, 1, 1))
    (1, 1, 1, 1)
    """
    f = as_sef(f)
    if not in_D(f):
        raise ValueError("input is not a 132-clean code without fixed points above 1")
    k = plateau1_count(f)
    out = (1,) + tuple(v + 1 if v >= k + 2 else v for v in f)
    assert in_D(out) and plateau1_count(out) == k + 1
    return out


def lift_stairs(f, k: int) -> Sef:
    """D_{n,k} -> D_{n+k,k}: bump values > 1 by k, splice in 2..k+1.

    >>> lift_stairs((1, 1, 1), 2)
    (1, 1, 1, 2, 3)
    """
    f = as_sef(f)
    if not in_D(f):
        raise ValueError("input is not a 132-clean code without fixed points above 1")
    if k != plateau1_count(f):
        raise ValueError(f"k={k} but the code has {plateau1_count(f)} 1-plateaus")
    ones = _leading_ones(f)
    out = f[:ones] + tuple(range(2, k + 2)) + tuple(v + k for v in f[ones:])
    assert in_D(out) and plateau1_count(out) == k
    return out


def to_partition(f) -> tuple[int, ...]:
    """Block sizes of f as a partition of n-1 (largest part first).

    >>> to_partition((1, 1, 1, 2, 3))
    (2, 2)
    """
    f = as_sef(f)
    if not in_D(f):
        raise ValueError("only 132-clean codes without fixed points above 1 map to partitions")
    sizes = decompose_blocks(f).sizes
    parts = tuple(s for s in sizes if s > 0)
    assert all(a >= b for a, b in zip(parts, parts[1:]))
    assert sum(parts) == len(f) - 1
    return parts


def from_partition(parts) -> Sef:
    """Rebuild the unique code whose block sizes spell the partition.

    The i-th part (i >= 2) contributes that many consecutive values
    starting at 2 plus the total of the parts before the (i-1)-st.

    >>> from_partition((2, 2))
    (1, 1, 1, 2, 3)
    """
    parts = as_partition(parts)
    if not parts:
        return (1,)
    word = [1] * (parts[0] + 1)
    start = 2
    for prev, size in zip((0,) + parts, parts[1:], strict=False):
        start += prev
        word.extend(range(start, start + size))
    f = as_sef(word)
    assert in_D(f) and to_partition(f) == parts
    return f


def as_partition(parts) -> tuple[int, ...]:
    parts = tuple(int(x) for x in parts)
    if any(x < 1 for x in parts):
        raise ValueError(f"parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return parts


def enumerate_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n, largest part first, in reverse-lexicographic order.

    >>> list(enumerate_partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return rec(n, n)


@functools.cache
def partition_count_by_largest(n: int, k: int) -> int:
    """Partitions of n whose largest part is exactly k."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return partition_count_by_largest(n - 1, k - 1) + partition_count_by_largest(n - k, k)


def partition_count(n: int) -> int:
    """
    >>> [partition_count(n) for n in range(8)]
    [1, 1, 2, 3, 5, 7, 11, 15]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return sum(partition_count_by_largest(n, k) for k in range(1, n + 1))


def format_partition(parts) -> str:
    """
    >>> format_partition((5, 5, 5, 3, 3, 2, 2, 1))
    '5+5+5+3+3+2+2+1'
    """
    return "+".join(str(x) for x in as_partition(parts))


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(chunk) for chunk in text.split("+"))


# -- flip: the involution matching inverse-reverse-complement ---------------------

def flip(f) -> Sef:
    """f'_i = n+1 minus the count of letters of f below n-i+2.

    >>> flip((1, 1, 1, 4, 4))
    (1, 1, 3, 3, 3)
    >>> flip((1, 2, 3, 4))
    (1, 2, 3, 4)
    """
    f = _monotone(f)
    n = len(f)
    r = r_vector(f)
    total, prefix = 0, [0]
    for x in r:
        total += x
        prefix.append(total)
    out = as_sef(n + 1 - prefix[n - i + 1] for i in range(1, n + 1))
    assert is_nondecreasing(out)
    return out


def flip_matches_inverse_reverse_complement(f) -> bool:
    """Decoded flip against complement(reverse(inverse(decoded f)))."""
    f = _monotone(f)
    lhs = decode_transpositions(flip(f))
    rhs = complement(reverse(inverse(decode_transpositions(f))))
    return lhs == rhs


# -- X: a recursive family of 231-avoiders ----------------------------------------

@functools.cache
def _x_set(n: int) -> frozenset[Sef]:
    if n == 1:
        return frozenset({(1,)})
    if n == 2:
        return frozenset({(1, 1), (1, 2)})
    out = set()
    for f in _x_set(n - 1):
        out.add(f + (n - 1,))
        out.add(f + (n,))
    if n >= 4:
        for f in _x_set(n - 3):
            out.add(f + (n - 3, n - 3, n - 2))
    return frozenset(out)


def enumerate_X(n: int, max_n: int = DEFAULT_CODE_BOUND) -> tuple[Sef, ...]:
    """The family in sorted order.  The three growth rules append n-1,
    n, or the triple (n-3)(n-3)(n-2); the triple rule needs n >= 4, so
    there is no n = 0 seed and the size recurrence only starts at n = 4.
    """
    if n < 1 or n > max_n:
        raise ValueError(f"n must lie in 1..{max_n}")
    return tuple(sorted(_x_set(n)))


def x_count(n: int, max_n: int = DEFAULT_CODE_BOUND) -> int:
    """
    >>> [x_count(n) for n in range(1, 6)]
    [1, 2, 4, 9, 20]
    """
    return len(enumerate_X(n, max_n=max_n))


# -- Y: codes fixing their image, exactly the 312-avoiders ------------------------

def in_Y(f) -> bool:
    """
    >>> [in_Y(f) for f in ((1, 1, 1), (1, 1, 3), (1, 2, 2), (1, 1, 2))]
    [True, True, True, False]
    """
    f = _monotone(f)
    return all(f[v - 1] == v for v in set(f))


def enumerate_Y(n: int, max_n: int = DEFAULT_CODE_BOUND) -> Iterator[Sef]:
    return (f for f in enumerate_nondecreasing_sefs(n, max_n=max_n) if in_Y(f))


def y_count_by_ima(n: int, k: int, max_n: int = DEFAULT_CODE_BOUND) -> int:
    """Members of the family with k distinct letters; binomial(n-1, k-1)."""
    return sum(1 for f in enumerate_Y(n, max_n=max_n) if ima(f) == k)


# -- 321: monotone exceedance letters ---------------------------------------------

def avoids_321_criterion(p: Perm) -> bool:
    """Exceedance letters increasing and anti-exceedance letters increasing.

    For permutations in the non-decreasing-code class the second subword
    is increasing automatically, leaving only the first condition.
    """
    p = as_perm(p)
    exc = sorted(exceedances(p))
    letters = [p[i - 1] for i in exc]
    if any(a > b for a, b in zip(letters, letters[1:])):
        return False
    ax_letters = [p[i - 1] for i in range(1, len(p) + 1) if i not in set(exc)]
    return all(a < b for a, b in zip(ax_letters, ax_letters[1:]))


def growth_table_321(max_n: int = DEFAULT_AVOIDER_BOUND) -> tuple[tuple[int, int], ...]:
    """(n, class size) rows for pattern 321, n = 1..max_n."""
    return tuple((n, count_avoiders(n, (3, 2, 1), max_n=max_n)) for n in range(1, max_n + 1))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
