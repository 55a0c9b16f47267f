"""Subexceedant functions: words f with 1 <= f_i <= i for every position.

These words are the code space of the nom codec (one word per
permutation, see :mod:`nomcode.codec`).  A word is stored as a tuple
``f`` with ``f[i - 1]`` holding f_i.  The non-decreasing words form a
Catalan family; this module also carries their two classical disguises,
occurrence-count vectors and monotone lattice paths.
"""

from __future__ import annotations

import functools
import math
from collections.abc import Iterable, Iterator, Sequence

Sef = tuple[int, ...]

#: code-only enumeration guard (Catalan growth; n! growth for enumerate_sefs)
DEFAULT_CODE_BOUND = 14


def is_sef(values: Sequence[int]) -> bool:
    """True iff 1 <= f_i <= i for all i.

    >>> is_sef((1, 1, 2, 1, 3, 4, 5)), is_sef((2, 1, 1))
    (True, False)
    """
    return all(1 <= v <= i for i, v in enumerate(values, start=1))


def as_sef(values: Iterable[int]) -> Sef:
    word = tuple(values)
    for i, v in enumerate(word, start=1):
        if not 1 <= v <= i:
            raise ValueError(f"f_{i} = {v} violates 1 <= f_{i} <= {i}")
    return word


def image(f: Sef) -> frozenset[int]:
    """The set of values the word takes."""
    return frozenset(f)


def ima(f: Sef) -> int:
    """Number of distinct values."""
    return len(set(f))


def imrp(f: Sef) -> frozenset[int]:
    """Positions of the rightmost occurrence of each value present.

    >>> sorted(imrp((1, 1, 2, 1, 3, 4, 5)))
    [3, 4, 5, 6, 7]

    (value 1 last occurs at position 4, value 2 at position 3, ...)
    """
    last: dict[int, int] = {}
    for i, v in enumerate(f, start=1):
        last[v] = i
    return frozenset(last.values())


def plat_set(f: Sef) -> frozenset[int]:
    """Plateau positions: i < n with f_i = f_{i+1}."""
    return frozenset(i for i in range(1, len(f)) if f[i - 1] == f[i])


def fxdp_set(f: Sef) -> frozenset[int]:
    """Fixed positions: i with f_i = i."""
    return frozenset(i for i, v in enumerate(f, start=1) if v == i)


def fxdp(f: Sef) -> int:
    return len(fxdp_set(f))


def is_nondecreasing(f: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(f, f[1:]))


def enumerate_sefs(n: int, max_n: int = DEFAULT_CODE_BOUND) -> Iterator[Sef]:
    """All n! subexceedant words over [n], lexicographically."""
    _check_bound(n, max_n)
    import itertools

    return iter(itertools.product(*(range(1, i + 1) for i in range(1, n + 1))))


def enumerate_nondecreasing_sefs(
    n: int, max_n: int = DEFAULT_CODE_BOUND
) -> Iterator[Sef]:
    """The C_n non-decreasing subexceedant words over [n], lexicographically."""
    _check_bound(n, max_n)

    def rec(prefix: list[int], i: int) -> Iterator[Sef]:
        if i > n:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        for v in range(lo, i + 1):
            prefix.append(v)
            yield from rec(prefix, i + 1)
            prefix.pop()

    return rec([], 1)


def _check_bound(n: int, max_n: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > max_n:
        raise ValueError(f"n={n} exceeds enumeration bound {max_n}")


@functools.cache
def catalan(n: int) -> int:
    """Catalan number C_n, via the first-fixed-point splitting recurrence.

    C_n = sum_{i=2}^{n+1} C_{i-2} C_{n-i+1} with C_0 = C_1 = 1; the index i
    runs over the first position other than 1 at which a non-decreasing
    word can have f_i = i.  Exact integers throughout.

    >>> [catalan(n) for n in range(7)]
    [1, 1, 2, 5, 14, 42, 132]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= 1:
        return 1
    return sum(catalan(i - 2) * catalan(n - i + 1) for i in range(2, n + 2))


def catalan_closed_form(n: int) -> int:
    """binomial(2n, n) / (n + 1), the independent cross-check for catalan()."""
    return math.comb(2 * n, n) // (n + 1)


# -- occurrence-count vectors -------------------------------------------------

def r_vector(f: Sef) -> tuple[int, ...]:
    """Occurrence counts (r_1, ..., r_n) of a non-decreasing word.

    >>> r_vector((1, 1, 1, 3, 3, 4, 5, 5, 5))
    (3, 0, 2, 1, 3, 0, 0, 0, 0)
    """
    if not is_nondecreasing(f):
        raise ValueError("r-vector is defined only for non-decreasing words")
    counts = [0] * len(f)
    for v in f:
        counts[v - 1] += 1
    return tuple(counts)


def sef_from_r_vector(r: Sequence[int]) -> Sef:
    """Inverse of :func:`r_vector`; rejects vectors spelling an invalid word."""
    n = len(r)
    if any(c < 0 for c in r) or sum(r) != n:
        raise ValueError(f"occurrence counts must be non-negative and sum to {n}")
    word = [v for v in range(1, n + 1) for _ in range(r[v - 1])]
    # non-decreasing by construction; subexceedance is the real constraint
    return as_sef(word)


# -- monotone lattice paths ---------------------------------------------------

def to_lattice_path(f: Sef) -> str:
    """Profile, as E/N steps, of the column diagram with heights f_i - 1.

    The walk goes from (0,0) to (n,n), never above the diagonal; on ties E
    precedes N.

    >>> to_lattice_path((1, 1, 1, 1))
    'EEEENNNN'
    """
    if not is_nondecreasing(f):
        raise ValueError("lattice path is defined only for non-decreasing words")
    n = len(f)
    heights = [v - 1 for v in f] + [n]
    return "".join("E" + "N" * (heights[i + 1] - heights[i]) for i in range(n))


def from_lattice_path(word: str) -> Sef:
    """Inverse of :func:`to_lattice_path`.

    f_i is one more than the number of N steps preceding the i-th E step.
    """
    if set(word) - {"E", "N"}:
        raise ValueError(f"path may contain only E and N: {word!r}")
    if word.count("E") != word.count("N"):
        raise ValueError("path must contain equally many E and N steps")
    f = []
    north = 0
    for step in word:
        if step == "E":
            f.append(north + 1)
        else:
            north += 1
            if north > len(f):
                raise ValueError("path rises above the diagonal")
    return as_sef(f)


# -- textual formats ----------------------------------------------------------

def format_sef(f: Sef, compact: bool = False) -> str:
    """Space-separated by default; ``compact`` packs single digits ("1121345")."""
    if compact:
        if any(v > 9 for v in f):
            raise ValueError("compact form requires all values <= 9")
        return "".join(str(v) for v in f)
    return " ".join(str(v) for v in f)


def parse_sef(text: str) -> Sef:
    """Parse "1 1 2 1 3 4 5" or the compact "1121345"."""
    text = text.strip()
    if not text:
        return ()
    try:
        if " " in text or "," in text:
            values = [int(t) for t in text.replace(",", " ").split()]
        else:
            values = [int(ch) for ch in text]
    except ValueError:
        raise ValueError(f"cannot parse code word from {text!r}") from None
    return as_sef(values)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
