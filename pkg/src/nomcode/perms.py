"""Permutations of [n] = {1, ..., n} as one-line words.

A permutation sigma is stored as a tuple ``p`` of the values
``sigma(1), ..., sigma(n)``; positions and values are both 1-based, so
``p[i - 1]`` is sigma(i).  The empty tuple is the (unique) permutation of
the empty set.

Products are read left to right: ``compose(p, q)`` maps i to q(p(i)),
i.e. the leftmost factor acts first.  Cycle decompositions use the
canonical form in which every cycle starts with its minimum and cycles
are sorted by those minima.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

#: the six permutations of {1,2,3}, i.e. all classical length-3 patterns
PATTERNS3 = ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1))

#: permutation-enumeration guard; n! items beyond this is almost surely a typo
DEFAULT_PERM_BOUND = 12


def is_perm(values: Sequence[int]) -> bool:
    """True iff ``values`` is a rearrangement of 1..n.

    >>> is_perm((2, 3, 1)), is_perm((1, 1, 2)), is_perm(())
    (True, False, True)
    """
    n = len(values)
    return sorted(values) == list(range(1, n + 1))


def as_perm(values: Iterable[int]) -> Perm:
    """Validate and return a permutation word as a tuple."""
    word = tuple(values)
    if not is_perm(word):
        raise ValueError(f"not a permutation of 1..{len(word)}: {word!r}")
    return word


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def apply(p: Perm, i: int) -> int:
    """sigma(i) with a 1-based position check."""
    if not 1 <= i <= len(p):
        raise ValueError(f"position {i} out of range 1..{len(p)}")
    return p[i - 1]


def compose(p: Perm, q: Perm) -> Perm:
    """Product pq with the leftmost factor acting first: i -> q(p(i)).

    >>> compose((2, 3, 1), (2, 3, 1))
    (3, 1, 2)
    """
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return tuple(q[v - 1] for v in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def reverse(p: Perm) -> Perm:
    """The word read backwards: i -> p(n+1-i)."""
    return p[::-1]


def complement(p: Perm) -> Perm:
    """Value mirror: i -> n+1-p(i)."""
    n = len(p)
    return tuple(n + 1 - v for v in p)


def transposition(n: int, a: int, b: int) -> Perm:
    """The permutation of [n] exchanging a and b (identity when a == b)."""
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"transposition ({a},{b}) out of range for n={n}")
    word = list(range(1, n + 1))
    word[a - 1], word[b - 1] = b, a
    return tuple(word)


Cycles = tuple[tuple[int, ...], ...]


def cycles(p: Perm) -> Cycles:
    """Canonical cycle decomposition, singletons included.

    Each cycle is rotated so its minimum comes first and cycles are
    sorted by minimum, so equality of decompositions is tuple equality.

    >>> cycles((10, 6, 8, 5, 1, 4, 9, 3, 2, 7))
    ((1, 10, 7, 9, 2, 6, 4, 5), (3, 8))
    >>> cycles((1, 2, 3))
    ((1,), (2,), (3,))
    """
    seen = [False] * len(p)
    out = []
    for start in range(1, len(p) + 1):
        if seen[start - 1]:
            continue
        cyc = []
        i = start
        while not seen[i - 1]:
            seen[i - 1] = True
            cyc.append(i)
            i = p[i - 1]
        out.append(tuple(cyc))
    return tuple(out)


def from_cycles(cycs: Iterable[Iterable[int]], n: int | None = None) -> Perm:
    """Permutation from a cycle decomposition; inverse of :func:`cycles`.

    ``n`` defaults to the number of elements mentioned; elements must
    partition [n] with no repeats.
    """
    cycs = [tuple(c) for c in cycs]
    elements = [x for c in cycs for x in c]
    if n is None:
        n = len(elements)
    if sorted(elements) != list(range(1, n + 1)):
        raise ValueError(f"cycles do not partition 1..{n}: {cycs!r}")
    word = [0] * n
    for c in cycs:
        for a, b in zip(c, c[1:] + c[:1]):
            word[a - 1] = b
    return tuple(word)


def is_cyclic(p: Perm) -> bool:
    """True iff p consists of a single cycle covering all of [n]."""
    return len(p) > 0 and len(cycles(p)) == 1


def exceedances(p: Perm) -> frozenset[int]:
    """Positions i with p(i) > i."""
    return frozenset(i for i, v in enumerate(p, start=1) if v > i)


def anti_exceedances(p: Perm) -> frozenset[int]:
    """Positions i with p(i) <= i; complements :func:`exceedances`."""
    return frozenset(i for i, v in enumerate(p, start=1) if v <= i)


def nom(p: Perm, i: int) -> int:
    """Nearest orbital minorant: the first value <= i on i's forward orbit.

    Returns sigma^t(i) for the smallest t >= 1 with sigma^t(i) <= i.
    Equals i itself exactly when i is the minimum of its cycle.

    >>> sigma = (10, 6, 8, 5, 1, 4, 9, 3, 2, 7)
    >>> nom(sigma, 2), nom(sigma, 7)
    (1, 2)
    """
    if not 1 <= i <= len(p):
        raise ValueError(f"position {i} out of range 1..{len(p)}")
    v = p[i - 1]
    for _ in range(len(p)):
        if v <= i:
            return v
        v = p[v - 1]
    raise AssertionError("orbit of a finite permutation must return below i")


def contains_pattern(p: Perm, pat: Sequence[int] | str) -> bool:
    """Classical containment of a length-3 pattern, by scanning all triples.

    >>> contains_pattern((2, 3, 4, 1), "123")
    True
    >>> contains_pattern((4, 3, 1, 2), "123")
    False
    """
    pat = as_pattern(pat)
    for a, b, c in itertools.combinations(p, 3):
        if _order_class(a, b, c) == pat:
            return True
    return False


def avoids(p: Perm, pat: Sequence[int] | str) -> bool:
    return not contains_pattern(p, pat)


def as_pattern(pat: Sequence[int] | str) -> Perm:
    """Normalize a length-3 pattern given as word, string or digits."""
    if isinstance(pat, str):
        pat = tuple(int(ch) for ch in pat.strip())
    pat = tuple(pat)
    if pat not in PATTERNS3:
        raise ValueError(f"not a length-3 pattern: {pat!r}")
    return pat


def _order_class(a: int, b: int, c: int) -> tuple[int, int, int]:
    # rank the triple: result is the pattern (a,b,c) realizes
    return (
        1 + (a > b) + (a > c),
        1 + (b > a) + (b > c),
        1 + (c > a) + (c > b),
    )


def enumerate_perms(n: int, max_n: int = DEFAULT_PERM_BOUND) -> Iterator[Perm]:
    """All n! permutations of [n] in lexicographic order.

    Refuses n beyond ``max_n``: the stream has factorial length.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > max_n:
        raise ValueError(f"n={n} exceeds enumeration bound {max_n}")
    return iter(itertools.permutations(range(1, n + 1)))


# -- textual formats ---------------------------------------------------------

def format_perm(p: Perm) -> str:
    """Space-separated one-line word, e.g. "2 3 1 5 4"."""
    return " ".join(str(v) for v in p)


def parse_perm(text: str) -> Perm:
    """Parse "2 3 1 5 4"; single-digit words may omit spaces ("23154")."""
    text = text.strip()
    if not text:
        return ()
    try:
        if " " in text or "," in text:
            values = [int(t) for t in text.replace(",", " ").split()]
        else:
            values = [int(ch) for ch in text]
    except ValueError:
        raise ValueError(f"cannot parse permutation from {text!r}") from None
    return as_perm(values)


def format_cycles(cycs: Cycles) -> str:
    """Cycle notation without inner whitespace: "(1,10,7,9,2,6,4,5)(3,8)"."""
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycs)


def parse_cycles(text: str) -> Cycles:
    text = text.strip()
    if text in ("", "()"):
        return ()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"cannot parse cycles from {text!r}")
    try:
        return tuple(
            tuple(int(x) for x in part.split(","))
            for part in text[1:-1].split(")(")
        )
    except ValueError:
        raise ValueError(f"cannot parse cycles from {text!r}") from None


if __name__ == "__main__":
    import doctest

    doctest.testmod()
