"""The nom codec: a bijection between permutations and subexceedant words.

A word f with 1 <= f_i <= i encodes the permutation

    sigma = (1, f_1)(2, f_2) ... (n, f_n)

with the leftmost transposition acting first; factors with f_i = i are
identities.  Three independent decoders and two independent encoders are
provided; they must (and, per the tests, do) agree everywhere:

* decode_transpositions  - evaluate the product directly
* decode_insertion       - grow the one-line word left to right
* decode_cycle_insertion - grow the cycle decomposition
* encode_selection_sort  - sort by repeatedly swapping the maximum home
* encode_nom             - read each letter off the cycle structure

The grid procedures mirror the codec on point sets in [n] x [n], exposing
every intermediate state.
"""

from __future__ import annotations

from collections.abc import Iterable

from .perms import Perm, as_perm, from_cycles, nom
from .sef import Sef, as_sef

GridPoints = frozenset[tuple[int, int]]


# -- decoders ------------------------------------------------------------------

def decode_transpositions(f: Sef) -> Perm:
    """Trace every point through the transposition chain.

    >>> decode_transpositions((1, 1, 2, 1, 3, 4, 5))
    (7, 6, 2, 1, 3, 4, 5)
    """
    f = as_sef(f)
    n = len(f)
    word = []
    for i in range(1, n + 1):
        v = i
        for k in range(1, n + 1):
            if v == k:
                v = f[k - 1]
            elif v == f[k - 1]:
                v = k
        word.append(v)
    return tuple(word)


def decode_insertion(f: Sef) -> Perm:
    """Grow the one-line word: replace the letter f_i by i, append f_i.

    >>> decode_insertion((1, 1, 1, 4, 4))
    (2, 3, 1, 5, 4)
    """
    steps = insertion_steps(f)
    return steps[-1] if steps else ()


def insertion_steps(f: Sef) -> list[Perm]:
    """The words after each insertion, e.g. 1, 21, 231, 2314, 23154."""
    f = as_sef(f)
    if not f:
        return []
    word = [1]
    steps = [(1,)]
    for i in range(2, len(f) + 1):
        fi = f[i - 1]
        if fi < i:
            word[word.index(fi)] = i
        word.append(fi)
        steps.append(tuple(word))
    return steps


def decode_cycle_insertion(f: Sef) -> Perm:
    """Grow the cycle decomposition: f_i = i opens a singleton cycle,
    f_i < i inserts i immediately before f_i in its cycle."""
    f = as_sef(f)
    cycles: list[list[int]] = []
    home: dict[int, list[int]] = {}
    for i, fi in enumerate(f, start=1):
        if fi == i:
            cyc = [i]
            cycles.append(cyc)
        else:
            cyc = home[fi]
            cyc.insert(cyc.index(fi), i)
        home[i] = cyc
    return from_cycles(cycles, n=len(f))


# -- encoders ------------------------------------------------------------------

def encode_selection_sort(p: Perm) -> Sef:
    """Read f_i = sigma(i) for i = n..1, swapping i home after each read.

    >>> encode_selection_sort((2, 3, 1, 5, 4))
    (1, 1, 1, 4, 4)
    """
    steps = selection_sort_steps(p)
    f = [0] * len(p)
    for i, _word, fi in steps:
        f[i - 1] = fi
    return tuple(f)


def selection_sort_steps(p: Perm) -> list[tuple[int, Perm, int]]:
    """(i, working word before step i, f_i) for i = n down to 1.

    After step i the working word fixes every point >= i.
    """
    p = as_perm(p)
    word = list(p)
    pos = {v: i for i, v in enumerate(word)}  # value -> 0-based index
    steps = []
    for i in range(len(p), 0, -1):
        fi = word[i - 1]
        steps.append((i, tuple(word), fi))
        # multiply on the right by (i, f_i): exchange the values i and f_i
        a, b = pos[i], pos[fi]
        word[a], word[b] = fi, i
        pos[i], pos[fi] = b, a
    return steps


def encode_nom(p: Perm) -> Sef:
    """f_i = nearest orbital minorant of i; agrees with the sorting encoder.

    >>> encode_nom((10, 6, 8, 5, 1, 4, 9, 3, 2, 7))
    (1, 1, 3, 1, 1, 4, 2, 3, 2, 7)
    """
    p = as_perm(p)
    return tuple(nom(p, i) for i in range(1, len(p) + 1))


# -- grid procedures -----------------------------------------------------------

def perm_graph(p: Perm) -> GridPoints:
    """The point set {(i, sigma(i))}."""
    return frozenset(enumerate(as_perm(p), start=1))


def sef_graph(f: Sef) -> GridPoints:
    """The point set {(i, f_i)}; every point is weakly below the diagonal."""
    return frozenset(enumerate(as_sef(f), start=1))


def _columns(points: Iterable[tuple[int, int]]) -> dict[int, int]:
    pts = set(points)
    cols = {x: y for x, y in pts}
    n = len(pts)
    if len(cols) != n or set(cols) != set(range(1, n + 1)):
        raise ValueError("point set must have exactly one point per column 1..n")
    if any(not 1 <= y <= n for y in cols.values()):
        raise ValueError(f"point levels must lie in 1..{n}")
    return cols


def grid_encode(points: GridPoints) -> GridPoints:
    """Transform a permutation graph into the graph of its nom code."""
    return grid_encode_states(points)[-1] if points else frozenset()


def grid_encode_states(points: GridPoints) -> list[GridPoints]:
    """States after each step i = n, ..., 1 of the lowering procedure.

    Step i: if the leftmost point of row y = i lies above the diagonal,
    lower it to the level of the current point in column x = i.
    """
    cols = _columns(points)
    if sorted(cols.values()) != sorted(cols):
        raise ValueError("not a permutation graph: levels must be distinct")
    pts = set(points)
    states = []
    for i in range(len(cols), 0, -1):
        row = [(x, y) for x, y in pts if y == i]
        if row:
            x, y = min(row)
            if x < i:
                level = next(b for a, b in pts if a == i)
                pts.remove((x, y))
                pts.add((x, level))
        states.append(frozenset(pts))
    return states


def grid_decode(points: GridPoints) -> GridPoints:
    """Transform a subexceedant graph into the graph of its permutation."""
    return grid_decode_states(points)[-1] if points else frozenset()


def grid_decode_states(points: GridPoints) -> list[GridPoints]:
    """States after each step i = 1, ..., n of the raising procedure.

    Step i: move the leftmost point of row y = f_i, other than (i, f_i)
    itself, up to the level y = i.
    """
    cols = _columns(points)
    if any(y > x for x, y in cols.items()):
        raise ValueError("not a subexceedant graph: found a point above the diagonal")
    f = [cols[x] for x in sorted(cols)]
    pts = set(points)
    states = []
    for i in range(1, len(f) + 1):
        fi = f[i - 1]
        row = [(x, y) for x, y in pts if y == fi and (x, y) != (i, fi)]
        if row:
            x, y = min(row)
            pts.remove((x, y))
            pts.add((x, i))
        states.append(frozenset(pts))
    return states


def perm_of_graph(points: GridPoints) -> Perm:
    cols = _columns(points)
    return as_perm(cols[x] for x in sorted(cols))


def format_grid(points: GridPoints) -> str:
    """Sorted "(x,y)" list, e.g. "(1,1)(2,1)(3,2)"."""
    return "".join(f"({x},{y})" for x, y in sorted(points))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
