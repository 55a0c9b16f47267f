"""Increasing ordered forests attached to permutations.

Writing f for the nom code of a permutation p, every non-root position
hangs below its letter: parent(i) = f_i, and i is a root exactly when
f_i = i.  Labels strictly increase away from the roots, siblings sit in
increasing order left to right, and the trees are the cycles of p (each
root is its cycle's minimum).

The postorder visit of one tree spells its cycle, rotated so the root
comes last; reading the visit of each tree as a cycle therefore recovers
the permutation.  (For a single cycle this is the classical statement;
concatenating several trees is a mild extension, see README.)
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from .codec import encode_nom
from .perms import Perm, as_perm, from_cycles
from .sef import fxdp_set


@dataclass(frozen=True)
class Tree:
    label: int
    children: tuple["Tree", ...] = field(default=())

    def __iter__(self) -> Iterator["Tree"]:
        yield self
        for child in self.children:
            yield from child


Forest = tuple[Tree, ...]

MAX_EXHAUSTIVE_N = 8  # counting helpers enumerate n! permutations


def forest_of(p: Perm) -> Forest:
    """One increasing ordered tree per cycle of p, roots sorted.

    >>> [t.label for t in forest_of((2, 1, 3))]
    [1, 3]
    """
    p = as_perm(p)
    f = encode_nom(p)
    kids: dict[int, list[int]] = {i: [] for i in range(1, len(p) + 1)}
    roots = []
    for i, fi in enumerate(f, start=1):
        if fi == i:
            roots.append(i)
        else:
            kids[fi].append(i)  # ascending i keeps siblings increasing

    def build(label: int) -> Tree:
        return Tree(label, tuple(build(c) for c in kids[label]))

    return tuple(build(r) for r in roots)


def labels(forest: Forest | Tree) -> list[int]:
    trees = (forest,) if isinstance(forest, Tree) else forest
    return [node.label for t in trees for node in t]


def postorder_nodes(forest: Forest | Tree) -> tuple[int, ...]:
    """Raw postorder visit, tree by tree: children first, then the node."""
    trees = (forest,) if isinstance(forest, Tree) else forest
    out: list[int] = []

    def visit(t: Tree) -> None:
        for child in t.children:
            visit(child)
        out.append(t.label)

    for t in trees:
        visit(t)
    return tuple(out)


def postorder(forest: Forest | Tree) -> Perm:
    """The permutation whose cycles are the per-tree postorder visits.

    For a forest built by :func:`forest_of` this returns the source
    permutation; each visit is one cycle read off with the root last.

    >>> postorder(forest_of((2, 3, 1)))
    (2, 3, 1)
    """
    trees = (forest,) if isinstance(forest, Tree) else forest
    return from_cycles([postorder_nodes(t) for t in trees])


def extend_with_max(forest: Forest, i: int) -> Forest:
    """Attach a node labeled n+1 as the last child of node i.

    Mirrors multiplying the source permutation on the right by the
    transposition (i, n+1).
    """
    present = labels(forest)
    if i not in present:
        raise ValueError(f"label {i} not present in the forest")
    new = max(present) + 1

    def attach(t: Tree) -> Tree:
        if t.label == i:
            return Tree(t.label, t.children + (Tree(new),))
        return Tree(t.label, tuple(attach(c) for c in t.children))

    return tuple(attach(t) for t in forest)


def relabel(forest: Forest | Tree, mapping: Callable[[int], int]):
    """Apply ``mapping`` to every label, keeping the shape."""
    if isinstance(forest, Tree):
        return Tree(mapping(forest.label), tuple(relabel(c, mapping) for c in forest.children))
    return tuple(relabel(t, mapping) for t in forest)


def canonical_unordered(t: Tree):
    """Order-free normal form: children sorted by (subtree minimum, label)."""

    def norm(t: Tree) -> tuple[int, tuple]:
        kids = sorted(norm(c) for c in t.children)
        low = min([t.label] + [m for m, _ in kids], default=t.label)
        return low, (t.label, tuple(shape for _, shape in kids))

    return norm(t)[1]


def stanley_tree(w: Perm) -> Tree:
    """Tree on {0, ..., n}: i hangs below its rightmost smaller predecessor.

    Scanning the word w, node i attaches to the rightmost letter j that
    occurs before i in w with j < i, or to the artificial root 0 if no
    such letter exists.

    >>> postorder_nodes(stanley_tree((3, 2, 1)))
    (1, 2, 3, 0)
    """
    w = as_perm(w)
    kids: dict[int, list[int]] = {i: [] for i in range(len(w) + 1)}
    for idx, v in enumerate(w):
        parent = 0
        for j in reversed(w[:idx]):
            if j < v:
                parent = j
                break
        kids[parent].append(v)

    def build(label: int) -> Tree:
        return Tree(label, tuple(build(c) for c in sorted(kids[label])))

    return build(0)


# -- Eulerian cross-counts -----------------------------------------------------

@functools.cache
def eulerian(n: int, k: int) -> int:
    """Eulerian number A(n, k): permutations of [n] with k descents.

    Out-of-range k gives 0, so the two-term recursion needs no guards.

    >>> [eulerian(4, k) for k in range(4)]
    [1, 11, 11, 1]
    """
    if n < 0 or k < 0:
        raise ValueError(f"A({n},{k}) is undefined")
    if k >= max(n, 1):
        return 0 if k else 1  # A(0,0) = 1
    if k == 0:
        return 1
    return (k + 1) * eulerian(n - 1, k) + (n - k) * eulerian(n - 1, k - 1)


def internal_labels(forest: Forest) -> list[int]:
    """Nodes with at least one child."""
    return [node.label for t in forest for node in t if node.children]


def leaf_labels(forest: Forest) -> list[int]:
    """Childless nodes, except that an isolated root is not a leaf."""
    out = []
    for t in forest:
        if not t.children:
            continue  # singleton tree: its root counts as neither
        out.extend(node.label for node in t if not node.children)
    return out


def internal_or_singleton_root_labels(forest: Forest) -> list[int]:
    return [
        node.label
        for t in forest
        for node in t
        if node.children or (node is t and not t.children)
    ]


def _cyclic_perms(n: int) -> Iterator[Perm]:
    # every full cycle contains 1; (n-1)! arrangements of the rest
    for rest in itertools.permutations(range(2, n + 1)):
        yield from_cycles([(1,) + rest], n=n)


def count_trees_by_internal_nodes(nodes: int, k: int, max_n: int = MAX_EXHAUSTIVE_N) -> int:
    """Increasing trees on ``nodes`` labeled nodes with k internal nodes.

    Counted by exhausting full cycles; equals A(nodes - 1, k - 1).
    """
    _check_exhaustive(nodes, max_n)
    count = 0
    for p in _cyclic_perms(nodes):
        forest = forest_of(p)
        assert len(forest) == 1
        if len(internal_labels(forest)) == k:
            count += 1
    return count


def count_forests_by_leaves(n: int, k: int, max_n: int = MAX_EXHAUSTIVE_N) -> int:
    """Increasing ordered forests on [n] with k leaves; equals A(n, k)."""
    _check_exhaustive(n, max_n)
    return sum(
        1
        for p in itertools.permutations(range(1, n + 1))
        if len(leaf_labels(forest_of(p))) == k
    )


def count_forests_by_internal_or_singleton_roots(
    n: int, k: int, max_n: int = MAX_EXHAUSTIVE_N
) -> int:
    """Forests on [n] with k nodes internal or isolated; equals A(n, k-1)."""
    _check_exhaustive(n, max_n)
    return sum(
        1
        for p in itertools.permutations(range(1, n + 1))
        if len(internal_or_singleton_root_labels(forest_of(p))) == k
    )


def _check_exhaustive(n: int, max_n: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ValueError(f"n={n} exceeds exhaustive-count bound {max_n}")


def forest_count(p: Perm) -> int:
    """Number of trees; equals the number of fixed positions of the code."""
    return len(fxdp_set(encode_nom(p)))


# -- DOT emission ---------------------------------------------------------------

def to_dot(forest: Forest, name: str = "forest") -> str:
    """Graphviz digraph; sibling order is kept in the edge attribute order."""
    lines = [f"digraph {name} {{"]
    for label in sorted(labels(forest)):
        lines.append(f"  {label};")
    edges = []
    for t in forest:
        for node in t:
            for idx, child in enumerate(node.children, start=1):
                edges.append((node.label, idx, child.label))
    for parent, idx, child in sorted(edges):
        lines.append(f"  {parent} -> {child} [order={idx}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    import doctest

    doctest.testmod()
