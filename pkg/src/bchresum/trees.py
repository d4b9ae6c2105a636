"""Labeled rooted trees with even-arity internal nodes.

A tree stands for one nested application of the symmetric vertex
operations to a tuple of arguments: leaves carry the argument labels
1..m, every internal node consumes an even number >= 2 of children.
Children are unordered; Node stores them sorted by a structural key, so
two trees are equal exactly when they are the same nested expression.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence, Union


@dataclass(frozen=True)
class Leaf:
    label: int


@dataclass(frozen=True)
class Node:
    children: tuple["Tree", ...]

    def __post_init__(self):
        arity = len(self.children)
        if arity < 2 or arity % 2:
            raise ValueError(f"internal nodes need an even arity >= 2, got {arity}")
        object.__setattr__(self, "children", tuple(sorted(self.children, key=sort_key)))

    @property
    def arity(self) -> int:
        return len(self.children)


Tree = Union[Leaf, Node]


def sort_key(tree: Tree):
    if isinstance(tree, Leaf):
        return (0, tree.label, ())
    return (1, len(tree.children), tuple(sort_key(c) for c in tree.children))


def shape_key(tree: Tree):
    """Structural key that ignores leaf labels (the unlabeled shape)."""
    if isinstance(tree, Leaf):
        return (0,)
    return (1, len(tree.children), tuple(sorted(shape_key(c) for c in tree.children)))


@lru_cache(maxsize=None)
def leaf_count(tree: Tree) -> int:
    if isinstance(tree, Leaf):
        return 1
    return sum(leaf_count(c) for c in tree.children)


@lru_cache(maxsize=None)
def node_count(tree: Tree) -> int:
    if isinstance(tree, Leaf):
        return 0
    return 1 + sum(node_count(c) for c in tree.children)


def leaf_labels(tree: Tree) -> list[int]:
    if isinstance(tree, Leaf):
        return [tree.label]
    out: list[int] = []
    for child in tree.children:
        out.extend(leaf_labels(child))
    return out


def set_partitions(items: Sequence, blocks: int) -> Iterator[list[list]]:
    """Unordered partitions of items into exactly `blocks` nonempty blocks."""
    n = len(items)
    if blocks < 1 or blocks > n:
        return
    if blocks == 1:
        yield [list(items)]
        return
    head, rest = items[0], items[1:]
    # head joins one block of a partition of the rest, or sits alone
    for part in set_partitions(rest, blocks):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]
    for part in set_partitions(rest, blocks - 1):
        yield [[head]] + part


def _trees_over(labels: tuple[int, ...], max_nodes: int) -> list[Tree]:
    if len(labels) == 1:
        return [Leaf(labels[0])]
    if max_nodes < 1:
        return []
    out: list[Tree] = []
    for arity in range(2, len(labels) + 1, 2):
        for blocks in set_partitions(labels, arity):
            pools = [_trees_over(tuple(block), max_nodes - 1) for block in blocks]
            for combo in product(*pools):
                if 1 + sum(node_count(c) for c in combo) <= max_nodes:
                    out.append(Node(combo))
    return out


def descendants(m: int, max_nodes: int | None = None) -> list[Tree]:
    """All trees with leaves labeled 1..m, each counted once.

    Every reduction order that produces the same nested expression yields
    the same canonical tree, so the enumeration is by value, without
    multiplicity.  m = 1 gives just the bare leaf.  max_nodes bounds the
    number of internal nodes (it can never exceed m - 1).
    """
    if m < 1:
        raise ValueError("need at least one argument")
    budget = m - 1 if max_nodes is None else min(max_nodes, m - 1)
    found = _trees_over(tuple(range(1, m + 1)), budget)
    return sorted(found, key=sort_key)


def grouped_by_shape(trees: Sequence[Tree]) -> list[tuple[Tree, int]]:
    """Group label-equivalent trees: (representative, multiplicity) pairs,
    deterministically ordered."""
    groups: dict[tuple, list[Tree]] = {}
    for tree in trees:
        groups.setdefault(shape_key(tree), []).append(tree)
    out = [(min(members, key=sort_key), len(members)) for members in groups.values()]
    out.sort(key=lambda pair: sort_key(pair[0]))
    return out
