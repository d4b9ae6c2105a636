"""DOT and plain-text rendering of descendant trees.

Conventions: every element is a line segment (a DOT edge), every vertex
joins 2n incoming lines to one outgoing line (a DOT node).  Leaf ends are
drawn as labeled points, the root's outgoing line runs to an implicit
sink named "out", so a tree with r leaves and s vertices emits exactly
r + s declared nodes and r + s edges.  Output is byte-stable: children
are canonically sorted and ids come from a fixed traversal order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .trees import Leaf, Tree, descendants, grouped_by_shape, leaf_labels, node_count


@dataclass(frozen=True)
class DiagramDoc:
    """Diagram content of one grading order: (tree, weight, order) per
    unlabeled shape, the weight collecting all labelings of that shape."""

    order: int
    entries: tuple[tuple[Tree, Fraction, int], ...]


def tree_to_text(tree: Tree, leaf_name: str | None = None) -> str:
    """Nested-bracket form, e.g. <<psi0,psi0>_2,psi0>_2."""
    if isinstance(tree, Leaf):
        return leaf_name if leaf_name is not None else f"v{tree.label}"
    inner = ",".join(tree_to_text(c, leaf_name) for c in tree.children)
    return f"<{inner}>_{tree.arity}"


def tree_to_dot(tree: Tree, weight: Fraction) -> str:
    """One DOT digraph for one weighted tree.

    Vertex ids are assigned in postorder of the canonical tree; the
    outgoing root edge ends at the implicit sink "out".
    """
    vertex_decls: list[str] = []
    edges: list[str] = []

    def walk(node: Tree) -> str:
        if isinstance(node, Leaf):
            return f"leaf{node.label}"
        child_ids = [walk(child) for child in node.children]
        name = f"v{len(vertex_decls)}"
        vertex_decls.append(f'  {name} [label="<>_{len(node.children)}", shape=circle];')
        for child_id in child_ids:
            edges.append(f"  {child_id} -> {name};")
        return name

    root_id = walk(tree)
    edges.append(f"  {root_id} -> out;")
    lines = ["digraph descendant {", f'  label="weight {weight}";']
    for label in sorted(leaf_labels(tree)):
        lines.append(f'  leaf{label} [label="{label}", shape=plaintext];')
    lines.extend(vertex_decls)
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def pi_diagrams(order: int) -> DiagramDoc:
    """All diagram shapes contributing at the given grading order.

    A shape with r leaves and s vertices belongs to order r + s; its
    weight is (number of labelings)/r!, matching the coefficient the
    descendant sum assigns to it.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    entries: list[tuple[Tree, Fraction, int]] = []
    if order == 1:
        entries.append((Leaf(1), Fraction(1), 1))
    for leaves in range(2, order):
        nodes_wanted = order - leaves
        if nodes_wanted < 1:
            continue
        with_budget = [t for t in descendants(leaves, nodes_wanted)
                       if node_count(t) == nodes_wanted]
        for rep, count in grouped_by_shape(with_budget):
            entries.append((rep, Fraction(count, factorial(leaves)), order))
    return DiagramDoc(order=order, entries=tuple(entries))
