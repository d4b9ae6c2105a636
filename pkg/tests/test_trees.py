import pytest

from bchresum.trees import (
    Leaf,
    Node,
    descendants,
    grouped_by_shape,
    leaf_count,
    leaf_labels,
    node_count,
    set_partitions,
    shape_key,
    sort_key,
)


def pair(a, b):
    return Node((a, b))


class TestNodes:
    def test_odd_or_tiny_arity_rejected(self):
        with pytest.raises(ValueError):
            Node((Leaf(1),))
        with pytest.raises(ValueError):
            Node((Leaf(1), Leaf(2), Leaf(3)))
        with pytest.raises(ValueError):
            Node(())

    def test_children_are_canonically_sorted(self):
        assert pair(Leaf(2), Leaf(1)) == pair(Leaf(1), Leaf(2))
        nested_a = pair(pair(Leaf(1), Leaf(2)), Leaf(3))
        nested_b = pair(Leaf(3), pair(Leaf(2), Leaf(1)))
        assert nested_a == nested_b
        assert sort_key(nested_a) == sort_key(nested_b)

    def test_counts(self):
        tree = pair(pair(Leaf(1), Leaf(2)), Leaf(3))
        assert leaf_count(tree) == 3
        assert node_count(tree) == 2
        assert sorted(leaf_labels(tree)) == [1, 2, 3]


class TestSetPartitions:
    def test_stirling_counts(self):
        assert len(list(set_partitions(range(4), 2))) == 7
        assert len(list(set_partitions(range(5), 3))) == 25

    def test_edge_blocks(self):
        items = (1, 2, 3)
        assert list(set_partitions(items, 1)) == [[[1, 2, 3]]]
        assert list(set_partitions(items, 3)) == [[[1], [2], [3]]]
        assert list(set_partitions(items, 4)) == []

    def test_partitions_are_distinct(self):
        seen = [frozenset(frozenset(block) for block in part)
                for part in set_partitions(range(6), 3)]
        assert len(seen) == len(set(seen))


class TestDescendants:
    def test_single_argument_is_its_own_descendant(self):
        assert descendants(1) == [Leaf(1)]

    def test_two_arguments(self):
        assert descendants(2) == [pair(Leaf(1), Leaf(2))]

    def test_three_arguments_give_three_bracketings(self):
        expected = {
            pair(pair(Leaf(1), Leaf(2)), Leaf(3)),
            pair(pair(Leaf(1), Leaf(3)), Leaf(2)),
            pair(pair(Leaf(2), Leaf(3)), Leaf(1)),
        }
        got = descendants(3)
        assert len(got) == 3
        assert set(got) == expected

    def test_four_arguments_give_sixteen(self):
        trees = descendants(4)
        assert len(trees) == 16
        assert len(set(trees)) == 16
        # 12 caterpillars, 3 balanced pairings, 1 single 4-ary vertex
        shapes = [(node_count(rep), count) for rep, count in grouped_by_shape(trees)]
        assert sorted(shapes) == [(1, 1), (3, 3), (3, 12)]

    def test_node_budget(self):
        assert len(descendants(4, max_nodes=1)) == 1
        assert len(descendants(4, max_nodes=2)) == 1
        assert len(descendants(4, max_nodes=3)) == 16
        only = descendants(4, max_nodes=1)[0]
        assert node_count(only) == 1 and len(only.children) == 4

    def test_leaves_plus_nodes_is_odd(self):
        for m in range(1, 7):
            for tree in descendants(m):
                assert (leaf_count(tree) + node_count(tree)) % 2 == 1

    def test_labels_cover_range(self):
        for tree in descendants(5, max_nodes=2):
            assert sorted(leaf_labels(tree)) == [1, 2, 3, 4, 5]

    def test_input_validation(self):
        with pytest.raises(ValueError):
            descendants(0)


class TestShapes:
    def test_shape_key_ignores_labels(self):
        a = pair(pair(Leaf(1), Leaf(2)), Leaf(3))
        b = pair(pair(Leaf(2), Leaf(3)), Leaf(1))
        assert shape_key(a) == shape_key(b)
        assert sort_key(a) != sort_key(b)

    def test_grouping_is_deterministic_and_complete(self):
        trees = descendants(4)
        groups = grouped_by_shape(trees)
        assert sum(count for _, count in groups) == len(trees)
        assert groups == grouped_by_shape(list(reversed(trees)))
