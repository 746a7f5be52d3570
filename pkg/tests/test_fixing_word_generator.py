import numpy as np
import pytest

from boolean_network import BooleanNetwork, Digraph, Word
from analyzers.network_analyzer import fixes, fixed_points, is_fixable
from analyzers.graph_analyzer import loop_full_trees, feedback_number, tree_info
from generators.network_generator import (
    enumerate_networks,
    explicit_family,
    FamilySpec,
    sample_monotone_on,
)
from generators.fixing_word_generator import (
    as_family,
    greedy_fix_word,
    acyclic_instance_word,
    tree_word,
    full_tree_word,
    feedback_word,
    symmetric_conjunctive_word,
)
from generators.word_generator import path_universal_word
from fixing_core import NotFixableError, NotAsyncAcyclicError, NotALoopFullTreeError


def _fixes_all(networks, w):
    return all(fixes(f, w) for f in networks)


class TestAsFamily:
    def test_accepts_every_shape(self, example3):
        assert as_family(example3).members() == [example3]
        assert as_family([example3, example3]).count == 2
        assert as_family(FamilySpec.explicit([example3])).members() == [example3]
        family = explicit_family([example3])
        assert as_family(family) is family


class TestGreedy:
    def test_identity_needs_nothing(self):
        assert greedy_fix_word(BooleanNetwork.identity(3)) == Word()

    def test_example3(self, example3):
        w = greedy_fix_word(example3)
        assert fixes(example3, w)
        assert len(w) <= 4 ** 3

    def test_unfixable_member_is_named(self, example3, negation):
        with pytest.raises(NotFixableError) as info:
            greedy_fix_word([BooleanNetwork.identity(1), negation])
        assert info.value.member_index == 1

    def test_every_fixable_two_component_network(self):
        family = [f for f in enumerate_networks(2, "all") if is_fixable(f)]
        w = greedy_fix_word(family)
        assert _fixes_all(family, w)
        assert len(w) <= 16 * len(family)


class TestAcyclicInstance:
    def test_example3(self, example3):
        w = acyclic_instance_word(example3)
        assert len(w) == 7
        assert fixes(example3, w)

    def test_every_async_acyclic_network_up_to_two(self):
        for n in (1, 2):
            for f in enumerate_networks(n, "async-acyclic"):
                w = acyclic_instance_word(f)
                assert len(w) == 2 ** n - len(fixed_points(f))
                assert fixes(f, w)

    def test_rejects_cycles(self, negation):
        with pytest.raises(NotAsyncAcyclicError):
            acyclic_instance_word(negation)


class TestTreeWord:
    @pytest.mark.parametrize("fixture, expected", [
        ("path3", "213"),
        ("path4", "32314"),
        ("star4", "1234"),
    ])
    def test_examples(self, request, fixture, expected):
        assert tree_word(request.getfixturevalue(fixture)) == Word.parse(expected)

    def test_small_trees(self):
        assert tree_word(Digraph.from_arcs(1, [(1, 1)])) == Word.of(1)
        assert tree_word(Digraph.from_edges(2, [(1, 2)], loops=[1, 2])) == Word.of(1, 2)

    def test_rejects_non_trees(self, triangle):
        with pytest.raises(NotALoopFullTreeError):
            tree_word(triangle)

    @pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_fixes_every_network_with_live_leaves(self, n):
        for G in loop_full_trees(n):
            w = tree_word(G)
            assert len(w) == 2 * n - tree_info(G).leaf_count - 1
            assert _fixes_all(enumerate_networks(n, "monotone-tree", graph=G), w)

    def test_constant_leaf_defeats_the_short_word(self, path3):
        # f1 = f3 = 0, f2 = x1 & x2 & x3: 111 ends at 010
        f = BooleanNetwork(3, [0b000, 0b000, 0b000, 0b000, 0b000, 0b000, 0b000, 0b010])
        assert f in set(enumerate_networks(3, "monotone-on", graph=path3))
        assert f not in set(enumerate_networks(3, "monotone-tree", graph=path3))
        assert not fixes(f, tree_word(path3))
        assert fixes(f, full_tree_word(path3))


class TestFullTreeWord:
    @pytest.mark.parametrize("fixture, expected", [
        ("path3", "31213"),
        ("path4", "4312134"),
        ("star4", "4321234"),
    ])
    def test_examples(self, request, fixture, expected):
        assert full_tree_word(request.getfixturevalue(fixture)) == Word.parse(expected)

    def test_small_trees(self):
        assert full_tree_word(Digraph.from_arcs(1, [(1, 1)])) == Word.of(1)
        assert full_tree_word(Digraph.from_edges(2, [(1, 2)], loops=[1, 2])) == Word.of(2, 1, 2)

    def test_rejects_non_trees(self, triangle):
        with pytest.raises(NotALoopFullTreeError):
            full_tree_word(triangle)

    @pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_fixes_every_monotone_network_on_every_tree(self, n):
        for G in loop_full_trees(n):
            w = full_tree_word(G)
            assert len(w) == 2 * n - 1
            assert _fixes_all(enumerate_networks(n, "monotone-on", graph=G), w)


class TestFeedbackWord:
    def test_tree_reduces_to_full_tree_word(self, path3, path4):
        assert feedback_word(path3) == full_tree_word(path3)
        assert feedback_word(path4) == full_tree_word(path4)

    def test_partially_looped_path(self):
        G = Digraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)], loops=[1, 3, 5])
        w = feedback_word(G)
        assert feedback_number(G, 2) == 0
        assert len(w) == 2 * 5 - 1
        assert _fixes_all(sample_monotone_on(G, 1000, seed=5), w)

    @pytest.mark.parametrize("fixture", ["triangle", "looped_cycle3"])
    def test_bound_and_sampled_members(self, request, fixture):
        G = request.getfixturevalue(fixture)
        w = feedback_word(G)
        assert len(w) <= feedback_number(G, 2) * G.n ** 2 + 3 * G.n
        assert _fixes_all(sample_monotone_on(G, 200, seed=5), w)

    def test_triangle_exhaustive(self, triangle):
        w = feedback_word(triangle)
        assert _fixes_all(enumerate_networks(3, "monotone-on", graph=triangle), w)

    @pytest.mark.slow
    def test_random_graphs(self):
        rng = np.random.default_rng(13)
        for _ in range(10):
            n = int(rng.integers(2, 6))
            pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
            G = Digraph.from_arcs(n, [p for p in pairs if rng.random() < 0.4])
            w = feedback_word(G)
            assert len(w) <= feedback_number(G, 2) * n ** 2 + 3 * n
            assert _fixes_all(sample_monotone_on(G, 50, seed=int(rng.integers(1 << 30))), w)


class TestSymmetricConjunctive:
    @pytest.mark.parametrize("n, expected", [(1, "11"), (2, "121"), (3, "123123")])
    def test_examples(self, n, expected):
        assert symmetric_conjunctive_word(n) == Word.parse(expected)

    @pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_fixes_every_symmetric_conjunctive_network(self, n):
        w = symmetric_conjunctive_word(n)
        assert _fixes_all(enumerate_networks(n, "conjunctive-symmetric"), w)

    def test_invalid(self):
        with pytest.raises(ValueError):
            symmetric_conjunctive_word(0)


class TestPathUniversalFixesAcyclicNetworks:
    @pytest.mark.parametrize("n", [1, 2, pytest.param(3, marks=pytest.mark.slow)])
    def test_every_async_acyclic_network(self, n):
        w = path_universal_word(n)
        family = enumerate_networks(n, "async-acyclic")
        assert family.count == {1: 3, 2: 79, 3: 453471}[n]
        assert _fixes_all(family, w)
