"""End-to-end regressions on small exactly known cases."""

from fractions import Fraction
from itertools import product

import pytest

from boolean_network import BooleanNetwork, Digraph, State, Word
from analyzers.network_analyzer import fixed_points, fixes, is_fixable
from analyzers.word_analyzer import (
    is_k_universal,
    is_path_word,
    is_path_universal,
    max_letter_multiplicity,
)
from analyzers.graph_analyzer import loop_full_trees, tree_info, feedback_number
from generators.word_generator import zigzag_universal, gray_word, path_universal_word
from generators.network_generator import enumerate_networks, sample_monotone_on
from generators.fixing_word_generator import (
    acyclic_instance_word,
    tree_word,
    full_tree_word,
    feedback_word,
    symmetric_conjunctive_word,
)
from oracle import (
    min_fixing_length,
    family_min_fixing_length,
    conjunctive_fixing_lengths,
    min_universal_length,
    min_path_universal_length,
    fixable_fraction,
)
from network_io import read_network
from fixword_cli import run, EXIT_TRUE

EXAMPLE3_TABLE = ["000", "000", "001", "001", "010", "000", "010", "100"]


def test_example3_regression(sample_path, capsys):
    f = read_network(sample_path("example3.bn"))
    assert [State(3, int(y)).bits for y in f.images] == EXAMPLE3_TABLE
    assert fixed_points(f) == {State.parse("000")}
    assert run(["verify", sample_path("example3.bn"), "-w", "1231"]) == EXIT_TRUE
    assert not any(fixes(f, Word(w)) for w in product((1, 2, 3), repeat=3))
    assert min_fixing_length(f) == 4


def test_path_universal_two():
    assert min_path_universal_length(2) == 4
    assert path_universal_word(2) == Word.parse("1212")
    assert is_path_universal(path_universal_word(2), 2)


def test_async_acyclic_family_two():
    family = enumerate_networks(2, "async-acyclic")
    assert family.count == 79
    assert family_min_fixing_length(family, budget=8) == min_path_universal_length(2) == 4


@pytest.mark.slow
def test_async_acyclic_three():
    lengths = []
    for f in enumerate_networks(3, "async-acyclic"):
        w = acyclic_instance_word(f)
        assert len(w) == 8 - len(fixed_points(f))
        assert fixes(f, w)
        lengths.append(min_fixing_length(f))
    assert max(lengths) == 7


@pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_tree_word_length_is_optimal(n):
    for G in loop_full_trees(n):
        w = tree_word(G)
        family = enumerate_networks(n, "monotone-tree", graph=G)
        assert len(w) == 2 * n - tree_info(G).leaf_count - 1
        assert all(fixes(f, w) for f in family)
        assert family_min_fixing_length(family, budget=len(w)) == len(w)


@pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_full_tree_word_fixes_the_whole_family(n):
    for G in loop_full_trees(n):
        w = full_tree_word(G)
        family = enumerate_networks(n, "monotone-on", graph=G)
        assert len(w) == 2 * n - 1
        assert all(fixes(f, w) for f in family)
        if n <= 3:
            assert family_min_fixing_length(family, budget=len(w)) == len(w)


@pytest.mark.slow
def test_conjunctive_bound_is_tight():
    lengths = [length for _, length in conjunctive_fixing_lengths(3) if length is not None]
    assert max(lengths) == 2 * 3 - 2


@pytest.mark.parametrize("n", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_symmetric_conjunctive_word_fixes_the_family(n):
    family = enumerate_networks(n, "conjunctive-symmetric")
    assert family.count == {2: 8, 3: 64, 4: 1024}[n]
    w = symmetric_conjunctive_word(n)
    assert all(fixes(f, w) for f in family)
    if n <= 3:
        exact = family_min_fixing_length(family, budget=len(w))
        assert min_universal_length(n, 1) <= exact <= len(w)


@pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_universal_length_bounds(n):
    full = min_universal_length(n, 0)
    for k in range(n + 1):
        w = zigzag_universal(n, k)
        assert len(w) == (n - 1) * (n - k) + 1
        assert is_k_universal(w, n, k)
        exact = min_universal_length(n, k)
        assert full - (n - 1) * k - 1 <= exact <= (n - 1) * (n - k) + 1


def test_gray_invariants():
    for n in range(1, 11):
        w = gray_word(n)
        assert len(w) == 2 ** n - 1
        assert is_path_word(w, n)
        assert max_letter_multiplicity(w) == 2 ** (n - 1)


FEEDBACK_SUITE = [
    Digraph.from_edges(3, [(1, 2), (2, 3), (1, 3)], loops=[1, 2, 3]),
    Digraph.from_arcs(4, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 4)]),
    Digraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)], loops=[1, 3, 5]),
    Digraph.from_arcs(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 2)]),
    Digraph.from_edges(6, [(1, 2), (1, 3), (1, 4), (4, 5), (4, 6)], loops=range(1, 7)),
]


@pytest.mark.slow
@pytest.mark.parametrize("G", FEEDBACK_SUITE, ids=lambda G: f"n{G.n}-arcs{len(G.arcs)}")
def test_feedback_word_bound(G):
    tau = feedback_number(G, 2)
    assert tau in (0, 1)
    w = feedback_word(G)
    assert len(w) <= tau * G.n ** 2 + 3 * G.n
    assert all(fixes(f, w) for f in sample_monotone_on(G, 1000, seed=G.n))


def test_fixable_fraction():
    assert fixable_fraction(1) == Fraction(3, 4)
    count = sum(is_fixable(f) for f in enumerate_networks(2, "all"))
    assert fixable_fraction(2) == Fraction(count, 256)
    assert is_fixable(BooleanNetwork.identity(2))
