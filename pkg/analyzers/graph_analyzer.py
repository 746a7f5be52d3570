"""Digraph utilities: strong components, circumference, feedback sets and trees."""

from dataclasses import dataclass
from itertools import combinations, product

import networkx as nx

from boolean_network import Digraph
from fixing_core import within_limit, NotALoopFullTreeError, log_progress


def strong_components(G, exclude=()):
    """
    Strongly connected components in topological order.

    Args:
        G: The Digraph.
        exclude: Vertices removed before the decomposition.

    Returns:
        A list of frozensets such that every arc between two distinct
        components goes from an earlier one to a later one. Ties are broken by
        the smallest vertex of each component.
    """
    condensed = nx.condensation(G.to_networkx(exclude))
    members = nx.get_node_attributes(condensed, "members")
    order = nx.lexicographical_topological_sort(condensed, key=lambda c: min(members[c]))
    return [frozenset(members[c]) for c in order]


def is_symmetric(G):
    """True iff every non-loop arc has its reverse; loops are unconstrained."""
    return all((j, i) in G.arcs for i, j in G.arcs if i != j)


def underlying_undirected(G, vertices=None):
    """Undirected graph on `vertices` (default all), loops dropped."""
    keep = set(G.vertices if vertices is None else vertices)
    graph = nx.Graph()
    graph.add_nodes_from(sorted(keep))
    graph.add_edges_from((i, j) for i, j in G.sorted_arcs() if i != j and i in keep and j in keep)
    return graph


def _longest_cycle(graph):
    return max((len(cycle) for cycle in nx.simple_cycles(graph)), default=0)


@within_limit("GRAPH_N", size_of=lambda G, *args, **kwargs: G.n)
def circumference(G, exclude=()):
    """Length of a longest directed cycle (a loop counts as 1), 0 when acyclic."""
    return _longest_cycle(G.to_networkx(exclude))


def has_circumference_at_most(G, l, exclude=()):
    """Decides circumference(G minus `exclude`) <= l without computing it when possible."""
    graph = G.to_networkx(exclude)
    if l <= 0:
        return nx.is_directed_acyclic_graph(graph)
    components = [c for c in nx.strongly_connected_components(graph)]
    if l == 1:
        return all(len(c) == 1 for c in components)
    if l == 2:
        # circumference <= 2 iff every strong component is a tree once undirected
        return all(nx.is_tree(underlying_undirected(G, c)) for c in components)
    return not any(len(cycle) > l for cycle in nx.simple_cycles(graph))


@within_limit("GRAPH_N", size_of=lambda G, *args, **kwargs: G.n)
def min_l_feedback_set(G, l):
    """
    Finds a minimum l-feedback vertex set by subset enumeration.

    Args:
        G: The Digraph.
        l: Target circumference, l >= 0.

    Returns:
        The lexicographically smallest minimum-cardinality frozenset I with
        circumference(G minus I) <= l.
    """
    vertices = list(G.vertices)
    for size in range(len(vertices) + 1):
        log_progress(f"🔍 Trying {l}-feedback sets of size {size}...")
        for subset in combinations(vertices, size):
            if has_circumference_at_most(G, l, exclude=subset):
                return frozenset(subset)
    return frozenset(vertices)


def feedback_number(G, l, **kwargs):
    return len(min_l_feedback_set(G, l, **kwargs))


def loop_full_closure(G, vertices):
    """
    The loop-full symmetric closure of the subgraph induced by `vertices`.

    Returns:
        (closure, labels) where closure is a Digraph on 1..k and labels[i-1]
        is the original vertex relabeled to i (ascending order).
    """
    labels = sorted(vertices)
    index = {v: pos for pos, v in enumerate(labels, start=1)}
    arcs = {(i, i) for i in index.values()}
    for i, j in G.arcs:
        if i != j and i in index and j in index:
            arcs.add((index[i], index[j]))
            arcs.add((index[j], index[i]))
    return Digraph(len(labels), frozenset(arcs)), labels


@dataclass(frozen=True)
class TreeInfo:
    root: int
    non_leaves: tuple
    leaves: tuple
    order: tuple

    @property
    def leaf_count(self):
        return len(self.leaves)


def tree_info(G):
    """
    Recognizes a loop-full tree and fixes the order used by the tree word.

    Returns:
        TreeInfo with the root (smallest-labeled non-leaf, or vertex 1 when
        n <= 2), the non-leaves sorted by (distance from the root, label),
        the leaves in ascending order and every vertex sorted by (distance,
        label). The root is never counted as a leaf.

    Raises:
        NotALoopFullTreeError: with the reason for the rejection.
    """
    for v in G.vertices:
        if not G.has_loop(v):
            raise NotALoopFullTreeError(f"vertex {v} has no loop")
    for i, j in G.sorted_arcs():
        if i != j and not G.has_arc(j, i):
            raise NotALoopFullTreeError(f"edge {i}-{j} is not present in both directions")
    tree = underlying_undirected(G)
    if not nx.is_tree(tree):
        raise NotALoopFullTreeError("the underlying undirected graph is not a tree")

    if G.n <= 2:
        root = 1
    else:
        root = min(v for v in G.vertices if tree.degree(v) > 1)
    leaves = tuple(v for v in G.vertices if v != root and tree.degree(v) <= 1)
    distance = nx.single_source_shortest_path_length(tree, root)
    order = tuple(sorted(G.vertices, key=lambda v: (distance[v], v)))
    non_leaves = tuple(v for v in order if v not in leaves)
    return TreeInfo(root, non_leaves, leaves, order)


def all_digraphs(n):
    """Every digraph on [n] (loops included), 2^(n^2) of them."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for chosen in product((False, True), repeat=len(pairs)):
        yield Digraph(n, frozenset(p for p, keep in zip(pairs, chosen) if keep))


def symmetric_digraphs(n):
    """Every symmetric digraph on [n]: any loop set times any undirected edge set."""
    edges = list(combinations(range(1, n + 1), 2))
    for loops in product((False, True), repeat=n):
        for chosen in product((False, True), repeat=len(edges)):
            yield Digraph.from_edges(
                n,
                [e for e, keep in zip(edges, chosen) if keep],
                loops=[v for v, keep in zip(range(1, n + 1), loops) if keep],
            )


def loop_full_trees(n):
    """Every labeled loop-full tree on [n]."""
    if n == 1:
        yield Digraph.from_edges(1, [], loops=[1])
        return
    if n == 2:
        yield Digraph.from_edges(2, [(1, 2)], loops=[1, 2])
        return
    for sequence in product(range(n), repeat=n - 2):
        tree = nx.from_prufer_sequence(list(sequence))
        yield Digraph.from_edges(n, [(i + 1, j + 1) for i, j in tree.edges()], loops=range(1, n + 1))
