"""Fixing-word synthesizers, one per network family, plus the generic greedy fixer."""

import networkx as nx

from boolean_network import BooleanNetwork, Word
from analyzers.network_analyzer import async_graph, is_fixable
from analyzers.graph_analyzer import (
    tree_info,
    min_l_feedback_set,
    strong_components,
    loop_full_closure,
)
from generators.network_generator import FamilySpec, FamilyEnumeration, explicit_family
from generators.word_generator import zigzag_universal
from fixing_core import (
    within_limit,
    log_progress,
    NotFixableError,
    NotAsyncAcyclicError,
    OutOfRangeError,
)

_SINK = -1


def as_family(family):
    """Accepts a FamilySpec, a FamilyEnumeration, a single network or a list of networks."""
    if isinstance(family, FamilyEnumeration):
        return family
    if isinstance(family, FamilySpec):
        return family.members()
    if isinstance(family, BooleanNetwork):
        return explicit_family([family])
    return explicit_family(family)


def _greedy_member_word(f):
    graph = async_graph(f)
    graph.add_node(_SINK)
    for code in range(f.num_states):
        if f.fixed_mask[code]:
            graph.add_edge(code, _SINK)
    to_fixed = nx.shortest_path(graph, target=_SINK)
    letters = []
    for x in range(f.num_states):
        y = f.apply_word_code(letters, x)
        path = to_fixed[y][:-1]
        letters.extend(graph[a][b]["letter"] for a, b in zip(path, path[1:]))
    return letters


def greedy_fix_word(family):
    """
    Builds a word fixing every member by concatenating per-network words.

    For each network, states are visited in code order; the current image of
    each state is driven to a fixed point along a shortest path of the
    asynchronous graph.

    Args:
        family: FamilySpec, FamilyEnumeration or list of networks.

    Returns:
        A Word of length at most 4^n times the family size.

    Raises:
        NotFixableError: naming the first member that is not fixable.
    """
    letters = []
    for index, f in enumerate(as_family(family)):
        if not is_fixable(f):
            raise NotFixableError(index)
        segment = _greedy_member_word(f)
        log_progress(f"  -> member #{index}: {len(segment)} letters")
        letters.extend(segment)
    return Word(letters)


@within_limit("ASYNC_N", size_of=lambda f, *args, **kwargs: f.n)
def acyclic_instance_word(f):
    """
    Fixing word of length 2^n - r for an asynchronous-acyclic network with r
    fixed points.

    States are sorted topologically with every fixed point last; each
    non-fixed state contributes the smallest component whose update moves it.
    """
    graph = async_graph(f)
    if not nx.is_directed_acyclic_graph(graph):
        raise NotAsyncAcyclicError("the asynchronous graph has a cycle")
    fixed = f.fixed_mask
    order = nx.lexicographical_topological_sort(graph, key=lambda x: (bool(fixed[x]), x))
    letters = []
    for x in order:
        if fixed[x]:
            break
        letters.append(next(i for i in range(1, f.n + 1) if f.step_code(i, x) != x))
    return Word(letters)


def _sweep(vertices):
    """v_k..v_2, v_1, v_2..v_k for vertices v_1..v_k."""
    return vertices[:0:-1] + vertices[:1] + vertices[1:]


def tree_word(G):
    """
    Fixing word of length 2n - L - 1 for the monotone-tree family of a
    loop-full tree: monotone networks on G whose leaf components are not
    constant.

    With the non-leaves v_1..v_N in tree order, emits v_N..v_2, v_1, v_2..v_N
    and then every leaf in ascending order. A constant leaf can undo its
    parent after the sweep, so members with one are covered by
    full_tree_word instead.

    Raises:
        NotALoopFullTreeError: if G is not a loop-full tree.
    """
    info = tree_info(G)
    return Word(_sweep(list(info.non_leaves)) + list(info.leaves))


def full_tree_word(G):
    """
    Fixing word of length 2n - 1 for every monotone network on a loop-full tree.

    The sweep of tree_word run over all vertices in tree order, leaves included:
    each prefix of that order induces a subtree whose last vertex is a leaf.

    Raises:
        NotALoopFullTreeError: if G is not a loop-full tree.
    """
    return Word(_sweep(list(tree_info(G).order)))


@within_limit("GRAPH_N", size_of=lambda G, *args, **kwargs: G.n)
def feedback_word(G):
    """
    Fixing word for the monotone networks on G of length <= tau_2(G) n^2 + 3n.

    Vertices are relabeled so that a minimum 2-feedback set becomes
    {alpha+1..n}. The strong components of the rest are fixed one after
    the other by full tree words, then each feedback vertex alpha+k is followed by
    an (alpha+k)-universal word. The result is mapped back to G's labels.
    """
    feedback = sorted(min_l_feedback_set(G, 2))
    alpha = G.n - len(feedback)
    rest = [v for v in G.vertices if v not in feedback]
    to_new = {v: pos for pos, v in enumerate(rest + feedback, start=1)}
    to_old = {pos: v for v, pos in to_new.items()}
    relabeled = G.relabel(to_new)
    log_progress(f"🔍 2-feedback set {feedback}: alpha={alpha}, tau={len(feedback)}")

    letters = []
    for component in strong_components(relabeled, exclude=range(alpha + 1, G.n + 1)):
        closure, labels = loop_full_closure(relabeled, component)
        letters.extend(labels[a - 1] for a in full_tree_word(closure))
    for k in range(1, len(feedback) + 1):
        letters.append(alpha + k)
        letters.extend(zigzag_universal(alpha + k, 0))
    return Word(to_old[a] for a in letters)


def symmetric_conjunctive_word(n):
    """
    Word fixing every conjunctive network on a symmetric digraph over [n]:
    1, 2, ..., n followed by an (n,2)-universal word.

    For n < 3 the (n,2)-universal part is empty and a single update of
    component 1 is appended instead; both small cases are checked exhaustively
    by the tests.
    """
    if n < 1:
        raise OutOfRangeError(f"symmetric_conjunctive_word needs n >= 1, got {n}.")
    sweep = Word(range(1, n + 1))
    if n < 3:
        return sweep + Word.of(1)
    return sweep + zigzag_universal(n, 2)
