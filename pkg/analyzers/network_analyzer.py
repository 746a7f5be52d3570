"""Structural and dynamical predicates of Boolean networks."""

import numpy as np
import networkx as nx

from boolean_network import State, Digraph, Configuration, component_mask
from fixing_core import within_limit


def fixed_points(f):
    """Returns the fixed points of f as a frozenset of States."""
    return frozenset(State(f.n, int(x)) for x in np.flatnonzero(f.fixed_mask))


def interaction_graph(f):
    """
    Computes the interaction graph G(f).

    Args:
        f: The BooleanNetwork.

    Returns:
        A Digraph with an arc j -> i iff flipping component j of some state
        changes f_i.
    """
    codes = np.arange(f.num_states)
    arcs = set()
    for j in range(1, f.n + 1):
        changed = f.images ^ f.images[codes ^ component_mask(f.n, j)]
        for i in range(1, f.n + 1):
            if np.any(changed & component_mask(f.n, i)):
                arcs.add((j, i))
    return Digraph(f.n, frozenset(arcs))


def async_moves(f):
    """Lists the arcs of the asynchronous graph as (x, y, letter) code triples, sorted."""
    codes = np.arange(f.num_states)
    moves = []
    for i in range(1, f.n + 1):
        steps = f.step_codes(i)
        for x in np.flatnonzero(steps != codes).tolist():
            moves.append((x, int(steps[x]), i))
    moves.sort()
    return moves


@within_limit("ASYNC_N", size_of=lambda f, *args, **kwargs: f.n)
def async_graph(f):
    """
    Materializes the asynchronous graph Γ(f).

    Args:
        f: The BooleanNetwork.

    Returns:
        An nx.DiGraph whose nodes are state codes (attribute `label` holds the
        bit string) and whose arcs x -> y carry the updated component as
        attribute `letter`. The graph attribute `n` records the width.
    """
    graph = nx.DiGraph(n=f.n)
    for code in range(f.num_states):
        graph.add_node(code, label=State(f.n, code).bits)
    for x, y, letter in async_moves(f):
        graph.add_edge(x, y, letter=letter)
    return graph


def fixes(f, w):
    """True iff f^w(x) is a fixed point of f for every state x."""
    return Configuration.identity(f.n).apply_word(f, w).is_fixing(f)


def reaches_fixed_point(f):
    """Boolean array: entry x is True iff some fixed point is reachable from x in Γ(f).

    Backward reachability: x reaches a fixed point iff it is one, or some
    single update f^i(x) does.
    """
    reach = f.fixed_mask.copy()
    steps = [f.step_codes(i) for i in range(1, f.n + 1)]
    while True:
        grown = reach.copy()
        for step in steps:
            grown |= reach[step]
        if np.array_equal(grown, reach):
            return reach
        reach = grown


def is_fixable(f):
    return bool(reaches_fixed_point(f).all())


def is_monotone(f):
    """Order preservation, checked on covering pairs (x, x with one bit raised)."""
    codes = np.arange(f.num_states)
    for i in range(1, f.n + 1):
        mask = component_mask(f.n, i)
        low = codes[(codes & mask) == 0]
        if np.any(f.images[low] & ~f.images[low | mask]):
            return False
    return True


def is_monotone_all_pairs(f):
    """The literal definition: x <= y implies f(x) <= f(y), over every comparable pair."""
    codes = np.arange(f.num_states)
    x, y = np.meshgrid(codes, codes, indexing="ij")
    comparable = (x & ~y) == 0
    violations = (f.images[x] & ~f.images[y]) != 0
    return not bool(np.any(comparable & violations))


@within_limit("ASYNC_N", size_of=lambda f, *args, **kwargs: f.n)
def is_async_acyclic(f):
    return nx.is_directed_acyclic_graph(async_graph(f))
