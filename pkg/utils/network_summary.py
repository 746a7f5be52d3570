"""Summary report for a single network, used by the analyze command."""

from analyzers.network_analyzer import (
    fixed_points,
    interaction_graph,
    async_moves,
    is_fixable,
    is_monotone,
    is_async_acyclic,
)
from analyzers.graph_analyzer import circumference, is_symmetric
from fixing_core import get_limit, cost_accepted


def _within(limit_name, size):
    return size <= get_limit(limit_name) or cost_accepted()


def summarize_network(f):
    """
    Aggregates the structural and dynamical facts about a network.

    Args:
        f: The BooleanNetwork.

    Returns:
        Dictionary of report fields in display order. Fields whose computation
        is above its size limit are None.
    """
    graph = interaction_graph(f)
    points = sorted(fixed_points(f))
    summary = {
        "n": f.n,
        "fixed_points": [x.bits for x in points],
        "fixed_point_count": len(points),
        "fixable": is_fixable(f),
        "monotone": is_monotone(f),
        "async_acyclic": None,
        "async_arcs": len(async_moves(f)),
        "interaction_arcs": len(graph.arcs),
        "interaction_loops": sum(1 for v in graph.vertices if graph.has_loop(v)),
        "interaction_symmetric": is_symmetric(graph),
        "circumference": None,
    }
    if _within("ASYNC_N", f.n):
        summary["async_acyclic"] = is_async_acyclic(f)
    if _within("GRAPH_N", f.n):
        summary["circumference"] = circumference(graph)
    return summary
