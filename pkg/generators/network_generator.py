"""Network constructions, exhaustive family enumerations and seeded samplers."""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Optional

import numpy as np

from boolean_network import BooleanNetwork, Digraph, component_mask
from analyzers.graph_analyzer import all_digraphs, symmetric_digraphs, tree_info
from fixing_core import within_limit, get_rng, log_progress

FAMILY_KINDS = ("explicit", "all", "monotone", "monotone-on", "monotone-tree", "async-acyclic",
                "conjunctive", "conjunctive-symmetric")
GRAPH_KINDS = ("monotone-on", "monotone-tree")


def conjunctive_network(G):
    """
    Builds the conjunctive network on G.

    Args:
        G: The Digraph.

    Returns:
        The BooleanNetwork with f_i(x) = AND of x_j over in-neighbours j of i,
        and f_i = 1 when i has no in-neighbour.
    """
    codes = np.arange(1 << G.n)
    images = np.zeros(1 << G.n, dtype=np.int64)
    for i in G.vertices:
        need = 0
        for j in G.in_neighbors(i):
            need |= component_mask(G.n, j)
        images |= ((codes & need) == need).astype(np.int64) << (G.n - i)
    return BooleanNetwork(G.n, images)


def path_network(path):
    """The network whose asynchronous graph has exactly the arcs of the cube path."""
    n = path.n
    images = np.arange(1 << n)
    for prev, cur in zip(path.states, path.states[1:]):
        images[prev.code] = cur.code
    return BooleanNetwork(n, images)


def chain_conjunctive_network(permutation):
    """
    Symmetric conjunctive network along a permutation i1 ... in: the two ends
    see themselves and their neighbour, inner vertices see both neighbours.
    """
    order = list(permutation)
    n = len(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"{order} is not a permutation of [1, {n}].")
    if n == 1:
        return conjunctive_network(Digraph(1, frozenset({(1, 1)})))
    arcs = {(order[0], order[0]), (order[1], order[0]),
            (order[-1], order[-1]), (order[-2], order[-1])}
    for k in range(1, n - 1):
        arcs.add((order[k - 1], order[k]))
        arcs.add((order[k + 1], order[k]))
    return conjunctive_network(Digraph(n, frozenset(arcs)))


# --- monotone components ---

@lru_cache(maxsize=None)
def monotone_truth_tables(k):
    """All monotone functions of k <= 4 variables, as rows of a (count, 2^k) 0/1 array."""
    if k > 4:
        raise ValueError(f"Exhaustive monotone tables are limited to 4 variables, got {k}.")
    size = 1 << k
    candidates = np.arange(1 << size, dtype=np.int64)
    tables = ((candidates[:, None] >> np.arange(size)) & 1).astype(np.uint8)
    keep = np.ones(len(candidates), dtype=bool)
    local = np.arange(size)
    for b in range(k):
        low = local[(local >> b & 1) == 0]
        keep &= np.all(tables[:, low] <= tables[:, low | (1 << b)], axis=1)
    result = tables[keep]
    result.flags.writeable = False
    return result


def _local_index(n, variables):
    """For every state code, its index in the truth table over `variables` (first most significant)."""
    codes = np.arange(1 << n)
    index = np.zeros(1 << n, dtype=np.int64)
    k = len(variables)
    for p, v in enumerate(variables):
        index |= ((codes >> (n - v)) & 1) << (k - 1 - p)
    return index


def _images_from_choices(n, component_tables, choice):
    images = np.zeros(1 << n, dtype=np.int64)
    for i, (tables, c) in enumerate(zip(component_tables, choice), start=1):
        images |= tables[c].astype(np.int64) << (n - i)
    return images


def _monotone_on_tables(G):
    component_tables = []
    for i in G.vertices:
        variables = G.in_neighbors(i)
        local = monotone_truth_tables(len(variables))
        component_tables.append(local[:, _local_index(G.n, variables)])
    return component_tables


def _iter_products(n, component_tables):
    for choice in product(*(range(len(t)) for t in component_tables)):
        yield BooleanNetwork(n, _images_from_choices(n, component_tables, choice))


# --- asynchronous-acyclic networks ---

def _acyclic_flip_masks(n):
    """Backtracks over partial orientations of the n-cube without directed cycles.

    Yields, per network, the list flip[x] of components updated out of state x.
    Reachability sets are carried as bitmasks so a cycle is rejected the
    moment its closing arc is chosen.
    """
    size = 1 << n
    edges = [(x, x | component_mask(n, i), component_mask(n, i))
             for x in range(size) for i in range(1, n + 1) if not x & component_mask(n, i)]
    flips = [0] * size

    def add_arc(reach, u, v):
        if reach[v] >> u & 1 or u == v:
            return None
        extended = list(reach)
        gained = reach[v] | (1 << v)
        for w in range(size):
            if w == u or reach[w] >> u & 1:
                extended[w] |= gained
        return extended

    def assign(e, reach):
        if e == len(edges):
            yield list(flips)
            return
        low, high, mask = edges[e]
        yield from assign(e + 1, reach)
        up = add_arc(reach, low, high)
        if up is not None:
            flips[low] ^= mask
            yield from assign(e + 1, up)
            flips[low] ^= mask
        down = add_arc(reach, high, low)
        if down is not None:
            flips[high] ^= mask
            yield from assign(e + 1, down)
            flips[high] ^= mask

    yield from assign(0, [0] * size)


def _iter_async_acyclic(n):
    codes = np.arange(1 << n)
    for flip in _acyclic_flip_masks(n):
        yield BooleanNetwork(n, codes ^ np.array(flip, dtype=np.int64))


# --- families ---

@dataclass
class FamilyEnumeration:
    """A restartable, duplicate-free stream of networks sharing the same n."""

    name: str
    n: int
    factory: Callable
    size: Optional[int] = None
    _members: Optional[list] = field(default=None, repr=False)

    def __iter__(self):
        if self._members is not None:
            return iter(self._members)
        return iter(self.factory())

    @property
    def count(self):
        if self.size is None:
            self.size = sum(1 for _ in self)
        return self.size

    def __len__(self):
        return self.count

    def members(self):
        """Materializes the family once and keeps it."""
        if self._members is None:
            log_progress(f"📦 Materializing family {self.name} (n={self.n})...")
            self._members = list(self.factory())
            self.size = len(self._members)
        return self._members

    def stack(self):
        """Images of every member as a (members, 2^n) array."""
        members = self.members()
        if not members:
            return np.zeros((0, 1 << self.n), dtype=np.int64)
        return np.stack([f.images for f in members])


def explicit_family(networks, name="explicit"):
    networks = list(networks)
    if not networks:
        raise ValueError("An explicit family needs at least one network.")
    n = networks[0].n
    if any(f.n != n for f in networks):
        raise ValueError("Every member of a family must have the same number of components.")
    return FamilyEnumeration(name, n, lambda: iter(networks), size=len(networks), _members=networks)


@within_limit("ENUM_N", size_of=lambda n, *args, **kwargs: n)
def _all_family(n):
    size = 1 << n
    codes_per_network = size ** size

    def factory():
        for images in product(range(size), repeat=size):
            yield BooleanNetwork(n, images)

    return FamilyEnumeration("all", n, factory, size=codes_per_network)


@within_limit("ENUM_N", size_of=lambda n, *args, **kwargs: n)
def _monotone_family(n):
    complete = Digraph(n, frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1)))
    tables = _monotone_on_tables(complete)
    return FamilyEnumeration("monotone", n, lambda: _iter_products(n, tables),
                             size=int(np.prod([len(t) for t in tables])))


@within_limit("ENUM_N", size_of=lambda n, *args, **kwargs: n)
def _async_acyclic_family(n):
    return FamilyEnumeration("async-acyclic", n, lambda: _iter_async_acyclic(n))


@within_limit("ENUM_N", size_of=lambda n, *args, **kwargs: n)
def _conjunctive_family(n):
    return FamilyEnumeration("conjunctive", n,
                             lambda: (conjunctive_network(G) for G in all_digraphs(n)),
                             size=1 << (n * n))


@within_limit("GRAPH_FAMILY_N", size_of=lambda n, *args, **kwargs: n)
def _conjunctive_symmetric_family(n):
    return FamilyEnumeration("conjunctive-symmetric", n,
                             lambda: (conjunctive_network(G) for G in symmetric_digraphs(n)),
                             size=1 << (n + n * (n - 1) // 2))


@within_limit("GRAPH_FAMILY_N", size_of=lambda G, *args, **kwargs: G.n)
def _monotone_on_family(G):
    tables = _monotone_on_tables(G)
    return FamilyEnumeration(f"monotone-on({G})", G.n, lambda: _iter_products(G.n, tables),
                             size=int(np.prod([len(t) for t in tables])))


@within_limit("GRAPH_FAMILY_N", size_of=lambda G, *args, **kwargs: G.n)
def _monotone_tree_family(G):
    """monotone-on(G) for a loop-full tree G, leaf components restricted to non-constant functions."""
    leaves = set(tree_info(G).leaves)
    tables = _monotone_on_tables(G)
    for i in leaves:
        t = tables[i - 1]
        tables[i - 1] = t[t.min(axis=1) != t.max(axis=1)]
    return FamilyEnumeration(f"monotone-tree({G})", G.n, lambda: _iter_products(G.n, tables),
                             size=int(np.prod([len(t) for t in tables])))


def enumerate_networks(n, predicate="all", graph=None, **kwargs):
    """
    Enumerates a family of n-component networks exhaustively.

    Args:
        n: Number of components.
        predicate: One of "all", "monotone", "async-acyclic", "conjunctive",
            "conjunctive-symmetric", "monotone-on" (needs `graph`),
            "monotone-tree" (needs a loop-full tree `graph`; members of
            monotone-on whose leaf components are non-constant), or a
            callable used to filter "all".
        graph: The Digraph for "monotone-on" and "monotone-tree".
        accept_cost: Lift the size guard.

    Returns:
        A FamilyEnumeration.
    """
    if callable(predicate):
        everything = _all_family(n, **kwargs)
        return FamilyEnumeration(getattr(predicate, "__name__", "filtered"), n,
                                 lambda: (f for f in everything if predicate(f)))
    if predicate == "all":
        return _all_family(n, **kwargs)
    if predicate == "monotone":
        return _monotone_family(n, **kwargs)
    if predicate == "async-acyclic":
        return _async_acyclic_family(n, **kwargs)
    if predicate == "conjunctive":
        return _conjunctive_family(n, **kwargs)
    if predicate == "conjunctive-symmetric":
        return _conjunctive_symmetric_family(n, **kwargs)
    if predicate in GRAPH_KINDS:
        if graph is None:
            raise ValueError(f"The {predicate} family needs a graph.")
        if graph.n != n:
            raise ValueError(f"Graph has {graph.n} vertices but n={n}.")
        if predicate == "monotone-tree":
            return _monotone_tree_family(graph, **kwargs)
        return _monotone_on_family(graph, **kwargs)
    raise ValueError(f"Unknown family predicate '{predicate}'.")


@dataclass(frozen=True)
class FamilySpec:
    """Names a family: an explicit list, or one of the parametrized kinds."""

    kind: str
    n: Optional[int] = None
    graph: Optional[Digraph] = None
    networks: tuple = ()

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"Unknown family kind '{self.kind}'. Known kinds: {', '.join(FAMILY_KINDS)}")
        if self.kind == "explicit" and not self.networks:
            raise ValueError("An explicit family needs at least one network.")
        if self.kind in GRAPH_KINDS and self.graph is None:
            raise ValueError(f"A {self.kind} family needs a graph.")

    @classmethod
    def explicit(cls, networks):
        networks = tuple(networks)
        return cls("explicit", networks[0].n if networks else None, networks=networks)

    @classmethod
    def monotone_on(cls, graph):
        return cls("monotone-on", graph.n, graph=graph)

    @classmethod
    def monotone_tree(cls, graph):
        return cls("monotone-tree", graph.n, graph=graph)

    def members(self, **kwargs):
        if self.kind == "explicit":
            return explicit_family(self.networks)
        if self.kind in GRAPH_KINDS:
            return enumerate_networks(self.graph.n, self.kind, graph=self.graph, **kwargs)
        return enumerate_networks(self.n, self.kind, **kwargs)


# --- samplers ---

def _random_upset(rng, k):
    """A random monotone function of k variables: the up-set of random generators."""
    size = 1 << k
    local = np.arange(size)
    generators = local[rng.random(size) < rng.uniform(0.0, 0.6)]
    if len(generators) == 0:
        return np.zeros(size, dtype=np.uint8)
    covered = (generators[:, None] & ~local[None, :]) == 0
    return covered.any(axis=0).astype(np.uint8)


def sample_monotone_on(G, count, seed):
    """
    Draws seeded random members of the labeled monotone family on G.

    Args:
        G: The Digraph; each f_i may only read the in-neighbours of i.
        count: Number of networks to draw (duplicates possible).
        seed: Integer seed; required.

    Returns:
        A list of BooleanNetworks.
    """
    rng = get_rng(seed)
    indices = [_local_index(G.n, G.in_neighbors(i)) for i in G.vertices]
    networks = []
    for _ in range(count):
        images = np.zeros(1 << G.n, dtype=np.int64)
        for i, index in zip(G.vertices, indices):
            table = _random_upset(rng, len(G.in_neighbors(i)))
            images |= table[index].astype(np.int64) << (G.n - i)
        networks.append(BooleanNetwork(G.n, images))
    return networks


def sample_networks(n, count, seed):
    """Uniformly random n-component networks (seeded)."""
    rng = get_rng(seed)
    return [BooleanNetwork(n, rng.integers(0, 1 << n, size=1 << n)) for _ in range(count)]
