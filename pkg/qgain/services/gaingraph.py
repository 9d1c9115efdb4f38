"""
Quaternion unit gain graphs.

A `GainGraph` is a simple graph whose oriented edges carry unit quaternion
gains with gain(v, u) = conj(gain(u, v)). Each edge is stored once, oriented
from the lower vertex id to the higher one; the reverse gain is derived on
read. Vertex ids are integers and the adjacency matrix follows sorted id
order.
"""
import logging
from collections import deque
from dataclasses import dataclass
from itertools import islice
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from ..config import Config
from ..utils.exceptions import (
    DisconnectedGraphError,
    GraphElementNotFoundError,
    GraphStructureError,
    NonUnitGainError,
)
from .qmatrix import QMatrix
from .quaternion import ONE, ZERO, Quaternion

Edge = Tuple[int, int]
SwitchingFunction = Mapping[int, Quaternion]


class GainGraph:
    """Immutable simple graph with a unit quaternion gain on every oriented edge."""

    __slots__ = ("_vertices", "_gains", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int], gains: Mapping[Edge, Quaternion] = None, *, _trusted: bool = False):
        """
        Args:
            vertices: vertex ids
            gains: gain per oriented edge (u, v), any orientation; the reverse
                orientation must not also be given

        Raises:
            GraphStructureError: loop, repeated edge, duplicate vertex or unknown endpoint
            NonUnitGainError: a gain with norm different from 1
        """
        vertex_list = [int(v) for v in vertices]
        vertex_set = set(vertex_list)
        if len(vertex_set) != len(vertex_list):
            raise GraphStructureError("Duplicate vertex id")
        stored: Dict[Edge, Quaternion] = {}
        for (u, v), g in (gains or {}).items():
            if not _trusted:
                if u == v:
                    raise GraphStructureError(f"Loop at vertex {u}")
                if u not in vertex_set or v not in vertex_set:
                    raise GraphStructureError(f"Edge ({u}, {v}) has an endpoint outside the vertex set")
                if not g.is_unit():
                    raise NonUnitGainError(g, f"gain on edge ({u}, {v})")
            key, value = ((u, v), g) if u < v else ((v, u), g.conj())
            if key in stored:
                raise GraphStructureError(f"Repeated edge {key}")
            stored[key] = value
        adj: Dict[int, List[int]] = {v: [] for v in vertex_list}
        for u, v in stored:
            adj[u].append(v)
            adj[v].append(u)
        self._vertices = tuple(sorted(vertex_list))
        self._gains = dict(sorted(stored.items()))
        self._adj = {v: tuple(sorted(adj[v])) for v in self._vertices}
        self._hash = None

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[int, int, Quaternion]], vertices: Iterable[int] = None) -> "GainGraph":
        edges = list(edges)
        if vertices is None:
            vertices = sorted({x for u, v, _ in edges for x in (u, v)})
        return cls(vertices, {(u, v): g for u, v, g in edges})

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._gains)

    def edges(self) -> List[Edge]:
        """Edges as (u, v) with u < v, sorted."""
        return list(self._gains)

    def oriented_gains(self) -> Dict[Edge, Quaternion]:
        """Stored gains, keyed by (lower id, higher id)."""
        return dict(self._gains)

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._gains

    def gain(self, u: int, v: int) -> Quaternion:
        if u < v:
            g = self._gains.get((u, v))
            if g is not None:
                return g
        else:
            g = self._gains.get((v, u))
            if g is not None:
                return g.conj()
        raise GraphElementNotFoundError("Edge", (u, v))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphElementNotFoundError("Vertex", v)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GainGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._gains == other._gains

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self._vertices, tuple(self._gains.items()))))
        return self._hash

    def __repr__(self) -> str:
        return f"GainGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    omega: int
    c: int
    p: int


class CutVertexCounts(NamedTuple):
    """Counts around a vertex x used by the degree/component identities."""
    d: int  # degree of x
    r: int  # components of G - x holding a degree-2 neighbour of x
    m: int  # degree-2 neighbours of x
    s: int  # components of G - x holding a neighbour of x


def adjacency_matrix(G: GainGraph) -> QMatrix:
    """Hermitian n x n matrix in sorted vertex order; entry (i, j) is gain(v_i, v_j) or 0."""
    index = {v: i for i, v in enumerate(G.vertices)}
    n = G.n
    entries = [ZERO] * (n * n)
    for (u, v), g in G.oriented_gains().items():
        i, j = index[u], index[v]
        entries[i * n + j] = g
        entries[j * n + i] = g.conj()
    return QMatrix(n, n, entries)


def to_networkx(G: GainGraph) -> nx.Graph:
    """Underlying simple graph; each edge keeps its stored gain as the `gain` attribute."""
    graph = nx.Graph()
    graph.add_nodes_from(G.vertices)
    for (u, v), g in G.oriented_gains().items():
        graph.add_edge(u, v, gain=g)
    return graph


def stats(G: GainGraph) -> GraphStats:
    omega = nx.number_connected_components(to_networkx(G)) if G.n else 0
    p = sum(1 for v in G.vertices if G.degree(v) == 1)
    return GraphStats(n=G.n, m=G.m, omega=omega, c=G.m - G.n + omega, p=p)


def is_connected(G: GainGraph) -> bool:
    return G.n > 0 and nx.is_connected(to_networkx(G))


def induced(G: GainGraph, S: Iterable[int]) -> GainGraph:
    keep = set(S)
    missing = keep.difference(G.vertices)
    if missing:
        raise GraphElementNotFoundError("Vertex", min(missing))
    gains = {e: g for e, g in G.oriented_gains().items() if e[0] in keep and e[1] in keep}
    return GainGraph(keep, gains, _trusted=True)


def components(G: GainGraph) -> List[GainGraph]:
    """Connected components as induced subgraphs, ordered by smallest vertex id."""
    parts = sorted((sorted(c) for c in nx.connected_components(to_networkx(G))), key=lambda c: c[0])
    return [induced(G, part) for part in parts]


def distance(G: GainGraph, u: int, v: int) -> int:
    for x in (u, v):
        if not G.has_vertex(x):
            raise GraphElementNotFoundError("Vertex", x)
    try:
        return nx.shortest_path_length(to_networkx(G), u, v)
    except nx.NetworkXNoPath:
        raise DisconnectedGraphError("distance", f"Vertices {u} and {v} lie in different components")


def delete_vertex(G: GainGraph, v: int) -> GainGraph:
    return delete_vertices(G, [v])


def delete_vertices(G: GainGraph, U: Iterable[int]) -> GainGraph:
    drop = set(U)
    for v in drop:
        if not G.has_vertex(v):
            raise GraphElementNotFoundError("Vertex", v)
    return induced(G, (v for v in G.vertices if v not in drop))


def delete_edge(G: GainGraph, u: int, v: int) -> GainGraph:
    key = (min(u, v), max(u, v))
    gains = G.oriented_gains()
    if key not in gains:
        raise GraphElementNotFoundError("Edge", (u, v))
    del gains[key]
    return GainGraph(G.vertices, gains, _trusted=True)


def with_edge(G: GainGraph, u: int, v: int, gain: Quaternion) -> GainGraph:
    """Add edge u -> v with the given gain."""
    if G.has_edge(u, v):
        raise GraphStructureError(f"Edge ({u}, {v}) already present")
    gains = G.oriented_gains()
    gains[(u, v)] = gain
    return GainGraph(G.vertices, gains)


def _check_switching(G: GainGraph, theta: SwitchingFunction) -> None:
    for v in G.vertices:
        if v not in theta:
            raise GraphElementNotFoundError("Switching value for vertex", v)
        if not theta[v].is_unit():
            raise NonUnitGainError(theta[v], f"switching value at vertex {v}")


def switch(G: GainGraph, theta: SwitchingFunction) -> GainGraph:
    """
    Apply the switching gain(x, y) -> theta(x)^-1 * gain(x, y) * theta(y).

    Raises:
        NonUnitGainError: a switching value is not unit
    """
    _check_switching(G, theta)
    gains = {
        (u, v): theta[u].conj() * g * theta[v]
        for (u, v), g in G.oriented_gains().items()
    }
    return GainGraph(G.vertices, gains, _trusted=True)


def switch_canonical(G: GainGraph) -> Tuple[GainGraph, Dict[int, Quaternion]]:
    """
    Switch so that every edge of a breadth-first spanning tree has gain 1.

    The tree is rooted at the smallest vertex id and theta(child) =
    gain(child, parent) * theta(parent). Non-tree edges keep the cycle
    information.

    Raises:
        DisconnectedGraphError: G is empty or disconnected
    """
    if not is_connected(G):
        raise DisconnectedGraphError("switch_canonical")
    root = G.vertices[0]
    theta: Dict[int, Quaternion] = {root: ONE}
    queue = deque([root])
    while queue:
        parent = queue.popleft()
        for child in G.neighbors(parent):
            if child not in theta:
                theta[child] = G.gain(child, parent) * theta[parent]
                queue.append(child)
    return switch(G, theta), theta


def pendant_structure(G: GainGraph) -> List[Tuple[int, int]]:
    """(leaf, neighbour) pairs, ordered by leaf id."""
    return [(v, G.neighbors(v)[0]) for v in G.vertices if G.degree(v) == 1]


def major_vertices(G: GainGraph) -> List[int]:
    """Vertices of degree at least 2."""
    return [v for v in G.vertices if G.degree(v) >= 2]


def cut_vertex_counts(G: GainGraph, x: int) -> CutVertexCounts:
    """
    Count (d, r, m, s) around x.

    s counts the components of G - x that contain a neighbour of x, so that
    c(G - x) = c(G) - d + s holds also for disconnected G.
    """
    nbrs = G.neighbors(x)
    rest = to_networkx(G)
    rest.remove_node(x)
    component_of = {}
    for idx, comp in enumerate(nx.connected_components(rest)):
        for v in comp:
            component_of[v] = idx
    deg2 = [y for y in nbrs if G.degree(y) == 2]
    return CutVertexCounts(
        d=len(nbrs),
        r=len({component_of[y] for y in deg2}),
        m=len(deg2),
        s=len({component_of[y] for y in nbrs}),
    )


def lies_on_cycle(G: GainGraph, x: int) -> bool:
    """True when some edge at x is not a bridge."""
    if not G.has_vertex(x):
        raise GraphElementNotFoundError("Vertex", x)
    graph = to_networkx(G)
    bridges = {frozenset(e) for e in nx.bridges(graph, root=x)}
    return any(frozenset((x, y)) not in bridges for y in G.neighbors(x))


def blocks(G: GainGraph) -> List[Tuple[int, ...]]:
    """Vertex sets of the biconnected components (isolated vertices excluded), sorted."""
    return sorted(tuple(sorted(b)) for b in nx.biconnected_components(to_networkx(G)))


def has_shared_cycles(G: GainGraph) -> bool:
    """True when some block carries two or more independent cycles (m_B >= n_B + 1)."""
    for block in blocks(G):
        sub = induced(G, block)
        if sub.m >= sub.n + 1:
            return True
    return False


def normalize_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    """Rotate to start at the smallest id and orient toward the smaller neighbour."""
    cycle = list(cycle)
    k = cycle.index(min(cycle))
    rotated = cycle[k:] + cycle[:k]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def simple_cycles(G: GainGraph, limit: int = None) -> List[Tuple[int, ...]]:
    """
    Cycle inventory of the underlying graph, at most `limit` cycles.

    Each cycle is a vertex sequence normalized by `normalize_cycle`.
    """
    limit = Config.CYCLE_INVENTORY_LIMIT if limit is None else limit
    found = islice(nx.simple_cycles(to_networkx(G)), limit)
    cycles = sorted({normalize_cycle(c) for c in found}, key=lambda c: (len(c), c))
    if len(cycles) == limit:
        logging.info(f"Cycle inventory truncated at {limit} cycles for graph with n={G.n}, m={G.m}")
    return cycles


def is_cycle_in(G: GainGraph, cycle: Sequence[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(G.has_vertex(v) for v in cycle) and all(
        G.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    )


def internal_paths(G: GainGraph) -> List[Tuple[int, ...]]:
    """
    Paths from each leaf whose inner vertices have degree 2.

    A path runs from the leaf until the first vertex of degree other than 2
    (a branch vertex, or another leaf when the component is a path).
    """
    paths = []
    for leaf, nxt in pendant_structure(G):
        path = [leaf]
        prev, cur = leaf, nxt
        while G.degree(cur) == 2:
            path.append(cur)
            a, b = G.neighbors(cur)
            prev, cur = cur, (b if a == prev else a)
        path.append(cur)
        paths.append(tuple(path))
    return paths


# Builders

def relabel(G: GainGraph, mapping: Mapping[int, int]) -> GainGraph:
    """Rename vertices; ids missing from the mapping are kept."""
    new_ids = [mapping.get(v, v) for v in G.vertices]
    if len(set(new_ids)) != len(new_ids):
        raise GraphStructureError("Relabeling merges vertices")
    gains = {(mapping.get(u, u), mapping.get(v, v)): g for (u, v), g in G.oriented_gains().items()}
    return GainGraph(new_ids, gains, _trusted=True)


def shifted(G: GainGraph, offset: int) -> GainGraph:
    return relabel(G, {v: v + offset for v in G.vertices})


def disjoint_union(H: GainGraph, K: GainGraph) -> GainGraph:
    overlap = set(H.vertices).intersection(K.vertices)
    if overlap:
        raise GraphStructureError(f"Vertex sets overlap at {sorted(overlap)}")
    gains = H.oriented_gains()
    gains.update(K.oriented_gains())
    return GainGraph(H.vertices + K.vertices, gains, _trusted=True)


def coalesce(H: GainGraph, K: GainGraph, v_h: int, v_k: int) -> GainGraph:
    """
    Identify vertex v_k of K with vertex v_h of H; the merged vertex keeps id v_h.

    Raises:
        GraphStructureError: the vertex sets of H and K overlap
    """
    if not H.has_vertex(v_h):
        raise GraphElementNotFoundError("Vertex", v_h)
    if not K.has_vertex(v_k):
        raise GraphElementNotFoundError("Vertex", v_k)
    overlap = set(H.vertices).intersection(K.vertices)
    if overlap:
        raise GraphStructureError(f"Vertex sets overlap at {sorted(overlap)}")
    return _merge(H, relabel(K, {v_k: v_h}), v_h)


def _merge(H: GainGraph, K: GainGraph, shared: int) -> GainGraph:
    gains = H.oriented_gains()
    gains.update(K.oriented_gains())
    vertices = list(H.vertices) + [v for v in K.vertices if v != shared]
    return GainGraph(vertices, gains, _trusted=True)


def join_by_path(H: GainGraph, K: GainGraph, u: int, w: int, t: int,
                 path_gains: Optional[Sequence[Quaternion]] = None) -> GainGraph:
    """
    Join u in H to w in K by a path on t >= 2 vertices v_1 = u, ..., v_t = w.

    The t - 2 inner vertices get fresh ids above every existing id.

    Args:
        path_gains: the t - 1 gains along v_1 -> v_t (all 1 when omitted)
    """
    if t < 2:
        raise GraphStructureError(f"A joining path needs at least 2 vertices, got {t}")
    if not H.has_vertex(u):
        raise GraphElementNotFoundError("Vertex", u)
    if not K.has_vertex(w):
        raise GraphElementNotFoundError("Vertex", w)
    base = disjoint_union(H, K)
    path_gains = list(path_gains) if path_gains is not None else [ONE] * (t - 1)
    if len(path_gains) != t - 1:
        raise GraphStructureError(f"Expected {t - 1} path gains, got {len(path_gains)}")
    start = max(base.vertices) + 1
    inner = list(range(start, start + t - 2))
    chain = [u] + inner + [w]
    gains = base.oriented_gains()
    for a, b, g in zip(chain, chain[1:], path_gains):
        gains[(a, b)] = g
    return GainGraph(list(base.vertices) + inner, gains)
