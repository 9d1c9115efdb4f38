"""
Random gain graphs for the verification runs.

A graph in the cell (n, c, p) is built from a random tree with a chosen leaf
count plus c extra edges that absorb the surplus leaves. Cells that resist
the retry budget fall back to the closest pendant count found, and the
result is flagged as relaxed.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from ..config import Config
from .gaingraph import GainGraph, stats
from .quaternion import ONE, GainSampler


@dataclass(frozen=True)
class CellSample:
    graph: GainGraph
    target: Tuple[int, int, int]
    relaxed: bool
    attempts: int


def max_extra_edges(n: int) -> int:
    return n * (n - 1) // 2 - (n - 1) if n >= 1 else 0


def cell_is_feasible(n: int, c: int, p: int) -> bool:
    """Whether some connected simple graph has n vertices, cyclomatic number c and p leaves."""
    if n < 1 or c < 0 or p < 0:
        return False
    if n == 1:
        return c == 0 and p == 0
    if n == 2:
        return c == 0 and p == 2
    if c > max_extra_edges(n) or p > n - 1:
        return False
    if c == 0:
        return p >= 2
    # Leaves hang off the n - p other vertices, which carry all c extra edges.
    return c <= max_extra_edges(n - p)


def random_tree_edges(n: int, rng: np.random.Generator, leaves: Optional[int] = None) -> List[Tuple[int, int]]:
    """
    Edges of a random labelled tree on 0..n-1 from a Pruefer sequence.

    Args:
        leaves: exact leaf count (2 <= leaves <= n - 1); any when None
    """
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    if leaves is None:
        sequence = [int(x) for x in rng.integers(n, size=n - 2)]
    else:
        # Exactly the vertices appearing in the sequence are internal.
        internal = [int(x) for x in rng.choice(n, size=n - leaves, replace=False)]
        sequence = internal + [internal[int(i)] for i in rng.integers(len(internal), size=n - 2 - len(internal))]
        sequence = [sequence[int(i)] for i in rng.permutation(len(sequence))]
    tree = nx.from_prufer_sequence(sequence)
    return sorted((min(u, v), max(u, v)) for u, v in tree.edges())


def _add_extra_edges(n: int, edges: Set[Tuple[int, int]], c: int, p: int,
                     rng: np.random.Generator) -> Optional[Set[Tuple[int, int]]]:
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    surplus = len(leaves) - p
    if surplus < 0 or surplus > 2 * c:
        return None
    kill = [leaves[int(i)] for i in rng.permutation(len(leaves))[:surplus]]
    keep = set(leaves).difference(kill)
    allowed = [v for v in range(n) if v not in keep]
    edges = set(edges)
    pool = list(kill)
    for _ in range(c):
        u = pool.pop() if pool else allowed[int(rng.integers(len(allowed)))]
        partners = [w for w in (pool or allowed) if w != u and (min(u, w), max(u, w)) not in edges]
        if not partners:
            partners = [w for w in allowed if w != u and (min(u, w), max(u, w)) not in edges]
        if not partners:
            return None
        w = partners[int(rng.integers(len(partners)))]
        if w in pool:
            pool.remove(w)
        edges.add((min(u, w), max(u, w)))
    return edges


def _assign_gains(n: int, edges: Set[Tuple[int, int]], sample: GainSampler) -> GainGraph:
    return GainGraph(range(n), {e: sample() for e in sorted(edges)})


def sample_cell(n: int, c: int, p: int, rng: np.random.Generator, sample: Optional[GainSampler] = None,
                budget: Optional[int] = None) -> CellSample:
    """
    Random connected gain graph with n vertices, cyclomatic number c and p leaves.

    Args:
        rng: stream for the structure (and for gains when `sample` draws from it)
        sample: gain sampler; all gains 1 when None
        budget: attempts before relaxing p (Config.SAMPLE_RETRY_BUDGET by default)

    Returns:
        CellSample whose `relaxed` flag is set when p could not be met
    """
    budget = budget or Config.SAMPLE_RETRY_BUDGET
    sample = sample or (lambda: ONE)
    if n <= 2:
        G = _assign_gains(n, set(random_tree_edges(n, rng)), sample)
        s = stats(G)
        return CellSample(G, (n, c, p), (s.c, s.p) != (c, p), 1)
    c = min(c, max_extra_edges(n))
    best = None
    for attempt in range(1, budget + 1):
        low = max(2, p)
        high = min(n - 1, p + 2 * c)
        if low > high:
            low = high = min(max(2, p), n - 1)
        leaves = int(rng.integers(low, high + 1))
        tree = set(random_tree_edges(n, rng, leaves))
        G_edges = _add_extra_edges(n, tree, c, p, rng)
        if G_edges is None:
            continue
        degree = [0] * n
        for u, v in G_edges:
            degree[u] += 1
            degree[v] += 1
        got = sum(1 for d in degree if d == 1)
        if got == p:
            return CellSample(_assign_gains(n, G_edges, sample), (n, c, p), False, attempt)
        if best is None or abs(got - p) < abs(best[1] - p):
            best = (G_edges, got)
    logging.info(f"Cell (n={n}, c={c}, p={p}) not reached in {budget} attempts; relaxing p")
    edges = best[0] if best else set(random_tree_edges(n, rng))
    return CellSample(_assign_gains(n, edges, sample), (n, c, p), True, budget)


def random_cells(rng: np.random.Generator, count: int, max_n: int, max_c: int) -> List[Tuple[int, int, int]]:
    """Draw `count` feasible (n, c, p) cells with 2 <= n <= max_n and c <= max_c."""
    cells = []
    while len(cells) < count:
        n = int(rng.integers(2, max_n + 1))
        c = int(rng.integers(0, min(max_c, max_extra_edges(n)) + 1))
        p = int(rng.integers(0, n))
        if n == 2:
            c, p = 0, 2
        if cell_is_feasible(n, c, p):
            cells.append((n, c, p))
    return cells


def random_gain_graph(n: int, m: int, rng: np.random.Generator, sample: Optional[GainSampler] = None) -> GainGraph:
    """Uniform random simple graph with n vertices and m edges (possibly disconnected)."""
    sample = sample or (lambda: ONE)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = min(m, len(pairs))
    chosen = rng.choice(len(pairs), size=m, replace=False) if m else []
    return GainGraph(range(n), {pairs[int(i)]: sample() for i in chosen})
