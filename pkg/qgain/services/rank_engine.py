"""
Structural rank of gain graphs.

Closed forms for paths, cycles and trees, the exact reductions (pendant
vertex, pendant cycle, six-vertex path contraction) and the three-case lower
bound. `structural_rank` combines them and falls back to a sound interval
when no exact reduction applies; `elimination_rank` is the ground truth.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from ..utils.exceptions import HypothesisViolationError, ReductionPreconditionError
from .gaingraph import (
    GainGraph,
    adjacency_matrix,
    blocks,
    coalesce,
    components,
    delete_edge,
    delete_vertex,
    delete_vertices,
    has_shared_cycles,
    induced,
    is_cycle_in,
    join_by_path,
    pendant_structure,
    stats,
    with_edge,
)
from .matching import tree_rank
from .qmatrix import row_left_rank
from .quaternion import ONE, Quaternion, product


class CycleType(str, Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"
    TYPE4 = "Type4"


class BoundCaseKind(str, Enum):
    HAS_PENDANT = "HasPendant"
    LEAF_FREE_CYCLE_DISJOINT = "LeafFreeCycleDisjoint"
    LEAF_FREE_SHARED_CYCLES = "LeafFreeSharedCycles"


@dataclass(frozen=True)
class BoundCase:
    case: BoundCaseKind
    bound: int


@dataclass(frozen=True)
class RankResult:
    """Exact rank when lo == hi, otherwise the closed interval [lo, hi]."""
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi or self.lo < 0:
            raise ValueError(f"Invalid rank interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: int) -> "RankResult":
        return cls(value, value)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"Rank is only known to lie in [{self.lo}, {self.hi}]")
        return self.lo

    def contains(self, rank: int) -> bool:
        return self.lo <= rank <= self.hi

    def shift(self, k: int) -> "RankResult":
        return RankResult(self.lo + k, self.hi + k)

    def __add__(self, other: "RankResult") -> "RankResult":
        return RankResult(self.lo + other.lo, self.hi + other.hi)

    def clamp(self, lo: int, hi: int) -> "RankResult":
        new_lo, new_hi = max(self.lo, lo), min(self.hi, hi)
        if new_lo > new_hi:
            # Both inputs are sound, so this only happens on a bug upstream.
            raise ValueError(f"Empty rank bracket: [{self.lo}, {self.hi}] with [{lo}, {hi}]")
        return RankResult(new_lo, new_hi)

    def to_dict(self) -> dict:
        if self.is_exact:
            return {"kind": "exact", "value": self.lo}
        return {"kind": "interval", "lo": self.lo, "hi": self.hi}

    def __str__(self) -> str:
        return str(self.lo) if self.is_exact else f"[{self.lo}, {self.hi}]"


def elimination_rank(G: GainGraph) -> int:
    """Row left rank of the adjacency matrix by exact elimination."""
    return row_left_rank(adjacency_matrix(G))


# Cycles

def cycle_gain(G: GainGraph, cycle: Sequence[int]) -> Quaternion:
    """
    Ordered product gain(v1, v2) * gain(v2, v3) * ... * gain(vn, v1).

    Raises:
        ReductionPreconditionError: the sequence is not a cycle of G
    """
    if not is_cycle_in(G, cycle):
        raise ReductionPreconditionError("cycle_gain", f"{list(cycle)} is not a cycle of the graph")
    k = len(cycle)
    return product(G.gain(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def classify_cycle(n: int, g: Quaternion) -> CycleType:
    if n < 3:
        raise ValueError(f"A cycle has at least 3 vertices, got {n}")
    if n % 2 == 0:
        target = ONE if (n // 2) % 2 == 0 else -ONE
        return CycleType.TYPE1 if g == target else CycleType.TYPE2
    # Re((-1)^((n-1)/2) g) vanishes exactly when Re(g) does.
    return CycleType.TYPE3 if g.re() != 0 else CycleType.TYPE4


def cycle_type_of(G: GainGraph, cycle: Sequence[int]) -> CycleType:
    return classify_cycle(len(cycle), cycle_gain(G, cycle))


def rank_path(n: int) -> int:
    if n < 1:
        raise ValueError(f"A path has at least 1 vertex, got {n}")
    return n - 1 if n % 2 else n


def rank_cycle(n: int, t: CycleType) -> int:
    if n < 3:
        raise ValueError(f"A cycle has at least 3 vertices, got {n}")
    if t == CycleType.TYPE1:
        return n - 2
    if t == CycleType.TYPE4:
        return n - 1
    return n


def _is_path(G: GainGraph) -> bool:
    s = stats(G)
    return s.omega == 1 and s.c == 0 and all(G.degree(v) <= 2 for v in G.vertices)


def _is_cycle(G: GainGraph) -> bool:
    s = stats(G)
    return s.omega == 1 and s.n >= 3 and all(G.degree(v) == 2 for v in G.vertices)


def _walk_cycle(G: GainGraph, start: int, members: set) -> Tuple[int, ...]:
    order = [start]
    prev, cur = start, min(w for w in G.neighbors(start) if w in members)
    while cur != start:
        order.append(cur)
        prev, cur = cur, next(w for w in G.neighbors(cur) if w in members and w != prev)
    return tuple(order)


# Reductions

def reduce_pendant(G: GainGraph, leaf: Optional[int] = None) -> Tuple[GainGraph, int]:
    """
    Remove a pendant vertex and its neighbour; rank(G) = rank(result) + 2.

    Args:
        leaf: the pendant vertex to use (the smallest leaf when omitted)

    Raises:
        ReductionPreconditionError: G has no pendant vertex, or `leaf` is not one
    """
    pendants = dict(pendant_structure(G))
    if not pendants:
        raise ReductionPreconditionError("reduce_pendant", "Graph has no pendant vertex")
    if leaf is None:
        leaf = min(pendants)
    if leaf not in pendants:
        raise ReductionPreconditionError("reduce_pendant", f"Vertex {leaf} is not a pendant vertex")
    return delete_vertices(G, [leaf, pendants[leaf]]), 2


@dataclass(frozen=True)
class PendantCycle:
    cycle: Tuple[int, ...]
    attachment: Optional[int]  # None when the cycle is a whole component


@dataclass(frozen=True)
class PendantCycleReduction:
    """
    Outcome of removing a pendant cycle of length `length`.

    `kept` is the remainder with the attachment vertex, `removed` the
    remainder without it. Exact cases give rank(G) = increment +
    rank(operand); the interval case gives
    length - 1 + rank(removed) <= rank(G) <= length + rank(kept).
    """
    cycle: Tuple[int, ...]
    cycle_type: CycleType
    attachment: Optional[int]
    kept: GainGraph
    removed: GainGraph
    operand: Optional[GainGraph]
    increment: Optional[int]

    @property
    def length(self) -> int:
        return len(self.cycle)

    @property
    def is_exact(self) -> bool:
        return self.operand is not None

    def bracket(self, rank_removed: int, rank_kept: int) -> RankResult:
        return RankResult(self.length - 1 + rank_removed, self.length + rank_kept)


def find_pendant_cycles(G: GainGraph) -> List[PendantCycle]:
    """Cycles whose vertices all have degree 2 except at most one attachment vertex."""
    found = []
    for block in blocks(G):
        if len(block) < 3:
            continue
        sub = induced(G, block)
        if sub.m != sub.n:
            continue
        heavy = [v for v in block if G.degree(v) > 2]
        if len(heavy) > 1:
            continue
        attachment = heavy[0] if heavy else None
        start = attachment if attachment is not None else block[0]
        found.append(PendantCycle(_walk_cycle(sub, start, set(block)), attachment))
    return found


def reduce_pendant_cycle(G: GainGraph, cycle: Sequence[int]) -> PendantCycleReduction:
    """
    Split off a pendant cycle.

    Type 1 keeps the attachment with increment n - 2, Type 2 drops it with
    increment n, Type 4 keeps it with increment n - 1. Type 3 only brackets
    the rank, so `operand` and `increment` are None. A cycle that is a whole
    component reduces exactly to its closed form.

    Raises:
        ReductionPreconditionError: the sequence is not a pendant cycle of G
    """
    cycle = tuple(cycle)
    if not is_cycle_in(G, cycle):
        raise ReductionPreconditionError("reduce_pendant_cycle", f"{list(cycle)} is not a cycle of the graph")
    heavy = [v for v in cycle if G.degree(v) > 2]
    if len(heavy) > 1:
        raise ReductionPreconditionError("reduce_pendant_cycle", f"Cycle {list(cycle)} has {len(heavy)} vertices of degree above 2")
    n = len(cycle)
    t = cycle_type_of(G, cycle)
    removed = delete_vertices(G, cycle)
    if not heavy:
        return PendantCycleReduction(cycle, t, None, removed, removed, removed, rank_cycle(n, t))
    u = heavy[0]
    kept = delete_vertices(G, [v for v in cycle if v != u])
    if t == CycleType.TYPE1:
        operand, increment = kept, n - 2
    elif t == CycleType.TYPE2:
        operand, increment = removed, n
    elif t == CycleType.TYPE4:
        operand, increment = kept, n - 1
    else:
        operand, increment = None, None
    logging.debug(f"Pendant {t.value} cycle of length {n} at vertex {u}")
    return PendantCycleReduction(cycle, t, u, kept, removed, operand, increment)


def contract_p6(G: GainGraph, path: Sequence[int]) -> Tuple[GainGraph, int]:
    """
    Replace a path v1..v6 whose inner vertices have degree 2 by one edge v1 -> v6.

    The new edge carries the ordered product of the five path gains.
    rank(G) = rank(result) + 4.

    Raises:
        ReductionPreconditionError: wrong length, not a path, an inner vertex
            of degree other than 2, or v1 and v6 already adjacent
    """
    path = tuple(path)
    if len(path) != 6 or len(set(path)) != 6:
        raise ReductionPreconditionError("contract_p6", "Expected 6 distinct vertices")
    for a, b in zip(path, path[1:]):
        if not G.has_edge(a, b):
            raise ReductionPreconditionError("contract_p6", f"({a}, {b}) is not an edge")
    for v in path[1:5]:
        if G.degree(v) != 2:
            raise ReductionPreconditionError("contract_p6", f"Inner vertex {v} has degree {G.degree(v)}")
    v1, v6 = path[0], path[5]
    if G.has_edge(v1, v6):
        raise ReductionPreconditionError("contract_p6", f"Ends {v1} and {v6} are already adjacent")
    gain = product(G.gain(a, b) for a, b in zip(path, path[1:]))
    contracted = with_edge(delete_vertices(G, path[1:5]), v1, v6, gain)
    return contracted, 4


def find_p6(G: GainGraph) -> Optional[Tuple[int, ...]]:
    """First contractible six-vertex path, or None."""
    seen = set()
    for v in G.vertices:
        if v in seen or G.degree(v) != 2:
            continue
        # Grow the maximal run of degree-2 vertices through v.
        seen.add(v)
        ends = []
        for direction in G.neighbors(v):
            prev, cur, side = v, direction, []
            while cur != v and G.degree(cur) == 2:
                seen.add(cur)
                side.append(cur)
                a, b = G.neighbors(cur)
                prev, cur = cur, (b if a == prev else a)
            if cur == v:
                break
            ends.append((side, cur))
        if len(ends) != 2:
            continue  # whole component is a cycle
        (left, x), (right, y) = ends
        sequence = [x] + left[::-1] + [v] + right + [y]
        for start in range(len(sequence) - 5):
            window = tuple(sequence[start:start + 6])
            if window[0] != window[5] and not G.has_edge(window[0], window[5]):
                return window
    return None


# Lower bound

def lower_bound(G: GainGraph) -> BoundCase:
    """
    Three-case lower bound on the rank.

    n - 2c - p + 1 with pendant vertices, n - 2c when leaf-free with pairwise
    vertex-disjoint cycles, n - 2c + 1 when leaf-free and some block holds
    two independent cycles.

    Raises:
        HypothesisViolationError: some component is a single vertex
    """
    if any(G.degree(v) == 0 for v in G.vertices):
        raise HypothesisViolationError("lower_bound", "every component needs at least two vertices")
    s = stats(G)
    if s.p >= 1:
        return BoundCase(BoundCaseKind.HAS_PENDANT, s.n - 2 * s.c - s.p + 1)
    if has_shared_cycles(G):
        return BoundCase(BoundCaseKind.LEAF_FREE_SHARED_CYCLES, s.n - 2 * s.c + 1)
    return BoundCase(BoundCaseKind.LEAF_FREE_CYCLE_DISJOINT, s.n - 2 * s.c)


# Structural rank

@lru_cache(maxsize=8192)
def _structural(G: GainGraph) -> Tuple[RankResult, Tuple[str, ...]]:
    if G.n == 0:
        return RankResult.exact(0), ()
    parts = components(G)
    if len(parts) > 1:
        total, steps = RankResult.exact(0), []
        for part in parts:
            result, sub = _structural(part)
            total = total + result
            steps.append(f"component {list(part.vertices)}: {result}")
            steps.extend(f"  {s}" for s in sub)
        return total, tuple(steps)

    s = stats(G)
    if s.n == 1:
        return RankResult.exact(0), ("isolated vertex: 0",)
    if s.c == 0:
        if _is_path(G):
            return RankResult.exact(rank_path(s.n)), (f"path on {s.n} vertices: {rank_path(s.n)}",)
        r = tree_rank(G)
        return RankResult.exact(r), (f"tree on {s.n} vertices: 2 * matching = {r}",)
    if _is_cycle(G):
        cycle = _walk_cycle(G, G.vertices[0], set(G.vertices))
        t = cycle_type_of(G, cycle)
        return RankResult.exact(rank_cycle(s.n, t)), (f"{t.value} cycle on {s.n} vertices: {rank_cycle(s.n, t)}",)

    pendants = pendant_structure(G)
    if pendants:
        leaf, nbr = pendants[0]
        reduced, inc = reduce_pendant(G, leaf)
        result, sub = _structural(reduced)
        return result.shift(inc), (f"pendant {leaf}-{nbr}: +{inc}",) + sub

    type3 = None
    for pc in find_pendant_cycles(G):
        red = reduce_pendant_cycle(G, pc.cycle)
        if red.is_exact:
            result, sub = _structural(red.operand)
            step = f"pendant {red.cycle_type.value} cycle {list(red.cycle)}: +{red.increment}"
            return result.shift(red.increment), (step,) + sub
        if type3 is None:
            type3 = red

    p6 = find_p6(G)
    if p6 is not None:
        reduced, inc = contract_p6(G, p6)
        result, sub = _structural(reduced)
        return result.shift(inc), (f"contract path {list(p6)}: +{inc}",) + sub

    bound = lower_bound(G).bound
    if type3 is not None:
        removed, _ = _structural(type3.removed)
        kept, _ = _structural(type3.kept)
        bracket = type3.bracket(removed.lo, kept.hi).clamp(max(bound, 0), s.n)
        step = f"pendant Type3 cycle {list(type3.cycle)}: {bracket}"
        return bracket, (step,)

    # Irreducible: rank(G - v) <= rank(G) <= rank(G - v) + 2.
    v = max(G.vertices, key=lambda x: (G.degree(x), -x))
    rest, _ = _structural(delete_vertex(G, v))
    bracket = RankResult(rest.lo, rest.hi + 2).clamp(max(bound, 0), s.n)
    return bracket, (f"irreducible, delete vertex {v}: {bracket}",)


def structural_rank(G: GainGraph) -> RankResult:
    """
    Rank from reductions and closed forms, without elimination.

    Exact whenever the reductions reach closed forms; otherwise a sound
    interval containing the true rank.
    """
    return _structural(G)[0]


def structural_rank_trace(G: GainGraph) -> Tuple[RankResult, List[str]]:
    result, steps = _structural(G)
    return result, list(steps)


# Inequality checks

@dataclass(frozen=True)
class InequalityCheck:
    holds: bool
    lhs: int
    rhs: int
    graph: GainGraph = field(repr=False)


def coalescence_bound_check(H: GainGraph, K: GainGraph, v: int, u: Optional[int] = None) -> InequalityCheck:
    """
    Identify v in H with u in K (first vertex of K by default) and test
    rank(G) >= rank(K) + rank(H - v) - 1.

    Raises:
        GraphStructureError: H and K share vertices
    """
    u = K.vertices[0] if u is None else u
    G = coalesce(H, K, v, u)
    lhs = elimination_rank(G)
    rhs = elimination_rank(K) + elimination_rank(delete_vertex(H, v)) - 1
    return InequalityCheck(lhs >= rhs, lhs, rhs, G)


def bridge_bound_check(H: GainGraph, K: GainGraph, t: int, u: Optional[int] = None, w: Optional[int] = None,
                       path_gains: Optional[Sequence[Quaternion]] = None) -> InequalityCheck:
    """
    Join u in H to w in K by a path on t vertices and test
    rank(G) >= rank(H) + rank(K) + t - 3.
    """
    u = H.vertices[0] if u is None else u
    w = K.vertices[0] if w is None else w
    G = join_by_path(H, K, u, w, t, path_gains)
    lhs = elimination_rank(G)
    rhs = elimination_rank(H) + elimination_rank(K) + t - 3
    return InequalityCheck(lhs >= rhs, lhs, rhs, G)


def vertex_deletion_holds(G: GainGraph, v: int, rank: Optional[int] = None) -> bool:
    """rank(G) - 2 <= rank(G - v) <= rank(G)."""
    rank = elimination_rank(G) if rank is None else rank
    rest = elimination_rank(delete_vertex(G, v))
    return rank - 2 <= rest <= rank


def edge_deletion_holds(G: GainGraph, u: int, v: int, rank: Optional[int] = None) -> bool:
    """rank(G) >= rank(G - e) - 2."""
    rank = elimination_rank(G) if rank is None else rank
    return rank >= elimination_rank(delete_edge(G, u, v)) - 2
