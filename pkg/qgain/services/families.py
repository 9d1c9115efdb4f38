"""
Constructors for the named graph families and the worked examples.

Gains are placed in switch-canonical form: every edge has gain 1 except one
closing edge per cycle, which is chosen so that the cycle gain hits the
target of the requested cycle type. `randomize_switching` hides that form
without changing the rank.
"""
import math
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..models.family_specs import Attachment, FlowerSpec, InfinitySpec, ThetaSpec
from ..utils.exceptions import FamilySpecError, GraphStructureError
from .gaingraph import GainGraph, adjacency_matrix, coalesce, join_by_path, stats, switch
from .matching import is_covered_vertex, matching_number, tree_rank
from .qmatrix import QMatrix
from .quaternion import I, J, K, ONE, GainSampler, Quaternion, parse_token, product
from .rank_engine import CycleType, cycle_type_of

__all__ = [
    "make_cycle", "make_type1_cycle", "make_infinity", "make_theta", "make_flower",
    "make_spider_tree", "randomize_switching", "matching_number", "is_covered_vertex",
    "tree_rank", "example_matrices", "flower_preset", "FLOWER_PRESETS",
]

_TARGET_RETRIES = 32


def type1_target(n: int) -> Quaternion:
    """(-1)^(n/2)."""
    return ONE if (n // 2) % 2 == 0 else -ONE


def _check_parity(family: str, n: int, cycle_type: CycleType) -> None:
    even_types = (CycleType.TYPE1, CycleType.TYPE2)
    if (n % 2 == 0) != (cycle_type in even_types):
        raise FamilySpecError(family, f"a cycle of length {n} cannot be {cycle_type.value}")


def cycle_target(n: int, cycle_type: CycleType, sample: Optional[GainSampler] = None) -> Quaternion:
    """
    A unit quaternion that gives a length-n cycle the requested type.

    Args:
        sample: gain sampler for a random target; fixed targets are used when None
    """
    _check_parity("cycle", n, cycle_type)
    if cycle_type == CycleType.TYPE1:
        return type1_target(n)
    if cycle_type == CycleType.TYPE4:
        if sample is None:
            return I
        u = sample()
        return u * I * u.conj()
    if sample is not None:
        for _ in range(_TARGET_RETRIES):
            g = sample()
            if cycle_type == CycleType.TYPE2 and g != type1_target(n):
                return g
            if cycle_type == CycleType.TYPE3 and g.re() != 0:
                return g
    return I if cycle_type == CycleType.TYPE2 else ONE


def make_cycle(n: int, cycle_type: CycleType, sample: Optional[GainSampler] = None, start: int = 0,
               gains: Optional[Sequence[Quaternion]] = None) -> GainGraph:
    """
    Cycle start, start+1, ..., start+n-1 of the requested type.

    The first n - 1 gains are drawn from `sample` (1 when None) and the closing
    gain is (g_1 ... g_{n-1})^-1 * target. With explicit `gains`, all n gains
    are used as given and the type is checked.

    Raises:
        FamilySpecError: n < 3, parity mismatch, or explicit gains of the wrong type
    """
    if n < 3:
        raise FamilySpecError("cycle", f"length must be at least 3, got {n}")
    _check_parity("cycle", n, cycle_type)
    if gains is not None:
        gains = list(gains)
        if len(gains) != n:
            raise FamilySpecError("cycle", f"expected {n} gains, got {len(gains)}")
    else:
        free = [sample() if sample else ONE for _ in range(n - 1)]
        target = cycle_target(n, cycle_type, sample)
        gains = free + [product(free).inverse() * target]
    ids = list(range(start, start + n))
    edges = {(ids[i], ids[(i + 1) % n]): gains[i] for i in range(n)}
    G = GainGraph(ids, edges)
    actual = cycle_type_of(G, ids)
    if actual != cycle_type:
        raise FamilySpecError("cycle", f"gains give a {actual.value} cycle, not {cycle_type.value}")
    return G


def make_type1_cycle(n: int, gain_alphabet: Optional[Sequence[Quaternion]] = None,
                     rng: Optional[np.random.Generator] = None, start: int = 0) -> GainGraph:
    """
    Even cycle whose gain is exactly (-1)^(n/2).

    Free gains are drawn from `gain_alphabet` with `rng`; all free gains are 1
    when either is missing.

    Raises:
        FamilySpecError: n odd or below 4
    """
    if n % 2 or n < 4:
        raise FamilySpecError("type1_cycle", f"length must be even and at least 4, got {n}")
    sample = None
    if gain_alphabet is not None and rng is not None:
        alphabet = list(gain_alphabet)
        sample = lambda: alphabet[int(rng.integers(len(alphabet)))]
    return make_cycle(n, CycleType.TYPE1, sample, start=start)


def make_infinity(spec: InfinitySpec, sample: Optional[GainSampler] = None) -> GainGraph:
    """
    Two cycles C_p and C_q joined by a path on l vertices (sharing a vertex when l = 1).

    Vertex 0 lies on C_p and is the end of the joining path; vertex p is its
    other end on C_q.
    """
    t_p, t_q = spec.cycle_types
    _check_parity("infinity", spec.p, t_p)
    _check_parity("infinity", spec.q, t_q)
    C_p = make_cycle(spec.p, t_p, sample)
    C_q = make_cycle(spec.q, t_q, sample, start=spec.p)
    if spec.l == 1:
        return coalesce(C_p, C_q, 0, spec.p)
    path_gains = [sample() if sample else ONE for _ in range(spec.l - 1)]
    return join_by_path(C_p, C_q, 0, spec.p, spec.l, path_gains)


def make_theta(spec: ThetaSpec, sample: Optional[GainSampler] = None) -> GainGraph:
    """
    Ends 0 and 1 joined by three internally disjoint paths with p, l, q inner vertices.

    All gains are 1 except the last edge of the l-path and of the q-path,
    which fix the gains of the cycles through (p, l) and (p, q). With p odd
    and both forced to Type 1, the (l, q) cycle is Type 1 as well.

    Raises:
        FamilySpecError: two of p, l, q are 0, or a type/parity mismatch
    """
    p, l, q = spec.p, spec.l, spec.q
    if [p, l, q].count(0) > 1:
        raise FamilySpecError("theta", "at most one of p, l, q may be 0")
    t_pl, t_pq = spec.cycle_types
    _check_parity("theta", p + l + 2, t_pl)
    _check_parity("theta", p + q + 2, t_pq)
    # Cycle (p, l) reads the l-path backwards, so its closing gain is conjugated.
    s_l = cycle_target(p + l + 2, t_pl, sample).conj()
    s_q = cycle_target(p + q + 2, t_pq, sample).conj()
    vertices = [0, 1]
    gains: Dict[Tuple[int, int], Quaternion] = {}
    next_id = 2
    for inner, last_gain in ((p, ONE), (l, s_l), (q, s_q)):
        chain = [0] + list(range(next_id, next_id + inner)) + [1]
        vertices.extend(chain[1:-1])
        next_id += inner
        for a, b in zip(chain, chain[1:]):
            gains[(a, b)] = ONE
        gains[(chain[-2], 1)] = last_gain
    return GainGraph(vertices, gains)


def make_spider_tree(leg_lengths: Sequence[int], strict: bool = True, sample: Optional[GainSampler] = None) -> GainGraph:
    """
    Centre 0 with disjoint legs of the given lengths (edges per leg).

    Args:
        strict: require at least 3 legs, all of odd length

    Raises:
        FamilySpecError: a leg shorter than 1, or (strict) an even leg or fewer than 3 legs
    """
    legs = list(leg_lengths)
    if any(length < 1 for length in legs):
        raise FamilySpecError("spider", f"legs must have length at least 1, got {legs}")
    if strict:
        if len(legs) < 3:
            raise FamilySpecError("spider", f"need at least 3 legs, got {len(legs)}")
        if any(length % 2 == 0 for length in legs):
            raise FamilySpecError("spider", f"all legs must be odd, got {legs}")
    vertices = [0]
    gains = {}
    next_id = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            vertices.append(next_id)
            gains[(prev, next_id)] = sample() if sample else ONE
            prev = next_id
            next_id += 1
    return GainGraph(vertices, gains)


def _tree_from_edges(edges: Sequence[Tuple[int, int]], sample: Optional[GainSampler]) -> GainGraph:
    if not edges:
        raise FamilySpecError("flower", "the tree needs at least one edge")
    try:
        T = GainGraph.from_edges((u, v, sample() if sample else ONE) for u, v in edges)
    except GraphStructureError as exc:
        raise FamilySpecError("flower", str(exc))
    s = stats(T)
    if s.omega != 1 or s.c != 0:
        raise FamilySpecError("flower", "tree_edges do not form a tree")
    return T


def make_flower(spec: FlowerSpec, sample: Optional[GainSampler] = None) -> GainGraph:
    """
    Glue a cycle onto each attachment vertex of a tree.

    Each attachment vertex becomes the unique vertex of its cycle with degree
    above 2. Cycle vertices get fresh ids after the tree's.

    Raises:
        FamilySpecError: repeated attachment vertex, unknown vertex, or a
            non-leaf attachment when leaves are required
    """
    T = _tree_from_edges(spec.tree_edges, sample)
    seen = set()
    for att in spec.attachments:
        if att.vertex in seen:
            raise FamilySpecError("flower", f"vertex {att.vertex} carries two cycles")
        seen.add(att.vertex)
        if not T.has_vertex(att.vertex):
            raise FamilySpecError("flower", f"vertex {att.vertex} is not in the tree")
        if spec.require_leaves and T.degree(att.vertex) != 1:
            raise FamilySpecError("flower", f"vertex {att.vertex} is not a leaf of the tree")
    G = T
    for att in spec.attachments:
        start = max(G.vertices) + 1
        gains = [parse_token(tok) for tok in att.gains] if att.gains else None
        cycle = make_cycle(att.length, att.cycle_type, sample, start=start, gains=gains)
        G = coalesce(G, cycle, att.vertex, start)
    return G


def flower_tree(spec: FlowerSpec) -> GainGraph:
    """The underlying tree of a flower spec, all gains 1."""
    return _tree_from_edges(spec.tree_edges, None)


def randomize_switching(G: GainGraph, sample: GainSampler) -> GainGraph:
    """Switch G by an independent random unit at every vertex."""
    return switch(G, {v: sample() for v in G.vertices})


# Worked examples

def _spider_edges(legs: Sequence[int]) -> Tuple[List[Tuple[int, int]], List[int]]:
    T = make_spider_tree(legs, strict=False)
    ends = [v for v in T.vertices if T.degree(v) == 1]
    return T.edges(), ends


def _four_cycle_flower(include_fourth: bool, first_gains: Sequence[str], first_type: CycleType) -> FlowerSpec:
    edges, ends = _spider_edges([1, 1, 3, 3])
    # ends: two short-leg leaves, then the two long-leg leaves
    attachments = [
        Attachment(vertex=ends[0], length=4, cycle_type=first_type, gains=list(first_gains)),
        Attachment(vertex=ends[1], length=4, gains=["-1,0,0,0", "0,1,0,0", "0,0,1,0", "0,0,0,1"]),
        Attachment(vertex=ends[2], length=6,
                   gains=["0,1,0,0", "0,0,1,0", "0,0,0,1", "0,0,0,1", "0,0,1,0", "0,1,0,0"]),
    ]
    if include_fourth:
        attachments.append(Attachment(vertex=ends[3], length=6,
                                      gains=["0,-1,0,0", "0,0,1,0", "0,0,0,1", "0,1,0,0", "0,0,1,0", "0,0,0,1"]))
    return FlowerSpec(tree_edges=edges, attachments=attachments)


_TYPE1_FIRST = ["0,1,0,0", "0,0,1,0", "0,-1,0,0", "0,0,1,0"]
_TYPE2_FIRST = ["0,1,0,0", "0,0,1,0", "0,-1,0,0", "0,0,0,1"]

FLOWER_PRESETS: Dict[str, Callable[[], FlowerSpec]] = {
    # Odd spider (1, 1, 3, 3) carrying Type-1 cycles of lengths 4, 4, 6, 6: rank 18.
    "four_cycle": lambda: _four_cycle_flower(True, _TYPE1_FIRST, CycleType.TYPE1),
    # Three Type-1 cycles 4, 4, 6 leaving one leaf free: rank 14.
    "three_cycle": lambda: _four_cycle_flower(False, _TYPE1_FIRST, CycleType.TYPE1),
    # Same shape with the first 4-cycle of Type 2: rank 16.
    "three_cycle_type2": lambda: _four_cycle_flower(False, _TYPE2_FIRST, CycleType.TYPE2),
}


def flower_preset(name: str) -> FlowerSpec:
    try:
        return FLOWER_PRESETS[name]()
    except KeyError:
        raise FamilySpecError("flower", f"unknown preset {name!r}; choose from {sorted(FLOWER_PRESETS)}")


def example_c4() -> GainGraph:
    """Type-1 4-cycle with gains i, j, -i, -j read along 1 -> 2 -> 3 -> 4 and 1 -> 4."""
    return GainGraph([1, 2, 3, 4], {(1, 2): I, (2, 3): J, (3, 4): -I, (1, 4): -J})


def example_bicyclic_lipschitz() -> GainGraph:
    """Seven-vertex leaf-free bicyclic graph with Lipschitz gains; rank 4."""
    return GainGraph(range(1, 8), {
        (1, 2): J, (1, 6): -I, (2, 3): K, (3, 4): K,
        (4, 5): J, (4, 7): -J, (5, 6): I, (6, 7): I,
    })


def example_bicyclic_sqrt2() -> np.ndarray:
    """
    Nine-vertex leaf-free bicyclic graph with gains (1 + k)/sqrt(2) and
    (1 + i)/sqrt(2) on its bridge; rank 6. Float array of shape (9, 9, 4).
    """
    h = 1 / math.sqrt(2)
    gains = {
        (0, 1): (0, 0, 1, 0), (0, 3): (0, 1, 0, 0), (1, 2): (0, 1, 0, 0), (2, 3): (0, 0, 1, 0),
        (3, 4): (h, 0, 0, h), (4, 5): (h, h, 0, 0),
        (5, 6): (0, 1, 0, 0), (5, 8): (-1, 0, 0, 0), (6, 7): (0, 0, 1, 0), (7, 8): (0, 0, 0, 1),
    }
    A = np.zeros((9, 9, 4))
    conj = np.array([1.0, -1.0, -1.0, -1.0])
    for (u, v), g in gains.items():
        A[u, v] = g
        A[v, u] = np.array(g) * conj
    return A


def example_matrices() -> Dict[str, Union[QMatrix, np.ndarray]]:
    return {
        "c4": adjacency_matrix(example_c4()),
        "bicyclic_lipschitz": adjacency_matrix(example_bicyclic_lipschitz()),
        "bicyclic_sqrt2": example_bicyclic_sqrt2(),
    }
