"""
Maximum matchings on forests.
"""
from typing import Dict, Set

from ..utils.exceptions import GraphStructureError
from .gaingraph import GainGraph, delete_vertex, stats


def _require_forest(T: GainGraph, operation: str) -> None:
    if stats(T).c != 0:
        raise GraphStructureError(f"{operation} requires a forest")


def matching_number(T: GainGraph) -> int:
    """
    Size of a maximum matching of a forest.

    Greedy leaf stripping: match a leaf with its neighbour and remove both.
    Exact on forests.

    Raises:
        GraphStructureError: T contains a cycle
    """
    _require_forest(T, "matching_number")
    nbrs: Dict[int, Set[int]] = {v: set(T.neighbors(v)) for v in T.vertices}
    leaves = [v for v, ns in nbrs.items() if len(ns) == 1]
    size = 0
    while leaves:
        leaf = leaves.pop()
        if leaf not in nbrs or len(nbrs[leaf]) != 1:
            continue
        (partner,) = nbrs[leaf]
        size += 1
        for v in (leaf, partner):
            for w in nbrs.pop(v):
                if w in nbrs:
                    nbrs[w].discard(v)
                    if len(nbrs[w]) == 1:
                        leaves.append(w)
    return size


def is_covered_vertex(T: GainGraph, v: int) -> bool:
    """True when v lies in every maximum matching of the forest T."""
    return matching_number(delete_vertex(T, v)) < matching_number(T)


def tree_rank(T: GainGraph) -> int:
    """Rank of a gain forest: twice its matching number."""
    return 2 * matching_number(T)
