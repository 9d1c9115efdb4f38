"""
Graph file format.

    {"vertices": [ids...], "edges": [{"u": id, "v": id, "gain": "a/b,c/d,e/f,g/h"}, ...]}

The gain is stated for the orientation u -> v. Files are validated for
simplicity and unit gains; every failure becomes a GraphFileError that
names the file, the JSON location and, when known, the line.
"""
import hashlib
import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np
from pydantic import ValidationError

from ..config import Config
from ..models.graph_document import GraphDocument
from ..services.gaingraph import GainGraph
from ..services.quaternion import format_token, parse_float_token, parse_token
from .exceptions import (
    GraphFileError,
    GraphStructureError,
    NonUnitGainError,
    QuaternionParseError,
)

PathLike = Union[str, Path]

_GAIN_KEY = re.compile(r'"gain"\s*:')


def _edge_line(raw: Optional[str], index: int) -> Optional[int]:
    """Line of the index-th "gain" key in the raw text."""
    if raw is None:
        return None
    for i, match in enumerate(_GAIN_KEY.finditer(raw)):
        if i == index:
            return raw.count("\n", 0, match.start()) + 1
    return None


def _load_document(data: Any, source: str, raw: Optional[str]) -> GraphDocument:
    try:
        return GraphDocument.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        line = None
        if len(first["loc"]) >= 2 and first["loc"][0] == "edges" and isinstance(first["loc"][1], int):
            line = _edge_line(raw, first["loc"][1])
        raise GraphFileError(source, first["msg"], location=location, line=line)


def graph_from_document(data: Any, source: str = "<document>", raw: Optional[str] = None) -> GainGraph:
    """
    Build an exact GainGraph from a parsed graph document.

    Raises:
        GraphFileError: schema violation, malformed gain token, non-unit gain,
            loop, repeated edge or unknown endpoint
    """
    doc = _load_document(data, source, raw)
    if len(set(doc.vertices)) != len(doc.vertices):
        raise GraphFileError(source, "duplicate vertex id", location="vertices")
    known = set(doc.vertices)
    gains: Dict[Tuple[int, int], Any] = {}
    for index, edge in enumerate(doc.edges):
        location = f"edges.{index}"
        line = _edge_line(raw, index)
        if edge.u == edge.v:
            raise GraphFileError(source, f"loop at vertex {edge.u}", location=location, line=line)
        if edge.u not in known or edge.v not in known:
            raise GraphFileError(source, f"edge ({edge.u}, {edge.v}) uses an unknown vertex", location=location, line=line)
        key = (min(edge.u, edge.v), max(edge.u, edge.v))
        if key in gains:
            raise GraphFileError(source, f"repeated edge {key}", location=location, line=line)
        try:
            g = parse_token(edge.gain)
        except QuaternionParseError as exc:
            raise GraphFileError(source, str(exc), location=f"{location}.gain", line=line)
        if not g.is_unit():
            raise GraphFileError(source, f"gain {edge.gain} is not a unit quaternion", location=f"{location}.gain", line=line)
        gains[key] = g if key == (edge.u, edge.v) else g.conj()
    try:
        return GainGraph(doc.vertices, gains)
    except (GraphStructureError, NonUnitGainError) as exc:
        raise GraphFileError(source, str(exc))


def _read_json(path: PathLike) -> Tuple[Any, str]:
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFileError(path, f"cannot read file: {exc.strerror or exc}")
    try:
        return json.loads(raw), raw
    except json.JSONDecodeError as exc:
        raise GraphFileError(path, f"invalid JSON: {exc.msg} (column {exc.colno})", line=exc.lineno)


def load_graph(path: PathLike) -> GainGraph:
    data, raw = _read_json(path)
    G = graph_from_document(data, str(path), raw)
    logging.info(f"Loaded graph from {path}: n={G.n}, m={G.m}")
    return G


def load_metadata(path: PathLike) -> Optional[Dict[str, Any]]:
    data, raw = _read_json(path)
    return _load_document(data, str(path), raw).metadata


def load_float_adjacency(path: PathLike, unit_tol: Optional[float] = None) -> Tuple[Tuple[int, ...], np.ndarray]:
    """
    Load a graph whose gain components may be decimals, for float-mode rank.

    Returns:
        (sorted vertex ids, float adjacency array of shape (n, n, 4))

    Raises:
        GraphFileError: as for `load_graph`, with the unit test relaxed to unit_tol
    """
    unit_tol = Config.UNIT_TOL if unit_tol is None else unit_tol
    data, raw = _read_json(path)
    source = str(path)
    doc = _load_document(data, source, raw)
    if len(set(doc.vertices)) != len(doc.vertices):
        raise GraphFileError(source, "duplicate vertex id", location="vertices")
    vertices = tuple(sorted(doc.vertices))
    index = {v: i for i, v in enumerate(vertices)}
    A = np.zeros((len(vertices), len(vertices), 4))
    conj = np.array([1.0, -1.0, -1.0, -1.0])
    for i, edge in enumerate(doc.edges):
        location = f"edges.{i}"
        line = _edge_line(raw, i)
        if edge.u == edge.v or edge.u not in index or edge.v not in index:
            raise GraphFileError(source, f"invalid edge ({edge.u}, {edge.v})", location=location, line=line)
        a, b = index[edge.u], index[edge.v]
        if A[a, b].any():
            raise GraphFileError(source, f"repeated edge ({edge.u}, {edge.v})", location=location, line=line)
        try:
            g = parse_float_token(edge.gain)
        except QuaternionParseError as exc:
            raise GraphFileError(source, str(exc), location=f"{location}.gain", line=line)
        if abs(float(np.dot(g, g)) - 1.0) > unit_tol:
            raise GraphFileError(source, f"gain {edge.gain} is not unit within {unit_tol}", location=f"{location}.gain", line=line)
        A[a, b] = g
        A[b, a] = g * conj
    return vertices, A


def graph_to_document(G: GainGraph, metadata: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "vertices": list(G.vertices),
        "edges": [{"u": u, "v": v, "gain": format_token(g)} for (u, v), g in G.oriented_gains().items()],
    }
    if metadata is not None:
        doc["metadata"] = metadata
    return doc


def save_graph(G: GainGraph, path: PathLike, metadata: Optional[Dict[str, Any]] = None) -> None:
    path = Path(path)
    path.write_text(json.dumps(graph_to_document(G, metadata), indent=2) + "\n", encoding="utf-8")
    logging.info(f"Wrote graph to {path}: n={G.n}, m={G.m}")


def canonical_serialization(G: GainGraph) -> str:
    """Sorted ids, sorted edges, canonical gain tokens; no whitespace."""
    payload = {
        "vertices": list(G.vertices),
        "edges": [[u, v, format_token(g)] for (u, v), g in G.oriented_gains().items()],
    }
    return json.dumps(payload, separators=(",", ":"))


def graph_digest(G: GainGraph, algorithm: Optional[str] = None) -> str:
    h = hashlib.new(algorithm or Config.DIGEST_ALGORITHM)
    h.update(canonical_serialization(G).encode("utf-8"))
    return h.hexdigest()
