"""
Single-graph endpoints: rank, classify, generate.
"""
import logging
from typing import Any, Dict, Literal, Optional

from fastapi import APIRouter
from pydantic import BaseModel, Field

from ..models.graph_document import GraphDocument
from ..services.harness import classify_graph, describe_graph, generate_instance
from ..utils.graph_io import graph_from_document, graph_to_document
from ..utils.responses import success_response

router = APIRouter()


class GenerateRequest(BaseModel):
    family: Literal["cycle", "infinity", "theta", "flower", "spider"]
    params: Dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = Field(None, ge=0)
    gain_mode: Literal["one", "cayley", "lipschitz"] = "one"


@router.post("/rank")
def rank(body: GraphDocument):
    G = graph_from_document(body.model_dump(), source="request")
    logging.info(f"POST /rank: n={G.n}, m={G.m}")
    return success_response(describe_graph(G))


@router.post("/classify")
def classify(body: GraphDocument):
    G = graph_from_document(body.model_dump(), source="request")
    logging.info(f"POST /classify: n={G.n}, m={G.m}")
    return success_response(classify_graph(G))


@router.post("/generate")
def generate(body: GenerateRequest):
    """Family instance as a graph document, with its parameters and rank as metadata."""
    G, metadata = generate_instance(body.family, body.params, seed=body.seed, gain_mode=body.gain_mode)
    return success_response(graph_to_document(G, metadata))
