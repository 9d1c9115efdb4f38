from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class EdgeRecord(BaseModel):
    u: int = Field(..., description="Tail vertex id")
    v: int = Field(..., description="Head vertex id")
    gain: str = Field(..., description="Gain on the orientation u -> v as 'a/b,c/d,e/f,g/h'")


class GraphDocument(BaseModel):
    vertices: List[int] = Field(..., description="Vertex ids")
    edges: List[EdgeRecord] = Field(default_factory=list, description="Edges with their oriented gains")
    metadata: Optional[Dict[str, Any]] = Field(None, description="Free-form sidecar data (family, parameters, expectations)")
