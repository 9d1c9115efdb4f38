from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from ..services.rank_engine import CycleType


class InfinitySpec(BaseModel):
    p: int = Field(..., ge=3, description="Length of the first cycle")
    l: int = Field(..., ge=1, description="Vertices on the joining path, both ends included; 1 means the cycles share a vertex")
    q: int = Field(..., ge=3, description="Length of the second cycle")
    cycle_types: Tuple[CycleType, CycleType] = Field(
        (CycleType.TYPE1, CycleType.TYPE1), description="Types forced on the two cycles"
    )


class ThetaSpec(BaseModel):
    p: int = Field(..., ge=0, description="Inner vertices of the first path")
    l: int = Field(..., ge=0, description="Inner vertices of the second path")
    q: int = Field(..., ge=0, description="Inner vertices of the third path")
    cycle_types: Tuple[CycleType, CycleType] = Field(
        (CycleType.TYPE1, CycleType.TYPE1),
        description="Types forced on the cycles through paths (p, l) and (p, q); the third follows",
    )


class Attachment(BaseModel):
    vertex: int = Field(..., description="Tree vertex that becomes the cycle's attachment vertex")
    length: int = Field(..., ge=3, description="Cycle length")
    cycle_type: CycleType = Field(CycleType.TYPE1, description="Type forced on the cycle")
    gains: Optional[List[str]] = Field(
        None, description="Explicit gain tokens around the cycle, starting at the attachment vertex"
    )


class FlowerSpec(BaseModel):
    tree_edges: List[Tuple[int, int]] = Field(..., description="Edges of the underlying tree")
    attachments: List[Attachment] = Field(default_factory=list, description="Cycles glued onto tree vertices")
    require_leaves: bool = Field(True, description="Reject attachments at non-leaf vertices")


class CycleSpec(BaseModel):
    n: int = Field(..., ge=3, description="Cycle length")
    cycle_type: CycleType = Field(CycleType.TYPE1, description="Type forced on the cycle")


class SpiderSpec(BaseModel):
    legs: List[int] = Field(..., min_length=1, description="Edges on each leg")
    strict: bool = Field(True, description="Require at least 3 legs, all odd")
