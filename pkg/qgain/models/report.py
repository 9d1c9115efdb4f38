from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from ..config import Config
from ..services.random_graphs import cell_is_feasible

Cell = Tuple[int, int, int]


class RunConfig(BaseModel):
    seed: int = Field(..., ge=0, lt=2 ** 64, description="Seed of the run; embedded in the report for replay")
    samples: int = Field(Config.DEFAULT_SAMPLES, ge=1, description="Number of random samples")
    max_n: int = Field(Config.DEFAULT_MAX_N, ge=2, description="Largest vertex count drawn")
    max_c: int = Field(Config.DEFAULT_MAX_C, ge=0, description="Largest cyclomatic number drawn")
    gain_mode: Literal["cayley", "lipschitz"] = Field("cayley", description="Distribution of the unit gains")
    cells: Optional[List[Cell]] = Field(None, description="(n, c, p) targets visited in turn; random cells when omitted")
    float_tol: float = Field(Config.FLOAT_PIVOT_TOL, gt=0, description="Pivot tolerance for float-mode checks")
    workers: int = Field(Config.DEFAULT_WORKERS, ge=1, description="Worker processes; results do not depend on it")

    @field_validator("cells")
    @classmethod
    def cells_must_be_feasible(cls, cells: Optional[List[Cell]]) -> Optional[List[Cell]]:
        if cells is None:
            return cells
        if not cells:
            raise ValueError("cells must not be empty")
        for n, c, p in cells:
            if not cell_is_feasible(n, c, p):
                raise ValueError(f"no connected simple graph has (n, c, p) = ({n}, {c}, {p})")
        return cells


class GraphRecord(BaseModel):
    index: int = Field(..., description="Position in the run")
    label: str = Field(..., description="What the graph is: a cell target or a family instance")
    digest: str = Field(..., description="Hash of the canonical serialization")
    n: int
    m: int
    c: int
    p: int
    relaxed: bool = Field(False, description="The sampler could not hit the requested pendant count")
    elimination_rank: int
    adjoint_rank: Optional[int] = Field(None, description="Complex-adjoint oracle rank (bounds runs only)")
    column_rank: Optional[int] = Field(None, description="Column right rank (bounds runs only)")
    structural: Dict[str, Any] = Field(..., description="Structural rank: exact value or interval")
    bound_case: Optional[str] = None
    bound: Optional[int] = None
    tight: Optional[bool] = None
    cycle_types: List[str] = Field(default_factory=list)
    verdicts: List[Dict[str, Any]] = Field(default_factory=list)
    violations: List[str] = Field(default_factory=list)


class CheckRecord(BaseModel):
    """A named fixed-value check: a worked example, a preset or a family property."""
    name: str
    expected: Any
    actual: Any
    passed: bool


class ReportSummary(BaseModel):
    records: int
    checks: int
    cells: Dict[str, int] = Field(default_factory=dict, description="Record count per 'n,c,p' cell")
    relaxed: int = 0
    violations: int
    zero_violations: bool
    wall_time: float = Field(..., description="Seconds; excluded from determinism comparisons")


class VerificationReport(BaseModel):
    kind: Literal["verify-bounds", "verify-extremal"]
    config: RunConfig
    records: List[GraphRecord]
    checks: List[CheckRecord] = Field(default_factory=list)
    summary: ReportSummary

    def deterministic_dump(self) -> Dict[str, Any]:
        """Everything except the wall time."""
        data = self.model_dump(mode="json")
        data["summary"].pop("wall_time")
        return data
