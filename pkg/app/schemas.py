from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict


class GroupSchema(BaseModel):
    name: str
    order: int
    elements: List[str]
    table: List[List[int]]

    model_config = ConfigDict(from_attributes=True)


class LeftBracoidSchema(BaseModel):
    G: GroupSchema
    N: GroupSchema
    left_action: List[List[int]]


class RightBracoidSchema(BaseModel):
    H: GroupSchema
    N: GroupSchema
    right_action: List[List[int]]


class TwoSidedBracoidSchema(BaseModel):
    G: GroupSchema
    H: GroupSchema
    N: GroupSchema
    left_action: List[List[int]]
    right_action: List[List[int]]


class BraceSchema(BaseModel):
    star_group: GroupSchema
    dot_group: GroupSchema


class CheckReport(BaseModel):
    property: str
    status: Literal["pass", "fail", "not_applicable"]
    witness: Optional[List[str]] = None

    model_config = ConfigDict(from_attributes=True)


class TheoremVerdict(BaseModel):
    theorem: str
    hypotheses: Dict[str, bool]
    conclusion: Optional[bool] = None
    witness: Optional[List[str]] = None
    flag: Literal["ok", "counterexample_to_theorem", "not_applicable"]

    model_config = ConfigDict(from_attributes=True)


class EnumerationResultSchema(BaseModel):
    kind: str
    raw_count: int
    iso_class_count: Optional[int] = None
    equivalence: Optional[str] = None  # library-defined; no published notion of bracoid isomorphism
    structures: Optional[List[dict]] = None
