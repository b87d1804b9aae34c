"""Pydantic models for problem files, results and the service wire format.

All numeric payloads are decimal strings, never binary floats, so values
survive the JSON boundary at full working precision.  Unknown fields are
rejected everywhere (strict transport).
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

Family = Literal["algebraic", "trigonometric", "exponential"]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class HarmonicCoefficients(_Strict):
    """Coefficients for the trigonometric/exponential families."""

    a0: str
    a: list[str]
    b: list[str]


class FactoredForm(_Strict):
    """Product form: known roots with multiplicities and an optional scale."""

    roots: list[str]
    multiplicities: list[int]
    scale: Optional[str] = None


class Representation(_Strict):
    """Exactly one of a coefficient form or a factored form."""

    coefficients: Optional[Union[list[str], HarmonicCoefficients]] = None
    factored: Optional[FactoredForm] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.coefficients is None) == (self.factored is None):
            raise ValueError("representation needs exactly one of 'coefficients' or 'factored'")
        return self


class ProblemFile(_Strict):
    """A solvable problem: polynomial, multiplicities, initial approximations."""

    family: Family
    representation: Representation
    multiplicities: Optional[list[int]] = None
    initial: list[str]
    precision_digits: int = 30
    tolerance: str = "1e-20"
    max_iterations: int = Field(default=50, ge=1)


class TableRow(_Strict):
    k: int
    values: list[str]


class InequalityRowModel(_Strict):
    label: str
    lhs: str
    rhs: str
    passed: bool


class TheoremReportModel(_Strict):
    theorem: str
    applicable: bool
    satisfied: bool
    d: Optional[str]
    derived_constants: dict[str, str]
    initial_ball_radius: str
    rows: list[InequalityRowModel]
    notes: list[str]


class ResultFile(_Strict):
    """Solve outcome; table row 0 echoes the input initial vector verbatim."""

    status: str
    roots: list[str]
    iterations_used: int
    order_estimate: Optional[str] = None
    table: list[TableRow]
    theorem_reports: Optional[list[TheoremReportModel]] = None


class SolveRequest(_Strict):
    problem: ProblemFile
    digits: int = 18


class CheckRequest(_Strict):
    problem: ProblemFile
    theorem: Literal["1", "2", "3", "auto"] = "auto"
    c: Optional[str] = None
    q: Optional[str] = None
    xi: Optional[str] = None
    search: bool = False


class FoundConstants(_Strict):
    c: str
    q: str
    xi: Optional[str] = None


class CheckResponse(_Strict):
    report: Optional[TheoremReportModel] = None
    search_performed: bool = False
    found: Optional[FoundConstants] = None
    satisfied: bool = False


class ExpandRequest(_Strict):
    problem: ProblemFile


class ExpandResponse(_Strict):
    family: Family
    coefficients: Union[list[str], HarmonicCoefficients]


class OrderRequest(_Strict):
    problem: ProblemFile


class OrderResponse(_Strict):
    status: str
    iterations_used: int
    order_estimate: Optional[str] = None
    detail: Optional[str] = None
