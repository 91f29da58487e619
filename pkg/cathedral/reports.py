"""
Report models shared by the checkers and the verification harness.
"""

from typing import Any, List, Optional

from pydantic import BaseModel, Field


class Violation(BaseModel):
    """One failed property, with a witness that reproduces it."""

    property: str
    detail: str
    witness: Optional[Any] = None


class CheckReport(BaseModel):
    """Outcome of a property checker run on one instance."""

    name: str
    passed: bool = True
    violations: List[Violation] = Field(default_factory=list)

    def fail(self, prop: str, detail: str, witness: Optional[Any] = None) -> None:
        self.passed = False
        self.violations.append(Violation(property=prop, detail=detail, witness=witness))

    def check(self, condition: bool, prop: str, detail: str, witness: Optional[Any] = None) -> bool:
        if not condition:
            self.fail(prop, detail, witness)
        return condition

    def absorb(self, other: "CheckReport") -> None:
        for v in other.violations:
            self.fail(v.property, v.detail, v.witness)
