"""
models.py

Pydantic models shared by the counting paths and the CLI.

- GridShape  : an m x n grid, m, n >= 1
- CrossCheck : outcome of comparing one quantity across two computation paths
               (or of one report invariant)
- CountReport: P, H, V, R, S, W, C for one shape, with per-quantity provenance
"""

from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

QUANTITIES = ("P", "H", "V", "R", "S", "W", "C")


class GridShape(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="number of rows")
    n: int = Field(..., ge=1, description="number of columns")

    @property
    def cells(self) -> int:
        return self.m * self.n

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    def transpose(self) -> "GridShape":
        return GridShape(m=self.n, n=self.m)

    def __str__(self) -> str:
        return f"{self.m}x{self.n}"


def shape(m: int, n: int) -> GridShape:
    return GridShape(m=m, n=n)


class CrossCheck(BaseModel):
    name: str
    passed: bool
    quantity: Optional[str] = None
    method: Optional[str] = None
    expected: Optional[int] = None
    observed: Optional[int] = None
    detail: str = ""


class CountReport(BaseModel):
    shape: GridShape
    p: Optional[int] = None
    h: Optional[int] = None
    v: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    w: Optional[int] = None
    c: Optional[int] = None
    methods: Dict[str, str] = Field(default_factory=dict)
    consistency: List[CrossCheck] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    def value(self, quantity: str) -> Optional[int]:
        return getattr(self, quantity.lower())

    def values(self) -> Dict[str, int]:
        """Present quantities in P, H, V, R, S, W, C order."""
        return {q: self.value(q) for q in QUANTITIES if self.value(q) is not None}

    @property
    def failed_checks(self) -> List[CrossCheck]:
        return [check for check in self.consistency if not check.passed]

    def confirmed_by(self, quantity: Optional[str] = None) -> List[str]:
        """Independent methods whose cross-checks passed (for one quantity or all)."""
        methods = {
            check.method
            for check in self.consistency
            if check.passed and check.method and (quantity is None or check.quantity == quantity)
        }
        return sorted(methods)


def shapes_up_to(max_cells: int, *, rectangular: bool = False) -> List[GridShape]:
    """All m x n with m * n <= max_cells, sorted by (m * n, m, n)."""
    found = [
        GridShape(m=m, n=n)
        for m in range(1, max_cells + 1)
        for n in range(1, max_cells // m + 1)
        if not (rectangular and m == n)
    ]
    return sorted(found, key=lambda s: (s.cells, s.m, s.n))
