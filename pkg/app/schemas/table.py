"""
Pydantic schemas for count tables over an (m, n) grid
"""
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from app.schemas.common import PositiveInt
from app.schemas.homomorphism import ParityCase

CSV_COLUMNS = ["m", "n", "case", "count"]
CSV_ORACLE_COLUMNS = ["oracle", "agree"]


class TableRow(BaseModel):
    m: PositiveInt
    n: PositiveInt
    case: ParityCase
    count: int
    oracle: Optional[int] = None
    agree: Optional[bool] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_agreement(self) -> "TableRow":
        if self.oracle is None:
            if self.agree is not None:
                raise ValueError("agree is only set alongside an oracle count")
        elif self.agree != (self.count == self.oracle):
            raise ValueError(f"agree must be {self.count == self.oracle} for ({self.m}, {self.n})")
        return self

    def csv_fields(self, with_oracle: bool) -> List[str]:
        fields = [str(self.m), str(self.n), self.case.value, str(self.count)]
        if with_oracle:
            fields += [str(self.oracle), "true" if self.agree else "false"]
        return fields


class TableGrid(BaseModel):
    max_m: PositiveInt
    max_n: PositiveInt


class TableDocument(BaseModel):
    """Top-level JSON object for an emitted table"""
    rows: List[TableRow]
    grid: TableGrid
    schema_version: Literal[1] = 1
