"""
Pydantic schemas for homomorphisms D_m -> D_n and their counts
"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from app.models.dihedral import DihedralElement, render_element, satisfies_presentation
from app.schemas.common import PositiveInt


class ParityCase(str, Enum):
    """Parity of m, then of n"""
    ODD_ODD = "OddOdd"
    ODD_EVEN = "OddEven"
    EVEN_EVEN = "EvenEven"
    EVEN_ODD = "EvenOdd"


class HomBranch(str, Enum):
    """Where a homomorphism falls in the case analysis of the counting proofs"""
    TRIVIAL = "trivial"
    ROTATION_REFLECTION = "rotation_reflection"
    HALF_TURN = "half_turn"
    REFLECTION_IMAGE = "reflection_image"


class Homomorphism(BaseModel):
    """A homomorphism D_m -> D_n given by the images of r_m and f_m"""
    m: PositiveInt
    n: PositiveInt
    img_r: DihedralElement
    img_f: DihedralElement

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def check_relations(self) -> "Homomorphism":
        if self.img_r.n != self.n or self.img_f.n != self.n:
            raise ValueError(f"generator images must lie in D_{self.n}")
        if not satisfies_presentation(self.m, self.img_r, self.img_f):
            raise ValueError(
                f"r -> {render_element(self.img_r)}, f -> {render_element(self.img_f)} "
                f"does not respect the relations of D_{self.m}"
            )
        return self

    @field_serializer("img_r", "img_f")
    def serialize_element(self, element: DihedralElement) -> str:
        return render_element(element)

    def sort_key(self) -> tuple:
        return self.img_r.sort_key() + self.img_f.sort_key()

    def pair(self) -> tuple:
        return (self.img_r, self.img_f)

    def describe(self) -> str:
        return f"r ↦ {render_element(self.img_r)}, f ↦ {render_element(self.img_f)}"


class Corollary(BaseModel):
    """A succinct closed form that applies to special (m, n)"""
    name: str
    value: int


class HomCount(BaseModel):
    """The number of homomorphisms D_m -> D_n and the case that produced it"""
    m: PositiveInt
    n: PositiveInt
    case: ParityCase
    count: int = Field(..., ge=1)
    divisor_sum: Optional[int] = None
    formula: Optional[str] = None
    corollary: Optional[Corollary] = None

    model_config = ConfigDict(frozen=True)
