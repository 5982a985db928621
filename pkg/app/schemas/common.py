"""
Shared annotated types
"""
from typing import Annotated

from pydantic import Field

# Strict so that booleans, floats and numeric strings never pass as group indices
PositiveInt = Annotated[int, Field(strict=True, ge=1)]
