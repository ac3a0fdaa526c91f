from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from surreals.sign_engine.ordinal import Order
from surreals.sign_engine.separation import EndpointChoice
from surreals.sign_engine.sets import ExtremumKind

# ============= Single surreals =============

class SurrealPair(BaseModel):
    a: str
    b: str


class RestrictRequest(BaseModel):
    a: str
    gamma: str  # ordinal notation, e.g. "w+1"


class CompareResponse(BaseModel):
    order: Order


class SurrealResponse(BaseModel):
    value: str


class SurrealRequest(BaseModel):
    value: str


# ============= Sets =============

class SetRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    items: str = Field(alias="set")


class SetResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    items: str = Field(alias="set")


class BoundResponse(BaseModel):
    value: Optional[str] = None  # None for an unattained max/min
    branch: ExtremumKind


# ============= Separation =============

class SeparateMethod(str, Enum):
    SEP = "sep"
    HAT = "hat"
    ENDPOINT = "endpoint"
    PROLONG = "prolong"


class SeparateRequest(BaseModel):
    left: str
    right: str
    method: SeparateMethod = SeparateMethod.SEP


class SeparateResponse(BaseModel):
    value: str
    method: SeparateMethod
    side: Optional[EndpointChoice] = None  # endpoint method only


class CheckRequest(BaseModel):
    value: str
    left: str
    right: str


class CheckResponse(BaseModel):
    separates: bool
    lower_ok: bool
    upper_ok: bool
