from fastapi import APIRouter

from surreals.api.errors import http_error
from surreals.api.schemas import (
    BoundResponse,
    CompareResponse,
    RestrictRequest,
    SetRequest,
    SetResponse,
    SurrealPair,
    SurrealRequest,
    SurrealResponse,
)
from surreals.sign_engine.errors import SurrealError
from surreals.sign_engine.ordinal import ord_parse
from surreals.sign_engine.separation import characterizing_set
from surreals.sign_engine.sets import (
    ExtremumKind,
    inf_star,
    set_format,
    set_max,
    set_min,
    set_parse,
    sup_star,
    witness_set,
)
from surreals.sign_engine.sign_seq import compare, restrict, seq_parse

router = APIRouter()


def _bound(value, extremum_kind: ExtremumKind) -> BoundResponse:
    return BoundResponse(value=str(value) if value is not None else None, branch=extremum_kind)


@router.post("/compare", response_model=CompareResponse)
async def compare_surreals(pair: SurrealPair):
    try:
        return CompareResponse(order=compare(seq_parse(pair.a), seq_parse(pair.b)))
    except SurrealError as e:
        raise http_error(e)


@router.post("/restrict", response_model=SurrealResponse)
async def restrict_surreal(request: RestrictRequest):
    """The gamma-initial segment of a."""
    try:
        return SurrealResponse(value=str(restrict(seq_parse(request.a), ord_parse(request.gamma))))
    except SurrealError as e:
        raise http_error(e)


@router.post("/sup", response_model=BoundResponse)
async def sup_of_set(request: SetRequest):
    """sup* of the set; `branch` tells which construction produced it."""
    try:
        S = set_parse(request.items)
        return _bound(sup_star(S), set_max(S).kind)
    except SurrealError as e:
        raise http_error(e)


@router.post("/inf", response_model=BoundResponse)
async def inf_of_set(request: SetRequest):
    try:
        T = set_parse(request.items)
        return _bound(inf_star(T), set_min(T).kind)
    except SurrealError as e:
        raise http_error(e)


@router.post("/max", response_model=BoundResponse)
async def max_of_set(request: SetRequest):
    try:
        extremum = set_max(set_parse(request.items))
        return _bound(extremum.value, extremum.kind)
    except SurrealError as e:
        raise http_error(e)


@router.post("/min", response_model=BoundResponse)
async def min_of_set(request: SetRequest):
    try:
        extremum = set_min(set_parse(request.items))
        return _bound(extremum.value, extremum.kind)
    except SurrealError as e:
        raise http_error(e)


@router.post("/witness", response_model=SetResponse)
async def witness(request: SurrealRequest):
    """A set whose sup* is the given value."""
    try:
        return SetResponse(items=set_format(witness_set(seq_parse(request.value))))
    except SurrealError as e:
        raise http_error(e)


@router.post("/characterize", response_model=SetResponse)
async def characterize(request: SurrealRequest):
    try:
        return SetResponse(items=set_format(characterizing_set(seq_parse(request.value))))
    except SurrealError as e:
        raise http_error(e)
