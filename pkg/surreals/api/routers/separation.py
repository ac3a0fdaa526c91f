import logging

from fastapi import APIRouter

from surreals.api.errors import http_error
from surreals.api.schemas import (
    CheckRequest,
    CheckResponse,
    SeparateMethod,
    SeparateRequest,
    SeparateResponse,
    SurrealPair,
    SurrealResponse,
)
from surreals.sign_engine.errors import SurrealError
from surreals.sign_engine.separation import (
    endpoint_separator,
    prolonged_separator,
    sep,
    shortest_separator,
    shortest_separator_via_sep,
)
from surreals.sign_engine.sets import all_greater_than, all_less_than, set_parse
from surreals.sign_engine.sign_seq import seq_parse

logger = logging.getLogger(__name__)

router = APIRouter()


@router.post("/sep", response_model=SurrealResponse)
async def ordered_separator(pair: SurrealPair):
    try:
        return SurrealResponse(value=str(sep(seq_parse(pair.a), seq_parse(pair.b))))
    except SurrealError as e:
        raise http_error(e)


@router.post("/separate", response_model=SeparateResponse)
async def separate_sets(request: SeparateRequest):
    """
    A separator of left < right. `sep` and `hat` both give the shortest
    one; `endpoint` the longer of sup*/inf* (with the side it came from);
    `prolong` sup* of the left set extended with minuses.
    """
    try:
        S, T = set_parse(request.left), set_parse(request.right)
        if request.method is SeparateMethod.ENDPOINT:
            found = endpoint_separator(S, T)
            return SeparateResponse(value=str(found.value), method=request.method, side=found.choice)
        if request.method is SeparateMethod.HAT:
            value = shortest_separator(S, T)
        elif request.method is SeparateMethod.PROLONG:
            value = prolonged_separator(S, T)
        else:
            value = shortest_separator_via_sep(S, T)
    except SurrealError as e:
        logger.info("separate rejected: %s", e)
        raise http_error(e)
    return SeparateResponse(value=str(value), method=request.method)


@router.post("/check", response_model=CheckResponse)
async def check_separator(request: CheckRequest):
    try:
        w = seq_parse(request.value)
        lower_ok = all_less_than(set_parse(request.left), w)
        upper_ok = all_greater_than(set_parse(request.right), w)
    except SurrealError as e:
        raise http_error(e)
    return CheckResponse(separates=lower_ok and upper_ok, lower_ok=lower_ok, upper_ok=upper_ok)
