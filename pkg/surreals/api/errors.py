from fastapi import HTTPException

from surreals.sign_engine.errors import NotationError, SurrealError


def http_error(exc: SurrealError) -> HTTPException:
    """Malformed notation is a bad request; every other domain error is unprocessable."""
    status_code = 400 if isinstance(exc, NotationError) else 422
    return HTTPException(status_code=status_code, detail={"rule": exc.rule, "message": str(exc)})
