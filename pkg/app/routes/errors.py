from fastapi import HTTPException

from ..core.config import get_settings
from ..core.errors import (
    BudgetExceededError,
    NotMinimalRepresentativeError,
    RichardsonError,
)


def check_rank_budget(n: int) -> None:
    """The closed forms enumerate index tuples; past max_rank a request would pin a worker."""
    limit = get_settings().max_rank
    if n > limit:
        raise BudgetExceededError(f"rank {n} exceeds the service limit {limit}")


def to_http(exc: RichardsonError) -> HTTPException:
    if isinstance(exc, NotMinimalRepresentativeError):
        detail = {"error": str(exc)}
        if exc.suggestion is not None:
            detail["suggestion"] = str(exc.suggestion)
        return HTTPException(status_code=409, detail=detail)
    if isinstance(exc, BudgetExceededError):
        return HTTPException(status_code=413, detail=str(exc))
    return HTTPException(status_code=422, detail=str(exc))
