import logging
import secrets

from fastapi import Depends, HTTPException, Request
from fastapi.security import APIKeyHeader

from .config import get_settings


logger = logging.getLogger(__name__)

api_key_header = APIKeyHeader(name="X-API-Key", auto_error=False)


def require_api_key(request: Request, supplied: str | None = Depends(api_key_header)) -> None:
    """Open when RICH_SS_API_KEY is unset; otherwise X-API-Key must match it."""
    expected = get_settings().api_key
    if not expected:
        return
    if supplied is None or not secrets.compare_digest(supplied.encode(), expected.encode()):
        logger.warning("auth.rejected: %s %s", request.method, request.url.path)
        raise HTTPException(status_code=401, detail="Invalid API key")
