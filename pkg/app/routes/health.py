from fastapi import APIRouter

from ..core.config import get_settings
from ..schemas.common import LieKind
from ..services.rootsys import MIN_RANK


health_router = APIRouter(tags=["health"])


@health_router.get("/healthz")
def healthcheck() -> dict:
    settings = get_settings()
    return {
        "status": "ok",
        "environment": settings.environment,
        "types": {kind.value: MIN_RANK[kind] for kind in LieKind},
    }
