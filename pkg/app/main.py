from fastapi import FastAPI

from .core.config import get_settings
from .core.logging_config import configure_logging
from .routes.check import check_router
from .routes.classify import classify_router
from .routes.health import health_router
from .routes.tables import tables_router


def create_app() -> FastAPI:
    settings = get_settings()
    configure_logging(settings.log_level)

    app = FastAPI(title=settings.app_name, version="0.1.0")

    app.include_router(health_router, prefix="/api")
    app.include_router(classify_router, prefix="/api")
    app.include_router(check_router, prefix="/api")
    app.include_router(tables_router, prefix="/api")

    @app.get("/")
    async def root():
        return {"status": "ok", "message": f"{settings.app_name} is running"}

    return app


app = create_app()
