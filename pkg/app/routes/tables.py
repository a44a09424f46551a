from fastapi import APIRouter, Depends

from ..core.security import require_api_key
from ..services.tables import ExampleTables, example_tables


tables_router = APIRouter(prefix="/tables", tags=["tables"], dependencies=[Depends(require_api_key)])


@tables_router.get("", response_model=ExampleTables)
def tables() -> ExampleTables:
    return example_tables()
