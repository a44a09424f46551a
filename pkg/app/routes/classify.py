from fastapi import APIRouter, Depends

from ..core.errors import RichardsonError
from ..core.security import require_api_key
from ..schemas.common import ClassificationRow, ExtremalEntryRecord, LieKind
from ..services.bruhat import CosetContext
from ..services.classify import classification_rows, maximal_v, minimal_w
from ..services.rootsys import root_system
from .errors import check_rank_budget, to_http


classify_router = APIRouter(prefix="/classify", tags=["classify"], dependencies=[Depends(require_api_key)])


@classify_router.get("/{kind}/{n}/{r}", response_model=list[ClassificationRow])
def classify(kind: LieKind, n: int, r: int) -> list[ClassificationRow]:
    try:
        check_rank_budget(n)
        return classification_rows(root_system(kind, n), r)
    except RichardsonError as exc:
        raise to_http(exc) from exc


@classify_router.get("/{kind}/{n}/{r}/entries", response_model=dict[str, list[ExtremalEntryRecord]])
def entries(kind: LieKind, n: int, r: int) -> dict[str, list[ExtremalEntryRecord]]:
    try:
        check_rank_budget(n)
        rs = root_system(kind, n)
        ctx = CosetContext(rs, r)
        return {
            "v": [e.to_record(ctx) for e in maximal_v(rs, r)],
            "w": [e.to_record(ctx) for e in minimal_w(rs, r)],
        }
    except RichardsonError as exc:
        raise to_http(exc) from exc
