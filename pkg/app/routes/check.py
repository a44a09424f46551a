import logging

from fastapi import APIRouter, Depends

from ..core.errors import RichardsonError
from ..core.security import require_api_key
from ..schemas.common import CheckRequest, VerdictRecord
from ..services.criteria import check_pair
from ..services.rootsys import root_system
from ..services.weyl import parse_window
from .errors import check_rank_budget, to_http


logger = logging.getLogger(__name__)

check_router = APIRouter(prefix="/check", tags=["check"], dependencies=[Depends(require_api_key)])


@check_router.post("", response_model=VerdictRecord)
def check(req: CheckRequest) -> VerdictRecord:
    try:
        check_rank_budget(req.n)
        rs = root_system(req.type, req.n)
        v = parse_window(req.v, rs)
        w = parse_window(req.w, rs)
        verdict = check_pair(rs, req.r, v, w)
    except RichardsonError as exc:
        logger.info("check.rejected: %s", exc)
        raise to_http(exc) from exc
    logger.info("check.done: %s%s r=%s semistable=%s", req.type.value, req.n, req.r, verdict.semistable)
    return verdict
