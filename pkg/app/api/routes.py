"""
API routes for the belief-change toolkit.
"""

import logging
from typing import List, Optional

from fastapi import APIRouter, HTTPException, status

from app.config import THEOREM_CATALOG
from app.errors import BeliefChangeError, CapExceededError
from app.models.belief import BeliefState, ContractionOpId
from app.models.combinator import Combinator
from app.models.logic import WorldSpace
from app.models.report import RunReport, THEOREM_ALIASES
from app.models.requests import (
    CheckResponse,
    CombineRequest,
    ContractionRequest,
    OrderResponse,
    PostulateCheckRequest,
    PropertyCheckRequest,
    RevisionRequest,
    TheoremInfo,
    UniverseRequest,
    VerifyRequest,
)
from app.models.tpo import TPO
from app.services.change_ops import contract, revise
from app.services.combinators import check_property, combine
from app.services.postulates import check_postulate
from app.services.text_format import (
    counterexample_report,
    format_input,
    format_tpo,
    parse_input,
    parse_tpo,
    resolve_space,
)
from app.services.verification import run_theorem

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api", tags=["Belief Change API"])


def _bad_request(exc: BeliefChangeError) -> HTTPException:
    code = status.HTTP_422_UNPROCESSABLE_ENTITY if isinstance(exc, CapExceededError) else status.HTTP_400_BAD_REQUEST
    return HTTPException(status_code=code, detail=str(exc))


def _space(request: UniverseRequest) -> WorldSpace:
    return resolve_space(request.atoms, request.worlds)


def _order_response(order: TPO, space: WorldSpace, schedule: Optional[str] = None) -> OrderResponse:
    return OrderResponse(
        order=format_tpo(order, space),
        belief_set=format_input(order.cells[0], space),
        schedule=schedule,
    )


# ============================================================
# Operators
# ============================================================

@router.post("/combine", response_model=OrderResponse)
async def combine_orders(request: CombineRequest):
    """Combine two orders with a TeamQueue combinator."""
    try:
        space = _space(request)
        left, right = parse_tpo(request.left, space), parse_tpo(request.right, space)
        combinator = Combinator.parse(request.combinator)
        result = combine(left, right, combinator)
        return _order_response(result, space, str(combinator.schedule_for(left, right)))
    except BeliefChangeError as exc:
        raise _bad_request(exc)


@router.post("/revise", response_model=OrderResponse)
async def revise_state(request: RevisionRequest):
    try:
        space = _space(request)
        state = BeliefState(parse_tpo(request.state, space), space.vocabulary)
        result = revise(state, parse_input(request.input, space), request.op)
        return _order_response(result.order, space)
    except BeliefChangeError as exc:
        raise _bad_request(exc)


@router.post("/contract", response_model=OrderResponse)
async def contract_state(request: ContractionRequest):
    try:
        space = _space(request)
        state = BeliefState(parse_tpo(request.state, space), space.vocabulary)
        op = ContractionOpId.parse(request.op, request.revision, request.combinator)
        result = contract(state, parse_input(request.input, space), op)
        return _order_response(result.order, space)
    except BeliefChangeError as exc:
        raise _bad_request(exc)


# ============================================================
# Checks
# ============================================================

@router.post("/check/property", response_model=CheckResponse)
async def check_combinator_property(request: PropertyCheckRequest):
    """First violation of a combinator property on one (left, right, combined) triple."""
    try:
        space = _space(request)
        found = check_property(
            request.property,
            parse_tpo(request.left, space),
            parse_tpo(request.right, space),
            parse_tpo(request.combined, space),
        )
    except BeliefChangeError as exc:
        raise _bad_request(exc)
    return CheckResponse(holds=found is None, counterexample=found and counterexample_report(found, space))


@router.post("/check/postulate", response_model=CheckResponse)
async def check_state_postulate(request: PostulateCheckRequest):
    try:
        space = _space(request)
        state = BeliefState(parse_tpo(request.state, space), space.vocabulary)
        contraction = None
        if request.contraction:
            contraction = ContractionOpId.parse(request.contraction, request.revision, request.combinator)
        found = check_postulate(request.postulate, state, request.revision, contraction)
    except BeliefChangeError as exc:
        raise _bad_request(exc)
    return CheckResponse(holds=found is None, counterexample=found and counterexample_report(found, space))


# ============================================================
# Verification
# ============================================================

@router.get("/theorems", response_model=List[TheoremInfo])
async def list_theorems():
    """Registered exhaustive checks and their quantification domains."""
    aliases = {}
    for alias, target in THEOREM_ALIASES.items():
        aliases.setdefault(target, []).append(alias)
    return [
        TheoremInfo(
            theorem=theorem,
            title=entry["title"],
            scale=entry["scale"],
            default_size=entry["default_size"],
            domain=entry["domain"].format(size=entry["default_size"]),
            aliases=aliases.get(theorem, []),
        )
        for theorem, entry in THEOREM_CATALOG.items()
    ]


@router.post("/verify", response_model=RunReport)
def verify_theorem(request: VerifyRequest):
    """
    Run an exhaustive check. Runs can take minutes at the largest sizes, so
    this is a sync route and FastAPI moves it to the threadpool.
    """
    try:
        report = run_theorem(request.theorem, request.size)
    except BeliefChangeError as exc:
        raise _bad_request(exc)
    logger.info("verify %s: %s", report.theorem, "pass" if report.passed else "fail")
    return report
