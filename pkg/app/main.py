"""
Main application entry point.
TeamQueue belief-change toolkit - HTTP API
"""

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.api.routes import router
from app.config import THEOREM_CATALOG, configure_logging, get_settings

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    Application lifespan events.
    Runs on startup and shutdown.
    """
    configure_logging()
    settings = get_settings()
    logger.info(
        "starting belief-change API (%s, max_worlds=%d, %d theorems registered)",
        settings.app_env, settings.max_worlds, len(THEOREM_CATALOG),
    )
    yield
    logger.info("shutting down")


app = FastAPI(
    title="TeamQueue Belief Change",
    description="""
    Iterated belief revision and contraction over finite propositional languages.

    ## Features
    - TeamQueue combination of total preorders (STQ, biased and scheduled variants)
    - Natural, restrained and lexicographic revision
    - Contraction via combination, natural, lexicographic and priority contraction
    - Postulate and combinator-property checks with counterexamples
    - Exhaustive verification runs over all small orders
    """,
    version="1.0.0",
    lifespan=lifespan,
)

settings = get_settings()
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.cors_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(router)


@app.get("/health")
async def health_check():
    """Health check endpoint."""
    return {
        "status": "healthy",
        "app": "TeamQueue Belief Change",
        "version": "1.0.0",
    }


@app.get("/")
async def root():
    """Root endpoint with API information."""
    return {
        "message": "TeamQueue belief-change API",
        "docs": "/docs",
        "health": "/health",
        "endpoints": {
            "combine": "POST /api/combine",
            "revise": "POST /api/revise",
            "contract": "POST /api/contract",
            "check_property": "POST /api/check/property",
            "check_postulate": "POST /api/check/postulate",
            "verify": "POST /api/verify",
            "theorems": "GET /api/theorems",
        },
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "app.main:app",
        host=settings.app_host,
        port=settings.app_port,
        reload=settings.is_development,
    )
