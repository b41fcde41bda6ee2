"""HTTP service exposing the query engine.

    GET  /v1/health  -> {"status": "ok", "chunks": <row count>}
    POST /v1/query   -> {"answer", "citations", "route", "entities",
                         "entities_covered", "fallback_applied"}

Request body for /v1/query is ``{"question": str, "k": int?}``; malformed
bodies get a 400 with an error object rather than a crash.  The service holds
no per-request state beyond the request itself.
"""

from __future__ import annotations

import logging

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .engine import QueryEngine
from .errors import JurisragError
from .llm import LlmUnavailableError

__all__ = ["create_app"]

logger = logging.getLogger(__name__)


def _bad_request(message: str) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": message})


def create_app(engine: QueryEngine) -> FastAPI:
    app = FastAPI(title="jurisrag", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError):  # pragma: no cover - thin shim
        return _bad_request("malformed request body")

    @app.get("/v1/health")
    def health() -> dict:
        return {"status": "ok", "chunks": engine.chunk_count}

    @app.post("/v1/query")
    async def query(request: Request):
        try:
            payload = await request.json()
        except Exception:
            return _bad_request("request body must be JSON")
        if not isinstance(payload, dict):
            return _bad_request("request body must be a JSON object")
        question = payload.get("question")
        if not isinstance(question, str) or not question.strip():
            return _bad_request("'question' must be a non-empty string")
        k = payload.get("k")
        if k is not None and (not isinstance(k, int) or isinstance(k, bool) or k <= 0):
            return _bad_request("'k' must be a positive integer")

        try:
            result = engine.retrieve(question, k)
            answer = engine.generate(result)
        except LlmUnavailableError as exc:
            logger.warning("generation unavailable: %s", exc)
            return JSONResponse(status_code=502, content={"error": f"generation unavailable: {exc}"})
        except JurisragError as exc:
            return _bad_request(str(exc))

        return {
            "answer": answer.text,
            "citations": [c.to_dict() for c in answer.citations],
            "route": result.analysis.route.value,
            "entities": list(result.analysis.entities),
            "entities_covered": sorted(result.entities_covered),
            "fallback_applied": result.fallback_applied.value,
            "coverage_note": answer.coverage_note,
            "diagnostic": result.diagnostic,
        }

    return app
