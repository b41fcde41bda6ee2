"""Minimal HTTP POST transport used by all remote clients.

A transport is any callable with the signature

    transport(url, payload, headers, timeout) -> (status_code, parsed_json)

and may raise :class:`TransportFailure` when the request never produced a
response (DNS failure, refused connection, timeout, ...).  Keeping this as a
plain callable makes every network touchpoint injectable: tests substitute
canned transports, and offline mode can assert that no transport is ever
invoked.
"""

from __future__ import annotations

from typing import Any, Callable, Mapping

import httpx

from .errors import JurisragError

__all__ = ["Transport", "TransportFailure", "http_post_json"]

Transport = Callable[[str, Any, Mapping[str, str], float], "tuple[int, Any]"]


class TransportFailure(JurisragError):
    """The HTTP request could not be completed at all."""


def http_post_json(url: str, payload: Any, headers: Mapping[str, str], timeout: float) -> tuple[int, Any]:
    """POST ``payload`` as JSON and return ``(status_code, decoded_body)``.

    The body is ``None`` when the response is not valid JSON; status handling
    is left to the caller so that service errors can be reported distinctly
    from transport errors.
    """
    try:
        resp = httpx.post(url, json=payload, headers=dict(headers), timeout=timeout)
    except httpx.HTTPError as exc:
        raise TransportFailure(f"POST {url} failed: {exc}") from exc
    try:
        body = resp.json()
    except ValueError:
        body = None
    return resp.status_code, body
