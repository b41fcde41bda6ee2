"""Chat-completion client shared by entity fallback, generation, and judging.

All three call the same wire protocol: POST ``{"model", "messages",
"temperature"}`` to a completions endpoint, read the text of the first choice.
The bearer token is taken from the environment variable *named by*
``api_key_env``, so the same config type can serve generator and judge with
separate credentials.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import JurisragError
from .transport import Transport, TransportFailure, http_post_json

__all__ = ["LlmClientConfig", "LlmUnavailableError", "complete"]

LLM_ENDPOINT_ENV = "LLM_ENDPOINT"
LLM_MODEL_ENV = "LLM_MODEL"
JUDGE_ENDPOINT_ENV = "JUDGE_ENDPOINT"
JUDGE_MODEL_ENV = "JUDGE_MODEL"


class LlmUnavailableError(JurisragError):
    """The completion service failed, timed out, or answered unusably."""


@dataclass(frozen=True)
class LlmClientConfig:
    endpoint: str
    model_name: str
    api_key_env: str = "LLM_API_KEY"
    timeout: float = 30.0
    temperature: float = 0.0

    def __post_init__(self) -> None:
        if not self.endpoint:
            raise ValueError("endpoint must be set")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.temperature < 0:
            raise ValueError("temperature must be non-negative")


def complete(prompt: str, config: LlmClientConfig, transport: Transport | None = None) -> str:
    """Run one prompt through the completion endpoint and return its text."""
    transport = transport or http_post_json
    payload = {
        "model": config.model_name,
        "messages": [{"role": "user", "content": prompt}],
        "temperature": config.temperature,
    }
    headers = {}
    api_key = os.environ.get(config.api_key_env)
    if api_key:
        headers["Authorization"] = f"Bearer {api_key}"
    try:
        status, body = transport(config.endpoint, payload, headers, config.timeout)
    except TransportFailure as exc:
        raise LlmUnavailableError(str(exc)) from exc
    if not (200 <= status < 300):
        raise LlmUnavailableError(f"completion endpoint returned status {status}")
    try:
        choice = body["choices"][0]
        text = choice["message"]["content"] if "message" in choice else choice["text"]
    except (TypeError, KeyError, IndexError) as exc:
        raise LlmUnavailableError(f"malformed completion response: {exc}") from exc
    if not isinstance(text, str):
        raise LlmUnavailableError("completion response text is not a string")
    return text
