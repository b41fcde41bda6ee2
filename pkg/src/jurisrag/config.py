"""Application configuration with flags > environment > config file > defaults.

Environment variables:

    EMBED_ENDPOINT / EMBED_API_KEY     remote embedding service
    LLM_ENDPOINT / LLM_MODEL / LLM_API_KEY        answer generation
    JUDGE_ENDPOINT / JUDGE_MODEL / JUDGE_API_KEY  evaluation judge
    OFFLINE=1                          force offline mode (no network at all)

The optional config file is JSON mirroring the flag names, plus nested
``embedder`` / ``llm`` / ``judge`` sections.  Offline defaults to true unless
a generation endpoint is configured, so a bare checkout is deterministic out
of the box.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .embedding import Backend, EmbedderConfig
from .errors import JurisragError
from .llm import LlmClientConfig
from .pipeline import PipelineConfig

__all__ = ["AppConfig", "ConfigError", "resolve_config"]

OFFLINE_ENV = "OFFLINE"

_TRUTHY = {"1", "true", "yes", "on"}


class ConfigError(JurisragError):
    """The configuration file is unreadable or malformed."""


@dataclass(frozen=True)
class AppConfig:
    manifest_path: str | None = None
    index_path: str | None = None
    pipeline: PipelineConfig = PipelineConfig()
    embedder: EmbedderConfig = EmbedderConfig()
    llm: LlmClientConfig | None = None
    judge: LlmClientConfig | None = None
    listen_addr: str = "127.0.0.1:8080"
    offline: bool = True


def _load_config_file(path: str | Path | None) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must contain a JSON object")
    return data


def _pick(*values):
    """First value that is not None."""
    for value in values:
        if value is not None:
            return value
    return None


def _llm_from(section: dict, endpoint_env: str, model_env: str, key_env_name: str, env: Mapping[str, str]) -> LlmClientConfig | None:
    endpoint = _pick(section.get("endpoint"), env.get(endpoint_env))
    if not endpoint:
        return None
    return LlmClientConfig(
        endpoint=endpoint,
        model_name=_pick(section.get("model"), env.get(model_env), "default"),
        api_key_env=section.get("api_key_env", key_env_name),
        timeout=float(section.get("timeout", 30.0)),
        temperature=float(section.get("temperature", 0.0)),
    )


def resolve_config(
    flags: Mapping[str, Any] | None = None,
    env: Mapping[str, str] | None = None,
    config_file: str | Path | None = None,
) -> AppConfig:
    """Merge flag values, environment, and the config file into an AppConfig.

    ``flags`` maps flag names (``manifest``, ``index``, ``k``, ``addr``,
    ``offline``) to values; None means "not given on the command line".
    """
    flags = flags or {}
    env = env if env is not None else os.environ
    file_cfg = _load_config_file(config_file)

    emb_section = file_cfg.get("embedder", {})
    embedder = EmbedderConfig(
        dim=int(emb_section.get("dim", 768)),
        backend=Backend(emb_section.get("backend", "reference")),
        remote_endpoint=_pick(emb_section.get("endpoint"), env.get("EMBED_ENDPOINT")),
        batch_size=int(emb_section.get("batch_size", 32)),
        seed=int(emb_section.get("seed", 0)),
    )

    pipe_section = file_cfg.get("pipeline", {})
    pipeline = PipelineConfig(
        k=int(_pick(flags.get("k"), pipe_section.get("k"), 5)),
        over_retrieval_factor=int(pipe_section.get("over_retrieval_factor", 25)),
        boost_enacted=float(pipe_section.get("boost_enacted", 0.6)),
        boost_proposed=float(pipe_section.get("boost_proposed", 0.8)),
        boost_name_mention=float(pipe_section.get("boost_name_mention", 0.7)),
    )

    llm = _llm_from(file_cfg.get("llm", {}), "LLM_ENDPOINT", "LLM_MODEL", "LLM_API_KEY", env)
    judge = _llm_from(file_cfg.get("judge", {}), "JUDGE_ENDPOINT", "JUDGE_MODEL", "JUDGE_API_KEY", env)

    env_offline = env.get(OFFLINE_ENV)
    offline = _pick(
        flags.get("offline"),
        (env_offline.strip().casefold() in _TRUTHY) if env_offline is not None else None,
        file_cfg.get("offline"),
        llm is None,  # no generation endpoint -> deterministic by default
    )

    return AppConfig(
        manifest_path=_pick(flags.get("manifest"), file_cfg.get("manifest")),
        index_path=_pick(flags.get("index"), file_cfg.get("index")),
        pipeline=pipeline,
        embedder=embedder,
        llm=llm,
        judge=judge,
        listen_addr=_pick(flags.get("addr"), file_cfg.get("addr"), "127.0.0.1:8080"),
        offline=bool(offline),
    )
