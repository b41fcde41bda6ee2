"""Configuration precedence: flags > environment > config file > defaults."""

from __future__ import annotations

import json

import pytest

from jurisrag.config import AppConfig, ConfigError, resolve_config


class TestDefaults:
    def test_bare_resolution_is_offline_and_reference(self):
        config = resolve_config(env={})
        assert config.offline is True
        assert config.llm is None
        assert config.judge is None
        assert config.embedder.dim == 768
        assert config.pipeline.k == 5
        assert config.listen_addr == "127.0.0.1:8080"

    def test_generation_endpoint_flips_offline_default(self):
        config = resolve_config(env={"LLM_ENDPOINT": "https://llm.example/v1", "LLM_MODEL": "m"})
        assert config.offline is False
        assert config.llm.endpoint == "https://llm.example/v1"
        assert config.llm.model_name == "m"


class TestPrecedence:
    def test_flags_beat_env_and_file(self, tmp_path):
        file_path = tmp_path / "config.json"
        file_path.write_text(json.dumps({"offline": False, "pipeline": {"k": 9}}), encoding="utf-8")
        config = resolve_config(
            flags={"offline": True, "k": 2},
            env={"OFFLINE": "0"},
            config_file=file_path,
        )
        assert config.offline is True
        assert config.pipeline.k == 2

    def test_env_beats_file(self, tmp_path):
        file_path = tmp_path / "config.json"
        file_path.write_text(json.dumps({"offline": False}), encoding="utf-8")
        config = resolve_config(env={"OFFLINE": "1"}, config_file=file_path)
        assert config.offline is True

    def test_file_beats_defaults(self, tmp_path):
        file_path = tmp_path / "config.json"
        file_path.write_text(
            json.dumps({"manifest": "m.jsonl", "pipeline": {"boost_enacted": 0.5}}),
            encoding="utf-8",
        )
        config = resolve_config(env={}, config_file=file_path)
        assert config.manifest_path == "m.jsonl"
        assert config.pipeline.boost_enacted == 0.5

    @pytest.mark.parametrize("value, want", [("1", True), ("true", True), ("YES", True),
                                             ("on", True), ("0", False), ("off", False), ("", False)])
    def test_offline_env_truthiness(self, value, want):
        assert resolve_config(env={"OFFLINE": value}).offline is want


class TestLlmSections:
    def test_judge_config_from_env(self):
        config = resolve_config(env={"JUDGE_ENDPOINT": "https://judge.example/v1", "JUDGE_MODEL": "j"})
        assert config.judge.endpoint == "https://judge.example/v1"
        assert config.judge.model_name == "j"
        assert config.judge.api_key_env == "JUDGE_API_KEY"
        # A judge alone is not a generation endpoint; offline stays on.
        assert config.offline is True

    def test_file_llm_section(self, tmp_path):
        file_path = tmp_path / "config.json"
        file_path.write_text(
            json.dumps({"llm": {"endpoint": "https://llm.example/v1", "model": "m", "temperature": 0.3}}),
            encoding="utf-8",
        )
        config = resolve_config(env={}, config_file=file_path)
        assert config.llm.temperature == 0.3

    def test_embed_endpoint_from_env(self):
        config = resolve_config(env={"EMBED_ENDPOINT": "https://embed.example/v1"})
        assert config.embedder.remote_endpoint == "https://embed.example/v1"


class TestConfigFileErrors:
    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="cannot read"):
            resolve_config(env={}, config_file=tmp_path / "nope.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("{broken", encoding="utf-8")
        with pytest.raises(ConfigError, match="not valid JSON"):
            resolve_config(env={}, config_file=path)

    def test_non_object_rejected(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(ConfigError, match="JSON object"):
            resolve_config(env={}, config_file=path)


def test_appconfig_defaults_are_offline():
    assert AppConfig().offline is True
