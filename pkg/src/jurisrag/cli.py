"""Command-line interface: ingest, query, eval, serve.

Exit codes:

    0  success
    2  usage error / manifest not found
    3  corpus failed validation (or another ingest-time error)
    4  retrieval succeeded but the generation endpoint was unavailable
    5  evaluation report could not be written
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .config import AppConfig, ConfigError, resolve_config
from .corpus import CorpusValidationError, ManifestError
from .engine import QueryEngine, ingest
from .errors import JurisragError
from .evaluation import LlmJudge, StubJudge, render_table, run_eval, write_report
from .generation import Answer
from .llm import LlmUnavailableError
from .pipeline import RetrievalResult

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID_CORPUS = 3
EXIT_LLM_UNAVAILABLE = 4
EXIT_REPORT_UNWRITABLE = 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jurisrag", description="Multi-jurisdictional regulatory query engine")
    parser.add_argument("--config", help="JSON config file (flags and environment take precedence)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="chunk, embed and index a corpus manifest")
    p_ingest.add_argument("--manifest", required=True, help="corpus manifest (line-delimited JSON)")
    p_ingest.add_argument("--index", required=True, help="output index base path (writes <base>.jrix + <base>.chunks.jsonl)")

    p_query = sub.add_parser("query", help="answer one question against an ingested index")
    p_query.add_argument("question")
    p_query.add_argument("--manifest", required=True)
    p_query.add_argument("--index", required=True)
    p_query.add_argument("--k", type=int, default=None, help="number of contexts to retrieve (default 5)")
    p_query.add_argument("--json", action="store_true", help="emit the full result as JSON")
    p_query.add_argument("--offline", action="store_true", default=None, help="force offline mode (stub generation)")

    p_eval = sub.add_parser("eval", help="run the evaluation harness over a query file")
    p_eval.add_argument("--manifest", required=True)
    p_eval.add_argument("--index", required=True)
    p_eval.add_argument("--queries", required=True, help="query file (line-delimited JSON)")
    p_eval.add_argument("--report", required=True, help="output report path (JSON)")
    p_eval.add_argument("--offline", action="store_true", default=None)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--manifest", required=True)
    p_serve.add_argument("--index", required=True)
    p_serve.add_argument("--addr", default=None, help="listen address host:port (default 127.0.0.1:8080)")
    p_serve.add_argument("--offline", action="store_true", default=None)

    return parser


def _app_config(args: argparse.Namespace) -> AppConfig:
    flags = {
        "manifest": getattr(args, "manifest", None),
        "index": getattr(args, "index", None),
        "k": getattr(args, "k", None),
        "addr": getattr(args, "addr", None),
        "offline": getattr(args, "offline", None),
    }
    return resolve_config(flags=flags, config_file=args.config)


def _engine(config: AppConfig) -> QueryEngine:
    return QueryEngine.from_paths(
        config.manifest_path,
        config.index_path,
        pipeline_config=config.pipeline,
        embedder_config=config.embedder,
        llm_config=config.llm,
        offline=config.offline,
    )


def cmd_ingest(args: argparse.Namespace) -> int:
    config = _app_config(args)
    if not Path(config.manifest_path).is_file():
        print(f"manifest not found: {config.manifest_path}", file=sys.stderr)
        return EXIT_USAGE
    try:
        stats = ingest(config.manifest_path, config.index_path, embedder=config.embedder)
    except CorpusValidationError as exc:
        print("corpus validation failed:", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {violation}", file=sys.stderr)
        return EXIT_INVALID_CORPUS
    except JurisragError as exc:
        print(f"ingest failed: {exc}", file=sys.stderr)
        return EXIT_INVALID_CORPUS
    print(
        f"ingested {stats.documents} documents -> {stats.chunks} chunks "
        f"({stats.structured_chunks} structured, {stats.unstructured_chunks} unstructured)"
    )
    return EXIT_OK


def _print_human(result: RetrievalResult, answer: Answer | None) -> None:
    print(f"Route: {result.analysis.route.value}")
    if result.analysis.entities:
        print(f"Jurisdictions: {', '.join(result.analysis.entities)}")
    if result.fallback_applied.value != "none":
        print(f"Fallback: {result.fallback_applied.value}")
    if result.diagnostic:
        print(f"Note: {result.diagnostic}")
    if answer is not None:
        print(f"\n{answer.text}")
        if answer.coverage_note:
            print(f"\n{answer.coverage_note}")
    if result.contexts:
        print("\nSources:")
        for i, sc in enumerate(result.contexts, start=1):
            chunk = sc.chunk
            ref = f", {chunk.structural_ref}" if chunk.structural_ref else ""
            print(f"  [{i}] {chunk.entity} — {chunk.title} ({chunk.year}){ref}  [{chunk.chunk_id}]")


def cmd_query(args: argparse.Namespace) -> int:
    if args.k is not None and args.k <= 0:
        print("--k must be a positive integer", file=sys.stderr)
        return EXIT_USAGE
    config = _app_config(args)
    engine = _engine(config)
    result = engine.retrieve(args.question)
    try:
        answer = engine.generate(result)
    except LlmUnavailableError as exc:
        print(f"generation unavailable: {exc}", file=sys.stderr)
        _print_human(result, None)
        return EXIT_LLM_UNAVAILABLE
    if args.json:
        print(json.dumps({"result": result.to_dict(), "answer": answer.to_dict()}, ensure_ascii=False, indent=2))
    else:
        _print_human(result, answer)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    config = _app_config(args)
    engine = _engine(config)
    judge = StubJudge() if (config.offline or config.judge is None) else LlmJudge(config.judge)
    report = run_eval(args.queries, engine, judge=judge, embedder=config.embedder)
    try:
        write_report(report, args.report)
    except OSError as exc:
        print(f"cannot write report to {args.report}: {exc}", file=sys.stderr)
        return EXIT_REPORT_UNWRITABLE
    print(render_table(report))
    failures = [r for r in report.records if r.failure_reason]
    if failures:
        print(f"\n{len(failures)} quer{'y' if len(failures) == 1 else 'ies'} could not be evaluated:")
        for record in failures:
            print(f"  {record.query_id}: {record.failure_reason}")
    print(f"\nreport written to {args.report}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    config = _app_config(args)
    engine = _engine(config)
    host, _, port = config.listen_addr.rpartition(":")
    app = create_app(engine)
    logger.info("serving on %s", config.listen_addr)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
    return EXIT_OK


_COMMANDS = {"ingest": cmd_ingest, "query": cmd_query, "eval": cmd_eval, "serve": cmd_serve}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (ManifestError, ConfigError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except JurisragError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
