"""Command-line interface.

Subcommands: eval (deck -> report), pei (package -> editability report),
align (reports + human rankings -> alignment stats), quiz
validate|score|aggregate, and fixtures (emit test packages). Exit codes:
0 success, 1 input error, 2 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback
from pathlib import Path

from .alignment import alignment_report, parse_rankings_json, parse_rankings_text
from .config import EngineConfig, load_config
from .deck import evaluate_deck, load_deck
from .layout import LayoutParseError
from .pei import FIXTURE_KINDS, PackageError, build_fixture, evaluate_pei, fixture_filename
from .quizbank import (
    AccuracyRecord,
    ErrorRecord,
    QuizAnswerSet,
    QuizBankDoc,
    QuizParseError,
    aggregate_accuracy,
    error_taxonomy_rollup,
    score_quiz,
    validate_quizbank,
)
from .report import FORMATS, emit_report, parse_report

_INPUT_ERRORS = (
    ValueError,
    FileNotFoundError,
    NotADirectoryError,
    IsADirectoryError,
    LayoutParseError,
    PackageError,
    QuizParseError,
    json.JSONDecodeError,
)


def _engine_config(args) -> EngineConfig:
    config = load_config(args.config) if getattr(args, "config", None) else EngineConfig()
    if getattr(args, "profile", None):
        config = config.with_profile(args.profile)
    return config


def _write_output(data: bytes, out_path):
    if out_path:
        Path(out_path).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))


def _cmd_eval(args) -> int:
    config = _engine_config(args)
    deck = load_deck(args.deck, topic=args.topic, system=args.system,
                     layout_dir=args.layout_dir, package=args.pptx)
    report = evaluate_deck(deck, config)
    _write_output(emit_report(report, args.format), args.out)
    return 0


def _cmd_pei(args) -> int:
    config = _engine_config(args)
    report = evaluate_pei(args.input, config.pei)
    payload = report.to_dict()
    if args.format == "table":
        gates = ",".join(
            f"{g.gate}={'pass' if g.passed else ('fail' if g.passed is False else '-')}"
            for g in report.gates
        )
        text = f"level,{payload['level']}\nroute,{payload['route']}\n{gates}\n"
        _write_output(text.encode("utf-8"), args.out)
    else:
        _write_output((json.dumps(payload, indent=2) + "\n").encode("utf-8"), args.out)
    return 0


def _cmd_align(args) -> int:
    if Path(args.reports).is_dir():
        report_paths = sorted(Path(args.reports).glob("*.json"))
    else:
        import glob
        report_paths = [Path(p) for p in sorted(glob.glob(args.reports))]
    if not report_paths:
        raise FileNotFoundError(f"no report files found under {args.reports!r}")

    metric_scores: dict = {}
    for path in report_paths:
        data = parse_report(path.read_bytes())
        topic = data.get("deck", {}).get("topic", "")
        system = data.get("deck", {}).get("system", "")
        if not topic or not system:
            raise ValueError(f"report {path} lacks deck.topic/deck.system identifiers")
        metric_scores.setdefault(topic, {})[system] = data["aesthetics"]

    human_path = Path(args.human)
    raw = human_path.read_text("utf-8")
    rankings = parse_rankings_json(raw) if human_path.suffix.lower() == ".json" \
        else parse_rankings_text(raw)

    stats = alignment_report(metric_scores, rankings)
    payload = {
        "spearman_avg": stats.spearman_avg,
        "spearman_std": stats.spearman_std,
        "identical_pct": stats.identical_pct,
        "topics_used": stats.topics_used,
        "topics_skipped": stats.topics_skipped,
    }
    if args.format == "table":
        text = ("spearman_avg,spearman_std,identical_pct,topics_used,topics_skipped\n"
                f"{stats.spearman_avg:.4f},{stats.spearman_std:.4f},"
                f"{stats.identical_pct:.1f},{stats.topics_used},{stats.topics_skipped}\n")
        _write_output(text.encode("utf-8"), args.out)
    else:
        _write_output((json.dumps(payload, indent=2) + "\n").encode("utf-8"), args.out)
    return 0


def _cmd_quiz_validate(args) -> int:
    doc = QuizBankDoc.from_json(Path(args.bank).read_bytes())
    source = Path(args.source).read_text("utf-8") if args.source else None
    findings = validate_quizbank(doc, source)
    for finding in findings:
        where = f" (question {finding.question_id})" if finding.question_id is not None else ""
        print(f"{finding.code}{where}: {finding.message}")
    print(f"{len(findings)} finding(s)")
    return 1 if findings else 0


def _cmd_quiz_score(args) -> int:
    key = QuizBankDoc.from_json(Path(args.bank).read_bytes())
    answers = QuizAnswerSet.from_json(Path(args.answers).read_bytes())
    per_question, accuracy = score_quiz(answers, key)
    payload = {
        "per_question": {str(qid): ok for qid, ok in sorted(per_question.items())},
        "correct": sum(per_question.values()),
        "total": len(per_question),
        "accuracy_pct": accuracy,
    }
    _write_output((json.dumps(payload, indent=2) + "\n").encode("utf-8"), args.out)
    return 0


def _cmd_quiz_aggregate(args) -> int:
    obj = json.loads(Path(args.records).read_text("utf-8"))
    records = [AccuracyRecord(system=r["system"], topic=r.get("topic", ""),
                              purpose=r.get("purpose", ""), level=r.get("level", ""),
                              accuracy=float(r["accuracy"]))
               for r in obj.get("results", [])]
    payload = {"accuracy": aggregate_accuracy(records)}
    if args.errors:
        err_obj = json.loads(Path(args.errors).read_text("utf-8"))
        err_records = [ErrorRecord(question_id=int(e.get("question_id", 0)),
                                   error_type=e["error_type"], system=e.get("system", ""))
                       for e in err_obj.get("errors", [])]
        payload["errors"] = error_taxonomy_rollup(err_records)
    _write_output((json.dumps(payload, indent=2) + "\n").encode("utf-8"), args.out)
    return 0


def _cmd_fixtures(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    kinds = args.kinds or list(FIXTURE_KINDS)
    for kind in kinds:
        path = out_dir / fixture_filename(kind)
        path.write_bytes(build_fixture(kind))
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deckeval",
                                     description="Deterministic slide-deck quality evaluation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a deck of rendered slide images")
    p_eval.add_argument("deck", help="image directory or JSON manifest")
    p_eval.add_argument("--layout-dir", default=None, help="directory holding layout sidecars")
    p_eval.add_argument("--pptx", default=None, help="native package to classify alongside")
    p_eval.add_argument("--config", default=None, help="key-value config file")
    p_eval.add_argument("--profile", default=None, help="reporting profile name")
    p_eval.add_argument("--format", choices=FORMATS, default="struct")
    p_eval.add_argument("--topic", default="", help="topic identifier for the report")
    p_eval.add_argument("--system", default="", help="system identifier for the report")
    p_eval.add_argument("--out", default=None, help="write output to this file")
    p_eval.set_defaults(func=_cmd_eval)

    p_pei = sub.add_parser("pei", help="classify editability of a package, PDF, or URL")
    p_pei.add_argument("input", help="path or URL")
    p_pei.add_argument("--config", default=None)
    p_pei.add_argument("--format", choices=FORMATS, default="struct")
    p_pei.add_argument("--out", default=None)
    p_pei.set_defaults(func=_cmd_pei)

    p_align = sub.add_parser("align", help="alignment stats of reports vs human rankings")
    p_align.add_argument("--reports", required=True, help="directory of struct reports")
    p_align.add_argument("--human", required=True, help="rankings file (text or .json)")
    p_align.add_argument("--format", choices=FORMATS, default="struct")
    p_align.add_argument("--out", default=None)
    p_align.set_defaults(func=_cmd_align)

    p_quiz = sub.add_parser("quiz", help="quiz bank validation, scoring, aggregation")
    quiz_sub = p_quiz.add_subparsers(dest="quiz_command", required=True)

    q_validate = quiz_sub.add_parser("validate", help="schema-check a quiz bank")
    q_validate.add_argument("--bank", required=True)
    q_validate.add_argument("--source", default=None, help="source document for quote checks")
    q_validate.set_defaults(func=_cmd_quiz_validate)

    q_score = quiz_sub.add_parser("score", help="score an answer set against a bank")
    q_score.add_argument("--bank", required=True)
    q_score.add_argument("--answers", required=True)
    q_score.add_argument("--out", default=None)
    q_score.set_defaults(func=_cmd_quiz_score)

    q_agg = quiz_sub.add_parser("aggregate", help="roll up accuracy and error records")
    q_agg.add_argument("--records", required=True, help="JSON file with a 'results' array")
    q_agg.add_argument("--errors", default=None, help="JSON file with an 'errors' array")
    q_agg.add_argument("--out", default=None)
    q_agg.set_defaults(func=_cmd_quiz_aggregate)

    p_fix = sub.add_parser("fixtures", help="emit editability test packages")
    p_fix.add_argument("--out", required=True, help="output directory")
    p_fix.add_argument("--kinds", nargs="*", default=None,
                       help=f"fixture kinds (default: {' '.join(FIXTURE_KINDS)})")
    p_fix.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
