"""Quiz-bank documents: schema validation, scoring, and aggregation.

A bank holds exactly ten multiple-choice questions per topic (five concept,
five data), each with four prefixed options, a single-letter answer, and a
verbatim source quote. Construction and the open-book exam run through an
external LLM client contract; this module owns the schema, scoring, and
roll-up math, not the LLM output quality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "QUESTION_TYPES",
    "ERROR_TYPES",
    "INSUFFICIENT",
    "QuizQuestion",
    "QuizBankDoc",
    "QuizAnswer",
    "QuizAnswerSet",
    "ErrorRecord",
    "AccuracyRecord",
    "RichnessScore",
    "RichnessCorpus",
    "Finding",
    "QuizParseError",
    "validate_quizbank",
    "score_quiz",
    "aggregate_accuracy",
    "error_taxonomy_rollup",
    "richness_score",
]

QUESTION_TYPES = ("Concept", "Data")
REQUIRED_COUNT = 10
PER_TYPE_COUNT = 5
OPTION_PREFIXES = ("A. ", "B. ", "C. ", "D. ")
VALID_LETTERS = frozenset("ABCD")
INSUFFICIENT = "insufficient information"

ERROR_TYPES = (
    "MissingContent",
    "VlmFailure",
    "ValueMismatch",
    "VlmMisinterp",
    "ImplicitInfo",
    "Other",
)


class QuizParseError(ValueError):
    """Raised for structurally unreadable quiz documents."""


@dataclass(frozen=True)
class QuizQuestion:
    id: int
    type: str
    question: str
    options: tuple
    correct_answer: str
    explanation: str = ""
    source_quote: str = ""
    location: str = ""


@dataclass(frozen=True)
class QuizBankDoc:
    topic: str
    questions: tuple

    @classmethod
    def from_json(cls, data: bytes | str, topic: str = "") -> "QuizBankDoc":
        """Read the {"quiz_bank": [...]} document shape.

        Content-level problems (wrong counts, malformed answers) are left to
        `validate_quizbank`; only structural breakage raises here.
        """
        try:
            obj = json.loads(data)
        except json.JSONDecodeError as exc:
            raise QuizParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
        if not isinstance(obj, dict) or "quiz_bank" not in obj:
            raise QuizParseError("document must contain a 'quiz_bank' array")
        raw = obj["quiz_bank"]
        if not isinstance(raw, list):
            raise QuizParseError("'quiz_bank' must be an array")
        questions = []
        for i, q in enumerate(raw):
            if not isinstance(q, dict):
                raise QuizParseError(f"question {i}: expected an object")
            options = q.get("options", [])
            if not isinstance(options, list):
                raise QuizParseError(f"question {i}: 'options' must be an array")
            questions.append(QuizQuestion(
                id=q.get("id", i + 1),
                type=str(q.get("type", "")),
                question=str(q.get("question", "")),
                options=tuple(str(o) for o in options),
                correct_answer=str(q.get("correct_answer", "")),
                explanation=str(q.get("explanation", "")),
                source_quote=str(q.get("source_quote", "")),
                location=str(q.get("location", "")),
            ))
        return cls(topic=topic or str(obj.get("topic", "")), questions=tuple(questions))


@dataclass(frozen=True)
class QuizAnswer:
    question_id: int
    selected_answer: str
    reasoning: str = ""

    @property
    def is_insufficient(self) -> bool:
        return self.selected_answer.strip().lower() == INSUFFICIENT


@dataclass(frozen=True)
class QuizAnswerSet:
    answers: tuple

    def by_id(self) -> dict:
        return {a.question_id: a for a in self.answers}

    @classmethod
    def from_json(cls, data: bytes | str) -> "QuizAnswerSet":
        """Read the {"answers": [...]} reply shape."""
        try:
            obj = json.loads(data)
        except json.JSONDecodeError as exc:
            raise QuizParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
        if not isinstance(obj, dict) or "answers" not in obj or not isinstance(obj["answers"], list):
            raise QuizParseError("reply must contain an 'answers' array")
        entries = []
        for i, a in enumerate(obj["answers"]):
            if not isinstance(a, dict) or "question_id" not in a or "selected_answer" not in a:
                raise QuizParseError(f"answer {i}: needs 'question_id' and 'selected_answer'")
            entries.append(QuizAnswer(
                question_id=int(a["question_id"]),
                selected_answer=str(a["selected_answer"]),
                reasoning=str(a.get("reasoning", "")),
            ))
        return cls(answers=tuple(entries))


@dataclass(frozen=True)
class Finding:
    code: str
    message: str
    question_id: int | None = None


@dataclass(frozen=True)
class ErrorRecord:
    question_id: int
    error_type: str
    system: str = ""

    def __post_init__(self):
        if self.error_type not in ERROR_TYPES:
            raise ValueError(f"unknown error type {self.error_type!r}; expected one of {ERROR_TYPES}")


@dataclass(frozen=True)
class AccuracyRecord:
    system: str
    topic: str
    purpose: str
    level: str
    accuracy: float


def validate_quizbank(doc: QuizBankDoc, source_text: str | None = None) -> list:
    """Schema findings for a bank; empty list means the bank is well formed.

    With `source_text` supplied, every source_quote must appear verbatim in
    it; without a source, quote checks are skipped (never inverted).
    """
    findings: list[Finding] = []
    if len(doc.questions) != REQUIRED_COUNT:
        findings.append(Finding("count", f"expected {REQUIRED_COUNT} questions, found {len(doc.questions)}"))
    else:
        # the concept/data split is only meaningful at the right count
        by_type: dict[str, int] = {}
        for q in doc.questions:
            by_type[q.type] = by_type.get(q.type, 0) + 1
        for qtype in QUESTION_TYPES:
            n = by_type.get(qtype, 0)
            if n != PER_TYPE_COUNT:
                findings.append(Finding("type-split", f"expected {PER_TYPE_COUNT} {qtype} questions, found {n}"))
        for qtype in sorted(set(by_type) - set(QUESTION_TYPES)):
            findings.append(Finding("type-split", f"unknown question type {qtype!r}"))

    seen_ids = set()
    for q in doc.questions:
        if q.id in seen_ids:
            findings.append(Finding("duplicate-id", f"question id {q.id} repeats", q.id))
        seen_ids.add(q.id)

        if len(q.options) != 4:
            findings.append(Finding("options", f"expected 4 options, found {len(q.options)}", q.id))
        else:
            for opt, prefix in zip(q.options, OPTION_PREFIXES):
                if not opt.startswith(prefix):
                    findings.append(Finding("options", f"option must start with {prefix!r}: {opt[:30]!r}", q.id))

        if q.correct_answer not in VALID_LETTERS:
            findings.append(Finding(
                "answer-format",
                f"correct_answer must be a single letter A-D, got {q.correct_answer[:40]!r}",
                q.id,
            ))

        if source_text is not None and q.source_quote and q.source_quote not in source_text:
            findings.append(Finding("quote", "source_quote not found verbatim in source", q.id))
    return findings


def score_quiz(answers: QuizAnswerSet, key: QuizBankDoc):
    """Per-question correctness and accuracy percentage.

    An "insufficient information" selection scores as incorrect; a missing
    question id is an error, not a zero.
    """
    got = answers.by_id()
    per_question = {}
    for q in key.questions:
        if q.id not in got:
            raise ValueError(f"answer set is missing question id {q.id}")
        a = got[q.id]
        per_question[q.id] = (not a.is_insufficient) and a.selected_answer.strip() == q.correct_answer
    accuracy = 100.0 * sum(per_question.values()) / len(per_question)
    return per_question, accuracy


def aggregate_accuracy(records) -> dict:
    """Mean accuracies per (system x purpose) and (system x richness level).

    Cells with no records stay None, rendered as N/A downstream.
    """
    records = list(records)
    if not records:
        raise ValueError("no accuracy records")
    systems = sorted({r.system for r in records})
    purposes = sorted({r.purpose for r in records})
    levels = sorted({r.level for r in records})

    def mean_of(rs):
        return sum(r.accuracy for r in rs) / len(rs) if rs else None

    table = {"purposes": purposes, "levels": levels, "systems": {}}
    for system in systems:
        mine = [r for r in records if r.system == system]
        table["systems"][system] = {
            "by_purpose": {p: mean_of([r for r in mine if r.purpose == p]) for p in purposes},
            "by_level": {l: mean_of([r for r in mine if r.level == l]) for l in levels},
            "average": mean_of(mine),
        }
    return table


def error_taxonomy_rollup(records) -> dict:
    """Counts and percentage shares per error type, plus per-system breakdowns."""
    records = list(records)
    total = len(records)
    by_type = {t: 0 for t in ERROR_TYPES}
    by_system: dict = {}
    for r in records:
        by_type[r.error_type] += 1
        if r.system:
            row = by_system.setdefault(r.system, {t: 0 for t in ERROR_TYPES})
            row[r.error_type] += 1
    share = {t: (100.0 * n / total if total else 0.0) for t, n in by_type.items()}
    system_share = {
        s: {t: (100.0 * n / sum(row.values()) if sum(row.values()) else 0.0) for t, n in row.items()}
        for s, row in by_system.items()
    }
    return {
        "total": total,
        "counts": by_type,
        "shares": share,
        "system_counts": by_system,
        "system_shares": system_share,
    }


@dataclass(frozen=True)
class RichnessScore:
    text_length: float
    image_count: float
    score: float
    level: str


@dataclass(frozen=True)
class RichnessCorpus:
    """Min-max extrema plus score tertile boundaries of an instruction corpus."""

    t_min: float
    t_max: float
    i_min: float
    i_max: float
    tertile_low: float
    tertile_high: float
    w_text: float = 0.7
    w_image: float = 0.3

    @classmethod
    def from_pairs(cls, pairs, w_text: float = 0.7, w_image: float = 0.3) -> "RichnessCorpus":
        """Derive extrema and tertiles from (text_length, image_count) pairs."""
        arr = np.asarray(list(pairs), dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] < 3:
            raise ValueError("need at least three (text_length, image_count) pairs")
        t, i = arr[:, 0], arr[:, 1]
        if t.max() <= t.min() or i.max() <= i.min():
            raise ValueError("degenerate corpus extrema")
        scores = (w_text * (t - t.min()) / (t.max() - t.min())
                  + w_image * (i - i.min()) / (i.max() - i.min()))
        return cls(
            t_min=float(t.min()), t_max=float(t.max()),
            i_min=float(i.min()), i_max=float(i.max()),
            tertile_low=float(np.percentile(scores, 100.0 / 3.0)),
            tertile_high=float(np.percentile(scores, 200.0 / 3.0)),
            w_text=w_text, w_image=w_image,
        )


def richness_score(text_length: float, image_count: float, corpus: RichnessCorpus) -> RichnessScore:
    """Min-max blend of text length and image count, leveled by corpus tertiles."""
    if corpus.t_max <= corpus.t_min or corpus.i_max <= corpus.i_min:
        raise ValueError("degenerate corpus extrema")
    t_part = (text_length - corpus.t_min) / (corpus.t_max - corpus.t_min)
    i_part = (image_count - corpus.i_min) / (corpus.i_max - corpus.i_min)
    score = corpus.w_text * t_part + corpus.w_image * i_part
    score = min(max(score, 0.0), 1.0)
    if score <= corpus.tertile_low:
        level = "Low"
    elif score <= corpus.tertile_high:
        level = "Medium"
    else:
        level = "High"
    return RichnessScore(text_length=text_length, image_count=image_count, score=score, level=level)
