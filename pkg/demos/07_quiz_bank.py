"""
Quiz banks: validate, score, aggregate
======================================

A content test is ten multiple-choice questions (five concept, five data)
tied to verbatim source quotes. The engine validates the schema, scores an
answer set against the key, and rolls accuracies and error labels up into
tables. LLM calls live behind a one-method client contract with prompt
templates shipped as resource files; here a mock client stands in.
"""

import json

from deckeval.llm import llm_exchange, load_template
from deckeval.quizbank import (
    AccuracyRecord,
    ErrorRecord,
    QuizAnswerSet,
    QuizBankDoc,
    RichnessCorpus,
    aggregate_accuracy,
    error_taxonomy_rollup,
    richness_score,
    score_quiz,
    validate_quizbank,
)

SOURCE = ("From January 6 through February 10, 2025 the campaign ran nationwide. "
          "Q3 revenue grew by 25% YoY to $10M.")

LETTERS = ["A", "B", "C", "D"]
bank_json = {"quiz_bank": [
    {
        "id": i + 1,
        "type": "Concept" if i < 5 else "Data",
        "question": f"Question {i + 1}?",
        "options": [f"{l}. choice {l}" for l in LETTERS],
        "correct_answer": LETTERS[i % 4],
        "explanation": "Based on Page 1.",
        "source_quote": "Q3 revenue grew by 25% YoY to $10M.",
        "location": "Page 1",
    }
    for i in range(10)
]}
bank = QuizBankDoc.from_json(json.dumps(bank_json))

findings = validate_quizbank(bank, SOURCE)
print(f"validation findings on a clean bank: {len(findings)}")

# Break two rules and watch the findings name them.
broken = json.loads(json.dumps(bank_json))
broken["quiz_bank"][2]["correct_answer"] = "C. choice C"     # full text, not a letter
broken["quiz_bank"][7]["source_quote"] = "never said this"
for f in validate_quizbank(QuizBankDoc.from_json(json.dumps(broken)), SOURCE):
    print(f"  {f.code} (question {f.question_id}): {f.message}")


# The open-book exam reply comes back through the client contract.
class CannedClient:
    def complete(self, prompt):
        answers = [{"question_id": q.id,
                    "selected_answer": q.correct_answer if q.id not in (4, 9)
                    else "insufficient information",
                    "reasoning": "stated on the slide"}
                   for q in bank.questions]
        return json.dumps({"answers": answers})


template = load_template("quiz_evaluation")
print(f"\nevaluation template placeholders: {template.placeholders}")
raw = llm_exchange("quiz_evaluation",
                   {"topic": "campaign", "slide_contents": "...", "quiz_questions": "..."},
                   CannedClient())
answers = QuizAnswerSet.from_json(raw)
per_question, accuracy = score_quiz(answers, bank)
print(f"scored {sum(per_question.values())}/10 correct -> {accuracy:.1f}%")

# Accuracy tables: absent cells stay N/A instead of pretending to be zero.
records = [
    AccuracyRecord("aurora", "t1", "Brand", "High", 84.0),
    AccuracyRecord("aurora", "t2", "Report", "Low", 92.0),
    AccuracyRecord("borealis", "t1", "Brand", "High", 71.0),
]
table = aggregate_accuracy(records)
for system, row in table["systems"].items():
    cells = {p: (f"{v:.1f}" if v is not None else "N/A")
             for p, v in row["by_purpose"].items()}
    print(f"{system:9s} {cells} avg={row['average']:.1f}")

# Error taxonomy roll-up over labeled wrong answers.
errors = [ErrorRecord(1, "MissingContent", "aurora"),
          ErrorRecord(2, "MissingContent", "aurora"),
          ErrorRecord(3, "ValueMismatch", "borealis")]
rollup = error_taxonomy_rollup(errors)
print(f"\nerror shares: " + ", ".join(
    f"{t}={s:.0f}%" for t, s in rollup["shares"].items() if s))

# Content richness blends text length and image count over corpus extrema.
corpus = RichnessCorpus.from_pairs([(900, 1), (2500, 5), (4800, 11), (7500, 20), (13000, 28)])
for t, i in ((1200, 2), (5000, 12), (12000, 26)):
    r = richness_score(t, i, corpus)
    print(f"richness(T={t:5d}, I={i:2d}) = {r.score:.2f} ({r.level})")
