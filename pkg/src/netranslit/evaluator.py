"""Accuracy, precision, recall and F-measure for entity translation output.

All metrics are percentages.  Precision is the share of correct outputs
among *all* evaluated words, so on a fully attempted test set it equals
accuracy; recall divides by the number of items that have a reference.
F-measure is the harmonic mean of the two percentages.

    >>> round(accuracy(14839, 17445), 2)
    85.06
    >>> round(f_measure(87.33, 80.22), 2)
    83.62
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, ROUND_HALF_UP, Decimal
from typing import Dict, List, Optional, Sequence

from .entity_io import EntityTag, Route, route
from .errors import ShapeError

__all__ = [
    "accuracy",
    "precision",
    "recall",
    "f_measure",
    "round_pct",
    "macro_average",
    "TagScore",
    "EvalReport",
    "evaluate",
    "format_report",
]

_ROUNDING = {"half-up": ROUND_HALF_UP, "half-even": ROUND_HALF_EVEN}


def _ratio(numerator: int, denominator: int, what: str) -> float:
    if denominator <= 0:
        raise ZeroDivisionError(f"{what} must be at least 1")
    if numerator < 0 or numerator > denominator:
        raise ValueError(f"count {numerator} outside [0, {denominator}]")
    return 100.0 * numerator / denominator


def accuracy(correct: int, total: int) -> float:
    return _ratio(correct, total, "total")


def precision(correct: int, total_words: int) -> float:
    # same ratio as accuracy: correct outputs over every evaluated word
    return _ratio(correct, total_words, "total_words")


def recall(system_correct: int, reference_correct: int) -> float:
    return _ratio(system_correct, reference_correct, "reference_correct")


def f_measure(precision_pct: float, recall_pct: float) -> float:
    """Harmonic mean of two percentages, itself a percentage."""
    if precision_pct + recall_pct == 0:
        return 0.0
    return 2.0 * precision_pct * recall_pct / (precision_pct + recall_pct)


def round_pct(value: float, mode: str = "half-up") -> float:
    """Round to 2 decimals on the shortest decimal spelling of ``value``."""
    try:
        rounding = _ROUNDING[mode]
    except KeyError:
        raise ValueError(f"unknown rounding mode {mode!r}") from None
    return float(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=rounding))


def macro_average(values: Sequence[float]) -> float:
    if not values:
        raise ZeroDivisionError("no values to average")
    return sum(values) / len(values)


@dataclass(frozen=True)
class TagScore:
    total: int
    correct: int
    accuracy_pct: float


@dataclass(frozen=True)
class EvalReport:
    total: int
    correct: int
    accuracy_pct: float
    precision_pct: float
    recall_pct: float
    f_measure_pct: float
    per_tag: Dict[EntityTag, TagScore] = field(default_factory=dict)
    transliteration_accuracy_pct: Optional[float] = None
    translation_accuracy_pct: Optional[float] = None
    average_accuracy_pct: Optional[float] = None


def _nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text.strip())


def evaluate(
    system_output: Sequence[str],
    gold: Sequence[str],
    tags: Optional[Sequence[EntityTag]] = None,
) -> EvalReport:
    """Score ``system_output`` against ``gold`` by exact NFC string match.

    Recall counts only items whose gold string is non-empty.  When tags are
    given, transliteration (PERSON/MISC) and translation (LOC/ORG) accuracy
    are reported separately together with their plain mean.
    """
    if len(system_output) != len(gold):
        raise ShapeError(f"{len(system_output)} system lines vs {len(gold)} gold lines")
    if tags is not None and len(tags) != len(gold):
        raise ShapeError(f"{len(tags)} tags vs {len(gold)} gold lines")
    if not gold:
        raise ZeroDivisionError("nothing to evaluate")

    hits = [_nfc(s) == _nfc(g) for s, g in zip(system_output, gold)]
    total, correct = len(hits), sum(hits)
    referenced = [h for h, g in zip(hits, gold) if _nfc(g)]
    p = precision(correct, total)
    r = recall(sum(referenced), len(referenced)) if referenced else 0.0

    per_tag: Dict[EntityTag, TagScore] = {}
    by_route: Dict[Route, List[bool]] = {}
    if tags is not None:
        grouped: Dict[EntityTag, List[bool]] = {}
        for hit, tag in zip(hits, tags):
            grouped.setdefault(tag, []).append(hit)
            by_route.setdefault(route(tag), []).append(hit)
        for tag in EntityTag:
            if tag in grouped:
                items = grouped[tag]
                per_tag[tag] = TagScore(len(items), sum(items), accuracy(sum(items), len(items)))

    def route_acc(r_):
        items = by_route.get(r_)
        return accuracy(sum(items), len(items)) if items else None

    translit = route_acc(Route.TRANSLITERATE)
    transl = route_acc(Route.TRANSLATE)
    present = [a for a in (translit, transl) if a is not None]
    return EvalReport(
        total=total,
        correct=correct,
        accuracy_pct=accuracy(correct, total),
        precision_pct=p,
        recall_pct=r,
        f_measure_pct=f_measure(p, r),
        per_tag=per_tag,
        transliteration_accuracy_pct=translit,
        translation_accuracy_pct=transl,
        average_accuracy_pct=macro_average(present) if present else None,
    )


def format_report(report: EvalReport, rounding: str = "half-up") -> str:
    """Plain-text tables followed by a ``key=value`` block."""

    def pct(x):
        return "-" if x is None else f"{round_pct(x, rounding):.2f}"

    lines = ["TEST SET                      TOTAL  CORRECT  ACCURACY (%)"]
    rows = [
        ("TRANSLITERATION (PERSON, MISC)", Route.TRANSLITERATE, report.transliteration_accuracy_pct),
        ("TRANSLATION (LOCATION, ORG)", Route.TRANSLATE, report.translation_accuracy_pct),
    ]
    for label, r_, acc in rows:
        scores = [s for t, s in report.per_tag.items() if route(t) is r_]
        if scores:
            lines.append(
                f"{label:<30}{sum(s.total for s in scores):>5}  "
                f"{sum(s.correct for s in scores):>7}  {pct(acc):>12}"
            )
    lines.append(f"{'ALL':<30}{report.total:>5}  {report.correct:>7}  {pct(report.accuracy_pct):>12}")
    if report.average_accuracy_pct is not None:
        lines.append(f"Average accuracy: {pct(report.average_accuracy_pct)}%")
    lines.append("")
    lines.append("PRECISION (%)  RECALL (%)  F-MEASURE (%)")
    lines.append(
        f"{pct(report.precision_pct):>13}  {pct(report.recall_pct):>10}  {pct(report.f_measure_pct):>13}"
    )
    lines.append("")
    kv = {
        "total": report.total,
        "correct": report.correct,
        "accuracy": pct(report.accuracy_pct),
        "precision": pct(report.precision_pct),
        "recall": pct(report.recall_pct),
        "f_measure": pct(report.f_measure_pct),
        "transliteration_accuracy": pct(report.transliteration_accuracy_pct),
        "translation_accuracy": pct(report.translation_accuracy_pct),
        "average_accuracy": pct(report.average_accuracy_pct),
    }
    for tag, score in report.per_tag.items():
        kv[f"accuracy.{tag.value}"] = pct(score.accuracy_pct)
    lines.extend(f"{k}={v}" for k, v in kv.items())
    return "\n".join(lines) + "\n"
