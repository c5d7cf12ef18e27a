"""
Scoring system output
=====================

Accuracy counts exact matches and precision is the same ratio.  Recall
divides by the number of non-empty gold items.
"""

from netranslit import EntityTag, evaluate
from netranslit.evaluator import format_report, round_pct

system = ["ਮੋਹਿਤ", "ਕੁਨਾਲ", "ਹਰਿਆਣਾ", "ਦਿਲੀ", "ਭਾਰਤੀ ਤਕਨੀਕੀ ਸੰਸਥਾਨ", "ਸੁਮਿਟ"]
gold = ["ਮੋਹਿਤ", "ਕੁਨਾਲ", "ਹਰਿਆਣਾ", "ਦਿੱਲੀ", "ਭਾਰਤੀ ਤਕਨੀਕੀ ਸੰਸਥਾਨ", "ਸੁਮਿਤ"]
tags = [EntityTag.PERSON, EntityTag.PERSON, EntityTag.LOCATION,
        EntityTag.LOCATION, EntityTag.ORGANIZATION, EntityTag.PERSON]

report = evaluate(system, gold, tags)
print(format_report(report))

# Empty gold items stay out of the recall denominator.
short = evaluate(system[:5] + [""], gold[:5] + [""])
print(f"precision={short.precision_pct:.2f} recall={short.recall_pct:.2f}")

# Rounding is explicit on ties.
print(round_pct(0.125, "half-up"), round_pct(0.125, "half-even"))
