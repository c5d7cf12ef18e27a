"""Syllable-pair relative-frequency model and argmax decoder.

Training counts how often each source syllable is aligned with each target
syllable in a positionally aligned parallel corpus.  The conditional
probability of a target given a source syllable is the ratio

    P(t | s) = C(s, t) / C(s)

and a word is transliterated by choosing the most probable target for each
of its syllables independently; the word score is the product of the chosen
probabilities.  Syllables never seen in training are spelled out unit by
unit from a grapheme map and contribute a small floor probability instead.
"""

from __future__ import annotations

import logging
import math
import os
import unicodedata
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .errors import (
    AlignmentError,
    EmptyCorpus,
    FormatError,
    UntransliterableSyllable,
    VersionError,
)
from .syllabifier import DEFAULT_RULES, SyllabificationRules, SyllabifiedWord, segment_units

__all__ = [
    "MODEL_HEADER",
    "DEFAULT_EPSILON",
    "GURMUKHI_FALLBACK",
    "ParallelPair",
    "TransliterationModel",
    "TransliterationCandidate",
    "train",
    "prob",
    "candidates",
    "decode",
    "fallback_syllable",
    "save_model",
    "load_model",
    "read_corpus",
    "parse_corpus_line",
]

log = logging.getLogger(__name__)

MODEL_FORMAT = "netranslit-model"
MODEL_VERSION = "v1"
MODEL_HEADER = f"{MODEL_FORMAT} {MODEL_VERSION}"
DEFAULT_EPSILON = 1e-6

# Unit -> Gurmukhi grapheme for unseen syllables.  Vowels map to their
# dependent signs; "#"-prefixed keys hold the independent vowel letters used
# when a vowel opens the syllable.  Geminates without an entry are written
# as addak + consonant.
GURMUKHI_FALLBACK: Dict[str, str] = {
    "a": "ਾ", "e": "ੇ", "i": "ਿ", "o": "ੋ", "u": "ੁ",
    "#a": "ਅ", "#e": "ਏ", "#i": "ਇ", "#o": "ਓ", "#u": "ਉ",
    "b": "ਬ", "c": "ਕ", "d": "ਦ", "f": "ਫ਼", "g": "ਗ", "h": "ਹ", "j": "ਜ",
    "k": "ਕ", "l": "ਲ", "m": "ਮ", "n": "ਨ", "p": "ਪ", "q": "ਕ", "r": "ਰ",
    "s": "ਸ", "t": "ਤ", "v": "ਵ", "w": "ਵ", "x": "ਕ੍ਸ", "y": "ਯ", "z": "ਜ਼",
    "bh": "ਭ", "ch": "ਚ", "dh": "ਧ", "gh": "ਘ", "kh": "ਖ", "ph": "ਫ",
    "sh": "ਸ਼", "th": "ਥ", "ty": "ਟੀ", "ny": "ਨੀ",
    "tion": "ਸ਼ਨ", "sion": "ਜ਼ਨ", "ment": "ਮੈਂਟ",
}
_ADDAK = "ੱ"
_Y_NUCLEUS = "ੀ"


def _nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


@dataclass(frozen=True)
class ParallelPair:
    source_syllables: Tuple[str, ...]
    target_syllables: Tuple[str, ...]

    def __init__(self, source_syllables: Iterable[str], target_syllables: Iterable[str]):
        object.__setattr__(self, "source_syllables", tuple(s.lower() for s in source_syllables))
        object.__setattr__(self, "target_syllables", tuple(_nfc(t) for t in target_syllables))

    @property
    def aligned(self) -> bool:
        return bool(self.source_syllables) and len(self.source_syllables) == len(self.target_syllables)


@dataclass
class TransliterationModel:
    joint_counts: Dict[Tuple[str, str], int]
    grapheme_fallback: Dict[str, str] = field(default_factory=lambda: dict(GURMUKHI_FALLBACK))
    version: str = MODEL_VERSION
    skipped_pairs: int = field(default=0, compare=False)

    def __post_init__(self):
        self.joint_counts = {k: v for k, v in self.joint_counts.items() if v}
        self.source_counts: Dict[str, int] = Counter()
        self._targets: Dict[str, Dict[str, int]] = defaultdict(dict)
        for (s, t), c in self.joint_counts.items():
            if c < 0:
                raise ValueError(f"negative count for {(s, t)!r}")
            self.source_counts[s] += c
            self._targets[s][t] = c
        self.source_counts = dict(self.source_counts)
        self._targets = dict(self._targets)
        self._vocab_size = len({t for _, t in self.joint_counts})

    def targets(self, source: str) -> Mapping[str, int]:
        return self._targets.get(source, {})

    @property
    def sources(self) -> List[str]:
        return sorted(self.source_counts)


@dataclass(frozen=True)
class TransliterationCandidate:
    target_syllables: Tuple[str, ...]
    score: float
    per_syllable: Tuple[Tuple[str, str, float], ...]
    fallback: Tuple[bool, ...] = ()

    @property
    def text(self) -> str:
        return _nfc("".join(self.target_syllables))

    @property
    def used_fallback(self) -> bool:
        return any(self.fallback)


def _check_syllables(pair: ParallelPair, index: int):
    for syl in pair.source_syllables + pair.target_syllables:
        if not syl or any(ch.isspace() for ch in syl):
            raise AlignmentError(f"empty syllable or syllable containing whitespace: {syl!r}", index)


def train(
    pairs: Iterable[ParallelPair],
    strict: bool = True,
    fallback: Optional[Mapping[str, str]] = None,
) -> TransliterationModel:
    """Count aligned syllable pairs.

    In strict mode a pair whose two sides differ in length raises
    :class:`AlignmentError`; otherwise such pairs are skipped and counted in
    ``model.skipped_pairs``.
    """
    joint: Counter = Counter()
    used = skipped = 0
    for index, pair in enumerate(pairs):
        if not pair.aligned:
            if strict:
                raise AlignmentError(
                    f"{len(pair.source_syllables)} source vs "
                    f"{len(pair.target_syllables)} target syllables",
                    index,
                )
            skipped += 1
            continue
        _check_syllables(pair, index)
        joint.update(zip(pair.source_syllables, pair.target_syllables))
        used += 1
    if skipped:
        log.warning("skipped %d misaligned pair(s)", skipped)
    if not used:
        raise EmptyCorpus("no usable training pairs")
    fb = dict(GURMUKHI_FALLBACK if fallback is None else fallback)
    return TransliterationModel(dict(joint), fb, skipped_pairs=skipped)


def prob(model: TransliterationModel, source_syll: str, target_syll: str, add_one: bool = False) -> float:
    """P(target | source) by relative frequency; 0.0 for an unseen source.

    With ``add_one`` the counts are Laplace-smoothed over the target
    syllable vocabulary.
    """
    total = model.source_counts.get(source_syll, 0)
    if not total:
        return 0.0
    count = model.targets(source_syll).get(_nfc(target_syll), 0)
    if add_one:
        return (count + 1) / (total + model._vocab_size)
    return count / total


def candidates(
    model: TransliterationModel, source_syll: str, k: int = 1, add_one: bool = False
) -> List[Tuple[str, float]]:
    """The ``k`` most probable observed targets, ties in code-point order."""
    if k < 1:
        raise ValueError("k must be positive")
    ranked = sorted(model.targets(source_syll).items(), key=lambda tc: (-tc[1], tc[0]))
    return [(t, prob(model, source_syll, t, add_one)) for t, _ in ranked[:k]]


def fallback_syllable(
    syllable: str,
    fallback: Mapping[str, str],
    rules: SyllabificationRules = DEFAULT_RULES,
) -> str:
    """Spell an unseen syllable unit by unit from the grapheme map."""
    units = segment_units(syllable, rules)
    out = []
    for i, unit in enumerate(units):
        prev = units[i - 1] if i else None
        out.append(_fallback_unit(syllable, unit, prev, i == len(units) - 1, fallback, rules))
    return _nfc("".join(out))


def _fallback_unit(syllable, unit, prev, last, fallback, rules):
    if prev is None and unit in rules.vowels and "#" + unit in fallback:
        return fallback["#" + unit]
    if unit == "y" and last and prev is not None and prev not in rules.vowels:
        return _Y_NUCLEUS
    if unit in fallback:
        return fallback[unit]
    if len(unit) == 2 and unit[0] == unit[1] and unit[0] in fallback:
        return _ADDAK + fallback[unit[0]]
    if len(unit) > 1 and all(ch in fallback for ch in unit):
        return "".join(fallback[ch] for ch in unit)
    raise UntransliterableSyllable(syllable, unit)


def decode(
    model: TransliterationModel,
    word: SyllabifiedWord,
    epsilon: float = DEFAULT_EPSILON,
    rules: SyllabificationRules = DEFAULT_RULES,
    add_one: bool = False,
) -> TransliterationCandidate:
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must lie in (0, 1)")
    chosen, per_syllable, used_fallback = [], [], []
    for syl in word.syllables:
        source = syl.text
        best = candidates(model, source, 1, add_one)
        if best:
            target, p = best[0]
            used_fallback.append(False)
        else:
            target, p = fallback_syllable(source, model.grapheme_fallback, rules), epsilon
            used_fallback.append(True)
        chosen.append(target)
        per_syllable.append((source, target, p))
    score = math.prod(p for _, _, p in per_syllable)
    return TransliterationCandidate(tuple(chosen), score, tuple(per_syllable), tuple(used_fallback))


# ---------------------------------------------------------------------------
# model files


def save_model(model: TransliterationModel, path: os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{MODEL_FORMAT} {model.version}\n")
        for (s, t), c in sorted(model.joint_counts.items()):
            fh.write(f"J\t{s}\t{t}\t{c}\n")
        for unit, grapheme in sorted(model.grapheme_fallback.items()):
            fh.write(f"F\t{unit}\t{grapheme}\n")


def load_model(path: os.PathLike) -> TransliterationModel:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().split("\n")
    where = str(path)
    header = lines[0].lstrip("﻿").strip() if lines else ""
    if not header:
        raise FormatError("missing model header", line=1, path=where)
    parts = header.split()
    if len(parts) != 2 or parts[0] != MODEL_FORMAT:
        raise FormatError(f"not a model file (header {header!r})", line=1, path=where)
    if parts[1] != MODEL_VERSION:
        raise VersionError(f"unsupported model version {parts[1]!r}", line=1, path=where)

    joint: Dict[Tuple[str, str], int] = {}
    fallback: Dict[str, str] = {}
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        fields = line.split("\t")
        kind = fields[0]
        if kind == "J" and len(fields) == 4 and fields[1] and fields[2]:
            try:
                count = int(fields[3])
            except ValueError:
                raise FormatError(f"bad count {fields[3]!r}", line=lineno, path=where) from None
            if count < 0:
                raise FormatError("negative count", line=lineno, path=where)
            key = (fields[1], _nfc(fields[2]))
            if key in joint:
                raise FormatError(f"duplicate pair {key!r}", line=lineno, path=where)
            joint[key] = count
        elif kind == "F" and len(fields) == 3 and fields[1]:
            fallback[fields[1]] = _nfc(fields[2])
        else:
            raise FormatError(f"corrupt record {line!r}", line=lineno, path=where)
    return TransliterationModel(joint, fallback, parts[1])


# ---------------------------------------------------------------------------
# training corpora


def parse_corpus_line(line: str, lineno: Optional[int] = None, path=None) -> ParallelPair:
    if "\t" not in line:
        raise FormatError("expected 'source syllables<TAB>target syllables'", line=lineno, path=path)
    source, target = line.split("\t", 1)
    return ParallelPair(source.split(), target.split())


def read_corpus(path: os.PathLike) -> List[ParallelPair]:
    """Read a syllabified TSV corpus (``mo hit<TAB>ਮੋ ਹਿਤ``); ``#`` lines are comments."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            pairs.append(parse_corpus_line(line, lineno, str(path)))
    return pairs
