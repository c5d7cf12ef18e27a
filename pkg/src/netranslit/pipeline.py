"""End-to-end entity translation over slash-tagged documents.

Each tagged entity is cleaned and routed: LOCATION and ORGANIZATION go to the
knowledge base first and fall back to transliteration on a miss; PERSON and
MISCELLANEOUS are syllabified and decoded directly.  Untagged text passes
through unchanged.
"""

from __future__ import annotations

import os
import unicodedata
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from .entity_io import Route, TaggedEntity, parse_segments, preprocess, route
from .errors import DataError, PipelineError
from .kb_translator import KnowledgeBase, load_kb, translate
from .syllabifier import DEFAULT_RULES, SyllabificationRules, load_rules, syllabify
from .translit_model import (
    DEFAULT_EPSILON,
    TransliterationModel,
    decode,
    load_model,
)

__all__ = [
    "RULES_ENV",
    "PipelineConfig",
    "EntityResult",
    "Pipeline",
    "run_pipeline",
    "prep_corpus",
    "PrepStats",
    "TRANSLATED",
    "TRANSLITERATED",
    "FALLBACK",
]

RULES_ENV = "NETRANSLIT_RULES"

# provenance labels
TRANSLATED = "translated"  # knowledge-base hit
TRANSLITERATED = "transliterated"  # PERSON / MISCELLANEOUS
FALLBACK = "fallback"  # LOCATION / ORGANIZATION missing from the KB, transliterated


@dataclass(frozen=True)
class PipelineConfig:
    model_path: os.PathLike
    kb_path: Optional[os.PathLike] = None
    rules_path: Optional[os.PathLike] = None
    strict: bool = True
    epsilon: float = DEFAULT_EPSILON
    rounding: str = "half-up"
    add_one: bool = False
    one_per_token: bool = False

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.rounding not in ("half-up", "half-even"):
            raise ValueError(f"unknown rounding mode {self.rounding!r}")

    def resolved_rules_path(self) -> Optional[str]:
        return self.rules_path or os.environ.get(RULES_ENV) or None

    def check_files(self):
        for p in (self.model_path, self.kb_path, self.resolved_rules_path()):
            if p is not None and not Path(p).is_file():
                raise FileNotFoundError(f"no such file: {p}")


@dataclass(frozen=True)
class EntityResult:
    entity: TaggedEntity
    route: Route
    output: str
    provenance: str
    score: Optional[float] = None
    grapheme_fallback: bool = False
    syllables: Tuple[str, ...] = ()

    def as_tsv(self) -> str:
        score = "" if self.score is None else repr(self.score)
        return "\t".join([
            str(self.entity.position), self.entity.tag.value, self.provenance,
            self.entity.text, self.output, score,
            "yes" if self.grapheme_fallback else "no",
        ])


@dataclass
class Pipeline:
    model: TransliterationModel
    kb: Optional[KnowledgeBase] = None
    rules: SyllabificationRules = DEFAULT_RULES
    epsilon: float = DEFAULT_EPSILON
    add_one: bool = False
    one_per_token: bool = False
    workers: int = 1

    @classmethod
    def from_config(cls, config: PipelineConfig, workers: int = 1) -> "Pipeline":
        config.check_files()
        return cls(
            model=load_model(config.model_path),
            kb=load_kb(config.kb_path) if config.kb_path else None,
            rules=load_rules(config.resolved_rules_path()),
            epsilon=config.epsilon,
            add_one=config.add_one,
            one_per_token=config.one_per_token,
            workers=workers,
        )

    def transliterate(self, text: str):
        """Decode every word of ``text``; returns (output, score, used_fallback, syllables)."""
        outputs, score, used, sylls = [], 1.0, False, []
        for word in text.split(" "):
            cand = decode(self.model, syllabify(word, self.rules), self.epsilon, self.rules, self.add_one)
            outputs.append(cand.text)
            score *= cand.score
            used = used or cand.used_fallback
            sylls.append("/".join(s for s, _, _ in cand.per_syllable))
        return " ".join(outputs), score, used, tuple(sylls)

    def process_entity(self, entity: TaggedEntity) -> EntityResult:
        try:
            clean = preprocess(entity)
            how = route(clean.tag)
            if how is Route.TRANSLATE and self.kb is not None:
                hit = translate(clean.text, self.kb)
                if hit is not None:
                    return EntityResult(clean, how, hit, TRANSLATED)
            output, score, used, sylls = self.transliterate(clean.text)
        except DataError as exc:
            raise PipelineError(entity.position, exc) from exc
        label = FALLBACK if how is Route.TRANSLATE else TRANSLITERATED
        return EntityResult(clean, how, output, label, score, used, sylls)

    def _process_line(self, segments) -> Tuple[str, List[EntityResult]]:
        pieces, results = [], []
        for seg in segments:
            if isinstance(seg, TaggedEntity):
                res = self.process_entity(seg)
                results.append(res)
                pieces.append(res.output)
            else:
                pieces.append(seg)
        return unicodedata.normalize("NFC", "".join(pieces)), results

    def run(self, document: str) -> Tuple[str, List[EntityResult]]:
        """Translate a tagged document.

        Returns the output text (one line per input line) and one
        :class:`EntityResult` per entity in document order.
        """
        lines = list(parse_segments(document, self.one_per_token))
        if self.workers > 1 and len(lines) > 1:
            with ThreadPoolExecutor(self.workers) as pool:
                done = list(pool.map(self._process_line, lines))
        else:
            done = [self._process_line(segments) for segments in lines]
        text = "\n".join(line for line, _ in done)
        if document.endswith("\n") and done:
            text += "\n"
        return text, [r for _, results in done for r in results]


def run_pipeline(document: str, config: PipelineConfig) -> Tuple[str, List[EntityResult]]:
    return Pipeline.from_config(config).run(document)


@dataclass
class PrepStats:
    written: int = 0
    rejected: int = 0
    rejects: List[Tuple[int, str, str]] = field(default_factory=list)


def prep_corpus(
    raw_path: os.PathLike,
    out_path: os.PathLike,
    rules: SyllabificationRules = DEFAULT_RULES,
    rejects_path: Optional[os.PathLike] = None,
) -> PrepStats:
    """Syllabify the source side of a ``name<TAB>target syllables`` file.

    Lines whose syllable counts disagree, or that cannot be read, go to the
    rejects file (default: ``<out>.rejects``) as ``line<TAB>reason<TAB>text``.
    """
    if rejects_path is None:
        rejects_path = str(out_path) + ".rejects"
    stats = PrepStats()
    with open(raw_path, encoding="utf-8") as fh:
        raw_lines = fh.read().splitlines()
    out_lines = []
    for lineno, line in enumerate(raw_lines, 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            stats.rejects.append((lineno, "no tab separator", line))
            continue
        name, target = line.split("\t", 1)
        target_sylls = unicodedata.normalize("NFC", target).split()
        try:
            source_sylls = syllabify(name, rules).texts
        except DataError as exc:
            stats.rejects.append((lineno, str(exc), line))
            continue
        if len(source_sylls) != len(target_sylls):
            stats.rejects.append((
                lineno,
                f"{len(source_sylls)} source syllables ({'/'.join(source_sylls)}) "
                f"vs {len(target_sylls)} target syllables",
                line,
            ))
            continue
        out_lines.append(f"{' '.join(source_sylls)}\t{' '.join(target_sylls)}")
    stats.written = len(out_lines)
    stats.rejected = len(stats.rejects)
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.writelines(line + "\n" for line in out_lines)
    with open(rejects_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.writelines(f"{n}\t{why}\t{text}\n" for n, why, text in stats.rejects)
    return stats
