"""Whole-phrase bilingual knowledge base for LOCATION/ORGANIZATION entities.

KB files are UTF-8, one ``source<TAB>target`` pair per line, ``#`` starts a
comment line.  An optional ``# version: ...`` comment is kept as metadata.
Lookups are case- and whitespace-insensitive on the source side and never
compose a translation from parts of a phrase.
"""

from __future__ import annotations

import logging
import os
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from types import MappingProxyType
from typing import List, Mapping, Optional, Tuple

from .errors import FormatError

__all__ = ["KnowledgeBase", "normalize_phrase", "load_kb", "parse_kb", "translate", "seed_kb"]

log = logging.getLogger(__name__)


def normalize_phrase(text: str) -> str:
    return " ".join(text.lower().split())


@dataclass(frozen=True)
class KnowledgeBase:
    entries: Mapping[str, str]
    path: Optional[str] = None
    version: Optional[str] = None
    duplicates: Tuple[str, ...] = field(default=(), compare=False)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, phrase):
        return normalize_phrase(phrase) in self.entries

    @property
    def warning_count(self) -> int:
        return len(self.duplicates)


def parse_kb(lines, path=None) -> KnowledgeBase:
    entries = {}
    duplicates: List[str] = []
    version = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if lineno == 1:
            line = line.lstrip("﻿")
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.lower().startswith("version:") and version is None:
                version = body.split(":", 1)[1].strip()
            continue
        if "\t" not in line:
            raise FormatError("expected 'source<TAB>target'", line=lineno, path=path)
        source, target = line.split("\t", 1)
        key = normalize_phrase(source)
        target = unicodedata.normalize("NFC", target.strip())
        if not key or not target:
            raise FormatError("empty source or target phrase", line=lineno, path=path)
        if key in entries:
            duplicates.append(key)
            log.warning("%s:%d: duplicate KB key %r, keeping the later entry", path, lineno, key)
        entries[key] = target
    return KnowledgeBase(MappingProxyType(entries), path, version, tuple(duplicates))


def load_kb(path: os.PathLike) -> KnowledgeBase:
    """Read a KB file.  A missing file raises :class:`FileNotFoundError`."""
    with open(path, encoding="utf-8") as fh:
        return parse_kb(fh, path=str(path))


def seed_kb() -> KnowledgeBase:
    """The small KB shipped with the package."""
    ref = resources.files("netranslit") / "data" / "seed_kb.tsv"
    with ref.open(encoding="utf-8") as fh:
        return parse_kb(fh, path="<seed_kb.tsv>")


def translate(entity_text: str, kb: KnowledgeBase) -> Optional[str]:
    """Target phrase for the whole of ``entity_text``, or None on a miss."""
    return kb.entries.get(normalize_phrase(entity_text))
