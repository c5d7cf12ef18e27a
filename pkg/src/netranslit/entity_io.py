"""Slash-tagged NER input: parsing, cleaning and routing.

The recognizer writes entities as ``token/TAG``::

    Mina/PERSON is going to Hyderabad/LOCATION
    Priyanka/PERSON is going to Delhi University/ORGANIZATION

Stanford-style ``word/O`` tokens are treated as plain text, and ``MISC`` is
accepted as a spelling of ``MISCELLANEOUS``.  A multi-word entity is either
a run of tokens carrying the same tag, or a single tag attached to the last
token of a capitalized group (``Indian Institute of Technology/ORGANIZATION``).
"""

from __future__ import annotations

import enum
import re
import unicodedata
from dataclasses import dataclass, replace
from typing import Iterator, List, Union

from .errors import EmptyEntity, ParseError, UnknownTag

__all__ = [
    "EntityTag",
    "Route",
    "TaggedEntity",
    "parse_tagged",
    "parse_segments",
    "render",
    "preprocess",
    "route",
]


class EntityTag(enum.Enum):
    PERSON = "PERSON"
    LOCATION = "LOCATION"
    ORGANIZATION = "ORGANIZATION"
    MISCELLANEOUS = "MISCELLANEOUS"

    @classmethod
    def parse(cls, name: str) -> "EntityTag":
        name = _TAG_ALIASES.get(name, name)
        try:
            return cls(name)
        except ValueError:
            raise UnknownTag(f"unknown entity tag {name!r}") from None


_TAG_ALIASES = {"MISC": "MISCELLANEOUS", "PER": "PERSON", "LOC": "LOCATION", "ORG": "ORGANIZATION"}
_OUTSIDE = "O"


class Route(enum.Enum):
    TRANSLATE = "translate"
    TRANSLITERATE = "transliterate"


_ROUTES = {
    EntityTag.PERSON: Route.TRANSLITERATE,
    EntityTag.MISCELLANEOUS: Route.TRANSLITERATE,
    EntityTag.LOCATION: Route.TRANSLATE,
    EntityTag.ORGANIZATION: Route.TRANSLATE,
}


def route(tag: EntityTag) -> Route:
    return _ROUTES[tag]


@dataclass(frozen=True)
class TaggedEntity:
    text: str
    tag: EntityTag
    position: int = 0


# A document line is parsed into plain-text pieces (kept verbatim) and entities.
Segment = Union[str, TaggedEntity]

_TAGGED = re.compile(r"^(?P<text>.*)/(?P<tag>[A-Za-z_]*)(?P<trail>[.,;:!?\"')\]]*)$")
# lowercase words allowed inside a capitalized multi-word entity
_CONNECTORS = frozenset({"of", "the", "and", "for", "de", "da", "di", "la", "van", "von", "&"})


@dataclass
class _Token:
    text: str
    tag: object  # EntityTag, None for plain text
    trail: str
    column: int
    ws_before: str
    outside: bool = False  # explicit /O token


def _tokenize(line: str, lineno: int) -> List[_Token]:
    tokens = []
    ws = ""
    for m in re.finditer(r"(\s+)|(\S+)", line):
        if m.group(1):
            ws = m.group(1)
            continue
        raw, column = m.group(2), m.start() + 1
        tm = _TAGGED.match(raw)
        tag, text, trail, outside = None, raw, "", False
        if tm and not tm.group("tag").islower():
            name = tm.group("tag")
            if not name or not tm.group("text"):
                raise ParseError(f"malformed tag suffix in {raw!r}", lineno, column)
            if not name.isupper():
                raise ParseError(f"malformed tag suffix {name!r} in {raw!r}", lineno, column)
            text, trail = tm.group("text"), tm.group("trail")
            if name == _OUTSIDE:
                outside = True
            else:
                try:
                    tag = EntityTag.parse(name)
                except UnknownTag as exc:
                    raise UnknownTag(str(exc), lineno, column) from None
        tokens.append(_Token(text, tag, trail, column, ws, outside))
        ws = ""
    return tokens


def _group_start(tokens: List[_Token], end: int, taken: int) -> int:
    """Index of the first untagged token that belongs to the entity ending at ``end``."""
    def free(k):
        tok = tokens[k]
        return k >= taken and tok.tag is None and not tok.outside and tok.text[-1:].isalnum()

    start = end
    j = end - 1
    while free(j):
        word = tokens[j].text
        if word[:1].isupper():
            start = j
        elif not (word.lower() in _CONNECTORS and free(j - 1) and tokens[j - 1].text[:1].isupper()):
            break
        j -= 1
    return start


def _parse_line(line: str, lineno: int, position: int, one_per_token: bool):
    tokens = _tokenize(line, lineno)
    # spans of (start, end_inclusive, tag)
    spans = []
    i, taken = 0, 0
    while i < len(tokens):
        tag = tokens[i].tag
        if tag is None:
            i += 1
            continue
        j = i
        if not one_per_token:
            while j + 1 < len(tokens) and tokens[j + 1].tag is tag and not tokens[j].trail:
                j += 1
        start = i if one_per_token or j > i else _group_start(tokens, i, taken)
        spans.append((start, j, tag))
        taken = i = j + 1

    segments: List[Segment] = []
    pending = []

    def flush_text():
        if pending:
            segments.append("".join(pending))
            pending.clear()

    k = 0
    for start, end, tag in spans:
        for tok in tokens[k:start]:
            pending.append(tok.ws_before + tok.text + tok.trail)
        pending.append(tokens[start].ws_before)
        flush_text()
        text = " ".join(tok.text for tok in tokens[start:end + 1])
        segments.append(TaggedEntity(text, tag, position))
        position += 1
        pending.append(tokens[end].trail)
        k = end + 1
    for tok in tokens[k:]:
        pending.append(tok.ws_before + tok.text + tok.trail)
    tail = line[len(line.rstrip()):]
    pending.append(tail)
    flush_text()
    return [s for s in segments if s != ""], position


def parse_segments(document: str, one_per_token: bool = False) -> Iterator[List[Segment]]:
    """Yield, per input line, the list of plain-text pieces and entities.

    Joining the pieces with each entity replaced by some string rebuilds the
    line with the tags removed.
    """
    position = 0
    for lineno, line in enumerate(document.splitlines(), 1):
        segments, position = _parse_line(line, lineno, position, one_per_token)
        yield segments


def parse_tagged(document: str, one_per_token: bool = False) -> List[TaggedEntity]:
    """All tagged entities of ``document`` in reading order, numbered from 0."""
    return [
        seg
        for segments in parse_segments(document, one_per_token)
        for seg in segments
        if isinstance(seg, TaggedEntity)
    ]


def render(entities: List[TaggedEntity]) -> str:
    """Write entities back in slash-tag form, one per line.

    Every token of a multi-word entity carries the tag, so the output parses
    back to the same entities whatever their capitalization.
    """
    return "\n".join(
        " ".join(f"{word}/{e.tag.value}" for word in e.text.split(" ")) for e in entities
    )


_SEPARATORS = re.compile(r"[\s,\-‐-―/_]+")


def preprocess(entity: TaggedEntity) -> TaggedEntity:
    """Strip tag leftovers and punctuation; keep letters, digits and single spaces."""
    text = re.sub(r"/[A-Z]+\b", " ", entity.text)
    text = _SEPARATORS.sub(" ", text)
    kept = "".join(
        ch for ch in text
        if ch == " " or unicodedata.category(ch)[0] in "LMN"
    )
    cleaned = " ".join(kept.split())
    if not cleaned:
        raise EmptyEntity(f"entity {entity.position} is empty after cleaning: {entity.text!r}")
    return replace(entity, text=cleaned)
