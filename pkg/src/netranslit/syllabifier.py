"""Rule-driven syllabification of Latin-script names.

A word is first cut into grapheme units (whole units such as ``tion``,
geminate consonants, consonant digraphs, single letters).  Vowel units
become syllable nuclei and the consonant runs between nuclei are divided
between coda and onset::

    >>> [s.text for s in syllabify("Haryana").syllables]
    ['har', 'ya', 'na']
    >>> [s.text for s in syllabify("ubiety").syllables]
    ['u', 'bi', 'e', 'ty']

Every knob lives in :class:`SyllabificationRules` and can be loaded from a
``key = value`` text file with :func:`load_rules`.
"""

from __future__ import annotations

import os
import string
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence

from .errors import EmptyWord, RulesError, UnsupportedScript

__all__ = [
    "SyllabificationRules",
    "Syllable",
    "SyllabifiedWord",
    "DEFAULT_RULES",
    "segment_units",
    "mark_nuclei",
    "syllabify",
    "syllable_pattern",
    "load_rules",
    "parse_rules",
    "format_rules",
]

_LOWER = frozenset(string.ascii_lowercase)


def _check_units(name, units, length=None, min_length=1):
    for unit in units:
        if not unit or not set(unit) <= _LOWER:
            raise RulesError(f"{name}: {unit!r} is not a lowercase a-z string")
        if length is not None and len(unit) != length:
            raise RulesError(f"{name}: {unit!r} must have exactly {length} letters")
        if len(unit) < min_length:
            raise RulesError(f"{name}: {unit!r} must have at least {min_length} letters")


@dataclass(frozen=True)
class SyllabificationRules:
    vowels: FrozenSet[str] = frozenset("aeiou")
    consonant_digraphs: FrozenSet[str] = frozenset(
        {"sh", "gh", "ty", "ny", "ch", "th", "ph", "kh", "bh", "dh"}
    )
    whole_units: FrozenSet[str] = frozenset({"tion", "sion", "ment"})
    diphthongs: FrozenSet[str] = frozenset()
    final_y_is_nucleus: bool = True
    # derived, longest first so that segmentation is a longest match
    _whole_sorted: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("vowels", "consonant_digraphs", "whole_units", "diphthongs"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        _check_units("vowels", self.vowels, length=1)
        _check_units("consonant_digraphs", self.consonant_digraphs, length=2)
        _check_units("whole_units", self.whole_units, min_length=3)
        _check_units("diphthongs", self.diphthongs, length=2)
        for pair in self.diphthongs:
            if not set(pair) <= self.vowels:
                raise RulesError(f"diphthongs: {pair!r} is not a pair of vowels")
        for a in self.whole_units:
            for b in self.whole_units:
                if a != b and b.startswith(a):
                    raise RulesError(f"whole_units: {a!r} is a prefix of {b!r}")
        object.__setattr__(
            self, "_whole_sorted", tuple(sorted(self.whole_units, key=lambda u: (-len(u), u)))
        )

    def is_consonant_letter(self, letter: str) -> bool:
        return letter not in self.vowels


DEFAULT_RULES = SyllabificationRules()


@dataclass(frozen=True)
class Syllable:
    text: str
    pattern: str

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class SyllabifiedWord:
    original: str
    syllables: tuple

    @property
    def texts(self) -> List[str]:
        return [s.text for s in self.syllables]

    def __str__(self):
        return "/".join(self.texts)


def segment_units(word: str, rules: SyllabificationRules = DEFAULT_RULES) -> List[str]:
    """Tokenize a lowercase a-z word into grapheme units.

    At each position the first of these that matches wins: a whole unit
    (longest first), a geminate consonant pair, a consonant digraph, a
    single letter.  A multi-letter unit is not taken when a whole unit
    starts inside it, so ``mission`` keeps ``sion`` and ``mention`` keeps
    ``tion`` intact.
    """
    if not word:
        raise EmptyWord("cannot segment an empty word")
    if not set(word) <= _LOWER:
        raise UnsupportedScript(f"segment_units expects lowercase a-z, got {word!r}")
    whole_starts = {
        i for i in range(len(word)) for unit in rules._whole_sorted if word.startswith(unit, i)
    }
    units = []
    i, n = 0, len(word)
    while i < n:
        for unit in rules._whole_sorted:
            if word.startswith(unit, i):
                break
        else:
            pair = word[i:i + 2]
            if len(pair) == 2 and pair[0] == pair[1] and rules.is_consonant_letter(pair[0]):
                unit = pair
            elif pair in rules.consonant_digraphs:
                unit = pair
            else:
                unit = word[i]
        if len(unit) > 1 and any(j in whole_starts for j in range(i + 1, i + len(unit))):
            unit = word[i]
        units.append(unit)
        i += len(unit)
    return units


def _is_final_y_nucleus(units: Sequence[str], i: int, rules: SyllabificationRules) -> bool:
    if not rules.final_y_is_nucleus or i != len(units) - 1:
        return False
    unit = units[i]
    if not unit.endswith("y") or unit in rules.whole_units:
        return False
    if len(unit) > 1:
        # "ty", "ny": the consonant sits inside the unit
        return rules.is_consonant_letter(unit[-2])
    return i > 0 and _unit_is_consonant(units[i - 1], rules)


def _unit_is_consonant(unit: str, rules: SyllabificationRules) -> bool:
    return unit not in rules.vowels and unit not in rules.whole_units


def _classify(units: Sequence[str], rules: SyllabificationRules) -> List[str]:
    """Per-unit role: 'N' nucleus, 'n' diphthong tail, 'W' whole unit, 'C' consonant."""
    roles = []
    for i, unit in enumerate(units):
        if unit in rules.whole_units:
            roles.append("W")
        elif unit in rules.vowels:
            if i > 0 and roles[-1] == "N" and units[i - 1] + unit in rules.diphthongs:
                roles.append("n")
            else:
                roles.append("N")
        elif _is_final_y_nucleus(units, i, rules):
            roles.append("N")
        else:
            roles.append("C")
    return roles


def mark_nuclei(units: Sequence[str], rules: SyllabificationRules = DEFAULT_RULES) -> List[bool]:
    """True for every unit that anchors a syllable.

    The second vowel of a configured diphthong is not a separate nucleus.
    Whole units count as nucleus-bearing.
    """
    return [role in "NW" for role in _classify(units, rules)]


def _unit_pattern(unit: str, role: str, rules: SyllabificationRules) -> str:
    if role == "W":
        return "".join("V" if ch in rules.vowels else "C" for ch in unit)
    return "V" if role in "Nn" else "C"


def _clean(word: str) -> str:
    letters = []
    for ch in word:
        if not ch.isalpha():
            continue
        if not ch.isascii():
            raise UnsupportedScript(f"non-Latin letter {ch!r} in {word!r}")
        letters.append(ch.lower())
    if not letters:
        raise EmptyWord(f"no letters in {word!r}")
    return "".join(letters)


def syllabify(word: str, rules: SyllabificationRules = DEFAULT_RULES) -> SyllabifiedWord:
    """Split ``word`` into syllables.

    Non-letters are dropped and case is folded; ``original`` keeps the input.
    Between two nuclei a single consonant unit starts the next syllable;
    a longer run leaves its last unit to the next syllable (or from the
    first geminate on, when the run holds one).  Consonants in front of a
    whole unit close the previous syllable.  A word without any nucleus is
    returned as one syllable.
    """
    clean = _clean(word)
    units = segment_units(clean, rules)
    roles = _classify(units, rules)

    # groups of unit indices, one per syllable
    anchors = [i for i, r in enumerate(roles) if r in "NW"]
    if not anchors:
        groups = [list(range(len(units)))]
    else:
        starts = [0]
        for prev, nxt in zip(anchors, anchors[1:]):
            # extend the previous nucleus over diphthong tails
            end = prev
            while end + 1 < nxt and roles[end + 1] == "n":
                end += 1
            run = list(range(end + 1, nxt))
            if roles[nxt] == "W":
                split = nxt
            elif len(run) <= 1:
                split = run[0] if run else nxt
            else:
                gem = [j for j in run if len(units[j]) == 2 and units[j][0] == units[j][1]]
                split = gem[0] if gem else run[-1]
            starts.append(split)
        starts.append(len(units))
        groups = [list(range(a, b)) for a, b in zip(starts, starts[1:])]

    syllables = []
    for group in groups:
        text = "".join(units[j] for j in group)
        pattern = "".join(_unit_pattern(units[j], roles[j], rules) for j in group)
        syllables.append(Syllable(text, pattern))
    return SyllabifiedWord(word, tuple(syllables))


def syllable_pattern(syllable_text: str, rules: SyllabificationRules = DEFAULT_RULES) -> str:
    """V/C pattern of one syllable, one symbol per unit.

    >>> syllable_pattern("dhi")
    'CV'

    Whole units are spelled out letter by letter (``tion`` -> ``CVVC``).
    """
    if not syllable_text:
        raise EmptyWord("cannot classify an empty syllable")
    units = segment_units(syllable_text.lower(), rules)
    roles = _classify(units, rules)
    return "".join(_unit_pattern(u, r, rules) for u, r in zip(units, roles))


# ---------------------------------------------------------------------------
# rules files

_SET_KEYS = ("vowels", "consonant_digraphs", "whole_units", "diphthongs")
_BOOL_WORDS = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def parse_rules(text: str, base: SyllabificationRules = DEFAULT_RULES) -> SyllabificationRules:
    """Parse ``key = value`` lines; keys not given keep their value from ``base``."""
    values = {
        "vowels": base.vowels,
        "consonant_digraphs": base.consonant_digraphs,
        "whole_units": base.whole_units,
        "diphthongs": base.diphthongs,
        "final_y_is_nucleus": base.final_y_is_nucleus,
    }
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise RulesError(f"rules line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in _SET_KEYS:
            values[key] = frozenset(v.strip().lower() for v in value.split(",") if v.strip())
        elif key == "final_y_is_nucleus":
            try:
                values[key] = _BOOL_WORDS[value.lower()]
            except KeyError:
                raise RulesError(f"rules line {lineno}: not a boolean: {value!r}") from None
        else:
            raise RulesError(f"rules line {lineno}: unknown key {key!r}")
    return SyllabificationRules(**values)


def load_rules(path: Optional[os.PathLike] = None) -> SyllabificationRules:
    if path is None:
        return DEFAULT_RULES
    with open(path, encoding="utf-8") as fh:
        return parse_rules(fh.read())


def format_rules(rules: SyllabificationRules) -> str:
    lines = [f"{key} = {', '.join(sorted(getattr(rules, key)))}" for key in _SET_KEYS]
    lines.append(f"final_y_is_nucleus = {'true' if rules.final_y_is_nucleus else 'false'}")
    return "\n".join(lines) + "\n"
