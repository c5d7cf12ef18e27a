"""
Syllabifying names
==================

Words are cut into grapheme units, vowels anchor syllables, and consonant
runs between two vowels are shared out between coda and onset.
"""

from netranslit.syllabifier import (
    SyllabificationRules,
    mark_nuclei,
    segment_units,
    syllabify,
)

for name in ["Aya", "Silki", "Ashka", "Ridhima", "Orissa", "Abhika",
             "ubiety", "ability", "Mohit", "Kunal", "Haryana"]:
    word = syllabify(name)
    print(f"{name:10} {'/'.join(word.texts):14} {' '.join(s.pattern for s in word.syllables)}")

# Units first: digraphs and geminates stay together, "ty" closes "ability".
print(segment_units("orissa"), segment_units("ability"))
print(mark_nuclei(segment_units("ubiety")))

# Every rule set is data.  Keeping "ee" as one nucleus changes Harpreet:
long_vowels = SyllabificationRules(diphthongs={"ee", "oo"})
print(syllabify("Harpreet"), "->", syllabify("Harpreet", long_vowels))

# Whole units such as "tion" are never split.
print(syllabify("nation"), syllabify("mission"), syllabify("mention"))
