"""
Counting syllable pairs and decoding
====================================

P(target | source) is a pair count over a source count.  A fixture corpus
with 99 of 104 "di" mapped to दि and 11 of 19 "leep" mapped to लीप
reproduces the Dileep example.
"""

from pathlib import Path
import tempfile

from netranslit.pipeline import prep_corpus
from netranslit.syllabifier import Syllable, SyllabifiedWord, syllabify
from netranslit.translit_model import (
    ParallelPair,
    candidates,
    decode,
    load_model,
    prob,
    read_corpus,
    save_model,
    train,
)

pairs = (
    [ParallelPair(["di", "leep"], ["दि", "लीप"])] * 11
    + [ParallelPair(["di", "leep"], ["दि", "लिप"])] * 8
    + [ParallelPair(["di"], ["दि"])] * 80
    + [ParallelPair(["di"], ["डि"])] * 5
)
model = train(pairs)
print("P(दि|di)   =", round(prob(model, "di", "दि"), 7))
print("P(लीप|leep) =", round(prob(model, "leep", "लीप"), 7))
print("di candidates:", candidates(model, "di", 5))

dileep = SyllabifiedWord("Dileep", (Syllable("di", "CV"), Syllable("leep", "CVVC")))
best = decode(model, dileep)
print(best.text, "score", best.score)

# A real corpus starts from raw names with pre-split targets.
here = Path(__file__).parent
work = Path(tempfile.mkdtemp())
stats = prep_corpus(here / "data" / "names.tsv", work / "corpus.tsv")
print(f"prepared {stats.written} pairs, {stats.rejected} rejected")
names_model = train(read_corpus(work / "corpus.tsv"))
save_model(names_model, work / "model.txt")
names_model = load_model(work / "model.txt")

for name in ["Harpreet", "Mathurawale", "Rohit", "Mohan"]:
    cand = decode(names_model, syllabify(name))
    print(f"{name:12} {cand.text:12} score={cand.score:.3g} fallback={cand.fallback}")
