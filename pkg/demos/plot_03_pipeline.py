"""
Tagged sentences end to end
===========================

LOCATION and ORGANIZATION entities are looked up in the knowledge base and
transliterated only on a miss; PERSON and MISC entities are transliterated.
"""

from pathlib import Path
import tempfile

from netranslit import Pipeline, prep_corpus, seed_kb, train
from netranslit.translit_model import read_corpus

here = Path(__file__).parent
work = Path(tempfile.mkdtemp())
prep_corpus(here / "data" / "names.tsv", work / "corpus.tsv")
model = train(read_corpus(work / "corpus.tsv"))

# The seed knowledge base ships with the package.
kb = seed_kb()
print(f"knowledge base: {len(kb)} entries, version {kb.version}")

pipeline = Pipeline(model, kb)
document = (here / "data" / "sentences.txt").read_text(encoding="utf-8")
output, results = pipeline.run(document)
print(output)

# Every entity carries a provenance label and, when decoded, a score.
for r in results:
    score = "" if r.score is None else f"{r.score:.3g}"
    flag = " (grapheme fallback)" if r.grapheme_fallback else ""
    print(f"{r.entity.tag.value:13} {r.provenance:15} {r.entity.text:32} -> {r.output} {score}{flag}")

# Strict mode reads every tagged token as its own entity.
strict = Pipeline(model, kb, one_per_token=True)
print(strict.run("Priyanka/PERSON Haryana/LOCATION")[0])
