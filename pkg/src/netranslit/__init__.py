"""netranslit: named-entity translation and syllable-based transliteration.

Modules:
    syllabifier:   rule-based syllable extraction for Latin-script names
    entity_io:     slash-tagged NER input parsing, cleaning and routing
    kb_translator: whole-phrase bilingual knowledge base
    translit_model: syllable-pair relative-frequency model and decoder
    evaluator:     accuracy / precision / recall / F-measure
    pipeline:      end-to-end document processing and corpus preparation
    cli:           ``netranslit`` command line tool
"""

__version__ = "0.1.0"

from .entity_io import EntityTag, Route, TaggedEntity, parse_tagged, preprocess, route
from .evaluator import EvalReport, accuracy, evaluate, f_measure, precision, recall
from .kb_translator import KnowledgeBase, load_kb, seed_kb, translate
from .pipeline import Pipeline, PipelineConfig, prep_corpus, run_pipeline
from .syllabifier import (
    DEFAULT_RULES,
    SyllabificationRules,
    SyllabifiedWord,
    load_rules,
    syllabify,
)
from .translit_model import (
    ParallelPair,
    TransliterationModel,
    candidates,
    decode,
    load_model,
    prob,
    save_model,
    train,
)
