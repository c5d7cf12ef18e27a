"""Command line interface.

    netranslit prep  --in raw.tsv --out corpus.tsv [--rules rules.cfg]
    netranslit train --in corpus.tsv --out model.txt [--strict]
    netranslit run   --model model.txt [--kb kb.tsv] [--rules rules.cfg] < tagged.txt
    netranslit eval  --system sys.txt --gold gold.txt [--tags tags.txt]
    netranslit kb validate kb.tsv

Exit codes: 0 success, 1 usage error, 2 data/format error, 3 internal error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from collections import Counter

from . import __version__
from .entity_io import EntityTag
from .errors import DataError, NetranslitError, PipelineError
from .evaluator import evaluate, format_report
from .kb_translator import load_kb
from .pipeline import RULES_ENV, Pipeline, PipelineConfig, prep_corpus
from .syllabifier import load_rules
from .translit_model import GURMUKHI_FALLBACK, read_corpus, save_model, train

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_lines(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read().splitlines()


def _rules_path(args):
    return args.rules or os.environ.get(RULES_ENV)


def cmd_prep(args):
    rules = load_rules(_rules_path(args))
    stats = prep_corpus(args.input, args.output, rules, args.rejects)
    print(f"written={stats.written} rejected={stats.rejected}", file=sys.stderr)
    return EXIT_OK


def _read_fallback(path):
    mapping = {}
    for lineno, line in enumerate(_read_lines(path), 1):
        if not line.strip() or line.startswith("#"):
            continue
        if "\t" not in line:
            raise DataError(f"{path}: line {lineno}: expected 'unit<TAB>grapheme'")
        unit, grapheme = line.split("\t", 1)
        mapping[unit.strip()] = grapheme.strip()
    return mapping


def cmd_train(args):
    pairs = read_corpus(args.input)
    fallback = _read_fallback(args.fallback) if args.fallback else GURMUKHI_FALLBACK
    model = train(pairs, strict=args.strict, fallback=fallback)
    save_model(model, args.output)
    print(
        f"pairs={len(pairs) - model.skipped_pairs} skipped={model.skipped_pairs} "
        f"source_syllables={len(model.source_counts)} joint_pairs={len(model.joint_counts)}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_run(args):
    config = PipelineConfig(
        model_path=args.model,
        kb_path=args.kb,
        rules_path=args.rules,
        epsilon=args.epsilon,
        add_one=args.add_one,
        one_per_token=args.one_per_token,
    )
    pipeline = Pipeline.from_config(config, workers=args.workers)
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            document = fh.read()
    else:
        document = sys.stdin.read()
    output, results = pipeline.run(document)
    sys.stdout.write(output)
    if args.provenance != "none":
        side = sys.stderr if args.provenance == "-" else open(args.provenance, "w", encoding="utf-8")
        try:
            side.write("position\ttag\tprovenance\tsource\toutput\tscore\tgrapheme_fallback\n")
            for r in results:
                side.write(r.as_tsv() + "\n")
        finally:
            if side is not sys.stderr:
                side.close()
    return EXIT_OK


def cmd_eval(args):
    system = _read_lines(args.system)
    gold = _read_lines(args.gold)
    tags = [EntityTag.parse(t.strip()) for t in _read_lines(args.tags)] if args.tags else None
    report = evaluate(system, gold, tags)
    sys.stdout.write(format_report(report, args.rounding))
    return EXIT_OK


def cmd_kb_validate(args):
    try:
        kb = load_kb(args.file)
    except DataError as exc:
        print(f"entries=? duplicates=? errors=1\n{exc}")
        return EXIT_DATA
    dup = Counter(kb.duplicates)
    print(f"entries={len(kb)} duplicates={len(kb.duplicates)} errors=0")
    if kb.version:
        print(f"version={kb.version}")
    for key, n in sorted(dup.items()):
        print(f"duplicate\t{key}\t{n}")
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="netranslit", description="Named-entity translation and transliteration")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("prep", help="syllabify the source side of a raw name corpus")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.add_argument("--rules")
    p.add_argument("--rejects", help="rejects file (default: OUT.rejects)")
    p.set_defaults(func=cmd_prep)

    p = sub.add_parser("train", help="count syllable pairs into a model file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.add_argument("--strict", action="store_true", help="fail on misaligned pairs instead of skipping")
    p.add_argument("--fallback", help="unit<TAB>grapheme map for unseen syllables")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("run", help="translate a slash-tagged document")
    p.add_argument("--model", required=True)
    p.add_argument("--kb")
    p.add_argument("--rules")
    p.add_argument("--in", dest="input", help="input file (default: stdin)")
    p.add_argument("--epsilon", type=float, default=1e-6, help="score floor for unseen syllables")
    p.add_argument("--add-one", action="store_true", help="add-one smoothing of syllable probabilities")
    p.add_argument("--one-per-token", action="store_true", help="one entity per tagged token")
    p.add_argument("--provenance", default="-", help="provenance TSV path, '-' for stderr, 'none' to skip")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("eval", help="score system output against gold references")
    p.add_argument("--system", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--tags")
    p.add_argument("--rounding", choices=["half-up", "half-even"], default="half-up")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("kb", help="knowledge base tools")
    kb_sub = p.add_subparsers(dest="kb_command", parser_class=_Parser)
    kb_sub.required = True
    v = kb_sub.add_parser("validate", help="check a KB file")
    v.add_argument("file")
    v.set_defaults(func=cmd_kb_validate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except (DataError, PipelineError, OSError, UnicodeDecodeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NetranslitError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
