import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netranslit.errors import (
    AlignmentError,
    EmptyCorpus,
    FormatError,
    UntransliterableSyllable,
    VersionError,
)
from netranslit.syllabifier import Syllable, SyllabifiedWord, syllabify
from netranslit.translit_model import (
    GURMUKHI_FALLBACK,
    MODEL_HEADER,
    ParallelPair,
    TransliterationModel,
    candidates,
    decode,
    fallback_syllable,
    load_model,
    prob,
    read_corpus,
    save_model,
    train,
)

from conftest import dileep_corpus
from oracles import count_probabilities


def word_of(*sylls):
    return SyllabifiedWord("".join(sylls), tuple(Syllable(s, "") for s in sylls))


# the three-pair corpus and its hand-checked ratios; the oracle agrees below
TOY = [
    (["ka", "ran"], ["क", "रन"]),
    (["ka", "mal"], ["का", "मल"]),
    (["ka"], ["क"]),
]
TOY_EXPECTED = {("ka", "क"): Fraction(2, 3), ("ka", "का"): Fraction(1, 3),
                ("ran", "रन"): Fraction(1), ("mal", "मल"): Fraction(1)}


def test_toy_oracle_matches_hand_count():
    assert count_probabilities(TOY) == TOY_EXPECTED


def test_toy_corpus_probabilities():
    model = train([ParallelPair(s, t) for s, t in TOY])
    for (s, t), p in TOY_EXPECTED.items():
        assert prob(model, s, t) == float(p)


def test_dileep_probabilities(dileep_model):
    oracle = count_probabilities([(p.source_syllables, p.target_syllables) for p in dileep_corpus()])
    assert oracle[("di", "दि")] == Fraction(99, 104)
    assert oracle[("leep", "लीप")] == Fraction(11, 19)
    assert prob(dileep_model, "di", "दि") == pytest.approx(0.9519231, abs=1e-7)
    assert prob(dileep_model, "leep", "लीप") == pytest.approx(0.5789474, abs=1e-7)
    assert prob(dileep_model, "di", "लीप") == 0.0
    assert prob(dileep_model, "zz", "दि") == 0.0


def test_dileep_decode(dileep_model):
    cand = decode(dileep_model, word_of("di", "leep"))
    assert cand.target_syllables == ("दि", "लीप")
    assert cand.text == "दिलीप"
    assert cand.score == pytest.approx(0.551113404, abs=1e-6)
    assert math.isclose(cand.score, math.prod(p for _, _, p in cand.per_syllable), rel_tol=1e-12)
    assert not cand.used_fallback


def test_singleton_corpus():
    model = train([ParallelPair(["mo", "hit"], ["ਮੋ", "ਹਿਤ"])])
    assert prob(model, "mo", "ਮੋ") == 1.0 and prob(model, "hit", "ਹਿਤ") == 1.0
    cand = decode(model, syllabify("Mohit"))
    assert cand.text == "ਮੋਹਿਤ" and cand.score == 1.0


def test_candidates(dileep_model):
    assert candidates(dileep_model, "di", 1) == [("दि", pytest.approx(0.9519231, abs=1e-7))]
    assert [t for t, _ in candidates(dileep_model, "di", 10)] == ["दि", "डि"]
    assert candidates(dileep_model, "unseen", 3) == []
    with pytest.raises(ValueError):
        candidates(dileep_model, "di", 0)


def test_candidates_tie_break():
    model = train([ParallelPair(["ra"], ["रा"]), ParallelPair(["ra"], ["र"])])
    # hand count: 1/2 each, "र" (U+0930) sorts before "रा" (U+0930 U+093E)
    assert candidates(model, "ra", 2) == [("र", 0.5), ("रा", 0.5)]


def test_strict_and_lenient_training():
    pairs = [ParallelPair(["mo", "hit"], ["ਮੋ"]), ParallelPair(["ku", "nal"], ["ਕੁ", "ਨਾਲ"])]
    with pytest.raises(AlignmentError) as info:
        train(pairs, strict=True)
    assert info.value.index == 0
    model = train(pairs, strict=False)
    assert model.skipped_pairs == 1
    assert model.source_counts == {"ku": 1, "nal": 1}


def test_empty_corpus():
    with pytest.raises(EmptyCorpus):
        train([])
    with pytest.raises(EmptyCorpus):
        train([ParallelPair(["a"], [])], strict=False)


def test_targets_are_nfc_normalized():
    decomposed = "\u0a38\u0a3c"  # SA + nukta
    precomposed = "\u0a36"  # SHA
    model = train([ParallelPair(["sha"], [precomposed])])
    assert prob(model, "sha", decomposed) == 1.0
    assert candidates(model, "sha")[0][0] == decomposed


def test_fallback_for_unseen_syllables(dileep_model):
    cand = decode(dileep_model, word_of("di", "pak"), epsilon=1e-6)
    assert cand.fallback == (False, True)
    assert cand.target_syllables[1] == "ਪਾਕ"
    assert cand.score == pytest.approx(99 / 104 * 1e-6, rel=1e-12)


@pytest.mark.parametrize(
    "syllable, expected",
    [("a", "ਅ"), ("ka", "ਕਾ"), ("ssa", "ੱਸਾ"), ("ry", "ਰੀ"), ("tion", "ਸ਼ਨ"), ("bhi", "ਭਿ")],
)
def test_fallback_syllable(syllable, expected):
    assert fallback_syllable(syllable, GURMUKHI_FALLBACK) == expected


def test_untransliterable():
    model = TransliterationModel({("a", "ਅ"): 1}, grapheme_fallback={"a": "ਾ"})
    with pytest.raises(UntransliterableSyllable) as info:
        decode(model, word_of("a", "zo"))
    assert info.value.unit == "z"


def test_bad_epsilon(dileep_model):
    with pytest.raises(ValueError):
        decode(dileep_model, word_of("di"), epsilon=0.0)


def test_add_one_smoothing(dileep_model):
    # vocabulary: दि डि लीप लिप
    assert prob(dileep_model, "di", "दि", add_one=True) == (99 + 1) / (104 + 4)
    assert prob(dileep_model, "di", "लीप", add_one=True) == 1 / 108
    total = sum(prob(dileep_model, "leep", t, add_one=True) for t in ["दि", "डि", "लीप", "लिप"])
    assert total == pytest.approx(1.0, abs=1e-12)


def test_save_load_round_trip(tmp_path, dileep_model):
    path = tmp_path / "model.txt"
    save_model(dileep_model, path)
    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[0] == MODEL_HEADER
    assert "J\tdi\tदि\t99" in text.splitlines()
    assert load_model(path) == dileep_model


@pytest.mark.parametrize(
    "content, error, line",
    [
        ("", FormatError, 1),
        ("netranslit-model v9\n", VersionError, 1),
        ("something else\n", FormatError, 1),
        (f"{MODEL_HEADER}\nJ\tdi\tदि\tmany\n", FormatError, 2),
        (f"{MODEL_HEADER}\nJ\tdi\tदि\t1\nX\tbroken\n", FormatError, 3),
        (f"{MODEL_HEADER}\nJ\tdi\tदि\t1\nJ\tdi\tदि\t2\n", FormatError, 3),
    ],
)
def test_load_errors(tmp_path, content, error, line):
    path = tmp_path / "model.txt"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(error) as info:
        load_model(path)
    assert info.value.line == line


def test_read_corpus(tmp_path):
    path = tmp_path / "corpus.tsv"
    path.write_text("# comment\nmo hit\tਮੋ ਹਿਤ\n\nku nal\tਕੁ ਨਾਲ\n", encoding="utf-8")
    pairs = read_corpus(path)
    assert pairs[0] == ParallelPair(["mo", "hit"], ["ਮੋ", "ਹਿਤ"])
    assert len(pairs) == 2
    path.write_text("mo hit ਮੋ ਹਿਤ\n", encoding="utf-8")
    with pytest.raises(FormatError):
        read_corpus(path)


# --- properties -------------------------------------------------------------

src_syll = st.sampled_from(["a", "ka", "ri", "mo", "hit", "nal", "ssa"])
tgt_syll = st.sampled_from(["ਅ", "ਕਾ", "ਕ", "ਰੀ", "ਰਿ", "ਮੋ", "ਹਿਤ", "ਨਾਲ", "ਸਾ"])


@st.composite
def corpora(draw, max_pairs=50):
    n = draw(st.integers(1, max_pairs))
    pairs = []
    for _ in range(n):
        k = draw(st.integers(1, 4))
        pairs.append((draw(st.lists(src_syll, min_size=k, max_size=k)),
                      draw(st.lists(tgt_syll, min_size=k, max_size=k))))
    return pairs


@settings(max_examples=100, deadline=None)
@given(corpora())
def test_normalized_and_counts_consistent(corpus):
    model = train([ParallelPair(s, t) for s, t in corpus])
    for s in model.sources:
        assert sum(model.targets(s).values()) == model.source_counts[s]
        assert abs(sum(prob(model, s, t) for t in model.targets(s)) - 1.0) <= 1e-9


@settings(max_examples=50, deadline=None)
@given(corpora(max_pairs=20), st.integers(2, 5))
def test_scaling_counts_changes_nothing(corpus, n):
    base = train([ParallelPair(s, t) for s, t in corpus])
    scaled = train([ParallelPair(s, t) for s, t in corpus * n])
    for (s, t) in base.joint_counts:
        assert prob(base, s, t) == pytest.approx(prob(scaled, s, t), rel=1e-15)
    for s in base.sources:
        assert candidates(base, s, 1)[0][0] == candidates(scaled, s, 1)[0][0]


@settings(max_examples=50, deadline=None)
@given(corpora(max_pairs=20), src_syll, tgt_syll)
def test_adding_a_pair_never_lowers_its_probability(corpus, s, t):
    before = train([ParallelPair(a, b) for a, b in corpus])
    after = train([ParallelPair(a, b) for a, b in corpus] + [ParallelPair([s], [t])])
    assert prob(after, s, t) >= prob(before, s, t)


@settings(max_examples=50, deadline=None)
@given(corpora(max_pairs=20))
def test_round_trip_property(tmp_path_factory, corpus):
    model = train([ParallelPair(s, t) for s, t in corpus])
    path = tmp_path_factory.mktemp("m") / "model.txt"
    save_model(model, path)
    assert load_model(path) == model
