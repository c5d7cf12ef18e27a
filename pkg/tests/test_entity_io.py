import pytest
from hypothesis import given
from hypothesis import strategies as st

from netranslit.entity_io import (
    EntityTag,
    Route,
    TaggedEntity,
    parse_segments,
    parse_tagged,
    preprocess,
    render,
    route,
)
from netranslit.errors import EmptyEntity, ParseError, UnknownTag

P, L, O, M = EntityTag.PERSON, EntityTag.LOCATION, EntityTag.ORGANIZATION, EntityTag.MISCELLANEOUS


def test_parse_person_and_location():
    doc = "Mina/PERSON is going to Hyderabad/LOCATION"
    assert parse_tagged(doc) == [TaggedEntity("Mina", P, 0), TaggedEntity("Hyderabad", L, 1)]


def test_parse_multiword_organization():
    doc = "Priyanka/PERSON is going to Delhi University/ORGANIZATION"
    assert parse_tagged(doc) == [
        TaggedEntity("Priyanka", P, 0),
        TaggedEntity("Delhi University", O, 1),
    ]


def test_parse_empty_document():
    assert parse_tagged("") == []


def test_connector_words_inside_entity():
    doc = "He joined Indian Institute of Technology/ORGANIZATION last year"
    assert parse_tagged(doc) == [TaggedEntity("Indian Institute of Technology", O, 0)]


def test_same_tag_runs_merge_and_strict_mode_splits():
    doc = "Delhi/ORGANIZATION University/ORGANIZATION"
    assert parse_tagged(doc) == [TaggedEntity("Delhi University", O, 0)]
    assert parse_tagged(doc, one_per_token=True) == [
        TaggedEntity("Delhi", O, 0),
        TaggedEntity("University", O, 1),
    ]
    # strict mode does not pull in the untagged "Delhi" either
    assert parse_tagged("Delhi University/ORGANIZATION", one_per_token=True) == [
        TaggedEntity("University", O, 0)
    ]


def test_stanford_outside_tags_and_misc_alias():
    doc = "Mohit/PERSON is/O going/O to/O Haryana/LOCATION with/O Xbox/MISC"
    ents = parse_tagged(doc)
    assert [(e.text, e.tag) for e in ents] == [("Mohit", P), ("Haryana", L), ("Xbox", M)]
    segments = next(parse_segments(doc))
    assert segments[1] == " is going to "


def test_positions_are_unique_across_lines():
    doc = "Mohit/PERSON\nKunal/PERSON went to Delhi/LOCATION\n"
    assert [e.position for e in parse_tagged(doc)] == [0, 1, 2]


def test_segments_rebuild_untagged_text():
    doc = "Mohit/PERSON, is going to Haryana/LOCATION."
    segments = next(parse_segments(doc))
    rebuilt = "".join(s if isinstance(s, str) else s.text for s in segments)
    assert rebuilt == "Mohit, is going to Haryana."


@pytest.mark.parametrize("doc, line, column", [("ok\nMina/ went", 2, 1), ("x /PERSON", 1, 3), ("a Mina/Person", 1, 3)])
def test_malformed_tags(doc, line, column):
    with pytest.raises(ParseError) as info:
        parse_tagged(doc)
    assert (info.value.line, info.value.column) == (line, column)


def test_unknown_tag():
    with pytest.raises(UnknownTag) as info:
        parse_tagged("on Monday/DATE")
    assert info.value.line == 1 and info.value.column == 4


def test_lowercase_slash_is_plain_text():
    assert parse_tagged("salt and/or pepper") == []


@pytest.mark.parametrize(
    "text, cleaned",
    [
        ("Priyanka,", "Priyanka"),
        ("Delhi  University", "Delhi University"),
        ("Mathurawale", "Mathurawale"),
        ("Jean-Pierre", "Jean Pierre"),
        ("(Kunal)", "Kunal"),
        ("Delhi/ORGANIZATION University", "Delhi University"),
    ],
)
def test_preprocess(text, cleaned):
    ent = TaggedEntity(text, O, 3)
    assert preprocess(ent) == TaggedEntity(cleaned, O, 3)


def test_preprocess_empty():
    with pytest.raises(EmptyEntity):
        preprocess(TaggedEntity(", -", P, 0))


def _letters_and_spaces_oracle(text):
    kept = "".join(ch if ch.isalpha() or ch.isdigit() else " " for ch in text)
    return " ".join(kept.split())


@given(st.text(alphabet="Priyankam ,-.", min_size=1))
def test_preprocess_matches_filter_oracle_and_is_idempotent(text):
    oracle = _letters_and_spaces_oracle(text.replace(".", ""))
    ent = TaggedEntity(text, P, 0)
    if not oracle:
        with pytest.raises(EmptyEntity):
            preprocess(ent)
        return
    once = preprocess(ent)
    assert once.text == oracle
    assert preprocess(once) == once


@pytest.mark.parametrize(
    "tag, expected",
    [(P, Route.TRANSLITERATE), (M, Route.TRANSLITERATE), (L, Route.TRANSLATE), (O, Route.TRANSLATE)],
)
def test_route(tag, expected):
    assert route(tag) is expected


names = st.text(alphabet="abcdefghijklmnopqrstuvwxyzABCDEZ", min_size=1, max_size=8)
entities = st.lists(
    st.tuples(st.lists(names, min_size=1, max_size=3).map(" ".join), st.sampled_from(list(EntityTag))),
    max_size=6,
)


@given(entities)
def test_render_parse_round_trip(items):
    ents = [TaggedEntity(text, tag, i) for i, (text, tag) in enumerate(items)]
    assert parse_tagged(render(ents)) == ents
