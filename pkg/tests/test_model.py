import random

import pytest

from relgraph import (
    DEFAULT_ALPHABET,
    RESERVED_SEPARATORS,
    Alphabet,
    EmptyStringError,
    IllegalCharacterError,
    Side,
    SymString,
    Verdict,
    validate_string,
)


def test_validate_accepts_legal_text():
    s = validate_string("dog")
    assert s.text == "dog"
    assert str(s) == "dog"


def test_validate_rejects_empty():
    with pytest.raises(EmptyStringError):
        validate_string("")


def test_validate_reports_first_illegal_character():
    with pytest.raises(IllegalCharacterError) as exc_info:
        validate_string("a#b")
    assert exc_info.value.char == "#"
    assert exc_info.value.index == 1


def test_validate_rejects_whitespace_in_default_alphabet():
    with pytest.raises(IllegalCharacterError) as exc_info:
        validate_string("a b")
    assert exc_info.value.index == 1


def test_equality_is_text_equality():
    assert validate_string("dog") == validate_string("dog")
    assert validate_string("dog") != validate_string("Dog")
    assert validate_string("dog") != validate_string("dogs")


def test_ordering_is_text_ordering():
    texts = ["zebra", "ant", "mammal", "Ant"]
    ordered = sorted(validate_string(t) for t in texts)
    assert [s.text for s in ordered] == sorted(texts)


def test_round_trip_render_and_revalidate():
    rng = random.Random(7)
    legal = sorted(DEFAULT_ALPHABET.symbols)
    for _ in range(200):
        text = "".join(rng.choice(legal) for _ in range(rng.randint(1, 12)))
        s = validate_string(text)
        assert validate_string(str(s)) == s


def test_direct_construction_enforces_structural_minimum():
    with pytest.raises(EmptyStringError):
        SymString("")
    for sep in sorted(RESERVED_SEPARATORS):
        with pytest.raises(IllegalCharacterError):
            SymString(f"a{sep}b")


def test_default_alphabet_excludes_separators_and_whitespace():
    assert not DEFAULT_ALPHABET.symbols & RESERVED_SEPARATORS
    assert " " not in DEFAULT_ALPHABET.symbols
    assert "\t" not in DEFAULT_ALPHABET.symbols
    assert "a" in DEFAULT_ALPHABET
    assert "#" not in DEFAULT_ALPHABET


def test_alphabet_rejects_separator_overlap():
    with pytest.raises(ValueError):
        Alphabet(frozenset({"a", "#"}))


def test_alphabet_rejects_empty_symbol_set():
    with pytest.raises(ValueError):
        Alphabet(frozenset())


def test_alphabet_rejects_multicharacter_symbols():
    with pytest.raises(ValueError):
        Alphabet(frozenset({"ab"}))


def test_alphabet_reserved_set_is_fixed():
    with pytest.raises(ValueError):
        Alphabet(frozenset({"a"}), reserved=frozenset({"#"}))


def test_custom_alphabet_restricts_validation():
    letters = Alphabet(frozenset("abc"))
    assert validate_string("abba", letters).text == "abba"
    with pytest.raises(IllegalCharacterError) as exc_info:
        validate_string("abd", letters)
    assert exc_info.value.char == "d"
    assert exc_info.value.index == 2


def test_side_and_verdict_have_exactly_two_values():
    assert {side.name for side in Side} == {"PERCEPTUAL", "CONCEPTUAL"}
    assert {v.name for v in Verdict} == {"ACCEPT", "REJECT"}
    # Verdicts are not strings, so they can never collide with rendered text.
    assert not isinstance(Verdict.ACCEPT, str)
