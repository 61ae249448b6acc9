import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ntlab.goedel import (
    CODES,
    NotAFormula,
    NotASequenceNumber,
    NotATerm,
    UnknownLogicalToken,
    Z,
    concat_monotonic_check,
    decode_number,
    encode_word,
    factored,
    form,
    free_occurrences,
    neg,
    numeral,
    numeral_bound_check,
    numeral_growth_report,
    numerals_in,
    parse_formula,
    parse_number,
    parse_term,
    random_formula,
    random_word,
    render,
    sb,
    serialize,
    tokenize,
    variable,
)

PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def enc(text):
    return encode_word(tokenize(text))


def oracle_encode(tokens):
    # independent: hand-written prime list, codes looked up by table or index
    g = 1
    for p, tok in zip(PRIMES, tokens):
        if tok in CODES:
            c = CODES[tok]
        else:
            c = PRIMES[int(tok[1:]) + 5]
        g *= p ** c
    return g


def test_encode_examples():
    assert encode_word(["0"]) == 2
    assert encode_word(["S", "0"]) == 24
    assert encode_word(["~"]) == 32
    assert encode_word([]) == 1
    assert encode_word(["v1"]) == 2 ** 17 and encode_word(["v2"]) == 2 ** 19
    with pytest.raises(UnknownLogicalToken):
        encode_word(["Q"])


def test_decode_examples():
    assert decode_number(24) == ["S", "0"]
    assert decode_number(6) == ["0", "0"]
    assert decode_number(1) == []
    with pytest.raises(NotASequenceNumber):
        decode_number(10)  # 3 missing
    with pytest.raises(NotASequenceNumber):
        decode_number(4)  # exponent 2 is no code
    with pytest.raises(NotASequenceNumber):
        decode_number(0)


def test_numerals():
    assert numeral(0) == ["0"]
    assert numeral(2) == ["S", "S", "0"]
    assert numeral(5) == ["S"] * 5 + ["0"]
    assert [Z(q) for q in range(3)] == [2, 24, 1080]
    assert Z(2) == 2 ** 3 * 3 ** 3 * 5


def test_neg_and_form():
    g = enc("(0=0)")
    assert neg(g) == enc("~(0=0)")
    assert render(decode_number(neg(neg(g)))) == "~~(0=0)"
    with pytest.raises(NotAFormula):
        neg(2)
    assert form(g) and not form(2) and not form(10) and not form(24) and not form(1)


def test_free_occurrences():
    assert free_occurrences(tokenize("(v2=v2)"), 19) == [1, 3]
    assert free_occurrences(tokenize("(Av2)(v2=v2)"), 19) == []
    assert free_occurrences(tokenize("((v1=0)∨(Av1)(v1=0))"), 17) == [2]
    assert free_occurrences(tokenize("(x=y)"), 23) == []


def test_sb_examples():
    assert sb(enc("(v2=v2)"), 19, Z(0)) == enc("(0=0)")
    bound = enc("(Av2)(v2=v2)")
    assert sb(bound, 19, Z(5)) == bound
    assert sb(enc("((v1=0)∨(Av1)(v1=0))"), 17, Z(1)) == enc("((S0=0)∨(Av1)(v1=0))")
    with pytest.raises(NotAFormula):
        sb(2, 19, Z(0))
    with pytest.raises(NotATerm):
        sb(enc("(v2=v2)"), 19, enc("(0=0)"))


def test_parse_rejects_ill_formed():
    for text in ["(0=0", "0", "(0∨0)", "~", "(A0)(0=0)", "(0=0)(0=0)"]:
        with pytest.raises(NotAFormula):
            parse_formula(tokenize(text))
    with pytest.raises(NotATerm):
        parse_term(tokenize("S"))


def test_text_forms():
    assert tokenize("(x = y) | ~(z=0)") == ["(", "v1", "=", "v2", ")", "∨", "~", "(", "v3", "=", "0", ")"]
    assert render(["(", "v12", "=", "0", ")"]) == "(v₁₂=0)"
    assert tokenize("v₁₂") == ["v12"]
    assert parse_number("2^3·3^1") == 24 and parse_number("1080") == 1080
    assert factored(["S", "0"]) == "2^3·3^1"


def test_growth_and_concat_examples():
    rows = numeral_growth_report(2)
    assert [(r.q, r.z, r.passed) for r in rows] == [(0, 2, True), (1, 24, True), (2, 1080, True)]
    assert all(r.passed for r in numeral_growth_report(64))
    assert concat_monotonic_check(["0"], ["0"])
    assert concat_monotonic_check([], ["S", "0"])


def test_numeral_bound_examples():
    assert numerals_in(tokenize("(SS0=0)")) == [2, 0]
    assert numeral_bound_check(tokenize("(0=0)"))
    assert numeral_bound_check(tokenize("(SSSSS0=0)"))


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=300, deadline=None)
@given(seeds)
def test_round_trip_and_oracle(seed):
    w = random_word(random.Random(seed))
    g = encode_word(w)
    assert g == oracle_encode(w)
    assert decode_number(g) == w


def test_injective_on_sample():
    rng = random.Random(7)
    seen = {}
    for _ in range(2000):
        w = tuple(random_word(rng))
        g = encode_word(w)
        assert seen.setdefault(g, w) == w


@settings(max_examples=200, deadline=None)
@given(seeds, st.integers(1, 3), st.integers(0, 4))
def test_sb_properties(seed, i, q):
    f = random_formula(random.Random(seed))
    x, v = encode_word(serialize(f)), [17, 19, 23][i - 1]
    once = sb(x, v, Z(q))
    assert form(once)
    assert sb(once, v, Z(q)) == once
    assert free_occurrences(decode_number(once), v) == []
    # bound occurrences survive: token count changes only by the inserted S's
    n_free = len(free_occurrences(serialize(f), v))
    assert len(decode_number(once)) == len(serialize(f)) + q * n_free


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_formula_round_trip_and_neg(seed):
    f = random_formula(random.Random(seed))
    toks = serialize(f)
    assert parse_formula(toks) == f
    g = encode_word(toks)
    assert form(g) and form(neg(g))
    assert numeral_bound_check(f)


def test_variables_named_by_index():
    assert variable(1) == "v1"
    assert encode_word([variable(3)]) == 2 ** 23
