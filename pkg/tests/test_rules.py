import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cardgeom import rules
from cardgeom.algebra import encode, xor_all
from cardgeom.errors import (
    DuplicateCards,
    MultipleCommonSymbols,
    NoCommonSymbol,
    NotAMatch,
    NotAQuad,
    OutOfRange,
    ZeroCard,
)
from cardgeom.rules import ALREADY_MATCHED, Add, Remove


def s3(digits):
    return encode([int(d) for d in digits], 3)


def b(bits):
    return int(bits, 2)


def brute_is_set(a, b_, c):
    """Every attribute all-same or all-different."""
    cols = zip(*(f"{x:0>4}" for x in (_t(a), _t(b_), _t(c))))
    return all(len(set(col)) in (1, 3) for col in cols)


def _t(code):
    out = ""
    for _ in range(4):
        code, r = divmod(code, 3)
        out = str(r) + out
    return out


# SET


@pytest.mark.parametrize(
    "cards, expected",
    [(("0000", "1111", "2222"), True), (("0000", "0001", "0002"), True), (("0000", "0001", "0012"), False)],
)
def test_is_set_examples(cards, expected):
    assert rules.is_set(*map(s3, cards)) is expected


def test_is_set_matches_attribute_rule():
    for a, b_, c in itertools.combinations(range(81), 3):
        assert rules.is_set(a, b_, c) == brute_is_set(a, b_, c)


def test_is_set_rejects_duplicates():
    with pytest.raises(DuplicateCards):
        rules.is_set(1, 1, 2)


def test_complete_set():
    assert rules.complete_set(s3("0000"), s3("1111")) == s3("2222")
    assert rules.complete_set(s3("0000"), s3("0001")) == s3("0002")
    with pytest.raises(DuplicateCards):
        rules.complete_set(5, 5)


def test_third_card_probability_is_1_in_79():
    a, b_ = 0, 40
    completing = [c for c in range(81) if c not in (a, b_) and rules.is_set(a, b_, c)]
    assert len(completing) == 1 and len(range(81)) - 2 == 79


def test_completion_never_returns_input():
    for a, b_ in itertools.combinations(range(81), 2):
        assert rules.complete_set(a, b_) not in (a, b_)


def test_find_sets_lists_every_set_once():
    rng = random.Random(0)
    table = rng.sample(range(81), 12)
    expected = sorted(t for t in itertools.combinations(sorted(table), 3) if brute_is_set(*t))
    assert list(rules.find_sets(table)) == expected


# SOCKS


def test_is_match_examples():
    assert rules.is_match({b("100000"), b("010000"), b("110000")})
    assert not rules.is_match({b("100000"), b("010000")})
    assert rules.is_match(range(1, 64))
    with pytest.raises(ZeroCard):
        rules.is_match([0, 1, 1 ^ 2, 2])
    with pytest.raises(DuplicateCards):
        rules.is_match([1, 1, 2])


def test_complete_match_examples():
    assert rules.complete_match({b("100000"), b("010000")}) == Add(b("110000"))
    assert rules.complete_match({b("100000"), b("010000"), b("110000")}) is ALREADY_MATCHED
    assert rules.complete_match({b("100000"), b("010000"), b("110000"), b("001000")}) == Remove(b("001000"))


@given(st.sets(st.integers(1, 63), min_size=1, max_size=20))
def test_completion_result_contract(cards):
    result = rules.complete_match(cards)
    if isinstance(result, Add):
        assert result.card not in cards and rules.is_match(cards | {result.card})
    elif isinstance(result, Remove):
        assert result.card in cards
        rest = cards - {result.card}
        assert len(rest) < 3 or rules.is_match(rest)
        assert xor_all(rest) == 0
    else:
        assert xor_all(cards) == 0


def brute_is_minimal(cards):
    cards = list(cards)
    for k in range(3, len(cards)):
        for sub in itertools.combinations(cards, k):
            if xor_all(sub) == 0:
                return False
    return True


def test_is_minimal_match_examples():
    triple = [b("100000"), b("010000"), b("110000")]
    assert rules.is_minimal_match(triple)
    other = [b("001000"), b("000100"), b("001100")]
    assert not rules.is_minimal_match(triple + other)
    with pytest.raises(NotAMatch):
        rules.is_minimal_match([1, 2])


def random_matched_set(rng, size):
    while True:
        head = rng.sample(range(1, 64), size - 1)
        last = xor_all(head)
        if last and last not in head:
            return head + [last]


def test_minimal_match_agrees_with_subset_search():
    rng = random.Random(1)
    for _ in range(300):
        cards = random_matched_set(rng, rng.randint(3, 11))
        assert rules.is_minimal_match(cards) == brute_is_minimal(cards)


def test_no_minimal_match_of_eight_or_more():
    rng = random.Random(2)
    for size in range(8, 14):
        for _ in range(30):
            assert not rules.is_minimal_match(random_matched_set(rng, size))


def test_minimal_matches_found_by_search_have_3_to_7_cards():
    rng = random.Random(3)
    sizes = set()
    for _ in range(100):
        cards = random_matched_set(rng, rng.randint(3, 12))
        for k in range(3, len(cards) + 1):
            for sub in itertools.combinations(cards, k):
                if xor_all(sub) == 0 and brute_is_minimal(sub):
                    sizes.add(k)
    assert sizes <= set(range(3, 8))


@pytest.mark.parametrize("n", range(3, 8))
def test_construct_minimal_match(n):
    cards = rules.construct_minimal_match(n)
    assert len(cards) == n and rules.is_match(cards) and brute_is_minimal(cards)


def test_construct_minimal_match_edges():
    assert rules.construct_minimal_match(3) == [b("100000"), b("010000"), b("110000")]
    seven = rules.construct_minimal_match(7)
    assert seven[-1] == b("111111") and all(bin(c).count("1") == 1 for c in seven[:-1])
    for n in (2, 8):
        with pytest.raises(OutOfRange):
            rules.construct_minimal_match(n)


def test_official_matches_have_zero_or_two_of_each_color():
    for t in itertools.combinations(range(1, 64), 3):
        if xor_all(t) == 0:
            assert rules.is_official_match(t)


def test_find_matches_against_brute_force():
    rng = random.Random(4)
    table = rng.sample(range(1, 64), 10)
    for k in range(3, 8):
        expected = [t for t in itertools.combinations(sorted(table), k) if xor_all(t) == 0]
        assert list(rules.find_matches(table, k)) == expected


def test_blue_sock_piles_never_split():
    blue = [c for c in range(1, 64) if c & b("010000")]
    rng = random.Random(5)
    for _ in range(1000):
        pile = rng.sample(blue, 6)
        # independent search over all ordered triples
        for t in itertools.combinations(pile, 3):
            rest = [c for c in pile if c not in t]
            assert not (xor_all(t) == 0 and xor_all(rest) == 0)
        assert rules.split_into_matched_triples(pile) == []


def test_split_finds_existing_partition():
    pile = [b("100000"), b("010000"), b("110000"), b("001000"), b("000100"), b("001100")]
    assert len(rules.split_into_matched_triples(pile)) == 1


# QUADS


def brute_is_quad(cards):
    """Per attribute: all same, all different, or two pairs."""
    for shift in (4, 2, 0):
        counts = sorted([sum(1 for c in cards if (c >> shift) & 3 == v) for v in range(4)], reverse=True)
        if counts[:2] not in ([4, 0], [1, 1], [2, 2]):
            return False
    return True


def test_is_quad_examples():
    assert rules.is_quad(0, 1, 2, 3)
    # values 0, 0, 1, 3 in the last attribute
    assert not rules.is_quad(0b000000, 0b010000, 0b000001, 0b010011)
    # same in number and color, half-half in shape
    assert rules.is_quad(0b000000, 0b000001, 0b010000, 0b010001) is True
    assert rules.is_quad(0b000000, 0b000001, 0b000000 | 0b100000, 0b100001)
    with pytest.raises(DuplicateCards):
        rules.is_quad(1, 1, 2, 3)


def test_is_quad_matches_attribute_rule():
    rng = random.Random(6)
    quads = list(itertools.combinations(range(16), 4))
    for q in quads:
        assert rules.is_quad(*q) == brute_is_quad(q)
    for _ in range(20000):
        q = rng.sample(range(64), 4)
        assert rules.is_quad(*q) == brute_is_quad(q)


def test_complete_quad():
    assert rules.complete_quad(0, 1, 2) == 3
    rng = random.Random(7)
    for _ in range(1000):
        a, b_, c = rng.sample(range(64), 3)
        d = rules.complete_quad(a, b_, c)
        assert d ^ a ^ b_ ^ c == 0 and d not in (a, b_, c)


def test_quad_probability_one_in_61():
    a, b_, c = 5, 17, 40
    hits = [d for d in range(64) if d not in (a, b_, c) and rules.is_quad(a, b_, c, d)]
    assert len(hits) == 1 and 64 - 3 == 61


def test_quads_are_coplanar():
    count = 0
    for q in itertools.combinations(range(64), 4):
        if xor_all(q) == 0:
            a, b_, c, d = q
            assert d ^ a == (b_ ^ a) ^ (c ^ a)
            count += 1
    assert count == 10416


def test_quad_type_examples():
    assert rules.quad_type([0, 1, 2, 3]) == "SSD"
    assert rules.quad_type([0b000000, 0b010101, 0b101010, 0b111111]) == "DDD"
    # (number, color, shape) = (0,0,0), (0,1,1), (1,0,1), (1,1,0)
    assert rules.quad_type([0b000000, 0b000101, 0b010001, 0b010100]) == "HHH"
    with pytest.raises(NotAQuad):
        rules.quad_type([0, 1, 2, 4])


def test_quad_types_by_enumeration():
    seen = {rules.quad_type(q) for q in rules.find_quads(range(64))}
    assert "SSS" not in seen and "SSH" not in seen
    assert seen == set(rules.QUAD_TYPES)
    # HDD exists: number half-half, color and shape all different
    assert rules.quad_type([0b000000, 0b000101, 0b011010, 0b011111]) == "HDD"


# SPOT IT!


def test_common_symbol():
    assert rules.common_symbol({1, 2, 3}, {1, 4, 5}) == 1
    with pytest.raises(DuplicateCards):
        rules.common_symbol({1, 2, 3}, {1, 2, 3})
    with pytest.raises(NoCommonSymbol):
        rules.common_symbol({1, 2, 3}, {4, 5, 6})
    with pytest.raises(MultipleCommonSymbols):
        rules.common_symbol({1, 2, 3}, {1, 2, 6})
