"""Game predicates and completions on integer card codes."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Collection, Iterable, Iterator

from .algebra import ternary, xor_all
from .errors import (
    DuplicateCards,
    InvalidCode,
    MultipleCommonSymbols,
    NoCommonSymbol,
    NotAMatch,
    NotAQuad,
    OutOfRange,
    ZeroCard,
)

_T4 = ternary(4)


def _distinct(cards: Collection[int]) -> list[int]:
    cards = list(cards)
    if len(set(cards)) != len(cards):
        raise DuplicateCards(f"repeated card in {sorted(cards)}")
    return cards


def _check_range(cards: Iterable[int], lo: int, hi: int) -> None:
    for c in cards:
        if not isinstance(c, int) or not lo <= c < hi:
            if c == 0 and lo == 1:
                raise ZeroCard("the empty card is not in the Socks deck")
            raise InvalidCode(f"card code {c!r} outside [{lo}, {hi})")


# SET


def is_set(a: int, b: int, c: int) -> bool:
    _check_range(_distinct((a, b, c)), 0, 81)
    return _T4.add[_T4.add[a][b]][c] == 0


def complete_set(a: int, b: int) -> int:
    _check_range(_distinct((a, b)), 0, 81)
    return _T4.third(a, b)


def find_sets(cards: Iterable[int]) -> Iterator[tuple[int, int, int]]:
    """All sets among ``cards``, each as an ascending triple, in lexicographic order."""
    table = sorted(cards)
    present = set(table)
    for i, a in enumerate(table):
        for b in table[i + 1 :]:
            c = _T4.third(a, b)
            if c > b and c in present:
                yield (a, b, c)


# SOCKS


def is_match(cards: Collection[int]) -> bool:
    cards = _distinct(cards)
    _check_range(cards, 1, 64)
    return len(cards) >= 3 and xor_all(cards) == 0


@dataclass(frozen=True)
class Add:
    card: int


@dataclass(frozen=True)
class Remove:
    card: int


@dataclass(frozen=True)
class AlreadyMatched:
    pass


ALREADY_MATCHED = AlreadyMatched()
CompletionResult = Add | Remove | AlreadyMatched


def complete_match(cards: Collection[int]) -> CompletionResult:
    cards = _distinct(cards)
    _check_range(cards, 1, 64)
    x = xor_all(cards)
    if x == 0:
        return ALREADY_MATCHED
    if x in cards:
        return Remove(x)
    return Add(x)


def gf2_rank(vectors: Iterable[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def is_minimal_match(cards: Collection[int]) -> bool:
    """A matched set is minimal iff dropping one card leaves an independent set."""
    cards = _distinct(cards)
    if not is_match(cards):
        raise NotAMatch(f"{sorted(cards)} is not a matched set")
    return gf2_rank(cards[1:]) == len(cards) - 1


def construct_minimal_match(n: int) -> list[int]:
    if not 3 <= n <= 7:
        raise OutOfRange(f"minimal matched sets have 3 to 7 cards, asked for {n}")
    singles = [1 << (5 - i) for i in range(n - 1)]
    return singles + [xor_all(singles)]


def is_official_match(cards: Collection[int]) -> bool:
    """Three cards where every sock color appears zero or two times."""
    cards = list(cards)
    if len(cards) != 3 or not is_match(cards):
        return False
    return all(sum(c >> bit & 1 for c in cards) in (0, 2) for bit in range(6))


def find_matches(cards: Iterable[int], size: int) -> Iterator[tuple[int, ...]]:
    """Matched subsets of exactly ``size`` cards, ascending, lexicographic order.

    Each candidate is built from ``size - 1`` cards plus the card that
    completes them, so only C(n, size - 1) subsets are scanned.
    """
    table = sorted(cards)
    present = set(table)
    for head in itertools.combinations(table, size - 1):
        result = complete_match(head)
        if isinstance(result, Add) and result.card > head[-1] and result.card in present:
            yield head + (result.card,)


# QUADS


def is_quad(a: int, b: int, c: int, d: int) -> bool:
    _check_range(_distinct((a, b, c, d)), 0, 64)
    return a ^ b ^ c ^ d == 0


def complete_quad(a: int, b: int, c: int) -> int:
    _check_range(_distinct((a, b, c)), 0, 64)
    return a ^ b ^ c


def find_quads(cards: Iterable[int]) -> Iterator[tuple[int, int, int, int]]:
    table = sorted(cards)
    present = set(table)
    for i, a in enumerate(table):
        for j in range(i + 1, len(table)):
            b = table[j]
            for c in table[j + 1 :]:
                d = a ^ b ^ c
                if d > c and d in present:
                    yield (a, b, c, d)


_SHD = "SHD"


def quad_type(quad: Collection[int]) -> str:
    quad = list(quad)
    if len(quad) != 4 or not is_quad(*quad):
        raise NotAQuad(f"{quad} is not a quad")
    letters = []
    for shift in (4, 2, 0):
        values = [(c >> shift) & 3 for c in quad]
        distinct = len(set(values))
        # a quad attribute is all-same, 2+2 or all-different; never 3+1 or 2+1+1
        letters.append({1: "S", 2: "H", 4: "D"}[distinct])
    return "".join(sorted(letters, key=_SHD.index))


# all three-letter multisets except SSS and SSH, which force repeated cards
QUAD_TYPES = ("SSD", "SHH", "SHD", "SDD", "HHH", "HHD", "HDD", "DDD")


# SPOT IT!


def common_symbol(c1: Collection[int], c2: Collection[int]) -> int:
    s1, s2 = frozenset(c1), frozenset(c2)
    if s1 == s2:
        raise DuplicateCards("a card shares all its symbols with itself")
    shared = s1 & s2
    if not shared:
        raise NoCommonSymbol(f"{sorted(s1)} and {sorted(s2)} share no symbol")
    if len(shared) > 1:
        raise MultipleCommonSymbols(f"{sorted(s1)} and {sorted(s2)} share {sorted(shared)}")
    return next(iter(shared))


def split_into_matched_triples(pile: Collection[int]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every way to split six Socks cards into two matched triples."""
    pile = sorted(_distinct(pile))
    if len(pile) != 6:
        raise OutOfRange("need exactly six cards")
    first, rest = pile[0], pile[1:]
    splits = []
    for pair in itertools.combinations(rest, 2):
        a = (first,) + pair
        b = tuple(c for c in rest if c not in pair)
        if xor_all(a) == 0 and xor_all(b) == 0:
            splits.append((a, b))
    return splits
