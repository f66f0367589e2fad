"""Exact probabilities and counts for the four decks."""
from __future__ import annotations

import decimal
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable

from .algebra import ternary
from .decks import Deck
from .errors import EvenIndex, OutOfRange, UnsupportedDeck

SOCKS_SIZE = 63
ONE_64 = Fraction(1, 64)


@lru_cache(maxsize=1)
def _probability_table() -> tuple[Fraction, ...]:
    # The empty pile XORs to zero, so P(0) = 1; with that seed the
    # add-one-card recursion holds from n = 0 and gives P(1) = P(2) = 0.
    P = [Fraction(1), Fraction(0), Fraction(0)]
    for n in range(2, 31):
        P.append((1 - P[n] - n * P[n - 1]) / (SOCKS_SIZE - n))
    P += [P[SOCKS_SIZE - n] for n in range(32, 64)]
    return tuple(P)


def match_probability(n: int) -> Fraction:
    """Probability that n distinct random Socks cards XOR to zero."""
    if not 0 <= n <= SOCKS_SIZE:
        raise OutOfRange(f"n must be in 0..63, got {n}")
    return _probability_table()[n]


def double_factorial(n: int) -> int:
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def match_probability_closed(n: int) -> Fraction:
    if not 1 <= n <= 61:
        raise OutOfRange(f"closed form covers odd n in 1..61, got {n}")
    if n % 2 == 0:
        raise EvenIndex(f"closed form is for odd n, got {n}")
    k = (n - 1) // 2
    term = Fraction(double_factorial(2 * k + 1) * double_factorial(61 - 2 * k), 64 * double_factorial(61))
    return ONE_64 - (-1) ** k * term


@dataclass(frozen=True)
class SubsetSumCounts:
    """counts[k][g]: number of k-subsets of the deck whose group sum is g."""

    group_order: int
    counts: tuple[tuple[int, ...], ...]

    def __call__(self, k: int, target: int = 0) -> int:
        return self.counts[k][target]

    @property
    def deck_size(self) -> int:
        return len(self.counts) - 1


def _group_add(deck: Deck):
    geometry = deck.geometry
    if geometry == {"p": 2, "n": 6}:
        return 64, lambda a, b: a ^ b
    if geometry == {"p": 3, "n": 4}:
        table = ternary(4).add
        return 81, lambda a, b: table[a][b]
    raise UnsupportedDeck(f"{deck.kind} is not an abelian group deck")


def subset_sum_table(deck: Deck) -> SubsetSumCounts:
    """Dynamic program over cards x subset size x group element."""
    order, add = _group_add(deck)
    cards = list(deck.cards)
    counts = [[0] * order for _ in range(len(cards) + 1)]
    counts[0][0] = 1
    for used, x in enumerate(cards, start=1):
        shifted = [add(g, x) for g in range(order)]
        for k in range(used, 0, -1):
            row, prev = counts[k], counts[k - 1]
            for g, c in enumerate(prev):
                if c:
                    row[shifted[g]] += c
    return SubsetSumCounts(order, tuple(tuple(r) for r in counts))


def subset_sum_counts(deck: Deck, k: int) -> dict[int, int]:
    """Counts of k-subsets by group sum, keyed by target code."""
    table = subset_sum_table(deck)
    if not 0 <= k <= table.deck_size:
        raise OutOfRange(f"k must be in 0..{table.deck_size}")
    return dict(enumerate(table.counts[k]))


# counting inside piles


def count_sets(pile: Iterable[int]) -> int:
    t = ternary(4)
    cards = sorted(set(pile))
    present = set(cards)
    found = 0
    for i, a in enumerate(cards):
        for b in cards[i + 1 :]:
            if t.third(a, b) in present:
                found += 1
    # every set was seen once per pair of its cards
    return found // 3


def count_quads(pile: Iterable[int]) -> int:
    """Quads come in three pair-splittings {a,b}|{c,d} with a^b == c^d."""
    cards = sorted(set(pile))
    by_xor = Counter(a ^ b for i, a in enumerate(cards) for b in cards[i + 1 :])
    return sum(comb(m, 2) for m in by_xor.values()) // 3


def complementary_identity(size_a: int) -> int:
    """Sets in A plus sets in its complement, for any pile A of the SET deck."""
    if not 0 <= size_a <= 81:
        raise OutOfRange(f"pile size must be in 0..81, got {size_a}")
    value, rem = divmod(size_a * size_a - 81 * size_a + 2160, 2)
    assert rem == 0
    return value


def complementary_identity_product(size_a: int) -> int:
    """Same value written as (2160 - |A||B|) / 2."""
    if not 0 <= size_a <= 81:
        raise OutOfRange(f"pile size must be in 0..81, got {size_a}")
    return (2160 - size_a * (81 - size_a)) // 2


def quad_probability(m: int) -> Fraction:
    if m < 1:
        raise OutOfRange(f"attribute count must be >= 1, got {m}")
    return Fraction(1, 4**m - 3)


def total_quads(m: int) -> int:
    if m < 1:
        raise OutOfRange(f"attribute count must be >= 1, got {m}")
    q, r = divmod(comb(4**m, 4), 4**m - 3)
    assert r == 0
    return q


def set_probability() -> Fraction:
    return Fraction(1, 79)


# display


def to_decimal(x: Fraction, places: int = 11) -> str:
    ctx = decimal.Context(prec=places + 30, rounding=decimal.ROUND_HALF_EVEN)
    value = ctx.divide(decimal.Decimal(x.numerator), decimal.Decimal(x.denominator))
    return f"{value.quantize(decimal.Decimal(1).scaleb(-places), context=ctx):f}"


@dataclass(frozen=True)
class TableRow:
    n: int
    exact: Fraction
    decimal: str
    offset: str


def probability_rows(max_n: int = 31, closed_form: bool = False) -> list[TableRow]:
    """Odd rows 1, 3, ..., max_n of the P(n) table."""
    if not 1 <= max_n <= 63:
        raise OutOfRange(f"max must be in 1..63, got {max_n}")
    rows = []
    for n in range(1, max_n + 1, 2):
        p = match_probability_closed(n) if closed_form and n <= 61 else match_probability(n)
        rows.append(TableRow(n, p, to_decimal(p), to_decimal(p - ONE_64)))
    return rows


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

