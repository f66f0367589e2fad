"""Reading a 6-bit code as both a Socks card and an EvenQuads card, and
recognising matched sets of socks among EvenQuads cards."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Collection

from .algebra import xor_all
from .decks import QUADS, SOCKS, CardLabel, card_label, label_to_code
from .errors import DuplicateCards, InvalidCode, OriginInSet, OutOfRange, ZeroCard
from .rules import gf2_rank

DEFAULT_ORIGIN = 0  # One Red Square

_SHIFTS = (4, 2, 0)  # number, color, shape


def parse_bits(text: str) -> int:
    text = text.strip()
    if len(text) != 6 or set(text) - {"0", "1"}:
        raise InvalidCode(f"expected six binary digits, got {text!r}")
    return int(text, 2)


def socks_to_quads(code: int, allow_empty: bool = False) -> CardLabel:
    if code == 0 and not allow_empty:
        raise ZeroCard("the Socks deck has no empty card")
    return card_label(QUADS, code)


def quads_to_socks(card: int | CardLabel | str, allow_empty: bool = False) -> CardLabel:
    code = card if isinstance(card, int) else label_to_code(QUADS, card)
    if not 0 <= code < 64:
        raise InvalidCode(f"{code} is not a 6-bit code")
    if code == 0:
        if not allow_empty:
            raise ZeroCard("One Red Square is the empty Socks card")
        return CardLabel("SOCKS", ())
    return card_label(SOCKS, code)


@dataclass(frozen=True)
class Reading:
    code: int
    origin: int
    quads: CardLabel
    socks: CardLabel

    @property
    def socks_code(self) -> int:
        return self.code ^ self.origin

    def as_dict(self) -> dict:
        return {
            "bits": format(self.code, "06b"),
            "origin": format(self.origin, "06b"),
            "quads": str(self.quads),
            "socks": list(self.socks.values),
            "socks_bits": format(self.socks_code, "06b"),
        }


def correspond(code: int, origin: int = DEFAULT_ORIGIN) -> Reading:
    """Both readings of an EvenQuads card once ``origin`` plays the empty sock card."""
    for c in (code, origin):
        if not 0 <= c < 64:
            raise InvalidCode(f"{c} is not a 6-bit code")
    return Reading(code, origin, card_label(QUADS, code), quads_to_socks(code ^ origin, allow_empty=True))


@dataclass(frozen=True)
class GroupPartition:
    """Groups of one attribute: single-zero, double-same, triple-diff-nonzero.

    Stored normalised: two single-zeros are folded into a double-same, so
    ``single_zero`` is 0 or 1; a greedy peel never leaves more than one
    triple-diff-nonzero since only three nonzero values exist.
    """

    single_zero: int
    double_same: int
    triple_diff: int

    @property
    def row(self) -> tuple[int, int, int]:
        return (self.single_zero, self.double_same, self.triple_diff)

    @property
    def size(self) -> int:
        return self.single_zero + 2 * self.double_same + 3 * self.triple_diff


class _NotPartitionable:
    def __bool__(self):
        return False

    def __repr__(self):
        return "NOT_PARTITIONABLE"


NOT_PARTITIONABLE = _NotPartitionable()


def attribute_values(cards: Collection[int], attribute: int, origin: int = DEFAULT_ORIGIN) -> list[int]:
    if attribute not in (0, 1, 2):
        raise OutOfRange(f"attribute must be 0, 1 or 2, got {attribute}")
    shift = _SHIFTS[attribute]
    return [((c ^ origin) >> shift) & 3 for c in cards]


def partition_values(values: Collection[int]) -> GroupPartition | _NotPartitionable:
    counts = Counter(values)
    zeros = counts.pop(0, 0)
    single, double = zeros % 2, zeros // 2
    leftover = []
    for v, k in counts.items():
        double += k // 2
        if k % 2:
            leftover.append(v)
    if not leftover:
        return GroupPartition(single, double, 0)
    if sorted(leftover) == [1, 2, 3]:
        return GroupPartition(single, double, 1)
    return NOT_PARTITIONABLE


def classify_attribute(cards: Collection[int], attribute: int, origin: int = DEFAULT_ORIGIN):
    cards = list(cards)
    if len(set(cards)) != len(cards):
        raise DuplicateCards(f"repeated card in {sorted(cards)}")
    return partition_values(attribute_values(cards, attribute, origin))


@dataclass(frozen=True)
class SocksMatch:
    matched: bool
    minimal: bool = False
    rows: tuple[tuple[int, int, int], ...] | None = None

    def __bool__(self):
        return self.matched


def is_socks_match(cards: Collection[int], origin: int = DEFAULT_ORIGIN) -> SocksMatch:
    """Whether EvenQuads cards form a matched set of socks relative to ``origin``.

    For a minimal matched set of 3..7 cards, ``rows`` holds the normalised
    (single-zero, double-same, triple-diff-nonzero) row of each attribute.
    """
    cards = list(cards)
    if len(set(cards)) != len(cards):
        raise DuplicateCards(f"repeated card in {sorted(cards)}")
    for c in cards:
        if not 0 <= c < 64:
            raise InvalidCode(f"{c} is not a 6-bit code")
    if origin in cards:
        raise OriginInSet("the origin card is not part of the playable deck")
    socks = [c ^ origin for c in cards]
    if len(socks) < 3 or xor_all(socks) != 0:
        return SocksMatch(False)
    minimal = gf2_rank(socks[1:]) == len(socks) - 1
    rows = None
    if minimal and 3 <= len(cards) <= 7:
        rows = tuple(classify_attribute(cards, a, origin).row for a in range(3))
    return SocksMatch(True, minimal, rows)


def enumerate_table3(n: int) -> list[tuple[int, int, int]]:
    """Normalised attribute distributions possible for n matched cards."""
    if not 3 <= n <= 7:
        raise OutOfRange(f"matched sets of interest have 3..7 cards, got {n}")
    rows = []
    for s, t in itertools.product((0, 1), repeat=2):
        rest = n - s - 3 * t
        if rest >= 0 and rest % 2 == 0:
            rows.append((s, rest // 2, t))
    return sorted(rows, reverse=True)


def seven_card_subspace(basis: tuple[int, int, int] = (0b010000, 0b000100, 0b000001)) -> list[int]:
    """The seven nonzero cards spanned by three independent codes.

    The default basis takes the low bit of each attribute, so every
    attribute splits as one single-zero plus three double-sames.
    """
    if gf2_rank(basis) != 3:
        raise InvalidCode("basis vectors are dependent")
    span = {xor_all(c for c, bit in zip(basis, bits) if bit) for bits in itertools.product((0, 1), repeat=3)}
    return sorted(span - {0})
