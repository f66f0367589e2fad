"""Full mathematical decks, card labels, the 8x8 grid and the 27-card subdecks.

Card codes:

* SET   -- 4 base-3 digits (number, color, shading, shape), code in [0, 81)
* SOCKS -- 6 bits, one per sock color, code in [1, 64)
* QUADS -- 6 bits, two per attribute (number, color, shape), code in [0, 64)
* SPOTIT(q) -- line index of PG(2, q); the card's symbols are the incident points
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import decode, encode
from .errors import InvalidCode, UnsupportedOrder

SET_NUMBERS = ("1", "2", "3")
SET_COLORS = ("Green", "Red", "Purple")
SET_SHADINGS = ("Empty", "Striped", "Solid")
SET_SHAPES = ("Oval", "Diamond", "Squiggle")
SET_ATTRIBUTES = (SET_NUMBERS, SET_COLORS, SET_SHADINGS, SET_SHAPES)
SET_RED = SET_COLORS.index("Red")

SOCK_COLORS = ("red", "blue", "green", "pink", "purple", "yellow")

QUAD_NUMBERS = ("1", "2", "3", "4")
QUAD_COLORS = ("Red", "Green", "Yellow", "Blue")
QUAD_SHAPES = ("Square", "Icosahedron", "Circle", "Spiral")
QUAD_PLURALS = ("Squares", "Icosahedrons", "Circles", "Spirals")
QUAD_ATTRIBUTES = (QUAD_NUMBERS, QUAD_COLORS, QUAD_SHAPES)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q**0.5) + 1))


@dataclass(frozen=True)
class DeckKind:
    game: str
    q: int | None = None

    def __post_init__(self):
        if self.game not in ("SET", "SOCKS", "QUADS", "SPOTIT"):
            raise ValueError(f"unknown game {self.game!r}")
        if self.game == "SPOTIT":
            if self.q is None or not is_prime(self.q):
                raise UnsupportedOrder(f"Spot It! order must be prime, got {self.q}")
        elif self.q is not None:
            raise ValueError(f"{self.game} takes no plane order")

    def __str__(self):
        return f"SPOTIT({self.q})" if self.game == "SPOTIT" else self.game

    @property
    def geometry(self) -> dict:
        if self.game == "SET":
            return {"p": 3, "n": 4}
        if self.game == "SPOTIT":
            return {"q": self.q}
        return {"p": 2, "n": 6}

    @property
    def size(self) -> int:
        return {"SET": 81, "SOCKS": 63, "QUADS": 64}.get(
            self.game, (self.q or 0) ** 2 + (self.q or 0) + 1
        )


SET = DeckKind("SET")
SOCKS = DeckKind("SOCKS")
QUADS = DeckKind("QUADS")


def SPOTIT(q: int) -> DeckKind:
    return DeckKind("SPOTIT", q)


@dataclass(frozen=True)
class Deck:
    kind: DeckKind
    cards: tuple[int, ...]
    symbols: tuple[frozenset[int], ...] | None = None

    @property
    def geometry(self) -> dict:
        return self.kind.geometry

    def __len__(self):
        return len(self.cards)

    def __iter__(self):
        return iter(self.cards)

    def __contains__(self, code):
        return code in self.cards


def build_deck(kind: DeckKind) -> Deck:
    if kind.game == "SET":
        return Deck(kind, tuple(range(81)))
    if kind.game == "SOCKS":
        return Deck(kind, tuple(range(1, 64)))
    if kind.game == "QUADS":
        return Deck(kind, tuple(range(64)))
    from .projective import build_spotit_deck

    spot = build_spotit_deck(kind.q)
    return Deck(kind, tuple(range(len(spot.cards))), tuple(spot.cards))


def _check_code(kind: DeckKind, code: int) -> None:
    if not isinstance(code, int) or isinstance(code, bool):
        raise InvalidCode(f"card code must be an int, got {code!r}")
    lo = 1 if kind.game == "SOCKS" else 0
    if not lo <= code < kind.size + lo:
        raise InvalidCode(f"{code} is not a {kind} card")


def bits(kind: DeckKind, code: int) -> str:
    _check_code(kind, code)
    if kind.game == "SET":
        return "".join(map(str, decode(code, 3, 4)))
    if kind.game == "SPOTIT":
        return str(code)
    return format(code, "06b")


def quad_values(code: int) -> tuple[int, int, int]:
    """(number, color, shape) as values in 0..3."""
    return (code >> 4) & 3, (code >> 2) & 3, code & 3


def quad_code(number: int, color: int, shape: int) -> int:
    return (number << 4) | (color << 2) | shape


@dataclass(frozen=True)
class CardLabel:
    """Human reading of a card: one entry per attribute.

    For SOCKS the values are the sock colors present on the card, for
    SPOTIT the symbol ids.
    """

    game: str
    values: tuple

    def __str__(self):
        if self.game == "SET":
            number, color, shading, shape = self.values
            return f"{number} {color} {shading} {shape}{'' if number == '1' else 's'}"
        if self.game == "QUADS":
            number, color, shape = self.values
            if number != "1":
                shape = QUAD_PLURALS[QUAD_SHAPES.index(shape)]
            return f"{number} {color} {shape}"
        if self.game == "SOCKS":
            return ", ".join(self.values)
        return " ".join(str(s) for s in self.values)


def card_label(kind: DeckKind, code: int) -> CardLabel:
    _check_code(kind, code)
    if kind.game == "SET":
        return CardLabel("SET", tuple(a[d] for a, d in zip(SET_ATTRIBUTES, decode(code, 3, 4))))
    if kind.game == "QUADS":
        return CardLabel("QUADS", tuple(a[v] for a, v in zip(QUAD_ATTRIBUTES, quad_values(code))))
    if kind.game == "SOCKS":
        return CardLabel("SOCKS", tuple(c for i, c in enumerate(SOCK_COLORS) if code >> (5 - i) & 1))
    return CardLabel("SPOTIT", tuple(sorted(build_deck(kind).symbols[code])))


def _singular(word: str, names: Iterable[str]) -> str:
    for name in names:
        if word.lower() in (name.lower(), name.lower() + "s"):
            return name
    for plural, name in zip(QUAD_PLURALS, QUAD_SHAPES):
        if word.lower() == plural.lower():
            return name
    raise InvalidCode(f"unknown attribute value {word!r}")


def parse_label(kind: DeckKind, text: str) -> CardLabel:
    if kind.game == "SOCKS":
        colors = [w.strip().lower() for w in text.replace(",", " ").split() if w.strip()]
        return CardLabel("SOCKS", tuple(c for c in SOCK_COLORS if c in colors))
    words = text.split()
    if kind.game == "SET" and len(words) == 4:
        return CardLabel("SET", tuple(_singular(w, a) for w, a in zip(words, SET_ATTRIBUTES)))
    if kind.game == "QUADS" and len(words) == 3:
        return CardLabel("QUADS", tuple(_singular(w, a) for w, a in zip(words, QUAD_ATTRIBUTES)))
    if kind.game == "SPOTIT":
        return CardLabel("SPOTIT", tuple(sorted(int(w) for w in words)))
    raise InvalidCode(f"cannot parse {text!r} as a {kind} label")


def label_to_code(kind: DeckKind, label: CardLabel | str) -> int:
    if isinstance(label, str):
        label = parse_label(kind, label)
    try:
        if kind.game == "SET":
            return encode([a.index(v) for a, v in zip(SET_ATTRIBUTES, label.values)], 3)
        if kind.game == "QUADS":
            return quad_code(*(a.index(v) for a, v in zip(QUAD_ATTRIBUTES, label.values)))
        if kind.game == "SOCKS":
            unknown = set(label.values) - set(SOCK_COLORS)
            if unknown:
                raise InvalidCode(f"unknown sock colors {sorted(unknown)}")
            code = sum(1 << (5 - SOCK_COLORS.index(c)) for c in set(label.values))
            if code == 0:
                raise InvalidCode("the Socks deck has no empty card")
            return code
    except ValueError as exc:
        raise InvalidCode(str(exc)) from None
    wanted = frozenset(label.values)
    for code, syms in enumerate(build_deck(kind).symbols):
        if syms == wanted:
            return code
    raise InvalidCode(f"no card carries symbols {sorted(wanted)}")


def card_to_grid(code: int) -> tuple[int, int]:
    """Cell of a Z_2^6 code in the 8x8 grid.

    Bit pairs (b1 b2), (b3 b4), (b5 b6) pick the quadrant at the 4x4, 2x2 and
    unit scale; the first bit of a pair is the row half, the second the column.
    """
    if not isinstance(code, int) or not 0 <= code < 64:
        raise InvalidCode(f"{code!r} is not a 6-bit code")
    b = [(code >> (5 - i)) & 1 for i in range(6)]
    return 4 * b[0] + 2 * b[2] + b[4], 4 * b[1] + 2 * b[3] + b[5]


def grid_to_card(row: int, col: int) -> int:
    if not (0 <= row < 8 and 0 <= col < 8):
        raise InvalidCode(f"cell ({row}, {col}) is off the 8x8 grid")
    code = 0
    for shift in (2, 1, 0):
        code = (code << 2) | ((row >> shift) & 1) << 1 | ((col >> shift) & 1)
    return code


def render_grid(code: int) -> str:
    row, col = card_to_grid(code)
    lines = []
    for r in range(8):
        lines.append(" ".join("#" if (r, c) == (row, col) else "." for c in range(8)))
    return "\n".join(lines)


# positional value maps for the free attributes of the two 27-card subdecks
_SQUADS_NUMBERS = (0, 1, 2)  # 1, 2, 3 symbols
_SQUADS_COLORS = (1, 2, 3)  # green, yellow, blue
_SQUADS_SHAPES = (0, 2, 3)  # square, circle, spiral


@dataclass(frozen=True)
class Subdecks:
    qset: Deck
    squads: Deck
    forward: dict[int, int] = field(repr=False)
    inverse: dict[int, int] = field(repr=False)


def subdeck_isomorphism() -> Subdecks:
    """Q-SET (red SET cards) and S-Quads with the positional bijection between them.

    Q-SET keeps number, shading, shape free; S-Quads drops red, icosahedrons
    and four-symbol cards, leaving number, color, shape with three values each.
    """
    qset = tuple(c for c in range(81) if decode(c, 3, 4)[1] == SET_RED)
    squads = tuple(
        c
        for c in range(64)
        if quad_values(c)[0] != 3 and quad_values(c)[1] != 0 and quad_values(c)[2] != 1
    )
    forward = {}
    for c in qset:
        number, _, shading, shape = decode(c, 3, 4)
        forward[c] = quad_code(
            _SQUADS_NUMBERS[number], _SQUADS_COLORS[shading], _SQUADS_SHAPES[shape]
        )
    inverse = {v: k for k, v in forward.items()}
    return Subdecks(Deck(SET, qset), Deck(QUADS, squads), forward, inverse)


def squads_digits(code: int) -> tuple[int, int, int]:
    """Three ternary digits of an S-Quads card, via the positional maps."""
    number, color, shape = quad_values(code)
    return (
        _SQUADS_NUMBERS.index(number),
        _SQUADS_COLORS.index(color),
        _SQUADS_SHAPES.index(shape),
    )


def deck_records(deck: Deck) -> list[dict]:
    rows = []
    for code in deck.cards:
        row = {"code": code, "bits": bits(deck.kind, code), "label": str(card_label(deck.kind, code))}
        if deck.symbols is not None:
            row["symbols"] = sorted(deck.symbols[code])
        rows.append(row)
    return rows


def deck_to_json(deck: Deck) -> str:
    payload = {"kind": str(deck.kind), "geometry": deck.geometry, "cards": deck_records(deck)}
    return json.dumps(payload, indent=2)


def deck_to_csv(deck: Deck) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["code", "bits", "label"])
    for row in deck_records(deck):
        writer.writerow([row["code"], row["bits"], row["label"]])
    return buf.getvalue()


def deck_to_text(deck: Deck) -> str:
    return "\n".join(f"{r['code']:>3}  {r['bits']:>8}  {r['label']}" for r in deck_records(deck)) + "\n"
