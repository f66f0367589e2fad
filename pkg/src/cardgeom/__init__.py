"""Decks, rules, probabilities and searches for SET, Socks, Spot It! and EvenQuads."""

from .algebra import FpVector, Rational, group_sum, negate, rational_ops
from .decks import QUADS, SET, SOCKS, SPOTIT, Deck, DeckKind, build_deck, card_label, label_to_code

__version__ = "0.1.0"

__all__ = [
    "FpVector",
    "Rational",
    "group_sum",
    "negate",
    "rational_ops",
    "Deck",
    "DeckKind",
    "SET",
    "SOCKS",
    "QUADS",
    "SPOTIT",
    "build_deck",
    "card_label",
    "label_to_code",
]
