"""Projective planes PG(2, q) for prime q, Spot It! decks built from them,
and the Fano-plane correspondence with the 7-card Baby Socks deck."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import MultipleCommonSymbols, NoCommonSymbol, UnsupportedOrder


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def canonical_points(q: int) -> list[tuple[int, int, int]]:
    """Nonzero vectors of F_q^3 scaled so the first nonzero coordinate is 1,
    in lexicographic order."""
    pts = []
    for v in itertools.product(range(q), repeat=3):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


@dataclass(frozen=True)
class IncidencePlane:
    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: tuple[tuple[int, int, int], ...]
    incidence: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.points)

    def transpose(self) -> "IncidencePlane":
        """Swap the roles of points and lines."""
        dual = [set() for _ in self.points]
        for li, pts in enumerate(self.incidence):
            for p in pts:
                dual[p].add(li)
        return IncidencePlane(self.q, self.lines, self.points, tuple(frozenset(s) for s in dual))


@lru_cache(maxsize=None)
def build_projective_plane(q: int) -> IncidencePlane:
    if not _is_prime(q):
        raise UnsupportedOrder(f"only prime orders are supported, got {q}")
    pts = canonical_points(q)
    # lines are the same canonical vectors read as normals
    incidence = tuple(
        frozenset(i for i, p in enumerate(pts) if sum(a * b for a, b in zip(line, p)) % q == 0)
        for line in pts
    )
    return IncidencePlane(q, tuple(pts), tuple(pts), incidence)


@dataclass(frozen=True)
class SpotItDeck:
    q: int
    cards: tuple[frozenset[int], ...]

    @property
    def symbol_count(self) -> int:
        return self.q * self.q + self.q + 1


@lru_cache(maxsize=None)
def build_spotit_deck(q: int) -> SpotItDeck:
    plane = build_projective_plane(q)
    return SpotItDeck(q, plane.incidence)


@dataclass
class PlaneReport:
    cards: int
    symbols: int
    expected: int
    pairs_checked: int = 0
    failures: list[tuple[int, int, str]] = field(default_factory=list)
    card_size_errors: list[int] = field(default_factory=list)
    multiplicity_errors: dict[int, int] = field(default_factory=dict)
    count_ok: bool = True

    @property
    def ok(self) -> bool:
        """Pair property and uniform sizes hold.

        ``count_ok`` is reported separately since a deck with cards set aside
        keeps the pair property without being a full plane.
        """
        return not (self.failures or self.card_size_errors or self.multiplicity_errors)

    @property
    def complete(self) -> bool:
        return self.ok and self.count_ok


def common_symbols(c1: frozenset[int], c2: frozenset[int]) -> set[int]:
    return set(c1) & set(c2)


def verify_plane(deck: SpotItDeck | list, q: int | None = None) -> PlaneReport:
    """Exhaustive check of a Spot It! deck.

    Pair failures are tagged with the name of the exception a lookup of the
    common symbol would raise. For a partial deck (cards set aside) only the
    pair property and card sizes are meaningful; symbol multiplicities are
    checked only when the card count is the full q^2 + q + 1.
    """
    if isinstance(deck, SpotItDeck):
        q, cards = deck.q, list(deck.cards)
    else:
        cards = [frozenset(c) for c in deck]
        if q is None:
            q = len(cards[0]) - 1 if cards else 0
    full = q * q + q + 1
    universe = set().union(*cards) if cards else set()
    report = PlaneReport(cards=len(cards), symbols=len(universe), expected=full)
    for i, j in itertools.combinations(range(len(cards)), 2):
        report.pairs_checked += 1
        shared = len(cards[i] & cards[j])
        if shared == 0:
            report.failures.append((i, j, NoCommonSymbol.__name__))
        elif shared > 1:
            report.failures.append((i, j, MultipleCommonSymbols.__name__))
    report.card_size_errors = [i for i, c in enumerate(cards) if len(c) != q + 1]
    report.count_ok = len(cards) == full and len(universe) == full
    if report.count_ok:
        counts: dict[int, int] = {}
        for c in cards:
            for s in c:
                counts[s] = counts.get(s, 0) + 1
        report.multiplicity_errors = {s: k for s, k in counts.items() if k != q + 1}
    return report


def verify_incidence(plane: IncidencePlane) -> PlaneReport:
    """verify_plane plus the dual statement: any two points lie on one line."""
    report = verify_plane(SpotItDeck(plane.q, plane.incidence))
    dual = verify_plane(SpotItDeck(plane.q, plane.transpose().incidence))
    report.failures += [(i, j, "points:" + why) for i, j, why in dual.failures]
    return report


def load_symbol_names(text: str) -> dict[int, str]:
    """Parse a ``id: name`` per line symbol table; ``#`` starts a comment."""
    names = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ValueError(f"expected 'id: name', got {raw!r}")
        names[int(key.strip())] = value.strip()
    return names


@dataclass(frozen=True)
class FanoCorrespondence:
    """Baby Socks cards (nonzero Z_2^3 codes) as Fano points, matched
    triples as Fano lines."""

    point_of_card: dict[int, int]
    card_of_point: dict[int, int]
    line_of_triple: dict[frozenset[int], int]
    triples: tuple[frozenset[int], ...]


def baby_socks_triples() -> list[frozenset[int]]:
    return [frozenset(t) for t in itertools.combinations(range(1, 8), 3) if t[0] ^ t[1] ^ t[2] == 0]


def fano_socks_correspondence() -> FanoCorrespondence:
    # Over F_2 the canonical representative of a point is the vector itself,
    # so a Baby Socks code maps to the point with the same bits.
    plane = build_projective_plane(2)
    point_of_card = {}
    for i, p in enumerate(plane.points):
        code = p[0] << 2 | p[1] << 1 | p[2]
        point_of_card[code] = i
    card_of_point = {v: k for k, v in point_of_card.items()}
    line_of_triple = {}
    triples = baby_socks_triples()
    for t in triples:
        pts = frozenset(point_of_card[c] for c in t)
        matches = [li for li, inc in enumerate(plane.incidence) if inc == pts]
        if len(matches) != 1:
            raise AssertionError(f"triple {sorted(t)} is not a Fano line")
        line_of_triple[t] = matches[0]
    return FanoCorrespondence(point_of_card, card_of_point, line_of_triple, tuple(triples))
