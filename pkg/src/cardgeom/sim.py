"""Deterministic simulations of SET, Socks, EvenQuads and Spot It!.

Machine players are greedy: each turn the first valid group in canonical
(ascending code) order is claimed, and the claiming player is drawn from the
seeded PRNG. Nothing else is random, so a config fully determines its log.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from statistics import mean

from .decks import QUADS, SET, SOCKS, SPOTIT, build_deck
from .errors import CardGeomError
from .rng import Xoshiro256
from .rules import (
    common_symbol,
    find_matches,
    find_quads,
    find_sets,
    is_match,
    is_official_match,
    is_quad,
    is_set,
)

VARIANTS = {
    "set": ("standard",),
    "socks": ("extended", "official"),
    "quads": ("standard",),
    "spotit": ("tower", "well"),
}

DEFAULT_TABLE = {
    ("set", "standard"): 12,
    ("socks", "extended"): 9,
    ("socks", "official"): 12,
    ("quads", "standard"): 9,
}

# cards the dealer adds when the table holds no claim
EXTRA_CARDS = {"set": 3, "socks": 3, "quads": 1}


class ReplayError(CardGeomError):
    pass


@dataclass(frozen=True)
class GameConfig:
    game: str
    variant: str | None = None
    players: int = 2
    seed: int = 0
    table_size: int | None = None
    q: int = 7

    def __post_init__(self):
        if self.game not in VARIANTS:
            raise ValueError(f"unknown game {self.game!r}")
        if self.variant is None:
            object.__setattr__(self, "variant", VARIANTS[self.game][0])
        if self.variant not in VARIANTS[self.game]:
            raise ValueError(f"{self.game} has no variant {self.variant!r}")
        if self.players < 1:
            raise ValueError("at least one player is needed")
        if self.game != "spotit" and self.table_size is None:
            object.__setattr__(self, "table_size", DEFAULT_TABLE[(self.game, self.variant)])
        if self.game == "quads" and not 6 <= self.table_size <= 9:
            raise ValueError(f"EvenQuads table size must be in 6..9, got {self.table_size}")
        if self.game == "spotit" and self.players + 1 > self.q * self.q + self.q + 1:
            raise ValueError("more players than Spot It! cards")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class GameLog:
    config: GameConfig
    shuffle: list[int]
    events: list[dict] = field(default_factory=list)
    final_table: list[int] = field(default_factory=list)
    scores: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "shuffle": self.shuffle,
            "events": self.events,
            "final_table": self.final_table,
            "scores": self.scores,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "GameLog":
        raw = json.loads(text)
        return cls(GameConfig(**raw["config"]), raw["shuffle"], raw["events"], raw["final_table"], raw["scores"])

    @property
    def claims(self) -> list[dict]:
        return [e for e in self.events if e["type"] == "claim"]


def _deck_for(config: GameConfig) -> list[int]:
    kind = {"set": SET, "socks": SOCKS, "quads": QUADS}.get(config.game) or SPOTIT(config.q)
    return list(build_deck(kind).cards)


def _find_claim(game: str, variant: str, table: list[int]) -> tuple[int, ...] | None:
    if game == "set":
        return next(find_sets(table), None)
    if game == "quads":
        return next(find_quads(table), None)
    sizes = (3,) if variant == "official" else range(3, 8)
    for k in sizes:
        hit = next(find_matches(table, k), None)
        if hit is not None:
            return hit
    return None


def _claim_is_legal(game: str, variant: str, cards: list[int]) -> bool:
    if game == "set":
        return len(cards) == 3 and is_set(*cards)
    if game == "quads":
        return len(cards) == 4 and is_quad(*cards)
    if variant == "official":
        return is_official_match(cards)
    return is_match(cards)


def _points(game: str, cards) -> int:
    # SET scores sets, Socks a point per card, EvenQuads counts quad cards
    return 1 if game == "set" else len(cards)


def _simulate_table_game(config: GameConfig, rng: Xoshiro256, order: list[int]) -> GameLog:
    log = GameLog(config, list(order))
    deck = list(order)
    scores = [0] * config.players
    table = deck[: config.table_size]
    del deck[: config.table_size]
    log.events.append({"type": "deal", "cards": list(table)})
    while True:
        claim = _find_claim(config.game, config.variant, table)
        if claim is not None:
            player = rng.below(config.players)
            for c in claim:
                table.remove(c)
            scores[player] += _points(config.game, claim)
            log.events.append({"type": "claim", "player": player, "cards": list(claim)})
            need = max(0, config.table_size - len(table))
            if need and deck:
                drawn, deck = deck[:need], deck[need:]
                table += drawn
                log.events.append({"type": "refill", "cards": drawn})
        elif deck:
            k = EXTRA_CARDS[config.game]
            drawn, deck = deck[:k], deck[k:]
            table += drawn
            log.events.append({"type": "extra", "cards": drawn})
        else:
            break
    log.final_table = list(table)
    log.scores = {str(i): s for i, s in enumerate(scores)}
    return log


def _simulate_spotit(config: GameConfig, rng: Xoshiro256, order: list[int]) -> GameLog:
    symbols = build_deck(SPOTIT(config.q)).symbols
    log = GameLog(config, list(order))
    p = config.players
    if config.variant == "tower":
        piles = [[c] for c in order[:p]]
        center = list(order[p:])
        log.events.append({"type": "deal", "cards": list(order[:p])})
        for card in center:
            tops = [pile[-1] for pile in piles]
            found = [common_symbol(symbols[t], symbols[card]) for t in tops]
            winner = rng.below(p)
            piles[winner].append(card)
            log.events.append({"type": "turn", "center": card, "tops": tops, "symbols": found, "winner": winner})
        log.final_table = []
        log.scores = {str(i): len(pile) for i, pile in enumerate(piles)}
        return log
    # well: first card to the middle, the rest dealt round-robin face down
    middle = order[0]
    hands = [list(order[1 + i :: p]) for i in range(p)]
    log.events.append({"type": "deal", "cards": [middle]})
    while all(hands):
        tops = [h[0] for h in hands]
        found = [common_symbol(symbols[t], symbols[middle]) for t in tops]
        winner = rng.below(p)
        log.events.append({"type": "turn", "center": middle, "tops": tops, "symbols": found, "winner": winner})
        middle = hands[winner].pop(0)
    log.final_table = [middle]
    log.scores = {str(i): len(h) for i, h in enumerate(hands)}
    return log


def simulate(config: GameConfig) -> GameLog:
    rng = Xoshiro256(config.seed)
    order = _deck_for(config)
    rng.shuffle(order)
    if config.game == "spotit":
        return _simulate_spotit(config, rng, order)
    return _simulate_table_game(config, rng, order)


def replay(log: GameLog) -> tuple[list[int], dict[str, int]]:
    """Rebuild the final table and scores from the shuffle and events alone.

    Every draw must follow the shuffled order and every claim or turn is
    re-checked against the rules; any mismatch raises ReplayError.
    """
    config = log.config
    expected = _deck_for(config)
    if sorted(log.shuffle) != sorted(expected):
        raise ReplayError("shuffle is not a permutation of the deck")
    if config.game == "spotit":
        return _replay_spotit(log)
    deck = list(log.shuffle)
    table: list[int] = []
    scores = [0] * config.players
    for e in log.events:
        kind, cards = e["type"], list(e["cards"])
        if kind in ("deal", "refill", "extra"):
            if deck[: len(cards)] != cards:
                raise ReplayError(f"{kind} does not follow the shuffled order")
            del deck[: len(cards)]
            table += cards
        elif kind == "claim":
            if len(set(cards)) != len(cards) or any(c not in table for c in cards):
                raise ReplayError(f"claimed cards {cards} are not on the table")
            if not _claim_is_legal(config.game, config.variant, cards):
                raise ReplayError(f"illegal claim {cards}")
            for c in cards:
                table.remove(c)
            scores[e["player"]] += _points(config.game, cards)
        else:
            raise ReplayError(f"unknown event {kind!r}")
    if deck or _find_claim(config.game, config.variant, table) is not None:
        raise ReplayError("game stopped before it was over")
    return table, {str(i): s for i, s in enumerate(scores)}


def _replay_spotit(log: GameLog) -> tuple[list[int], dict[str, int]]:
    config = log.config
    symbols = build_deck(SPOTIT(config.q)).symbols
    p = config.players
    order = log.shuffle
    turns = [e for e in log.events if e["type"] == "turn"]
    for e in turns:
        for top, sym in zip(e["tops"], e["symbols"]):
            if common_symbol(symbols[top], symbols[e["center"]]) != sym:
                raise ReplayError(f"wrong symbol {sym} for cards {top} and {e['center']}")
    if config.variant == "tower":
        piles = [[c] for c in order[:p]]
        if [e["center"] for e in turns] != list(order[p:]):
            raise ReplayError("tower turns do not follow the center pile")
        for e in turns:
            if e["tops"] != [pile[-1] for pile in piles]:
                raise ReplayError("tower tops disagree with the piles")
            piles[e["winner"]].append(e["center"])
        return [], {str(i): len(pile) for i, pile in enumerate(piles)}
    middle = order[0]
    hands = [list(order[1 + i :: p]) for i in range(p)]
    for e in turns:
        if e["center"] != middle or e["tops"] != [h[0] for h in hands]:
            raise ReplayError("well turn disagrees with the hands")
        middle = hands[e["winner"]].pop(0)
    if all(hands):
        raise ReplayError("well game stopped while every player still holds cards")
    return [middle], {str(i): len(h) for i, h in enumerate(hands)}


@dataclass(frozen=True)
class BatchSummary:
    runs: int
    mean_claims: float
    mean_leftover: float
    max_leftover: int
    stranded: int
    leftover_histogram: dict[int, int]

    @property
    def stranded_frequency(self) -> float:
        """Share of games that ended with cards left on the table."""
        return self.stranded / self.runs

    def to_dict(self) -> dict:
        d = asdict(self)
        d["leftover_histogram"] = {str(k): v for k, v in sorted(self.leftover_histogram.items())}
        d["stranded_frequency"] = self.stranded_frequency
        return d


def _leftover(config: GameConfig) -> tuple[int, int]:
    log = simulate(config)
    if config.game == "spotit":
        return len(log.events) - 1, 0
    return len(log.claims), len(log.final_table)


def batch_seeds(seed: int, runs: int) -> list[int]:
    return [seed + i for i in range(runs)]


def simulate_batch(config: GameConfig, runs: int, threads: int = 1) -> BatchSummary:
    """Run ``runs`` games with seeds seed, seed+1, ...; results merge in seed order."""
    if runs < 1:
        raise ValueError("runs must be >= 1")
    configs = [GameConfig(**{**config.to_dict(), "seed": s}) for s in batch_seeds(config.seed, runs)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_leftover, configs, chunksize=max(1, runs // (4 * threads))))
    else:
        results = [_leftover(c) for c in configs]
    claims = [r[0] for r in results]
    left = [r[1] for r in results]
    hist: dict[int, int] = {}
    for x in left:
        hist[x] = hist.get(x, 0) + 1
    return BatchSummary(
        runs=runs,
        mean_claims=mean(claims),
        mean_leftover=mean(left),
        max_leftover=max(left),
        stranded=sum(1 for x in left if x),
        leftover_histogram=hist,
    )
