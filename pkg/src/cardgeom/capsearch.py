"""Caps (nosets) in Z_3^n, 2-caps (noquads) in Z_2^6, and certificates for them.

Both searches are depth-first over cards in ascending code order: a branch
only adds cards larger than the last one, and is cut when the pile plus all
still-admissible cards cannot beat the best pile so far.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import sqrt

import numpy as np

from .algebra import ternary
from .analysis import count_quads, count_sets
from .errors import BudgetTooSmall, OutOfRange


def count_internal(pile, kind: str) -> int:
    if kind == "set":
        return count_sets(pile)
    if kind == "quad":
        return count_quads(pile)
    raise ValueError(f"kind must be 'set' or 'quad', got {kind!r}")


def _count_sets_in(pile, n: int) -> int:
    t = ternary(n)
    cards = sorted(set(pile))
    present = set(cards)
    hits = sum(1 for i, a in enumerate(cards) for b in cards[i + 1 :] if t.third(a, b) in present)
    return hits // 3


@dataclass
class CapCertificate:
    p: int
    n: int
    pile: list[int]
    internal_count: int
    extension: dict[int, bool]
    elapsed_ms: int = 0
    optimal: bool = False
    nodes: int = 0

    @property
    def extension_blocked(self) -> bool:
        """Every card outside the pile would complete a set/quad."""
        return all(self.extension.values())

    @property
    def size(self) -> int:
        return len(self.pile)

    def to_dict(self) -> dict:
        return {
            "space": {"p": self.p, "n": self.n},
            "pile": list(self.pile),
            "internal_count": self.internal_count,
            "extension_blocked": self.extension_blocked,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _extension_report(pile: list[int], p: int, n: int) -> dict[int, bool]:
    inside = set(pile)
    report = {}
    if p == 3:
        t = ternary(n)
        closing = {t.third(a, b) for i, a in enumerate(pile) for b in pile[i + 1 :]}
        for c in range(3**n):
            if c not in inside:
                report[c] = c in closing
    else:
        xors = {a ^ b for i, a in enumerate(pile) for b in pile[i + 1 :]}
        for c in range(2**n):
            if c not in inside:
                report[c] = any(c ^ a in xors for a in pile)
    return report


def certify(pile, p: int, n: int, elapsed_ms: int = 0) -> CapCertificate:
    """Recompute internal count and extension report from scratch."""
    pile = sorted(pile)
    if p == 3:
        internal = _count_sets_in(pile, n)
    elif p == 2 and n == 6:
        internal = count_quads(pile)
    else:
        raise OutOfRange(f"no certificate for space ({p}, {n})")
    return CapCertificate(p, n, pile, internal, _extension_report(pile, p, n), elapsed_ms)


class _Clock:
    def __init__(self, budget: float):
        self.start = time.perf_counter()
        self.budget = budget
        self.expired = False

    def check(self) -> bool:
        if not self.expired and time.perf_counter() - self.start > self.budget:
            self.expired = True
        return self.expired

    @property
    def ms(self) -> int:
        return int((time.perf_counter() - self.start) * 1000)


def find_max_cap(p: int = 3, dim: int = 4, budget: float = 60.0, target: int | None = None) -> CapCertificate:
    """Largest cap found in Z_3^dim within ``budget`` seconds.

    The first card is fixed to the zero vector (any cap can be translated to
    contain it). When the search runs to completion the result is optimal;
    otherwise it is the best pile seen when the budget ran out or ``target``
    was reached.
    """
    if p != 3:
        raise OutOfRange("cap search is implemented for p = 3")
    if not 1 <= dim <= 4:
        raise OutOfRange(f"dimension must be in 1..4, got {dim}")
    if budget <= 0:
        raise BudgetTooSmall("budget must be positive")
    third = ternary(dim).third
    clock = _Clock(budget)
    best: list[int] = []
    nodes = 0
    stop = False

    def dfs(pile: list[int], cands: list[int]) -> None:
        nonlocal best, nodes, stop
        nodes += 1
        if len(pile) > len(best):
            best = list(pile)
            if target is not None and len(best) >= target:
                stop = True
                return
        for i, c in enumerate(cands):
            if len(pile) + len(cands) - i <= len(best):
                return
            if nodes & 0x3FF == 0 and clock.check():
                stop = True
            if stop:
                return
            blocked = {third(c, a) for a in pile}
            pile.append(c)
            dfs(pile, [x for x in cands[i + 1 :] if x not in blocked])
            pile.pop()

    dfs([0], list(range(1, 3**dim)))
    if len(best) < dim + 1:
        raise BudgetTooSmall(f"only a {len(best)}-cap found in Z_3^{dim}")
    cert = certify(best, 3, dim, clock.ms)
    cert.optimal = not stop
    cert.nodes = nodes
    return cert


def brute_force_max_cap(dim: int) -> int:
    """Exhaustive check of every subset; only feasible for dim <= 2."""
    if dim > 2:
        raise OutOfRange("brute force is limited to dim <= 2")
    t = ternary(dim)
    size = 3**dim
    lines = {tuple(sorted((a, b, t.third(a, b)))) for a in range(size) for b in range(a + 1, size)}
    best = 0
    for mask in range(1 << size):
        k = bin(mask).count("1")
        if k <= best:
            continue
        if not any(all(mask >> x & 1 for x in line) for line in lines):
            best = k
    return best


def find_noquad(budget: float = 60.0, size: int = 9) -> CapCertificate:
    """A quad-free pile of ``size`` cards in Z_2^6.

    A pile is quad-free iff its pairwise XORs are all distinct, so the
    search keeps the set of pairwise XORs and admits a card only if it adds
    no repeat.
    """
    if budget <= 0:
        raise BudgetTooSmall("budget must be positive")
    clock = _Clock(budget)
    found: list[int] | None = None
    nodes = 0

    def dfs(pile: list[int], sums: set[int], start: int) -> bool:
        nonlocal found, nodes
        nodes += 1
        if len(pile) == size:
            found = list(pile)
            return True
        if nodes & 0x3FF == 0 and clock.check():
            return False
        for c in range(start, 64):
            if len(pile) + 64 - c < size:
                return False
            new = [c ^ a for a in pile]
            if any(x in sums for x in new):
                continue
            pile.append(c)
            sums.update(new)
            if dfs(pile, sums, c + 1):
                return True
            sums.difference_update(new)
            pile.pop()
            if clock.expired:
                return False
        return False

    dfs([0], set(), 1)
    if found is None:
        raise BudgetTooSmall(f"no {size}-card noquad found within {budget}s")
    cert = certify(found, 2, 6, clock.ms)
    cert.nodes = nodes
    return cert


@dataclass(frozen=True)
class Estimate:
    value: float
    stderr: float
    hits: int
    samples: int
    seed: int
    pile_size: int = field(default=9)


def noquad_probability_estimate(pile_size: int = 9, samples: int = 1_000_000, seed: int = 0, chunk: int = 100_000) -> Estimate:
    """Monte Carlo fraction of uniform random piles that hold no quad.

    Uses numpy's PCG64 stream seeded with ``seed``; sampling is chunked but
    the draw order is fixed, so a (seed, samples, chunk) triple always gives
    the same count.
    """
    if samples < 10_000:
        raise OutOfRange("at least 10^4 samples are required")
    if not 0 <= pile_size <= 64:
        raise OutOfRange(f"pile size must be in 0..64, got {pile_size}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(pile_size, k=1)
    hits = 0
    remaining = samples
    while remaining:
        m = min(chunk, remaining)
        keys = rng.random((m, 64))
        piles = np.argpartition(keys, pile_size - 1, axis=1)[:, :pile_size] if pile_size else np.empty((m, 0), int)
        xors = np.sort(piles[:, iu] ^ piles[:, ju], axis=1)
        repeated = (xors[:, 1:] == xors[:, :-1]).any(axis=1) if xors.shape[1] > 1 else np.zeros(m, bool)
        hits += int((~repeated).sum())
        remaining -= m
    value = hits / samples
    return Estimate(value, sqrt(value * (1 - value) / samples), hits, samples, seed, pile_size)
