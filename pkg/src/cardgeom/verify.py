"""Executable invariant checks, grouped for the ``verify`` command.

Every check recomputes its claim from scratch and returns a short detail
string; a check fails by returning False or raising.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from . import algebra, analysis, capsearch, decks, projective, rules, sim, xmap
from .algebra import FpVector


@dataclass
class CheckResult:
    group: str
    name: str
    ok: bool
    detail: str
    seconds: float


CHECKS: list[tuple[str, str, Callable[[], tuple[bool, str]]]] = []


def check(group: str, name: str):
    def register(fn):
        CHECKS.append((group, name, fn))
        return fn

    return register


# algebra


@check("algebra", "group sum is commutative, associative, and v + (-v) = 0")
def _algebra_group():
    for p, n in ((2, 6), (3, 4)):
        vs = [FpVector.decode(c, p, n) for c in range(p**n)]
        zero = FpVector.zero(p, n)
        for a, b in itertools.product(vs, repeat=2):
            if a + b != b + a or a + algebra.negate(a) != zero:
                return False, f"failed at {a}, {b}"
        rng = random.Random(0)
        for _ in range(2000):
            a, b, c = rng.choice(vs), rng.choice(vs), rng.choice(vs)
            if (a + b) + c != a + (b + c):
                return False, f"not associative at {a}, {b}, {c}"
    return True, "all pairs in F2^6 and F3^4"


@check("algebra", "integer encoding round-trips")
def _algebra_codes():
    for p, n in ((2, 6), (3, 4), (3, 3), (5, 3)):
        if any(FpVector.decode(c, p, n).encode() != c for c in range(p**n)):
            return False, f"({p}, {n})"
    return True, "all codes"


@check("algebra", "rational arithmetic matches cross-multiplication")
def _algebra_rationals():
    rng = random.Random(1)
    for _ in range(1000):
        a, b = rng.randint(-10**12, 10**12), rng.randint(1, 10**12)
        c, d = rng.randint(-10**12, 10**12), rng.randint(1, 10**12)
        x, y = Fraction(a, b), Fraction(c, d)
        if algebra.rational_ops(x, y, "add") * (b * d) != a * d + c * b:
            return False, "add"
        if algebra.rational_ops(x, y, "mul") * (b * d) != a * c:
            return False, "mul"
    return True, "1000 random pairs"


# decks


@check("decks", "deck sizes and Socks = Quads minus zero")
def _deck_sizes():
    sizes = {str(k): len(decks.build_deck(k)) for k in (decks.SET, decks.SOCKS, decks.QUADS, decks.SPOTIT(7))}
    same = set(decks.build_deck(decks.SOCKS).cards) == set(decks.build_deck(decks.QUADS).cards) - {0}
    ok = sizes == {"SET": 81, "SOCKS": 63, "QUADS": 64, "SPOTIT(7)": 57} and same
    return ok, str(sizes)


@check("decks", "each sock color appears on 32 cards")
def _sock_colors():
    counts = [sum(c >> b & 1 for c in range(1, 64)) for b in range(6)]
    return counts == [32] * 6, str(counts)


@check("decks", "grid placement is a bijection")
def _grid():
    cells = {decks.card_to_grid(c) for c in range(64)}
    back = all(decks.grid_to_card(*decks.card_to_grid(c)) == c for c in range(64))
    return len(cells) == 64 and back, "64 cells"


@check("decks", "labels round-trip for every card")
def _labels():
    for kind in (decks.SET, decks.SOCKS, decks.QUADS, decks.SPOTIT(5)):
        for c in decks.build_deck(kind).cards:
            if decks.label_to_code(kind, str(decks.card_label(kind, c))) != c:
                return False, f"{kind} {c}"
    return True, "SET, SOCKS, QUADS, SPOTIT(5)"


@check("decks", "Q-SET and S-Quads: 27 cards each, bijection, 117 sets")
def _subdecks():
    sub = decks.subdeck_isomorphism()
    inverse_ok = all(sub.inverse[sub.forward[c]] == c for c in sub.qset.cards)
    sets = analysis.count_sets(sub.qset.cards)
    ok = len(sub.qset) == 27 and len(sub.squads) == 27 and inverse_ok and sets == 117
    return ok, f"sets in Q-SET = {sets}"


# rules


@check("rules", "completions never return an input card")
def _completions():
    for a, b in itertools.combinations(range(81), 2):
        c = rules.complete_set(a, b)
        if c in (a, b) or not rules.is_set(a, b, c):
            return False, f"SET {a}, {b}"
    rng = random.Random(2)
    for _ in range(2000):
        a, b, c = rng.sample(range(64), 3)
        d = rules.complete_quad(a, b, c)
        if d in (a, b, c) or not rules.is_quad(a, b, c, d):
            return False, f"quad {a}, {b}, {c}"
    return True, "all SET pairs, 2000 quad triples"


@check("rules", "every quad is coplanar: d = b ^ c after translating by a")
def _coplanar():
    n = 0
    for q in itertools.combinations(range(64), 4):
        a, b, c, d = q
        if a ^ b ^ c ^ d == 0:
            n += 1
            if d ^ a != (b ^ a) ^ (c ^ a):
                return False, str(q)
    return n == 10416, f"{n} quads"


@check("rules", "quad types never include SSS or SSH")
def _quad_types():
    seen = set()
    for q in rules.find_quads(range(64)):
        seen.add(rules.quad_type(q))
    return seen == set(rules.QUAD_TYPES), ", ".join(sorted(seen))


@check("rules", "six blue-sock cards never split into two matched triples")
def _blue_socks():
    blue = [c for c in range(1, 64) if c & 0b010000]
    rng = random.Random(3)
    for _ in range(1000):
        pile = rng.sample(blue, 6)
        if rules.split_into_matched_triples(pile):
            return False, str(pile)
    return True, "1000 random piles"


@check("rules", "minimal matched sets have 3..7 cards")
def _minimal_sizes():
    rng = random.Random(4)
    checked = 0
    while checked < 200:
        head = rng.sample(range(1, 64), rng.randint(2, 11))
        last = algebra.xor_all(head)
        if last == 0 or last in head:
            continue
        pile = head + [last]
        checked += 1
        for k in range(3, len(pile) + 1):
            for sub in itertools.combinations(pile, k):
                if algebra.xor_all(sub) == 0 and rules.is_minimal_match(sub) and not 3 <= k <= 7:
                    return False, str(sub)
    return True, "all subsets of 200 random matched sets"


# probability


@check("probability", "recursion equals closed form for odd n")
def _closed_form():
    bad = [n for n in range(1, 62, 2) if analysis.match_probability(n) != analysis.match_probability_closed(n)]
    return not bad, f"mismatch at {bad}" if bad else "n = 1, 3, ..., 61"


@check("probability", "recursion equals subset-sum DP for n in 0..63")
def _dp():
    table = analysis.subset_sum_table(decks.build_deck(decks.SOCKS))
    bad = [n for n in range(64) if Fraction(table(n, 0), comb(63, n)) != analysis.match_probability(n)]
    return not bad, f"mismatch at {bad}" if bad else "64 sizes"


@check("probability", "P(n) = P(63 - n) and P(2n) = P(2n - 1)")
def _symmetry():
    P = analysis.match_probability
    ok = all(P(n) == P(63 - n) for n in range(64)) and all(P(2 * n) == P(2 * n - 1) for n in range(1, 32))
    return ok, "whole table"


@check("probability", "with the zero card, odd-size subsets XOR to zero w.p. 1/64")
def _one_64():
    table = analysis.subset_sum_table(decks.build_deck(decks.QUADS))
    odd = all(Fraction(table(n, 0), comb(64, n)) == analysis.ONE_64 for n in range(1, 64, 2))
    return odd, "odd n in 1..63 (even n differ, e.g. n = 2 gives 0)"


@check("probability", "P(n) - 1/64 alternates in sign over odd n")
def _signs():
    signs = [analysis.match_probability(n) > analysis.ONE_64 for n in range(1, 62, 2)]
    return all(a != b for a, b in zip(signs, signs[1:])), "n = 1..61"


@check("probability", "set and quad counts: 1080 sets, 10416 quads, 140 quads for m = 2")
def _counts():
    sets = analysis.count_sets(range(81))
    quads = analysis.count_quads(range(64))
    small = sum(1 for q in itertools.combinations(range(16), 4) if q[0] ^ q[1] ^ q[2] ^ q[3] == 0)
    ok = sets == 1080 and quads == 10416 == analysis.total_quads(3) and small == 140 == analysis.total_quads(2)
    return ok, f"{sets}, {quads}, {small}"


@check("probability", "complementary piles: S_A + S_B = (2160 - |A||B|)/2")
def _complementary():
    rng = random.Random(5)
    deck = list(range(81))
    for i in range(200):
        size = (10, 20, 27, 40)[i % 4]
        a = rng.sample(deck, size)
        b = sorted(set(deck) - set(a))
        if analysis.count_sets(a) + analysis.count_sets(b) != analysis.complementary_identity_product(size):
            return False, f"|A| = {size}"
    return True, "200 random partitions"


# capsearch


@check("capsearch", "pruned DFS matches brute force on Z3^1, Z3^2")
def _cap_small():
    found = [capsearch.find_max_cap(3, d, 10).size for d in (1, 2)]
    brute = [capsearch.brute_force_max_cap(d) for d in (1, 2)]
    return found == brute == [2, 4], f"{found} vs {brute}"


@check("capsearch", "certificates re-verify from scratch")
def _certificates():
    certs = [capsearch.find_max_cap(3, 4, 10, target=20), capsearch.find_noquad(10)]
    for c in certs:
        again = capsearch.certify(c.pile, c.p, c.n)
        if again.internal_count or not again.extension_blocked:
            return False, f"pile {c.pile}"
    return True, f"{certs[0].size}-cap in Z3^4, {certs[1].size}-card noquad"


@check("capsearch", "Monte Carlo estimate is reproducible for a fixed seed")
def _mc_repro():
    a = capsearch.noquad_probability_estimate(9, 20000, 7)
    b = capsearch.noquad_probability_estimate(9, 20000, 7)
    return a == b, f"{a.value:.4f}"


# planes


@check("planes", "PG(2, q) decks for q = 2, 3, 5, 7 are complete planes")
def _planes():
    for q in (2, 3, 5, 7):
        if not projective.verify_incidence(projective.build_projective_plane(q)).complete:
            return False, f"q = {q}"
    return True, "q = 2, 3, 5, 7 with duals"


@check("planes", "Baby Socks matched triples are the Fano lines")
def _fano():
    corr = projective.fano_socks_correspondence()
    ok = len(corr.triples) == 7 and sorted(corr.line_of_triple.values()) == list(range(7))
    per_card = {c: sum(c in t for t in corr.triples) for c in range(1, 8)}
    return ok and set(per_card.values()) == {3}, "7 triples, 3 per card"


# correspondence


@check("correspondence", "partition exists iff attribute values XOR to zero")
def _partition():
    rng = random.Random(6)
    for _ in range(5000):
        values = [rng.randrange(4) for _ in range(rng.randint(1, 7))]
        if bool(xmap.partition_values(values)) != (algebra.xor_all(values) == 0):
            return False, str(values)
    return True, "5000 random multisets"


@check("correspondence", "origin translation agrees with the Socks rule")
def _origin():
    rng = random.Random(7)
    for _ in range(3000):
        origin = rng.randrange(64)
        cards = rng.sample([c for c in range(64) if c != origin], rng.randint(3, 8))
        if bool(xmap.is_socks_match(cards, origin)) != rules.is_match([c ^ origin for c in cards]):
            return False, f"{cards} origin {origin}"
    return True, "3000 random piles"


@check("correspondence", "distribution rows agree with the table of 3..7 cards")
def _table3():
    for n in range(3, 8):
        rows = xmap.enumerate_table3(n)
        if len(rows) != 2 or any(s + 2 * d + 3 * t != n for s, d, t in rows):
            return False, f"n = {n}"
    seven = xmap.seven_card_subspace()
    quads = analysis.count_quads(seven)
    return bool(xmap.is_socks_match(seven)) and quads == 7, f"7-card subspace holds {quads} quads"


# sim


@check("sim", "extended Socks always ends on a matched (or empty) table")
def _sim_socks():
    for seed in range(300):
        log = sim.simulate(sim.GameConfig("socks", "extended", seed=seed))
        if log.final_table and not rules.is_match(log.final_table):
            return False, f"seed {seed}"
    return True, "300 seeds"


@check("sim", "logs replay to the same final state with legal claims")
def _sim_replay():
    for game, variant in (("set", None), ("socks", "official"), ("quads", None), ("spotit", "tower"), ("spotit", "well")):
        for seed in range(20):
            log = sim.simulate(sim.GameConfig(game, variant, seed=seed))
            again = sim.GameLog.from_json(log.to_json())
            if sim.replay(again) != (log.final_table, log.scores):
                return False, f"{game} seed {seed}"
    return True, "20 seeds per game"


GROUPS = ("algebra", "decks", "rules", "probability", "capsearch", "planes", "correspondence", "sim")


def run_checks(group: str = "all") -> list[CheckResult]:
    results = []
    for g, name, fn in CHECKS:
        if group != "all" and g != group:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(g, name, bool(ok), detail, time.perf_counter() - t0))
    return results
