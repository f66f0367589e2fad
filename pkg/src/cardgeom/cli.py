"""Command-line entry point: ``cardgeom <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, capsearch, decks, sim, verify, xmap
from .errors import CardGeomError

GAMES = {"set": decks.SET, "socks": decks.SOCKS, "quads": decks.QUADS}


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_deck(args) -> int:
    if args.game == "spotit":
        kind = decks.SPOTIT(args.q)
    else:
        if args.q is not None:
            raise UsageError("--q only applies to --game spotit")
        kind = GAMES[args.game]
    deck = decks.build_deck(kind)
    render = {"json": decks.deck_to_json, "csv": decks.deck_to_csv, "text": decks.deck_to_text}[args.format]
    _emit(render(deck), args.out)
    return 0


def cmd_prob(args) -> int:
    rows = analysis.probability_rows(args.max, closed_form=args.closed_form)
    if args.format == "json":
        payload = [
            {"n": r.n, "exact": analysis.format_fraction(r.exact), "decimal": r.decimal, "minus_1_64": r.offset}
            for r in rows
        ]
        _emit(_dump(payload))
        return 0
    width = max(len(analysis.format_fraction(r.exact)) for r in rows)
    lines = [f"{'n':>3}  {'exact P(n)':<{width}}  {'decimal':>14}  {'P(n) - 1/64':>15}"]
    for r in rows:
        lines.append(f"{r.n:>3}  {analysis.format_fraction(r.exact):<{width}}  {r.decimal:>14}  {r.offset:>15}")
    _emit("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    results = verify.run_checks(args.group)
    if args.format == "json":
        _emit(_dump([{"group": r.group, "check": r.name, "ok": r.ok, "detail": r.detail} for r in results]))
    else:
        for r in results:
            _emit(f"{'PASS' if r.ok else 'FAIL'}  [{r.group}] {r.name}: {r.detail}")
        failed = sum(not r.ok for r in results)
        _emit(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if all(r.ok for r in results) else 1


def _cert_text(cert: capsearch.CapCertificate, what: str) -> str:
    return "\n".join(
        [
            f"{what} of size {cert.size} in Z_{cert.p}^{cert.n}",
            f"pile: {' '.join(map(str, cert.pile))}",
            f"internal count: {cert.internal_count}",
            f"every outside card completes one: {cert.extension_blocked}",
            f"search completed (optimal): {cert.optimal}" if cert.p == 3 else "",
            f"elapsed: {cert.elapsed_ms} ms",
        ]
    ).replace("\n\n", "\n")


def cmd_search(args) -> int:
    if args.what == "cap":
        target = args.target if args.target is not None else (20 if args.dim == 4 else None)
        cert = capsearch.find_max_cap(3, args.dim, args.budget, target=target or None)
        name = "cap"
    else:
        cert = capsearch.find_noquad(args.budget)
        name = "noquad"
    _emit(cert.to_json(sort_keys=True) if args.format == "json" else _cert_text(cert, name))
    ok = cert.internal_count == 0 and cert.extension_blocked
    return 0 if ok else 1


def cmd_estimate(args) -> int:
    est = capsearch.noquad_probability_estimate(args.size, args.samples, args.seed)
    if args.format == "json":
        _emit(_dump({"pile_size": est.pile_size, "samples": est.samples, "seed": est.seed,
                     "hits": est.hits, "estimate": est.value, "stderr": est.stderr}))
    else:
        _emit(f"P(no quad among {est.pile_size} cards) ~ {est.value:.6f} +/- {est.stderr:.6f} "
              f"({est.hits}/{est.samples}, seed {est.seed})")
    return 0


def cmd_correspond(args) -> int:
    reading = xmap.correspond(xmap.parse_bits(args.code), xmap.parse_bits(args.origin))
    if args.format == "json":
        _emit(_dump(reading.as_dict()))
    else:
        socks = ", ".join(reading.socks.values) or "(empty card)"
        _emit(f"code {args.code} (origin {args.origin})\nEvenQuads: {reading.quads}\nSocks:     {socks}")
    return 0


def cmd_simulate(args) -> int:
    config = sim.GameConfig(
        args.game, args.variant, players=args.players, seed=args.seed, table_size=args.table_size, q=args.q
    )
    if args.runs == 1:
        log = sim.simulate(config)
        _emit(log.to_json() if args.format == "json" else _log_text(log), args.out)
        return 0
    summary = sim.simulate_batch(config, args.runs, threads=args.threads)
    if args.format == "json":
        _emit(_dump({"config": config.to_dict(), **summary.to_dict()}), args.out)
    else:
        _emit(
            "\n".join(
                [
                    f"{args.runs} games of {config.game}/{config.variant}, seeds {config.seed}..{config.seed + args.runs - 1}",
                    f"mean claims per game: {summary.mean_claims:.3f}",
                    f"mean cards left on table: {summary.mean_leftover:.3f} (max {summary.max_leftover})",
                    f"games ending with cards stranded: {summary.stranded} ({summary.stranded_frequency:.3%})",
                ]
            ),
            args.out,
        )
    return 0


def _log_text(log: sim.GameLog) -> str:
    c = log.config
    lines = [f"{c.game}/{c.variant}, {c.players} players, seed {c.seed}"]
    for e in log.events:
        if e["type"] == "turn":
            lines.append(f"turn: center {e['center']} tops {e['tops']} symbols {e['symbols']} -> player {e['winner']}")
        elif e["type"] == "claim":
            lines.append(f"claim: player {e['player']} takes {e['cards']}")
        else:
            lines.append(f"{e['type']}: {e['cards']}")
    lines.append(f"final table: {log.final_table}")
    lines.append("scores: " + ", ".join(f"player {k}: {v}" for k, v in log.scores.items()))
    return "\n".join(lines)


def cmd_grid(args) -> int:
    code = xmap.parse_bits(args.code)
    row, col = decks.card_to_grid(code)
    if args.format == "json":
        _emit(_dump({"bits": args.code, "row": row, "col": col}))
    else:
        _emit(f"{args.code} -> row {row}, col {col}\n{decks.render_grid(code)}")
    return 0


def _add_format(p: argparse.ArgumentParser, choices=("text", "json")) -> None:
    p.add_argument("--format", choices=choices, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cardgeom", description="Finite-geometry card game engine.")
    sub = parser.add_subparsers(dest="command", required=True)

    deck = sub.add_parser("deck", help="deck generation")
    deck_sub = deck.add_subparsers(dest="action", required=True)
    gen = deck_sub.add_parser("gen", help="generate a full deck")
    gen.add_argument("--game", choices=("set", "socks", "quads", "spotit"), required=True)
    gen.add_argument("--q", type=int, default=None, help="plane order for spotit (default 7)")
    gen.add_argument("--out", default=None)
    _add_format(gen, ("text", "json", "csv"))
    gen.set_defaults(func=cmd_deck)

    prob = sub.add_parser("prob", help="probability tables")
    prob_sub = prob.add_subparsers(dest="action", required=True)
    table = prob_sub.add_parser("table", help="P(n) for odd n up to --max")
    table.add_argument("--max", type=int, default=31)
    table.add_argument("--closed-form", action="store_true")
    _add_format(table)
    table.set_defaults(func=cmd_prob)

    ver = sub.add_parser("verify", help="run invariant checks")
    ver.add_argument("group", choices=("all",) + verify.GROUPS)
    _add_format(ver)
    ver.set_defaults(func=cmd_verify)

    search = sub.add_parser("search", help="cap and noquad search")
    search_sub = search.add_subparsers(dest="what", required=True)
    cap = search_sub.add_parser("cap", help="largest noset in Z_3^dim")
    cap.add_argument("--dim", type=int, required=True)
    cap.add_argument("--budget", type=float, default=60.0)
    cap.add_argument("--target", type=int, default=None, help="stop once a cap this large is found (0: never)")
    _add_format(cap)
    noquad = search_sub.add_parser("noquad", help="9-card quad-free pile")
    noquad.add_argument("--budget", type=float, default=60.0)
    _add_format(noquad)
    for p in (cap, noquad):
        p.set_defaults(func=cmd_search)

    est = sub.add_parser("estimate", help="Monte Carlo estimates")
    est_sub = est.add_subparsers(dest="what", required=True)
    nq = est_sub.add_parser("noquad", help="probability that random cards hold no quad")
    nq.add_argument("--size", type=int, default=9)
    nq.add_argument("--samples", type=int, default=1_000_000)
    nq.add_argument("--seed", type=int, default=0)
    _add_format(nq)
    nq.set_defaults(func=cmd_estimate)

    corr = sub.add_parser("correspond", help="read a 6-bit code as Socks and EvenQuads cards")
    corr.add_argument("--code", required=True)
    corr.add_argument("--origin", default="000000")
    _add_format(corr)
    corr.set_defaults(func=cmd_correspond)

    simp = sub.add_parser("simulate", help="deterministic game simulation")
    simp.add_argument("--game", choices=tuple(sim.VARIANTS), required=True)
    simp.add_argument("--variant", default=None)
    simp.add_argument("--seed", type=int, required=True)
    simp.add_argument("--runs", type=int, default=1)
    simp.add_argument("--players", type=int, default=2)
    simp.add_argument("--table-size", type=int, default=None)
    simp.add_argument("--q", type=int, default=7)
    simp.add_argument("--threads", type=int, default=1)
    simp.add_argument("--out", default=None)
    _add_format(simp)
    simp.set_defaults(func=cmd_simulate)

    grid = sub.add_parser("grid", help="8x8 grid position of a 6-bit code")
    grid.add_argument("--code", required=True)
    _add_format(grid)
    grid.set_defaults(func=cmd_grid)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CardGeomError, ValueError) as exc:
        print(f"cardgeom: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
