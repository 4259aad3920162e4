"""Operator command line: generate, serve, run bots, replay, summarize.

Exit codes: 0 success, 1 usage error, 2 integrity failure, 3 runtime failure.
"""

import argparse
import math
import sys
from collections import Counter
from pathlib import Path

from .config import MatchConfig
from .engine import events as ev
from .engine.replay import verify_log
from .errors import IntegrityError, PlanetXError
from .matchgen import generate_match, load_match, save_match

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTEGRITY = 2
EXIT_RUNTIME = 3

VARIANTS = {
    "nonpoly": {"nonpolynomial_series": True},
    "early-expire": {"expiration_bias": "early_productive"},
    "late-expire": {"expiration_bias": "late_productive"},
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planetx", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a match directory from a seed")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", required=True, help="directory to write match files into")
    gen.add_argument("--robots", type=int, default=100)
    gen.add_argument("--ticks", type=int, default=100)
    gen.add_argument("--tick-seconds", type=float, default=6.0)
    gen.add_argument("--variant", action="append", default=[], choices=sorted(VARIANTS),
                     help="game variant; may be given more than once")

    serve = sub.add_parser("serve", help="run the match server")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8420)
    serve.add_argument("--admin-secret", required=True)
    serve.add_argument("--log-dir", default="match_logs")

    bot = sub.add_parser("bot", help="play one team over the HTTP API")
    bot.add_argument("--url", required=True)
    bot.add_argument("--match", required=True, help="match id on the server")
    bot.add_argument("--team", required=True)
    bot.add_argument("--policy", default="omniscient",
                     help="omniscient | regression | filter | greedy (optionally kind:param)")
    bot.add_argument("--error", type=int, default=None,
                     help="noise range for the omniscient policy")
    bot.add_argument("--match-dir", default=None,
                     help="local match files (required for the omniscient policy)")
    bot.add_argument("--seed", type=int, default=0)
    bot.add_argument("--poll-interval", type=float, default=None)

    headless = sub.add_parser("headless", help="run a full bot-vs-bot match in process")
    headless.add_argument("--match", required=True, help="match directory")
    headless.add_argument("--bot-a", default="omniscient:0")
    headless.add_argument("--bot-b", default="omniscient:20")
    headless.add_argument("--seed", type=int, default=0, help="engine seed")
    headless.add_argument("--out", default=None, help="log file path")

    replay = sub.add_parser("replay", help="re-simulate a log and verify its hash")
    replay.add_argument("--log", required=True)
    replay.add_argument("--match", default=None,
                        help="match directory (defaults to the one recorded in the log)")

    stats = sub.add_parser("stats", help="summarize a finished match log")
    stats.add_argument("--log", required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    handler = {
        "gen": cmd_gen,
        "serve": cmd_serve,
        "bot": cmd_bot,
        "headless": cmd_headless,
        "replay": cmd_replay,
        "stats": cmd_stats,
    }[args.command]
    try:
        return handler(args)
    except IntegrityError as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except PlanetXError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def cmd_gen(args) -> int:
    overrides = {}
    for variant in args.variant:
        overrides.update(VARIANTS[variant])
    window = (10, 99)
    if args.ticks != 100:
        window = (max(1, args.ticks // 10), args.ticks - 1)
    config = MatchConfig(
        seed=args.seed, num_robots=args.robots, num_ticks=args.ticks,
        tick_seconds=args.tick_seconds, expiration_window=window, **overrides,
    )
    match = generate_match(config)
    digest = save_match(match, args.out)
    print(f"wrote match to {args.out}")
    print(f"sha256 {digest}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .server import SessionRegistry, create_app

    registry = SessionRegistry(log_dir=args.log_dir)
    app = create_app(registry, admin_secret=args.admin_secret)
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    finally:
        registry.stop_all()
    return EXIT_OK


def cmd_bot(args) -> int:
    from .simbot import HttpBot, make_policy

    spec = args.policy
    if args.error is not None and ":" not in spec:
        spec = f"{spec}:{args.error}"
    match = load_match(args.match_dir) if args.match_dir else None
    policy = make_policy(spec, match)
    bot = HttpBot(args.url, args.match, args.team, policy, seed=args.seed)
    bot.join()
    print(f"joined match {args.match} as {args.team!r} with policy {spec}")
    final = bot.run(poll_interval=args.poll_interval)
    print(f"match finished: scores {final.get('scores')}")
    print(f"commands posted={bot.posted} rejected={bot.rejected}")
    return EXIT_OK


def cmd_headless(args) -> int:
    from .simbot import make_policy, run_headless

    match = load_match(args.match)
    policy_a = make_policy(args.bot_a, match)
    policy_b = make_policy(args.bot_b, match)
    result = run_headless(match, policy_a, policy_b, engine_seed=args.seed,
                          seed_a=args.seed + 1, seed_b=args.seed + 2,
                          match_dir=str(args.match))

    log_path = Path(args.out) if args.out else Path(args.match) / f"headless-{args.seed}.ndjson"
    digest = ev.write_log(result.events, log_path)
    for team in sorted(result.scores):
        print(f"{team}: {result.scores[team]:.3f}")
    print(f"winner: {result.winner or 'tie'}")
    print(f"log: {log_path}")
    print(f"log sha256 {digest}")
    return EXIT_OK


def cmd_replay(args) -> int:
    events, recorded_hash = ev.read_log(args.log)
    match_dir = args.match or events[0].get("match_dir")
    if not match_dir:
        print("error: log does not record a match directory; pass --match",
              file=sys.stderr)
        return EXIT_USAGE
    match = load_match(match_dir)
    report = verify_log(match, events, recorded_hash)
    for team in sorted(report.scores):
        print(f"{team}: {report.scores[team]:.3f}")
    print(report.detail)
    if not report.ok:
        print(f"recorded {report.recorded_hash}", file=sys.stderr)
        print(f"computed {report.computed_hash}", file=sys.stderr)
        return EXIT_INTEGRITY
    print(f"log sha256 {report.computed_hash}")
    return EXIT_OK


def cmd_stats(args) -> int:
    events, _ = ev.read_log(args.log)
    teams = events[0]["teams"]
    claimed = Counter()
    reasons = Counter()
    productivity = {team: [] for team in teams}
    trajectory = []  # (tick, {team: score})
    powered_down = 0

    for event in events:
        if event["type"] != ev.ROBOT_RESOLVED:
            continue
        reasons[event["reason"]] += 1
        winner = event["winner"]
        if winner is None:
            powered_down += 1
        else:
            claimed[winner] += 1
            productivity[winner].append(event["productivity"])
        trajectory.append((event["tick"], {t: math.fsum(productivity[t]) for t in teams}))

    scores = {team: math.fsum(productivity[team]) for team in teams}
    ended = [e for e in events if e["type"] == ev.MATCH_ENDED]
    if ended and ended[-1]["scores"] != scores:
        print("warning: recomputed scores disagree with the match_ended event",
              file=sys.stderr)

    print("final scores:")
    for team in sorted(teams):
        print(f"  {team}: {scores[team]:.3f}")
    print("robots claimed:")
    for team in sorted(teams):
        print(f"  {team}: {claimed[team]}")
    print(f"  powered down: {powered_down}")
    print("resolution reasons:")
    for reason, count in sorted(reasons.items()):
        print(f"  {reason}: {count}")
    print("score trajectory (ticks with resolutions):")
    for tick, snapshot in trajectory:
        cells = "  ".join(f"{team}={snapshot[team]:.1f}" for team in sorted(teams))
        print(f"  tick {tick:>4}: {cells}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
