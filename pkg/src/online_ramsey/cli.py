"""Command-line harness: bound-verification matrices, traces, oracle values.

Subcommands
    verify   run a (k, n, painter, trial) matrix, one JSONL record per game
    trace    play a single game and write its transcript JSON
    oracle   exact optimal-play value for tiny path/cycle targets

Seeding: the master seed comes from --seed or the RAMSEY_SEED environment
variable (default 0). Each verify record derives its own seed by the counter
scheme

    seed = (((master * P + k) * P + n) * P + painter_index) * P + trial

with P = 1_000_003, so records are reproducible independently of execution
order and shard assignment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .engine import GameConfig, GoalKind, InvalidConfig, run_game
from .graph import HostGraph
from .oracle import StateCapExceeded, TargetSpec, Unbounded, exact_online_ramsey
from .painters import (
    PainterKind,
    PainterSpec,
    UnsupportedSpec,
    make_painter,
    parse_painter_spec,
)
from .registry import builder_for

_SEED_STEP = 1_000_003


class UsageError(Exception):
    """Bad flags or an unsupported (goal, k, n) combination."""


def parse_range(text: str) -> range:
    """``A`` or ``A..B`` (inclusive); an empty range is allowed and yields nothing."""
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            a = int(lo)
            return range(a, a + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}: {exc}") from exc


def derived_seed(master: int, k: int, n: int, painter_index: int, trial: int) -> int:
    s = master
    for part in (k, n, painter_index, trial):
        s = s * _SEED_STEP + part
    return s


@dataclass(frozen=True)
class VerifyTask:
    goal: str
    k: int
    n: int
    painter: str  # token without trial multiplicity, e.g. "random" or "greedy"
    trial: int
    seed: int


def _run_verify_task(t: VerifyTask) -> dict:
    cfg = GameConfig.for_goal(t.k, t.n, GoalKind(t.goal))
    spec = (
        PainterSpec(PainterKind.RANDOM, seed=t.seed)
        if t.painter == "random"
        else parse_painter_spec(t.painter)
    )
    painter = make_painter(spec, cfg)
    g = HostGraph()
    seeds = {"painter": t.seed} if t.painter == "random" else {}
    tr = run_game(builder_for(cfg), painter, cfg, g, seeds)
    rec = {
        "goal": t.goal,
        "k": t.k,
        "n": t.n,
        "painter": spec.label(),
        "trial": t.trial,
        "outcome": tr.outcome.kind.value,
        "rounds_used": tr.outcome.rounds_used,
        "budget": cfg.bound,
        "margin": cfg.bound - tr.outcome.rounds_used,
        "peak_vertices": len(g.touched_vertices()),
    }
    rec["ok"] = rec["outcome"] == "won" and rec["margin"] >= 0
    return rec


def _painter_tokens(text: str, default_trials: int) -> list[tuple[str, int]]:
    """Expand the --painters grammar into (token, trials) pairs.

    ``random:N`` means N independently seeded trials; ``random`` alone uses
    --trials. Deterministic painters always run once.
    """
    out: list[tuple[str, int]] = []
    for raw in text.split(","):
        tok = raw.strip()
        if not tok:
            continue
        head, _, arg = tok.partition(":")
        if head == "random":
            trials = int(arg) if arg else default_trials
            if trials < 1:
                raise UsageError(f"random trial count must be positive, got {trials}")
            out.append(("random", trials))
        else:
            parse_painter_spec(tok)  # validate eagerly
            out.append((tok, 1))
    return out


def _verify_tasks(args) -> list[VerifyTask]:
    goal = args.goal
    painters = _painter_tokens(args.painters, args.trials)
    tasks: list[VerifyTask] = []
    for k in parse_range(args.k):
        for n in parse_range(args.n):
            try:
                GameConfig.for_goal(k, n, GoalKind(goal))
            except InvalidConfig as exc:
                raise UsageError(str(exc)) from exc
            for idx, (token, trials) in enumerate(painters):
                for trial in range(trials):
                    tasks.append(
                        VerifyTask(goal, k, n, token, trial, derived_seed(args.seed, k, n, idx, trial))
                    )
    return tasks


def cmd_verify(args, out: TextIO) -> int:
    tasks = _verify_tasks(args)
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            records: Iterable[dict] = pool.map(_run_verify_task, tasks, chunksize=8)
            records = list(records)
    else:
        records = [_run_verify_task(t) for t in tasks]
    failures = 0
    for rec in records:
        out.write(json.dumps(rec, separators=(",", ":"), sort_keys=True) + "\n")
        if not rec["ok"]:
            failures += 1
    out.flush()
    return 1 if failures else 0


def cmd_trace(args, out: TextIO) -> int:
    cfg = GameConfig.for_goal(args.k, args.n, GoalKind(args.goal))
    try:
        spec = parse_painter_spec(args.painter)
    except UnsupportedSpec as exc:
        raise UsageError(str(exc)) from exc
    painter = make_painter(spec, cfg)
    seeds = {"painter": spec.seed} if spec.seed is not None else {}
    tr = run_game(builder_for(cfg), painter, cfg, seeds=seeds)
    text = tr.to_json() + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


_TARGET_KINDS = {"P": "path", "C": "cycle"}


def parse_target(text: str) -> TargetSpec:
    """``P4`` is the path on 4 vertices, ``C3`` the triangle."""
    tok = text.strip().upper()
    if not tok or tok[0] not in _TARGET_KINDS or not tok[1:].isdigit():
        raise UsageError(f"bad target {text!r}: expected P<size> or C<size>")
    return TargetSpec(_TARGET_KINDS[tok[0]], int(tok[1:]))


def cmd_oracle(args, out: TextIO) -> int:
    red = parse_target(args.red)
    blue = parse_target(args.blue)
    value = exact_online_ramsey(red, blue, cap=args.cap)
    rec: dict = {"red": args.red.upper(), "blue": args.blue.upper(), "cap": args.cap}
    if isinstance(value, Unbounded):
        rec["value"] = None
        rec["unbounded_at"] = value.cap
    else:
        rec["value"] = value
    out.write(json.dumps(rec, separators=(",", ":"), sort_keys=True) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    goal_choices = ["even-cycle", "odd-cycle", "odd-path"]

    v = sub.add_parser("verify", help="run a bound-verification matrix, JSONL records out")
    v.add_argument("--goal", required=True, choices=goal_choices)
    v.add_argument("--k", required=True, help="cycle length, A or A..B inclusive")
    v.add_argument("--n", required=True, help="blue target size, A or A..B inclusive")
    v.add_argument(
        "--painters",
        default="allred,allblue,greedy",
        help="comma list: allred | allblue | greedy | random[:TRIALS] | minimax:CAP",
    )
    v.add_argument("--trials", type=int, default=1, help="trials for a bare 'random' token")
    v.add_argument("--seed", type=int, default=None, help="master seed (default: RAMSEY_SEED or 0)")
    v.add_argument("--workers", type=int, default=1, help="process pool size")
    v.add_argument("--out", default=None, help="write JSONL here instead of stdout")

    t = sub.add_parser("trace", help="play one game, write its transcript JSON")
    t.add_argument("--goal", required=True, choices=goal_choices)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--painter", default="greedy", help="allred | allblue | greedy | random:SEED | replay:FILE")
    t.add_argument("--out", default=None, help="output path (default: stdout)")

    o = sub.add_parser("oracle", help="exact value for tiny targets")
    o.add_argument("--red", required=True, help="red target, e.g. C3 or P2")
    o.add_argument("--blue", required=True, help="blue target, e.g. P3")
    o.add_argument("--cap", type=int, default=12, help="round cap for the search")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None and args.command == "verify":
        args.seed = int(os.environ.get("RAMSEY_SEED", "0"))

    out = sys.stdout
    opened = None
    if args.command == "verify" and args.out:
        opened = open(args.out, "w")
        out = opened
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "trace":
            return cmd_trace(args, out)
        return cmd_oracle(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvalidConfig, UnsupportedSpec) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StateCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if opened is not None:
            opened.close()


if __name__ == "__main__":
    sys.exit(main())
