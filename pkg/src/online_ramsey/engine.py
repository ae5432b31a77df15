"""Round loop, transcripts, budgets, and sequential strategy composition.

A game alternates Builder picking an uncolored edge and Painter coloring it.
The engine records every round, polls the Builder for a witness claim after
each reply (so a red cycle handed over early ends the game at once), verifies
any claimed witness, and enforces the declared round budget.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Generator, Optional, Protocol, Sequence

from .graph import (
    Color,
    DuplicateEdge,
    Edge,
    HostGraph,
    Witness,
    WitnessKind,
    color_edge,
    verify_witness,
)


class InvalidConfig(Exception):
    """Game parameters violate a goal's preconditions."""


class InvalidWitness(Exception):
    """A Builder strategy claimed a win that does not verify."""


class StageMismatch(Exception):
    """A composed stage started without the structure it requires."""


class PreconditionViolated(Exception):
    """A strategy was asked to run outside the regime it guarantees."""


class CorruptTranscript(Exception):
    """A transcript fails structural checks during replay."""


class PainterResigns(Exception):
    """Raised by a painter (interactive sessions) to abandon the game."""


class RedCycleFound(Exception):
    """Control-flow signal: a tracked red cycle just completed.

    Strategies raise this the moment Painter's reply closes a red cycle of
    the target length; it unwinds any nested stage generators and the
    carrying adapter converts it into a claimed witness.
    """

    def __init__(self, witness: Witness) -> None:
        super().__init__(witness)
        self.witness = witness


class GoalKind(Enum):
    EVEN_CYCLE = "even-cycle"
    ODD_CYCLE = "odd-cycle"
    ODD_PATH = "odd-path"
    CUSTOM = "custom"


@dataclass(frozen=True)
class CustomGoal:
    """Explicit red/blue targets for lemma-level games.

    ``blue_kind`` is BLUE_CYCLE or BLUE_PATH; ``blue_length`` counts vertices.
    """

    red_cycle_length: int
    blue_kind: WitnessKind
    blue_length: int


@dataclass(frozen=True)
class GameConfig:
    k: int
    n: int
    goal: GoalKind
    bound: int
    custom: Optional[CustomGoal] = None

    def __post_init__(self) -> None:
        if self.k < 3:
            raise InvalidConfig(f"k={self.k} below 3")
        if self.n < 1:
            raise InvalidConfig(f"n={self.n} below 1")
        if self.bound < 0:
            raise InvalidConfig("bound must be nonnegative")
        if self.goal is GoalKind.EVEN_CYCLE:
            if self.k % 2 or self.n < 3 * self.k:
                raise InvalidConfig(f"even-cycle needs even k and n >= 3k, got k={self.k} n={self.n}")
        elif self.goal is GoalKind.ODD_CYCLE:
            if self.k % 2 == 0 or self.n < 8 * self.k:
                raise InvalidConfig(f"odd-cycle needs odd k and n >= 8k, got k={self.k} n={self.n}")
        elif self.goal is GoalKind.ODD_PATH:
            if self.k % 2 == 0:
                raise InvalidConfig(f"odd-path needs odd k, got k={self.k}")
        elif self.goal is GoalKind.CUSTOM and self.custom is None:
            raise InvalidConfig("custom goal needs explicit targets")

    @staticmethod
    def declared_bound(k: int, n: int, goal: GoalKind) -> int:
        """Closed-form round budget for the three headline goals."""
        if goal is GoalKind.EVEN_CYCLE:
            return 2 * n + 20 * k
        if goal is GoalKind.ODD_CYCLE:
            return 3 * n + ceil_log2(n) + 50 * k
        if goal is GoalKind.ODD_PATH:
            return 3 * n + 50 * k
        raise InvalidConfig("custom goals carry their own bound")

    @classmethod
    def for_goal(cls, k: int, n: int, goal: GoalKind) -> "GameConfig":
        return cls(k=k, n=n, goal=goal, bound=cls.declared_bound(k, n, goal))

    def red_target(self) -> int:
        if self.goal is GoalKind.CUSTOM:
            assert self.custom is not None
            return self.custom.red_cycle_length
        return self.k

    def blue_target(self) -> tuple[WitnessKind, int]:
        if self.goal is GoalKind.CUSTOM:
            assert self.custom is not None
            return self.custom.blue_kind, self.custom.blue_length
        if self.goal is GoalKind.ODD_PATH:
            return WitnessKind.BLUE_PATH, self.n
        return WitnessKind.BLUE_CYCLE, self.n


def ceil_log2(n: int) -> int:
    if n < 1:
        raise ValueError("log of nonpositive")
    return (n - 1).bit_length()


def witness_matches_goal(w: Witness, cfg: GameConfig) -> bool:
    """Does a structurally valid witness actually win this game?"""
    if w.kind is WitnessKind.RED_CYCLE:
        return w.length == cfg.red_target()
    blue_kind, blue_len = cfg.blue_target()
    if w.kind is not blue_kind:
        return False
    if w.kind is WitnessKind.BLUE_CYCLE:
        # Shortening stages aim for the exact length; anything at least the
        # target still encloses the required cycle and is accepted.
        return w.length >= blue_len if cfg.goal is not GoalKind.CUSTOM else w.length == blue_len
    return w.length == blue_len


class BuilderStrategy(Protocol):
    budget: int
    name: str

    def next_edge(self, g: HostGraph) -> Edge: ...

    def observe(self, edge: Edge, color: Color) -> None: ...

    def claim_witness(self) -> Optional[Witness]: ...


class PainterStrategy(Protocol):
    def color(self, e: Edge, g: HostGraph) -> Color: ...


# A lemma strategy is a generator: it yields (edge, annotation), receives the
# color Painter chose, and returns its contracted structure. The host graph it
# closes over is the live game graph, already updated when the send resumes.
StrategyGen = Generator[tuple[Edge, str], Color, object]
StrategyFactory = Callable[[HostGraph, object], StrategyGen]


class StrategyExhausted(Exception):
    """next_edge was called after the strategy finished."""


class GeneratorBuilder:
    """Adapter driving a strategy generator under the BuilderStrategy contract."""

    def __init__(
        self,
        name: str,
        budget: int,
        factory: StrategyFactory,
        requires: Optional[type] = None,
        provides: Optional[type] = None,
    ) -> None:
        self.name = name
        self.budget = budget
        self.factory = factory
        self.requires = requires
        self.provides = provides
        self.annotation = name
        self.result: object = None
        self._gen: Optional[StrategyGen] = None
        self._pending: Optional[Edge] = None
        self._witness: Optional[Witness] = None
        self._done = False

    def clone(self) -> "GeneratorBuilder":
        """Fresh un-started copy; used by the exhaustive reply-tree audit."""
        if self._gen is not None:
            raise RuntimeError(f"cannot clone started strategy {self.name}")
        return GeneratorBuilder(self.name, self.budget, self.factory, self.requires, self.provides)

    def start(self, g: HostGraph, prev: object = None) -> None:
        if self.requires is not None and not isinstance(prev, self.requires):
            raise StageMismatch(
                f"stage {self.name} requires {self.requires.__name__}, got {type(prev).__name__}"
            )
        self._gen = self.factory(g, prev)
        self._advance(None)

    def _advance(self, color: Optional[Color]) -> None:
        assert self._gen is not None
        try:
            if color is None:
                item = next(self._gen)
            else:
                item = self._gen.send(color)
        except StopIteration as stop:
            self.result = stop.value
            self._done = True
            if isinstance(stop.value, Witness):
                self._witness = stop.value
            return
        except RedCycleFound as hit:
            self.result = hit.witness
            self._witness = hit.witness
            self._done = True
            return
        self._pending, self.annotation = item

    @property
    def done(self) -> bool:
        return self._done

    def next_edge(self, g: HostGraph) -> Edge:
        if self._gen is None:
            self.start(g)
        if self._pending is None:
            raise StrategyExhausted(self.name)
        return self._pending

    def observe(self, edge: Edge, color: Color) -> None:
        if self._done or self._pending is None:
            return
        if edge != self._pending:
            raise ValueError(f"observed {edge}, expected {self._pending}")
        self._pending = None
        self._advance(color)

    def claim_witness(self) -> Optional[Witness]:
        return self._witness


def compose(strategies: Sequence[GeneratorBuilder]) -> GeneratorBuilder:
    """Run strategies in sequence, handing each stage's structure to the next.

    The composite budget is the sum of the stage budgets. Consecutive
    provides/requires declarations are checked now where both sides declare,
    and again at runtime when each stage starts.
    """
    stages = list(strategies)
    for before, after in zip(stages, stages[1:]):
        if (
            after.requires is not None
            and before.provides is not None
            and not issubclass(before.provides, after.requires)
        ):
            raise StageMismatch(
                f"stage {after.name} requires {after.requires.__name__} "
                f"but {before.name} provides {before.provides.__name__}"
            )

    def chain(g: HostGraph, prev: object) -> StrategyGen:
        out = prev
        for stage in stages:
            if stage.requires is not None and not isinstance(out, stage.requires):
                raise StageMismatch(
                    f"stage {stage.name} requires {stage.requires.__name__}, "
                    f"got {type(out).__name__}"
                )
            out = yield from stage.factory(g, out)
        return out

    name = "+".join(s.name for s in stages) if stages else "identity"
    return GeneratorBuilder(
        name,
        budget=sum(s.budget for s in stages),
        factory=chain,
        requires=stages[0].requires if stages else None,
        provides=stages[-1].provides if stages else None,
    )


class OutcomeKind(Enum):
    WON = "won"
    BUDGET_EXCEEDED = "budget_exceeded"
    PAINTER_RESIGNED = "painter_resigned"


@dataclass(frozen=True)
class Outcome:
    kind: OutcomeKind
    rounds_used: int
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class Round:
    index: int
    edge: Edge
    color: Color
    by: str


@dataclass(frozen=True)
class Transcript:
    config: GameConfig
    rounds: tuple[Round, ...]
    outcome: Outcome
    seeds: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(transcript_to_dict(self), separators=(",", ":"), sort_keys=True)


class Game:
    """One game, advanced a round at a time.

    run_game wraps this with a painter loop; the session service drives it
    directly, one submitted color per request. After construction either
    ``proposed`` holds the edge awaiting a color or ``outcome`` is set.
    """

    def __init__(
        self,
        b: BuilderStrategy,
        cfg: GameConfig,
        g: Optional[HostGraph] = None,
        seeds: Optional[dict] = None,
    ) -> None:
        self.builder = b
        self.cfg = cfg
        self.graph = g if g is not None else HostGraph()
        self.seeds = dict(seeds or {})
        self.rounds: list[Round] = []
        self.outcome: Optional[Outcome] = None
        self.proposed: Optional[Edge] = None
        self._advance()

    @property
    def rounds_used(self) -> int:
        return len(self.rounds)

    def _advance(self) -> None:
        w = self.builder.claim_witness()
        if w is None:
            if self.rounds_used >= self.cfg.bound:
                self.outcome = Outcome(OutcomeKind.BUDGET_EXCEEDED, self.rounds_used)
                self.proposed = None
                return
            try:
                self.proposed = self.builder.next_edge(self.graph)
                return
            except StrategyExhausted:
                # A generator builder starts lazily inside next_edge, so a
                # strategy that wins without proposing any edge finishes right
                # there; its witness only becomes claimable afterwards.
                w = self.builder.claim_witness()
                if w is None:
                    raise
        if not verify_witness(self.graph, w) or not witness_matches_goal(w, self.cfg):
            raise InvalidWitness(
                f"strategy {self.builder.name} claimed a bad witness: {w}"
            )
        self.outcome = Outcome(OutcomeKind.WON, self.rounds_used, w)
        self.proposed = None

    def submit(self, color: Color) -> None:
        """Color the proposed edge and advance to the next proposal or the end."""
        if self.outcome is not None or self.proposed is None:
            raise RuntimeError("game is already over")
        edge = self.proposed
        color_edge(self.graph, edge, color)
        self.rounds.append(
            Round(
                self.rounds_used + 1,
                edge,
                color,
                getattr(self.builder, "annotation", self.builder.name),
            )
        )
        self.proposed = None
        self.builder.observe(edge, color)
        self._advance()

    def resign(self) -> None:
        self.outcome = Outcome(OutcomeKind.PAINTER_RESIGNED, self.rounds_used)
        self.proposed = None

    def transcript(self) -> Transcript:
        if self.outcome is None:
            raise RuntimeError("game still in progress")
        return Transcript(self.cfg, tuple(self.rounds), self.outcome, self.seeds)


def run_lemma(
    b: GeneratorBuilder,
    p: PainterStrategy,
    g: Optional[HostGraph] = None,
    prev: object = None,
    max_rounds: Optional[int] = None,
) -> tuple[object, int, HostGraph]:
    """Drive a structural strategy to completion against a painter.

    Unlike run_game this does not demand a goal witness: the strategy's
    returned structure is the deliverable. Returns (result, rounds, graph).
    """
    if g is None:
        g = HostGraph()
    b.start(g, prev)
    rounds = 0
    cap = max_rounds if max_rounds is not None else b.budget
    while not b.done:
        if rounds >= cap:
            raise RuntimeError(f"strategy {b.name} still running after {rounds} rounds")
        edge = b.next_edge(g)
        reply = p.color(edge, g)
        color_edge(g, edge, reply)
        rounds += 1
        b.observe(edge, reply)
    return b.result, rounds, g


def run_game(
    b: BuilderStrategy,
    p: PainterStrategy,
    cfg: GameConfig,
    g: Optional[HostGraph] = None,
    seeds: Optional[dict] = None,
) -> Transcript:
    """Play one full game and return its transcript.

    ``g`` may carry a pre-seeded board for lemma-level games; by default the
    board starts empty. A witness claim that fails verification raises
    InvalidWitness (a strategy bug, never a losable game).
    """
    game = Game(b, cfg, g, seeds)
    while game.outcome is None:
        assert game.proposed is not None
        try:
            reply = p.color(game.proposed, game.graph)
        except PainterResigns:
            game.resign()
            break
        game.submit(reply)
    return game.transcript()


# -- transcript serialization ------------------------------------------


def transcript_to_dict(t: Transcript) -> dict:
    cfg: dict = {
        "k": t.config.k,
        "n": t.config.n,
        "goal": t.config.goal.value,
        "bound": t.config.bound,
    }
    if t.config.custom is not None:
        cfg["custom"] = {
            "red_cycle_length": t.config.custom.red_cycle_length,
            "blue_kind": t.config.custom.blue_kind.value,
            "blue_length": t.config.custom.blue_length,
        }
    out: dict = {"kind": t.outcome.kind.value, "rounds_used": t.outcome.rounds_used}
    if t.outcome.witness is not None:
        out["witness"] = {
            "kind": t.outcome.witness.kind.value,
            "edges": [[e.u, e.v] for e in t.outcome.witness.edges],
        }
    doc = {
        "config": cfg,
        "rounds": [
            {"i": r.index, "edge": [r.edge.u, r.edge.v], "color": r.color.value, "by": r.by}
            for r in t.rounds
        ],
        "outcome": out,
    }
    if t.seeds:
        doc["seeds"] = t.seeds
    return doc


def witness_from_dict(doc: dict) -> Witness:
    kind = WitnessKind(doc["kind"])
    edges = tuple(Edge(u, v) for u, v in doc["edges"])
    length = len(edges) if kind is not WitnessKind.BLUE_PATH else len(edges) + 1
    return Witness(kind, edges, length)


def transcript_from_dict(doc: dict) -> Transcript:
    try:
        c = doc["config"]
        custom = None
        if "custom" in c:
            custom = CustomGoal(
                red_cycle_length=c["custom"]["red_cycle_length"],
                blue_kind=WitnessKind(c["custom"]["blue_kind"]),
                blue_length=c["custom"]["blue_length"],
            )
        cfg = GameConfig(c["k"], c["n"], GoalKind(c["goal"]), c["bound"], custom)
        rounds = tuple(
            Round(r["i"], Edge(r["edge"][0], r["edge"][1]), Color(r["color"]), r["by"])
            for r in doc["rounds"]
        )
        o = doc["outcome"]
        witness = witness_from_dict(o["witness"]) if "witness" in o else None
        outcome = Outcome(OutcomeKind(o["kind"]), o["rounds_used"], witness)
        return Transcript(cfg, rounds, outcome, doc.get("seeds", {}))
    except (KeyError, ValueError, TypeError, InvalidConfig) as exc:
        raise CorruptTranscript(str(exc)) from exc


def transcript_from_json(text: str) -> Transcript:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorruptTranscript(f"not valid JSON: {exc}") from exc
    return transcript_from_dict(doc)


def replay(t: Transcript) -> HostGraph:
    """Rebuild the final host graph from a transcript, checking it as we go."""
    g = HostGraph()
    for i, r in enumerate(t.rounds, start=1):
        if r.index != i:
            raise CorruptTranscript(f"round indices not contiguous at {r.index}")
        try:
            color_edge(g, r.edge, r.color)
        except DuplicateEdge as exc:
            raise CorruptTranscript(str(exc)) from exc
    if t.outcome.kind is OutcomeKind.WON:
        w = t.outcome.witness
        if w is None or not verify_witness(g, w):
            raise CorruptTranscript("recorded witness does not verify against replayed graph")
    return g
