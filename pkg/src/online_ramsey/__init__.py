"""Online Ramsey game engine: Builder strategies forcing short red cycles or
long blue paths/cycles, with verified round budgets.

The graph/engine layer hosts one game at a time; strategy modules provide the
Builder side; painters provide the adversary; the oracle computes exact values
for tiny targets and audits deterministic strategies over whole reply trees.
"""

from .engine import (
    Game,
    GameConfig,
    GeneratorBuilder,
    GoalKind,
    CustomGoal,
    InvalidConfig,
    InvalidWitness,
    Outcome,
    OutcomeKind,
    Round,
    StrategyExhausted,
    Transcript,
    ceil_log2,
    compose,
    replay,
    run_game,
    run_lemma,
    transcript_from_dict,
    transcript_from_json,
    transcript_to_dict,
    witness_matches_goal,
)
from .evenstrategy import even_cycle, even_path
from .graph import (
    Color,
    Edge,
    HostGraph,
    Witness,
    WitnessKind,
    verify_witness,
)
from .oddstrategy import odd_cycle, odd_path
from .oracle import (
    StateCapExceeded,
    TargetSpec,
    Unbounded,
    exact_online_ramsey,
    worst_case_rounds,
)
from .painters import PainterSpec, make_painter, parse_painter_spec
from .pathforge import extend_blue_or_red, force_path_pair

__all__ = [
    "Color",
    "CustomGoal",
    "Edge",
    "Game",
    "GameConfig",
    "GeneratorBuilder",
    "GoalKind",
    "HostGraph",
    "InvalidConfig",
    "InvalidWitness",
    "Outcome",
    "OutcomeKind",
    "PainterSpec",
    "Round",
    "StateCapExceeded",
    "StrategyExhausted",
    "TargetSpec",
    "Transcript",
    "Unbounded",
    "Witness",
    "WitnessKind",
    "ceil_log2",
    "compose",
    "even_cycle",
    "even_path",
    "exact_online_ramsey",
    "extend_blue_or_red",
    "force_path_pair",
    "make_painter",
    "odd_cycle",
    "odd_path",
    "parse_painter_spec",
    "replay",
    "run_game",
    "run_lemma",
    "transcript_from_dict",
    "transcript_from_json",
    "transcript_to_dict",
    "verify_witness",
    "witness_matches_goal",
    "worst_case_rounds",
]
