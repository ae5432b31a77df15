"""Goal-to-strategy registry shared by the CLI and the session service."""

from __future__ import annotations

from .engine import GameConfig, GoalKind
from .evenstrategy import even_cycle
from .oddstrategy import odd_cycle, odd_path


class NoSuchBuilder(Exception):
    """No strategy is registered for the requested goal."""


def builder_for(cfg: GameConfig):
    """Top-level Builder strategy for a validated game config."""
    if cfg.goal is GoalKind.EVEN_CYCLE:
        return even_cycle(cfg.k, cfg.n)
    if cfg.goal is GoalKind.ODD_CYCLE:
        return odd_cycle(cfg.k, cfg.n)
    if cfg.goal is GoalKind.ODD_PATH:
        return odd_path(cfg.k, cfg.n)
    raise NoSuchBuilder(f"no builder registered for goal {cfg.goal.value}")


def advertised_builders() -> list[dict]:
    """What a client may put on its new-game form, with parameter constraints."""
    return [
        {
            "name": "even-cycle",
            "goal": "even-cycle",
            "description": "force a red even cycle C_k or a blue cycle C_n",
            "k": "even, at least 4",
            "n": "at least 3k",
            "bound": "2n + 20k",
        },
        {
            "name": "odd-cycle",
            "goal": "odd-cycle",
            "description": "force a red odd cycle C_k or a blue cycle C_n",
            "k": "odd, at least 3",
            "n": "at least 8k",
            "bound": "3n + ceil(log2 n) + 50k",
        },
        {
            "name": "odd-path",
            "goal": "odd-path",
            "description": "force a red odd cycle C_k or a blue path on n vertices",
            "k": "odd, at least 3",
            "n": "at least 1",
            "bound": "3n + 50k",
        },
    ]
