"""Mastermind query strategies: adaptive coin-weighing codebreaker,
black/white composite strategy, random guessing, and verification oracles."""

from ._core import (
    __version__,
    black_answer,
    brute_force_white,
    default_weighing_count,
    find_identifying_set,
    identifies_all,
    identifying_set_size,
    play,
    solve_secret,
    solve_weighing,
    sweep_csv,
    white_answer,
)

__all__ = [
    "__version__",
    "black_answer",
    "brute_force_white",
    "default_weighing_count",
    "find_identifying_set",
    "identifies_all",
    "identifying_set_size",
    "play",
    "solve_secret",
    "solve_weighing",
    "sweep_csv",
    "white_answer",
]
