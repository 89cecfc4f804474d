"""Optimal mean-reversion trading thresholds for Ornstein-Uhlenbeck spreads."""

from ._core import *  # noqa: F401,F403
from ._core import (
    BudgetError,
    ConvergenceError,
    DegenerateError,
    DomainError,
    NumericalError,
    ParseError,
)
