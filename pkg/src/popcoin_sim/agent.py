"""Two-period consumption choice under the demurrage-adjusted rate.

An agent receives the basic income B in both periods plus outside income
``earned_income`` in the first, spends ``out1`` immediately and carries the
rest at the holding rate R (negative under demurrage with a stable census),
so second-period spending is

    out2 = (B + in1 - out1) * (1 + R) + B.

Preferences are sqrt utility over real consumption, u = sqrt(out1/P1) +
sqrt(out2/P2). Strict concavity gives the closed-form optimum

    out1* = ((1+R)(B + in1) + B) / ((1+R)^2 * (P1/P2) + (1+R)),

clamped to [0, B + in1] when borrowing is disallowed. Savings then pay
demurrage alpha * savings, an effective income tax that vanishes for
hand-to-mouth agents and approaches alpha(1-alpha)/(2-alpha) for high
earners — demurrage is progressive with respect to saved wealth.

The grid search ``optimal_out1_oracle`` brute-forces the same problem and
exists to certify the closed form in tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class AgentProblem:
    """One two-period problem instance.

    interest_rate is the per-period holding rate R > -1 (use
    (1+n)(1-alpha)-1 for the policy currency; -alpha under a stable census).
    basic_income = 0 is admitted as a degenerate no-transfer case.
    """

    basic_income: float
    earned_income: float = 0.0
    interest_rate: float = 0.0
    price_1: float = 1.0
    price_2: float = 1.0
    allow_borrowing: bool = False

    def __post_init__(self):
        if self.basic_income < 0:
            raise ValueError(f"basic_income must be non-negative, got {self.basic_income}")
        if self.earned_income < 0:
            raise ValueError(f"earned_income must be non-negative, got {self.earned_income}")
        if self.interest_rate <= -1:
            raise ValueError(f"interest_rate must exceed -1, got {self.interest_rate}")
        if self.price_1 <= 0 or self.price_2 <= 0:
            raise ValueError("prices must be positive")


def budget_out2(problem: AgentProblem, out1: float) -> float:
    """Second-period spending implied by a first-period choice."""
    cash = problem.basic_income + problem.earned_income
    if out1 < 0:
        raise ValueError(f"out1 must be non-negative, got {out1}")
    if not problem.allow_borrowing and out1 > cash:
        raise ValueError(f"out1 = {out1} exceeds available cash {cash} and borrowing is off")
    out2 = (cash - out1) * (1.0 + problem.interest_rate) + problem.basic_income
    if out2 < 0:
        raise ValueError(f"out1 = {out1} leaves negative second-period spending {out2}")
    return out2


def utility(problem: AgentProblem, out1: float, out2: float) -> float:
    """sqrt(out1/P1) + sqrt(out2/P2); concave, so local optima are global."""
    if out1 < 0 or out2 < 0:
        raise ValueError("spending must be non-negative")
    return math.sqrt(out1 / problem.price_1) + math.sqrt(out2 / problem.price_2)


def max_affordable_out1(problem: AgentProblem) -> float:
    """Largest feasible first-period outlay.

    Without borrowing this is cash on hand; with borrowing it is the point
    where out2 hits zero (repaying from the second basic income).
    """
    cash = problem.basic_income + problem.earned_income
    if not problem.allow_borrowing:
        return cash
    return cash + problem.basic_income / (1.0 + problem.interest_rate)


def optimal_out1(problem: AgentProblem) -> float:
    """Closed-form utility maximizer, clamped to the feasible interval."""
    gross = 1.0 + problem.interest_rate
    cash = problem.basic_income + problem.earned_income
    unclamped = (gross * cash + problem.basic_income) / (
        gross * gross * (problem.price_1 / problem.price_2) + gross
    )
    return min(max(unclamped, 0.0), max_affordable_out1(problem))


def optimal_out1_oracle(problem: AgentProblem, grid_step: float = 1e-4) -> float:
    """Brute-force argmax of utility over an evenly spaced out1 grid.

    Agrees with the closed form to within one grid step (concavity); used
    as the independent check on the algebra.
    """
    hi = max_affordable_out1(problem)
    if hi == 0.0:
        return 0.0
    if hi / grid_step > 5e7:
        raise ValueError(
            f"grid of {hi / grid_step:.0f} points is too large; coarsen grid_step"
        )
    grid = np.arange(0.0, hi, grid_step)
    grid = np.append(grid, hi)  # include the exact boundary
    out2 = (problem.basic_income + problem.earned_income - grid) * (
        1.0 + problem.interest_rate
    ) + problem.basic_income
    values = np.sqrt(grid / problem.price_1) + np.sqrt(np.maximum(out2, 0.0) / problem.price_2)
    return float(grid[int(np.argmax(values))])


@dataclass(frozen=True)
class TaxReport:
    """Demurrage viewed as an income tax for one problem instance."""

    savings: float
    demurrage_paid: float
    tax_rate: float


def effective_tax(problem: AgentProblem, alpha: float) -> TaxReport:
    """Demurrage paid on optimal savings, as a share of first-period income.

    The canonical setting pairs a stable census with R = -alpha; the report
    simply prices the problem's own optimum, whatever rate it carries.
    """
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    savings = problem.basic_income + problem.earned_income - optimal_out1(problem)
    savings = max(savings, 0.0)  # borrowing means no balance to demur
    demurrage = alpha * savings
    income = problem.basic_income + problem.earned_income
    rate = demurrage / income if income > 0 else 0.0
    return TaxReport(savings=savings, demurrage_paid=demurrage, tax_rate=rate)
