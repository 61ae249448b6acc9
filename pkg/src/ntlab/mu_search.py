"""Unbounded minimisation over machine-computed functions.

``mu_value`` searches ``y = 0, 1, 2, ...`` for the least ``y`` with
``G(args, y) = 0``, running the machine for ``G`` under NT semantics.  If the
run for some ``y`` self-terminates first, the search stops there and
``total_extension`` assigns the value 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

from .runtime import (
    Halted,
    MalformedNumeral,
    SelfTerminated,
    Stepper,
    Verdict,
    decode_value,
    encode_tuple,
    run_nt,
)
from .tm_core import Machine


class MalformedOutput(ValueError):
    pass


@dataclass(frozen=True)
class Found:
    y: int


@dataclass(frozen=True)
class Totalized:
    at_y: int


@dataclass(frozen=True)
class ExtendedByWitness:
    """An external witness asserted that no zero exists."""


@dataclass(frozen=True)
class ExhaustedSteps:
    at_y: int
    step_budget: int


@dataclass(frozen=True)
class ExhaustedY:
    y_budget: int


MuOutcome = Union[Found, Totalized, ExtendedByWitness, ExhaustedSteps, ExhaustedY]


@dataclass(frozen=True)
class Unknown:
    outcome: MuOutcome

    def __str__(self):
        o = self.outcome
        if isinstance(o, ExhaustedSteps):
            return f"unknown: step budget {o.step_budget} ran out at y={o.at_y}"
        return f"unknown: no zero for y <= {o.y_budget}"


def evaluate(g: Machine, values: Sequence[int], step_budget: int):
    """Run ``g`` on the encoded tuple; return ``(verdict, decoded value or None)``."""
    rec = run_nt(g, encode_tuple(values, g), step_budget, retain="none")
    if not isinstance(rec.verdict, Halted):
        return rec.verdict, None
    try:
        return rec.verdict, decode_value(rec.final.tape, g.blank)
    except MalformedNumeral as exc:
        raise MalformedOutput(f"G{tuple(values)}: {exc}") from exc


def mu_value(g: Machine, args: Sequence[int], y_budget: int, step_budget: int,
             witness: Callable[[tuple], bool] | None = None) -> MuOutcome:
    """Search ``y = 0..y_budget`` for the least zero of ``G(args, y)``.

    ``witness``, if given, is asked once whether no zero exists for ``args``;
    a true answer yields :class:`ExtendedByWitness` without searching.
    """
    args = tuple(args)
    if witness is not None and witness(args):
        return ExtendedByWitness()
    for y in range(y_budget + 1):
        verdict, value = evaluate(g, args + (y,), step_budget)
        if isinstance(verdict, SelfTerminated):
            return Totalized(y)
        if value is None:
            return ExhaustedSteps(y, step_budget)
        if value == 0:
            return Found(y)
    return ExhaustedY(y_budget)


def total_extension(g: Machine, args: Sequence[int], y_budget: int, step_budget: int,
                    witness: Callable[[tuple], bool] | None = None) -> int | Unknown:
    outcome = mu_value(g, args, y_budget, step_budget, witness)
    if isinstance(outcome, Found):
        return outcome.y
    if isinstance(outcome, (Totalized, ExtendedByWitness)):
        return 0
    return Unknown(outcome)


@dataclass
class DovetailLog:
    schedule: list[tuple[int, int]] = field(default_factory=list)
    winner: tuple[int, Verdict] | None = None

    def is_fair(self, n: int) -> bool:
        """Local step ``s`` of run ``i`` happens at global step ``s * n + i``."""
        return all(g == s * n + i for g, (i, s) in enumerate(self.schedule))


def dovetail(machines: Sequence[tuple[Machine, Sequence[str]]], global_budget: int):
    """Advance runs round-robin, one NT step each, until one terminates.

    Returns the log and ``(index, verdict)`` of the first terminating run, or
    ``None`` if ``global_budget`` steps pass without one.
    """
    if not machines:
        raise ValueError("dovetail needs at least one run")
    runs = [Stepper(m, w, nt=True) for m, w in machines]
    log = DovetailLog()
    n = len(runs)
    for g in range(global_budget):
        i, s = g % n, g // n
        log.schedule.append((i, s))
        verdict = runs[i].step()
        if verdict is not None:
            log.winner = (i, verdict)
            return log, log.winner
    return log, None
