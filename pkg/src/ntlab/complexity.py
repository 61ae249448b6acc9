"""Step counts, worst-case runtime and accepted languages by enumeration.

Inputs are words over the machine's non-blank symbols.  A run that
self-terminates never halts classically, so it has no step count; neither does
one that outlives its budget.  Divergence is reported, never decided.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .runtime import Exhausted, Halted, SelfTerminated, Verdict, run_nt
from .tm_core import Machine

DEFAULT_CAP = 10**6


class EnumerationCapExceeded(ValueError):
    pass


class NoAcceptStates(ValueError):
    pass


@dataclass(frozen=True)
class Diverged:
    verdict: Verdict

    def __str__(self):
        if isinstance(self.verdict, SelfTerminated):
            return "self-terminated"
        return "exhausted"


@dataclass(frozen=True)
class Undefined:
    witness: tuple[str, ...]


@dataclass(frozen=True)
class RuntimeReport:
    n: int
    per_word: dict
    t_max: int | Undefined


@dataclass(frozen=True)
class PolyRow:
    n: int
    t_max: int | Undefined
    bound: int

    @property
    def status(self) -> str:
        if isinstance(self.t_max, Undefined):
            return "undefined"
        return "pass" if self.t_max <= self.bound else "fail"


@dataclass(frozen=True)
class PolyCheckReport:
    k: int
    rows: tuple[PolyRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.rows)


def run_time(m: Machine, w: Sequence[str], step_budget: int) -> int | Diverged:
    rec = run_nt(m, w, step_budget, retain="none")
    if isinstance(rec.verdict, Halted):
        return rec.verdict.at
    return Diverged(rec.verdict)


def _alphabet(m, alphabet):
    return tuple(alphabet) if alphabet is not None else m.input_alphabet


def words(alphabet: Sequence[str], n: int, cap: int = DEFAULT_CAP):
    """All words of length ``n`` in lexicographic order of ``alphabet``."""
    if len(alphabet) ** n > cap:
        raise EnumerationCapExceeded(f"{len(alphabet)}^{n} words exceed the cap of {cap}")
    return itertools.product(alphabet, repeat=n)


def worst_case(m: Machine, n: int, step_budget: int, *, alphabet=None,
               cap: int = DEFAULT_CAP) -> RuntimeReport:
    per_word = {}
    t_max: int | Undefined = 0
    for w in words(_alphabet(m, alphabet), n, cap):
        t = run_time(m, w, step_budget)
        per_word[w] = t
        if isinstance(t, Diverged):
            if not isinstance(t_max, Undefined):
                t_max = Undefined(w)
        elif not isinstance(t_max, Undefined) and t > t_max:
            t_max = t
    return RuntimeReport(n, per_word, t_max)


def accepts(m: Machine, w: Sequence[str], step_budget: int) -> bool | None:
    """``True``/``False`` for a decided run, ``None`` when the budget ran out."""
    if not m.accept:
        raise NoAcceptStates("machine has no accept states")
    rec = run_nt(m, w, step_budget, retain="none")
    if isinstance(rec.verdict, Exhausted):
        return None
    if isinstance(rec.verdict, SelfTerminated):
        return False
    return rec.final.state in m.accept


def language_upto(m: Machine, n_max: int, step_budget: int, *, alphabet=None,
                  cap: int = DEFAULT_CAP):
    """Words of length ``<= n_max`` accepted, and those left undecided."""
    if not m.accept:
        raise NoAcceptStates("machine has no accept states")
    sigma = _alphabet(m, alphabet)
    accepted, unknown = [], []
    for n in range(n_max + 1):
        for w in words(sigma, n, cap):
            verdict = accepts(m, w, step_budget)
            if verdict is None:
                unknown.append(w)
            elif verdict:
                accepted.append(w)
    return accepted, unknown


def poly_bound(n: int, k: int) -> int:
    return n**k + k  # Python's 0 ** 0 == 1


def poly_check(m: Machine, k: int, n_max: int, step_budget: int, *, alphabet=None,
               cap: int = DEFAULT_CAP) -> PolyCheckReport:
    """Compare ``T(n)`` with ``n^k + k`` for each ``n <= n_max``, no hidden constant."""
    rows = []
    for n in range(n_max + 1):
        report = worst_case(m, n, step_budget, alphabet=alphabet, cap=cap)
        rows.append(PolyRow(n, report.t_max, poly_bound(n, k)))
    return PolyCheckReport(k, tuple(rows))
