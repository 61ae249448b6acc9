"""Running machines classically and with repeat detection.

Under classical semantics a run stops only when no quadruple applies.  Under
neo-classical (NT) semantics it also stops the first time a description
repeats an earlier one exactly; the run is then *self-terminated* and the
repeat is reported as a verdict, never written onto the tape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .tm_core import Description, Machine, initial_description, move

STROKE = "1"
SEPARATOR = "*"

RETAIN_MODES = ("full", "heads", "none")


@dataclass(frozen=True)
class Halted:
    at: int

    def __str__(self):
        return f"halted at={self.at}"


@dataclass(frozen=True)
class SelfTerminated:
    first: int
    repeat: int

    def __str__(self):
        return f"self-terminated first={self.first} repeat={self.repeat}"


@dataclass(frozen=True)
class Exhausted:
    budget: int

    def __str__(self):
        return f"exhausted budget={self.budget}"


Verdict = Union[Halted, SelfTerminated, Exhausted]


class NotTerminated(ValueError):
    pass


class MissingAlphabetSymbols(ValueError):
    pass


class MalformedNumeral(ValueError):
    pass


@dataclass(frozen=True)
class RunRecord:
    """Outcome of one run.

    ``trace`` holds every description by configuration number when the run
    retained it; ``heads`` holds head positions measured from the leftmost cell
    of the final tape (so left-edge growth never changes a cell's index).
    ``final`` is always kept, so an exhausted run can be resumed.
    """

    machine: Machine
    input: tuple[str, ...]
    verdict: Verdict
    steps: int
    final: Description
    trace: tuple[Description, ...] | None = None
    heads: tuple[int, ...] | None = None
    nt: bool = True

    @property
    def terminated(self) -> bool:
        return not isinstance(self.verdict, Exhausted)


class Stepper:
    """A run advanced one move at a time.

    :meth:`step` returns ``None`` while the run continues and the verdict once
    it stops.  With ``nt`` set, every description seen so far is remembered;
    since tape length never shrinks, descriptions shorter than the current one
    can never recur and are dropped as soon as the tape grows.
    """

    def __init__(self, m: Machine, input_word: Sequence[str] = (), nt: bool = True,
                 start: Description | None = None):
        self.machine = m
        self.nt = nt
        self.current = start if start is not None else initial_description(m, input_word)
        self.index = 0
        self.verdict: Verdict | None = None
        self.left_growth = 0
        self._seen = {self.current: 0} if nt else None

    def step(self) -> Verdict | None:
        if self.verdict is not None:
            return self.verdict
        old = self.current
        new = move(self.machine, old)
        if new is None:
            self.verdict = Halted(self.index)
            return self.verdict
        self.index += 1
        self.current = new
        if len(new.word) > len(old.word):
            if new.head == 0:
                self.left_growth += 1
            if self._seen is not None:
                self._seen.clear()
        if self._seen is not None:
            first = self._seen.get(new)
            if first is not None:
                self.verdict = SelfTerminated(first, self.index)
                return self.verdict
            self._seen[new] = self.index
        return None


def stream(m: Machine, input_word: Sequence[str] = (), nt: bool = True) -> Iterator[Description]:
    """Yield the run's descriptions one per configuration, without a budget.

    The generator's return value (``StopIteration.value``) is the verdict.
    """
    run = Stepper(m, input_word, nt)
    yield run.current
    while True:
        verdict = run.step()
        if isinstance(verdict, Halted):
            return verdict
        yield run.current
        if verdict is not None:
            return verdict


def _run(m, input_word, budget, nt, retain):
    if budget < 0:
        raise ValueError("budget must be non-negative")
    if retain not in RETAIN_MODES:
        raise ValueError(f"retain must be one of {RETAIN_MODES}")
    run = Stepper(m, input_word, nt)
    trace = [run.current] if retain == "full" else None
    absolute = [run.current.head] if retain != "none" else None
    verdict = None
    while verdict is None:
        if run.index == budget:
            if m.rule(run.current.state, run.current.scanned) is None:
                verdict = Halted(run.index)
            else:
                verdict = Exhausted(budget)
            break
        verdict = run.step()
        if verdict is None or isinstance(verdict, SelfTerminated):
            if trace is not None:
                trace.append(run.current)
            if absolute is not None:
                absolute.append(run.current.head - run.left_growth)
    heads = None
    if absolute is not None:
        heads = tuple(a + run.left_growth for a in absolute)
    return RunRecord(
        machine=m,
        input=tuple(input_word),
        verdict=verdict,
        steps=run.index,
        final=run.current,
        trace=tuple(trace) if trace is not None else None,
        heads=heads,
        nt=nt,
    )


def run_classical(m: Machine, input_word: Sequence[str] = (), budget: int = 10_000,
                  retain: str = "full") -> RunRecord:
    """Iterate :func:`move` until the machine is stuck or ``budget`` moves ran.

    ``retain`` is ``"full"`` (whole trace), ``"heads"`` (head positions only)
    or ``"none"``.
    """
    return _run(m, input_word, budget, False, retain)


def run_nt(m: Machine, input_word: Sequence[str] = (), budget: int = 10_000,
           retain: str = "full", method: str = "set") -> RunRecord:
    """Run under NT semantics, stopping at the first repeated description.

    ``method="set"`` remembers prior descriptions.  ``method="brent"`` uses
    Brent's cycle finding in constant memory (no trace retained) and reports
    the same verdict, including the earliest repeat pair.
    """
    if method == "set":
        return _run(m, input_word, budget, True, retain)
    if method == "brent":
        if retain != "none":
            raise ValueError("brent mode keeps no trace; use retain='none'")
        return _run_brent(m, input_word, budget)
    raise ValueError(f"unknown method {method!r}")


def _advance(m, alpha, n):
    for _ in range(n):
        alpha = move(m, alpha)
    return alpha


def _run_brent(m, input_word, budget):
    if budget < 0:
        raise ValueError("budget must be non-negative")
    x0 = initial_description(m, input_word)

    def record(verdict, steps, final):
        return RunRecord(m, tuple(input_word), verdict, steps, final, nt=True)

    def exhausted():
        return record(Exhausted(budget), budget, _advance(m, x0, budget))

    # hare index never passes 3 * (first + period) + 2 before a cycle is seen
    cap = 3 * budget + 3
    power = period = 1
    tortoise, hare, hare_i = x0, move(m, x0), 1
    if hare is None:
        return record(Halted(0), 0, x0)
    while tortoise != hare:
        if power == period:
            tortoise = hare
            power *= 2
            period = 0
        nxt = move(m, hare)
        if nxt is None:
            if hare_i <= budget:
                return record(Halted(hare_i), hare_i, hare)
            return exhausted()
        hare, hare_i = nxt, hare_i + 1
        period += 1
        if hare_i > cap:
            return exhausted()

    tortoise = x0
    hare = _advance(m, x0, period)
    first = 0
    while tortoise != hare:
        tortoise, hare = move(m, tortoise), move(m, hare)
        first += 1
    repeat = first + period
    if repeat > budget:
        return exhausted()
    return record(SelfTerminated(first, repeat), repeat, hare)


@dataclass(frozen=True)
class TapeOutput:
    word: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self):
        return " ".join(self.word)


def tape_output(alpha: Description) -> TapeOutput:
    return TapeOutput(alpha.tape)


def terminal_output(r: RunRecord) -> TapeOutput:
    if not r.terminated:
        raise NotTerminated(f"run did not terminate ({r.verdict})")
    return tape_output(r.final)


def encode_tuple(values: Sequence[int], machine: Machine | None = None) -> tuple[str, ...]:
    """Write naturals as stroke groups: ``k`` becomes ``k + 1`` strokes.

    Groups are separated by a single ``*``.  When ``machine`` is given its
    alphabet must contain the stroke and the separator.
    """
    if machine is not None:
        missing = [s for s in (STROKE, SEPARATOR) if s not in machine.symbols]
        if missing:
            raise MissingAlphabetSymbols(f"machine lacks symbols {missing}")
    word: list[str] = []
    for i, k in enumerate(values):
        if k < 0:
            raise ValueError("values must be natural numbers")
        if i:
            word.append(SEPARATOR)
        word.extend([STROKE] * (k + 1))
    return tuple(word)


def decode_value(out: TapeOutput | Sequence[str], blank: str) -> int:
    """Read a single natural off a tape, ignoring surrounding blanks."""
    word = list(out.word if isinstance(out, TapeOutput) else out)
    lo, hi = 0, len(word)
    while lo < hi and word[lo] == blank:
        lo += 1
    while hi > lo and word[hi - 1] == blank:
        hi -= 1
    core = word[lo:hi]
    if not core:
        raise MalformedNumeral("tape is blank")
    if any(tok != STROKE for tok in core):
        raise MalformedNumeral(f"not a stroke numeral: {' '.join(core)}")
    return len(core) - 1
