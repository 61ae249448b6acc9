"""Evidence about non-terminating runs and the dyadic sequences they define.

Everything here is evidence at a finite budget.  A run whose head keeps
moving right leaves an ever longer tape prefix untouched ("frozen"); read as a
binary fraction, each frozen prefix is a dyadic rational and the sequence of
them is Cauchy.  A run that keeps returning to some cell freezes nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .runtime import (
    Exhausted,
    Halted,
    MalformedNumeral,
    RunRecord,
    TapeOutput,
    decode_value,
    encode_tuple,
    run_nt,
)
from .tm_core import Machine

FIGURES = ("0", "1")


class NonBinaryPrefix(ValueError):
    def __init__(self, position, token=None):
        self.position = position
        self.token = token
        super().__init__(f"frozen prefix has non-binary token {token!r} at position {position}")


class NonBinaryAlphabet(ValueError):
    pass


class MalformedPredicateOutput(ValueError):
    pass


class TraceRequired(ValueError):
    pass


@dataclass(frozen=True)
class HeadProfile:
    positions: tuple[int, ...]
    suffix_min: tuple[int, ...]

    @classmethod
    def from_positions(cls, positions: Sequence[int]) -> "HeadProfile":
        suffix = list(positions)
        for i in range(len(suffix) - 2, -1, -1):
            if suffix[i + 1] < suffix[i]:
                suffix[i] = suffix[i + 1]
        return cls(tuple(positions), tuple(suffix))


def head_profile(r: RunRecord) -> HeadProfile:
    if r.heads is None:
        raise TraceRequired("run was made without head positions")
    return HeadProfile.from_positions(r.heads)


def profile_from_trace(trace: Sequence) -> HeadProfile:
    """Recompute head positions from raw descriptions.

    The tape grows on the left exactly when a description is longer than its
    predecessor with the state token in front; each such growth shifts every
    earlier position one cell to the right.
    """
    absolute, growth = [], 0
    prev = None
    for alpha in trace:
        if prev is not None and len(alpha.word) > len(prev.word) and alpha.head == 0:
            growth += 1
        absolute.append(alpha.head - growth)
        prev = alpha
    return HeadProfile.from_positions([a + growth for a in absolute])


@dataclass(frozen=True)
class ConvergingEvidence:
    n_star: int
    stable_from: int

    def __str__(self):
        return f"converging-evidence n*={self.n_star} stable-from={self.stable_from}"


@dataclass(frozen=True)
class OscillatingEvidence:
    cell: int
    late_visits: tuple[int, ...]

    def __str__(self):
        return (f"oscillating-evidence cell={self.cell} returns={len(self.late_visits)} "
                f"last={self.late_visits[-1]}")


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def __str__(self):
        return f"not-applicable: {self.reason}"


@dataclass(frozen=True)
class Unknown:
    def __str__(self):
        return "unknown"


ClassificationVerdict = Union[ConvergingEvidence, OscillatingEvidence, NotApplicable, Unknown]


def classify(r: RunRecord, margin: int = 2) -> ClassificationVerdict:
    """Classify an exhausted run as converging, oscillating or unknown.

    Converging: past the midpoint of the run the head stays right of some cell
    ``n_star >= margin``; the largest such ``n_star`` is reported along with
    the first step from which it holds.  Oscillating: some cell is revisited
    after excursions beyond ``cell + margin``, with such a return in the final
    quarter of the run.
    """
    if not isinstance(r.verdict, Exhausted):
        return NotApplicable("run terminated")
    prof = head_profile(r)
    last = len(prof.positions) - 1
    mid = r.verdict.budget // 2
    n_star = prof.suffix_min[mid] - 1
    if n_star >= margin:
        stable = mid
        while stable > 0 and prof.suffix_min[stable - 1] > n_star:
            stable -= 1
        return ConvergingEvidence(n_star, stable)

    late = (3 * last + 3) // 4
    candidates = sorted(set(prof.positions[late:]))
    for cell in candidates:
        returns = _returns(prof.positions, cell, margin)
        if returns and returns[-1] >= late:
            return OscillatingEvidence(cell, tuple(returns))
    return Unknown()


def _returns(positions, cell, margin):
    out = []
    visited = away = False
    for i, p in enumerate(positions):
        if p == cell:
            if away:
                out.append(i)
            visited, away = True, False
        elif visited and p > cell + margin:
            away = True
    return out


def frozen_prefixes(r: RunRecord) -> list[tuple[int, TapeOutput]]:
    """Tape prefixes the head never revisits for the rest of the run.

    Returns ``(configuration number, prefix)`` pairs, one per step at which the
    frozen region grows; both coordinates strictly increase.
    """
    if r.trace is None:
        raise TraceRequired("frozen prefixes need the full trace")
    prof = profile_from_trace(r.trace)
    out = []
    best = 0
    for t, n in enumerate(prof.suffix_min):
        if n > best:
            best = n
            # after t the head stays at cell >= n, so no left growth follows
            out.append((t, TapeOutput(r.trace[t].tape[:n])))
    return out


@dataclass(frozen=True)
class DyadicRational:
    numerator: int
    log2_denominator: int
    bits: str

    @classmethod
    def from_bits(cls, bits: str) -> "DyadicRational":
        return cls(int(bits, 2) if bits else 0, len(bits), bits)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.log2_denominator)

    def __str__(self):
        return f"{self.numerator}/2^{self.log2_denominator}"

    def binary(self) -> str:
        return "0." + self.bits


def extract_cauchy(r: RunRecord) -> list[DyadicRational]:
    """Read every frozen prefix as a binary fraction ``0.b1...bn``."""
    extra = [s for s in r.machine.input_alphabet if s not in FIGURES]
    if extra:
        raise NonBinaryAlphabet(f"non-blank symbols must be 0 and 1, found {extra}")
    out = []
    for _, prefix in frozen_prefixes(r):
        for i, tok in enumerate(prefix.word):
            if tok not in FIGURES:
                raise NonBinaryPrefix(i, tok)
        out.append(DyadicRational.from_bits("".join(prefix.word)))
    return out


def characteristic_sequence(pred: Machine, count: int, step_budget: int):
    """Bits ``r_k`` of a 0/1 predicate machine for ``k = 1..count``.

    ``r_k`` is 0 when the run on ``k`` halts with output 0, 1 when it halts
    with a nonzero output, and ``None`` when it self-terminates or runs out of
    budget.  ``values[j-1]`` is ``0.r_1...r_j``; values stop at the first
    unresolved bit.
    """
    bits: list[int | None] = []
    for k in range(1, count + 1):
        rec = run_nt(pred, encode_tuple((k,), pred), step_budget, retain="none")
        if isinstance(rec.verdict, Halted):
            try:
                bits.append(0 if decode_value(rec.final.tape, pred.blank) == 0 else 1)
            except MalformedNumeral as exc:
                raise MalformedPredicateOutput(f"k={k}: {exc}") from exc
        else:
            bits.append(None)
    values = []
    prefix = ""
    for b in bits:
        if b is None:
            break
        prefix += str(b)
        values.append(DyadicRational.from_bits(prefix))
    return bits, values
