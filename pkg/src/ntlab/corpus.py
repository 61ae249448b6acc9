"""Small machines used by the tests, the acceptance suite and the CLI examples.

The same machines ship as ``.tm`` files under ``ntlab/machines``.
"""

from __future__ import annotations

from importlib import resources
from typing import Mapping

from .machinefile import parse
from .runtime import SEPARATOR, STROKE
from .tm_core import LEFT, RIGHT, Machine, make_machine

B = "B"

# special table entries for table_machine
LOOP = "loop"  # self-terminates at once
RUN = "run"  # runs right forever


def empty() -> Machine:
    return make_machine([], symbols=[B])


def blank_loop() -> Machine:
    return make_machine([("q0", B, B, "q0")])


def flipper() -> Machine:
    return make_machine([("q0", B, "1", "q1"), ("q1", "1", B, "q0")])


def right_runner() -> Machine:
    """Prints 1 and steps right, forever: the tape reads 111... ."""
    return make_machine(
        [("q0", B, "1", "q1"), ("q1", "1", RIGHT, "q0")], symbols=[B, "0", "1"]
    )


def zero_then_ones() -> Machine:
    """Prints 0, then 1s, moving right: the tape reads 0111... ."""
    return make_machine(
        [
            ("q0", B, "0", "q1"),
            ("q1", "0", RIGHT, "q2"),
            ("q2", B, "1", "q3"),
            ("q3", "1", RIGHT, "q2"),
        ],
        symbols=[B, "0", "1"],
    )


def zero_one_then_blanks() -> Machine:
    """Prints 0 1 and then walks right over blanks, leaving them behind."""
    return make_machine(
        [
            ("q0", B, "0", "q1"),
            ("q1", "0", RIGHT, "q2"),
            ("q2", B, "1", "q3"),
            ("q3", "1", RIGHT, "q4"),
            ("q4", B, RIGHT, "q4"),
        ],
        symbols=[B, "0", "1"],
    )


def bouncer() -> Machine:
    """Marks cell 0, then repeatedly appends a 1 and walks back to the mark."""
    return make_machine(
        [
            ("q0", B, "M", "q1"),
            ("q1", "M", RIGHT, "q2"),
            ("q2", "1", RIGHT, "q2"),
            ("q2", B, "1", "q3"),
            ("q3", "1", LEFT, "q3"),
            ("q3", "M", RIGHT, "q2"),
        ]
    )


def halts_at_5() -> Machine:
    return make_machine([(f"q{i}", B, RIGHT, f"q{i + 1}") for i in range(5)])


def right_scanner() -> Machine:
    """Moves right over its input and stops on the first blank: n steps."""
    return make_machine(
        [("q0", "0", RIGHT, "q0"), ("q0", "1", RIGHT, "q0")], symbols=[B, "0", "1"]
    )


def stall_on_11() -> Machine:
    """Scans right; reprints forever (self-terminates) after reading 1 1."""
    return make_machine(
        [
            ("q0", "0", RIGHT, "q0"),
            ("q0", "1", RIGHT, "q1"),
            ("q1", "0", RIGHT, "q0"),
            ("q1", "1", "1", "q1"),
        ],
        symbols=[B, "0", "1"],
    )


def even_acceptor() -> Machine:
    """Accepts exactly the words of even length."""
    return make_machine(
        [
            ("even", "0", RIGHT, "odd"),
            ("even", "1", RIGHT, "odd"),
            ("odd", "0", RIGHT, "even"),
            ("odd", "1", RIGHT, "even"),
        ],
        start="even",
        symbols=[B, "0", "1"],
        accept=["even"],
    )


def binary_counter() -> Machine:
    """Counts its input up in binary until it overflows: exponential time."""
    return make_machine(
        [
            ("seek", "0", RIGHT, "seek"),
            ("seek", "1", RIGHT, "seek"),
            ("seek", B, LEFT, "carry"),
            ("carry", "1", "0", "back"),
            ("back", "0", LEFT, "carry"),
            ("carry", "0", "1", "seek"),
        ],
        start="seek",
        symbols=[B, "0", "1"],
    )


def const_zero() -> Machine:
    """Erases its input and writes the numeral for 0."""
    return make_machine(
        [
            ("q0", STROKE, B, "q1"),
            ("q0", SEPARATOR, B, "q1"),
            ("q1", B, RIGHT, "q0"),
            ("q0", B, STROKE, "done"),
        ],
        symbols=[B, STROKE, SEPARATOR],
    )


def parity() -> Machine:
    """On input k, erases it and writes k mod 2."""
    return make_machine(
        [
            ("even", STROKE, B, "even_"),
            ("even_", B, RIGHT, "odd"),
            ("odd", STROKE, B, "odd_"),
            ("odd_", B, RIGHT, "even"),
            # an even number of strokes means k is odd: write 1 (two strokes)
            ("even", B, STROKE, "w1"),
            ("w1", STROKE, RIGHT, "w2"),
            ("w2", B, STROKE, "done"),
            ("odd", B, STROKE, "done"),
        ],
        start="even",
        symbols=[B, STROKE, SEPARATOR],
    )


def table_machine(table: Mapping[tuple, object], arity: int, default: object = 1) -> Machine:
    """A machine computing a finite table of an ``arity``-place function.

    Each entry is a natural, :data:`LOOP` (the run self-terminates) or
    :data:`RUN` (the run never stops).  Argument tuples outside the table get
    ``default``.  The input is read and erased left to right, then the value
    is written as a stroke numeral.
    """
    cap = max((v for key in table for v in key), default=0)
    quads = []
    sinks = set()
    writers = set()

    def target(value):
        if value == LOOP or value == RUN:
            sinks.add(value)
            return value
        writers.add(value + 1)
        return f"w{value + 1}"

    def read(vals, c):
        return "r" + ",".join(map(str, vals)) + f";{c}"

    def walk(vals):
        for c in range(cap + 2):
            here = read(vals, c)
            if c < cap + 1:
                quads.append((here, STROKE, B, "e" + here[1:]))
                quads.append(("e" + here[1:], B, RIGHT, read(vals, c + 1)))
            else:
                quads.append((here, STROKE, B, "over_"))
            if c == 0:
                continue
            done = vals + (c - 1,)
            if len(done) < arity:
                quads.append((here, SEPARATOR, B, "s" + here[1:]))
                quads.append(("s" + here[1:], B, RIGHT, read(done, 0)))
                walk(done)
            else:
                quads.append((here, B, B, target(table.get(done, default))))

    walk(())
    # an argument beyond the table: erase the rest of the input, use the default
    quads.append(("over", STROKE, B, "over_"))
    quads.append(("over", SEPARATOR, B, "over_"))
    quads.append(("over_", B, RIGHT, "over"))
    quads.append(("over", B, B, target(default)))
    for k in sorted(writers):
        for j in range(k, 0, -1):
            if j == 1:
                quads.append((f"w{j}", B, STROKE, "halt"))
            else:
                quads.append((f"w{j}", B, STROKE, f"m{j}"))
                quads.append((f"m{j}", STROKE, RIGHT, f"w{j - 1}"))
    if LOOP in sinks:
        quads.append((LOOP, B, B, LOOP))
        quads.append((LOOP, STROKE, STROKE, LOOP))
    if RUN in sinks:
        quads.append((RUN, B, RIGHT, RUN))
        quads.append((RUN, STROKE, RIGHT, RUN))
    unique = list(dict.fromkeys(quads))
    return make_machine(unique, start=read((), 0), symbols=[B, STROKE, SEPARATOR])


def mu_found3() -> Machine:
    """G(y) = 1 for y < 3, G(3) = 0, and 1 beyond."""
    return table_machine({(0,): 1, (1,): 1, (2,): 1, (3,): 0}, arity=1)


def mu_totalized() -> Machine:
    """G(0) = 1, then the run for y = 1 self-terminates; G(2) = 0."""
    return table_machine({(0,): 1, (1,): LOOP, (2,): 0}, arity=1)


BUILDERS = {
    "empty": empty,
    "blank_loop": blank_loop,
    "flipper": flipper,
    "right_runner": right_runner,
    "zero_then_ones": zero_then_ones,
    "zero_one_then_blanks": zero_one_then_blanks,
    "bouncer": bouncer,
    "halts_at_5": halts_at_5,
    "right_scanner": right_scanner,
    "stall_on_11": stall_on_11,
    "even_acceptor": even_acceptor,
    "binary_counter": binary_counter,
    "const_zero": const_zero,
    "parity": parity,
    "mu_found3": mu_found3,
    "mu_totalized": mu_totalized,
}


def path(name: str):
    return resources.files("ntlab") / "machines" / f"{name}.tm"


def load(name: str) -> Machine:
    p = path(name)
    return parse(p.read_text(encoding="utf-8"), f"{name}.tm")
