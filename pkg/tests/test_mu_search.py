import random

import pytest

from ntlab import corpus
from ntlab.corpus import LOOP, RUN, table_machine
from ntlab.mu_search import (
    ExhaustedSteps,
    ExhaustedY,
    ExtendedByWitness,
    Found,
    MalformedOutput,
    Totalized,
    Unknown,
    dovetail,
    evaluate,
    mu_value,
    total_extension,
)
from ntlab.runtime import Halted, SelfTerminated
from ntlab.tm_core import make_machine


def test_found_three():
    g = corpus.mu_found3()
    assert mu_value(g, (), 10, 10_000) == Found(3)
    assert total_extension(g, (), 10, 10_000) == 3


def test_minimality_recheck():
    g = corpus.mu_found3()
    y = mu_value(g, (), 10, 10_000).y
    for smaller in range(y):
        verdict, value = evaluate(g, (smaller,), 10_000)
        assert isinstance(verdict, Halted) and value != 0


def test_totalized():
    g = corpus.mu_totalized()
    assert mu_value(g, (), 10, 10_000) == Totalized(1)
    assert total_extension(g, (), 10, 10_000) == 0
    at_zero = table_machine({(0,): LOOP}, arity=1)
    assert mu_value(at_zero, (), 10, 10_000) == Totalized(0)


def test_constant_zero():
    assert mu_value(corpus.const_zero(), (), 5, 1000) == Found(0)


def test_budgets_give_unknown():
    g = corpus.mu_found3()
    outcome = total_extension(g, (), 10, 3)
    assert outcome == Unknown(ExhaustedSteps(0, 3))
    assert mu_value(g, (), 2, 10_000) == ExhaustedY(2)
    runner = table_machine({(0,): 1, (1,): RUN}, arity=1)
    assert mu_value(runner, (), 5, 500) == ExhaustedSteps(1, 500)
    assert str(Unknown(ExhaustedY(2))) == "unknown: no zero for y <= 2"


def test_witness_callback():
    g = table_machine({}, arity=1)  # G is 1 everywhere
    assert mu_value(g, (), 3, 1000, witness=lambda args: True) == ExtendedByWitness()
    assert total_extension(g, (), 3, 1000, witness=lambda args: True) == 0
    assert mu_value(g, (), 3, 1000, witness=lambda args: False) == ExhaustedY(3)


def test_malformed_output():
    junk = make_machine([("q0", "1", "*", "q1")], symbols=["B", "1", "*"])
    with pytest.raises(MalformedOutput):
        mu_value(junk, (), 3, 100)


def test_two_place_table():
    # G(x, y) = 0 iff y == x + 1
    table = {(x, y): (0 if y == x + 1 else 2) for x in range(3) for y in range(5)}
    g = table_machine(table, arity=2)
    for x in range(3):
        assert total_extension(g, (x,), 6, 10_000) == x + 1


def test_budget_monotonicity():
    cases = [corpus.mu_found3(), corpus.mu_totalized(), corpus.const_zero()]
    for g in cases:
        decisive = mu_value(g, (), 10, 100_000)
        for sb, yb in [(20, 1), (200, 3), (2000, 10), (50_000, 20)]:
            small = mu_value(g, (), yb, sb)
            if isinstance(small, (Found, Totalized)):
                assert small == decisive
                assert mu_value(g, (), yb + 5, sb * 2) == small


def test_random_tables_match_direct_scan():
    rng = random.Random(11)
    for _ in range(10):
        values = [rng.choice([0, 1, 2, 3]) for _ in range(6)]
        g = table_machine({(y,): v for y, v in enumerate(values)}, arity=1)
        expected = values.index(0) if 0 in values else None
        got = total_extension(g, (), 5, 10_000)
        if expected is None:
            assert got == Unknown(ExhaustedY(5))
        else:
            assert got == expected


def test_dovetail_examples():
    log, win = dovetail([(corpus.blank_loop(), ()), (corpus.right_runner(), ())], 100)
    assert win == (0, SelfTerminated(0, 1)) and len(log.schedule) <= 2
    log, win = dovetail([(corpus.right_runner(), ()), (corpus.halts_at_5(), ())], 100)
    assert win == (1, Halted(5)) and len(log.schedule) - 1 == 11
    assert log.is_fair(2)


def test_dovetail_exhausts():
    log, win = dovetail([(corpus.right_runner(), ()), (corpus.bouncer(), ())], 50)
    assert win is None and len(log.schedule) == 50 and log.is_fair(2)


def test_dovetail_deterministic():
    runs = [(corpus.right_runner(), ()), (corpus.flipper(), ()), (corpus.halts_at_5(), ())]
    a, b = dovetail(runs, 40), dovetail(runs, 40)
    assert a[0].schedule == b[0].schedule and a[1] == b[1]
    with pytest.raises(ValueError):
        dovetail([], 10)
