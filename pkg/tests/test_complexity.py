import itertools

import pytest

from ntlab import corpus
from ntlab.complexity import (
    Diverged,
    EnumerationCapExceeded,
    NoAcceptStates,
    Undefined,
    accepts,
    language_upto,
    poly_bound,
    poly_check,
    run_time,
    worst_case,
    words,
)
from ntlab.runtime import Exhausted, SelfTerminated, run_classical
from ntlab.tm_core import make_machine


def reverse_max(m, n, budget):
    # second pass: enumerate in reverse, count steps with a classical run
    best = 0
    for w in reversed(list(itertools.product(m.input_alphabet, repeat=n))):
        rec = run_classical(m, w, budget, retain="none")
        best = max(best, rec.steps)
    return best


def test_run_time_examples():
    assert run_time(corpus.empty(), ["B"], 10) == 0
    assert run_time(corpus.right_scanner(), ["0", "1", "1"], 100) == 3
    assert run_time(corpus.flipper(), [], 100) == Diverged(SelfTerminated(0, 2))
    assert run_time(corpus.right_runner(), [], 50) == Diverged(Exhausted(50))


def test_words_order_and_cap():
    assert list(words(["0", "1"], 2)) == [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")]
    assert list(words(["0", "1"], 0)) == [()]
    with pytest.raises(EnumerationCapExceeded):
        worst_case(corpus.right_scanner(), 5, 100, cap=31)


def test_worst_case_right_scanner():
    m = corpus.right_scanner()
    assert worst_case(m, 0, 100).t_max == 0
    report = worst_case(m, 3, 100)
    assert len(report.per_word) == 8 and report.t_max == 3
    assert report.t_max == reverse_max(m, 3, 100)


def test_worst_case_binary_counter_matches_reverse_pass():
    m = corpus.binary_counter()
    for n in range(5):
        assert worst_case(m, n, 10_000).t_max == reverse_max(m, n, 10_000)


def test_worst_case_undefined_witness():
    report = worst_case(corpus.stall_on_11(), 2, 100)
    assert report.t_max == Undefined(("1", "1"))
    assert isinstance(report.per_word[("1", "1")], Diverged)
    assert report.per_word[("0", "1")] == 2


def test_budget_monotone():
    m = corpus.binary_counter()
    previous = None
    for budget in (5, 20, 50, 200, 2000):
        t = worst_case(m, 3, budget).t_max
        if previous is not None and not isinstance(previous, Undefined):
            assert t == previous
        previous = t
    assert previous == reverse_max(m, 3, 2000)


def test_accepts():
    m = corpus.even_acceptor()
    assert accepts(m, ["0", "1"], 100) is True
    assert accepts(m, ["0"], 100) is False
    assert accepts(m, ["0", "1", "0", "1"], 2) is None
    with pytest.raises(NoAcceptStates):
        accepts(corpus.right_scanner(), [], 10)


def test_accepts_consistent_with_run_time():
    m = corpus.even_acceptor()
    for budget in (0, 1, 2, 3, 10):
        for w in words(m.input_alphabet, 3):
            undecided = accepts(m, w, budget) is None
            assert undecided == (run_time(m, w, budget) == Diverged(Exhausted(budget)))


def test_language_upto():
    accepted, unknown = language_upto(corpus.even_acceptor(), 3, 100)
    assert accepted == [(), ("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")]
    assert unknown == []
    rejecter = make_machine([("q0", "0", "0", "no")], symbols=["B", "0"], accept=["yes"],
                            states=["q0", "no", "yes"])
    assert language_upto(rejecter, 3, 100) == ([], [])
    with pytest.raises(NoAcceptStates):
        language_upto(corpus.right_scanner(), 1, 10)


def test_poly_bound_convention():
    assert poly_bound(0, 0) == 1
    assert poly_bound(3, 2) == 11


def test_poly_check_examples():
    empty = poly_check(make_machine([], symbols=["B", "0", "1"]), 0, 4, 100)
    assert empty.passed and all(r.t_max == 0 and r.bound == 1 for r in empty.rows)
    scanner = poly_check(corpus.right_scanner(), 1, 6, 100)
    assert scanner.passed and [r.t_max for r in scanner.rows] == list(range(7))


def test_poly_check_exponential_counter():
    report = poly_check(corpus.binary_counter(), 2, 8, 100_000)
    statuses = [r.status for r in report.rows]
    first_fail = statuses.index("fail")
    assert first_fail == 1
    assert all(s == "fail" for s in statuses[first_fail:])
    assert not report.passed


def test_poly_check_undefined_rows():
    report = poly_check(corpus.stall_on_11(), 1, 2, 100)
    assert [r.status for r in report.rows] == ["pass", "pass", "undefined"]
