"""Turing machines with repeat detection, Gödel numbering, minimisation and
worst-case step counting."""

from .runtime import Exhausted, Halted, RunRecord, SelfTerminated, run_classical, run_nt
from .tm_core import Description, Machine, Quadruple, make_machine, move, validate

__all__ = [
    "Description",
    "Exhausted",
    "Halted",
    "Machine",
    "Quadruple",
    "RunRecord",
    "SelfTerminated",
    "make_machine",
    "move",
    "run_classical",
    "run_nt",
    "validate",
]
