"""Plain-text machine files.

::

    # comment
    blank: B
    symbols: B 0 1
    states: q0 q1
    start: q0
    accept: q1            (optional)
    quad: q0 B 1 q1       (state, scanned, action, next state)

An action is a symbol to print, ``L`` or ``R``.
"""

from __future__ import annotations

from pathlib import Path

from .tm_core import (
    DuplicateQuadrupleKey,
    Machine,
    StartNotDeclared,
    UnknownToken,
    ValidationError,
    validate,
)

LIST_DIRECTIVES = ("symbols", "states", "accept")


class MachineFileError(ValueError):
    def __init__(self, problems, source="<machine>"):
        self.problems = list(problems)  # (line number or None, message)
        self.source = source
        lines = [f"{source}:{n}: {msg}" if n else f"{source}: {msg}" for n, msg in self.problems]
        super().__init__("\n".join(lines))


def parse(text: str, source: str = "<machine>") -> Machine:
    raw = {"blank": [], "quads": []}
    seen_at: dict[str, int] = {}
    quad_lines = []
    problems = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        directive, colon, rest = line.partition(":")
        directive = directive.strip()
        if not colon:
            problems.append((lineno, f"expected '<directive>: ...', got {line!r}"))
            continue
        fields = rest.split()
        if directive == "quad":
            if len(fields) != 4:
                problems.append((lineno, f"a quad needs 4 tokens, got {len(fields)}"))
                continue
            raw["quads"].append(tuple(fields))
            quad_lines.append(lineno)
        elif directive == "blank":
            if len(fields) != 1:
                problems.append((lineno, "blank takes exactly one token"))
                continue
            raw["blank"].append(fields[0])
        elif directive in LIST_DIRECTIVES or directive == "start":
            if directive in seen_at:
                problems.append((lineno, f"{directive} already given on line {seen_at[directive]}"))
                continue
            seen_at[directive] = lineno
            if directive == "start":
                if len(fields) != 1:
                    problems.append((lineno, "start takes exactly one token"))
                    continue
                raw["start"] = fields[0]
            else:
                raw[directive] = fields
        else:
            problems.append((lineno, f"unknown directive {directive!r}"))
    if problems:
        raise MachineFileError(problems, source)
    try:
        return validate(raw)
    except ValidationError as exc:
        problems = _locate(exc.issues, raw["quads"], quad_lines, seen_at)
        raise MachineFileError(list(dict.fromkeys(problems)), source) from None


def _locate(issues, quads, lines, seen_at):
    out = []
    for issue in issues:
        line = None
        if isinstance(issue, DuplicateQuadrupleKey):
            matches = [n for q, n in zip(quads, lines) if (q[0], q[1]) == (issue.state, issue.symbol)]
            line = matches[1] if len(matches) > 1 else None
        elif isinstance(issue, UnknownToken) and issue.where.startswith("quadruple"):
            text = issue.where.split(" ", 1)[1]
            line = next((n for q, n in zip(quads, lines) if " ".join(q) == text), None)
        elif isinstance(issue, StartNotDeclared):
            line = seen_at.get("start")
        out.append((line, str(issue)))
    return out


def serialize(m: Machine) -> str:
    lines = [
        f"blank: {m.blank}",
        f"symbols: {' '.join(m.symbols)}",
        f"states: {' '.join(m.states)}",
        f"start: {m.start}",
    ]
    if m.accept:
        lines.append(f"accept: {' '.join(s for s in m.states if s in m.accept)}")
    lines.extend(f"quad: {q}" for q in m.quads)
    return "\n".join(lines) + "\n"


def load(path) -> Machine:
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), str(path))
