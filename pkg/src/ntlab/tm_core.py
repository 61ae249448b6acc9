"""Classical Turing machines over quadruples.

A machine is a finite, deterministic set of quadruples ``(state, scanned,
action, next_state)`` where the action is a symbol to print, ``"L"`` or
``"R"``.  A configuration is an instantaneous tape description: the full tape
word with the state token inserted immediately left of the scanned cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

LEFT = "L"
RIGHT = "R"
RESERVED = frozenset({LEFT, RIGHT})


class Issue:
    """One violated machine invariant."""


@dataclass(frozen=True)
class DuplicateQuadrupleKey(Issue):
    state: str
    symbol: str

    def __str__(self):
        return f"two quadruples share the key ({self.state}, {self.symbol})"


@dataclass(frozen=True)
class UnknownToken(Issue):
    token: str
    where: str

    def __str__(self):
        return f"undeclared token {self.token!r} in {self.where}"


@dataclass(frozen=True)
class ReservedToken(Issue):
    token: str

    def __str__(self):
        return f"{self.token!r} is reserved for moves and cannot be a symbol"


@dataclass(frozen=True)
class InvalidToken(Issue):
    token: object

    def __str__(self):
        return f"{self.token!r} is not a valid token (empty or contains whitespace)"


@dataclass(frozen=True)
class TokenClash(Issue):
    token: str

    def __str__(self):
        return f"{self.token!r} is declared both as a symbol and as a state"


@dataclass(frozen=True)
class DuplicateDeclaration(Issue):
    token: str

    def __str__(self):
        return f"{self.token!r} is declared twice"


@dataclass(frozen=True)
class NoBlank(Issue):
    def __str__(self):
        return "no blank symbol declared"


@dataclass(frozen=True)
class MultipleBlanks(Issue):
    blanks: tuple

    def __str__(self):
        return f"more than one blank declared: {' '.join(self.blanks)}"


@dataclass(frozen=True)
class StartNotDeclared(Issue):
    start: str | None

    def __str__(self):
        if self.start is None:
            return "no start state given"
        return f"start state {self.start!r} is not a declared state"


class ValidationError(ValueError):
    """Raised by :func:`validate` with every violated invariant."""

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))


class UnknownSymbol(ValueError):
    pass


class InvalidDescription(ValueError):
    pass


@dataclass(frozen=True)
class Quadruple:
    state: str
    scanned: str
    action: str  # a symbol to print, LEFT or RIGHT
    next_state: str

    def __str__(self):
        return f"{self.state} {self.scanned} {self.action} {self.next_state}"


@dataclass(frozen=True)
class Machine:
    symbols: tuple[str, ...]
    blank: str
    states: tuple[str, ...]
    start: str
    accept: frozenset[str]
    quads: tuple[Quadruple, ...]
    _index: Mapping[tuple[str, str], Quadruple] = field(
        init=False, repr=False, compare=False, hash=False
    )
    _state_set: frozenset[str] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {(q.state, q.scanned): q for q in self.quads}
        )
        object.__setattr__(self, "_state_set", frozenset(self.states))

    def rule(self, state, scanned) -> Quadruple | None:
        return self._index.get((state, scanned))

    @property
    def input_alphabet(self) -> tuple[str, ...]:
        return tuple(s for s in self.symbols if s != self.blank)

    def is_state(self, token) -> bool:
        return token in self._state_set


def _valid_token(tok) -> bool:
    return isinstance(tok, str) and tok != "" and not any(c.isspace() for c in tok)


def validate(raw: Mapping) -> Machine:
    """Check unchecked machine data and build a :class:`Machine`.

    ``raw`` holds ``symbols`` (sequence), ``blank`` (a token, or a sequence of
    tokens when read from a file with repeated directives), ``states``,
    ``start`` (may be missing), ``accept`` (optional) and ``quads`` (sequence of
    4-tuples).  The blank is added to the front of ``symbols`` if not listed.

    Raises :class:`ValidationError` listing every violated invariant.
    """
    issues: list[Issue] = []

    blanks = raw.get("blank")
    if blanks is None:
        blanks = []
    elif isinstance(blanks, str):
        blanks = [blanks]
    else:
        blanks = list(blanks)
    if not blanks:
        issues.append(NoBlank())
    elif len(set(blanks)) > 1:
        issues.append(MultipleBlanks(tuple(blanks)))
    blank = blanks[0] if blanks else None

    symbols = list(raw.get("symbols") or [])
    if blank is not None and blank not in symbols:
        symbols.insert(0, blank)
    states = list(raw.get("states") or [])
    accept = list(raw.get("accept") or [])
    start = raw.get("start")

    for group in (symbols, states):
        seen = set()
        for tok in group:
            if not _valid_token(tok):
                issues.append(InvalidToken(tok))
            elif tok in seen:
                issues.append(DuplicateDeclaration(tok))
            seen.add(tok)
    for tok in symbols:
        if tok in RESERVED:
            issues.append(ReservedToken(tok))
    sym_set, state_set = set(symbols), set(states)
    for tok in sym_set & state_set:
        issues.append(TokenClash(tok))

    if start is None or start not in state_set:
        issues.append(StartNotDeclared(start))
    for tok in accept:
        if tok not in state_set:
            issues.append(UnknownToken(tok, "accept"))

    quads = []
    keys = set()
    for entry in raw.get("quads") or []:
        q = entry if isinstance(entry, Quadruple) else Quadruple(*entry)
        where = f"quadruple {q}"
        for tok in (q.state, q.next_state):
            if tok not in state_set:
                issues.append(UnknownToken(tok, where))
        if q.scanned not in sym_set:
            issues.append(UnknownToken(q.scanned, where))
        if q.action not in RESERVED and q.action not in sym_set:
            issues.append(UnknownToken(q.action, where))
        key = (q.state, q.scanned)
        if key in keys:
            issues.append(DuplicateQuadrupleKey(*key))
        keys.add(key)
        quads.append(q)

    if issues:
        raise ValidationError(issues)
    return Machine(
        symbols=tuple(symbols),
        blank=blank,
        states=tuple(states),
        start=start,
        accept=frozenset(accept),
        quads=tuple(quads),
    )


def make_machine(
    quads: Iterable[Sequence[str]],
    *,
    blank: str = "B",
    start: str = "q0",
    symbols: Sequence[str] | None = None,
    states: Sequence[str] | None = None,
    accept: Sequence[str] = (),
) -> Machine:
    """Build a machine, inferring undeclared symbols and states from the quads.

    Tokens are inferred in order of first appearance; the start state always
    comes first among the states and the blank first among the symbols.
    """
    quads = [tuple(q) for q in quads]
    sym = list(symbols) if symbols is not None else [blank]
    st = list(states) if states is not None else [start]
    if symbols is None:
        for q in quads:
            for tok in (q[1], q[2]):
                if tok not in RESERVED and tok not in sym:
                    sym.append(tok)
    if states is None:
        for q in quads:
            for tok in (q[0], q[3]):
                if tok not in st:
                    st.append(tok)
        for tok in accept:
            if tok not in st:
                st.append(tok)
    return validate(
        {
            "symbols": sym,
            "blank": blank,
            "states": st,
            "start": start,
            "accept": list(accept),
            "quads": quads,
        }
    )


@dataclass(frozen=True)
class Description:
    """An instantaneous tape description.

    ``word`` is the full token sequence; ``head`` is the index of the single
    state token inside it, which is also the number of tape cells left of the
    scanned one.
    """

    word: tuple[str, ...]
    head: int

    @property
    def state(self) -> str:
        return self.word[self.head]

    @property
    def scanned(self) -> str:
        return self.word[self.head + 1]

    @property
    def tape(self) -> tuple[str, ...]:
        return self.word[: self.head] + self.word[self.head + 1 :]

    def __str__(self):
        return " ".join(self.word)

    def __len__(self):
        return len(self.word)


def describe(m: Machine, tokens: Sequence[str]) -> Description:
    """Build a checked :class:`Description` from a raw token word."""
    word = tuple(tokens)
    if len(word) < 2:
        raise InvalidDescription("a description has at least two tokens")
    heads = [i for i, tok in enumerate(word) if m.is_state(tok)]
    if len(heads) != 1:
        raise InvalidDescription(f"expected exactly one state token, found {len(heads)}")
    head = heads[0]
    if head == len(word) - 1:
        raise InvalidDescription("the state token cannot be last")
    sym = set(m.symbols)
    for tok in word[:head] + word[head + 1 :]:
        if tok not in sym:
            raise UnknownSymbol(tok)
    return Description(word, head)


def initial_description(m: Machine, input_word: Sequence[str]) -> Description:
    sym = set(m.symbols)
    for tok in input_word:
        if tok not in sym:
            raise UnknownSymbol(tok)
    cells = tuple(input_word) or (m.blank,)
    return Description((m.start,) + cells, 0)


def move(m: Machine, alpha: Description) -> Description | None:
    """Apply one quadruple to ``alpha``; ``None`` means the machine is stuck."""
    word, h = alpha.word, alpha.head
    q = m.rule(word[h], word[h + 1])
    if q is None:
        return None
    act = q.action
    if act == LEFT:
        if h == 0:
            return Description((q.next_state, m.blank) + word[1:], 0)
        return Description(
            word[: h - 1] + (q.next_state, word[h - 1]) + word[h + 1 :], h - 1
        )
    if act == RIGHT:
        if h + 2 == len(word):
            return Description(word[:h] + (word[h + 1], q.next_state, m.blank), h + 1)
        return Description(
            word[:h] + (word[h + 1], q.next_state) + word[h + 2 :], h + 1
        )
    return Description(word[:h] + (q.next_state, act) + word[h + 2 :], h)
