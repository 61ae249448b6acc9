"""Random machines and an independent move oracle shared by the tests."""

import random

from ntlab.tm_core import LEFT, RIGHT, Description, make_machine


def random_machine(rng: random.Random, max_states=4, max_symbols=3, density=0.8):
    n_states = rng.randint(1, max_states)
    n_symbols = rng.randint(1, max_symbols)
    states = [f"q{i}" for i in range(n_states)]
    symbols = ["B"] + [f"s{i}" for i in range(1, n_symbols)]
    quads = []
    for q in states:
        for s in symbols:
            if rng.random() < density:
                action = rng.choice(symbols + [LEFT, RIGHT])
                quads.append((q, s, action, rng.choice(states)))
    return make_machine(quads, symbols=symbols, states=states)


def random_description(rng: random.Random, m, max_len=6):
    tape = [rng.choice(m.symbols) for _ in range(rng.randint(1, max_len))]
    head = rng.randrange(len(tape))
    word = tape[:head] + [rng.choice(m.states)] + tape[head:]
    return Description(tuple(word), head)


def move_oracle(m, word):
    """The five move cases, matched on the word by pattern, rule found by scan."""
    word = list(word)
    j = next(i for i, tok in enumerate(word) if tok in m.states)
    P, q, s, Q = word[:j], word[j], word[j + 1], word[j + 2:]
    rules = [r for r in m.quads if r.state == q and r.scanned == s]
    if not rules:
        return None
    (rule,) = rules
    if rule.action == LEFT:
        if P:
            return P[:-1] + [rule.next_state, P[-1], s] + Q
        return [rule.next_state, m.blank, s] + Q
    if rule.action == RIGHT:
        if Q:
            return P + [s, rule.next_state] + Q
        return P + [s, rule.next_state, m.blank]
    return P + [rule.next_state, rule.action] + Q


def first_repeat_brute_force(trace):
    """Earliest (i, m) with trace[i] == trace[m], comparing all pairs by word."""
    words = [list(a.word) for a in trace]
    for b in range(len(words)):
        for a in range(b):
            if words[a] == words[b]:
                return a, b
    return None
