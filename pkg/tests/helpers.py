"""Shared test utilities: fixtures, oracles and random generators.

The acceptance-style oracles here are deliberately independent of the library
internals they check: NFA acceptance is a hand-rolled frontier loop, and the
data-word space is enumerated through value patterns (restricted growth
strings) rather than through the library's own equivalence machinery.
"""

from pathlib import Path
from random import Random

from sessauto import (
    Automaton,
    OpKind,
    RegisterOp,
    SymbolicDfa,
    Transition,
    TransitionLabel,
    parse_automaton,
    parse_data_word,
    parse_symbolic_word,
    simulate,
)

FIXTURES = Path(__file__).parent / "fixtures"


def fixture(name: str) -> Automaton:
    return parse_automaton((FIXTURES / f"{name}.sra").read_text())


def dw(text: str):
    return parse_data_word(text)


def sw(text: str):
    return parse_symbolic_word(text)


def letter(label: str, kind: str, register: int) -> TransitionLabel:
    return TransitionLabel(label, RegisterOp(OpKind(kind), register))


def fig5c_dfa() -> SymbolicDfa:
    """Hand-coded expected canonical form of the fig5a language."""
    edges = {
        ("q0", "a:*1"): "q1",
        ("q1", "a:*1"): "q1",
        ("q1", "b:^1"): "q1",
        ("q1", "a:*2"): "q2",
        ("q2", "a:*2"): "q2",
        ("q2", "b:^2"): "q2",
        ("q2", "b:^1"): "q3",
        ("q3", "a:*1"): "q3",
        ("q3", "b:^1"): "q3",
        ("q3", "b:^2"): "q3",
        ("q3", "a:*2"): "q2",
    }
    delta = {(s, sw(x)[0]): t for (s, x), t in edges.items()}
    return SymbolicDfa(
        alphabet=frozenset(x for (_, x) in delta),
        states=frozenset({"q0", "q1", "q2", "q3"}),
        initial="q0",
        finals=frozenset({"q0", "q1", "q3"}),
        delta=delta,
        registers=2,
    )


def nfa_accepts_brute(nfa, word) -> bool:
    """Frontier simulation written from scratch, as an oracle for symbolic ops."""
    frontier = set(nfa.initials)
    for x in word:
        nxt = set()
        for (s, y, t) in nfa.transitions:
            if s in frontier and y == x:
                nxt.add(t)
        frontier = nxt
    return bool(frontier & nfa.finals)


def enumerate_symbolic_words(alphabet, max_len):
    words = [()]
    last = [()]
    for _ in range(max_len):
        last = [w + (x,) for w in last for x in alphabet]
        words.extend(last)
    return words


def random_session_automaton(
    rng: Random,
    labels=("a", "b"),
    max_states: int = 4,
    registers: int = 2,
    name: str = "rand",
) -> Automaton:
    n = rng.randint(1, max_states)
    states = [f"q{i}" for i in range(n)]
    transitions = set()
    for _ in range(rng.randint(0, 3 * n)):
        kind = rng.choice((OpKind.FRESH, OpKind.REUSE))
        transitions.add(
            Transition(
                rng.choice(states),
                TransitionLabel(rng.choice(labels), RegisterOp(kind, rng.randint(1, registers))),
                rng.choice(states),
            )
        )
    finals = frozenset(s for s in states if rng.random() < 0.5)
    return Automaton(
        name=name,
        alphabet=frozenset(labels),
        registers=registers,
        states=frozenset(states),
        initial="q0",
        finals=finals,
        transitions=frozenset(transitions),
    )


def random_data_word(rng: Random, labels=("a", "b"), max_len=8, max_value=4):
    n = rng.randint(0, max_len)
    return tuple((rng.choice(labels), rng.randint(1, max_value)) for _ in range(n))


def permute_values(rng: Random, word):
    values = sorted({d for _, d in word})
    shuffled = values[:]
    rng.shuffle(shuffled)
    mapping = dict(zip(values, shuffled))
    return tuple((a, mapping[d]) for a, d in word)


def _growth_strings(n):
    """All value patterns of length n: pattern[i] in 0..max(pattern[:i])+1."""
    if n == 0:
        yield ()
        return
    stack = [((0,), 0)]
    while stack:
        prefix, top = stack.pop()
        if len(prefix) == n:
            yield prefix
            continue
        for v in range(top + 2):
            stack.append((prefix + (v,), max(top, v)))


def enumerate_word_classes(labels, max_len):
    """One representative data word per equivalence class of length <= max_len.

    Every word over values {1..max_len} is a relabeling of exactly one of
    these (labels kept, values permuted), so membership questions over the
    full space reduce to these representatives.
    """
    out = []
    for n in range(max_len + 1):
        label_seqs = [()]
        for _ in range(n):
            label_seqs = [seq + (a,) for seq in label_seqs for a in labels]
        for pattern in _growth_strings(n):
            for seq in label_seqs:
                out.append(tuple((a, v + 1) for a, v in zip(seq, pattern)))
    return out


def membership_vector(automaton, representatives):
    return [simulate(automaton, w) for w in representatives]


def duplicate_state(a: Automaton, state: str, copy_name: str) -> Automaton:
    """Split a state into twins: same out-edges, parallel in-edges.

    Nondeterministic duplication keeps the language: any run through the
    original can route through either twin.
    """
    extra = set()
    for t in a.transitions:
        if t.source == state:
            extra.add(Transition(copy_name, t.label, copy_name if t.target == state else t.target))
        if t.target == state:
            extra.add(Transition(t.source, t.label, copy_name))
    finals = a.finals | ({copy_name} if state in a.finals else frozenset())
    return Automaton(
        name=a.name + "_dup",
        alphabet=a.alphabet,
        registers=a.registers,
        states=a.states | {copy_name},
        initial=a.initial,
        finals=finals,
        transitions=a.transitions | extra,
    )


def add_dead_state(a: Automaton, name: str) -> Automaton:
    """Add a reachable but non-accepting trap state."""
    label = sorted(a.alphabet)[0]
    letter = TransitionLabel(label, RegisterOp(OpKind.FRESH, 1))
    return Automaton(
        name=a.name + "_dead",
        alphabet=a.alphabet,
        registers=a.registers,
        states=a.states | {name},
        initial=a.initial,
        finals=a.finals,
        transitions=a.transitions
        | {Transition(a.initial, letter, name), Transition(name, letter, name)},
    )
