"""Automata over data words.

An automaton reads (label, value) letters.  Each transition carries a
TransitionLabel whose register operation constrains the value read:

    fresh  the value must not have occurred anywhere in the word so far,
           and is written to the register
    local  the value must differ from every current register content,
           and is written to the register
    reuse  the value must equal the register's current content

The class of an automaton follows from the operations it uses: fresh+reuse
gives a session automaton, local+reuse a register automaton, anything mixing
fresh and local a fresh-register automaton.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .errors import NotSessionAutomaton, UnknownLabel
from .symbolic import SymbolicDfa, SymbolicNfa
from .words import (
    DataWord,
    OpKind,
    RegisterOp,
    SymbolicWord,
    TransitionLabel,
    letter_key,
)

_TOKEN_CHARS = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


def is_token(text: str) -> bool:
    return bool(text) and set(text) <= _TOKEN_CHARS


class AutomatonClass(enum.Enum):
    SESSION = "session"
    REGISTER = "register"
    FRESH_REGISTER = "fresh-register"


@dataclass(frozen=True)
class Transition:
    source: str
    label: TransitionLabel
    target: str


@dataclass(frozen=True)
class Automaton:
    name: str
    alphabet: frozenset[str]
    registers: int
    states: frozenset[str]
    initial: str
    finals: frozenset[str]
    transitions: frozenset[Transition]

    @cached_property
    def _moves(self) -> dict[tuple[str, str], tuple[tuple[OpKind, int, str], ...]]:
        # (state, label) -> candidate moves, used by the run loop.
        table: dict[tuple[str, str], list[tuple[OpKind, int, str]]] = {}
        for t in self.transitions:
            key = (t.source, t.label.label)
            table.setdefault(key, []).append(
                (t.label.op.kind, t.label.op.register, t.target)
            )
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def _symbolic_delta(self) -> dict[tuple[str, TransitionLabel], frozenset[str]]:
        table: dict[tuple[str, TransitionLabel], set[str]] = {}
        for t in self.transitions:
            table.setdefault((t.source, t.label), set()).add(t.target)
        return {k: frozenset(v) for k, v in table.items()}


def validate(a: Automaton) -> list[str]:
    """Structural diagnostics; an empty list means the automaton is well built."""
    out = []
    if not is_token(a.name):
        out.append(f"BadName: automaton name {a.name!r} is not a token")
    for label in sorted(a.alphabet):
        if not is_token(label):
            out.append(f"BadLabelToken: label {label!r} is not a token")
    for state in sorted(a.states):
        if not is_token(state):
            out.append(f"BadStateToken: state {state!r} is not a token")
    if a.registers < 1:
        out.append(f"RegistersNotPositive: registers = {a.registers}")
    if not a.states:
        out.append("NoStates: the state set is empty")
    if a.initial not in a.states:
        out.append(f"InitialNotAState: initial state {a.initial!r} is not in the state set")
    for s in sorted(a.finals - a.states):
        out.append(f"FinalNotAState: final state {s!r} is not in the state set")
    for t in sorted(a.transitions, key=lambda t: (t.source, letter_key(t.label), t.target)):
        where = f"{t.source} -{t.label}-> {t.target}"
        if t.source not in a.states:
            out.append(f"TransitionEndpointNotAState: source of {where}")
        if t.target not in a.states:
            out.append(f"TransitionEndpointNotAState: target of {where}")
        if t.label.label not in a.alphabet:
            out.append(f"UnknownLabel: transition {where} uses a label outside the alphabet")
        if not 1 <= t.label.op.register <= a.registers:
            out.append(f"RegisterOutOfRange: transition {where} uses register "
                       f"{t.label.op.register} with k = {a.registers}")
    return out


def classify(a: Automaton) -> AutomatonClass:
    """Most specific class; only-reuse (or transition-free) automata count as session."""
    kinds = {t.label.op.kind for t in a.transitions}
    if OpKind.LOCAL not in kinds:
        return AutomatonClass.SESSION
    if OpKind.FRESH not in kinds:
        return AutomatonClass.REGISTER
    return AutomatonClass.FRESH_REGISTER


def is_symbolically_deterministic(a: Automaton) -> bool:
    """At most one target per (state, transition label)."""
    return all(len(v) == 1 for v in a._symbolic_delta.values())


def is_data_deterministic(a: Automaton) -> bool:
    """No configuration of a session automaton ever has a choice of moves.

    Beyond symbolic determinism this forbids two fresh operations on the same
    label with different registers out of one state: both would fire on the
    same globally fresh value.
    """
    if classify(a) is not AutomatonClass.SESSION:
        raise NotSessionAutomaton("data determinism is defined for session automata")
    if not is_symbolically_deterministic(a):
        return False
    for s in a.states:
        for label in a.alphabet:
            fresh_regs = {
                reg for kind, reg, _ in a._moves.get((s, label), ())
                if kind is OpKind.FRESH
            }
            if len(fresh_regs) > 1:
                return False
    return True


def simulate(a: Automaton, word: DataWord) -> bool:
    """Membership of a data word, by breadth-first search over configurations.

    A configuration is (state, register assignment); the set of values read
    so far is determined by the prefix, so it needs no tracking per branch.
    """
    for label, _ in word:
        if label not in a.alphabet:
            raise UnknownLabel(f"label {label!r} is not in the alphabet of {a.name}")
    k = a.registers
    confs: set[tuple[str, tuple]] = {(a.initial, (None,) * k)}
    used: set[int] = set()
    for label, d in word:
        nxt: set[tuple[str, tuple]] = set()
        for state, regs in confs:
            for kind, reg, target in a._moves.get((state, label), ()):
                if kind is OpKind.REUSE:
                    if regs[reg - 1] != d:
                        continue
                    nxt.add((target, regs))
                elif kind is OpKind.LOCAL:
                    if d in regs:
                        continue
                    nxt.add((target, regs[: reg - 1] + (d,) + regs[reg:]))
                else:
                    if d in used:
                        continue
                    nxt.add((target, regs[: reg - 1] + (d,) + regs[reg:]))
        used.add(d)
        confs = nxt
        if not confs:
            return False
    return any(state in a.finals for state, _ in confs)


def accepts_symbolic(a: Automaton, word: SymbolicWord) -> bool:
    """Acceptance of a symbolic word, reading transition labels literally."""
    if classify(a) is not AutomatonClass.SESSION:
        raise NotSessionAutomaton("symbolic acceptance is defined for session automata")
    frontier = {a.initial}
    for letter in word:
        frontier = {
            t for s in frontier for t in a._symbolic_delta.get((s, letter), ())
        }
        if not frontier:
            return False
    return bool(frontier & a.finals)


def as_symbolic_nfa(a: Automaton) -> SymbolicNfa:
    """The symbolic language of a session automaton as a plain NFA."""
    if classify(a) is not AutomatonClass.SESSION:
        raise NotSessionAutomaton("only session automata have a symbolic-language view")
    return SymbolicNfa(
        alphabet=frozenset(
            TransitionLabel(label, RegisterOp(kind, r))
            for label in a.alphabet
            for kind in (OpKind.FRESH, OpKind.REUSE)
            for r in range(1, a.registers + 1)
        ),
        states=a.states,
        initials=frozenset({a.initial}),
        finals=a.finals,
        transitions=frozenset((t.source, t.label, t.target) for t in a.transitions),
        registers=a.registers,
    )


def from_symbolic_dfa(dfa: SymbolicDfa, name: str, labels, registers: int) -> Automaton:
    """Wrap a symbolic DFA back into a session automaton.

    Synthesized state names get a reserved ``__`` prefix so they can never
    collide with names from input files.
    """
    rename = {s: f"__{s}" for s in dfa.states}
    return Automaton(
        name=name,
        alphabet=frozenset(labels),
        registers=registers,
        states=frozenset(rename.values()),
        initial=rename[dfa.initial],
        finals=frozenset(rename[s] for s in dfa.finals),
        transitions=frozenset(
            Transition(rename[s], x, rename[t]) for (s, x), t in dfa.delta.items()
        ),
    )
