"""Canonical forms of session automata.

Every data language of a session automaton has one symbolic language made of
normal forms only: the set snf(L).  The canonical automaton is the minimal
DFA of that set.  It is computed in three steps:

    1. nf_automaton(k, labels): the DFA of all normal forms over k registers,
    2. tilde(A): an NFA accepting every well-formed symbolic word that shares
       its concretizations with some word A accepts (register relabeling),
    3. product of the two, determinized and minimized.

Two session automata accept the same data words exactly when their canonical
forms coincide, which turns the boolean and decision operations into plain
DFA constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .automata import Automaton, as_symbolic_nfa
from .symbolic import SymbolicDfa, SymbolicNfa, determinize, minimize, product
from .words import OpKind, RegisterOp, TransitionLabel


@dataclass(frozen=True)
class NfState:
    """State of the normal-form DFA.

    ``top`` is the greatest register initialized so far; ``promised`` are the
    registers whose current value must be reused before the register may be
    written again (a fresh write to r promises every register below r).
    """

    top: int
    promised: frozenset[int]

    def __str__(self) -> str:
        inner = ",".join(str(r) for r in sorted(self.promised))
        return f"({self.top},{{{inner}}})"


@dataclass(frozen=True)
class PartialInjection:
    """Partial injective map between register indices, as sorted pairs."""

    pairs: tuple[tuple[int, int], ...] = ()

    def get(self, r: int) -> int | None:
        for a, b in self.pairs:
            if a == r:
                return b
        return None

    def rewire(self, source: int, target: int) -> "PartialInjection":
        """Map source to target, dropping whatever previously used either end."""
        kept = tuple(
            (a, b) for a, b in self.pairs if a != source and b != target
        )
        return PartialInjection(tuple(sorted(kept + ((source, target),))))

    def __str__(self) -> str:
        return "{" + ",".join(f"{a}>{b}" for a, b in self.pairs) + "}"


@lru_cache(maxsize=None)
def nf_automaton(registers: int, labels: frozenset[str]) -> SymbolicDfa:
    """DFA of all symbolic normal forms over the given registers and labels.

    From state (top, promised):
      fresh r  allowed when r <= top+1 and r is not promised; moves to
               (max(top, r), promised + all registers below r)
      reuse r  allowed when r <= top; moves to (top, promised - {r})
    Accepting states are those without pending promises.
    """
    if registers < 1:
        raise ValueError("the normal-form automaton needs at least one register")
    start = NfState(0, frozenset())
    names = {start: str(start)}
    order = [start]
    delta: dict[tuple[str, TransitionLabel], str] = {}
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        successors: list[tuple[RegisterOp, NfState]] = []
        for r in range(1, registers + 1):
            if r - 1 <= s.top and r not in s.promised:
                successors.append((
                    RegisterOp(OpKind.FRESH, r),
                    NfState(max(s.top, r), s.promised | frozenset(range(1, r))),
                ))
            if r <= s.top:
                successors.append((
                    RegisterOp(OpKind.REUSE, r),
                    NfState(s.top, s.promised - {r}),
                ))
        for op, target in successors:
            if target not in names:
                names[target] = str(target)
                order.append(target)
            for a in labels:
                delta[(names[s], TransitionLabel(a, op))] = names[target]
    return SymbolicDfa(
        alphabet=frozenset(
            TransitionLabel(a, RegisterOp(kind, r))
            for a in labels
            for kind in (OpKind.FRESH, OpKind.REUSE)
            for r in range(1, registers + 1)
        ),
        states=frozenset(names.values()),
        initial=names[start],
        finals=frozenset(names[s] for s in order if not s.promised),
        delta=delta,
        registers=registers,
    )


@lru_cache(maxsize=None)
def wf_automaton(registers: int, labels: frozenset[str]) -> SymbolicDfa:
    """DFA of all well-formed symbolic words: reuse only after a fresh write."""
    if registers < 1:
        raise ValueError("the well-formedness automaton needs at least one register")
    start: frozenset[int] = frozenset()
    names = {start: "w"}
    order = [start]
    delta: dict[tuple[str, TransitionLabel], str] = {}
    i = 0
    while i < len(order):
        written = order[i]
        i += 1
        for r in range(1, registers + 1):
            moves = [(RegisterOp(OpKind.FRESH, r), written | {r})]
            if r in written:
                moves.append((RegisterOp(OpKind.REUSE, r), written))
            for op, target in moves:
                if target not in names:
                    names[target] = "w" + "_".join(str(x) for x in sorted(target))
                    order.append(target)
                for a in labels:
                    delta[(names[written], TransitionLabel(a, op))] = names[target]
    return SymbolicDfa(
        alphabet=frozenset(
            TransitionLabel(a, RegisterOp(kind, r))
            for a in labels
            for kind in (OpKind.FRESH, OpKind.REUSE)
            for r in range(1, registers + 1)
        ),
        states=frozenset(names.values()),
        initial=names[start],
        finals=frozenset(names.values()),
        delta=delta,
        registers=registers,
    )


def tilde(a: Automaton) -> SymbolicNfa:
    """Register-relabeling closure of a session automaton's symbolic language.

    The result accepts exactly the well-formed words that denote the same
    data words as some word in L_symb(a).  States pair a state of ``a`` with
    a partial injection telling, for each register of ``a``, which output
    register currently holds the same value.  A fresh write may pick any
    output register; whoever used that output register before loses it.
    """
    k = a.registers
    nfa = as_symbolic_nfa(a)  # validates the session precondition
    start = (a.initial, PartialInjection())
    names = {start: f"{a.initial}|{start[1]}"}
    order = [start]
    transitions: set[tuple[str, TransitionLabel, str]] = set()
    i = 0
    while i < len(order):
        state, inj = order[i]
        i += 1
        src = names[(state, inj)]
        for t in a.transitions:
            if t.source != state:
                continue
            op = t.label.op
            if op.kind is OpKind.REUSE:
                mapped = inj.get(op.register)
                if mapped is None:
                    continue
                moves = [(TransitionLabel(t.label.label, RegisterOp(OpKind.REUSE, mapped)), inj)]
            else:
                moves = [
                    (
                        TransitionLabel(t.label.label, RegisterOp(OpKind.FRESH, r2)),
                        inj.rewire(op.register, r2),
                    )
                    for r2 in range(1, k + 1)
                ]
            for letter, inj2 in moves:
                key = (t.target, inj2)
                if key not in names:
                    names[key] = f"{t.target}|{inj2}"
                    order.append(key)
                transitions.add((src, letter, names[key]))
    return SymbolicNfa(
        alphabet=nfa.alphabet,
        states=frozenset(names.values()),
        initials=frozenset({names[start]}),
        finals=frozenset(names[(s, inj)] for (s, inj) in order if s in a.finals),
        transitions=frozenset(transitions),
        registers=k,
    )


@lru_cache(maxsize=256)
def canonicalize(a: Automaton) -> SymbolicDfa:
    """Minimal DFA of snf(L(a)), the canonical form of the automaton's language."""
    nf = nf_automaton(a.registers, a.alphabet)
    out = minimize(determinize(product(nf, tilde(a))))
    out.registers = a.registers
    return out
