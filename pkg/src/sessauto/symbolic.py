"""Finite automata over symbolic letters.

These are ordinary NFAs/DFAs whose alphabet consists of TransitionLabel
values.  They carry the symbolic-language side of every construction: the
data-word semantics never appears here.  States are strings; every operation
that synthesizes states renumbers them canonically (breadth-first from the
initial state, expanding letters in their total order), which makes minimal
automata comparable by plain structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import SymbolicWord, TransitionLabel, letter_key, word_key


@dataclass
class SymbolicNfa:
    alphabet: frozenset[TransitionLabel]
    states: frozenset[str]
    initials: frozenset[str]
    finals: frozenset[str]
    transitions: frozenset[tuple[str, TransitionLabel, str]]
    registers: int = 0

    def delta(self) -> dict[tuple[str, TransitionLabel], set[str]]:
        if not hasattr(self, "_delta"):
            table: dict[tuple[str, TransitionLabel], set[str]] = {}
            for src, letter, dst in self.transitions:
                table.setdefault((src, letter), set()).add(dst)
            self._delta = table
        return self._delta

    def accepts(self, word: SymbolicWord) -> bool:
        frontier = set(self.initials)
        delta = self.delta()
        for letter in word:
            frontier = {t for s in frontier for t in delta.get((s, letter), ())}
            if not frontier:
                return False
        return bool(frontier & self.finals)


@dataclass
class SymbolicDfa:
    alphabet: frozenset[TransitionLabel]
    states: frozenset[str]
    initial: str
    finals: frozenset[str]
    delta: dict[tuple[str, TransitionLabel], str] = field(default_factory=dict)
    complete: bool = False
    registers: int = 0

    def accepts(self, word: SymbolicWord) -> bool:
        state = self.initial
        for letter in word:
            nxt = self.delta.get((state, letter))
            if nxt is None:
                return False
            state = nxt
        return state in self.finals


def as_nfa(fa: SymbolicNfa | SymbolicDfa) -> SymbolicNfa:
    if isinstance(fa, SymbolicNfa):
        return fa
    return SymbolicNfa(
        alphabet=fa.alphabet,
        states=fa.states,
        initials=frozenset({fa.initial}),
        finals=fa.finals,
        transitions=frozenset((s, x, t) for (s, x), t in fa.delta.items()),
        registers=fa.registers,
    )


def _sorted_letters(alphabet) -> list[TransitionLabel]:
    return sorted(alphabet, key=letter_key)


def renumber(dfa: SymbolicDfa) -> SymbolicDfa:
    """Canonical state numbering: BFS from the initial state, letters in order.

    Unreachable states are dropped.  Two minimal DFAs of the same language
    come out structurally equal.
    """
    letters = _sorted_letters(dfa.alphabet)
    names = {dfa.initial: "0"}
    order = [dfa.initial]
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for x in letters:
            t = dfa.delta.get((s, x))
            if t is not None and t not in names:
                names[t] = str(len(order))
                order.append(t)
    delta = {
        (names[s], x): names[t]
        for (s, x), t in dfa.delta.items()
        if s in names and t in names
    }
    return SymbolicDfa(
        alphabet=dfa.alphabet,
        states=frozenset(names.values()),
        initial="0",
        finals=frozenset(names[s] for s in dfa.finals if s in names),
        delta=delta,
        complete=dfa.complete,
        registers=dfa.registers,
    )


def isomorphic(d1: SymbolicDfa, d2: SymbolicDfa) -> bool:
    """Structural equality up to state names (trim both sides first via renumber)."""
    a, b = renumber(d1), renumber(d2)
    return (
        a.states == b.states
        and a.finals == b.finals
        and a.delta == b.delta
    )


def determinize(nfa: SymbolicNfa) -> SymbolicDfa:
    """Subset construction, reachable part only, canonically numbered."""
    letters = _sorted_letters(nfa.alphabet)
    delta = nfa.delta()
    start = frozenset(nfa.initials)
    names: dict[frozenset, str] = {start: "0"}
    order = [start]
    out: dict[tuple[str, TransitionLabel], str] = {}
    i = 0
    while i < len(order):
        subset = order[i]
        i += 1
        for x in letters:
            target = frozenset(t for s in subset for t in delta.get((s, x), ()))
            if not target:
                continue
            if target not in names:
                names[target] = str(len(order))
                order.append(target)
            out[(names[subset], x)] = names[target]
    finals = frozenset(names[s] for s in order if s & nfa.finals)
    return SymbolicDfa(
        alphabet=nfa.alphabet,
        states=frozenset(names.values()),
        initial="0",
        finals=finals,
        delta=out,
        complete=False,
        registers=nfa.registers,
    )


def _complete(dfa: SymbolicDfa, alphabet: frozenset[TransitionLabel]) -> tuple[SymbolicDfa, str]:
    """Total version of the DFA over the given alphabet; returns it with the sink name."""
    sink = "sink"
    while sink in dfa.states:
        sink = "_" + sink
    delta = dict(dfa.delta)
    for s in list(dfa.states) + [sink]:
        for x in alphabet:
            delta.setdefault((s, x), sink)
    return (
        SymbolicDfa(
            alphabet=alphabet,
            states=dfa.states | {sink},
            initial=dfa.initial,
            finals=dfa.finals,
            delta=delta,
            complete=True,
            registers=dfa.registers,
        ),
        sink,
    )


def complement(dfa: SymbolicDfa, alphabet=None) -> SymbolicDfa:
    """Complete over the union of the DFA's alphabet and the given one, swap finals."""
    alpha = dfa.alphabet if alphabet is None else dfa.alphabet | frozenset(alphabet)
    total, _ = _complete(
        SymbolicDfa(alpha, dfa.states, dfa.initial, dfa.finals, dict(dfa.delta),
                    registers=dfa.registers),
        alpha,
    )
    return SymbolicDfa(
        alphabet=alpha,
        states=total.states,
        initial=total.initial,
        finals=total.states - total.finals,
        delta=total.delta,
        complete=True,
        registers=total.registers,
    )


def minimize(dfa: SymbolicDfa) -> SymbolicDfa:
    """Minimal trim partial DFA for the language, canonically numbered.

    Moore partition refinement on the completed automaton, then dead states
    (those that cannot reach a final state) are removed again.  The initial
    state survives even when the language is empty, because a DFA needs one.
    """
    total, _ = _complete(dfa, dfa.alphabet)
    letters = _sorted_letters(total.alphabet)

    block: dict[str, int] = {s: (1 if s in total.finals else 0) for s in total.states}
    while True:
        signature = {
            s: (block[s], tuple(block[total.delta[(s, x)]] for x in letters))
            for s in total.states
        }
        renamed: dict[tuple, int] = {}
        for s in sorted(total.states):
            renamed.setdefault(signature[s], len(renamed))
        new_block = {s: renamed[signature[s]] for s in total.states}
        if new_block == block:
            break
        block = new_block

    # Quotient automaton on blocks.
    q_initial = block[total.initial]
    q_finals = {block[s] for s in total.finals}
    q_delta = {
        (block[s], x): block[total.delta[(s, x)]]
        for s in total.states
        for x in letters
    }

    # Keep blocks that are reachable from the initial and can reach a final.
    reachable = {q_initial}
    stack = [q_initial]
    while stack:
        b = stack.pop()
        for x in letters:
            t = q_delta[(b, x)]
            if t not in reachable:
                reachable.add(t)
                stack.append(t)
    alive = set(q_finals)
    changed = True
    while changed:
        changed = False
        for (b, _), t in q_delta.items():
            if t in alive and b not in alive:
                alive.add(b)
                changed = True
    keep = (reachable & alive) | {q_initial}

    delta = {
        (str(b), x): str(t)
        for (b, x), t in q_delta.items()
        if b in keep and t in keep and t in alive
    }
    out = SymbolicDfa(
        alphabet=dfa.alphabet,
        states=frozenset(str(b) for b in keep),
        initial=str(q_initial),
        finals=frozenset(str(b) for b in q_finals if b in keep),
        delta=delta,
        registers=dfa.registers,
    )
    out = renumber(out)
    out.complete = all((s, x) in out.delta for s in out.states for x in letters)
    return out


def product(x: SymbolicNfa | SymbolicDfa, y: SymbolicNfa | SymbolicDfa) -> SymbolicNfa:
    """Intersection product, reachable pairs only."""
    nx, ny = as_nfa(x), as_nfa(y)
    letters = _sorted_letters(nx.alphabet | ny.alphabet)
    dx, dy = nx.delta(), ny.delta()
    names: dict[tuple[str, str], str] = {}
    order: list[tuple[str, str]] = []
    for s in sorted(nx.initials):
        for t in sorted(ny.initials):
            names[(s, t)] = f"p{len(order)}"
            order.append((s, t))
    initials = frozenset(names.values())
    transitions = set()
    i = 0
    while i < len(order):
        s, t = order[i]
        i += 1
        for letter in letters:
            for s2 in sorted(dx.get((s, letter), ())):
                for t2 in sorted(dy.get((t, letter), ())):
                    pair = (s2, t2)
                    if pair not in names:
                        names[pair] = f"p{len(order)}"
                        order.append(pair)
                    transitions.add((names[(s, t)], letter, names[pair]))
    finals = frozenset(
        names[(s, t)] for (s, t) in order if s in nx.finals and t in ny.finals
    )
    return SymbolicNfa(
        alphabet=nx.alphabet | ny.alphabet,
        states=frozenset(names.values()),
        initials=initials,
        finals=finals,
        transitions=frozenset(transitions),
        registers=max(nx.registers, ny.registers),
    )


def nfa_union(x: SymbolicNfa | SymbolicDfa, y: SymbolicNfa | SymbolicDfa) -> SymbolicNfa:
    """Disjoint union; accepts the union of both languages."""
    nx, ny = as_nfa(x), as_nfa(y)
    left = {s: f"l_{s}" for s in nx.states}
    right = {s: f"r_{s}" for s in ny.states}
    return SymbolicNfa(
        alphabet=nx.alphabet | ny.alphabet,
        states=frozenset(left.values()) | frozenset(right.values()),
        initials=frozenset(left[s] for s in nx.initials)
        | frozenset(right[s] for s in ny.initials),
        finals=frozenset(left[s] for s in nx.finals)
        | frozenset(right[s] for s in ny.finals),
        transitions=frozenset(
            (left[s], a, left[t]) for s, a, t in nx.transitions
        )
        | frozenset((right[s], a, right[t]) for s, a, t in ny.transitions),
        registers=max(nx.registers, ny.registers),
    )


def shortest_accepted(fa: SymbolicNfa | SymbolicDfa) -> SymbolicWord | None:
    """Shortest accepted word; ties broken by the letter order, None if empty.

    Plain BFS: states are discovered in (length, lexicographic) order of their
    access words, so the first final state found carries the wanted word.
    """
    nfa = as_nfa(fa)
    letters = _sorted_letters(nfa.alphabet)
    delta = nfa.delta()
    seen: dict[str, SymbolicWord] = {}
    queue: list[str] = []
    for s in sorted(nfa.initials):
        if s not in seen:
            seen[s] = ()
            queue.append(s)
    for s in queue:
        if s in nfa.finals:
            return seen[s]
    i = 0
    while i < len(queue):
        s = queue[i]
        i += 1
        for x in letters:
            for t in sorted(delta.get((s, x), ())):
                if t not in seen:
                    seen[t] = seen[s] + (x,)
                    if t in nfa.finals:
                        return seen[t]
                    queue.append(t)
    return None


def symbolic_inclusion(x, y) -> SymbolicWord | None:
    """Shortest witness of L(x) \\ L(y), or None when L(x) is included in L(y)."""
    alpha = as_nfa(x).alphabet | as_nfa(y).alphabet
    outside = complement(determinize(as_nfa(y)), alpha)
    return shortest_accepted(product(x, outside))


def symbolic_equivalence(x, y) -> SymbolicWord | None:
    """Shortest witness in the symmetric difference, or None when equivalent."""
    witnesses = [w for w in (symbolic_inclusion(x, y), symbolic_inclusion(y, x))
                 if w is not None]
    if not witnesses:
        return None
    return min(witnesses, key=word_key)
