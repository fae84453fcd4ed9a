"""Active learning of session automata from membership and equivalence queries.

The learner builds the canonical automaton of an unknown data language using
an observation table over symbolic letters.  Membership of a symbolic word is
derived from data-word membership: words that are not in normal form are
rejected without asking the teacher (no data word has them as its normal
form), everything else is concretized and sent on.  Counterexamples are data
words; their normal forms are folded into the table through a binary search
for a break-point, which adds one distinguishing column per counterexample.
A counterexample may also reveal that more registers are needed, in which
case the symbolic alphabet grows instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Automaton, Transition, as_symbolic_nfa
from .canonical import canonicalize, nf_automaton
from .errors import (
    NoBreakpoint,
    NotClosed,
    QueryBudgetExceeded,
    TeacherInconsistent,
    UnknownLabel,
)
from .formats import format_data_word, format_symbolic_word
from .symbolic import complement, product, shortest_accepted, symbolic_equivalence
from .words import (
    DataWord,
    SymbolicWord,
    TransitionLabel,
    concretize,
    letter_key,
    max_register,
    snf,
    symbolic_alphabet,
    word_key,
)


class Teacher:
    """Answers membership and equivalence queries about an unknown language."""

    def membership(self, word: DataWord) -> bool:
        raise NotImplementedError

    def equivalence(self, hypothesis: Automaton) -> DataWord | None:
        """None when the hypothesis is correct, else a misclassified data word."""
        raise NotImplementedError


class ReferenceTeacher(Teacher):
    """Perfect teacher backed by a known target automaton."""

    def __init__(self, target: Automaton):
        self.target = target
        self._canonical = canonicalize(target)

    def membership(self, word: DataWord) -> bool:
        return self._canonical.accepts(snf(word))

    def equivalence(self, hypothesis: Automaton) -> DataWord | None:
        witness = symbolic_equivalence(canonicalize(hypothesis), self._canonical)
        return None if witness is None else concretize(witness)


class ScriptedTeacher(ReferenceTeacher):
    """Replays a fixed list of counterexamples, for reproducing known runs.

    Once the script is exhausted the hypothesis is checked against the
    target; a still-wrong hypothesis at that point means the script was too
    short, which is reported as an inconsistent teacher.
    """

    def __init__(self, target: Automaton, counterexamples):
        super().__init__(target)
        self._script = list(counterexamples)

    def equivalence(self, hypothesis: Automaton) -> DataWord | None:
        if self._script:
            return self._script.pop(0)
        witness = super().equivalence(hypothesis)
        if witness is not None:
            raise TeacherInconsistent(
                "counterexample script exhausted but the hypothesis is still wrong "
                f"(e.g. on {format_data_word(witness)})"
            )
        return None


def reference_teacher(target: Automaton) -> Teacher:
    return ReferenceTeacher(target)


def scripted_teacher(target: Automaton, counterexamples) -> Teacher:
    return ScriptedTeacher(target, counterexamples)


@dataclass
class TraceEvent:
    event: str
    detail: str
    k: int
    upper_rows: int
    columns: int


class MembershipOracle:
    """Memoized symbolic membership on top of a data-word teacher.

    Only normal forms reach the teacher; every other word is a definite
    non-member of any canonical symbolic language.
    """

    def __init__(self, teacher: Teacher, labels: frozenset[str], budget: int | None = None):
        self.teacher = teacher
        self.labels = labels
        self.budget = budget
        self.memo: dict[SymbolicWord, bool] = {}
        self.teacher_queries = 0
        self.equivalence_queries = 0
        self.events: list[TraceEvent] | None = None
        self._state = (1, 1, 1)  # (k, upper_rows, columns) for event stamping

    def stamp(self, k: int, upper_rows: int, columns: int) -> None:
        self._state = (k, upper_rows, columns)

    def _emit(self, event: str, detail: str) -> None:
        if self.events is not None:
            k, upper, cols = self._state
            self.events.append(TraceEvent(event, detail, k, upper, cols))

    def _charge(self) -> None:
        if self.budget is not None:
            spent = len(self.memo) + self.equivalence_queries
            if spent >= self.budget:
                raise QueryBudgetExceeded(f"query budget of {self.budget} exhausted")

    def _is_normal_form(self, word: SymbolicWord) -> bool:
        if not word:
            return True
        for letter in word:
            if letter.label not in self.labels:
                raise UnknownLabel(f"label {letter.label!r} is outside the learning alphabet")
        return nf_automaton(max_register(word), self.labels).accepts(word)

    def __call__(self, word: SymbolicWord) -> bool:
        if word in self.memo:
            return self.memo[word]
        self._charge()
        if self._is_normal_form(word):
            answer = self.teacher.membership(concretize(word))
            self.teacher_queries += 1
        else:
            answer = False
        self.memo[word] = answer
        self._emit("MembershipQuery", f"{format_symbolic_word(word)} -> {'+' if answer else '-'}")
        return answer


class ObservationTable:
    """Observation table over symbolic letters.

    ``upper`` is prefix-closed and its rows stay pairwise distinct; the lower
    part consists of all one-letter extensions of upper words.  Rows are read
    through the oracle, which memoizes every cell.
    """

    def __init__(self, labels: frozenset[str], registers: int = 1):
        self.labels = labels
        self.registers = registers
        self.upper: list[SymbolicWord] = [()]
        self.columns: list[SymbolicWord] = [()]

    def letters(self) -> list[TransitionLabel]:
        return sorted(symbolic_alphabet(self.labels, self.registers), key=letter_key)

    def row(self, word: SymbolicWord, oracle: MembershipOracle) -> tuple[bool, ...]:
        return tuple(oracle(word + v) for v in self.columns)

    def _lower_words(self):
        upper = set(self.upper)
        for u in self.upper:
            for x in self.letters():
                if u + (x,) not in upper:
                    yield u + (x,)

    def unmatched(self, oracle: MembershipOracle) -> list[SymbolicWord]:
        """Lower words whose row matches no upper row."""
        upper_rows = {self.row(u, oracle) for u in self.upper}
        return [w for w in self._lower_words() if self.row(w, oracle) not in upper_rows]

    def is_closed(self, oracle: MembershipOracle) -> bool:
        return not self.unmatched(oracle)

    def close(self, oracle: MembershipOracle) -> list[SymbolicWord]:
        """Promote unmatched lower rows until closed; returns the promoted words.

        Among several candidates the shortlex-greatest is promoted, which is
        what keeps replayed runs stable.
        """
        promoted = []
        while True:
            candidates = self.unmatched(oracle)
            if not candidates:
                return promoted
            chosen = max(candidates, key=word_key)
            self.upper.append(chosen)
            promoted.append(chosen)

    def extend_alphabet(self, registers: int) -> None:
        if registers < self.registers:
            raise ValueError("the symbolic alphabet never shrinks")
        self.registers = registers

    def add_column(self, suffix: SymbolicWord) -> None:
        if suffix in self.columns:
            raise TeacherInconsistent(
                f"distinguishing word {format_symbolic_word(suffix)} is already a column"
            )
        self.columns.append(suffix)

    def successor(self, u: SymbolicWord, x: TransitionLabel, oracle: MembershipOracle) -> SymbolicWord:
        """The upper word whose row equals row(u + x); defined when closed."""
        target = self.row(u + (x,), oracle)
        for candidate in self.upper:
            if self.row(candidate, oracle) == target:
                return candidate
        raise NotClosed(f"no upper row matches {format_symbolic_word(u + (x,))}")

    def build_hypothesis(self, oracle: MembershipOracle, name: str = "hypothesis") -> Automaton:
        """Complete symbolically deterministic session automaton of the table."""
        rows = [self.row(u, oracle) for u in self.upper]
        if len(set(rows)) != len(rows):
            raise TeacherInconsistent("upper rows are not pairwise distinct")
        index = {u: i for i, u in enumerate(self.upper)}
        by_row = {row: u for row, u in zip(rows, self.upper)}
        transitions = set()
        for u in self.upper:
            for x in self.letters():
                target_row = self.row(u + (x,), oracle)
                if target_row not in by_row:
                    raise NotClosed(
                        f"row of {format_symbolic_word(u + (x,))} matches no upper row"
                    )
                transitions.add(
                    Transition(f"__u{index[u]}", x, f"__u{index[by_row[target_row]]}")
                )
        finals = frozenset(
            f"__u{index[u]}" for u in self.upper if oracle(u)
        )
        return Automaton(
            name=name,
            alphabet=frozenset(self.labels),
            registers=self.registers,
            states=frozenset(f"__u{i}" for i in range(len(self.upper))),
            initial="__u0",
            finals=finals,
            transitions=frozenset(transitions),
        )


def nf_violation_witness(hypothesis: Automaton) -> SymbolicWord | None:
    """Shortest accepted symbolic word that is not a normal form, if any."""
    alpha = symbolic_alphabet(hypothesis.alphabet, hypothesis.registers)
    outside = complement(nf_automaton(hypothesis.registers, frozenset(hypothesis.alphabet)), alpha)
    return shortest_accepted(product(as_symbolic_nfa(hypothesis), outside))


def find_breakpoint(
    table: ObservationTable,
    z: SymbolicWord,
    oracle: MembershipOracle,
) -> SymbolicWord | None:
    """Binary search for the distinguishing suffix of a counterexample.

    g(i) asks for the word that follows the hypothesis for i-1 letters, jumps
    to the reached state's access word, and appends the rest of z.  g flips
    between 1 and m+1 on a genuine counterexample; the flip position yields a
    suffix that splits two currently equal rows.  Returns None when g does
    not flip (the counterexample does not disagree with this hypothesis).
    """
    if not z:
        return None
    access = [()]
    for letter in z:
        access.append(table.successor(access[-1], letter, oracle))

    def g(i: int) -> bool:
        return oracle(access[i - 1] + z[i - 1 :])

    lo, hi = 1, len(z) + 1
    if g(lo) == g(hi):
        return None
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if g(mid) == g(lo):
            lo = mid
        else:
            hi = mid
    return z[lo:]


def process_counterexample(
    table: ObservationTable,
    z: SymbolicWord,
    oracle: MembershipOracle,
) -> tuple[bool, SymbolicWord | None]:
    """Fold one counterexample (already in normal form) into the table.

    Returns (alphabet_extended, added_column).  When the word needs more
    registers than the table knows, the alphabet grows first; the break-point
    search then only runs if the table is still closed, per the main loop's
    contract.
    """
    extended = False
    needed = max_register(z)
    if needed > table.registers:
        table.extend_alphabet(needed)
        extended = True
    if not table.is_closed(oracle):
        return extended, None
    suffix = find_breakpoint(table, z, oracle)
    if suffix is None:
        if extended:
            # The extension changed the hypothesis out from under z; harmless.
            return extended, None
        raise NoBreakpoint(
            f"counterexample {format_symbolic_word(z)} does not distinguish anything"
        )
    table.add_column(suffix)
    return extended, suffix


class Learner:
    """Drives the whole learning loop; keeps the table around for inspection."""

    def __init__(self, teacher: Teacher, labels, max_queries: int | None = 100_000):
        self.teacher = teacher
        self.labels = frozenset(labels)
        if not self.labels:
            raise ValueError("learning needs a non-empty label alphabet")
        self.oracle = MembershipOracle(teacher, self.labels, max_queries)
        self.table = ObservationTable(self.labels)
        self.trace: list[TraceEvent] = []
        self.oracle.events = self.trace

    def _emit(self, event: str, detail: str) -> None:
        self.trace.append(
            TraceEvent(event, detail, self.table.registers, len(self.table.upper),
                       len(self.table.columns))
        )

    def _stamp(self) -> None:
        self.oracle.stamp(self.table.registers, len(self.table.upper), len(self.table.columns))

    def run(self) -> Automaton:
        table, oracle = self.table, self.oracle
        while True:
            self._stamp()
            table.close(oracle)
            self._stamp()
            self._emit(
                "TableClosed",
                "upper=[" + ", ".join(format_symbolic_word(u) for u in table.upper)
                + "] columns=[" + ", ".join(format_symbolic_word(v) for v in table.columns) + "]",
            )
            hypothesis = table.build_hypothesis(oracle)
            z = nf_violation_witness(hypothesis)
            if z is not None:
                self.oracle.equivalence_queries += 1
                self._emit("NfViolation", format_symbolic_word(z))
            else:
                self.oracle.equivalence_queries += 1
                counterexample = self.teacher.equivalence(hypothesis)
                if counterexample is None:
                    self._emit("EquivalenceQuery", "equivalent")
                    return hypothesis
                self._emit("EquivalenceQuery", format_data_word(counterexample))
                z = snf(counterexample)
                if not z:
                    raise TeacherInconsistent("the empty word cannot be a counterexample")
            before = table.registers
            extended, suffix = process_counterexample(table, z, oracle)
            if extended:
                self._emit("AlphabetExtended", f"registers {before} -> {table.registers}")
            if suffix is not None:
                self._emit("CounterexampleProcessed", format_symbolic_word(suffix))


def learn(
    teacher: Teacher,
    labels,
    max_queries: int | None = 100_000,
) -> tuple[Automaton, list[TraceEvent]]:
    """Learn the canonical session automaton of the teacher's language."""
    driver = Learner(teacher, labels, max_queries)
    automaton = driver.run()
    return automaton, driver.trace
