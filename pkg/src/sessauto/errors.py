"""Exception types shared across the package."""


class SessautoError(Exception):
    """Base class for all library errors."""


class ValueAbsent(SessautoError):
    """A data value does not occur in the word."""


class UnsupportedOp(SessautoError):
    """A locally-fresh operation appeared where only fresh/reuse make sense."""


class NotWellFormed(SessautoError):
    """A reuse operation reads a register that was never written."""


class NotSessionAutomaton(SessautoError):
    """The operation is only defined for session automata."""


class UnknownLabel(SessautoError):
    """A word uses a label outside the automaton's alphabet."""


class InvalidAutomaton(SessautoError):
    """Construction or parsing produced an automaton that fails validation."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class ParseError(SessautoError):
    """Syntax error in a word or automaton text, with a 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class NotClosed(SessautoError):
    """A hypothesis was requested from an observation table that is not closed."""


class TeacherInconsistent(SessautoError):
    """The teacher's answers contradict each other."""


class NoBreakpoint(TeacherInconsistent):
    """A counterexample did not yield a break-point (inconsistent teacher)."""


class QueryBudgetExceeded(SessautoError):
    """The learner hit its configured query cap."""
