"""Data words and symbolic words.

A data word is a finite sequence of (label, value) pairs where values are
drawn from an infinite domain (non-negative integers here).  A symbolic word
replaces each value by a register operation:

    fresh  (written ``*r``)  store a globally fresh value in register r
    reuse  (written ``^r``)  read the value currently held by register r
    local  (written ``or``)  store a value distinct from all register contents

Two data words are equivalent when they differ only by a permutation of the
value domain.  ``snf`` maps every data word to the unique symbolic normal
form of its equivalence class, reusing the smallest register whose value is
dead; ``concretize`` goes back, picking the smallest unused values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NotWellFormed, UnsupportedOp, ValueAbsent


class OpKind(enum.Enum):
    FRESH = "fresh"
    REUSE = "reuse"
    LOCAL = "local"


# ASCII spellings used by the text formats, and glyphs used for DOT output.
OP_ASCII = {OpKind.FRESH: "*", OpKind.REUSE: "^", OpKind.LOCAL: "o"}
OP_GLYPH = {OpKind.FRESH: "⊛", OpKind.REUSE: "↑", OpKind.LOCAL: "⊙"}
_OP_RANK = {OpKind.FRESH: 0, OpKind.REUSE: 1, OpKind.LOCAL: 2}


@dataclass(frozen=True)
class RegisterOp:
    kind: OpKind
    register: int

    def __post_init__(self):
        if self.register < 1:
            raise ValueError(f"register index must be >= 1, got {self.register}")

    def __str__(self) -> str:
        return f"{OP_ASCII[self.kind]}{self.register}"

    @classmethod
    def fresh(cls, register: int) -> "RegisterOp":
        return cls(OpKind.FRESH, register)

    @classmethod
    def reuse(cls, register: int) -> "RegisterOp":
        return cls(OpKind.REUSE, register)

    @classmethod
    def local(cls, register: int) -> "RegisterOp":
        return cls(OpKind.LOCAL, register)


@dataclass(frozen=True)
class TransitionLabel:
    """One symbolic letter: a plain label together with a register operation."""

    label: str
    op: RegisterOp

    def __str__(self) -> str:
        return f"{self.label}:{self.op}"


# Words are plain tuples so they hash, slice and concatenate naturally.
DataLetter = tuple[str, int]
DataWord = tuple[DataLetter, ...]
SymbolicWord = tuple[TransitionLabel, ...]

EMPTY_WORD: tuple = ()


def letter_key(letter: TransitionLabel) -> tuple:
    """Total order on symbolic letters: label, then fresh < reuse < local, then register."""
    return (letter.label, _OP_RANK[letter.op.kind], letter.op.register)


def word_key(word: SymbolicWord) -> tuple:
    """Shortlex order on symbolic words."""
    return (len(word), tuple(letter_key(x) for x in word))


def symbolic_alphabet(labels, max_register: int) -> frozenset[TransitionLabel]:
    """All fresh/reuse letters over the given labels and registers 1..max_register."""
    return frozenset(
        TransitionLabel(a, RegisterOp(kind, r))
        for a in labels
        for kind in (OpKind.FRESH, OpKind.REUSE)
        for r in range(1, max_register + 1)
    )


def occurrence_bounds(word: DataWord, value: int) -> tuple[int, int]:
    """1-based positions of the first and last occurrence of a value."""
    first = last = 0
    for i, (_, d) in enumerate(word, 1):
        if d == value:
            if not first:
                first = i
            last = i
    if not first:
        raise ValueAbsent(f"value {value} does not occur in the word")
    return first, last


def _pattern(word: DataWord) -> tuple:
    # Fingerprint of the value-equality pattern: position of first occurrence.
    seen: dict[int, int] = {}
    out = []
    for i, (_, d) in enumerate(word):
        seen.setdefault(d, i)
        out.append(seen[d])
    return tuple(out)


def data_equivalent(w1: DataWord, w2: DataWord) -> bool:
    """True when the words differ only by a permutation of data values."""
    if len(w1) != len(w2):
        return False
    if any(a != b for (a, _), (b, _) in zip(w1, w2)):
        return False
    return _pattern(w1) == _pattern(w2)


def sessions(word: DataWord) -> dict[int, tuple[int, int]]:
    """Per value, the interval from its first to its last occurrence (1-based)."""
    out: dict[int, tuple[int, int]] = {}
    for i, (_, d) in enumerate(word, 1):
        first, _ = out.get(d, (i, i))
        out[d] = (first, i)
    return out


def bound(word: DataWord) -> int:
    """Largest number of sessions any single position belongs to (0 for the empty word)."""
    spans = list(sessions(word).values())
    best = 0
    for i in range(1, len(word) + 1):
        covering = sum(1 for lo, hi in spans if lo <= i <= hi)
        if covering > best:
            best = covering
    return best


def is_k_bounded(word: DataWord, k: int) -> bool:
    return bound(word) <= k


def _reject_local(word: SymbolicWord, what: str) -> None:
    for letter in word:
        if letter.op.kind is OpKind.LOCAL:
            raise UnsupportedOp(f"{what} is undefined for locally-fresh letters ({letter})")


def is_well_formed(word: SymbolicWord) -> bool:
    """Every reuse of a register must be preceded by a fresh write to it."""
    _reject_local(word, "well-formedness")
    written: set[int] = set()
    for letter in word:
        if letter.op.kind is OpKind.REUSE:
            if letter.op.register not in written:
                return False
        else:
            written.add(letter.op.register)
    return True


def symbolic_classes(word: SymbolicWord) -> list[set[int]]:
    """Partition of positions 1..n into groups that denote the same data value.

    Two positions fall together when they use the same register and no fresh
    write to that register happens in between (up to and including the later
    position).  Classes are listed in order of their first position.
    """
    _reject_local(word, "the position equivalence")
    current: dict[int, set[int]] = {}
    classes: list[set[int]] = []
    for i, letter in enumerate(word, 1):
        r = letter.op.register
        if letter.op.kind is OpKind.FRESH or r not in current:
            group: set[int] = {i}
            classes.append(group)
            current[r] = group
        else:
            current[r].add(i)
    return classes


def max_register(word: SymbolicWord) -> int:
    return max((x.op.register for x in word), default=0)


def snf(word: DataWord) -> SymbolicWord:
    """Symbolic normal form of a data word.

    A first occurrence takes a fresh write to the smallest free register; a
    later occurrence reuses the register assigned at the first occurrence.  A
    register becomes free again at the last occurrence of its value, so the
    number of registers used equals the session bound of the word.
    """
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, (_, d) in enumerate(word, 1):
        first.setdefault(d, i)
        last[d] = i

    # Free registers are `freed` plus everything >= next_new.
    freed: set[int] = set()
    next_new = 1
    assigned: dict[int, int] = {}
    out = []
    for i, (a, d) in enumerate(word, 1):
        if first[d] == i:
            r = min(freed) if freed else next_new
            assigned[d] = r
            out.append(TransitionLabel(a, RegisterOp(OpKind.FRESH, r)))
            if last[d] != i:
                # The register stays busy until the value's last occurrence.
                if freed:
                    freed.remove(r)
                else:
                    next_new = r + 1
        else:
            r = assigned[d]
            out.append(TransitionLabel(a, RegisterOp(OpKind.REUSE, r)))
            if last[d] == i:
                freed.add(r)
    return tuple(out)


def concretize(word: SymbolicWord) -> DataWord:
    """Smallest concretization of a well-formed symbolic word (values 1, 2, ...)."""
    if not is_well_formed(word):
        raise NotWellFormed(f"cannot concretize {' '.join(map(str, word)) or 'word'}: "
                            "a register is reused before being written")
    value_of_position: dict[int, int] = {}
    for number, group in enumerate(symbolic_classes(word), 1):
        for i in group:
            value_of_position[i] = number
    return tuple((letter.label, value_of_position[i]) for i, letter in enumerate(word, 1))


def is_concretization(word: DataWord, symbolic: SymbolicWord) -> bool:
    """True when the data word's labels and value-equality pattern match the symbolic word."""
    if any(x.op.kind is OpKind.LOCAL for x in symbolic):
        return False
    if not is_well_formed(symbolic):
        return False
    if len(word) != len(symbolic):
        return False
    if any(a != x.label for (a, _), x in zip(word, symbolic)):
        return False
    class_of_position: dict[int, int] = {}
    for number, group in enumerate(symbolic_classes(symbolic)):
        for i in group:
            class_of_position[i] = number
    values_to_class: dict[int, int] = {}
    for i, (_, d) in enumerate(word, 1):
        c = class_of_position[i]
        if values_to_class.setdefault(d, c) != c:
            return False
    # Distinct classes must carry distinct values.
    return len(set(values_to_class.values())) == len(values_to_class)
