from random import Random

import pytest

from helpers import (
    dw,
    enumerate_word_classes,
    random_session_automaton,
)
from sessauto import (
    NotSessionAutomaton,
    bound,
    classify,
    complement_bounded,
    data_equivalent,
    equivalent,
    includes,
    intersect,
    is_empty,
    is_universal_bounded,
    simulate,
    union,
    validate,
)

REPS = enumerate_word_classes(("a", "b"), 4)


def lang(a):
    return frozenset(i for i, w in enumerate(REPS) if simulate(a, w))


def test_intersect_union_brute_force():
    rng = Random(401)
    for _ in range(30):
        x = random_session_automaton(rng, name="x")
        y = random_session_automaton(rng, name="y")
        lx, ly = lang(x), lang(y)
        both = intersect(x, y)
        either = union(x, y)
        assert validate(both) == []
        assert validate(either) == []
        assert lang(both) == lx & ly
        assert lang(either) == lx | ly


def test_union_keeps_larger_register_count():
    rng = Random(402)
    x = random_session_automaton(rng, registers=1, name="x")
    y = random_session_automaton(rng, registers=2, name="y")
    assert union(x, y).registers == 2
    assert intersect(x, y).registers == 1


def test_union_distinct_alphabets():
    rng = Random(403)
    x = random_session_automaton(rng, labels=("a",), name="x")
    y = random_session_automaton(rng, labels=("b",), name="y")
    u = union(x, y)
    assert u.alphabet == {"a", "b"}

    def strict_lang(a):
        out = set()
        for i, w in enumerate(REPS):
            if any(label not in a.alphabet for label, _ in w):
                continue
            if simulate(a, w):
                out.add(i)
        return frozenset(out)

    assert lang(u) == strict_lang(x) | strict_lang(y)


def test_complement_bounded_brute_force():
    rng = Random(404)
    for _ in range(25):
        a = random_session_automaton(rng)
        comp = complement_bounded(a)
        la = lang(a)
        lc = lang(comp)
        for i, w in enumerate(REPS):
            if bound(w) <= a.registers:
                assert (i in lc) == (i not in la)
            else:
                assert i not in lc


def test_complement_is_involution_on_bounded_words():
    rng = Random(405)
    for _ in range(10):
        a = random_session_automaton(rng)
        la = lang(a)
        twice = complement_bounded(complement_bounded(a))
        bounded = frozenset(
            i for i, w in enumerate(REPS) if bound(w) <= a.registers
        )
        assert lang(twice) == la & bounded


def test_includes_and_equivalent_brute_force():
    rng = Random(406)
    agree = 0
    for _ in range(40):
        x = random_session_automaton(rng, name="x")
        y = random_session_automaton(rng, name="y")
        lx, ly = lang(x), lang(y)
        w = includes(x, y)
        if w is None:
            assert lx <= ly
            agree += 1
        else:
            assert simulate(x, w) and not simulate(y, w)
        w = equivalent(x, y)
        if w is None:
            assert lx == ly
        else:
            assert simulate(x, w) != simulate(y, w)
    assert agree > 3


def test_equivalent_reflexive_and_invariant():
    rng = Random(407)
    for _ in range(15):
        a = random_session_automaton(rng)
        assert equivalent(a, a) is None
        assert includes(a, a) is None


def test_union_includes_both_parts():
    rng = Random(408)
    for _ in range(15):
        x = random_session_automaton(rng, name="x")
        y = random_session_automaton(rng, name="y")
        u = union(x, y)
        assert includes(x, u) is None
        assert includes(y, u) is None
        both = intersect(x, y)
        assert includes(both, x) is None
        assert includes(both, y) is None


def test_is_empty_brute_force():
    rng = Random(409)
    seen_empty = 0
    for _ in range(40):
        a = random_session_automaton(rng)
        w = is_empty(a)
        if w is None:
            seen_empty += 1
            assert lang(a) == frozenset()
        else:
            assert simulate(a, w)
    assert seen_empty > 3


def test_is_empty_counts_only_data_acceptance(fig5a):
    # a final state reachable only through ill-formed symbolic words is
    # still empty as a data language
    a = fig5a.__class__(
        name="illformed",
        alphabet=fig5a.alphabet,
        registers=2,
        states=frozenset({"q0", "q1"}),
        initial="q0",
        finals=frozenset({"q1"}),
        transitions=frozenset(
            {
                t.__class__("q0", l, "q1")
                for t in fig5a.transitions
                for l in [t.label]
                if l.op.kind.value == "reuse"
            }
        ),
    )
    assert is_empty(a) is None


def test_universality(fig2b, fig5a):
    # fig2b accepts every 2-bounded word over {a}
    assert is_universal_bounded(fig2b, 2) is None
    assert is_universal_bounded(fig2b, 1) is None
    # but not every 3-bounded word; the witness must be exactly 3-bounded
    w = is_universal_bounded(fig2b, 3)
    assert w is not None
    assert bound(w) == 3
    assert not simulate(fig2b, w)
    assert data_equivalent(w, dw("a:1 a:2 a:3 a:1 a:2"))
    # fig5a misses b-words
    w = is_universal_bounded(fig5a, 1)
    assert w is not None
    assert not simulate(fig5a, w)


def test_universality_rejects_bad_bound(fig2b):
    with pytest.raises(ValueError):
        is_universal_bounded(fig2b, 0)


def test_ops_reject_non_session(fig1a, fig2b):
    for call in (
        lambda: intersect(fig1a, fig2b),
        lambda: union(fig2b, fig1a),
        lambda: complement_bounded(fig1a),
        lambda: includes(fig1a, fig2b),
        lambda: equivalent(fig2b, fig1a),
        lambda: is_empty(fig1a),
        lambda: is_universal_bounded(fig1a, 2),
    ):
        with pytest.raises(NotSessionAutomaton):
            call()


def test_results_are_session_automata():
    rng = Random(410)
    x = random_session_automaton(rng, name="x")
    y = random_session_automaton(rng, name="y")
    for out in (intersect(x, y), union(x, y), complement_bounded(x)):
        assert classify(out).value == "session"
        assert validate(out) == []
