from random import Random

import pytest

from helpers import dw, permute_values, random_data_word, random_session_automaton, sw
from sessauto import (
    Automaton,
    AutomatonClass,
    NotSessionAutomaton,
    RegisterOp,
    Transition,
    TransitionLabel,
    UnknownLabel,
    accepts_symbolic,
    as_symbolic_nfa,
    classify,
    from_symbolic_dfa,
    is_data_deterministic,
    is_symbolically_deterministic,
    minimize,
    determinize,
    simulate,
    validate,
)

WORD_8 = dw("req:8 req:4 ack:8 req:3 ack:4 req:8 ack:3 ack:8")
WORD_6 = dw("req:8 req:4 ack:8 req:3 ack:4 ack:3")


def test_membership_fixture_words(fig1a, fig1b):
    assert simulate(fig1a, WORD_8)
    assert not simulate(fig1b, WORD_8)
    assert simulate(fig1b, WORD_6)
    assert simulate(fig1a, WORD_6)


def test_fresh_requires_globally_new_value(fig1b):
    # value 8 is reused for a new request after its session closed: the
    # register automaton allows it, the session automaton does not
    w = dw("req:8 ack:8 req:8 ack:8")
    assert not simulate(fig1b, w)


def test_local_allows_recycled_value(fig1a):
    w = dw("req:8 ack:8 req:8 ack:8")
    assert simulate(fig1a, w)


def test_simulate_unknown_label(fig1a):
    with pytest.raises(UnknownLabel):
        simulate(fig1a, dw("zzz:1"))


def test_simulate_empty_word(fig1a, fig2b):
    assert simulate(fig1a, ())
    assert simulate(fig2b, ())


def test_membership_is_permutation_invariant():
    rng = Random(202)
    for _ in range(50):
        a = random_session_automaton(rng)
        for _ in range(10):
            w = random_data_word(rng, max_len=6, max_value=3)
            assert simulate(a, w) == simulate(a, permute_values(rng, w))


def test_classify(fig1a, fig1b, fig2b, fig3):
    assert classify(fig1a) is AutomatonClass.REGISTER
    assert classify(fig1b) is AutomatonClass.SESSION
    assert classify(fig2b) is AutomatonClass.SESSION
    assert classify(fig3) is AutomatonClass.FRESH_REGISTER


def test_classify_no_transitions():
    a = Automaton("t", frozenset({"a"}), 1, frozenset({"q0"}), "q0", frozenset({"q0"}), frozenset())
    assert classify(a) is AutomatonClass.SESSION


def test_validate_clean_fixture(fig1a, fig1b, fig2b, fig3, fig5a):
    for a in (fig1a, fig1b, fig2b, fig3, fig5a):
        assert validate(a) == []


def test_validate_diagnostics():
    a = Automaton(
        name="bad name",
        alphabet=frozenset({"a", "b c"}),
        registers=0,
        states=frozenset({"q0", "q 1"}),
        initial="nowhere",
        finals=frozenset({"ghost"}),
        transitions=frozenset(
            {
                Transition("q0", TransitionLabel("zzz", RegisterOp.fresh(1)), "q0"),
                Transition("q0", TransitionLabel("a", RegisterOp.fresh(5)), "gone"),
            }
        ),
    )
    issues = validate(a)
    prefixes = {msg.split(":")[0] for msg in issues}
    assert prefixes == {
        "BadName",
        "BadLabelToken",
        "BadStateToken",
        "RegistersNotPositive",
        "InitialNotAState",
        "FinalNotAState",
        "TransitionEndpointNotAState",
        "UnknownLabel",
        "RegisterOutOfRange",
    }


def test_validate_empty_states():
    a = Automaton("t", frozenset({"a"}), 1, frozenset(), "q0", frozenset(), frozenset())
    issues = validate(a)
    assert any(msg.startswith("NoStates") for msg in issues)


def test_determinism_predicates(fig2b, fig5a):
    # two fresh transitions with different registers from one state
    assert is_symbolically_deterministic(fig2b)
    assert not is_data_deterministic(fig2b)
    assert not is_data_deterministic(fig5a)


def test_data_deterministic_example(fig1b):
    # fig1b itself is not; from s0 two fresh ops on req race for the same value
    assert not is_data_deterministic(fig1b)
    pruned = Automaton(
        name="pruned",
        alphabet=fig1b.alphabet,
        registers=fig1b.registers,
        states=fig1b.states,
        initial=fig1b.initial,
        finals=fig1b.finals,
        transitions=frozenset(
            t for t in fig1b.transitions
            if not (t.source == "s0" and t.target == "s2")
        ),
    )
    assert is_data_deterministic(pruned)


def test_data_determinism_needs_session(fig1a):
    with pytest.raises(NotSessionAutomaton):
        is_data_deterministic(fig1a)


def test_symbolic_nondeterminism():
    x = TransitionLabel("a", RegisterOp.fresh(1))
    a = Automaton(
        "t",
        frozenset({"a"}),
        1,
        frozenset({"q0", "q1"}),
        "q0",
        frozenset({"q1"}),
        frozenset({Transition("q0", x, "q0"), Transition("q0", x, "q1")}),
    )
    assert not is_symbolically_deterministic(a)


def test_accepts_symbolic(fig5a):
    assert accepts_symbolic(fig5a, sw("a:*1 b:^1"))
    assert accepts_symbolic(fig5a, sw("a:*1 a:*2 b:^2 b:^1"))
    # reads labels literally: the ill-formed b:^1 still has a path
    assert accepts_symbolic(fig5a, sw("b:^1"))
    # but a:^1 labels no transition at all
    assert not accepts_symbolic(fig5a, sw("a:^1"))
    assert accepts_symbolic(fig5a, ())


def test_accepts_symbolic_needs_session(fig1a):
    with pytest.raises(NotSessionAutomaton):
        accepts_symbolic(fig1a, sw("req:*1"))


def test_as_symbolic_nfa_matches_accepts_symbolic(fig2b, fig5a):
    rng = Random(203)
    for a in (fig2b, fig5a):
        nfa = as_symbolic_nfa(a)
        letters = sorted(nfa.alphabet, key=str)
        for _ in range(200):
            u = tuple(rng.choice(letters) for _ in range(rng.randint(0, 6)))
            assert nfa.accepts(u) == accepts_symbolic(a, u)


def test_as_symbolic_nfa_alphabet_covers_all_ops(fig5a):
    nfa = as_symbolic_nfa(fig5a)
    # every label with every fresh/reuse op up to k, even if unused
    assert len(nfa.alphabet) == len(fig5a.alphabet) * 2 * fig5a.registers


def test_from_symbolic_dfa_round_trip(fig5a):
    dfa = minimize(determinize(as_symbolic_nfa(fig5a)))
    back = from_symbolic_dfa(dfa, "again", fig5a.alphabet, fig5a.registers)
    assert validate(back) == []
    assert classify(back) is AutomatonClass.SESSION
    rng = Random(204)
    for _ in range(100):
        w = random_data_word(rng, max_len=6, max_value=3)
        assert simulate(back, w) == simulate(fig5a, w)
