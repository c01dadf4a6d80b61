import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_lassos, brute_difference, oracle_lasso_accepts, two_trap
from sdomega import (BudgetExceeded, Kind, Lasso, OmegaAutomaton, complement, contains, distinguishing_lasso,
                     empty_automaton, equivalent, intersect, is_empty, is_sd, is_universal, lasso_membership,
                     states_equivalent, tdbw_dn, universal_automaton)
from sdomega.generators import random_lasso, random_omega
from sdomega.implicit import tight_rankings
from sdomega.simulation import fair_simulation

kinds = st.sampled_from(list(Kind))
small_omega = st.builds(lambda seed, n, kind: random_omega(random.Random(seed), n, 2, kind),
                        st.integers(0, 10**6), st.integers(1, 3), kinds)


@settings(max_examples=150)
@given(st.integers(0, 10**6), st.integers(1, 5), kinds)
def test_lasso_membership_matches_relation_oracle(seed, n, kind):
    rng = random.Random(seed)
    a = random_omega(rng, n, 2, kind)
    for _ in range(10):
        w = random_lasso(rng, ["a", "b"])
        assert lasso_membership(a, w) == oracle_lasso_accepts(a, w)


def test_lasso_membership_rejects_unknown_letters():
    with pytest.raises(ValueError):
        lasso_membership(universal_automaton(["a"]), Lasso([], ["b"]))


def test_membership_examples_on_fixture():
    d = tdbw_dn(2)
    assert lasso_membership(d, Lasso([], ["$", "1", "2", "#", "1"]))
    assert not lasso_membership(d, Lasso([], ["$", "1", "#", "2"]))


@settings(max_examples=60, deadline=None)
@given(small_omega)
def test_emptiness_and_universality(a):
    w = is_empty(a)
    brute = any(oracle_lasso_accepts(a, v) for v in all_lassos(["a", "b"], 2, 3))
    if w is None:
        assert not brute
    else:
        assert oracle_lasso_accepts(a, w)
    u = is_universal(a)
    if u is not None:
        assert not oracle_lasso_accepts(a, u)
    else:
        assert all(oracle_lasso_accepts(a, v) for v in all_lassos(["a", "b"], 2, 3))


@settings(max_examples=60, deadline=None)
@given(small_omega)
def test_complement_partitions_lassos(a):
    c = complement(a)
    for w in all_lassos(["a", "b"], 2, 3):
        assert oracle_lasso_accepts(a, w) != oracle_lasso_accepts(c, w)


def test_complement_of_deterministic_buchi_is_cobuchi():
    c = complement(tdbw_dn(1))
    assert c.kind is Kind.COBUCHI_TRANS and c.states == 4


@settings(max_examples=50, deadline=None)
@given(small_omega, small_omega)
def test_contains_agrees_with_enumeration(a, b):
    w = contains(a, b)
    if w is None:
        assert brute_difference(a, b) is None
    else:
        assert oracle_lasso_accepts(a, w) and not oracle_lasso_accepts(b, w)


@settings(max_examples=50, deadline=None)
@given(small_omega, small_omega)
def test_intersection(a, b):
    i = intersect(a, b)
    for w in all_lassos(["a", "b"], 1, 3):
        assert oracle_lasso_accepts(i, w) == (oracle_lasso_accepts(a, w) and oracle_lasso_accepts(b, w))


def test_equivalence_identity_and_difference():
    u, e = universal_automaton(["a", "b"]), empty_automaton(["a", "b"], Kind.COBUCHI_STATE)
    assert equivalent(u, u) is None
    w = equivalent(u, e)
    assert w is not None and oracle_lasso_accepts(u, w)


def test_alphabet_order_is_aligned():
    a = universal_automaton(["a", "b"])
    b = universal_automaton(["b", "a"], Kind.COBUCHI_TRANS)
    assert contains(a, b) is None


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded) as info:
        complement(random_omega(random.Random(3), 5, 2, Kind.BUCHI_TRANS), budget=3)
    assert "budget-exceeded" in str(info.value)


@settings(max_examples=40, deadline=None)
@given(small_omega)
def test_state_equivalence(a):
    for q in range(a.states):
        for s in range(a.states):
            w = distinguishing_lasso(a, q, s)
            if w is None:
                assert brute_difference(a.reroot(q), a.reroot(s)) is None
            else:
                assert oracle_lasso_accepts(a.reroot(q), w) != oracle_lasso_accepts(a.reroot(s), w)
    assert states_equivalent(a, 0, 0)
    with pytest.raises(ValueError):
        states_equivalent(a, 0, a.states)


@settings(max_examples=60, deadline=None)
@given(small_omega)
def test_fair_simulation_implies_containment(a):
    for q, s in fair_simulation(a):
        assert brute_difference(a.reroot(q), a.reroot(s)) is None


def test_fair_simulation_is_reflexive():
    a = random_omega(random.Random(0), 4, 2, Kind.BUCHI_TRANS)
    assert all((q, q) in fair_simulation(a) for q in range(a.states))


@pytest.mark.parametrize("kind", list(Kind))
def test_two_trap_counterexample_replays(kind):
    a = two_trap(kind, 1)
    bad = is_sd(a)
    assert bad is not None and bad.state == 0 and bad.letter == "a"
    assert oracle_lasso_accepts(a.reroot(bad.succ_a), bad.witness) != \
        oracle_lasso_accepts(a.reroot(bad.succ_b), bad.witness)
    assert "not SD" in str(bad)


def test_initial_choice_is_checked():
    a = two_trap(Kind.BUCHI_TRANS, 0)
    bad = is_sd(a)
    assert bad is not None and bad.state is None


def test_deterministic_is_sd():
    assert is_sd(tdbw_dn(2)) is None


@settings(max_examples=40, deadline=None)
@given(small_omega)
def test_is_sd_matches_definition(a):
    sd = True
    choices = [sorted(a.initial)] + [sorted(a.delta[q][x]) for q in a.reachable_states()
                                      for x in range(len(a.alphabet))]
    for c in choices:
        for s in c[1:]:
            if brute_difference(a.reroot(c[0]), a.reroot(s)) or brute_difference(a.reroot(s), a.reroot(c[0])):
                sd = False
    assert (is_sd(a) is None) == sd


@given(st.lists(st.integers(0, 5), min_size=0, max_size=4), st.sampled_from([1, 3, 5]))
def test_tight_rankings(bounds, r):
    got = set(tight_rankings(bounds, r))
    import itertools

    want = {g for g in itertools.product(*[range(min(b, r) + 1) for b in bounds])
            if set(range(1, r + 1, 2)) <= set(g)}
    assert got == want
