import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bowtie_by_rotation, nfw_run_accepts, oracle_lasso_accepts, words
from sdomega import (BadInfixWitness, Kind, Nfw, NoTrapFound, encode_bowtie, encode_bowtie_statebased,
                     extract_nfw_bowtie, has_bad_infix, is_sd, lasso_in_bowtie, nfw_distance_differ,
                     nfw_equivalent, nfw_good_words_nodollar, normalize, tdcw_dn, trap_state, bad_infix_optimize,
                     universal_nfw)
from sdomega.generators import random_lasso, random_nfw

nfws = st.builds(lambda seed, n: random_nfw(random.Random(seed), n, 2), st.integers(0, 10**6), st.integers(1, 5))


@settings(max_examples=80, deadline=None)
@given(nfws, st.integers(0, 10**6))
def test_bowtie_encodings_language(r, seed):
    rng = random.Random(seed)
    a, s = encode_bowtie(r), encode_bowtie_statebased(r)
    assert a.states == r.states and a.kind is Kind.COBUCHI_TRANS
    assert s.states == r.states + 1 and s.kind is Kind.COBUCHI_STATE
    for _ in range(10):
        w = random_lasso(rng, r.alphabet.letters + ("$",), 3, 6)
        expected = bowtie_by_rotation(r, w)
        assert lasso_in_bowtie(r, w) == expected
        assert oracle_lasso_accepts(a, w) == expected
        assert oracle_lasso_accepts(s, w) == expected


@settings(max_examples=25, deadline=None)
@given(nfws)
def test_bowtie_encodings_are_sd(r):
    assert is_sd(encode_bowtie(r)) is None
    assert is_sd(encode_bowtie_statebased(r)) is None


def test_bowtie_oracle_rejects_dollar_in_nfw():
    from sdomega import Lasso, nfw_good_words

    with pytest.raises(ValueError):
        lasso_in_bowtie(nfw_good_words(1), Lasso([], ["$"]))


@settings(max_examples=80, deadline=None)
@given(nfws)
def test_extract_round_trip(r):
    a = encode_bowtie(r)
    out = extract_nfw_bowtie(a)
    assert nfw_equivalent(out, r) is None
    assert out.states <= r.states + 1


@pytest.mark.parametrize("n", [1, 2])
def test_extract_from_deterministic_fixture(n):
    out = extract_nfw_bowtie(tdcw_dn(n))
    assert nfw_equivalent(out, nfw_good_words_nodollar(n)) is None
    assert out.states <= tdcw_dn(n).states + 1


def test_extract_requires_tncw():
    from sdomega import tdbw_dn

    with pytest.raises(ValueError):
        extract_nfw_bowtie(tdbw_dn(1))


def bad_infix_oracle(r: Nfw, max_len=4, pad=3):
    """Shortest word x (up to max_len) such that no y·x·z with |y|,|z| <= pad is accepted."""
    letters = r.alphabet.letters
    for x in words(letters, max_len):
        if not any(nfw_run_accepts(r, y + x + z) for y in words(letters, pad) for z in words(letters, pad)):
            return x
    return None


@settings(max_examples=60, deadline=None)
@given(nfws)
def test_has_bad_infix_matches_oracle(r):
    w = has_bad_infix(r)
    brute = bad_infix_oracle(r)
    if w is None:
        assert brute is None
    else:
        letters = r.alphabet.letters
        assert not any(nfw_run_accepts(r, y + w.word + z) for y in words(letters, 3) for z in words(letters, 3))
        if brute is not None:
            assert len(w.word) <= len(brute)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_distance_family_bad_infixes(n):
    r = nfw_distance_differ(n)
    w = has_bad_infix(r)
    # any word that contains two differing letters at distance n is in R, so no infix is bad
    assert w is None
    assert bad_infix_oracle(r, max_len=3) is None


def test_has_bad_infix_bounds():
    r = nfw_good_words_nodollar(1)
    w = has_bad_infix(r)
    assert w is not None and w.word == ("#", "#")
    assert has_bad_infix(r, bound=1) is None
    assert has_bad_infix(r, bound=None) == w
    assert has_bad_infix(universal_nfw(["a"])) is None


@settings(max_examples=60, deadline=None)
@given(nfws)
def test_bad_infix_optimization(r):
    w = has_bad_infix(r)
    if w is None:
        return
    a = encode_bowtie(r)
    out = extract_nfw_bowtie(a)
    small = bad_infix_optimize(a, out, w)
    assert small.states <= r.states
    assert nfw_equivalent(small, r) is None
    q = trap_state(a, w)
    assert q is not None and q not in out.initial


def test_bad_infix_optimize_checks_inputs():
    r = nfw_good_words_nodollar(1)
    a = encode_bowtie(r)
    with pytest.raises(ValueError):
        bad_infix_optimize(a, r, has_bad_infix(r))
    # the universal language has no trap: every state is in a component with a good "$"
    u = universal_nfw(["a"])
    au = encode_bowtie(u)
    with pytest.raises(NoTrapFound):
        bad_infix_optimize(au, extract_nfw_bowtie(au), BadInfixWitness(("a",)))


def test_normalized_fixture_is_unchanged():
    d = tdcw_dn(2)
    assert normalize(d) == d
