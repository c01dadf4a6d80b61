import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (bowtie_by_rotation, distance_differ, first_last_differ, infty_by_infix_scan, is_good_word,
                     nfw_run_accepts, oracle_lasso_accepts, words)
from sdomega import (Family, FamilySpec, Kind, Lasso, build_family, dfw_first_last_differ, lasso_membership,
                     nfw_distance_differ, nfw_good_words, nfw_good_words_nodollar, tdbw_dn, tdcw_dn)
from sdomega.generators import random_lasso
from sdomega.textformat import serialize


@pytest.mark.parametrize("n", range(1, 6))
def test_sizes(n):
    assert nfw_good_words(n).states == 3 * n + 3
    assert nfw_good_words_nodollar(n).states == 3 * n + 3
    assert tdbw_dn(n).states == 2 ** (n + 1)
    assert tdcw_dn(n).states == 2 ** (n + 1) + 1
    assert dfw_first_last_differ(n).states == 2 * n + 3
    assert nfw_distance_differ(n).states == 2 * n + 3


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("dollar", [True, False])
def test_good_words_against_predicate(n, dollar):
    r = nfw_good_words(n) if dollar else nfw_good_words_nodollar(n)
    max_len = 6 if n < 3 else 5
    for w in words(r.alphabet.letters, max_len):
        assert r.accepts(w) == is_good_word(w, n, dollar), w


def test_good_word_examples():
    r = nfw_good_words(2)
    assert r.accepts(list("$1#1")) and r.accepts(list("$12#1")) and r.accepts(list("$2#2"))
    assert not r.accepts(list("$1#2"))
    s = nfw_good_words_nodollar(2)
    assert s.accepts(list("1#1")) and s.accepts(list("21#2")) and not s.accepts(list("1#2"))


def test_deterministic_fixtures_are_total_and_deterministic():
    for n in (1, 2, 3):
        for a in (tdbw_dn(n), tdcw_dn(n)):
            assert a.is_deterministic()
        assert tdbw_dn(n).kind is Kind.BUCHI_TRANS and tdcw_dn(n).kind is Kind.COBUCHI_TRANS
        assert dfw_first_last_differ(n).is_deterministic()


def test_fixture_lasso_examples():
    d = tdbw_dn(2)
    assert lasso_membership(d, Lasso([], list("$12#2")))
    assert not lasso_membership(d, Lasso([], list("$1#2")))
    c = tdcw_dn(2)
    assert lasso_membership(c, Lasso(list("$1#2"), ["1"]))
    assert lasso_membership(c, Lasso(list("$1#2"), list("$21#1")))
    assert not lasso_membership(c, Lasso([], list("$1#2")))
    assert not lasso_membership(c, Lasso([], list("$1#1$2#1")))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10**6))
def test_fixture_languages(n, seed):
    rng = random.Random(seed)
    letters = [str(i) for i in range(1, n + 1)] + ["#", "$"]
    d, c = tdbw_dn(n), tdcw_dn(n)
    good, good_nodollar = nfw_good_words(n), nfw_good_words_nodollar(n)
    for _ in range(15):
        w = random_lasso(rng, letters, 3, 7)
        assert oracle_lasso_accepts(d, w) == infty_by_infix_scan(good, w)
        assert oracle_lasso_accepts(c, w) == bowtie_by_rotation(good_nodollar, w)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_binary_families_against_predicates(n):
    f, d = dfw_first_last_differ(n), nfw_distance_differ(n)
    for w in words(["0", "1"], n + 4):
        assert f.accepts(w) == first_last_differ(w, n)
        assert nfw_run_accepts(d, w) == distance_differ(w, n)


def test_builders_are_reproducible():
    for fam in Family:
        a, b = build_family(fam.value, 2), FamilySpec(fam, 2).build()
        assert a == b and serialize(a) == serialize(b)


def test_invalid_parameters():
    with pytest.raises(ValueError):
        FamilySpec(Family.TDBW_DN, 0)
    with pytest.raises(ValueError):
        nfw_good_words(0)
    with pytest.raises(ValueError):
        tdbw_dn(13)
    with pytest.raises(ValueError):
        build_family("no-such-family", 1)
