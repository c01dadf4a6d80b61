"""Büchi encodings of finite-word languages and the reverse extraction.

``encode_infty`` turns an NFW for ``R`` into a semantically deterministic
transition-based Büchi automaton for ``∞R``, the words with infinitely
many disjoint infixes in ``R``.  The ``$``-separated variants recognize
``∞($·R·$)`` and keep determinism.  ``extract_nfw_infty`` recovers an NFW
for ``R`` from any SD automaton for ``∞($·R·$)`` by searching for a good
set of states.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Tuple

from .automata import (DEFAULT_BUDGET, Kind, Lasso, Nfw, OmegaAutomaton, _freeze_delta, prune_nfw,
                       prune_omega)
from .finite import (coaccessible, complement_nfw, empty_nfw, is_empty_nfw, is_universal_nfw, nfw_equivalent,
                     subset_construct, universal_nfw)

DOLLAR = "$"


class NoGoodSet(ValueError):
    """No state set passes the goodness test, so the language is not ∞($·R·$)."""


def _require_total(n: Nfw):
    hole = n.missing()
    if hole is not None:
        q, x = hole
        raise ValueError(f"NFW is not total: state {q} has no successor on {n.alphabet[x]!r}")


def encode_infty(n: Nfw) -> OmegaAutomaton:
    """SD transition-based Büchi automaton for ``∞L(n)`` on the same states.

    Every state also moves to the initial states on every letter; such a
    move is accepting when it could have completed a word of ``L(n)``.
    """
    _require_total(n)
    q0 = n.initial
    eps = bool(q0 & n.accepting)
    trans, alpha = [], set()
    for s in range(n.states):
        for x in range(len(n.alphabet)):
            succ = n.delta[s][x]
            hit = eps or bool(succ & n.accepting)
            for p in succ | q0:
                trans.append((s, x, p))
                if p in q0 and hit:
                    alpha.add((s, x, p))
    return OmegaAutomaton(n.alphabet, n.states, q0, _freeze_delta(n.states, len(n.alphabet), trans),
                          Kind.BUCHI_TRANS, alpha_trans=frozenset(alpha))


def _dollar_alphabet(n: Nfw, dollar: str):
    return n.alphabet.with_letter(dollar)


def encode_infty_dollar(n: Nfw, dollar: str = DOLLAR) -> OmegaAutomaton:
    """Automaton for ``∞($·L(n)·$)``; ``$`` resets to the initial states.

    A ``$``-move is accepting iff it leaves an accepting state, so the
    result is deterministic whenever ``n`` is.
    """
    _require_total(n)
    sigma = _dollar_alphabet(n, dollar)
    d = len(n.alphabet)
    trans = list(n.transitions())
    alpha = set()
    for s in range(n.states):
        for p in n.initial:
            trans.append((s, d, p))
            if s in n.accepting:
                alpha.add((s, d, p))
    return OmegaAutomaton(sigma, n.states, n.initial, _freeze_delta(n.states, len(sigma), trans),
                          Kind.BUCHI_TRANS, alpha_trans=frozenset(alpha))


def encode_infty_statebased(n: Nfw, dollar: str = DOLLAR) -> OmegaAutomaton:
    """State-based Büchi variant of :func:`encode_infty_dollar` with one extra accepting state."""
    _require_total(n)
    sigma = _dollar_alphabet(n, dollar)
    d = len(n.alphabet)
    acc = n.states
    trans = list(n.transitions())
    for s in range(n.states):
        targets = [acc] if s in n.accepting else sorted(n.initial)
        trans.extend((s, d, p) for p in targets)
    for x in range(d):
        trans.extend((acc, x, p) for p in n.post(n.initial, x))
    trans.extend((acc, d, p) for p in n.initial)
    return OmegaAutomaton(sigma, n.states + 1, n.initial, _freeze_delta(n.states + 1, len(sigma), trans),
                          Kind.BUCHI_STATE, alpha_states=frozenset([acc]))


# ---------------------------------------------------------------------------
# extraction


def _sigma_indices(a: OmegaAutomaton, r: Nfw, dollar: str):
    if dollar not in a.alphabet:
        raise ValueError(f"automaton alphabet lacks {dollar!r}")
    if set(a.alphabet) - {dollar} != set(r.alphabet):
        raise ValueError(f"alphabet mismatch: {a.alphabet.letters} vs {r.alphabet.letters} + {dollar!r}")
    # r's letter index -> a's letter index
    return [a.alphabet.index(x) for x in r.alphabet], a.alphabet.index(dollar)


def _require_tnbw(a: OmegaAutomaton):
    if a.kind is not Kind.BUCHI_TRANS:
        raise ValueError(f"expected a transition-based Büchi automaton, got {a.kind.value}")


def is_hopeful(a: OmegaAutomaton, rbar: Nfw, s: Iterable[int], dollar: str = DOLLAR) -> bool:
    """No run from ``s`` crosses alpha while reading a word of ``($·R̄)⁺``.

    Searches ``a`` jointly with an automaton for ``($·R̄)⁺``, remembering
    whether an alpha transition was taken.
    """
    _require_tnbw(a)
    sig, dol = _sigma_indices(a, rbar, dollar)
    START = -1
    start = [(q, START, False) for q in s]
    seen = set(start)
    stack = list(start)
    while stack:
        q, p, flag = stack.pop()
        if p != START and flag and p in rbar.accepting:
            return False
        moves = []
        if p == START or p in rbar.accepting:
            moves.append((dol, rbar.initial))
        if p != START:
            moves.extend((sig[x], rbar.delta[p][x]) for x in range(len(rbar.alphabet)))
        for ax, rnext in moves:
            for q2 in a.delta[q][ax]:
                f2 = flag or (q, ax, q2) in a.alpha_trans
                for p2 in rnext:
                    node = (q2, p2, f2)
                    if node not in seen:
                        seen.add(node)
                        stack.append(node)
    return True


@dataclass(frozen=True)
class GoodSetReport:
    """A good set together with the hopeful states it was judged against."""

    set: FrozenSet[int]
    hopeful_singletons: FrozenSet[int]
    checked_against: Nfw


def _bad_for_set(a: OmegaAutomaton, r: Nfw, S, hopeless, sig, dol) -> Nfw:
    """DFW for the words ``x`` on which ``S`` misbehaves after ``$x``.

    State = (subset reached, whether alpha was crossed).  Accepting when
    alpha was crossed or the subset holds a state that is not hopeful.
    """
    k = len(r.alphabet)
    T0 = set()
    crossed = False
    for q in S:
        for p in a.delta[q][dol]:
            T0.add(p)
            crossed = crossed or (q, dol, p) in a.alpha_trans
    start = (frozenset(T0), crossed)
    index = {start: 0}
    order = [start]
    queue = deque([start])
    trans = []
    while queue:
        node = queue.popleft()
        T, flag = node
        for x in range(k):
            ax = sig[x]
            nxt = set()
            f2 = flag
            for q in T:
                for p in a.delta[q][ax]:
                    nxt.add(p)
                    if not f2 and (q, ax, p) in a.alpha_trans:
                        f2 = True
            key = (frozenset(nxt), f2)
            j = index.get(key)
            if j is None:
                j = index[key] = len(order)
                order.append(key)
                queue.append(key)
            trans.append((index[node], x, j))
    acc = {i for i, (T, flag) in enumerate(order) if flag or T & hopeless}
    return Nfw(r.alphabet, len(order), frozenset([0]), _freeze_delta(len(order), k, trans), frozenset(acc))


def find_good_set(a: OmegaAutomaton, r: Nfw, dollar: str = DOLLAR) -> GoodSetReport:
    """First good set in order of size, then lexicographic order.

    ``S`` is good when, for every ``x``, ``x ∉ R`` exactly when no run from
    ``S`` on ``$x`` crosses alpha and every state reached is hopeful.  The
    quantifier over ``x`` is decided by DFW equivalence with ``r``.
    """
    _require_tnbw(a)
    sig, dol = _sigma_indices(a, r, dollar)
    rbar = complement_nfw(r)
    hopeful = frozenset(q for q in range(a.states) if is_hopeful(a, rbar, [q], dollar))
    hopeless = frozenset(range(a.states)) - hopeful
    for size in range(1, a.states + 1):
        for S in combinations(range(a.states), size):
            if nfw_equivalent(_bad_for_set(a, r, S, hopeless, sig, dol), r) is None:
                return GoodSetReport(frozenset(S), hopeful, r)
    raise NoGoodSet("no good set: the automaton does not recognize ∞($·R·$) for the given R")


def _one_state(alphabet, accept: bool) -> Nfw:
    return universal_nfw(alphabet) if accept else empty_nfw(alphabet)


def extract_nfw_infty(a: OmegaAutomaton, r: Nfw, dollar: str = DOLLAR) -> Nfw:
    """NFW for ``R`` with at most ``|a| + 1`` states, read off an SD automaton for ``∞($·R·$)``.

    Unreachable states of ``a`` are dropped first.  The extra accepting
    sink is only reachable when ``R`` has a good prefix.
    """
    _require_tnbw(a)
    if is_universal_nfw(r):
        return _one_state(r.alphabet, True)
    if is_empty_nfw(r):
        return _one_state(r.alphabet, False)
    a = prune_omega(a)
    sig, dol = _sigma_indices(a, r, dollar)
    report = find_good_set(a, r, dollar)
    hopeless = frozenset(range(a.states)) - report.hopeful_singletons
    acc_state = a.states
    trans = []
    for q in range(a.states):
        for x in range(len(r.alphabet)):
            ax = sig[x]
            for p in a.delta[q][ax]:
                trans.append((q, x, acc_state if (q, ax, p) in a.alpha_trans else p))
    trans.extend((acc_state, x, acc_state) for x in range(len(r.alphabet)))
    init = a.post(report.set, dol)
    n = Nfw(r.alphabet, a.states + 1, init, _freeze_delta(a.states + 1, len(r.alphabet), trans),
            hopeless | {acc_state})
    return prune_nfw(n)


def has_good_prefix(r: Nfw) -> Optional[Tuple[str, ...]]:
    """Shortest ``x`` such that every extension of ``x`` is in ``L(r)``, if one exists."""
    d = subset_construct(r)
    rejecting_reach = coaccessible(Nfw(d.alphabet, d.states, d.initial, d.delta,
                                       frozenset(range(d.states)) - d.accepting))
    good = frozenset(range(d.states)) - rejecting_reach
    if not good:
        return None
    start = next(iter(d.initial))
    parent = {start: None}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        if q in good:
            word = []
            while parent[q] is not None:
                x, q = parent[q]
                word.append(d.alphabet[x])
            return tuple(reversed(word))
        for x in range(len(d.alphabet)):
            p = next(iter(d.delta[q][x]))
            if p not in parent:
                parent[p] = (x, q)
                queue.append(p)
    return None


def validate_infty_dollar(a: OmegaAutomaton, r: Nfw, samples: int = 200, seed: int = 0,
                          dollar: str = DOLLAR, budget: int = DEFAULT_BUDGET) -> Optional[Lasso]:
    """Check ``L(a) = ∞($·R·$)`` up front; returns a lasso on which they differ, if any.

    Random lassos are tried first since they are cheap; the full check is
    containment both ways against ``encode_infty_dollar(r)``.
    """
    from .generators import random_lasso
    from .semantics import equivalent, lasso_membership

    ref = encode_infty_dollar(r, dollar)
    rng = random.Random(seed)
    for _ in range(samples):
        w = random_lasso(rng, a.alphabet.letters)
        if lasso_membership(a, w) != lasso_membership(ref, w):
            return w
    return equivalent(a, ref, budget)
