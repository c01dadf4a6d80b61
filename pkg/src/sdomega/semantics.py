"""Decision procedures over omega automata and the finite-word language oracles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .automata import (DEFAULT_BUDGET, Alphabet, Kind, Lasso, Nfw, OmegaAutomaton, align, dualize_dww,
                       is_weak, universal_automaton)
from .implicit import (BreakpointComplement, ExplicitView, RankComplement, accepting_cycle, complement_view,
                       explore, find_accepting_lasso, materialize, product)
from .simulation import fair_simulation


def _check_letters(alphabet: Alphabet, w: Lasso):
    for x in w.prefix + w.period:
        alphabet.index(x)


class _LassoProduct:
    """States of ``a`` paired with positions in the lasso."""

    def __init__(self, a: OmegaAutomaton, w: Lasso):
        self.view = ExplicitView(a)
        self.alphabet = a.alphabet
        self.buchi = a.kind.buchi
        self.word = a.alphabet.encode(w.prefix + w.period)
        self.loop = len(w.prefix)

    def initial(self):
        return [(q, 0) for q in self.view.initial()]

    def successors(self, s, x):
        q, i = s
        if self.word[i] != x:
            return ()
        j = i + 1 if i + 1 < len(self.word) else self.loop
        return [((p, j), f) for p, f in self.view.successors(q, x)]


def lasso_membership(a: OmegaAutomaton, w: Lasso) -> bool:
    """Whether ``a`` accepts ``w.prefix · w.period^ω``."""
    _check_letters(a.alphabet, w)
    g = explore(_LassoProduct(a, w), what="lasso product")
    return accepting_cycle(g) is not None


def is_empty(a: OmegaAutomaton, budget: int = DEFAULT_BUDGET) -> Optional[Lasso]:
    """``None`` when ``L(a)`` is empty, otherwise an accepted lasso."""
    found = find_accepting_lasso(ExplicitView(a), budget, "emptiness search")
    return None if found is None else Lasso(*found)


def complement(a: OmegaAutomaton, budget: int = DEFAULT_BUDGET) -> OmegaAutomaton:
    """An automaton for the complement language.

    Deterministic weak input is dualized.  Other deterministic input is
    dualized by swapping Büchi and co-Büchi readings of the same alpha.
    Co-Büchi and weak input go through the breakpoint construction to a
    deterministic Büchi automaton.  Remaining Büchi input uses the
    rank-based construction.
    """
    if a.is_deterministic():
        if is_weak(a):
            return dualize_dww(a)
        return OmegaAutomaton(a.alphabet, a.states, a.initial, a.delta, a.kind.dual(),
                              a.alpha_states, a.alpha_trans, sink=a.sink, origin=a.origin, name=a.name)
    return materialize(complement_view(a), budget, "complement")


def intersect(a: OmegaAutomaton, b: OmegaAutomaton, budget: int = DEFAULT_BUDGET) -> OmegaAutomaton:
    """Product automaton for ``L(a) ∩ L(b)``."""
    b = align(b, a.alphabet)
    return materialize(product(ExplicitView(a), ExplicitView(b)), budget, "intersection")


def contains(a: OmegaAutomaton, b: OmegaAutomaton, budget: int = DEFAULT_BUDGET) -> Optional[Lasso]:
    """``None`` iff ``L(a) ⊆ L(b)``; otherwise a lasso in ``L(a) \\ L(b)``."""
    b = align(b, a.alphabet)
    found = find_accepting_lasso(product(ExplicitView(a), complement_view(b)), budget, "containment product")
    return None if found is None else Lasso(*found)


def is_universal(a: OmegaAutomaton, budget: int = DEFAULT_BUDGET) -> Optional[Lasso]:
    """``None`` iff ``a`` accepts every word; otherwise a rejected lasso."""
    found = find_accepting_lasso(complement_view(a), budget, "complement")
    return None if found is None else Lasso(*found)


def equivalent(a: OmegaAutomaton, b: OmegaAutomaton, budget: int = DEFAULT_BUDGET) -> Optional[Lasso]:
    """``None`` iff the languages agree; otherwise a lasso in exactly one of them."""
    return contains(a, b, budget) or contains(b, a, budget)


class _StateOracle:
    """Answers language questions about states of one automaton.

    Fair simulation settles many containments in polynomial time; the
    rest go through complementation, whose successor tables are shared
    across all re-rootings.
    """

    def __init__(self, a: OmegaAutomaton, budget: int):
        self.a = a
        self.budget = budget
        self.memo = {}
        self.known = {}
        self._simulated = None

    def simulated(self):
        if self._simulated is None:
            self._simulated = fair_simulation(self.a)
        return self._simulated

    def _complement(self, s):
        a = self.a
        if all(len(t) == 1 for row in a.delta for t in row):
            return complement_view(a, initial=[s])
        if not a.kind.buchi:
            return BreakpointComplement(a, initial=[s], memo=self.memo)
        if is_weak(a):
            return BreakpointComplement(a, flip=True, initial=[s], memo=self.memo)
        return RankComplement(a, initial=[s], memo=self.memo)

    def difference(self, q: int, s: int) -> Optional[Lasso]:
        """A lasso accepted from ``q`` but not from ``s``."""
        key = (q, s)
        if key not in self.known and key in self.simulated():
            self.known[key] = None
        if key not in self.known:
            view = product(ExplicitView(self.a, initial=[q]), self._complement(s))
            found = find_accepting_lasso(view, self.budget, "state containment")
            self.known[key] = None if found is None else Lasso(*found)
        return self.known[key]

    def distinguish(self, q: int, s: int) -> Optional[Lasso]:
        if q == s:
            return None
        return self.difference(q, s) or self.difference(s, q)


def distinguishing_lasso(a: OmegaAutomaton, q: int, s: int, budget: int = DEFAULT_BUDGET) -> Optional[Lasso]:
    """A lasso accepted from exactly one of ``q`` and ``s``, if any."""
    return _StateOracle(a, budget).distinguish(q, s)


def states_equivalent(a: OmegaAutomaton, q: int, s: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether ``q`` and ``s`` recognize the same language."""
    for x in (q, s):
        if not 0 <= x < a.states:
            raise ValueError(f"state {x} outside 0..{a.states - 1}")
    return distinguishing_lasso(a, q, s, budget) is None


@dataclass(frozen=True)
class SdCounterexample:
    """Two nondeterministic choices leading to inequivalent states.

    ``state`` and ``letter`` are ``None`` when the choice is between two
    initial states.
    """

    state: Optional[int]
    letter: Optional[str]
    succ_a: int
    succ_b: int
    witness: Lasso

    def __str__(self):
        where = "initial states" if self.state is None else f"state {self.state} on {self.letter}"
        return f"not SD: {where} -> {self.succ_a} vs {self.succ_b}; {self.witness}"


def is_sd(a: OmegaAutomaton, budget: int = DEFAULT_BUDGET) -> Optional[SdCounterexample]:
    """``None`` iff every nondeterministic choice leads to equivalent states."""
    oracle = _StateOracle(a, budget)
    parent = list(range(a.states))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def check(choices, state, letter):
        choices = sorted(choices)
        first = choices[0]
        for other in choices[1:]:
            if find(first) == find(other):
                continue
            w = oracle.distinguish(first, other)
            if w is not None:
                return SdCounterexample(state, letter, first, other, w)
            parent[find(other)] = find(first)
        return None

    bad = check(a.initial, None, None)
    if bad:
        return bad
    for q in sorted(a.reachable_states()):
        for x in range(len(a.alphabet)):
            succ = a.delta[q][x]
            if len(succ) > 1:
                bad = check(succ, q, a.alphabet[x])
                if bad:
                    return bad
    return None


# ---------------------------------------------------------------------------
# finite-word oracles for the encoded languages


def lasso_in_infty(r: Nfw, w: Lasso) -> bool:
    """Whether ``w`` has infinitely many disjoint infixes in ``L(r)``.

    True iff the empty word is in ``L(r)`` or some word of ``L(r)`` occurs
    inside ``period^ω``; such an occurrence repeats with every period.
    Decided by searching ``r`` jointly with a cyclic pointer into the period.
    """
    _check_letters(r.alphabet, w)
    if r.initial & r.accepting:
        return True
    v = r.alphabet.encode(w.period)
    k = len(v)
    start = [(q, i) for q in r.initial for i in range(k)]
    seen = set(start)
    stack = list(start)
    while stack:
        q, i = stack.pop()
        for p in r.delta[q][v[i]]:
            if p in r.accepting:
                return True
            node = (p, (i + 1) % k)
            if node not in seen:
                seen.add(node)
                stack.append(node)
    return False


def lasso_in_bowtie(r: Nfw, w: Lasso, dollar: str = "$") -> bool:
    """Whether ``w`` has finitely many ``$`` or eventually splits into ``$``-separated words of ``L(r)``."""
    if dollar in r.alphabet:
        raise ValueError(f"{dollar!r} must not be a letter of the finite-word automaton")
    for x in w.prefix + w.period:
        if x != dollar:
            r.alphabet.index(x)
    v = w.period
    marks = [i for i, x in enumerate(v) if x == dollar]
    if not marks:
        return True
    k = len(v)
    for j, start in enumerate(marks):
        end = marks[(j + 1) % len(marks)]
        length = (end - start - 1) % k if len(marks) > 1 else k - 1
        segment = [v[(start + 1 + t) % k] for t in range(length)]
        if not r.accepts(segment):
            return False
    return True
