"""Polynomial determinization, complementation and decisions for SD weak automata.

Two states are *close* when one word leads from a common state to both.
In a semantically deterministic weak automaton close states are
equivalent, and redirecting every move to a representative chosen in the
deepest strongly connected component of its class yields an equivalent
deterministic weak automaton on a subset of the original states.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .automata import (DEFAULT_BUDGET, Kind, Lasso, OmegaAutomaton, SccOrder, _freeze_delta, dualize_dww,
                       is_weak, prune_omega, scc_order)
from .graphs import bfs_path, reachable, tarjan
from .implicit import ExplicitView, find_accepting_lasso, product


class NotSemanticallyDeterministic(ValueError):
    """Validated determinization found two inequivalent choices."""


@dataclass(frozen=True)
class CloseRelation:
    """Symmetric reflexive relation over ``states`` with the number of rounds that built it."""

    states: int
    pairs: FrozenSet[Tuple[int, int]]
    iterations: int

    def related(self, q: int, s: int) -> bool:
        return (q, s) in self.pairs

    def matrix(self) -> List[List[bool]]:
        return [[(i, j) in self.pairs for j in range(self.states)] for i in range(self.states)]


def _require_nww(a: OmegaAutomaton):
    if a.kind is not Kind.BUCHI_STATE:
        raise ValueError(f"expected a state-based weak automaton (Büchi reading), got {a.kind.value}")
    if not is_weak(a):
        raise ValueError("automaton is not weak")


def delta_close(a: OmegaAutomaton) -> CloseRelation:
    """Least fixpoint of: identity, closed under reading a common letter from related states."""
    _require_nww(a)
    H = {(q, q) for q in range(a.states)}
    frontier = list(H)
    rounds = 0
    k = len(a.alphabet)
    while True:
        new = set()
        for q1, q2 in frontier:
            for x in range(k):
                for s1 in a.delta[q1][x]:
                    for s2 in a.delta[q2][x]:
                        if (s1, s2) not in H:
                            new.add((s1, s2))
        if not new:
            break
        H |= new
        frontier = list(new)
        rounds += 1
    return CloseRelation(a.states, frozenset(H), rounds)


def close_transitive(h: CloseRelation) -> CloseRelation:
    """Smallest transitive relation containing ``h``."""
    parent = list(range(h.states))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for q, s in h.pairs:
        rq, rs = find(q), find(s)
        if rq != rs:
            parent[max(rq, rs)] = min(rq, rs)
    groups: Dict[int, List[int]] = {}
    for q in range(h.states):
        groups.setdefault(find(q), []).append(q)
    pairs = frozenset((q, s) for g in groups.values() for q in g for s in g)
    return CloseRelation(h.states, pairs, h.iterations)


@dataclass(frozen=True)
class RepresentativePartition:
    classes: Tuple[FrozenSet[int], ...]
    representative: Tuple[int, ...]  # aligned with classes
    scc: SccOrder

    def class_of(self, q: int) -> int:
        for i, c in enumerate(self.classes):
            if q in c:
                return i
        raise KeyError(q)

    def rep_of(self, q: int) -> int:
        return self.representative[self.class_of(q)]


def representatives(a: OmegaAutomaton, h: CloseRelation) -> RepresentativePartition:
    """Classes of ``h``, each represented by its smallest state in the deepest SCC it meets."""
    order = scc_order(a)
    seen = set()
    classes = []
    for q in range(a.states):
        if q in seen:
            continue
        c = frozenset(s for s in range(a.states) if h.related(q, s))
        seen |= c
        classes.append(c)
    reps = []
    for c in classes:
        deepest = max(order.component_of[q] for q in c)
        reps.append(min(q for q in c if order.component_of[q] == deepest))
    return RepresentativePartition(tuple(classes), tuple(reps), order)


def determinize_sd_nww(a: OmegaAutomaton, validate: bool = False, budget: int = DEFAULT_BUDGET) -> OmegaAutomaton:
    """Equivalent deterministic weak automaton over a subset of the states of ``a``.

    ``origin`` on the result maps its dense ids back to states of ``a``.
    With ``validate`` the input is first checked to be semantically
    deterministic; otherwise non-SD input gives an unspecified result.
    """
    _require_nww(a)
    if validate:
        from .semantics import is_sd

        bad = is_sd(a, budget)
        if bad is not None:
            raise NotSemanticallyDeterministic(str(bad))
    h = close_transitive(delta_close(a))
    part = representatives(a, h)
    rep = [0] * a.states
    for c, r in zip(part.classes, part.representative):
        for q in c:
            rep[q] = r
    keep = sorted(set(part.representative))
    ids = {q: i for i, q in enumerate(keep)}
    trans = []
    for p in keep:
        for x in range(len(a.alphabet)):
            targets = {rep[q] for q in a.delta[p][x]}
            if len(targets) != 1:
                raise AssertionError(f"successors of {p} on {a.alphabet[x]!r} fall into several classes")
            trans.append((ids[p], x, ids[targets.pop()]))
    init = ids[rep[min(a.initial)]]
    return OmegaAutomaton(a.alphabet, len(keep), frozenset([init]), _freeze_delta(len(keep), len(a.alphabet), trans),
                          Kind.BUCHI_STATE, alpha_states=frozenset(ids[q] for q in keep if q in a.alpha_states),
                          origin=tuple(keep))


def complement_sd_nww(a: OmegaAutomaton, validate: bool = False) -> OmegaAutomaton:
    """Deterministic weak automaton for the complement of an SD weak automaton."""
    return dualize_dww(determinize_sd_nww(a, validate))


def _require_dww(d: OmegaAutomaton):
    if not d.is_deterministic():
        raise ValueError("expected a deterministic automaton")
    if not is_weak(d):
        raise ValueError("expected a weak automaton")


def _equivalent_pairs(d: OmegaAutomaton) -> List[List[bool]]:
    """Language equivalence of states of a deterministic weak automaton.

    Two states differ iff their joint run can reach a cycle on which one
    side accepts and the other rejects; in a weak automaton every
    transition of a cycle agrees on acceptance, so checking one cycle edge
    suffices.
    """
    n = d.states
    k = len(d.alphabet)
    step = [[next(iter(d.delta[q][x])) for x in range(k)] for q in range(n)]
    flag = [[d.is_alpha(q, x, step[q][x]) for x in range(k)] for q in range(n)]

    def pid(p, q):
        return p * n + q

    succ = [[] for _ in range(n * n)]
    for p in range(n):
        for q in range(n):
            succ[pid(p, q)] = [pid(step[p][x], step[q][x]) for x in range(k)]
    comp_of = [0] * (n * n)
    for i, c in enumerate(tarjan(n * n, succ)):
        for v in c:
            comp_of[v] = i
    bad = set()
    for p in range(n):
        for q in range(n):
            v = pid(p, q)
            for x in range(k):
                if comp_of[succ[v][x]] == comp_of[v] and flag[p][x] != flag[q][x]:
                    bad.add(v)
    pred = [[] for _ in range(n * n)]
    for v in range(n * n):
        for w in succ[v]:
            pred[w].append(v)
    differ = set(reachable(pred, sorted(bad)))
    return [[pid(p, q) not in differ for q in range(n)] for p in range(n)]


def minimize_dww(d: OmegaAutomaton) -> OmegaAutomaton:
    """Canonical minimal deterministic weak automaton, states in BFS order.

    States are merged by language equivalence.  Each nontrivial SCC of
    the quotient is accepting iff a run that cycles through all of it is
    accepted by ``d``; transient states are marked rejecting.
    """
    from .semantics import lasso_membership

    _require_dww(d)
    d = prune_omega(d)
    n, k = d.states, len(d.alphabet)
    eq = _equivalent_pairs(d)
    cls = [-1] * n
    classes: List[List[int]] = []
    for q in range(n):
        if cls[q] == -1:
            members = [s for s in range(n) if eq[q][s]]
            for s in members:
                cls[s] = len(classes)
            classes.append(members)
    m = len(classes)
    step = [[cls[next(iter(d.delta[c[0]][x]))] for x in range(k)] for c in classes]
    start = cls[next(iter(d.initial))]

    # canonical BFS numbering
    canon = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for x in range(k):
            t = step[c][x]
            if t not in canon:
                canon[t] = len(order)
                order.append(t)
                queue.append(t)
    qstep = [[canon[step[c][x]] for x in range(k)] for c in order]

    labelled = [[(x, qstep[v][x]) for x in range(k)] for v in range(m)]
    comps = tarjan(m, [[t for _, t in row] for row in labelled])
    accepting = set()
    for comp in comps:
        cset = set(comp)
        if len(comp) == 1 and comp[0] not in qstep[comp[0]]:
            continue
        head = comp[0]
        prefix, _ = bfs_path(labelled, [0], {head})
        # closed walk from head through every member of the component
        walk, cur = [], head
        for target in comp[1:] + [head]:
            if target == cur and walk:
                continue
            if target == cur:
                x = next(x for x in range(k) if qstep[cur][x] in cset)
                walk.append(x)
                cur = qstep[cur][x]
            path, cur = bfs_path(labelled, [cur], {target}, allowed=cset)
            walk.extend(path)
        if not walk:
            x = next(x for x in range(k) if qstep[head][x] == head)
            walk = [x]
        if lasso_membership(d, Lasso(d.alphabet.decode(prefix), d.alphabet.decode(walk))):
            accepting.update(comp)
    return OmegaAutomaton.build(d.alphabet, m, {0},
                                [(v, x, qstep[v][x]) for v in range(m) for x in range(k)],
                                Kind.BUCHI_STATE, alpha_states=accepting)


@dataclass(frozen=True)
class WeakDecision:
    """Containment, universality and equivalence between two SD weak automata.

    Each field holds a witness lasso, or ``None`` when the property holds:
    ``a_not_in_b`` is in ``L(a) \\ L(b)``; ``a_rejects`` is rejected by ``a``.
    """

    a_not_in_b: Optional[Lasso]
    b_not_in_a: Optional[Lasso]
    a_rejects: Optional[Lasso]
    b_rejects: Optional[Lasso]

    @property
    def a_in_b(self) -> bool:
        return self.a_not_in_b is None

    @property
    def b_in_a(self) -> bool:
        return self.b_not_in_a is None

    @property
    def equivalent(self) -> bool:
        return self.a_in_b and self.b_in_a

    @property
    def a_universal(self) -> bool:
        return self.a_rejects is None

    @property
    def b_universal(self) -> bool:
        return self.b_rejects is None


def _dww_difference(da: OmegaAutomaton, db: OmegaAutomaton) -> Optional[Lasso]:
    found = find_accepting_lasso(product(ExplicitView(da), ExplicitView(dualize_dww(db))))
    return None if found is None else Lasso(*found)


def weak_decision(a: OmegaAutomaton, b: OmegaAutomaton) -> WeakDecision:
    """Decide containment both ways and universality of both, polynomially."""
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabet mismatch: {a.alphabet.letters} vs {b.alphabet.letters}")
    da, db = determinize_sd_nww(a), determinize_sd_nww(b)

    def rejects(d):
        found = find_accepting_lasso(ExplicitView(dualize_dww(d)))
        return None if found is None else Lasso(*found)

    return WeakDecision(_dww_difference(da, db), _dww_difference(db, da), rejects(da), rejects(db))


def generate_sd_nww(states: int = 6, letters: int = 2, duplicates: int = 2, seed: int = 0,
                    check: bool = False) -> OmegaAutomaton:
    """Random SD weak automaton built from a random deterministic weak one.

    ``duplicates`` extra states are clones of base states (same acceptance,
    same outgoing moves).  Every move is then widened to a random nonempty
    subset of the clones of its target, so all choices are equivalent.
    ``states`` counts base states plus clones.
    """
    rng = random.Random(seed)
    duplicates = max(0, min(duplicates, states - 1))
    base = states - duplicates
    alphabet = [chr(ord("a") + i) for i in range(letters)]
    step = [[rng.randrange(base) for _ in range(letters)] for _ in range(base)]
    succ = [sorted(set(row)) for row in step]
    accepting = set()
    for comp in tarjan(base, succ):
        if rng.random() < 0.5:
            accepting.update(comp)
    origin = list(range(base))
    for _ in range(duplicates):
        origin.append(rng.randrange(base))
    family: Dict[int, List[int]] = {}
    for q, o in enumerate(origin):
        family.setdefault(o, []).append(q)
    trans = []
    for q, o in enumerate(origin):
        for x in range(letters):
            fam = family[step[o][x]]
            chosen = [t for t in fam if rng.random() < 0.5] or [rng.choice(fam)]
            trans.extend((q, x, t) for t in chosen)
    init_fam = family[0]
    init = [t for t in init_fam if rng.random() < 0.3] or [0]
    a = OmegaAutomaton.build(alphabet, states, init, trans, Kind.BUCHI_STATE,
                             alpha_states={q for q, o in enumerate(origin) if o in accepting})
    if check:
        from .semantics import is_sd

        assert is_weak(a)
        assert is_sd(a) is None
    return a


def sd_not_dbp_example() -> OmegaAutomaton:
    """Four-state SD weak automaton that is not determinizable by pruning.

    States: 0 = q0, 1 = q_a, 2 = q_b, 3 = q_acc.  From q0 every letter
    moves to both q_a and q_b, which guess the next letter: q_a accepts
    on ``a`` (to the accepting sink q_acc) and returns to q0 on ``b``, and
    symmetrically for q_b.  Every state is universal, yet no strategy that
    commits to q_a or q_b before seeing the next letter reaches q_acc.
    """
    a, b = "a", "b"
    trans = [(0, a, 1), (0, a, 2), (0, b, 1), (0, b, 2),
             (1, a, 3), (1, b, 0), (2, b, 3), (2, a, 0),
             (3, a, 3), (3, b, 3)]
    return OmegaAutomaton.build([a, b], 4, {0}, trans, Kind.BUCHI_STATE, alpha_states={3})
