"""Automata explored on demand.

A *view* exposes ``alphabet``, ``buchi`` (acceptance flavour, always
transition-based), ``initial()`` and ``successors(state, letter)``.  The
latter yields ``(state, flag)`` pairs where ``flag`` marks an alpha
transition.  Views let products and complements be searched without
first building them, which is what keeps containment checks cheap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .automata import (DEFAULT_BUDGET, BudgetExceeded, Kind, OmegaAutomaton, _freeze_delta, as_alphabet,
                       dualize_dww, is_weak)
from .graphs import bfs_path, reachable, tarjan


class ExplicitView:
    """An :class:`OmegaAutomaton` seen as a view.

    ``flip`` negates every flag and ``buchi`` overrides the flavour; both
    are used to read weak and deterministic automata in the dual way.
    """

    def __init__(self, a: OmegaAutomaton, initial=None, buchi: Optional[bool] = None, flip: bool = False):
        self.a = a
        self.alphabet = a.alphabet
        self.buchi = a.kind.buchi if buchi is None else buchi
        self._init = sorted(a.initial if initial is None else initial)
        self._succ = [[tuple((p, a.is_alpha(q, x, p) != flip) for p in sorted(a.delta[q][x]))
                       for x in range(len(a.alphabet))] for q in range(a.states)]

    def initial(self):
        return self._init

    def successors(self, s, x):
        return self._succ[s][x]


def live_states(a: OmegaAutomaton, buchi: bool, flip: bool = False) -> frozenset:
    """States whose language is nonempty under the given reading of the flags."""
    n = a.states
    succ = [[] for _ in range(n)]
    good_edges = []
    for q, x, p in a.transitions():
        flag = a.is_alpha(q, x, p) != flip
        succ[q].append(p)
        if flag == buchi:
            good_edges.append((q, p))
    # Büchi: a cycle through a flagged edge.  Co-Büchi: a cycle of unflagged edges.
    if buchi:
        comps = tarjan(n, succ)
    else:
        sub = [[] for _ in range(n)]
        for q, p in good_edges:
            sub[q].append(p)
        comps = tarjan(n, sub)
    comp_of = [0] * n
    for i, c in enumerate(comps):
        for q in c:
            comp_of[q] = i
    seeds = {q for q, p in good_edges if comp_of[q] == comp_of[p]}
    pred = [[] for _ in range(n)]
    for q in range(n):
        for p in succ[q]:
            pred[p].append(q)
    return frozenset(reachable(pred, sorted(seeds)))


class RankComplement:
    """Büchi complement by level rankings, for transition-based acceptance.

    Phase one tracks the plain subset of live states.  At any point the
    run may guess a tight ranking (odd maximum ``r``, every odd rank up to
    ``r`` used) and from then on keeps ranks non-increasing along edges,
    strictly decreasing along alpha edges that leave odd-ranked states.
    The obligation set ``O`` holds even-ranked states since the last
    breakpoint; states with empty ``O`` are accepting.  Dead states
    (empty language) are dropped from subsets; they can never contribute
    an accepting run.
    """

    def __init__(self, a: OmegaAutomaton, initial=None, memo=None):
        if not a.kind.buchi:
            raise ValueError("rank complement needs Büchi acceptance")
        self.a = a
        self.alphabet = a.alphabet
        self.buchi = True
        self.live = live_states(a, True)
        self._init = tuple(sorted(q for q in (a.initial if initial is None else initial) if q in self.live))
        self._succ = [[tuple((p, a.is_alpha(q, x, p)) for p in sorted(a.delta[q][x]) if p in self.live)
                       for x in range(len(a.alphabet))] for q in range(a.states)]
        self._memo = {} if memo is None else memo

    EMPTY = ("r", (), (), (), -1)

    def initial(self):
        out = [("s", self._init)]
        out.extend(self._jumps(self._init))
        return out

    def _jumps(self, S):
        if not S:
            return [self.EMPTY]
        out = []
        for r in range(1, 2 * len(S), 2):
            for g in tight_rankings([r] * len(S), r):
                out.append(("r", S, g, (), r))
        return out

    def successors(self, s, x):
        key = (s, x)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        res = self._compute(s, x)
        self._memo[key] = res
        return res

    def _compute(self, s, x):
        if s[0] == "s":
            S = s[1]
            nxt = set()
            for q in S:
                for p, _ in self._succ[q][x]:
                    nxt.add(p)
            S2 = tuple(sorted(nxt))
            return [(("s", S2), False)] + [(t, False) for t in self._jumps(S2)]
        _, S, f, O, r = s
        flag = not O
        if not S:
            return [(self.EMPTY, True)]
        bound: Dict[int, int] = {}
        for q, rank in zip(S, f):
            for p, alpha in self._succ[q][x]:
                b = rank - 1 if alpha and rank % 2 == 1 else rank
                if b < bound.get(p, b + 1):
                    bound[p] = b
        if not bound:
            return [(self.EMPTY, flag)]
        S2 = tuple(sorted(bound))
        bounds = [bound[p] for p in S2]
        if O:
            tracked = set()
            for q in O:
                for p, _ in self._succ[q][x]:
                    tracked.add(p)
        else:
            tracked = None
        out = []
        for g in tight_rankings(bounds, r):
            O2 = tuple(p for p, rank in zip(S2, g) if rank % 2 == 0 and (tracked is None or p in tracked))
            out.append((("r", S2, g, O2, r), flag))
        return out


def tight_rankings(bounds: Sequence[int], r: int):
    """All rank tuples ``g`` with ``0 <= g[i] <= bounds[i]`` covering every odd number up to ``r``."""
    n = len(bounds)
    odds = list(range(1, r + 1, 2))
    if len(odds) > n:
        return []
    if n == 0:
        return [()]
    suffix_max = [-1] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_max[i] = max(bounds[i], suffix_max[i + 1])
    if r > suffix_max[0]:
        return []
    out = []
    g = [0] * n

    def rec(i, missing):
        if len(missing) > n - i:
            return
        if missing and max(missing) > suffix_max[i]:
            return
        if i == n:
            out.append(tuple(g))
            return
        for v in range(min(bounds[i], r) + 1):
            g[i] = v
            if v in missing:
                rec(i + 1, missing - {v})
            else:
                rec(i + 1, missing)

    rec(0, frozenset(odds))
    return out


class BreakpointComplement:
    """Deterministic Büchi automaton for the complement of a co-Büchi reading.

    States are ``(S, O)``: the reachable subset and the states reached from
    the last breakpoint along non-alpha edges only.  When ``O`` runs dry the
    transition is a breakpoint, which is accepting here (the co-Büchi input
    then has no run that avoids alpha from that point on).  ``flip`` reads
    a weak Büchi automaton as co-Büchi with complemented flags.
    """

    def __init__(self, a: OmegaAutomaton, flip: bool = False, initial=None, memo=None):
        self.a = a
        self.alphabet = a.alphabet
        self.buchi = True
        self.live = live_states(a, False, flip)
        init = a.initial if initial is None else initial
        S = tuple(sorted(q for q in init if q in self.live))
        self._init = (S, S)
        self._succ = [[tuple((p, a.is_alpha(q, x, p) != flip) for p in sorted(a.delta[q][x]) if p in self.live)
                       for x in range(len(a.alphabet))] for q in range(a.states)]
        self._memo = {} if memo is None else memo

    def initial(self):
        return [self._init]

    def successors(self, s, x):
        key = (s, x)
        hit = self._memo.get(key)
        if hit is None:
            S, O = s
            S2 = set()
            for q in S:
                for p, _ in self._succ[q][x]:
                    S2.add(p)
            T = set()
            for q in O:
                for p, alpha in self._succ[q][x]:
                    if not alpha:
                        T.add(p)
            S2 = tuple(sorted(S2))
            if T:
                hit = [((S2, tuple(sorted(T))), False)]
            else:
                hit = [((S2, S2), True)]
            self._memo[key] = hit
        return hit


class CoBuchiAsBuchi:
    """Büchi view of a co-Büchi view: guess the point after which alpha is never seen."""

    def __init__(self, v):
        self.v = v
        self.alphabet = v.alphabet
        self.buchi = True

    def initial(self):
        return [(s, 0) for s in self.v.initial()]

    def successors(self, s, x):
        q, mode = s
        out = []
        for p, flag in self.v.successors(q, x):
            if mode == 0:
                out.append(((p, 0), False))
                if not flag:
                    out.append(((p, 1), False))
            elif not flag:
                out.append(((p, 1), True))
        return out


class BuchiProduct:
    """Intersection of two Büchi views, alternating between their flags."""

    def __init__(self, v1, v2):
        self.v1, self.v2 = v1, v2
        self.alphabet = v1.alphabet
        self.buchi = True

    def initial(self):
        return [(s1, s2, 0) for s1 in self.v1.initial() for s2 in self.v2.initial()]

    def successors(self, s, x):
        s1, s2, t = s
        out = []
        succ2 = list(self.v2.successors(s2, x))
        for p1, f1 in self.v1.successors(s1, x):
            for p2, f2 in succ2:
                if t == 0:
                    out.append(((p1, p2, 1 if f1 else 0), False))
                else:
                    out.append(((p1, p2, 0 if f2 else 1), f2))
        return out


class CoBuchiProduct:
    """Intersection of two co-Büchi views: a product edge is alpha if either side is."""

    def __init__(self, v1, v2):
        self.v1, self.v2 = v1, v2
        self.alphabet = v1.alphabet
        self.buchi = False

    def initial(self):
        return [(s1, s2) for s1 in self.v1.initial() for s2 in self.v2.initial()]

    def successors(self, s, x):
        s1, s2 = s
        succ2 = list(self.v2.successors(s2, x))
        return [((p1, p2), f1 or f2) for p1, f1 in self.v1.successors(s1, x) for p2, f2 in succ2]


def product(v1, v2):
    """Intersection view; the result is co-Büchi only when both operands are."""
    if set(v1.alphabet) != set(v2.alphabet) or len(v1.alphabet) != len(v2.alphabet):
        raise ValueError(f"alphabet mismatch: {v1.alphabet.letters} vs {v2.alphabet.letters}")
    if v1.alphabet != v2.alphabet:
        raise ValueError("operands must list their letters in the same order; use align()")
    if not v1.buchi and not v2.buchi:
        return CoBuchiProduct(v1, v2)
    if not v1.buchi:
        v1 = CoBuchiAsBuchi(v1)
    if not v2.buchi:
        v2 = CoBuchiAsBuchi(v2)
    return BuchiProduct(v1, v2)


def complement_view(a: OmegaAutomaton, initial=None, memo=None):
    """Pick the cheapest complement construction that applies to ``a``."""
    det = a.is_deterministic() if initial is None else (
        len(initial) == 1 and all(len(s) == 1 for row in a.delta for s in row))
    if det:
        if is_weak(a):
            return ExplicitView(dualize_dww(a if initial is None else a.reroot(initial)))
        return ExplicitView(a, initial, buchi=not a.kind.buchi)
    if not a.kind.buchi:
        return BreakpointComplement(a, initial=initial, memo=memo)
    if is_weak(a):
        return BreakpointComplement(a, flip=True, initial=initial, memo=memo)
    return RankComplement(a, initial=initial, memo=memo)


# ---------------------------------------------------------------------------
# exploration and emptiness


@dataclass
class Explored:
    nodes: List[Hashable]
    init: List[int]
    edges: List[List[Tuple[int, int, bool]]]  # per node: (letter, target, flag)
    buchi: bool


def explore(view, budget: int = DEFAULT_BUDGET, what: str = "automaton") -> Explored:
    """Breadth-first materialization of everything reachable in ``view``."""
    index: Dict[Hashable, int] = {}
    nodes: List[Hashable] = []
    edges: List[List[Tuple[int, int, bool]]] = []
    queue = deque()

    def intern(s):
        i = index.get(s)
        if i is None:
            i = len(nodes)
            if i >= budget:
                raise BudgetExceeded(what, budget)
            index[s] = i
            nodes.append(s)
            edges.append([])
            queue.append(i)
        return i

    init = []
    for s in view.initial():
        i = intern(s)
        if i not in init:
            init.append(i)
    nletters = len(view.alphabet)
    while queue:
        i = queue.popleft()
        s = nodes[i]
        out = edges[i]
        for x in range(nletters):
            seen = set()
            for t, flag in view.successors(s, x):
                j = intern(t)
                if (j, flag) not in seen:
                    seen.add((j, flag))
                    out.append((x, j, flag))
    return Explored(nodes, init, edges, view.buchi)


def accepting_cycle(g: Explored) -> Optional[Tuple[List[int], List[int]]]:
    """Find an accepting lasso in an explored graph.

    Returns ``(prefix, period)`` as letter-index lists, or ``None`` when
    the language is empty.
    """
    n = len(g.nodes)
    if g.buchi:
        keep = [[w for _, w, _ in g.edges[v]] for v in range(n)]
    else:
        keep = [[w for _, w, f in g.edges[v] if not f] for v in range(n)]
    comps = tarjan(n, keep)
    comp_of = [0] * n
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    best = None
    for v in range(n):
        for x, w, f in g.edges[v]:
            if comp_of[v] != comp_of[w]:
                continue
            if f == g.buchi:
                best = (v, x, w)
                break
        if best:
            break
    if best is None:
        return None
    v, x, w = best
    anyedge = [[(a, t) for a, t, _ in g.edges[u]] for u in range(n)]
    if g.buchi:
        inner = anyedge
    else:
        inner = [[(a, t) for a, t, f in g.edges[u] if not f] for u in range(n)]
    comp = {u for u in comps[comp_of[v]]}
    prefix, _ = bfs_path(anyedge, g.init, {v})
    back, _ = bfs_path(inner, [w], {v}, allowed=comp)
    return prefix, [x] + back


def find_accepting_lasso(view, budget: int = DEFAULT_BUDGET, what: str = "product"):
    """Explore ``view`` and return an accepted lasso as ``(prefix, period)`` letter names."""
    g = explore(view, budget, what)
    found = accepting_cycle(g)
    if found is None:
        return None
    prefix, period = found
    return view.alphabet.decode(prefix), view.alphabet.decode(period)


def materialize(view, budget: int = DEFAULT_BUDGET, what: str = "automaton") -> OmegaAutomaton:
    """Build the explicit transition-based automaton of a view.

    Missing successors are sent to a fresh rejecting sink, flagged in the
    metadata.
    """
    g = explore(view, budget, what)
    n = len(g.nodes)
    nletters = len(view.alphabet)
    # the same triple may arise with both flags; keep the one that helps acceptance
    flags: Dict[Tuple[int, int, int], bool] = {}
    for v in range(n):
        for x, w, f in g.edges[v]:
            key = (v, x, w)
            if key in flags:
                flags[key] = (flags[key] or f) if view.buchi else (flags[key] and f)
            else:
                flags[key] = f
    covered = {(v, x) for v, x, _ in flags}
    sink = None
    if not g.init or len(covered) < n * nletters:
        sink = n
        for v in range(n):
            for x in range(nletters):
                if (v, x) not in covered:
                    flags[(v, x, sink)] = not view.buchi
        for x in range(nletters):
            flags[(sink, x, sink)] = not view.buchi
        n += 1
    init = g.init or [sink]
    alpha = frozenset(t for t, f in flags.items() if f)
    return OmegaAutomaton(as_alphabet(view.alphabet), n, frozenset(init), _freeze_delta(n, nletters, flags),
                          Kind.of(view.buchi, False), alpha_trans=alpha, sink=sink)
