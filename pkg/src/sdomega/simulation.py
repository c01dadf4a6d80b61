"""Fair simulation between states of one omega automaton.

If ``s`` fair-simulates ``q`` then ``L(q) ⊆ L(s)``.  The game is solved
in polynomial time, so it serves as a cheap certificate before falling
back to complementation.  The converse fails in general: a failed game
says nothing about the languages.

Spoiler moves from ``q`` and duplicator answers from ``s`` on the same
letter.  Duplicator wins a play when the spoiler run being accepting
implies the duplicator run is accepting.  With transition flags ``fa``
(spoiler) and ``fb`` (duplicator) that is ``GF fa -> GF fb`` for Büchi
and ``GF fb -> GF fa`` for co-Büchi; spoiler thus plays a one-pair Rabin
objective ``GF good ∧ FG ¬bad`` solved by the nested fixpoint below.
"""

from __future__ import annotations

from collections import deque
from typing import FrozenSet, List, Tuple

from .automata import OmegaAutomaton


def fair_simulation(a: OmegaAutomaton) -> FrozenSet[Tuple[int, int]]:
    """All pairs ``(q, s)`` such that ``s`` fair-simulates ``q``."""
    n, k = a.states, len(a.alphabet)
    succ: List[List[int]] = []
    owner: List[bool] = []  # True = spoiler
    good: List[bool] = []
    bad: List[bool] = []
    ids = {}

    def node(key, spoiler, g=False, b=False):
        i = ids.get(key)
        if i is None:
            i = ids[key] = len(succ)
            succ.append([])
            owner.append(spoiler)
            good.append(g)
            bad.append(b)
        return i

    buchi = a.kind.buchi
    # spoiler nodes ("S", q, s, fa, fb); duplicator nodes ("D", q, s, x, q', fa)
    for q in range(n):
        for s in range(n):
            for fa in (False, True):
                for fb in (False, True):
                    g, b = (fa, fb) if buchi else (fb, fa)
                    node(("S", q, s, fa, fb), True, g, b)
    for (tag, q, s, fa0, fb0), v in list(ids.items()):
        for x in range(k):
            for q2 in a.delta[q][x]:
                fa = a.is_alpha(q, x, q2)
                d = node(("D", q, s, x, q2, fa), False)
                succ[v].append(d)
                if not succ[d]:
                    for s2 in a.delta[s][x]:
                        succ[d].append(ids[("S", q2, s2, fa, a.is_alpha(s, x, s2))])
    total = len(succ)
    pred: List[List[int]] = [[] for _ in range(total)]
    for v in range(total):
        for w in succ[v]:
            pred[w].append(v)

    def attractor(seed, allowed=None):
        """Spoiler attractor of ``seed`` through nodes in ``allowed`` (all if None)."""
        inside = [False] * total
        count = [len(succ[v]) for v in range(total)]
        queue = deque()
        for v in seed:
            if not inside[v]:
                inside[v] = True
                queue.append(v)
        while queue:
            w = queue.popleft()
            for v in pred[w]:
                if inside[v] or (allowed is not None and not allowed[v]):
                    continue
                if owner[v]:
                    inside[v] = True
                    queue.append(v)
                else:
                    count[v] -= 1
                    if count[v] == 0:
                        inside[v] = True
                        queue.append(v)
        return inside

    not_bad = [not b for b in bad]
    win = [False] * total
    while True:
        escape = attractor([v for v in range(total) if win[v]])
        z = [True] * total
        while True:
            seed = [v for v in range(total) if escape[v] or
                    (good[v] and not bad[v] and any(z[w] for w in succ[v]))]
            t = attractor(seed, not_bad)
            if t == z:
                break
            z = t
        if z == win:
            break
        win = z
    return frozenset((q, s) for q in range(n) for s in range(n)
                     if not win[ids[("S", q, s, False, False)]])
