"""Finite-word automata utilities: determinization, minimization, equivalence."""

from __future__ import annotations

from collections import deque
from typing import Dict, FrozenSet, List, Optional, Tuple

from .automata import Nfw, _freeze_delta, as_alphabet


def subset_construct(n: Nfw) -> Nfw:
    """Deterministic, total automaton over reachable subsets, numbered in BFS order."""
    start = frozenset(n.initial)
    index: Dict[FrozenSet[int], int] = {start: 0}
    order = [start]
    queue = deque([start])
    trans = []
    while queue:
        S = queue.popleft()
        i = index[S]
        for x in range(len(n.alphabet)):
            T = n.post(S, x)
            j = index.get(T)
            if j is None:
                j = index[T] = len(order)
                order.append(T)
                queue.append(T)
            trans.append((i, x, j))
    acc = {index[S] for S in order if S & n.accepting}
    return Nfw(n.alphabet, len(order), frozenset([0]), _freeze_delta(len(order), len(n.alphabet), trans),
               frozenset(acc))


def _require_dfw(d: Nfw):
    if not d.is_deterministic():
        raise ValueError("expected a deterministic total automaton")


def dfw_minimize(d: Nfw) -> Nfw:
    """Minimal DFW by Hopcroft partition refinement, states in BFS order from the start."""
    _require_dfw(d)
    keep = sorted(d.reachable_states())
    ids = {q: i for i, q in enumerate(keep)}
    n = len(keep)
    k = len(d.alphabet)
    step = [[ids[next(iter(d.delta[q][x]))] for x in range(k)] for q in keep]
    acc = {ids[q] for q in keep if q in d.accepting}

    inverse: List[List[List[int]]] = [[[] for _ in range(n)] for _ in range(k)]
    for q in range(n):
        for x in range(k):
            inverse[x][step[q][x]].append(q)

    blocks: List[set] = [b for b in (set(acc), set(range(n)) - acc) if b]
    block_of = [0] * n
    for bi, b in enumerate(blocks):
        for q in b:
            block_of[q] = bi
    work = deque((bi, x) for bi in range(len(blocks)) for x in range(k))
    queued = set(work)
    while work:
        bi, x = work.popleft()
        queued.discard((bi, x))
        splitter = set()
        for q in blocks[bi]:
            splitter.update(inverse[x][q])
        touched: Dict[int, set] = {}
        for q in splitter:
            touched.setdefault(block_of[q], set()).add(q)
        for cj, inside in touched.items():
            block = blocks[cj]
            if len(inside) == len(block):
                continue
            rest = block - inside
            blocks[cj] = inside
            blocks.append(rest)
            new = len(blocks) - 1
            for q in rest:
                block_of[q] = new
            for y in range(k):
                if (cj, y) in queued:
                    work.append((new, y))
                    queued.add((new, y))
                else:
                    smaller = cj if len(inside) <= len(rest) else new
                    work.append((smaller, y))
                    queued.add((smaller, y))

    start = block_of[ids[next(iter(d.initial))]]
    canon = {start: 0}
    order = [start]
    queue = deque([start])
    rep = {}
    for q in range(n):
        rep.setdefault(block_of[q], q)
    while queue:
        b = queue.popleft()
        for x in range(k):
            c = block_of[step[rep[b]][x]]
            if c not in canon:
                canon[c] = len(order)
                order.append(c)
                queue.append(c)
    trans = [(canon[b], x, canon[block_of[step[rep[b]][x]]]) for b in order for x in range(k)]
    accepting = {canon[b] for b in order if rep[b] in acc}
    return Nfw(d.alphabet, len(order), frozenset([0]), _freeze_delta(len(order), k, trans), frozenset(accepting))


def nfw_equivalent(a: Nfw, b: Nfw) -> Optional[Tuple[str, ...]]:
    """``None`` if the languages agree, else a shortest word in exactly one of them."""
    if set(a.alphabet) != set(b.alphabet):
        raise ValueError(f"alphabet mismatch: {a.alphabet.letters} vs {b.alphabet.letters}")
    letters = a.alphabet.letters
    bx = [b.alphabet.index(x) for x in letters]
    start = (frozenset(a.initial), frozenset(b.initial))
    parent = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        S, T = node
        if bool(S & a.accepting) != bool(T & b.accepting):
            word = []
            while parent[node] is not None:
                x, node = parent[node]
                word.append(letters[x])
            return tuple(reversed(word))
        for x in range(len(letters)):
            nxt = (a.post(S, x), b.post(T, bx[x]))
            if nxt not in parent:
                parent[nxt] = (x, node)
                queue.append(nxt)
    return None


def complement_nfw(n: Nfw) -> Nfw:
    """DFW for the complement language."""
    d = subset_construct(n)
    return Nfw(d.alphabet, d.states, d.initial, d.delta, frozenset(range(d.states)) - d.accepting)


def universal_nfw(alphabet) -> Nfw:
    alphabet = as_alphabet(alphabet)
    return Nfw.build(alphabet, 1, {0}, [(0, x, 0) for x in range(len(alphabet))], {0})


def empty_nfw(alphabet) -> Nfw:
    alphabet = as_alphabet(alphabet)
    return Nfw.build(alphabet, 1, {0}, [(0, x, 0) for x in range(len(alphabet))], ())


def is_universal_nfw(n: Nfw) -> bool:
    return nfw_equivalent(n, universal_nfw(n.alphabet)) is None


def is_empty_nfw(n: Nfw) -> bool:
    return nfw_equivalent(n, empty_nfw(n.alphabet)) is None


def coaccessible(d: Nfw) -> FrozenSet[int]:
    """States from which some accepting state is reachable."""
    pred = [[] for _ in range(d.states)]
    for q, _, p in d.transitions():
        pred[p].append(q)
    seen = set(d.accepting)
    stack = list(seen)
    while stack:
        p = stack.pop()
        for q in pred[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return frozenset(seen)
