"""Small graph algorithms over adjacency lists indexed by dense integer ids."""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, List, Optional, Sequence


def tarjan(n: int, succ: Sequence[Iterable[int]]) -> List[List[int]]:
    """Strongly connected components of the graph ``0..n-1``.

    Iterative, so deep graphs do not hit the recursion limit.  Components
    come out in reverse topological order (sinks first), which is the
    natural Tarjan order.
    """
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    out: List[List[int]] = []
    counter = 0
    adj = [list(s) for s in succ]

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
    return out


def topological_sccs(n: int, succ: Sequence[Iterable[int]]) -> List[List[int]]:
    """SCCs in topological order, sources first, ties broken by smallest id."""
    comps = tarjan(n, succ)
    comp_of = [0] * n
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    indeg = [0] * len(comps)
    edges = [set() for _ in comps]
    for v in range(n):
        for w in succ[v]:
            a, b = comp_of[v], comp_of[w]
            if a != b and b not in edges[a]:
                edges[a].add(b)
                indeg[b] += 1
    heap = [(comps[c][0], c) for c in range(len(comps)) if indeg[c] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, c = heapq.heappop(heap)
        order.append(comps[c])
        for d in edges[c]:
            indeg[d] -= 1
            if indeg[d] == 0:
                heapq.heappush(heap, (comps[d][0], d))
    return order


def reachable(succ: Sequence[Iterable[int]], sources: Iterable[int]) -> List[int]:
    """Ids reachable from ``sources`` (inclusive), in BFS discovery order."""
    seen = set()
    order = []
    queue = deque()
    for s in sources:
        if s not in seen:
            seen.add(s)
            order.append(s)
            queue.append(s)
    while queue:
        v = queue.popleft()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def bfs_path(succ_labelled, sources: Iterable[int], targets, allowed=None) -> Optional[list]:
    """Shortest path from any source to any target.

    ``succ_labelled[v]`` yields ``(label, w)`` pairs.  Returns the list of
    labels along the path together with the endpoint as ``(labels, end)``,
    or ``None``.  ``allowed`` optionally restricts the visited nodes.
    """
    parent = {}
    queue = deque()
    for s in sources:
        if s not in parent and (allowed is None or s in allowed):
            parent[s] = None
            queue.append(s)
    while queue:
        v = queue.popleft()
        if v in targets:
            end = v
            labels = []
            while parent[v] is not None:
                label, v = parent[v]
                labels.append(label)
            labels.reverse()
            return labels, end
        for label, w in succ_labelled[v]:
            if w in parent or (allowed is not None and w not in allowed):
                continue
            parent[w] = (label, v)
            queue.append(w)
    return None
