"""Co-Büchi encodings of finite-word languages and the reverse extraction.

``encode_bowtie`` turns an NFW for ``R`` into an SD transition-based
co-Büchi automaton for ``⋈$(R)``: words with finitely many ``$``, or with
a suffix in ``($·R)^ω``.  ``extract_nfw_bowtie`` reads an NFW for ``R``
back off any normal automaton for that language.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple

from .automata import (Kind, Nfw, OmegaAutomaton, _freeze_delta, alpha_components, normalize, prune_omega)
from .buchi import DOLLAR, _dollar_alphabet, _require_total
from .finite import coaccessible, subset_construct
from .graphs import tarjan


class NoTrapFound(ValueError):
    """No state can absorb the rejecting sink for the given bad infix."""


@dataclass(frozen=True)
class BadInfixWitness:
    """A finite word no member of ``R`` contains; ``trap_state`` is filled in once located."""

    word: Tuple[str, ...]
    trap_state: Optional[int] = None


def encode_bowtie(n: Nfw, dollar: str = DOLLAR) -> OmegaAutomaton:
    """SD co-Büchi automaton for ``⋈$(L(n))`` on the same states.

    ``$`` resets to the initial states; the reset is accepting-bad
    (in alpha) exactly when it leaves a non-accepting state.
    """
    _require_total(n)
    sigma = _dollar_alphabet(n, dollar)
    d = len(n.alphabet)
    trans = list(n.transitions())
    alpha = set()
    for s in range(n.states):
        for p in n.initial:
            trans.append((s, d, p))
            if s not in n.accepting:
                alpha.add((s, d, p))
    return OmegaAutomaton(sigma, n.states, n.initial, _freeze_delta(n.states, len(sigma), trans),
                          Kind.COBUCHI_TRANS, alpha_trans=frozenset(alpha))


def encode_bowtie_statebased(n: Nfw, dollar: str = DOLLAR) -> OmegaAutomaton:
    """State-based variant with one extra alpha state ``p`` that acts like the initial states.

    Non-accepting states move to ``p`` on ``$``; accepting ones to the
    initial states.  ``p`` copies the moves of the initial states,
    including on ``$``.
    """
    _require_total(n)
    sigma = _dollar_alphabet(n, dollar)
    d = len(n.alphabet)
    p = n.states
    trans = list(n.transitions())
    for s in range(n.states):
        targets = sorted(n.initial) if s in n.accepting else [p]
        trans.extend((s, d, t) for t in targets)
    for x in range(d):
        trans.extend((p, x, t) for t in n.post(n.initial, x))
    dollar_targets = set()
    for q0 in n.initial:
        dollar_targets |= set(n.initial) if q0 in n.accepting else {p}
    trans.extend((p, d, t) for t in sorted(dollar_targets))
    return OmegaAutomaton(sigma, n.states + 1, n.initial, _freeze_delta(n.states + 1, len(sigma), trans),
                          Kind.COBUCHI_STATE, alpha_states=frozenset([p]))


def _prepare(a: OmegaAutomaton, dollar: str):
    if a.kind is not Kind.COBUCHI_TRANS:
        raise ValueError(f"expected a transition-based co-Büchi automaton, got {a.kind.value}")
    if dollar not in a.alphabet:
        raise ValueError(f"automaton alphabet lacks {dollar!r}")
    a = normalize(prune_omega(a))
    sigma = a.alphabet.without(dollar)
    sig = [a.alphabet.index(x) for x in sigma]
    return a, sigma, sig, a.alphabet.index(dollar)


def extract_nfw_bowtie(a: OmegaAutomaton, dollar: str = DOLLAR) -> Nfw:
    """NFW for ``R`` with ``|a| + 1`` states from a co-Büchi automaton for ``⋈$(R)``.

    ``a`` is pruned to reachable states and normalized first.  Initial
    states are targets of non-alpha ``$``-moves, accepting states their
    sources.  Letters whose moves are all in alpha lead to a rejecting
    sink, which is the last state.
    """
    a, sigma, sig, dol = _prepare(a, dollar)
    rej = a.states
    trans = []
    init, acc = set(), set()
    for q in range(a.states):
        for p in a.delta[q][dol]:
            if (q, dol, p) not in a.alpha_trans:
                init.add(p)
                acc.add(q)
        for x, ax in enumerate(sig):
            good = [p for p in a.delta[q][ax] if (q, ax, p) not in a.alpha_trans]
            trans.extend((q, x, p) for p in (good or [rej]))
    trans.extend((rej, x, rej) for x in range(len(sigma)))
    if not init:
        init = {rej}
    return Nfw(sigma, a.states + 1, frozenset(init), _freeze_delta(a.states + 1, len(sigma), trans),
               frozenset(acc))


def _trap_candidates(a: OmegaAutomaton, word_idx, dol):
    """States with a non-alpha run on ``word^ω`` inside a component free of ``$``-moves."""
    k = len(word_idx)
    n = a.states
    comp = alpha_components(a).component_of
    dollar_comps = {comp[q] for q in range(n) for p in a.delta[q][dol]
                    if (q, dol, p) not in a.alpha_trans and comp[q] == comp[p]}
    ids = {}
    nodes = []
    for q in range(n):
        for i in range(k):
            ids[(q, i)] = len(nodes)
            nodes.append((q, i))
    succ = [[] for _ in nodes]
    for (q, i), v in ids.items():
        x = word_idx[i]
        for p in a.delta[q][x]:
            if (q, x, p) not in a.alpha_trans:
                succ[v].append(ids[(p, (i + 1) % k)])
    cyclic = set()
    for c in tarjan(len(nodes), succ):
        if len(c) > 1 or c[0] in succ[c[0]]:
            cyclic.update(c)
    return [q for q in range(n) if ids[(q, 0)] in cyclic and comp[q] not in dollar_comps]


def bad_infix_optimize(a: OmegaAutomaton, n: Nfw, witness: BadInfixWitness, dollar: str = DOLLAR) -> Nfw:
    """Reuse a trapped state of ``a`` as the rejecting sink of ``n``, saving one state.

    ``n`` must be ``extract_nfw_bowtie(a)``.  The trap is a state with a
    non-alpha run on ``word^ω`` inside a component without ``$``-moves;
    such states are unreachable in ``n``.
    """
    a, sigma, sig, dol = _prepare(a, dollar)
    if n.states != a.states + 1:
        raise ValueError("n does not match the extraction of a")
    word = witness.word or (sigma[0],)
    word_idx = [a.alphabet.index(x) for x in word]
    candidates = _trap_candidates(a, word_idx, dol)
    if not candidates:
        raise NoTrapFound(f"no state of the automaton is trapped by {' '.join(word)!r}")
    q = candidates[0]
    rej = a.states
    if q in n.initial or q in n.accepting:
        raise NoTrapFound(f"state {q} is used by the extracted automaton")

    def redirect(p):
        return q if p == rej else p

    trans = []
    for s in range(a.states):
        for x in range(len(sigma)):
            if s == q:
                trans.append((s, x, q))
            else:
                trans.extend((s, x, redirect(p)) for p in n.delta[s][x])
    init = frozenset(redirect(p) for p in n.initial)
    return Nfw(sigma, a.states, init, _freeze_delta(a.states, len(sigma), trans), n.accepting)


def trap_state(a: OmegaAutomaton, witness: BadInfixWitness, dollar: str = DOLLAR) -> Optional[int]:
    """The state :func:`bad_infix_optimize` would use, in the normalized pruned automaton."""
    a, sigma, _, dol = _prepare(a, dollar)
    word = witness.word or (sigma[0],)
    c = _trap_candidates(a, [a.alphabet.index(x) for x in word], dol)
    return c[0] if c else None


def has_bad_infix(r: Nfw, bound: Optional[int] = -1) -> Optional[BadInfixWitness]:
    """Shortest word that no word of ``L(r)`` contains, searched breadth first.

    A word ``x`` is bad when, from every reachable state of the
    determinized ``r``, reading ``x`` leads where no accepting state is
    reachable.  The search runs over sets of current states, so it ends
    on its own; ``bound`` additionally caps the word length.  The default
    ``-1`` means ``2·|DFW| + 2``; ``None`` means no cap.
    """
    d = subset_construct(r)
    if bound == -1:
        bound = 2 * d.states + 2
    dead = frozenset(range(d.states)) - coaccessible(d)
    start = frozenset(d.reachable_states())
    step = [[next(iter(d.delta[q][x])) for x in range(len(d.alphabet))] for q in range(d.states)]
    parent = {start: None}
    queue = deque([(start, 0)])
    while queue:
        S, depth = queue.popleft()
        if S <= dead:
            word = []
            node = S
            while parent[node] is not None:
                x, node = parent[node]
                word.append(d.alphabet[x])
            return BadInfixWitness(tuple(reversed(word)))
        if bound is not None and depth >= bound:
            continue
        for x in range(len(d.alphabet)):
            T = frozenset(step[q][x] for q in S)
            if T not in parent:
                parent[T] = (x, S)
                queue.append((T, depth + 1))
    return None
