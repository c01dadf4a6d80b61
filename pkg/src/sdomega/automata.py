"""Finite-word and omega automata: data model and structural operations.

States are dense integers ``0..states-1``.  Letters are referred to by
index internally; the :class:`Alphabet` maps names to indices.  All
automata are immutable; every operation returns a fresh object.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .graphs import reachable, topological_sccs

Transition = Tuple[int, int, int]  # (source, letter index, target)
Delta = Tuple[Tuple[FrozenSet[int], ...], ...]


class BudgetExceeded(RuntimeError):
    """A construction would need more states than the configured budget."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"budget-exceeded: {what} needs more than {budget} states")
        self.what = what
        self.budget = budget


DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class Alphabet:
    letters: Tuple[str, ...]

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must be nonempty")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in {letters}")
        for x in letters:
            if not isinstance(x, str) or not x or ";" in x or any(c.isspace() for c in x):
                raise ValueError(f"bad letter name {x!r}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(letters)})

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __contains__(self, x):
        return x in self._index

    def index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise ValueError(f"letter {letter!r} is not in the alphabet {self.letters}") from None

    def encode(self, word: Iterable[str]) -> Tuple[int, ...]:
        return tuple(self.index(x) for x in word)

    def decode(self, idx: Iterable[int]) -> Tuple[str, ...]:
        return tuple(self.letters[i] for i in idx)

    def with_letter(self, letter: str) -> "Alphabet":
        if letter in self:
            raise ValueError(f"letter {letter!r} already in alphabet")
        return Alphabet(self.letters + (letter,))

    def without(self, letter: str) -> "Alphabet":
        return Alphabet(x for x in self.letters if x != letter)


def as_alphabet(x) -> Alphabet:
    return x if isinstance(x, Alphabet) else Alphabet(x)


class Kind(enum.Enum):
    BUCHI_STATE = "BuchiState"
    BUCHI_TRANS = "BuchiTrans"
    COBUCHI_STATE = "CoBuchiState"
    COBUCHI_TRANS = "CoBuchiTrans"

    @property
    def buchi(self) -> bool:
        return self in (Kind.BUCHI_STATE, Kind.BUCHI_TRANS)

    @property
    def state_based(self) -> bool:
        return self in (Kind.BUCHI_STATE, Kind.COBUCHI_STATE)

    @staticmethod
    def of(buchi: bool, state_based: bool) -> "Kind":
        if buchi:
            return Kind.BUCHI_STATE if state_based else Kind.BUCHI_TRANS
        return Kind.COBUCHI_STATE if state_based else Kind.COBUCHI_TRANS

    def dual(self) -> "Kind":
        return Kind.of(not self.buchi, self.state_based)


def _freeze_delta(states: int, nletters: int, transitions: Iterable[Transition]) -> Delta:
    rows: List[List[set]] = [[set() for _ in range(nletters)] for _ in range(states)]
    for q, a, p in transitions:
        if not (0 <= q < states and 0 <= p < states):
            raise ValueError(f"transition ({q}, {a}, {p}) mentions a state outside 0..{states - 1}")
        if not 0 <= a < nletters:
            raise ValueError(f"transition ({q}, {a}, {p}) uses an unknown letter index")
        rows[q][a].add(p)
    return tuple(tuple(frozenset(s) for s in row) for row in rows)


def _check_ids(states: int, ids: Iterable[int], what: str):
    for q in ids:
        if not 0 <= q < states:
            raise ValueError(f"{what} mentions state {q} outside 0..{states - 1}")


class _AutomatonBase:
    """Shared helpers for :class:`Nfw` and :class:`OmegaAutomaton`."""

    alphabet: Alphabet
    states: int
    initial: FrozenSet[int]
    delta: Delta

    def successors(self, q: int, letter: int) -> FrozenSet[int]:
        return self.delta[q][letter]

    def post(self, qs: Iterable[int], letter: int) -> FrozenSet[int]:
        out = set()
        for q in qs:
            out |= self.delta[q][letter]
        return frozenset(out)

    def transitions(self) -> Iterator[Transition]:
        for q, row in enumerate(self.delta):
            for a, succ in enumerate(row):
                for p in sorted(succ):
                    yield (q, a, p)

    def missing(self) -> Optional[Tuple[int, int]]:
        """First ``(state, letter)`` pair without successors, if any."""
        for q, row in enumerate(self.delta):
            for a, succ in enumerate(row):
                if not succ:
                    return q, a
        return None

    def is_total(self) -> bool:
        return self.missing() is None

    def is_deterministic(self) -> bool:
        return len(self.initial) == 1 and all(len(s) == 1 for row in self.delta for s in row)

    def graph(self) -> List[List[int]]:
        """Plain successor lists, letters forgotten."""
        return [sorted(set().union(*row)) if row else [] for row in self.delta]

    def reachable_states(self) -> List[int]:
        return reachable(self.graph(), sorted(self.initial))


@dataclass(frozen=True)
class Nfw(_AutomatonBase):
    """Nondeterministic automaton on finite words.

    ``sink`` marks a completion sink added by :func:`complete`; it is
    metadata and does not take part in equality.
    """

    alphabet: Alphabet
    states: int
    initial: FrozenSet[int]
    delta: Delta
    accepting: FrozenSet[int]
    sink: Optional[int] = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", as_alphabet(self.alphabet))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if self.states < 1:
            raise ValueError("an automaton needs at least one state")
        if len(self.delta) != self.states or any(len(r) != len(self.alphabet) for r in self.delta):
            raise ValueError("transition table shape does not match states x letters")
        _check_ids(self.states, self.initial, "initial")
        _check_ids(self.states, self.accepting, "accepting")

    @classmethod
    def build(cls, alphabet, states: int, initial, transitions, accepting, sink=None, name="") -> "Nfw":
        """Build from ``(src, letter-name, dst)`` triples."""
        alphabet = as_alphabet(alphabet)
        trans = [(q, alphabet.index(x) if isinstance(x, str) else x, p) for q, x, p in transitions]
        return cls(alphabet, states, frozenset(initial), _freeze_delta(states, len(alphabet), trans),
                   frozenset(accepting), sink, name)

    @property
    def size(self) -> int:
        """State count, not counting a flagged completion sink."""
        return self.states - (self.sink is not None)

    def accepts(self, word: Iterable[str]) -> bool:
        cur = self.initial
        for x in word:
            cur = self.post(cur, self.alphabet.index(x))
            if not cur:
                return False
        return bool(cur & self.accepting)


@dataclass(frozen=True)
class OmegaAutomaton(_AutomatonBase):
    """Büchi or co-Büchi automaton with state- or transition-based acceptance.

    Metadata fields (``sink``, ``origin``, ``name``) are excluded from
    equality.  ``origin[i]`` records which state of an input automaton the
    state ``i`` was derived from, where a construction keeps that link.
    """

    alphabet: Alphabet
    states: int
    initial: FrozenSet[int]
    delta: Delta
    kind: Kind
    alpha_states: FrozenSet[int] = frozenset()
    alpha_trans: FrozenSet[Transition] = frozenset()
    sink: Optional[int] = field(default=None, compare=False)
    origin: Optional[Tuple[int, ...]] = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", as_alphabet(self.alphabet))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "alpha_states", frozenset(self.alpha_states))
        object.__setattr__(self, "alpha_trans", frozenset(self.alpha_trans))
        if self.states < 1:
            raise ValueError("an automaton needs at least one state")
        if len(self.delta) != self.states or any(len(r) != len(self.alphabet) for r in self.delta):
            raise ValueError("transition table shape does not match states x letters")
        if not self.initial:
            raise ValueError("initial state set must be nonempty")
        _check_ids(self.states, self.initial, "initial")
        hole = self.missing()
        if hole is not None:
            q, a = hole
            raise ValueError(f"transition relation is not total: state {q} has no successor "
                             f"on letter {self.alphabet[a]!r}")
        if self.kind.state_based:
            if self.alpha_trans:
                raise ValueError("state-based automaton must not carry accepting transitions")
            _check_ids(self.states, self.alpha_states, "alpha")
        else:
            if self.alpha_states:
                raise ValueError("transition-based automaton must not carry accepting states")
            for q, a, p in self.alpha_trans:
                if not (0 <= q < self.states and 0 <= a < len(self.alphabet)) or p not in self.delta[q][a]:
                    raise ValueError(f"accepting transition ({q}, {a}, {p}) is not a transition")

    @classmethod
    def build(cls, alphabet, states: int, initial, transitions, kind: Kind,
              alpha_states=(), alpha_trans=(), **meta) -> "OmegaAutomaton":
        """Build from ``(src, letter, dst)`` triples; letters by name or index."""
        alphabet = as_alphabet(alphabet)

        def idx(x):
            return alphabet.index(x) if isinstance(x, str) else x

        trans = [(q, idx(x), p) for q, x, p in transitions]
        at = frozenset((q, idx(x), p) for q, x, p in alpha_trans)
        return cls(alphabet, states, frozenset(initial), _freeze_delta(states, len(alphabet), trans),
                   kind, frozenset(alpha_states), at, **meta)

    def is_alpha(self, q: int, a: int, p: int) -> bool:
        """Whether the transition counts as visiting alpha.

        For state-based acceptance a transition counts when its source is
        an alpha state; a run visits alpha states infinitely often iff it
        leaves them infinitely often, so this is exact for both Büchi and
        co-Büchi.
        """
        if self.kind.state_based:
            return q in self.alpha_states
        return (q, a, p) in self.alpha_trans

    def reroot(self, q) -> "OmegaAutomaton":
        """Same automaton with initial set ``{q}`` (or the given set)."""
        init = frozenset([q]) if isinstance(q, int) else frozenset(q)
        return OmegaAutomaton(self.alphabet, self.states, init, self.delta, self.kind,
                              self.alpha_states, self.alpha_trans, self.sink, self.origin, self.name)

    def with_initial(self, init) -> "OmegaAutomaton":
        return self.reroot(init)


@dataclass(frozen=True)
class Lasso:
    """The ultimately periodic word ``prefix · period^ω``."""

    prefix: Tuple[str, ...]
    period: Tuple[str, ...]

    def __init__(self, prefix: Iterable[str], period: Iterable[str]):
        prefix, period = tuple(prefix), tuple(period)
        if not period:
            raise ValueError("lasso period must be nonempty")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    def __str__(self):
        return "lasso " + " ".join(self.prefix + (";",) + self.period)

    def letters(self) -> FrozenSet[str]:
        return frozenset(self.prefix) | frozenset(self.period)

    def unroll(self, length: int) -> Tuple[str, ...]:
        out = list(self.prefix[:length])
        i = 0
        while len(out) < length:
            out.append(self.period[i % len(self.period)])
            i += 1
        return tuple(out)

    @classmethod
    def parse(cls, text: str) -> "Lasso":
        body = text.strip()
        if body.startswith("lasso"):
            body = body[len("lasso"):]
        if ";" not in body:
            raise ValueError(f"not a lasso: {text!r}")
        u, v = body.split(";", 1)
        return cls(u.split(), v.split())


@dataclass(frozen=True)
class SccOrder:
    """SCCs in topological order (sources first) with a state -> index map."""

    components: Tuple[FrozenSet[int], ...]
    component_of: Tuple[int, ...]

    def __len__(self):
        return len(self.components)


# ---------------------------------------------------------------------------
# structural operations


def complete(n: Nfw) -> Nfw:
    """Make the transition relation total by adding a rejecting sink if needed."""
    if n.is_total():
        return n
    sink = n.states
    rows = [tuple(s if s else frozenset([sink]) for s in row) for row in n.delta]
    rows.append(tuple(frozenset([sink]) for _ in n.alphabet))
    return Nfw(n.alphabet, n.states + 1, n.initial, tuple(rows), n.accepting, sink=sink)


def _sccs(a, keep=None) -> SccOrder:
    succ = [[] for _ in range(a.states)]
    for q, x, p in a.transitions():
        if keep is None or keep(q, x, p):
            succ[q].append(p)
    comps = topological_sccs(a.states, succ)
    comp_of = [0] * a.states
    for i, c in enumerate(comps):
        for q in c:
            comp_of[q] = i
    return SccOrder(tuple(frozenset(c) for c in comps), tuple(comp_of))


def scc_order(a) -> SccOrder:
    """SCC decomposition of the whole transition graph, topologically sorted."""
    return _sccs(a)


def _require_tncw(a: OmegaAutomaton):
    if a.kind is not Kind.COBUCHI_TRANS:
        raise ValueError(f"expected a transition-based co-Büchi automaton, got {a.kind.value}")


def alpha_components(a: OmegaAutomaton) -> SccOrder:
    """SCCs of the graph that keeps only the non-accepting transitions."""
    _require_tncw(a)
    return _sccs(a, keep=lambda q, x, p: (q, x, p) not in a.alpha_trans)


def normalize(a: OmegaAutomaton) -> OmegaAutomaton:
    """Move every non-alpha transition that leaves its component into alpha."""
    _require_tncw(a)
    comp = alpha_components(a).component_of
    extra = {(q, x, p) for q, x, p in a.transitions()
             if (q, x, p) not in a.alpha_trans and comp[q] != comp[p]}
    if not extra:
        return a
    return OmegaAutomaton(a.alphabet, a.states, a.initial, a.delta, a.kind,
                          alpha_trans=a.alpha_trans | extra, sink=a.sink, origin=a.origin, name=a.name)


def to_transition_based(a: OmegaAutomaton, cobuchi_rule: str = "source_or_target") -> OmegaAutomaton:
    """Move acceptance from states to transitions on the same state space.

    Büchi: a transition is accepting iff it leaves an alpha state.
    Co-Büchi: by default iff it touches one (source or target);
    ``cobuchi_rule="target"`` uses entering transitions only.
    """
    if not a.kind.state_based:
        raise ValueError("automaton is already transition-based")
    if cobuchi_rule not in ("source_or_target", "target"):
        raise ValueError(f"unknown co-Büchi rule {cobuchi_rule!r}")
    al = a.alpha_states
    if a.kind.buchi:
        trans = {t for t in a.transitions() if t[0] in al}
    elif cobuchi_rule == "target":
        trans = {t for t in a.transitions() if t[2] in al}
    else:
        trans = {t for t in a.transitions() if t[0] in al or t[2] in al}
    return OmegaAutomaton(a.alphabet, a.states, a.initial, a.delta, Kind.of(a.kind.buchi, False),
                          alpha_trans=frozenset(trans), origin=a.origin, name=a.name)


def to_state_based(a: OmegaAutomaton) -> OmegaAutomaton:
    """Split each state into copies entered by accepting / non-accepting moves.

    Only reachable copies are kept, numbered in order of ``(state, copy)``.
    """
    if a.kind.state_based:
        raise ValueError("automaton is already state-based")
    start = [(q, 0) for q in sorted(a.initial)]
    seen = set(start)
    stack = list(start)
    while stack:
        q, _ = stack.pop()
        for x in range(len(a.alphabet)):
            for p in a.delta[q][x]:
                node = (p, 1 if (q, x, p) in a.alpha_trans else 0)
                if node not in seen:
                    seen.add(node)
                    stack.append(node)
    nodes = sorted(seen)
    ids = {v: i for i, v in enumerate(nodes)}
    trans = []
    for (q, b) in nodes:
        for x in range(len(a.alphabet)):
            for p in a.delta[q][x]:
                trans.append((ids[(q, b)], x, ids[(p, 1 if (q, x, p) in a.alpha_trans else 0)]))
    alpha = {ids[v] for v in nodes if v[1] == 1}
    origin = tuple(q if a.origin is None else a.origin[q] for q, _ in nodes)
    return OmegaAutomaton(a.alphabet, len(nodes), frozenset(ids[v] for v in start),
                          _freeze_delta(len(nodes), len(a.alphabet), trans),
                          Kind.of(a.kind.buchi, True), alpha_states=frozenset(alpha), origin=origin, name=a.name)


def is_weak(a: OmegaAutomaton) -> bool:
    """Every SCC is uniformly accepting or rejecting."""
    order = scc_order(a)
    comp = order.component_of
    if a.kind.state_based:
        return all(c <= a.alpha_states or not (c & a.alpha_states) for c in order.components)
    flavour: Dict[int, bool] = {}
    for q, x, p in a.transitions():
        if comp[q] != comp[p]:
            continue
        acc = (q, x, p) in a.alpha_trans
        if flavour.setdefault(comp[q], acc) != acc:
            return False
    return True


def dualize_dww(d: OmegaAutomaton) -> OmegaAutomaton:
    """Complement a deterministic weak automaton by swapping alpha and its complement."""
    if not d.is_deterministic():
        raise ValueError("dualize_dww needs a deterministic automaton")
    if not is_weak(d):
        raise ValueError("dualize_dww needs a weak automaton")
    if d.kind.state_based:
        alpha = frozenset(range(d.states)) - d.alpha_states
        return OmegaAutomaton(d.alphabet, d.states, d.initial, d.delta, d.kind, alpha_states=alpha,
                              sink=d.sink, origin=d.origin, name=d.name)
    trans = frozenset(d.transitions()) - d.alpha_trans
    return OmegaAutomaton(d.alphabet, d.states, d.initial, d.delta, d.kind, alpha_trans=trans,
                          sink=d.sink, origin=d.origin, name=d.name)


def prune_omega(a: OmegaAutomaton) -> OmegaAutomaton:
    """Drop unreachable states, keeping the relative order of the rest."""
    keep = sorted(a.reachable_states())
    if len(keep) == a.states:
        return a
    ids = {q: i for i, q in enumerate(keep)}
    trans = [(ids[q], x, ids[p]) for q, x, p in a.transitions() if q in ids]
    at = frozenset((ids[q], x, ids[p]) for q, x, p in a.alpha_trans if q in ids)
    origin = tuple(q if a.origin is None else a.origin[q] for q in keep)
    return OmegaAutomaton(a.alphabet, len(keep), frozenset(ids[q] for q in a.initial),
                          _freeze_delta(len(keep), len(a.alphabet), trans), a.kind,
                          frozenset(ids[q] for q in a.alpha_states if q in ids), at,
                          sink=ids.get(a.sink) if a.sink is not None else None, origin=origin, name=a.name)


def prune_nfw(n: Nfw) -> Nfw:
    """Drop unreachable states of a finite-word automaton."""
    keep = sorted(n.reachable_states())
    if len(keep) == n.states:
        return n
    ids = {q: i for i, q in enumerate(keep)}
    trans = [(ids[q], x, ids[p]) for q, x, p in n.transitions() if q in ids]
    return Nfw(n.alphabet, len(keep), frozenset(ids[q] for q in n.initial),
               _freeze_delta(len(keep), len(n.alphabet), trans),
               frozenset(ids[q] for q in n.accepting if q in ids),
               sink=ids.get(n.sink) if n.sink is not None else None)


def universal_automaton(alphabet, kind: Kind = Kind.BUCHI_TRANS) -> OmegaAutomaton:
    """One state, all self-loops, accepting every word."""
    alphabet = as_alphabet(alphabet)
    trans = [(0, x, 0) for x in range(len(alphabet))]
    if kind.state_based:
        alpha = {0} if kind.buchi else set()
        return OmegaAutomaton.build(alphabet, 1, {0}, trans, kind, alpha_states=alpha)
    return OmegaAutomaton.build(alphabet, 1, {0}, trans, kind, alpha_trans=trans if kind.buchi else ())


def empty_automaton(alphabet, kind: Kind = Kind.BUCHI_TRANS) -> OmegaAutomaton:
    """One state, all self-loops, accepting nothing."""
    alphabet = as_alphabet(alphabet)
    trans = [(0, x, 0) for x in range(len(alphabet))]
    if kind.state_based:
        alpha = set() if kind.buchi else {0}
        return OmegaAutomaton.build(alphabet, 1, {0}, trans, kind, alpha_states=alpha)
    return OmegaAutomaton.build(alphabet, 1, {0}, trans, kind, alpha_trans=() if kind.buchi else trans)


def align(a: OmegaAutomaton, alphabet: Alphabet) -> OmegaAutomaton:
    """Re-index ``a`` over ``alphabet``, which must hold the same letters."""
    if a.alphabet == alphabet:
        return a
    if set(a.alphabet) != set(alphabet):
        raise ValueError(f"alphabet mismatch: {a.alphabet.letters} vs {alphabet.letters}")
    perm = [a.alphabet.index(x) for x in alphabet]
    delta = tuple(tuple(row[perm[i]] for i in range(len(alphabet))) for row in a.delta)
    inv = {old: new for new, old in enumerate(perm)}
    at = frozenset((q, inv[x], p) for q, x, p in a.alpha_trans)
    return OmegaAutomaton(alphabet, a.states, a.initial, delta, a.kind, a.alpha_states, at,
                          sink=a.sink, origin=a.origin, name=a.name)

