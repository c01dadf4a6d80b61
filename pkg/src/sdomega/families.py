"""Concrete automaton families used as lower-bound and round-trip fixtures.

Letters ``"1"`` .. ``"n"`` stand for the numbers of ``[n]``; ``"#"`` and
``"$"`` are separators.  Binary families use ``"0"`` and ``"1"``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .automata import Kind, Nfw, OmegaAutomaton

MAX_N = 12


class Family(enum.Enum):
    NFW_GOOD = "nfw-good"
    NFW_GOOD_NODOLLAR = "nfw-good-nodollar"
    TDBW_DN = "tdbw-dn"
    TDCW_DN = "tdcw-dn"
    DFW_FLD = "dfw-fld"
    NFW_DIST = "nfw-dist"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")

    def build(self) -> Union[Nfw, OmegaAutomaton]:
        return _BUILDERS[self.family](self.n)


def _numbers(n):
    return [str(i) for i in range(1, n + 1)]


def _check_n(n, limit=None):
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if limit is not None and n > limit:
        raise ValueError(f"n = {n} exceeds the supported bound {limit}")


def _good_words(n: int, dollar: bool) -> Nfw:
    _check_n(n)
    nums = _numbers(n)
    alphabet = nums + ["#"] + (["$"] if dollar else [])
    q0 = 0

    def g(i, stage):  # gadget state for final letter i (1-based), stage 1..3
        return 1 + 3 * (i - 1) + (stage - 1)

    acc, sink = 3 * n + 1, 3 * n + 2
    moves = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            moves[(g(i, 1), str(j))] = [g(i, 2) if j == i else g(i, 1)]
            moves[(g(i, 2), str(j))] = [g(i, 2)]
        moves[(g(i, 2), "#")] = [g(i, 3)]
        moves[(g(i, 3), str(i))] = [acc]
    if dollar:
        moves[(q0, "$")] = [g(i, 1) for i in range(1, n + 1)]
    else:
        for j in range(1, n + 1):
            moves[(q0, str(j))] = [g(i, 2) if i == j else g(i, 1) for i in range(1, n + 1)]
    trans = []
    for q in range(3 * n + 3):
        for x in alphabet:
            trans.extend((q, x, p) for p in moves.get((q, x), [sink]))
    return Nfw.build(alphabet, 3 * n + 3, {q0}, trans, {acc})


def nfw_good_words(n: int) -> Nfw:
    """NFW with ``3n + 3`` states for the words ``$·x·#·i`` where ``x ∈ [n]⁺`` contains ``i``.

    State 0 reads ``$`` and guesses the final letter ``i``.  Each ``i``
    has three states: waiting for ``i`` inside ``x``, having seen it, and
    having read ``#``.  State ``3n+1`` accepts and ``3n+2`` is the
    rejecting sink; the sink is included in the count.
    """
    return _good_words(n, dollar=True)


def nfw_good_words_nodollar(n: int) -> Nfw:
    """As :func:`nfw_good_words` for the words ``x·#·i``; state 0 guesses on the first number."""
    return _good_words(n, dollar=False)


def _subset_ids(n):
    # <S, c> -> mask, <S, a> -> 2^n + mask; <∅, c> is state 0
    return (lambda mask: mask), (lambda mask: (1 << n) + mask)


def tdbw_dn(n: int) -> OmegaAutomaton:
    """Deterministic transition-based Büchi automaton with ``2^(n+1)`` states for ∞ of the good words.

    States ``<S, a>`` accumulate the numbers read since the last ``$``;
    ``<S, c>`` has just read ``#`` and accepts on a number in ``S``.
    State ids: ``<S, c>`` is the bitmask of ``S``, ``<S, a>`` is ``2^n``
    plus the bitmask; the initial state ``<∅, c>`` is 0.
    """
    _check_n(n, MAX_N)
    nums = _numbers(n)
    alphabet = nums + ["#", "$"]
    c, a = _subset_ids(n)
    trans, alpha = [], []
    for mask in range(1 << n):
        for i, x in enumerate(nums):
            trans.append((a(mask), x, a(mask | (1 << i))))
            t = (c(mask), x, c(0))
            trans.append(t)
            if mask >> i & 1:
                alpha.append(t)
        trans.append((a(mask), "#", c(mask)))
        trans.append((c(mask), "#", c(0)))
        trans.append((a(mask), "$", a(0)))
        trans.append((c(mask), "$", a(0)))
    return OmegaAutomaton.build(alphabet, 1 << (n + 1), {c(0)}, trans, Kind.BUCHI_TRANS, alpha_trans=alpha,
                                name=f"tdbw-dn-{n}")


def tdcw_dn(n: int) -> OmegaAutomaton:
    """Deterministic transition-based co-Büchi automaton with ``2^(n+1) + 1`` states.

    It accepts words with finitely many ``$`` or with a suffix made of
    good words ``$·x·#·i``.  Ids as in :func:`tdbw_dn`; the last state is
    ``q_pass``, entered without alpha when the check after ``#`` succeeds.
    """
    _check_n(n, MAX_N)
    nums = _numbers(n)
    alphabet = nums + ["#", "$"]
    c, a = _subset_ids(n)
    q_pass = 1 << (n + 1)
    trans, alpha = [], []

    def add(src, x, dst, bad):
        trans.append((src, x, dst))
        if bad:
            alpha.append((src, x, dst))

    for mask in range(1 << n):
        for i, x in enumerate(nums):
            add(a(mask), x, a(mask | (1 << i)), False)
            if mask == 0:
                add(c(0), x, c(0), False)
            elif mask >> i & 1:
                add(c(mask), x, q_pass, False)
            else:
                add(c(mask), x, c(0), True)
        if mask == 0:
            add(a(0), "#", c(0), True)
            add(c(0), "#", c(0), False)
        else:
            add(a(mask), "#", c(mask), False)
            add(c(mask), "#", c(0), True)
        add(a(mask), "$", a(0), True)
        add(c(mask), "$", a(0), True)
    add(q_pass, "$", a(0), False)
    for x in nums + ["#"]:
        add(q_pass, x, c(0), True)
    return OmegaAutomaton.build(alphabet, q_pass + 1, {c(0)}, trans, Kind.COBUCHI_TRANS, alpha_trans=alpha,
                                name=f"tdcw-dn-{n}")


def _binary_window(n: int, start_loops: bool) -> Nfw:
    """States: start, ``(b, k)`` = first letter ``b`` followed by ``k - 1`` letters, accept, sink."""
    _check_n(n)

    def node(b, k):
        return 1 + b * n + (k - 1)

    acc, sink = 2 * n + 1, 2 * n + 2
    trans = []
    for x in (0, 1):
        trans.append((0, str(x), node(x, 1)))
        if start_loops:
            trans.append((0, str(x), 0))
    for b in (0, 1):
        for k in range(1, n):
            for x in (0, 1):
                trans.append((node(b, k), str(x), node(b, k + 1)))
        trans.append((node(b, n), str(1 - b), acc))
        trans.append((node(b, n), str(b), sink))
    for x in (0, 1):
        trans.append((acc, str(x), acc if start_loops else sink))
        trans.append((sink, str(x), sink))
    return Nfw.build(["0", "1"], 2 * n + 3, {0}, trans, {acc})


def dfw_first_last_differ(n: int) -> Nfw:
    """DFW with ``2n + 3`` states for the words of length ``n + 1`` whose first and last letters differ."""
    return _binary_window(n, start_loops=False)


def nfw_distance_differ(n: int) -> Nfw:
    """NFW with ``2n + 3`` states for the words containing two different letters at distance ``n``."""
    return _binary_window(n, start_loops=True)


_BUILDERS = {
    Family.NFW_GOOD: nfw_good_words,
    Family.NFW_GOOD_NODOLLAR: nfw_good_words_nodollar,
    Family.TDBW_DN: tdbw_dn,
    Family.TDCW_DN: tdcw_dn,
    Family.DFW_FLD: dfw_first_last_differ,
    Family.NFW_DIST: nfw_distance_differ,
}


def build_family(name: str, n: int) -> Union[Nfw, OmegaAutomaton]:
    """Build a family member by its command-line name, e.g. ``"tdbw-dn"``."""
    return FamilySpec(Family(name), n).build()
