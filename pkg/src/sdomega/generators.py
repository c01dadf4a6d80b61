"""Seeded random inputs: finite-word automata, omega automata and lassos."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from .automata import Kind, Lasso, Nfw, OmegaAutomaton


def _letters(letters) -> list:
    if isinstance(letters, int):
        return [chr(ord("a") + i) for i in range(letters)]
    return list(letters)


def _rows(rng: random.Random, states: int, k: int, density: float):
    """Random total transition triples; every (state, letter) gets at least one target."""
    trans = []
    for q in range(states):
        for x in range(k):
            targets = [p for p in range(states) if rng.random() < density] or [rng.randrange(states)]
            trans.extend((q, x, p) for p in targets)
    return trans


def random_nfw(rng: random.Random, states: int = 4, letters=2, density: float = 0.3,
               accepting: float = 0.4) -> Nfw:
    """Random total NFW with one initial state."""
    alphabet = _letters(letters)
    trans = _rows(rng, states, len(alphabet), density)
    acc = {q for q in range(states) if rng.random() < accepting}
    return Nfw.build(alphabet, states, {0}, trans, acc)


def random_omega(rng: random.Random, states: int = 4, letters=2, kind: Kind = Kind.BUCHI_TRANS,
                 density: float = 0.3, alpha: float = 0.3) -> OmegaAutomaton:
    """Random total omega automaton of the given kind with one initial state."""
    alphabet = _letters(letters)
    trans = _rows(rng, states, len(alphabet), density)
    if kind.state_based:
        al = {q for q in range(states) if rng.random() < alpha}
        return OmegaAutomaton.build(alphabet, states, {0}, trans, kind, alpha_states=al)
    at = [t for t in trans if rng.random() < alpha]
    return OmegaAutomaton.build(alphabet, states, {0}, trans, kind, alpha_trans=at)


def random_lasso(rng: random.Random, letters: Sequence[str], max_prefix: int = 4, max_period: int = 5) -> Lasso:
    letters = list(letters)
    u = [rng.choice(letters) for _ in range(rng.randint(0, max_prefix))]
    v = [rng.choice(letters) for _ in range(rng.randint(1, max_period))]
    return Lasso(u, v)


def enumerate_lassos(letters: Sequence[str], max_prefix: int, max_period: int) -> Iterator[Lasso]:
    """Every lasso with prefix length ≤ ``max_prefix`` and period length in 1..``max_period``."""
    letters = list(letters)
    for lu in range(max_prefix + 1):
        for u in itertools.product(letters, repeat=lu):
            for lv in range(1, max_period + 1):
                for v in itertools.product(letters, repeat=lv):
                    yield Lasso(u, v)
