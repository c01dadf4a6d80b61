"""Line-oriented text format for automata.

::

    # comment
    automaton NAME
    kind tnbw            # nfw nbw ncw nww tnbw tncw tnww
    alphabet a b $
    states 3
    init 0
    acc-states 2         # accepting states (nfw) or alpha states (state-based)
    trans 0 a 1 acc      # "acc" marks an alpha transition
    end

A line is a comment when its first non-blank character is ``#``, so
``#`` remains usable as a letter inside ``alphabet`` and ``trans`` lines.
Weak kinds parse to Büchi automata after a weakness check and are
written back as their Büchi kind.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Union

from .automata import Alphabet, Kind, Nfw, OmegaAutomaton, _freeze_delta, is_weak

Automaton = Union[Nfw, OmegaAutomaton]

_KINDS: Dict[str, Optional[Kind]] = {
    "nfw": None,
    "nbw": Kind.BUCHI_STATE,
    "ncw": Kind.COBUCHI_STATE,
    "nww": Kind.BUCHI_STATE,
    "tnbw": Kind.BUCHI_TRANS,
    "tncw": Kind.COBUCHI_TRANS,
    "tnww": Kind.BUCHI_TRANS,
}
_NAMES = {Kind.BUCHI_STATE: "nbw", Kind.COBUCHI_STATE: "ncw", Kind.BUCHI_TRANS: "tnbw",
          Kind.COBUCHI_TRANS: "tncw"}


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def _ints(tokens, line, what) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(line, f"{what} expects integers, got {' '.join(tokens)!r}") from None


def parse(text: str) -> Automaton:
    """Parse one automaton; errors carry the offending line number."""
    fields: Dict[str, object] = {}
    trans = []
    ended = False
    last = 0
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = no
        if ended:
            raise ParseError(no, "content after 'end'")
        key, _, rest = line.partition(" ")
        tokens = rest.split()
        if key == "end":
            ended = True
            continue
        if key in fields and key != "trans":
            raise ParseError(no, f"duplicate '{key}' line")
        if key == "automaton":
            fields[key] = rest.strip()
        elif key == "kind":
            if len(tokens) != 1 or tokens[0] not in _KINDS:
                raise ParseError(no, f"unknown kind {rest.strip()!r}; expected one of {', '.join(_KINDS)}")
            fields[key] = tokens[0]
        elif key == "alphabet":
            try:
                fields[key] = Alphabet(tokens)
            except ValueError as e:
                raise ParseError(no, str(e)) from None
        elif key == "states":
            vals = _ints(tokens, no, "states")
            if len(vals) != 1 or vals[0] < 1:
                raise ParseError(no, "states expects one positive integer")
            fields[key] = vals[0]
        elif key in ("init", "acc-states"):
            fields[key] = (_ints(tokens, no, key), no)
        elif key == "trans":
            if len(tokens) not in (3, 4) or (len(tokens) == 4 and tokens[3] != "acc"):
                raise ParseError(no, "trans expects: SRC LETTER DST [acc]")
            src, dst = _ints([tokens[0], tokens[2]], no, "trans")
            trans.append((src, tokens[1], dst, len(tokens) == 4, no))
        else:
            raise ParseError(no, f"unknown directive {key!r}")
    for req in ("automaton", "kind", "alphabet", "states", "init"):
        if req not in fields:
            raise ParseError(last, f"missing '{req}' line")
    if not ended:
        raise ParseError(last, "missing 'end'")
    kind_name = fields["kind"]
    kind = _KINDS[kind_name]
    alphabet: Alphabet = fields["alphabet"]
    n: int = fields["states"]
    init, init_line = fields["init"]
    acc, acc_line = fields.get("acc-states", ([], last))
    for q in init:
        if not 0 <= q < n:
            raise ParseError(init_line, f"initial state {q} outside 0..{n - 1}")
    for q in acc:
        if not 0 <= q < n:
            raise ParseError(acc_line, f"accepting state {q} outside 0..{n - 1}")
    if not init:
        raise ParseError(init_line, "at least one initial state is required")
    triples, alpha = [], []
    for src, letter, dst, flagged, no in trans:
        for q in (src, dst):
            if not 0 <= q < n:
                raise ParseError(no, f"state {q} outside 0..{n - 1}")
        if letter not in alphabet:
            raise ParseError(no, f"unknown letter {letter!r}")
        t = (src, alphabet.index(letter), dst)
        triples.append(t)
        if flagged:
            if kind is None or kind.state_based:
                raise ParseError(no, f"'acc' transitions are not allowed in kind {kind_name}")
            alpha.append(t)
    delta = _freeze_delta(n, len(alphabet), triples)
    name = fields["automaton"]
    if kind is None:
        return Nfw(alphabet, n, frozenset(init), delta, frozenset(acc), name=name)
    if not kind.state_based and acc:
        raise ParseError(acc_line, f"kind {kind_name} takes alpha on transitions, not states")
    for q, row in enumerate(delta):
        for x, succ in enumerate(row):
            if not succ:
                raise ParseError(last, f"transition relation is not total: no move from state {q} "
                                       f"on letter {alphabet[x]!r}")
    a = OmegaAutomaton(alphabet, n, frozenset(init), delta, kind, frozenset(acc), frozenset(alpha), name=name)
    if kind_name in ("nww", "tnww") and not is_weak(a):
        raise ParseError(last, f"kind {kind_name} declared but the automaton is not weak")
    return a


def serialize(a: Automaton, name: Optional[str] = None) -> str:
    """Canonical text: transitions sorted, one per line."""
    name = name or a.name or "unnamed"
    out = [f"automaton {name}"]
    if isinstance(a, Nfw):
        out.append("kind nfw")
        acc = a.accepting
        flagged = frozenset()
    else:
        out.append(f"kind {_NAMES[a.kind]}")
        acc = a.alpha_states
        flagged = a.alpha_trans
    out.append("alphabet " + " ".join(a.alphabet))
    out.append(f"states {a.states}")
    out.append("init " + " ".join(str(q) for q in sorted(a.initial)))
    if isinstance(a, Nfw) or a.kind.state_based:
        out.append(" ".join(["acc-states"] + [str(q) for q in sorted(acc)]))
    for q, x, p in a.transitions():
        line = f"trans {q} {a.alphabet[x]} {p}"
        out.append(line + " acc" if (q, x, p) in flagged else line)
    out.append("end")
    return "\n".join(out) + "\n"
