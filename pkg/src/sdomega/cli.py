"""Command-line interface.

Exit codes: 0 means yes or success, 1 means no (a witness is printed on
stdout), 2 means an error.  A file argument of ``-`` reads stdin.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import List, Optional

from . import buchi, cobuchi, families, semantics, weak
from .automata import (DEFAULT_BUDGET, BudgetExceeded, Lasso, Nfw, OmegaAutomaton, normalize, to_state_based,
                       to_transition_based, is_weak)
from .textformat import ParseError, parse, serialize

YES, NO, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse(text)


def _omega(path: str) -> OmegaAutomaton:
    a = _read(path)
    if not isinstance(a, OmegaAutomaton):
        raise UsageError(f"{path}: expected an omega automaton, got a finite-word automaton")
    return a


def _nfw(path: str) -> Nfw:
    a = _read(path)
    if not isinstance(a, Nfw):
        raise UsageError(f"{path}: expected a finite-word automaton (kind nfw)")
    return a


def _emit(a, name: Optional[str] = None) -> int:
    sys.stdout.write(serialize(a, name))
    return YES


def _verdict(witness, yes_text="yes") -> int:
    if witness is None:
        print(yes_text)
        return YES
    print(witness)
    return NO


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_check(args) -> int:
    a = _omega(args.file)
    if args.property == "weak":
        return _verdict(None if is_weak(a) else "no: some SCC mixes accepting and rejecting behaviour")
    if args.property == "empty":
        return _verdict(semantics.is_empty(a, args.budget))
    if args.property == "universal":
        return _verdict(semantics.is_universal(a, args.budget))
    bad = semantics.is_sd(a, args.budget)
    if bad is None:
        print("yes")
        return YES
    where = "initial" if bad.state is None else f"state {bad.state} letter {bad.letter}"
    print(f"not-sd {where} choices {bad.succ_a} {bad.succ_b}")
    print(bad.witness)
    return NO


def cmd_contains(args) -> int:
    return _verdict(semantics.contains(_omega(args.a), _omega(args.b), args.budget))


def cmd_equiv(args) -> int:
    return _verdict(semantics.equivalent(_omega(args.a), _omega(args.b), args.budget))


def cmd_member(args) -> int:
    a = _omega(args.file)
    w = Lasso(args.prefix.split(), args.period.split())
    ok = semantics.lasso_membership(a, w)
    print("accepted" if ok else "rejected")
    return YES if ok else NO


_ENCODERS = {
    "infty": lambda n: buchi.encode_infty(n),
    "infty-dollar": lambda n: buchi.encode_infty_dollar(n),
    "infty-state": lambda n: buchi.encode_infty_statebased(n),
    "bowtie": lambda n: cobuchi.encode_bowtie(n),
    "bowtie-state": lambda n: cobuchi.encode_bowtie_statebased(n),
}


def cmd_encode(args) -> int:
    n = _nfw(args.file)
    return _emit(_ENCODERS[args.encoding](n), f"{args.encoding}-of-{n.name or 'nfw'}")


def cmd_extract(args) -> int:
    a = _omega(args.file)
    if args.mode == "buchi":
        if not args.lang:
            raise UsageError("extract buchi needs --lang RFILE")
        return _emit(buchi.extract_nfw_infty(a, _nfw(args.lang)), "extracted")
    n = cobuchi.extract_nfw_bowtie(a)
    if args.optimize_bad_infix:
        bound = None if args.bound is not None and args.bound < 0 else args.bound
        witness = cobuchi.has_bad_infix(n, -1 if args.bound is None else bound)
        if witness is None:
            print("error: no bad infix found within the bound", file=sys.stderr)
            return ERROR
        n = cobuchi.bad_infix_optimize(a, n, witness)
    return _emit(n, "extracted")


def cmd_det_weak(args) -> int:
    return _emit(weak.determinize_sd_nww(_omega(args.file), validate=args.validate, budget=args.budget))


def cmd_complement(args) -> int:
    return _emit(semantics.complement(_omega(args.file), args.budget))


def cmd_minimize_dww(args) -> int:
    return _emit(weak.minimize_dww(_omega(args.file)))


def cmd_convert(args) -> int:
    a = _omega(args.file)
    if args.to == "state":
        return _emit(a if a.kind.state_based else to_state_based(a), a.name)
    return _emit(a if not a.kind.state_based else to_transition_based(a, args.cobuchi_rule), a.name)


def cmd_normalize(args) -> int:
    return _emit(normalize(_omega(args.file)))


def cmd_family(args) -> int:
    return _emit(families.build_family(args.family, args.n), f"{args.family}-{args.n}")


def cmd_generate(args) -> int:
    a = weak.generate_sd_nww(args.states, args.letters, args.duplicates, args.seed)
    return _emit(a, f"sd-nww-{args.seed}")


def succinctness_rows(max_n: int, budget: int = DEFAULT_BUDGET):
    """Rows ``(n, sd_states, det_states, verdict, seconds)`` for n = 1..max_n."""
    rows = []
    for n in range(1, max_n + 1):
        start = time.perf_counter()
        sd = buchi.encode_infty(families.nfw_good_words(n))
        det = families.tdbw_dn(n)
        diff = semantics.equivalent(sd, det, budget)
        rows.append((n, sd.states, det.states, "equivalent" if diff is None else "different",
                     time.perf_counter() - start))
    return rows


def complementation_rows(max_n: int, budget: int = DEFAULT_BUDGET):
    """Rows ``(n, sd_states, complement_states, seconds)`` for the first/last-letter family."""
    rows = []
    for n in range(1, max_n + 1):
        start = time.perf_counter()
        sd = buchi.encode_infty(families.dfw_first_last_differ(n))
        comp = semantics.complement(sd, budget)
        rows.append((n, sd.states, comp.states, time.perf_counter() - start))
    return rows


def cmd_experiment(args) -> int:
    if args.experiment == "succinctness":
        print("n\tsd_states\tdet_states\tverdict\tseconds")
        for n, s, d, v, t in succinctness_rows(args.max_n, args.budget):
            print(f"{n}\t{s}\t{d}\t{v}\t{t:.3f}")
    else:
        print("n\tsd_states\tcomplement_states\tseconds")
        for n, s, c, t in complementation_rows(args.max_n, args.budget):
            print(f"{n}\t{s}\t{c}\t{t:.3f}")
    return YES


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    budget_help = "maximum number of states any construction may explore"
    p = argparse.ArgumentParser(prog="sdomega", description="Semantically deterministic omega-automata toolkit.")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help=budget_help)
    # suppressed default so a subcommand does not overwrite a budget given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help=budget_help)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.set_defaults(handler=handler)
        return sp

    sp = add("check", cmd_check, "decide a property of one automaton")
    sp.add_argument("property", choices=["sd", "empty", "universal", "weak"])
    sp.add_argument("file")

    for name, handler, text in (("contains", cmd_contains, "is L(A) contained in L(B)"),
                                ("equiv", cmd_equiv, "do A and B recognize the same language")):
        sp = add(name, handler, text)
        sp.add_argument("a")
        sp.add_argument("b")

    sp = add("member", cmd_member, "lasso membership")
    sp.add_argument("file")
    sp.add_argument("--prefix", default="", help="space-separated letters")
    sp.add_argument("--period", required=True, help="space-separated letters, nonempty")

    sp = add("encode", cmd_encode, "encode a finite-word automaton as an omega automaton")
    sp.add_argument("encoding", choices=sorted(_ENCODERS))
    sp.add_argument("file")

    sp = add("extract", cmd_extract, "recover a finite-word automaton from an encoding")
    sp.add_argument("mode", choices=["buchi", "cobuchi"])
    sp.add_argument("file")
    sp.add_argument("--lang", help="finite-word automaton for the encoded language (buchi mode)")
    sp.add_argument("--optimize-bad-infix", action="store_true")
    sp.add_argument("--bound", type=int, default=None,
                    help="cap on bad-infix length; negative means uncapped")

    sp = add("det-weak", cmd_det_weak, "determinize an SD weak automaton")
    sp.add_argument("file")
    sp.add_argument("--validate", action="store_true", help="check semantic determinism first")

    for name, handler, text in (("complement", cmd_complement, "complement an automaton"),
                                ("minimize-dww", cmd_minimize_dww, "minimize a deterministic weak automaton"),
                                ("normalize", cmd_normalize, "normalize a transition-based co-Büchi automaton")):
        sp = add(name, handler, text)
        sp.add_argument("file")

    sp = add("convert", cmd_convert, "switch between state- and transition-based acceptance")
    sp.add_argument("--to", choices=["state", "transition"], required=True)
    sp.add_argument("--cobuchi-rule", choices=["source_or_target", "target"], default="source_or_target")
    sp.add_argument("file")

    sp = add("family", cmd_family, "print a member of a fixture family")
    sp.add_argument("family", choices=[f.value for f in families.Family])
    sp.add_argument("--n", type=int, required=True)

    sp = add("generate", cmd_generate, "print a random SD weak automaton")
    sp.add_argument("--states", type=int, default=6)
    sp.add_argument("--letters", type=int, default=2)
    sp.add_argument("--duplicates", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("experiment", cmd_experiment, "print a TSV table of sizes and timings")
    sp.add_argument("experiment", choices=["succinctness", "complementation"])
    sp.add_argument("--max-n", type=int, default=3)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ERROR if e.code else YES
    try:
        return args.handler(args)
    except BudgetExceeded as e:
        print(f"error: budget-exceeded what={e.what.replace(' ', '-')} budget={e.budget}")
        return ERROR
    except (ParseError, UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
