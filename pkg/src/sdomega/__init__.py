"""Semantically deterministic omega-automata: encodings, extraction and weak determinization."""

from .automata import (DEFAULT_BUDGET, Alphabet, BudgetExceeded, Kind, Lasso, Nfw, OmegaAutomaton, SccOrder,
                       align, alpha_components, complete, dualize_dww, empty_automaton, is_weak, normalize,
                       prune_nfw, prune_omega, scc_order, to_state_based, to_transition_based,
                       universal_automaton)
from .buchi import (DOLLAR, GoodSetReport, NoGoodSet, encode_infty, encode_infty_dollar, encode_infty_statebased,
                    extract_nfw_infty, find_good_set, has_good_prefix, is_hopeful, validate_infty_dollar)
from .cobuchi import (BadInfixWitness, NoTrapFound, bad_infix_optimize, encode_bowtie, encode_bowtie_statebased,
                      extract_nfw_bowtie, has_bad_infix, trap_state)
from .families import (Family, FamilySpec, build_family, dfw_first_last_differ, nfw_distance_differ,
                       nfw_good_words, nfw_good_words_nodollar, tdbw_dn, tdcw_dn)
from .finite import (complement_nfw, dfw_minimize, empty_nfw, is_empty_nfw, is_universal_nfw, nfw_equivalent,
                     subset_construct, universal_nfw)
from .semantics import (SdCounterexample, complement, contains, distinguishing_lasso, equivalent, intersect,
                        is_empty, is_sd, is_universal, lasso_in_bowtie, lasso_in_infty, lasso_membership,
                        states_equivalent)
from .textformat import ParseError, parse, serialize
from .weak import (CloseRelation, NotSemanticallyDeterministic, RepresentativePartition, WeakDecision,
                   close_transitive, complement_sd_nww, delta_close, determinize_sd_nww, generate_sd_nww,
                   minimize_dww, representatives, weak_decision)

__version__ = "0.1.0"
