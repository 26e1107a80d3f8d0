"""Insertion algorithms and identity checking for five word-combinatorial monoids.

The package realizes the stalactic, taiga, sylvester, #-sylvester, and Baxter
monoids through their canonical objects (tableaux, binary search trees with
multiplicities, strict binary search trees, and pairs of trees), decides word
equivalence and identity satisfaction exactly, produces explicit derivations
over the finite identity bases, and cross-checks everything against brute
force substitution oracles.
"""
from .words import (
    AnchorAbsentError,
    Identity,
    Word,
    con,
    directional_occ,
    ev,
    ev_leq,
    fp,
    ip,
    load_identity_system,
    mix,
    occ,
    restrict,
    skeleton,
)
from .tableaux import StalacticTableau, TaigaTree, p_stal, p_taig
from .bst import BaxterObject, LeftStrictBST, RightStrictBST, p_baxt, p_sylv, p_sylv_sharp
from .monoids import (
    L21,
    R21,
    FiniteMonoid,
    MonoidFamily,
    RankViolationError,
    UnboundVariableError,
    alphabet_cap,
    canonical,
    check_rank,
    equivalent,
    eval_in_finite,
)
from .identities import (
    CounterExample,
    DecisionMismatchError,
    DerivationStep,
    Exhaustive,
    HoldsWithinBound,
    RandomSearch,
    apply_substitution,
    basis,
    derivation_certificate,
    derivation_to_json,
    derive_search,
    find_counterexample,
    invert_steps,
    normal_form,
    normalize_derivation,
    oracle,
    satisfies,
    step_from_json,
    step_to_json,
    verdict_to_json,
    verify_derivation,
)

__version__ = "0.1.0"

__all__ = [
    "AnchorAbsentError",
    "BaxterObject",
    "CounterExample",
    "DecisionMismatchError",
    "DerivationStep",
    "Exhaustive",
    "FiniteMonoid",
    "HoldsWithinBound",
    "Identity",
    "L21",
    "LeftStrictBST",
    "MonoidFamily",
    "R21",
    "RandomSearch",
    "RankViolationError",
    "RightStrictBST",
    "StalacticTableau",
    "TaigaTree",
    "UnboundVariableError",
    "Word",
    "alphabet_cap",
    "apply_substitution",
    "basis",
    "canonical",
    "check_rank",
    "con",
    "derivation_certificate",
    "derivation_to_json",
    "derive_search",
    "directional_occ",
    "equivalent",
    "ev",
    "ev_leq",
    "eval_in_finite",
    "find_counterexample",
    "fp",
    "invert_steps",
    "ip",
    "load_identity_system",
    "mix",
    "normal_form",
    "normalize_derivation",
    "occ",
    "oracle",
    "p_baxt",
    "p_stal",
    "p_sylv",
    "p_sylv_sharp",
    "p_taig",
    "restrict",
    "satisfies",
    "skeleton",
    "step_from_json",
    "step_to_json",
    "verdict_to_json",
    "verify_derivation",
]
