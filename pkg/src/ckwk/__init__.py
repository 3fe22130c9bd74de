"""Decision procedures and uniform interpolation for the constructive
modal logics CK and WK.

The package provides hash-consed formulas and sequents, terminating
backward proof search for the contraction-free calculi of both logics,
uniform interpolant computation by mutual recursion on sequents, and
exhaustive bounded oracles for the structural metatheory.
"""

from .calculus import (
    LogicId,
    ProofTree,
    RuleId,
    RuleInstance,
    applicable_instances,
    check_proof,
    check_step,
    proof_to_json,
    proof_to_latex,
    proof_to_text,
    respects_regime,
)
from .formula import (
    BOT,
    TRUE,
    And,
    Bot,
    Box,
    Dia,
    Formula,
    Imp,
    Or,
    Var,
    free_vars,
    neg,
    subformulas,
    weight,
)
from .oracle import (
    EnumConfig,
    Report,
    check_hilbert_axioms,
    check_structural,
    check_uniformity,
    enumerate_formulas,
)
from .parser import ParseError, parse_formula, parse_sequent
from .render import (
    formula_from_json,
    formula_to_json,
    render_latex,
    render_sequent_latex,
    render_sequent_text,
    render_text,
    sequent_from_json,
    sequent_to_json,
)
from .reporting import write_reports
from .search import (
    Decision,
    SearchCache,
    admissible_cut_holds,
    decide,
    provable,
    provably_equivalent,
)
from .sequent import (
    EMPTY,
    FMultiset,
    Sequent,
    box_inverse,
    dia_inverse,
    multiset_less,
    seq_less,
)
from .uip import (
    QuantCache,
    a_quant,
    a_set,
    e_quant,
    e_set,
    exists_via_forall,
    fresh_var,
    interpolate_exists,
    interpolate_forall,
    simplify,
)

__version__ = "0.1.0"

__all__ = [
    "BOT",
    "EMPTY",
    "TRUE",
    "And",
    "Bot",
    "Box",
    "Decision",
    "Dia",
    "EnumConfig",
    "FMultiset",
    "Formula",
    "Imp",
    "LogicId",
    "Or",
    "ParseError",
    "ProofTree",
    "QuantCache",
    "Report",
    "RuleId",
    "RuleInstance",
    "SearchCache",
    "Sequent",
    "Var",
    "a_quant",
    "a_set",
    "admissible_cut_holds",
    "applicable_instances",
    "box_inverse",
    "check_hilbert_axioms",
    "check_proof",
    "check_step",
    "check_structural",
    "check_uniformity",
    "decide",
    "dia_inverse",
    "e_quant",
    "e_set",
    "enumerate_formulas",
    "exists_via_forall",
    "formula_from_json",
    "formula_to_json",
    "free_vars",
    "fresh_var",
    "interpolate_exists",
    "interpolate_forall",
    "multiset_less",
    "neg",
    "parse_formula",
    "parse_sequent",
    "proof_to_json",
    "proof_to_latex",
    "proof_to_text",
    "provable",
    "provably_equivalent",
    "render_latex",
    "render_sequent_latex",
    "render_sequent_text",
    "render_text",
    "respects_regime",
    "seq_less",
    "sequent_from_json",
    "sequent_to_json",
    "simplify",
    "subformulas",
    "weight",
    "write_reports",
]
