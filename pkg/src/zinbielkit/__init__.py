"""Exact-arithmetic workbench for structure-constant algebras of Zinbiel type.

Tables are sparse tensors over Fraction; every check returns exact residuals
and deterministic first witnesses.  See the README for the identity DSL and
the CLI.
"""

from .algebra import (
    AlgebraTable,
    algebra_from_entries,
    direct_sum,
    left_zinbiel_residuals,
    right_zinbiel_residuals,
)
from .audit import CLAIMS, audit_claims, audit_report_jsonable, audit_report_text
from .bialgebra import (
    BialgebraCandidate,
    BilinearFormTable,
    check_form,
    check_manin_triple,
    drinfeld_double,
    dual_reps,
    equivalence_audit,
    standard_pairing,
)
from .bimodule import (
    Bimodule,
    check_bimodule,
    check_derived_relations,
    induced_subadjacent_map,
    regular_bimodule,
    semidirect_sum,
    zero_bimodule,
)
from .coalgebra import (
    CoalgebraTable,
    antisym_coproduct,
    check_aux_coalgebra_identities,
    check_co_left,
    check_co_right,
    check_cocomm_coassoc,
    check_lie_coalgebra,
    coalgebra_from_entries,
    dualize,
    dualize_co,
    opposite_coproduct,
    sym_coproduct,
)
from .identities import Identity, catalog, evaluate, holds, parse_identity
from .matched_pair import (
    MatchedPair,
    check_commassoc_matched_pair,
    check_lie_matched_pair,
    check_matched_pair,
    double,
    induced_commassoc_pair,
    induced_lie_pair,
    zero_matched_pair,
)
from .models import free_halfshuffle, trivial_models, trunc_integration
from .serialization import dumps, from_jsonable, load_path, loads, to_jsonable
from .tensors import Matrix, Scalar, Tensor3, Vector, format_scalar, parse_scalar, rank

__all__ = [
    "AlgebraTable",
    "BialgebraCandidate",
    "BilinearFormTable",
    "Bimodule",
    "CLAIMS",
    "CoalgebraTable",
    "Identity",
    "MatchedPair",
    "Matrix",
    "Scalar",
    "Tensor3",
    "Vector",
    "algebra_from_entries",
    "antisym_coproduct",
    "audit_claims",
    "audit_report_jsonable",
    "audit_report_text",
    "catalog",
    "check_aux_coalgebra_identities",
    "check_bimodule",
    "check_co_left",
    "check_co_right",
    "check_cocomm_coassoc",
    "check_commassoc_matched_pair",
    "check_derived_relations",
    "check_form",
    "check_lie_coalgebra",
    "check_lie_matched_pair",
    "check_manin_triple",
    "check_matched_pair",
    "coalgebra_from_entries",
    "direct_sum",
    "double",
    "drinfeld_double",
    "dual_reps",
    "dualize",
    "dualize_co",
    "dumps",
    "equivalence_audit",
    "evaluate",
    "format_scalar",
    "free_halfshuffle",
    "from_jsonable",
    "holds",
    "induced_commassoc_pair",
    "induced_lie_pair",
    "induced_subadjacent_map",
    "left_zinbiel_residuals",
    "load_path",
    "loads",
    "opposite_coproduct",
    "parse_identity",
    "parse_scalar",
    "rank",
    "regular_bimodule",
    "right_zinbiel_residuals",
    "semidirect_sum",
    "standard_pairing",
    "sym_coproduct",
    "to_jsonable",
    "trivial_models",
    "trunc_integration",
    "zero_bimodule",
    "zero_matched_pair",
]
