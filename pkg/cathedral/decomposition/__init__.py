from cathedral.decomposition.cathedral import CathedralDecomposition, SeboReport, Tooth, decompose, verify_sebo
from cathedral.decomposition.combs import (
    CombReport,
    comb_primality_checks,
    factor_connected_comb_violations,
    is_comb,
    quasicomb_violations,
)
from cathedral.decomposition.primal import PrimalCertificate, primal_decompose, resynthesize, walk_certificate
from cathedral.decomposition.synthesis import (
    Synthesis,
    SynthesisSpec,
    ToothSpec,
    bare_tooth,
    build_synthesis,
    check_join_factorization,
    check_round_trip,
    match_synthesis,
    spec_from_decomposition,
    synthesis_min_join,
    synthesize,
)

__all__ = [
    "CathedralDecomposition",
    "CombReport",
    "PrimalCertificate",
    "SeboReport",
    "Synthesis",
    "SynthesisSpec",
    "Tooth",
    "ToothSpec",
    "bare_tooth",
    "build_synthesis",
    "check_join_factorization",
    "check_round_trip",
    "comb_primality_checks",
    "decompose",
    "factor_connected_comb_violations",
    "is_comb",
    "match_synthesis",
    "primal_decompose",
    "quasicomb_violations",
    "resynthesize",
    "spec_from_decomposition",
    "synthesis_min_join",
    "synthesize",
    "verify_sebo",
    "walk_certificate",
]
