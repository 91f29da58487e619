from cathedral.verify.harness import (
    Failure,
    VerificationReport,
    minimize_witness,
    run_suite,
    run_verify_suite,
    suite_names,
    summary_rows,
    trial_seed,
)
from cathedral.verify.suites import SUITES, Suite

__all__ = [
    "Failure",
    "SUITES",
    "Suite",
    "VerificationReport",
    "minimize_witness",
    "run_suite",
    "run_verify_suite",
    "suite_names",
    "summary_rows",
    "trial_seed",
]
