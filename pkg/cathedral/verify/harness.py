"""
Verification harness: drives the suite checkers over exhaustive and seeded
random instance families and collects failures with minimized witnesses.
"""

import logging
from typing import Any, Callable, Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field
from tqdm import tqdm

from cathedral.config import VERIFY_CONFIG
from cathedral.decomposition import SynthesisSpec, synthesize
from cathedral.exceptions import CathedralError, TooLarge, UnknownSuite
from cathedral.io import (
    GraftDocument,
    document_from_graft,
    enumerate_small_grafts,
    gen_random_synthesis_spec,
    random_instance,
)
from cathedral.reports import CheckReport
from cathedral.verify.suites import SUITES, Instance, Suite

logger = logging.getLogger(__name__)


class Failure(BaseModel):
    """One violated property on one instance."""

    suite: str
    instance: dict
    property: str
    detail: str
    witness: Optional[Any] = None


class VerificationReport(BaseModel):
    suite: str
    instances: int = 0
    failures: List[Failure] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def merge(self, other: "VerificationReport") -> None:
        self.instances += other.instances
        self.failures.extend(other.failures)
        self.failures.sort(key=lambda f: (f.suite, f.property, f.detail))


def trial_seed(seed: int, index: int) -> int:
    """Per-trial seed derived from the run seed and the trial index."""
    return int(np.random.SeedSequence([seed & 0xFFFFFFFFFFFFFFFF, index]).generate_state(1, dtype=np.uint64)[0])


def _as_document(instance: Instance) -> GraftDocument:
    if isinstance(instance, SynthesisSpec):
        try:
            return document_from_graft(synthesize(instance))
        except CathedralError:
            return document_from_graft(instance.skeleton)
    return document_from_graft(instance)


def _instances(suite: Suite, max_n: int, trials: int, seed: int) -> Iterator[Instance]:
    if suite.synthesized:
        for i in range(trials):
            yield gen_random_synthesis_spec(trial_seed(seed, i))
        return
    yield from enumerate_small_grafts(min(max_n, VERIFY_CONFIG["exhaustive_max_n"]), suite.bipartite)
    if max_n < 1:
        return
    for i in range(trials):
        rng = np.random.default_rng(trial_seed(seed, i))
        doc = random_instance(rng, max_n, suite.bipartite)
        yield doc.to_bipartite() if suite.bipartite else doc.to_graft()


def _run_check(suite: Suite, instance: Instance) -> CheckReport:
    try:
        return suite.check(instance)
    except TooLarge:
        logger.debug(f"{suite.name}: instance beyond the oracle bounds, skipped")
        return CheckReport(name=suite.name)
    except CathedralError as e:
        report = CheckReport(name=suite.name)
        report.fail(getattr(e, "prop", type(e).__name__), str(e), getattr(e, "witness", None))
        return report


def _reduce(doc: GraftDocument, vertex: str) -> Optional[GraftDocument]:
    rest = [v for v in doc.vertices if v != vertex]
    if not rest:
        return None
    classes = None
    if doc.classes is not None:
        classes = {"A": [v for v in doc.classes.A if v != vertex], "B": [v for v in doc.classes.B if v != vertex]}
    candidate = GraftDocument(
        vertices=rest,
        edges=[(u, v) for u, v in doc.edges if vertex not in (u, v)],
        terminals=[v for v in doc.terminals if v != vertex],
        classes=classes,
    )
    try:
        candidate.to_bipartite() if classes is not None else candidate.to_graft()
    except CathedralError:
        return None
    return candidate


def minimize_witness(doc: GraftDocument, still_fails: Callable[[GraftDocument], bool]) -> GraftDocument:
    """
    Greedy vertex deletion: drop vertices one at a time, in sorted order,
    while the smaller document still fails. Deletions that break terminal
    parity are skipped.
    """
    current = doc.canonical()
    changed = True
    while changed:
        changed = False
        for v in sorted(current.vertices):
            candidate = _reduce(current, v)
            if candidate is not None and still_fails(candidate):
                current, changed = candidate.canonical(), True
                break
    return current


def _fails(suite: Suite, doc: GraftDocument) -> bool:
    try:
        instance = doc.to_bipartite() if suite.bipartite else doc.to_graft()
    except CathedralError:
        return False
    return not _run_check(suite, instance).passed


def _record(report: VerificationReport, suite: Suite, instance: Instance, check: CheckReport, minimize: bool) -> None:
    doc = _as_document(instance)
    if minimize and not suite.synthesized:
        doc = minimize_witness(doc, lambda d: _fails(suite, d))
    payload = doc.model_dump(exclude_none=True)
    for v in check.violations:
        report.failures.append(Failure(suite=suite.name, instance=payload, property=v.property, detail=v.detail, witness=v.witness))


def run_suite(suite: Suite, max_n: int, trials: int, seed: int, progress: bool = False, minimize: bool = True) -> VerificationReport:
    report = VerificationReport(suite=suite.name)
    for instance in tqdm(_instances(suite, max_n, trials, seed), desc=suite.name, disable=not progress):
        report.instances += 1
        check = _run_check(suite, instance)
        if not check.passed:
            logger.warning(f"{suite.name}: {len(check.violations)} violations on instance {report.instances}")
            _record(report, suite, instance, check, minimize)
    logger.info(f"Suite {suite.name}: {report.instances} instances, {len(report.failures)} failures")
    return report


def suite_names(name: str) -> List[str]:
    if name == "all":
        return list(SUITES)
    if name not in SUITES:
        raise UnknownSuite(f"Unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    return [name]


def run_verify_suite(
    name: str,
    max_n: Optional[int] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    progress: Optional[bool] = None,
    minimize: bool = True,
) -> VerificationReport:
    """
    Run one suite, or every suite for "all".

    Args:
        name: Suite name or "all"
        max_n: Vertex bound for instances (exhaustive part capped by exhaustive_max_n)
        trials: Number of seeded random instances per suite
        seed: Run seed; trial i uses a seed derived from (seed, i)
        progress: Show tqdm progress bars
        minimize: Shrink failing instances before reporting them

    Raises:
        UnknownSuite: if the name is not a suite
    """
    names = suite_names(name)
    max_n = VERIFY_CONFIG["max_n"] if max_n is None else max_n
    trials = VERIFY_CONFIG["trials"] if trials is None else trials
    seed = VERIFY_CONFIG["seed"] if seed is None else seed
    progress = VERIFY_CONFIG["progress"] if progress is None else progress

    total = VerificationReport(suite=name)
    for suite_name in names:
        total.merge(run_suite(SUITES[suite_name], max_n, trials, seed, progress, minimize))
    return total


def summary_rows(report: VerificationReport) -> List[Tuple[str, str, str]]:
    return [(f.suite, f.property, f.detail) for f in report.failures]
