import json
import logging
import time
from dataclasses import dataclass
from typing import List, Optional

from fxpoly.codegen._nfd import NfdDocument
from fxpoly.codegen._template import Template, load_template, render
from fxpoly.expr import compile_function
from fxpoly.fitters import FitConfig, FitOutcome, PiecewisePlan, VerificationReport, \
    fit_candidates_with_report, verify_plan
from fxpoly.oppe import finalize_plan
from fxpoly.perfmodel import Decision, PerfProfile, fit_cost_model, select_plan

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineResult:
    nfd: NfdDocument
    decision: Decision
    plan: Optional[PiecewisePlan]
    source: Optional[str]
    verification: Optional[VerificationReport]
    outcomes: List[FitOutcome]
    fit_seconds: float

    def report(self) -> dict:
        doc = {
            'function': self.nfd.function,
            'name': self.nfd.function_name,
            **self.decision.as_dict(),
            'fit_seconds': self.fit_seconds,
            'candidates': [{'k': o.k, 'm': o.m, 'max_srd': o.max_srd, 'seconds': o.seconds, 'reason': o.reason}
                           for o in self.outcomes],
        }
        if self.verification is not None:
            doc['verification'] = self.verification.as_dict()
        return doc


def pipeline(nfd: NfdDocument, ppd: PerfProfile, jobs: int = 1, template: Optional[Template] = None) -> PipelineResult:
    """
    Fits candidates for every order in the NFD's k range, picks a plan or
    direct evaluation with the profile's cost model, then renders and
    verifies the finalized plan. Direct evaluation emits no source.
    """
    cfg = FitConfig.from_nfd(nfd)
    F = compile_function(nfd.function, quad_tol=nfd.tol / 100)

    started = time.perf_counter()
    candidates, outcomes = fit_candidates_with_report(F, cfg, jobs)
    fit_seconds = time.perf_counter() - started
    log.info('Fitted %d candidate(s) for %s in %.2fs', len(candidates), nfd.function_name, fit_seconds)

    model = fit_cost_model(ppd)
    reasons = {o.k: o.reason for o in outcomes if not o.succeeded}
    decision = select_plan(candidates, model, ppd.time_dict, nfd.expression, reasons, nfd.ops)

    if decision.is_direct:
        return PipelineResult(nfd, decision, None, None, None, outcomes, fit_seconds)

    plan = finalize_plan(decision.plan)
    template = template if template is not None else load_template(nfd.template)
    source = render(plan, template, nfd.function_name)
    verification = verify_plan(plan, F, cfg)
    if not verification.passed:
        log.warning('Selected plan misses the tolerance: max SRD %.3e at x=%s',
                    verification.max_srd, verification.worst_x)
    return PipelineResult(nfd, decision, plan, source, verification, outcomes, fit_seconds)


def write_report(report: dict, path):
    with open(path, 'w') as file:
        json.dump(report, file, indent=2, sort_keys=True)
        file.write('\n')
