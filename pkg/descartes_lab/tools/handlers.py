from __future__ import annotations

import logging
from functools import partial
from typing import Any, Callable, Dict

from descartes_lab.criteria.classify import classify
from descartes_lab.oracle.search import make_searcher
from descartes_lab.reports.suites import SUITES, run_suite
from descartes_lab.signs.patterns import AdmissiblePair, SignPattern, admissible_pairs, parse_pattern
from descartes_lab.utils.errors import DescartesLabError
from descartes_lab.utils.guard import GuardCheckResult, RequestGuard
from descartes_lab.utils.settings import LabSettings
from descartes_lab.witness.builder import witness_for

logger = logging.getLogger(__name__)


class ToolExecutor:
    """Executes tool invocations after the request guard has vetted their cost."""

    def __init__(self, guard: RequestGuard | None = None) -> None:
        self.guard = guard or RequestGuard()

    @property
    def settings(self) -> LabSettings:
        return self.guard.settings

    def execute(self, name: str, params: Dict[str, Any]) -> dict[str, Any]:
        if name == "classify_couple":
            return self._guarded(self._classify_couple, params)
        if name == "admissible_pairs":
            return self._guarded(self._admissible_pairs, params)
        if name == "build_witness":
            return self._guarded(self._build_witness, params)
        if name == "search_witness":
            return self._guarded(self._search_witness, params)
        if name == "verify_suite":
            return self._guarded(self._verify_suite, params)
        raise ValueError(f"Unsupported tool: {name}")

    def _guarded(self, handler: Callable[[Dict[str, Any]], dict[str, Any]], params: Dict[str, Any]) -> dict[str, Any]:
        try:
            return handler(params)
        except DescartesLabError as exc:
            logger.info("Tool request rejected: %s", exc)
            return {"success": False, "error": str(exc)}

    def _couple(self, params: Dict[str, Any]) -> tuple[SignPattern, AdmissiblePair] | GuardCheckResult:
        degree = int(params.get("degree", 0))
        check = self.guard.validate_degree(degree)
        if not check.allowed:
            return check
        text = str(params.get("pattern", ""))
        check = self.guard.validate_pattern_text(text)
        if not check.allowed:
            return check
        raw_ap = params.get("ap") or []
        if len(raw_ap) != 2:
            return GuardCheckResult(False, "Admissible pair must be [pos, neg]")
        return parse_pattern(text, degree), AdmissiblePair(int(raw_ap[0]), int(raw_ap[1]))

    def _budget(self, params: Dict[str, Any]) -> tuple[int, GuardCheckResult]:
        budget = int(params.get("budget", self.settings.oracle_budget))
        return budget, self.guard.validate_budget(budget)

    def _classify_couple(self, params: Dict[str, Any]) -> dict[str, Any]:
        couple = self._couple(params)
        if isinstance(couple, GuardCheckResult):
            return {"success": False, "error": couple.reason}
        sigma, ap = couple
        method = params.get("search", "none")
        search = None
        if method != "none":
            budget, check = self._budget(params)
            if not check.allowed:
                return {"success": False, "error": check.reason}
            search = make_searcher(
                method, seed=self.settings.seed, budget=budget, workers=self.settings.threads
            )
        result = classify(
            sigma,
            ap,
            with_witness=bool(params.get("with_witness", False)),
            search=search,
            builder=partial(witness_for, budget=self.settings.halving_budget),
            width=self.settings.enclosure_width,
        )
        return {
            "success": True,
            "message": f"{sigma.text} with {ap} is {result.status.value}",
            "classification": result.to_dict(),
        }

    def _admissible_pairs(self, params: Dict[str, Any]) -> dict[str, Any]:
        text = str(params.get("pattern", ""))
        check = self.guard.validate_pattern_text(text)
        if not check.allowed:
            return {"success": False, "error": check.reason}
        sigma = SignPattern.from_text(text)
        check = self.guard.validate_degree(sigma.degree)
        if not check.allowed:
            return {"success": False, "error": check.reason}
        return {
            "success": True,
            "pattern": sigma.text,
            "changes": sigma.changes,
            "preservations": sigma.preservations,
            "pairs": [ap.as_list() for ap in admissible_pairs(sigma)],
        }

    def _build_witness(self, params: Dict[str, Any]) -> dict[str, Any]:
        couple = self._couple(params)
        if isinstance(couple, GuardCheckResult):
            return {"success": False, "error": couple.reason}
        witness = witness_for(*couple, budget=self.settings.halving_budget)
        return {"success": True, "message": f"Built by {witness.construction}", "witness": witness.to_dict()}

    def _search_witness(self, params: Dict[str, Any]) -> dict[str, Any]:
        couple = self._couple(params)
        if isinstance(couple, GuardCheckResult):
            return {"success": False, "error": couple.reason}
        budget, check = self._budget(params)
        if not check.allowed:
            return {"success": False, "error": check.reason}
        searcher = make_searcher(
            params.get("method", "random"),
            seed=int(params.get("seed", self.settings.seed)),
            budget=budget,
            workers=self.settings.threads,
        )
        witness = searcher(*couple)
        if witness is None:
            return {"success": True, "found": False, "message": f"No witness within {budget} candidates"}
        return {"success": True, "found": True, "message": "Witness found", "witness": witness.to_dict()}

    def _verify_suite(self, params: Dict[str, Any]) -> dict[str, Any]:
        suite = params.get("suite", "")
        if suite not in SUITES:
            return {"success": False, "error": f"Unknown suite: {suite}"}
        max_degree = int(params.get("max_degree", 30))
        check = self.guard.validate_degree(max_degree)
        if not check.allowed:
            return {"success": False, "error": check.reason}
        report = run_suite(
            suite,
            threads=self.settings.threads,
            seed=int(params.get("seed", self.settings.seed)),
            max_degree=max_degree,
            trials=int(params.get("trials", 10000)),
        )
        return {"success": True, "message": f"{suite}: {report.total} checks", "report": report.to_dict()}
