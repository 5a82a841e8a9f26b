from __future__ import annotations

import re
from dataclasses import dataclass

from descartes_lab.utils.settings import LabSettings, get_settings


@dataclass
class GuardCheckResult:
    allowed: bool
    reason: str | None = None


class RequestGuard:
    """Rejects requests whose cost would be unreasonable before any work starts."""

    pattern_forms: tuple[re.Pattern[str], ...] = (
        re.compile(r"^[+-]{2,}$"),
        re.compile(r"^S\(\s*\d+\s*,\s*\d+\s*,\s*\d+\s*\)$", re.IGNORECASE),
    )

    def __init__(self, settings: LabSettings | None = None) -> None:
        self.settings = settings or get_settings()

    def validate_degree(self, degree: int, *, catalog: bool = False) -> GuardCheckResult:
        limit = self.settings.max_catalog_degree if catalog else self.settings.max_couple_degree
        if degree < 1:
            return GuardCheckResult(False, "Degree must be at least 1")
        if degree > limit:
            kind = "catalog" if catalog else "couple"
            return GuardCheckResult(False, f"Degree {degree} exceeds the {kind} limit of {limit}")
        return GuardCheckResult(True)

    def validate_budget(self, budget: int) -> GuardCheckResult:
        if budget < 0:
            return GuardCheckResult(False, "Search budget must be nonnegative")
        if budget > self.settings.max_search_budget:
            return GuardCheckResult(
                False,
                f"Search budget {budget} exceeds the limit of {self.settings.max_search_budget}",
            )
        return GuardCheckResult(True)

    def validate_pattern_text(self, text: str) -> GuardCheckResult:
        normalized = text.strip()
        for form in self.pattern_forms:
            if form.match(normalized):
                return GuardCheckResult(True)
        return GuardCheckResult(False, f"Pattern '{text}' is neither a +/- string nor S(m,n,q)")
