from __future__ import annotations


class DescartesLabError(ValueError):
    """Base class for every error raised by descartes_lab operations."""


class RejectedInputError(DescartesLabError):
    pass


class ZeroConstantTermError(DescartesLabError):
    pass


class RootAtEndpointError(DescartesLabError):
    def __init__(self, point: object) -> None:
        super().__init__(f"Interval endpoint {point} is a root; nudge the endpoint and retry")
        self.point = point


class NotASignPatternError(DescartesLabError):
    def __init__(self, detail: str = "") -> None:
        message = "not a sign-pattern polynomial"
        super().__init__(f"{message}: {detail}" if detail else message)


class InadmissiblePairError(DescartesLabError):
    pass


class VariableMismatchError(DescartesLabError):
    pass


class ConstantInVariableError(DescartesLabError):
    pass


class SearchBudgetExhausted(DescartesLabError):
    """A halving or refinement search ran out of steps.

    This is an engineering anomaly, never a mathematical conclusion.
    """

    def __init__(self, what: str, budget: int) -> None:
        super().__init__(f"{what}: no admissible value found within {budget} steps")
        self.what = what
        self.budget = budget


class CriterionConflictError(DescartesLabError):
    def __init__(self, realizable: list[str], nonrealizable: list[str]) -> None:
        super().__init__(
            "Conflicting criteria: realizable by "
            f"{', '.join(realizable)} but nonrealizable by {', '.join(nonrealizable)}"
        )
        self.realizable = realizable
        self.nonrealizable = nonrealizable
