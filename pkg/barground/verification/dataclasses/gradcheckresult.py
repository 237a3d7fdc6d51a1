from dataclasses import dataclass


@dataclass(frozen=True)
class GradcheckResult:
    name: str
    max_relative_error: float
    tolerance: float

    @property
    def passed(self: "GradcheckResult") -> bool:
        # NaN never passes
        return self.max_relative_error <= self.tolerance
