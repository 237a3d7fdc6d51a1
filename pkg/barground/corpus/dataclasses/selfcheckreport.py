from dataclasses import dataclass


@dataclass
class SelfCheckReport:
    """
    class SelfCheckReport

    The outcome of the planted-segment recall check over a corpus
    """

    separated_clips: int
    total_clips: int
    skipped_samples: int

    @property
    def fraction(self: "SelfCheckReport") -> float:
        if self.total_clips == 0:
            return 0.0

        return self.separated_clips / self.total_clips
