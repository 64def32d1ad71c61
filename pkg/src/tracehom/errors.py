"""Shared exception types."""


class ValidationError(ValueError):
    """Invalid user-supplied data.  Collects every detected problem so a
    caller can report all of them at once instead of the first only."""

    def __init__(self, problems):
        self.problems = tuple(problems)
        super().__init__("; ".join(self.problems))
