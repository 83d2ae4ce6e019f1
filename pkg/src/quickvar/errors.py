"""Shared exception types."""


class CapacityError(Exception):
    """An instance size exceeded a configured guard.

    Exact rationals and exhaustive enumeration blow up fast; the guards keep
    accidental multi-gigabyte computations from starting at all.
    """

    def __init__(self, what: str, n: int, guard: int) -> None:
        super().__init__(f"{what}: n={n} exceeds guard {guard}")
        self.what = what
        self.n = n
        self.guard = guard
