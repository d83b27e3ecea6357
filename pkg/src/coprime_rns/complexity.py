"""Closed-form operation-count estimate T = Y * (N**2 + k**3)."""
from dataclasses import dataclass

from .errors import DomainError
from .generator import check_range


@dataclass(frozen=True)
class ComplexityEstimate:
    range_lo: int
    range_hi: int
    range_size: int
    set_size: int
    operations: int


@dataclass(frozen=True)
class TableRow:
    lo: int
    hi: int
    k: int
    operations: int

    @property
    def consistent(self):
        """Whether the tabulated count satisfies the formula with the tabulated k."""
        return estimate(self.lo, self.hi, self.k).operations == self.operations


# Published reference rows: (X, Y, k, T).
REFERENCE_TABLE = (
    TableRow(2, 32, 11, 73_344),
    TableRow(2, 64, 18, 627_264),
    TableRow(2, 128, 31, 5_877_760),
    TableRow(2, 256, 54, 56_957_184),
    TableRow(2, 512, 99, 630_407_680),
    TableRow(2, 1024, 172, 6_282_265_664),
    TableRow(2, 2048, 309, 68_988_812_224),
    TableRow(17, 31, 7, 17_608),
    TableRow(33, 64, 11, 150_720),
    TableRow(65, 128, 17, 1_153_152),
    TableRow(129, 256, 27, 9_233_152),
)


def estimate(X, Y, k):
    X, Y = check_range(X, Y)
    if k < 1:
        raise DomainError(f"set size k must be positive, got {k}")
    n = Y - X + 1
    return ComplexityEstimate(X, Y, n, int(k), Y * (n * n + k**3))


def table_report(k_for=None):
    """Recompute every reference row; returns (row, estimate, flag) tuples.

    ``k_for(X, Y)`` supplies the set size (defaults to the tabulated k).
    ``flag`` is "ok" when the recomputed T matches the table and
    "inconsistent" when the table contradicts its own formula.
    """
    out = []
    for row in REFERENCE_TABLE:
        k = row.k if k_for is None else k_for(row.lo, row.hi)
        est = estimate(row.lo, row.hi, k)
        if not row.consistent:
            flag = "inconsistent"
        elif est.operations == row.operations:
            flag = "ok"
        else:
            flag = "mismatch"
        out.append((row, est, flag))
    return out
