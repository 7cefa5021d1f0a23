"""Grid-sweep verification reports shared by the inequality checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of checking |lhs| <= rhs over a grid of points.

    worst_ratio is the maximum of |lhs|/rhs over the grid; the report
    passes iff that maximum is <= 1 (an empty grid passes vacuously with
    worst_ratio 0).  witness is the grid point attaining the maximum.
    """

    worst_ratio: float = 0.0
    witness: tuple | None = None
    points_checked: int = 0
    passed: bool = True
    label: str = ""

    def observe(self, ratio, point) -> None:
        self.points_checked += 1
        if ratio > self.worst_ratio:
            self.worst_ratio = ratio
            self.witness = point
        if ratio > 1:
            self.passed = False

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Max-reduction of two partial reports (associative, order-free)."""
        self.points_checked += other.points_checked
        if other.worst_ratio > self.worst_ratio:
            self.worst_ratio = other.worst_ratio
            self.witness = other.witness
        self.passed = self.passed and other.passed
        return self

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "passed": self.passed,
            "worst_ratio": float(self.worst_ratio),
            "witness": self.witness,
            "points_checked": self.points_checked,
        }
