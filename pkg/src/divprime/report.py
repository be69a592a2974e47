"""Result container shared by the closed-form and brute-force paths."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["CLOSED_FORM", "ORACLE", "IndexReport", "format_rational"]

CLOSED_FORM = "closed_form"
ORACLE = "oracle"

_INT_FIELDS = (
    "edge_count",
    "degree_sum",
    "wiener",
    "hyper_wiener",
    "zagreb1",
    "zagreb2",
    "gutman",
    "schultz",
    "eccentric_connectivity",
)


@dataclass(frozen=True)
class IndexReport:
    """The eight topological indices of one divisor prime graph, plus the
    structural counts they derive from.

    All indices are exact integers except the Harary index, which is an
    exact rational with denominator dividing 4.  ``diameter`` is only known
    on the brute-force path and is None on closed-form reports.
    """

    n: int
    divisor_count: int
    edge_count: int
    degree_sum: int
    wiener: int
    harary: Fraction
    hyper_wiener: int
    zagreb1: int
    zagreb2: int
    gutman: int
    schultz: int
    eccentric_connectivity: int
    source: str
    diameter: int | None = None

    def __post_init__(self):
        if 4 % self.harary.denominator:
            raise ValueError(f"harary denominator must divide 4: {self.harary}")
        if self.degree_sum != 2 * self.edge_count:
            raise ValueError(
                f"degree sum {self.degree_sum} != twice edge count {self.edge_count}"
            )
        for name in _INT_FIELDS:
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.source not in (CLOSED_FORM, ORACLE):
            raise ValueError(f"unknown source tag {self.source!r}")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as an explicit "p/q" string, "/1" included."""
    return f"{value.numerator}/{value.denominator}"
