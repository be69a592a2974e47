"""Topological indices of divisor prime graphs.

The divisor prime graph of a positive integer n has the positive divisors
of n as vertices, two distinct divisors adjacent exactly when they are
coprime.  This package evaluates eight classical topological indices of
that graph (Wiener, Harary, hyper-Wiener, first and second Zagreb, Gutman,
Schultz, eccentric connectivity) two independent ways:

* :mod:`divprime.formulas` evaluates closed-form expressions straight from
  the prime factorization, in time linear in the number of distinct primes;
* :mod:`divprime.oracle` builds the graph explicitly and computes every
  index from its defining sum, serving as brute-force ground truth.

:mod:`divprime.verify` reconciles the two paths, and :mod:`divprime.cli`
exposes computing, sweeping, and graph export on the command line.
"""

from .arithmetic import (
    DEFAULT_CAP,
    CapExceededError,
    Factorization,
    divisor_count,
    divisors,
    factorize,
    gcd,
    is_prime,
)
from .formulas import (
    cf_degree,
    cf_eccentric_connectivity,
    cf_edge_count,
    cf_gutman,
    cf_harary,
    cf_hyper_wiener,
    cf_report,
    cf_schultz,
    cf_wiener,
    cf_zagreb_first,
    cf_zagreb_second,
)
from .oracle import (
    DistanceSummary,
    DivisorGraph,
    build_graph,
    degree_of,
    distance_summary,
    edges,
    oracle_report,
)
from .report import IndexReport, format_rational
from .verify import (
    COMPARED_FIELDS,
    IndexComparison,
    SweepSummary,
    VerificationResult,
    verify_n,
    verify_range,
    verify_results,
)

__version__ = "0.1.0"

__all__ = [
    "COMPARED_FIELDS",
    "DEFAULT_CAP",
    "CapExceededError",
    "DistanceSummary",
    "DivisorGraph",
    "Factorization",
    "IndexComparison",
    "IndexReport",
    "SweepSummary",
    "VerificationResult",
    "build_graph",
    "cf_degree",
    "cf_eccentric_connectivity",
    "cf_edge_count",
    "cf_gutman",
    "cf_harary",
    "cf_hyper_wiener",
    "cf_report",
    "cf_schultz",
    "cf_wiener",
    "cf_zagreb_first",
    "cf_zagreb_second",
    "degree_of",
    "distance_summary",
    "divisor_count",
    "divisors",
    "edges",
    "factorize",
    "format_rational",
    "gcd",
    "is_prime",
    "oracle_report",
    "verify_n",
    "verify_range",
    "verify_results",
]
