"""Closed-form index evaluation from the prime factorization alone.

Every divisor prime graph has diameter at most 2 (divisor 1 is adjacent to
everything), which collapses each distance-based index into a function of
just two structural counts: the divisor count and the edge count.  Both are
short products over the prime exponents of n, so each formula below runs in
time linear in the number of distinct primes, no matter how many divisors n
has.  The brute-force counterpart in :mod:`divprime.oracle` computes the
same quantities definitionally, and never reads this module's arithmetic.

Writing the exponents of n as e1..er and D for the divisor count:

* ordered coprime divisor pairs:  prod(2*ei + 1)
  (per prime, the exponent pair (a, b) needs min(a, b) = 0, which allows
  2*ei + 1 combinations; the only self-pair counted is (1, 1))
* edge count:                     (prod(2*ei + 1) - 1) / 2
* degree sum:                     prod(2*ei + 1) - 1
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from .arithmetic import Factorization, divisor_count, exact_half
from .report import CLOSED_FORM, IndexReport

__all__ = [
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
]


def _ordered_coprime_pairs(f: Factorization) -> int:
    """Number of ordered divisor pairs (u, v) with gcd(u, v) = 1."""
    return prod(2 * e + 1 for _, e in f.factors)


def cf_edge_count(f: Factorization) -> int:
    """Edge count: (prod(2e+1) - 1) / 2.

    The enclosed product counts ordered coprime pairs and is odd, since the
    only coprime self-pair is (1, 1); the halving is therefore exact.
    """
    return exact_half(_ordered_coprime_pairs(f) - 1)


def cf_degree(f: Factorization, d: int) -> int:
    """Degree of the vertex for divisor d: the number of divisors coprime
    to d, i.e. prod of (e+1) over the primes of n not dividing d.  Divisor 1
    is coprime to everything but itself, giving D - 1."""
    if d < 1 or f.n % d:
        raise ValueError(f"{d} does not divide {f.n}")
    if d == 1:
        return divisor_count(f) - 1
    return prod(e + 1 for p, e in f.factors if d % p)


def cf_wiener(f: Factorization) -> int:
    """Wiener index: D(D-1) - |E|.

    Edges contribute distance 1 and every other pair distance 2, so the sum
    over unordered pairs is 2*C(D,2) - |E|.
    """
    count = divisor_count(f)
    return count * (count - 1) - cf_edge_count(f)


def cf_harary(f: Factorization) -> Fraction:
    """Harary index: (D(D-1) + prod(2e+1) - 1) / 4, reduced.

    Reciprocal distances are 1 on edges and 1/2 elsewhere, hence the exact
    quarter denominator.
    """
    count = divisor_count(f)
    return Fraction(count * (count - 1) + _ordered_coprime_pairs(f) - 1, 4)


def cf_hyper_wiener(f: Factorization) -> int:
    """Hyper-Wiener index: 3D(D-1)/2 - prod(2e+1) + 1.

    Each edge contributes (1 + 1)/2 = 1 and each distance-2 pair
    (2 + 4)/2 = 3; D(D-1) is even so the halving is exact.
    """
    count = divisor_count(f)
    return exact_half(3 * count * (count - 1)) - _ordered_coprime_pairs(f) + 1


def cf_zagreb_first(f: Factorization) -> int:
    """First Zagreb index: prod((e+1)^2 + e) - 2D + 1.

    The product is the sum of squared coprime-divisor counts over all
    divisors; the correction replaces the count D at divisor 1 by its true
    degree D - 1.
    """
    return prod((e + 1) ** 2 + e for _, e in f.factors) - 2 * divisor_count(f) + 1


def cf_zagreb_second(f: Factorization) -> int:
    """Second Zagreb index over edges:
    (D * prod(3e+1) - 2 * prod(2e+1) - D^2 + 2D) / 2.

    D * prod(3e+1) sums the degree-weight products over all ordered coprime
    pairs; subtracting the central vertex's share and halving leaves the sum
    of degree products over undirected edges.
    """
    count = divisor_count(f)
    bracket = (
        count * prod(3 * e + 1 for _, e in f.factors)
        - 2 * _ordered_coprime_pairs(f)
        - count * count
        + 2 * count
    )
    return exact_half(bracket)


def cf_gutman(f: Factorization) -> int:
    """Gutman index: (degree sum)^2 - M1 - M2.

    Distance-weighting degree products at diameter 2 doubles every non-edge
    term, and the squared degree sum minus M1 is exactly twice the sum of
    all pairwise degree products.
    """
    total_degree = _ordered_coprime_pairs(f) - 1
    return total_degree**2 - cf_zagreb_first(f) - cf_zagreb_second(f)


def cf_schultz(f: Factorization) -> int:
    """Schultz index: 2(D-1) * prod(2e+1) - prod((e+1)^2 + e) + 1.

    Equals 2(D-1) * (degree sum) - M1; each degree appears D-1 times across
    all pairs, doubled for distance 2, minus the edge correction M1.
    """
    count = divisor_count(f)
    return (
        2 * (count - 1) * _ordered_coprime_pairs(f)
        - prod((e + 1) ** 2 + e for _, e in f.factors)
        + 1
    )


def cf_eccentric_connectivity(f: Factorization) -> int:
    """Eccentric connectivity index, by case on the divisor count.

    A single vertex (n = 1) has eccentricity 0, so the index is 0.  For
    prime n the graph is a single edge, both eccentricities 1, index 2.
    Otherwise divisor 1 has eccentricity 1 and every other vertex 2, giving
    2 * prod(2e+1) - D - 1.  The general formula would yield 3 for prime n,
    which is why D = 2 is dispatched separately.
    """
    count = divisor_count(f)
    if count == 1:
        return 0
    if count == 2:
        return 2
    return 2 * _ordered_coprime_pairs(f) - count - 1


def cf_report(f: Factorization) -> IndexReport:
    """Evaluate all eight indices plus the structural counts in one go."""
    return IndexReport(
        n=f.n,
        divisor_count=divisor_count(f),
        edge_count=cf_edge_count(f),
        degree_sum=_ordered_coprime_pairs(f) - 1,
        wiener=cf_wiener(f),
        harary=cf_harary(f),
        hyper_wiener=cf_hyper_wiener(f),
        zagreb1=cf_zagreb_first(f),
        zagreb2=cf_zagreb_second(f),
        gutman=cf_gutman(f),
        schultz=cf_schultz(f),
        eccentric_connectivity=cf_eccentric_connectivity(f),
        source=CLOSED_FORM,
        diameter=None,
    )
