"""Integer factorization, divisor enumeration, and gcd.

Both computation paths consume the canonical :class:`Factorization` built
here: the closed forms read only the prime exponents, the brute-force graph
oracle enumerates the actual divisors.  Plain Python ints are used
throughout, so every value is exact at any size.

All functions are pure and all returned values immutable, so they are safe
to share across threads or worker processes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache
from math import gcd, prod

__all__ = [
    "DEFAULT_CAP",
    "CapExceededError",
    "Factorization",
    "divisor_count",
    "divisors",
    "exact_half",
    "factorize",
    "gcd",
    "is_prime",
]

#: Largest divisor count for which explicit divisor enumeration (and hence
#: graph construction) is allowed unless the caller overrides it.  Keeps the
#: worst-case brute-force time for a single n in the seconds range.
DEFAULT_CAP = 5000

# Trial division strips primes below this; Pollard rho handles the rest.
# Kept modest so that factoring thousands of 12-digit numbers stays fast.
_TRIAL_BOUND = 10_000

# Fixed seed for the rho stage, so factorize(n) is deterministic.
_RHO_SEED = 0x0D17C0DE

# Miller-Rabin with these bases is a proven primality test below ~3.3e24;
# beyond that the same fixed bases make it a deterministic strong test with
# no known counterexample.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class CapExceededError(ValueError):
    """Divisor count too large for explicit enumeration."""

    def __init__(self, n: int, count: int, cap: int):
        super().__init__(
            f"n = {n} has {count} divisors, above the configured cap of {cap}"
        )
        self.n = n
        self.divisor_count = count
        self.cap = cap


def exact_half(value: int) -> int:
    """Halve an integer that must be even; odd input means an arithmetic bug
    somewhere upstream, so fail loudly instead of truncating."""
    if value & 1:
        raise ArithmeticError(f"expected an even value, got {value}")
    return value >> 1


@cache
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * _TRIAL_BOUND
    sieve[0] = sieve[1] = 0
    for p in range(2, int(_TRIAL_BOUND**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (see _MR_BASES note)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization n = p1**e1 * ... with p1 < p2 < ...

    ``factors`` is a tuple of (prime, exponent) pairs, empty exactly when
    n == 1.  The constructor validates the invariants, so a Factorization
    in hand is always trustworthy.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        previous = 1
        for p, e in self.factors:
            if p <= previous:
                raise ValueError("primes must be distinct and strictly increasing")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            previous = p
        if prod(p**e for p, e in self.factors) != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _pollard_rho(n: int, rng: random.Random) -> int:
    """Brent's cycle variant of Pollard rho; n must be an odd composite
    with no prime factor below _TRIAL_BOUND."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Backtrack one multiplication at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        # Degenerate cycle; retry with fresh parameters.


def factorize(n: int) -> Factorization:
    """Factor a positive integer into its canonical prime factorization.

    Trial division by the primes below 10000 first, then Pollard rho with a
    fixed-seed RNG and Miller-Rabin checks on the remaining cofactors, so the
    result is deterministic for a given n and comfortably handles inputs far
    beyond what the explicit graph can represent.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    remaining = n
    exponents: dict[int, int] = {}
    for p in _small_primes():
        if p * p > remaining:
            break
        while remaining % p == 0:
            exponents[p] = exponents.get(p, 0) + 1
            remaining //= p
    if remaining > 1:
        if remaining < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(remaining):
            # Any composite below the bound squared would have had a small
            # prime factor, so this cofactor is prime.
            exponents[remaining] = exponents.get(remaining, 0) + 1
        else:
            rng = random.Random(_RHO_SEED)
            stack = [remaining]
            while stack:
                m = stack.pop()
                if is_prime(m):
                    exponents[m] = exponents.get(m, 0) + 1
                    continue
                d = _pollard_rho(m, rng)
                stack.append(d)
                stack.append(m // d)
    return Factorization(n, tuple(sorted(exponents.items())))


def divisor_count(f: Factorization) -> int:
    """Number of positive divisors, the product of (exponent + 1) terms.
    Never enumerates the divisors themselves."""
    return prod(e + 1 for _, e in f.factors)


def divisors(f: Factorization, cap: int | None = None) -> list[int]:
    """All positive divisors of f.n in strictly ascending order.

    With ``cap`` set, refuses enumeration when the divisor count exceeds it,
    signaling that brute-force work on this n is out of reach.
    """
    count = divisor_count(f)
    if cap is not None and count > cap:
        raise CapExceededError(f.n, count, cap)
    divs = [1]
    for p, e in f.factors:
        powers = [p**i for i in range(1, e + 1)]
        divs += [d * q for d in divs for q in powers]
    divs.sort()
    return divs
