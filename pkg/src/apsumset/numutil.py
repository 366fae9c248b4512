"""Exact arbitrary-precision integer utilities shared by all solvers.

Everything here works on Python ints only; no floating point enters any
arithmetic path.  Logarithms are used solely for search-space *estimates*,
never to decide equality of integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Witnesses proving deterministic Miller-Rabin correct for n < 3.3 * 10^24,
# far beyond every quantity handled here.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for word-sized (and moderately larger) n."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def power_exponent(n: int, base: int) -> int | None:
    """Return e with base**e == n exactly, or None if n is not a power of base.

    Computed by repeated division so the answer is exact for any size of n.
    power_exponent(1, b) == 0 for every base.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    e = 0
    while n % base == 0:
        n //= base
        e += 1
    return e if n == 1 else None


def ord_p(n: int, p: int) -> int:
    """Largest e such that p**e divides n (n >= 1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) computed exactly by integer Newton iteration."""
    if n < 0 or k < 1:
        raise ValueError("iroot requires n >= 0 and k >= 1")
    if n == 0:
        return 0
    if k == 1:
        return n
    x = 1 << -(-n.bit_length() // k)  # >= n^(1/k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def ilog(n: int, base: int) -> int:
    """Greatest e with base**e <= n, by exact repeated multiplication."""
    if n < 1 or base < 2:
        raise ValueError("ilog requires n >= 1 and base >= 2")
    e = 0
    power = base
    while power <= n:
        power *= base
        e += 1
    return e


@dataclass(frozen=True)
class PrimeSet:
    """A strictly increasing tuple of verified primes."""

    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.primes:
            raise ValueError("PrimeSet must be nonempty")
        prev = 1
        for p in self.primes:
            if p <= prev:
                raise ValueError(f"primes must be strictly increasing, got {self.primes}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(tuple(sorted(primes)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __len__(self) -> int:
        return len(self.primes)


def smooth_enumerate(primes: PrimeSet | Iterable[int], limit: int) -> list[int]:
    """All integers in [1, limit] whose prime factors all lie in `primes`, sorted.

    Depth-first products over the prime list rather than a sieve: the count of
    smooth numbers is polylogarithmic in the limit, so this stays cheap even
    at limits around 10^13 where sieving is hopeless.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    ps = tuple(primes)
    out: list[int] = []

    def descend(idx: int, value: int) -> None:
        if idx == len(ps):
            out.append(value)
            return
        p = ps[idx]
        while True:
            descend(idx + 1, value)
            if value > limit // p:
                break
            value *= p

    descend(0, 1)
    out.sort()
    return out


def factor_over(n: int, primes: PrimeSet | Iterable[int]) -> tuple[dict[int, int], int]:
    """Split n as (prod p^e over `primes`) * cofactor; returns ({p: e}, cofactor)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    exps: dict[int, int] = {}
    for p in primes:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exps[p] = e
    return exps, n
