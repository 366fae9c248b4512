"""Membership, representation and bounded enumeration for S = {a^x + b^y}.

The two-base sumset S_{a,b} consists of every integer of the form
a^x + b^y with x, y >= 0, for fixed integer bases b > a > 1.  Its smallest
element is a^0 + b^0 = 2, and it has at most (log_a n + 1)(log_b n + 1)
elements up to n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .numutil import power_exponent


@dataclass(frozen=True)
class SumsetParams:
    """The base pair (a, b) defining the sumset; requires b > a > 1."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (self.b > self.a > 1):
            raise ValueError(f"need b > a > 1, got a={self.a}, b={self.b}")


class Representation(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class SumsetElement:
    """A sumset value together with its complete list of representations."""

    value: int
    reps: tuple[Representation, ...]


def representations(params: SumsetParams, n: int) -> list[Representation]:
    """Complete, duplicate-free list of (x, y) with a^x + b^y = n, sorted by x.

    Iterates x over 0..log_a(n-1) and power-tests the remainder against base
    b; a^x determines y uniquely, so the list is complete by construction.
    An empty list means n is not in the sumset.
    """
    a, b = params.a, params.b
    out: list[Representation] = []
    if n < 2:
        return out
    ax = 1
    while ax < n:
        y = power_exponent(n - ax, b)
        if y is not None:
            out.append(Representation(power_exponent(ax, a), y))
        ax *= a
    return out


def contains(params: SumsetParams, n: int) -> bool:
    """True iff n = a^x + b^y for some x, y >= 0."""
    a, b = params.a, params.b
    if n < 2:
        return False
    ax = 1
    while ax < n:
        if power_exponent(n - ax, b) is not None:
            return True
        ax *= a
    return False


def element(params: SumsetParams, n: int) -> SumsetElement | None:
    reps = representations(params, n)
    return SumsetElement(n, tuple(reps)) if reps else None


def value_set(params: SumsetParams, limit: int) -> set[int]:
    """The set of sumset values <= limit (no representation bookkeeping)."""
    a, b = params.a, params.b
    out: set[int] = set()
    ax = 1
    while ax < limit:
        by = 1
        while ax + by <= limit:
            out.add(ax + by)
            by *= b
        ax *= a
    return out


def enumerate_up_to(params: SumsetParams, limit: int) -> list[SumsetElement]:
    """All distinct sumset values <= limit, ascending, with complete reps.

    Values with several representations appear once, carrying all of them;
    downstream arguments need to distinguish representations of a single
    term.
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    a, b = params.a, params.b
    found: dict[int, list[Representation]] = {}
    ax, x = 1, 0
    while ax < limit:
        by, y = 1, 0
        while ax + by <= limit:
            found.setdefault(ax + by, []).append(Representation(x, y))
            by *= b
            y += 1
        ax *= a
        x += 1
    return [
        SumsetElement(v, tuple(sorted(found[v])))
        for v in sorted(found)
    ]
