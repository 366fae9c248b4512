"""Exhaustive search for k-term arithmetic progressions inside a sumset.

Strategy: enumerate the sumset up to the limit (a set of polylog size),
then for every ordered value pair (s0, s1) with s1 > s0 take N = s0,
D = s1 - s0 and test the remaining k-2 terms by hash lookup.  Complete by
construction: any progression's first two terms are such a pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sumset import SumsetElement, SumsetParams, element, value_set


@dataclass(frozen=True)
class Progression:
    """An arithmetic progression N, N+D, ..., N+(length-1)D with witnesses.

    Every term carries its complete representation list; D >= 1 always.
    """

    N: int
    D: int
    length: int
    terms: tuple[SumsetElement, ...]

    def term_values(self) -> list[int]:
        return [self.N + i * self.D for i in range(self.length)]


@dataclass(frozen=True)
class ApSearchReport:
    params: SumsetParams
    k: int
    limit: int
    progressions: tuple[Progression, ...]
    maximal_flags: tuple[bool, ...]

    def pairs(self) -> list[tuple[int, int]]:
        return [(p.N, p.D) for p in self.progressions]

    def maximal_pairs(self) -> list[tuple[int, int]]:
        return [
            (p.N, p.D)
            for p, flag in zip(self.progressions, self.maximal_flags)
            if flag
        ]


def _find_pairs(params: SumsetParams, k: int, limit: int) -> tuple[list[tuple[int, int]], set[int]]:
    values = value_set(params, limit)
    ordered = sorted(values)
    pairs: list[tuple[int, int]] = []
    n_vals = len(ordered)
    # N + (k-1)D = (k-1)*s1 - (k-2)*s0 is increasing in s1, so the inner
    # loop can stop as soon as the final term would exceed the limit.
    for i in range(n_vals):
        s0 = ordered[i]
        cap = limit + (k - 2) * s0
        for j in range(i + 1, n_vals):
            s1 = ordered[j]
            if (k - 1) * s1 > cap:
                break
            d = s1 - s0
            t = s1 + d
            ok = True
            for _ in range(k - 2):
                if t not in values:
                    ok = False
                    break
                t += d
            if ok:
                pairs.append((s0, d))
    return pairs, values


def _materialize(params: SumsetParams, n: int, d: int, k: int) -> Progression:
    terms = []
    for i in range(k):
        el = element(params, n + i * d)
        if el is None:  # cannot happen for pairs produced by the search
            raise AssertionError(f"term {n + i * d} lost its membership witness")
        terms.append(el)
    return Progression(n, d, k, tuple(terms))


def find_progressions(params: SumsetParams, k: int, limit: int) -> ApSearchReport:
    """All (N, D) with N, N+D, ..., N+(k-1)D in the sumset and N+(k-1)D <= limit.

    Progressions are reported as (N, D, k) windows sorted by (N, D); windows
    of a longer progression appear separately, with the maximal flag telling
    them apart (true iff neither N-D nor N+kD is in the sumset).
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    pairs, values = _find_pairs(params, k, limit)
    pairs.sort()
    progs = tuple(_materialize(params, n, d, k) for n, d in pairs)
    flags = []
    for n, d in pairs:
        before = n - d
        after = n + k * d
        extendable = (before >= 2 and before in values) or (
            after in values if after <= limit else _member(params, after)
        )
        flags.append(not extendable)
    return ApSearchReport(params, k, limit, progs, tuple(flags))


def _member(params: SumsetParams, n: int) -> bool:
    from .sumset import contains

    return contains(params, n)


@dataclass(frozen=True)
class Count3Report:
    """3-term progression counts at a ladder of limits, both conventions."""

    params: SumsetParams
    limits: tuple[int, ...]
    window_counts: tuple[int, ...]
    maximal_counts: tuple[int, ...]

    def stabilized(self, convention: str = "window") -> bool:
        counts = self.window_counts if convention == "window" else self.maximal_counts
        return len(counts) >= 2 and counts[-1] == counts[-2]


def count_3term_stable(params: SumsetParams, limits: list[int]) -> Count3Report:
    """Counts of distinct (N, D) 3-term progressions per limit.

    Reports both the raw window count and the maximal-progression count
    (windows whose one-step extensions in either direction leave the
    sumset); a stabilized flag compares the last two counts.
    """
    if any(l2 < l1 for l1, l2 in zip(limits, limits[1:])):
        raise ValueError("limits must be ascending")
    windows: list[int] = []
    maximal: list[int] = []
    for lim in limits:
        report = find_progressions(params, 3, lim)
        windows.append(len(report.progressions))
        maximal.append(sum(report.maximal_flags))
    return Count3Report(params, tuple(limits), tuple(windows), tuple(maximal))


def extend(params: SumsetParams, prog: Progression, direction: str) -> Progression | None:
    """One-term extension of a progression, or None if the new term is absent.

    direction 'forward' tests N + length*D; 'backward' tests N - D (which
    must still be a sumset element, in particular >= 2).
    """
    if direction == "forward":
        candidate = prog.N + prog.length * prog.D
        new_n = prog.N
    elif direction == "backward":
        candidate = prog.N - prog.D
        new_n = candidate
    else:
        raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")
    el = element(params, candidate)
    if el is None:
        return None
    if direction == "forward":
        terms = prog.terms + (el,)
    else:
        terms = (el,) + prog.terms
    return Progression(new_n, prog.D, prog.length + 1, terms)
