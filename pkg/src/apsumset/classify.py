"""The complete classification of 5-term progressions, and sweeps against it.

Every 5-term arithmetic progression N, N+D, ..., N+4D inside a sumset
S_{a,b} with b > a > 1 belongs to one of two one-parameter families

    family1(k): (a, b, N, D) = (2, 2^k + 1, 2^k + 1, 2^k)
    family2(k): (a, b, N, D) = (3, 4*3^(k-1) + 1, 3^(k-1) + 1, 2*3^(k-1))

or is one of nine sporadic tuples.  The sweeps here re-derive every 5-, 6-
and 7-term progression within a bounded (a, b) grid by exhaustive search
and match the findings against this table; they corroborate the
classification at desk scale, they do not prove it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apsearch import Progression, find_progressions
from .numutil import power_exponent
from .sumset import SumsetParams, contains, element

SPORADIC_5TERM: tuple[tuple[int, int, int, int], ...] = (
    (2, 3, 5, 2),
    (2, 3, 7, 6),
    (2, 3, 9, 8),
    (2, 3, 17, 24),
    (2, 3, 41, 24),
    (2, 5, 5, 8),
    (2, 9, 17, 24),
    (2, 9, 41, 24),
    (3, 4, 7, 6),
)

CT_6TERM: tuple[tuple[int, int, int, int], ...] = (
    (2, 3, 3, 2),
    (2, 3, 17, 24),
    (2, 9, 17, 24),
)


@dataclass(frozen=True)
class ClassEntry:
    """One classification entry: a family instance (with its k) or a sporadic."""

    kind: str  # 'family1' | 'family2' | 'sporadic'
    k: int | None
    tuple: tuple[int, int, int, int]


def family1_tuple(k: int) -> tuple[int, int, int, int]:
    if k < 1:
        raise ValueError("k must be >= 1")
    return (2, 2**k + 1, 2**k + 1, 2**k)


def family2_tuple(k: int) -> tuple[int, int, int, int]:
    if k < 1:
        raise ValueError("k must be >= 1")
    return (3, 4 * 3 ** (k - 1) + 1, 3 ** (k - 1) + 1, 2 * 3 ** (k - 1))


def theorem1_match(a: int, b: int, N: int, D: int) -> ClassEntry | None:
    """The classification entry matching (a, b, N, D), or None.

    Family parameters are recovered exactly (power_exponent on b - 1 resp.
    (b - 1) / 4); no floating point.
    """
    t = (a, b, N, D)
    if t in SPORADIC_5TERM:
        return ClassEntry("sporadic", None, t)
    if a == 2:
        k = power_exponent(b - 1, 2) if b >= 3 else None
        if k is not None and k >= 1 and t == family1_tuple(k):
            return ClassEntry("family1", k, t)
    if a == 3 and (b - 1) % 4 == 0:
        e = power_exponent((b - 1) // 4, 3) if b >= 5 else None
        if e is not None and t == family2_tuple(e + 1):
            return ClassEntry("family2", e + 1, t)
    return None


@dataclass(frozen=True)
class SweepConfig:
    a_max: int
    b_max: int
    term_limit: int
    k: int

    def __post_init__(self) -> None:
        if not (2 <= self.a_max <= self.b_max):
            raise ValueError("need 2 <= a_max <= b_max")
        if self.term_limit < 2 or self.k < 3:
            raise ValueError("bad term_limit or k")

    def pairs(self) -> list[tuple[int, int]]:
        return [
            (a, b)
            for a in range(2, self.a_max + 1)
            for b in range(a + 1, self.b_max + 1)
        ]


@dataclass(frozen=True)
class SweepFinding:
    a: int
    b: int
    N: int
    D: int
    maximal: bool
    entry: ClassEntry | None


@dataclass(frozen=True)
class SweepReport:
    config: SweepConfig
    findings: tuple[SweepFinding, ...]

    @property
    def unclassified(self) -> tuple[SweepFinding, ...]:
        return tuple(f for f in self.findings if f.entry is None)

    @property
    def witnessed_sporadics(self) -> tuple[tuple[int, int, int, int], ...]:
        return tuple(
            sorted(
                {
                    (f.a, f.b, f.N, f.D)
                    for f in self.findings
                    if f.entry is not None and f.entry.kind == "sporadic"
                }
            )
        )

    def witnessed_family(self, kind: str) -> tuple[int, ...]:
        ks = {
            f.entry.k
            for f in self.findings
            if f.entry is not None and f.entry.kind == kind and f.entry.k
        }
        return tuple(sorted(ks))

    def quadruples(self) -> list[tuple[int, int, int, int]]:
        return [(f.a, f.b, f.N, f.D) for f in self.findings]


def _sweep_pair(args: tuple[int, int, int, int]) -> list[tuple[int, int, int, int, bool]]:
    a, b, k, limit = args
    report = find_progressions(SumsetParams(a, b), k, limit)
    return [
        (a, b, p.N, p.D, flag)
        for p, flag in zip(report.progressions, report.maximal_flags)
    ]


def sweep_grid(cfg: SweepConfig, threads: int = 1) -> list[tuple[int, int, int, int, bool]]:
    """All k-term windows over the (a, b) grid, canonically sorted.

    The grid is embarrassingly parallel; results are re-sorted after the
    merge so the output is independent of the worker count.
    """
    jobs = [(a, b, cfg.k, cfg.term_limit) for a, b in cfg.pairs()]
    if threads > 1:
        import multiprocessing

        with multiprocessing.Pool(threads) as pool:
            chunks = pool.map(_sweep_pair, jobs)
    else:
        chunks = [_sweep_pair(j) for j in jobs]
    rows = [row for chunk in chunks for row in chunk]
    rows.sort()
    return rows


def verify_theorem1(cfg: SweepConfig, threads: int = 1) -> SweepReport:
    """Exhaustive k=5 sweep; every finding is matched against the table.

    The report lists unclassified progressions (expected: none) and which
    sporadic tuples / family parameters were witnessed within the grid.
    """
    findings = tuple(
        SweepFinding(a, b, n, d, maximal, theorem1_match(a, b, n, d))
        for a, b, n, d, maximal in sweep_grid(cfg, threads)
    )
    return SweepReport(cfg, findings)


def verify_corollary(cfg: SweepConfig, threads: int = 1) -> SweepReport:
    """Sweep for 6-term (or longer) windows; cfg.k chooses the length."""
    return verify_theorem1(cfg, threads)


@dataclass(frozen=True)
class NonextensionRow:
    family: str
    k: int
    params: tuple[int, int]  # (a, b)
    next_term: int  # N + 5D
    extends: bool
    witness: tuple[tuple[int, int], ...]  # representations if it extends


def family_nonextension(k_max: int) -> list[NonextensionRow]:
    """Check N + 5D membership for every family instance with k <= k_max.

    Only family1 at k = 1 extends to six terms (13 = 4 + 9); every other
    instance of either family stops at five.  Membership is decided by the
    sumset oracle, not by the algebra that predicts it.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rows = []
    for name, maker in (("family1", family1_tuple), ("family2", family2_tuple)):
        for k in range(1, k_max + 1):
            a, b, n, d = maker(k)
            nxt = n + 5 * d
            el = element(SumsetParams(a, b), nxt)
            rows.append(
                NonextensionRow(
                    name,
                    k,
                    (a, b),
                    nxt,
                    el is not None,
                    tuple(el.reps) if el is not None else (),
                )
            )
    return rows


def instantiate(a: int, b: int, N: int, D: int, length: int = 5) -> Progression | None:
    """Materialize (a, b, N, D) as a progression with membership witnesses.

    Returns None if some term is not in the sumset (i.e. the tuple does not
    actually describe a progression of the requested length).
    """
    params = SumsetParams(a, b)
    terms = []
    for i in range(length):
        el = element(params, N + i * D)
        if el is None:
            return None
        terms.append(el)
    return Progression(N, D, length, tuple(terms))
