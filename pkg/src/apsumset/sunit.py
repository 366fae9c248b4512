"""Complete bounded solvers for signed two-prime exponential equations.

Three specialized solvers live here alongside a generic pattern solver:

* ``solve_pattern``     -- exhaustive enumeration of a signed equation
                           sum c_i * p^{e_i} * q^{f_i} = 0 over boxed
                           exponent variables, with optional primitivity,
                           vanishing-subsum and magnitude filters;
* ``deweger_3term``     -- x + y = z in coprime 13-smooth positive integers;
* ``deze_tijdeman_4term`` -- the two four-term shapes
                           p^x q^y +- p^z +- q^w +- 1 = 0 and
                           p^x +- q^y +- p^z +- q^w = 0 with all powers
                           bounded by 2^15;
* ``bajpai_bennett_5term`` -- the five-term {2,3}-unit equation
                           +-2^a1 3^b1 +- ... +- 2^a5 3^b5 = 0 under the
                           bounds max term <= 3^12, a_i <= 19, b_i <= 12.

All solvers are complete over their declared boxes and refuse (rather than
truncate) when the search space exceeds the configured budget.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Sequence

from .numutil import PrimeSet, is_prime, smooth_enumerate

DEFAULT_BUDGET = 50_000_000
DEWEGER_PRIMES = PrimeSet((2, 3, 5, 7, 11, 13))
DEWEGER_ORD_BOUNDS = {2: 15, 3: 10, 5: 7, 7: 6, 11: 5, 13: 4}


class SearchBudgetExceeded(RuntimeError):
    """Raised instead of silently truncating an oversized enumeration."""

    def __init__(self, estimate: int, budget: int):
        super().__init__(
            f"search space of {estimate} assignments exceeds budget {budget}"
        )
        self.estimate = estimate
        self.budget = budget


@dataclass(frozen=True)
class PatternTerm:
    """One signed monomial c * p^e * q^f; exponents are ints or variable names."""

    coefficient: int
    p_exp: int | str
    q_exp: int | str

    def __post_init__(self) -> None:
        if self.coefficient == 0:
            raise ValueError("coefficient must be nonzero")
        for e in (self.p_exp, self.q_exp):
            if isinstance(e, int) and e < 0:
                raise ValueError(f"fixed exponent must be >= 0, got {e}")


@dataclass(frozen=True)
class Pattern:
    """A signed two-prime equation with boxed exponent variables."""

    p: int
    q: int
    terms: tuple[PatternTerm, ...]
    var_bounds: tuple[tuple[str, int], ...]
    require_primitive: bool = False
    forbid_vanishing_subsums: bool = False
    value_bound: int | None = None

    def __post_init__(self) -> None:
        if not (is_prime(self.p) and is_prime(self.q) and self.p != self.q):
            raise ValueError(f"p, q must be distinct primes, got {self.p}, {self.q}")
        if len(self.terms) < 2:
            raise ValueError("pattern needs at least 2 terms")
        declared = {name for name, _ in self.var_bounds}
        used = {
            e
            for t in self.terms
            for e in (t.p_exp, t.q_exp)
            if isinstance(e, str)
        }
        if used != declared:
            raise ValueError(
                f"variable mismatch: terms use {sorted(used)}, bounds declare {sorted(declared)}"
            )

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.var_bounds)

    def search_space(self) -> int:
        est = 1
        for _, bound in self.var_bounds:
            est *= bound + 1
        return est


@dataclass(frozen=True)
class PatternSolution:
    """One satisfying exponent assignment, in declared variable order."""

    variables: tuple[str, ...]
    values: tuple[int, ...]
    term_values: tuple[int, ...]

    @property
    def assignment(self) -> dict[str, int]:
        return dict(zip(self.variables, self.values))


def has_vanishing_subsum(values: Sequence[int]) -> bool:
    """True iff some nonempty subset of the signed values sums to 0.

    Proper subsets are tested by exhaustive subset sums (at most 2^n of
    them; patterns are short).  A cancelling pair counts even when it is
    the whole equation, so a two-term identity like 2^a - 2^a = 0 is
    itself vanishing.
    """
    n = len(values)
    for i in range(n):
        for j in range(i + 1, n):
            if values[i] + values[j] == 0:
                return True
    for mask in range(1, (1 << n) - 1):
        if mask & (mask - 1) == 0:
            continue  # singletons are nonzero
        s = 0
        for i in range(n):
            if mask >> i & 1:
                s += values[i]
        if s == 0:
            return True
    return False


def solve_pattern(
    pattern: Pattern,
    side_predicate: Callable[[dict[str, int]], bool] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[PatternSolution]:
    """Every assignment within bounds satisfying the equation and all filters.

    Output is in lexicographic order of the assignment vector (declared
    variable order) and is complete over the box.  A search space larger
    than `budget` raises SearchBudgetExceeded up front.
    """
    est = pattern.search_space()
    if est > budget:
        raise SearchBudgetExceeded(est, budget)

    names = pattern.variables
    bounds = [b for _, b in pattern.var_bounds]
    p_pows = _power_table(pattern.p, _max_exp(pattern, bounds, "p"))
    q_pows = _power_table(pattern.q, _max_exp(pattern, bounds, "q"))
    index = {name: i for i, name in enumerate(names)}

    # Pre-resolve each term to (coefficient, p-exponent source, q-exponent source)
    # where a source is either ('const', exp) or ('var', position).
    resolved = []
    for t in pattern.terms:
        pe = ("const", t.p_exp) if isinstance(t.p_exp, int) else ("var", index[t.p_exp])
        qe = ("const", t.q_exp) if isinstance(t.q_exp, int) else ("var", index[t.q_exp])
        resolved.append((t.coefficient, pe, qe))

    out: list[PatternSolution] = []
    for assignment in itertools.product(*(range(b + 1) for b in bounds)):
        total = 0
        values = []
        for coeff, (pk, pv), (qk, qv) in resolved:
            pe = pv if pk == "const" else assignment[pv]
            qe = qv if qk == "const" else assignment[qv]
            v = coeff * p_pows[pe] * q_pows[qe]
            values.append(v)
            total += v
        if total != 0:
            continue
        if pattern.value_bound is not None and any(
            abs(v) > pattern.value_bound for v in values
        ):
            continue
        if pattern.require_primitive and gcd(*(abs(v) for v in values)) != 1:
            continue
        if pattern.forbid_vanishing_subsums and has_vanishing_subsum(values):
            continue
        if side_predicate is not None and not side_predicate(dict(zip(names, assignment))):
            continue
        out.append(PatternSolution(names, tuple(assignment), tuple(values)))
    return out


def _max_exp(pattern: Pattern, bounds: list[int], which: str) -> int:
    best = 0
    for i, t in enumerate(pattern.terms):
        e = t.p_exp if which == "p" else t.q_exp
        if isinstance(e, int):
            best = max(best, e)
    if bounds:
        best = max(best, max(bounds))
    return best


def _power_table(base: int, max_exp: int) -> list[int]:
    table = [1]
    for _ in range(max_exp):
        table.append(table[-1] * base)
    return table


# ---------------------------------------------------------------------------
# de Weger: x + y = z in coprime 13-smooth positive integers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TripleSolution:
    """A solution of x + y = z with x <= y, gcd(x, y) = 1, xyz smooth."""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if self.x + self.y != self.z or self.x > self.y or gcd(self.x, self.y) != 1:
            raise ValueError(f"invalid triple ({self.x}, {self.y}, {self.z})")


def _support_masks(values: list[int], primes: tuple[int, ...]) -> list[int]:
    masks = []
    for v in values:
        m = 0
        for i, p in enumerate(primes):
            if v % p == 0:
                m |= 1 << i
        masks.append(m)
    return masks


def deweger_3term(
    primes: PrimeSet = DEWEGER_PRIMES, z_limit: int = 10**12
) -> list[TripleSolution]:
    """Complete list of x + y = z, x <= y, gcd(x,y) = 1, xyz smooth, z <= z_limit.

    Key structural fact: gcd(x, y) = 1 and z = x + y force x, y, z to be
    pairwise coprime, so each prime of the smooth set divides at most one of
    them.  Enumeration therefore pairs smooth numbers with disjoint prime
    support; coprimality never needs a gcd call.  Sorted by (z, x).
    """
    if z_limit < 2:
        raise ValueError(f"z_limit must be >= 2, got {z_limit}")
    import numpy as np

    ps = tuple(primes)
    smooth = smooth_enumerate(primes, z_limit)
    arr = np.array(smooth, dtype=np.int64)
    masks = np.array(_support_masks(smooth, ps), dtype=np.int64)
    n = len(smooth)

    out: list[TripleSolution] = []
    for i in range(n):
        x = smooth[i]
        if 2 * x > z_limit:
            break
        hi = int(np.searchsorted(arr, z_limit - x, side="right"))
        if hi <= i:
            continue
        ys = arr[i:hi]
        ok = (masks[i:hi] & masks[i]) == 0
        if not ok.any():
            continue
        cand = ys[ok]
        sums = cand + x
        pos = np.searchsorted(arr, sums)
        pos[pos >= n] = n - 1
        hit = arr[pos] == sums
        for y, z in zip(cand[hit].tolist(), sums[hit].tolist()):
            out.append(TripleSolution(x, y, z))
    out.sort(key=lambda t: (t.z, t.x))
    return out


def triple_ord_profile(sol: TripleSolution, primes: PrimeSet = DEWEGER_PRIMES) -> dict[int, int]:
    """ord_p(x*y*z) for each prime of the set."""
    from .numutil import ord_p

    return {p: ord_p(sol.x * sol.y * sol.z, p) for p in primes}


# ---------------------------------------------------------------------------
# Deze-Tijdeman: four-term shapes with all powers <= 2^15
# ---------------------------------------------------------------------------

DT_POWER_BOUND = 2**15
SHAPE_PRODUCT = "pxqy+-pz+-qw+-1"
SHAPE_PAIRS = "px+-qy+-pz+-qw"


@dataclass(frozen=True)
class FourTermSolution:
    """A solution of one of the two four-term shapes, tagged by sign vector.

    ``terms`` are the four signed summands in shape order; they sum to 0.
    The leading term's sign is normalized positive, and within the pairs
    shape same-signed same-prime exponents are ordered descending, so each
    solution appears exactly once.
    """

    shape: str
    signs: tuple[int, ...]
    exponents: tuple[int, ...]
    terms: tuple[int, ...]


def _bounded_exponent(base: int, bound: int) -> int:
    e = 0
    v = base
    while v <= bound:
        e += 1
        v *= base
    return e


def deze_tijdeman_4term(p: int, q: int, power_bound: int = DT_POWER_BOUND) -> list[FourTermSolution]:
    """Complete solutions of both four-term shapes with every power <= 2^15.

    Shape 'pxqy+-pz+-qw+-1': p^x q^y + s2 p^z + s3 q^w + s4 = 0.
    Shape 'px+-qy+-pz+-qw':  p^x + s2 q^y + s3 p^z + s4 q^w = 0.
    The individual powers p^x, q^y, p^z, q^w are each bounded; the product
    p^x q^y in the first shape may exceed the bound.
    """
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise ValueError(f"p, q must be distinct primes, got {p}, {q}")
    if max(p, q) >= 200:
        raise ValueError(f"max(p, q) must be < 200, got {max(p, q)}")

    xmax = _bounded_exponent(p, power_bound)
    ymax = _bounded_exponent(q, power_bound)
    p_pows = _power_table(p, xmax)
    q_pows = _power_table(q, ymax)
    signs3 = list(itertools.product((1, -1), repeat=3))

    out: list[FourTermSolution] = []

    # p^x q^y + s2 p^z + s3 q^w + s4 = 0
    for x in range(xmax + 1):
        for y in range(ymax + 1):
            head = p_pows[x] * q_pows[y]
            for z in range(xmax + 1):
                for w in range(ymax + 1):
                    pz, qw = p_pows[z], q_pows[w]
                    for s2, s3, s4 in signs3:
                        if head + s2 * pz + s3 * qw + s4 == 0:
                            out.append(
                                FourTermSolution(
                                    SHAPE_PRODUCT,
                                    (1, s2, s3, s4),
                                    (x, y, z, w),
                                    (head, s2 * pz, s3 * qw, s4),
                                )
                            )

    # p^x + s2 q^y + s3 p^z + s4 q^w = 0
    for x in range(xmax + 1):
        px = p_pows[x]
        for y in range(ymax + 1):
            qy = q_pows[y]
            for z in range(xmax + 1):
                pz = p_pows[z]
                for w in range(ymax + 1):
                    qw = q_pows[w]
                    for s2, s3, s4 in signs3:
                        # canonical representative under the two in-shape swaps
                        if s3 == 1 and z > x:
                            continue
                        if s2 == s4 and w > y:
                            continue
                        if px + s2 * qy + s3 * pz + s4 * qw == 0:
                            out.append(
                                FourTermSolution(
                                    SHAPE_PAIRS,
                                    (1, s2, s3, s4),
                                    (x, y, z, w),
                                    (px, s2 * qy, s3 * pz, s4 * qw),
                                )
                            )

    out.sort(key=lambda s: (s.shape, s.signs, s.exponents))
    return out


def pillai_difference_table(
    prime_pairs: Sequence[tuple[int, int]], power_bound: int = DT_POWER_BOUND
) -> list[tuple[int, int, int, int, int, int]]:
    """All (p, q, x, y, z, w) with p^x - p^y = q^z - q^w > 0, powers <= bound.

    Normalized with x > y >= 0 and z > w >= 0 so each equal-difference pair
    is listed once; sorted by (p, q, x, y, z, w).
    """
    out = []
    for p, q in prime_pairs:
        if not (is_prime(p) and is_prime(q)) or p == q:
            raise ValueError(f"bad prime pair ({p}, {q})")
        pe = _bounded_exponent(p, power_bound)
        qe = _bounded_exponent(q, power_bound)
        p_pows = _power_table(p, pe)
        q_pows = _power_table(q, qe)
        diffs: dict[int, list[tuple[int, int]]] = {}
        for z in range(1, qe + 1):
            for w in range(z):
                diffs.setdefault(q_pows[z] - q_pows[w], []).append((z, w))
        for x in range(1, pe + 1):
            for y in range(x):
                d = p_pows[x] - p_pows[y]
                for z, w in diffs.get(d, ()):
                    out.append((p, q, x, y, z, w))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Bajpai-Bennett: the five-term {2,3}-unit equation
# ---------------------------------------------------------------------------

BB5_ALPHA_MAX = 19
BB5_BETA_MAX = 12
BB5_VALUE_BOUND = 3**12


@dataclass(frozen=True)
class SignedMonomial:
    sign: int
    alpha: int
    beta: int
    value: int  # 2^alpha * 3^beta, always positive

    @property
    def signed_value(self) -> int:
        return self.sign * self.value


@dataclass(frozen=True)
class FiveTermSolution:
    """Five signed monomials 2^a 3^b summing to zero.

    Terms are ordered by decreasing magnitude; the largest-magnitude term
    has positive sign (global sign normalization).  Magnitudes are pairwise
    distinct and the five share no common factor.
    """

    terms: tuple[SignedMonomial, ...]

    def signed_values(self) -> tuple[int, ...]:
        return tuple(t.signed_value for t in self.terms)


def _bb5_value_list(alpha_max: int, beta_max: int, value_bound: int) -> list[tuple[int, int, int]]:
    vals = []
    b3 = 1
    for b in range(beta_max + 1):
        v = b3
        for a in range(alpha_max + 1):
            if v > value_bound:
                break
            vals.append((v, a, b))
            v *= 2
        b3 *= 3
    vals.sort()
    return vals


def bajpai_bennett_5term(
    alpha_max: int = BB5_ALPHA_MAX,
    beta_max: int = BB5_BETA_MAX,
    value_bound: int = BB5_VALUE_BOUND,
) -> list[FiveTermSolution]:
    """Complete primitive solutions of the five-term signed {2,3} equation.

    Enumerates sums of two monomials and of three monomials over the value
    set {2^a 3^b <= value_bound : a <= alpha_max, b <= beta_max} and joins
    them on opposite sums (meet in the middle; the ten-exponent box is far
    too large to walk directly).  Solutions have pairwise distinct term
    magnitudes, which for five terms is equivalent to excluding vanishing
    subsums, and gcd of the magnitudes 1.
    """
    vals = _bb5_value_list(alpha_max, beta_max, value_bound)
    n = len(vals)
    values = [v for v, _, _ in vals]
    by_value = {v: (a, b) for v, a, b in vals}

    pair_sums: dict[int, list[tuple[int, int, int, int]]] = {}
    for i in range(n):
        vi = values[i]
        for j in range(i + 1, n):
            vj = values[j]
            for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                s = si * vi + sj * vj
                pair_sums.setdefault(s, []).append((i, si, j, sj))

    seen: set[tuple[tuple[int, int], ...]] = set()
    solutions: list[FiveTermSolution] = []
    sign3 = list(itertools.product((1, -1), repeat=3))
    for c in itertools.combinations(range(n), 3):
        v0, v1, v2 = values[c[0]], values[c[1]], values[c[2]]
        for s0, s1, s2 in sign3:
            target = -(s0 * v0 + s1 * v1 + s2 * v2)
            for i, si, j, sj in pair_sums.get(target, ()):
                if i in c or j in c:
                    continue
                key_items = sorted(
                    ((values[i], si), (values[j], sj), (v0, s0), (v1, s1), (v2, s2)),
                    reverse=True,
                )
                # global sign: flip so the largest-magnitude term is positive
                if key_items[0][1] < 0:
                    key_items = [(v, -s) for v, s in key_items]
                key = tuple(key_items)
                if key in seen:
                    continue
                seen.add(key)
                exps = [by_value[v] for v, _ in key_items]
                if min(a for a, _ in exps) != 0 or min(b for _, b in exps) != 0:
                    continue  # not primitive
                terms = tuple(
                    SignedMonomial(s, by_value[v][0], by_value[v][1], v)
                    for v, s in key_items
                )
                solutions.append(FiveTermSolution(terms))
    solutions.sort(key=lambda sol: sol.signed_values(), reverse=True)
    return solutions
