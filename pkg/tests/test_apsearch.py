import pytest

from apsumset.apsearch import count_3term_stable, extend, find_progressions
from apsumset.sumset import SumsetParams, contains, enumerate_up_to


def brute_3term(params, limit):
    """O(n^2) pairwise search over the enumerated set with hash lookup."""
    values = [e.value for e in enumerate_up_to(params, limit)]
    vset = set(values)
    out = set()
    for i, s0 in enumerate(values):
        for s1 in values[i + 1 :]:
            d = s1 - s0
            if s1 + d <= limit and s1 + d in vset:
                out.add((s0, d))
    return sorted(out)


class TestFindProgressions:
    def test_s23_six_term(self):
        rep = find_progressions(SumsetParams(2, 3), 6, 10**6)
        assert rep.pairs() == [(3, 2), (17, 24)]

    def test_s29_six_term(self):
        rep = find_progressions(SumsetParams(2, 9), 6, 10**6)
        assert (17, 24) in rep.pairs()

    def test_tiny_window(self):
        rep = find_progressions(SumsetParams(2, 3), 3, 4)
        assert rep.pairs() == [(2, 1)]
        assert rep.progressions[0].term_values() == [2, 3, 4]

    def test_matches_brute_force(self):
        params = SumsetParams(2, 3)
        rep = find_progressions(params, 3, 10**4)
        assert rep.pairs() == brute_3term(params, 10**4)

    def test_terms_reverify_by_membership(self):
        params = SumsetParams(2, 5)
        rep = find_progressions(params, 4, 10**6)
        for prog in rep.progressions:
            for v in prog.term_values():
                assert contains(params, v)
            for term in prog.terms:
                assert term.reps  # nonempty witness

    def test_subwindow_closure(self):
        params = SumsetParams(2, 3)
        limit = 10**5
        k4 = set(find_progressions(params, 4, limit).pairs())
        k3 = set(find_progressions(params, 3, limit).pairs())
        for n, d in k4:
            assert (n, d) in k3
            assert (n + d, d) in k3

    def test_monotone_in_limit(self):
        params = SumsetParams(2, 7)
        small = set(find_progressions(params, 3, 10**4).pairs())
        large = set(find_progressions(params, 3, 10**6).pairs())
        assert small <= large

    def test_final_term_within_limit(self):
        rep = find_progressions(SumsetParams(2, 3), 5, 300)
        for prog in rep.progressions:
            assert prog.N + 4 * prog.D <= 300

    def test_maximal_flags(self):
        rep = find_progressions(SumsetParams(2, 3), 5, 10**4)
        by_pair = dict(zip(rep.pairs(), rep.maximal_flags))
        # 3,5,...,11 extends to 13 on the right; 5,...,13 extends to 3 on the left
        assert by_pair[(3, 2)] is False
        assert by_pair[(5, 2)] is False
        # 7, 13, 19, 25, 31 extends neither way in S_{2,3} (1 and 37 absent)
        assert by_pair[(7, 6)] is True

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            find_progressions(SumsetParams(2, 3), 2, 100)
        with pytest.raises(ValueError):
            find_progressions(SumsetParams(2, 3), 3, 1)


class TestExtend:
    def test_forward_five_to_six(self):
        params = SumsetParams(2, 3)
        five = next(
            p for p in find_progressions(params, 5, 100).progressions if (p.N, p.D) == (3, 2)
        )
        six = extend(params, five, "forward")
        assert six is not None
        assert six.length == 6
        assert six.term_values()[-1] == 13

    def test_forward_six_stops(self):
        params = SumsetParams(2, 3)
        five = next(
            p for p in find_progressions(params, 5, 100).progressions if (p.N, p.D) == (3, 2)
        )
        six = extend(params, five, "forward")
        assert extend(params, six, "forward") is None  # 15 is not in S_{2,3}

    def test_forward_17_24_stops_at_161(self):
        params = SumsetParams(2, 3)
        five = next(
            p
            for p in find_progressions(params, 6, 200).progressions
            if (p.N, p.D) == (17, 24)
        )
        assert extend(params, five, "forward") is None

    def test_backward(self):
        params = SumsetParams(2, 3)
        prog = next(
            p for p in find_progressions(params, 5, 100).progressions if (p.N, p.D) == (5, 2)
        )
        back = extend(params, prog, "backward")
        assert back is not None and back.N == 3 and back.length == 6

    def test_bad_direction(self):
        params = SumsetParams(2, 3)
        prog = find_progressions(params, 3, 10).progressions[0]
        with pytest.raises(ValueError):
            extend(params, prog, "sideways")


class TestCount3:
    def test_s27_stabilizes_at_22(self):
        rep = count_3term_stable(SumsetParams(2, 7), [10**6, 10**8])
        assert rep.window_counts == (22, 22)
        assert rep.stabilized("window")

    def test_s29_strictly_increasing(self):
        rep = count_3term_stable(SumsetParams(2, 9), [10**6, 10**9])
        assert rep.window_counts[0] < rep.window_counts[1]
        assert not rep.stabilized("window")

    def test_equal_limits_stabilized(self):
        rep = count_3term_stable(SumsetParams(4, 5), [10, 10])
        assert rep.window_counts[0] == rep.window_counts[1]
        assert rep.stabilized("window")

    def test_rejects_descending(self):
        with pytest.raises(ValueError):
            count_3term_stable(SumsetParams(2, 3), [100, 10])
