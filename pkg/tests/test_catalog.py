import pytest

from apsumset.catalog import (
    CASE_B4_STEP1,
    CASE_B9_STEP1,
    CASE_OUT_OF_HYPOTHESIS,
    CASE_POW23_PLUS_ONE,
    CASE_SPORADIC,
    CASE_UNLISTED,
    LemmaSolution,
    check_ids,
    kruk_scan,
    lemma21_classify,
    lemma21_solve,
    registry,
    rn_scan,
    run_all,
    run_check,
)


class TestLemmaSolve:
    def test_b5(self):
        got = [(s.x, s.y, s.alpha, s.beta) for s in lemma21_solve(5, 4, 10, 10)]
        # 5 - 1 = 4 = 2^2 and 25 - 1 = 24 = 2^3 * 3
        assert got == [(1, 0, 2, 0), (2, 0, 3, 1)]

    def test_b3_adjacent_family(self):
        sols = lemma21_solve(3, 6, 10, 10)
        for y in range(5):
            assert any((s.x, s.y, s.alpha, s.beta) == (y + 1, y, 1, y) for s in sols)

    def test_b4_family(self):
        sols = lemma21_solve(4, 6, 20, 10)
        for y in range(5):
            assert any((s.x, s.y, s.alpha, s.beta) == (y + 1, y, 2 * y, 1) for s in sols)

    def test_solution_invariant(self):
        with pytest.raises(ValueError):
            LemmaSolution(5, 1, 0, 3, 1)  # 4 != 24

    def test_bounds_respected(self):
        for s in lemma21_solve(2, 8, 3, 20):
            assert s.alpha <= 3


class TestLemmaClassify:
    def test_sporadic_7(self):
        assert lemma21_classify(LemmaSolution(7, 2, 0, 4, 1)) == CASE_SPORADIC

    def test_family_13(self):
        # 13 = 2^2 * 3 + 1
        assert lemma21_classify(LemmaSolution(13, 1, 0, 2, 1)) == CASE_POW23_PLUS_ONE

    def test_corrected_17(self):
        # recorded as x = 1, but 17^2 - 1 = 288 = 2^5 * 3^2 forces x = 2
        assert lemma21_classify(LemmaSolution(17, 2, 0, 5, 2)) == CASE_SPORADIC

    def test_b9(self):
        assert lemma21_classify(LemmaSolution(9, 3, 2, 3, 4)) == CASE_B9_STEP1

    def test_b4(self):
        assert lemma21_classify(LemmaSolution(4, 3, 2, 4, 1)) == CASE_B4_STEP1

    def test_b2_out_of_hypothesis(self):
        # 4 - 2 = 2: no recorded case covers b = 2 with y > 0
        assert lemma21_classify(LemmaSolution(2, 2, 1, 1, 0)) == CASE_OUT_OF_HYPOTHESIS

    def test_b2_recorded_sporadic(self):
        assert lemma21_classify(LemmaSolution(2, 2, 0, 0, 1)) == CASE_SPORADIC

    def test_unlisted_never_fires_for_3_to_100(self):
        for b in range(3, 101):
            for s in lemma21_solve(b, 8, 30, 20):
                assert lemma21_classify(s) != CASE_UNLISTED, s


class TestScans:
    def test_kruk_only_b_2k_plus_1(self):
        from apsumset.numutil import power_exponent

        for b, x0, y1, y2 in kruk_scan(3, 1025, 20):
            assert 1 + b**y2 + 2**x0 == 2 * b**y1
            assert power_exponent(b - 1, 2) is not None

    def test_rn_scan_rows_verify(self):
        rows = rn_scan(12)
        assert (7, 2, 5, 4) in rows
        for b, m, e1, e2 in rows:
            assert b**m == 2**e1 + 2**e2 + 1 and e1 > e2 >= 1 and m >= 2


class TestRegistry:
    def test_required_ids_present(self):
        required = {
            "sec3-baj-eq15",
            "sec3-dt-3y2",
            "sec4-pillai-list",
            "sec4-szalay",
            "sec5-rn-family",
            "sec5-deweger-11-5m",
            "kruk-b-scan",
            "lemma21-sweep",
        }
        assert required <= set(check_ids())

    def test_unknown_id_raises(self):
        with pytest.raises(KeyError):
            run_check("no-such-check")

    def test_entries_carry_bounds_and_expected(self):
        for check in registry().values():
            assert check.solver.get("kind")
            assert isinstance(check.expected, tuple)


class TestRunCheck:
    def test_pillai_all_thirteen(self):
        rep = run_check("sec4-pillai-list")
        assert rep.passed and not rep.flagged
        assert len(rep.found) == 13
        assert rep.missing == [] and rep.extra == []
        assert rep.expected_recheck_failures == []

    def test_baj_eq15_exact_pair(self):
        rep = run_check("sec3-baj-eq15")
        assert rep.passed
        assert set(rep.found) == {(3, 0, 2, 1, 0), (1, 2, 3, 0, 0)}

    def test_dt_3y2(self):
        rep = run_check("sec3-dt-3y2")
        assert rep.passed and rep.found == [(2, 1, 1)]

    def test_szalay(self):
        rep = run_check("sec4-szalay")
        assert rep.passed and rep.found == [(2, 5, 3)]

    def test_deweger_11_5m(self):
        rep = run_check("sec5-deweger-11-5m")
        assert rep.passed and rep.found == [(0, 0, 3)]

    def test_rn_family_flags_square_family(self):
        rep = run_check("sec5-rn-family")
        assert rep.passed and rep.flagged
        assert rep.missing == []
        # every extra is a member of the square family (2^t+1)^2
        for b, m, e1, e2 in rep.documented_extra:
            t = e2 - 1
            assert m == 2 and b == 2**t + 1 and e1 == 2 * t
        assert rep.undocumented_extra == []

    def test_kruk_scan_check(self):
        rep = run_check("kruk-b-scan")
        assert rep.passed
        assert len(rep.found) == 22

    def test_lemma_sweep_discrepancy_details(self):
        rep = run_check("lemma21-sweep")
        assert rep.passed and rep.flagged
        assert rep.found == []  # no unlisted solutions
        assert rep.details["printed_sporadics_failing_recheck"] == [(17, 1, 5, 2)]
        assert rep.details["corrected_sporadics"] == [(17, 2, 5, 2)]
        assert all(row[0] == 2 for row in rep.details["out_of_hypothesis"])

    def test_run_all_passes(self):
        reports = run_all()
        assert [r.check_id for r in reports] == sorted(r.check_id for r in reports)
        assert all(r.passed for r in reports)
        flagged = {r.check_id for r in reports if r.flagged}
        assert flagged == {"sec5-rn-family", "lemma21-sweep"}
