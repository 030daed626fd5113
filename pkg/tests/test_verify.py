"""Verification suites: statuses, counts, gating, and report invariants."""

from fractions import Fraction

import pytest

from gsl import core, verify
from gsl.config import RunConfig
from gsl.fuzzy import GradeChain
from gsl.report import FAIL, PASS, UNMET, VerificationReport, combine_status

HALF = Fraction(1, 2)
CHAIN = GradeChain.of(0, HALF, 1)


class TestProp34:
    def test_gb_z2_z4_all_clauses_pass(self, gb, z2, z4):
        for g, n_ideals in ((gb, 3), (z2, 3), (z4, 6)):
            report = verify.verify_prop_3_4(g, CHAIN)
            assert report.status == PASS, report.counterexample
            assert report.counts["fuzzy_ideals_S"] == n_ideals
            clause_notes = [n for n in report.notes if n.startswith("clause ")]
            assert len(clause_notes) == 22  # 11 primal + 11 dual
            assert all(n.endswith(PASS) for n in clause_notes)

    def test_unity_gating_on_zero_product(self, zero_product):
        report = verify.verify_prop_3_4(zero_product, CHAIN)
        assert report.status != FAIL
        gated = {
            n.split(":")[0].removeprefix("clause ").strip()
            for n in report.notes
            if n.startswith("clause ") and n.endswith(UNMET)
        }
        assert {"ii", "iii", "i-nonconstant", "vii-nonconstant", "viii"} <= gated


class TestTheorem38:
    @pytest.mark.parametrize("kind", ["two", "right"])
    def test_bijection_counts(self, gb, z2, z4, kind):
        for g, count in ((gb, 3), (z2, 3), (z4, 6)):
            report = verify.verify_theorem_3_8(g, CHAIN, kind)
            assert report.status == PASS, report.counterexample
            assert report.counts["fuzzy_ideals_S"] == count
            assert report.counts["fuzzy_ideals_L"] == count

    def test_unity_gate(self, zero_product):
        report = verify.verify_theorem_3_8(zero_product, CHAIN, "two")
        assert report.status == UNMET


class TestLemmasAndTheorem315:
    def test_lemmas_pass(self, gb, z2, z4):
        for g in (gb, z2, z4):
            report = verify.verify_lemmas_3_11_3_12(g)
            assert report.status == PASS, report.counterexample

    def test_z4_explicit_pairing(self, z4):
        from gsl.fuzzy import CrispSubset
        from gsl.operators import build_operator_semiring, plusprime_set

        left = build_operator_semiring(z4, "left")
        even = CrispSubset.of_ids(z4, ["0", "2"])
        assert plusprime_set(left, even).sorted_ids() == ("f0", "f2")

    @pytest.mark.parametrize("kind", ["two", "right"])
    def test_315_counts(self, gb, z2, z4, kind):
        for g, count in ((gb, 2), (z2, 2), (z4, 3)):
            report = verify.verify_theorem_3_15(g, kind)
            assert report.status == PASS, report.counterexample
            assert report.counts["ideals_S"] == count
            assert report.counts["ideals_L"] == count

    def test_315_unity_gate(self, zero_product):
        assert verify.verify_theorem_3_15(zero_product, "two").status == UNMET


class TestTheorem317:
    def test_boolean_semifield_side(self, bool_sr):
        report = verify.verify_theorem_3_17(bool_sr, CHAIN)
        assert report.status == PASS
        assert report.counts["fuzzy_ideals"] == 3
        assert any("cross-check agrees" in n for n in report.notes)

    def test_z4_nonsemifield_side(self, z4_sr):
        report = verify.verify_theorem_3_17(z4_sr, CHAIN)
        assert report.status == PASS
        assert any("fuzzy violator" in n for n in report.notes)

    def test_z2_field(self):
        report = verify.verify_theorem_3_17(core.zn_semiring(2), CHAIN)
        assert report.status == PASS

    def test_lambda_even_is_the_named_violator(self, z4_sr):
        # the characteristic function of {0,2} is enumerated and violates
        # the constant-below-one condition
        from gsl.fuzzy import enumerate_fuzzy_ideals

        ideals = enumerate_fuzzy_ideals(z4_sr, CHAIN, "two")
        lam = next(m for m in ideals if m.grades == (1, 0, 1, 0))
        assert not lam.is_constant()
        holds, violator = verify._fuzzy_semifield_condition([lam])
        assert not holds and violator is lam

    def test_noncommutative_gate(self, bool_sr):
        from gsl.matrix import matrix_semiring

        report = verify.verify_theorem_3_17(matrix_semiring(bool_sr, 2), CHAIN)
        assert report.status == UNMET

    def test_one_element_gate(self):
        one = core.Semiring("zero", ("0",), ((0,),), ((0,),))
        assert verify.verify_theorem_3_17(one, CHAIN).status == UNMET


class TestTheorem318:
    def test_gb_and_z2_pass(self, gb, z2):
        for g in (gb, z2):
            report = verify.verify_theorem_3_18(g, CHAIN)
            assert report.status == PASS, report.counterexample

    def test_z4_gated_with_diagnostics(self, z4):
        report = verify.verify_theorem_3_18(z4, CHAIN)
        assert report.status == UNMET
        assert any("not zero-divisor free" in n for n in report.notes)
        assert any("gamma-semifield predicate = False" in n for n in report.notes)
        assert any("fuzzy condition violated" in n for n in report.notes)


class TestSemifieldTransfer:
    def test_gb_z2_z3(self, gb, z2, z3):
        for g in (gb, z2, z3):
            report = verify.verify_semifield_transfer(g, CHAIN)
            assert report.status == PASS, report.counterexample
            assert any("gamma-semifield predicate: True" in n for n in report.notes)
            assert any("operator-side semifield predicate: True" in n for n in report.notes)

    def test_z4_gated(self, z4):
        report = verify.verify_semifield_transfer(z4, CHAIN)
        assert report.status == UNMET
        assert any("diagnostic: gamma-semifield predicate = False" in n for n in report.notes)
        assert any("operator-side semifield predicate = False" in n for n in report.notes)


class TestRunAll:
    def test_boolean_zero_fails(self, gb):
        reports = verify.run_all(gb, RunConfig(chain=CHAIN))
        assert len(reports) == 12
        assert all(r.status != FAIL for r in reports)
        assert [r.suite for r in reports] == [
            "prop3.4",
            "th3.8[two]",
            "th3.8[right]",
            "lemmas",
            "th3.15[two]",
            "th3.15[right]",
            "th3.17",
            "th3.18",
            "transfer-semifield",
            "matrix-iso[left]",
            "matrix-iso[right]",
            "th3.19",
        ]

    def test_z4_zero_fails_with_gated_suites(self, z4):
        reports = verify.run_all(z4, RunConfig(chain=CHAIN))
        statuses = {r.suite: r.status for r in reports}
        assert statuses["th3.18"] == UNMET
        assert statuses["transfer-semifield"] == UNMET
        assert statuses["th3.19"] == UNMET  # 256-element matrix exceeds the cap
        assert all(s != FAIL for s in statuses.values())

    def test_semiring_input(self, bool_sr):
        reports = verify.run_all(bool_sr, RunConfig(chain=CHAIN))
        assert [r.suite for r in reports] == ["th3.17"]

    def test_parallel_matches_sequential(self, z4):
        seq = verify.run_all(z4, RunConfig(chain=CHAIN))
        par = verify.run_all(z4, RunConfig(chain=CHAIN, parallelism=4))
        assert [r.body() for r in seq] == [r.body() for r in par]

    def test_reports_deterministic(self, z4):
        a = verify.run_all(z4, RunConfig(chain=CHAIN))
        b = verify.run_all(z4, RunConfig(chain=CHAIN))
        assert [r.body() for r in a] == [r.body() for r in b]


class TestClauseEngineFailPaths:
    def test_broken_lift_produces_replayable_witnesses(self, gb):
        """Feeding the clause engine a collapsing lift must surface failures
        with full grade payloads, not mask them."""
        from gsl.fuzzy import FuzzySubset, enumerate_fuzzy_ideals
        from gsl.operators import build_operator_semiring
        from gsl.transfer import restrict_plus

        left = build_operator_semiring(gb, "left")
        ideals_s = enumerate_fuzzy_ideals(gb, CHAIN, "two")
        ideals_l = enumerate_fuzzy_ideals(left.semiring, CHAIN, "two")
        collapse = lambda sigma: FuzzySubset.constant(left, 1)
        rows = verify._clause_rows(
            gb,
            left,
            ideals_s,
            ideals_l,
            lift=collapse,
            restrict=lambda m: restrict_plus(left, m),
            lift_roundtrip_ok=True,
            restrict_roundtrip_ok=True,
            tag="",
        )
        by_clause = {cid: (status, witness) for cid, status, witness, _ in rows}
        assert by_clause["ii"][0] == FAIL
        assert by_clause["iii"][0] == FAIL
        witness = by_clause["ii"][1]
        assert set(witness) == {"clause", "sigma", "roundtrip"}
        # the witness re-checks: the recorded round-trip really differs
        sigma = FuzzySubset.from_mapping(gb, {k: v for k, v in witness["sigma"].items()})
        back = restrict_plus(left, collapse(sigma))
        assert back.to_mapping() == witness["roundtrip"] != witness["sigma"]


class TestReportType:
    def test_fail_requires_counterexample(self):
        with pytest.raises(ValueError):
            VerificationReport("x", "y", None, FAIL, None, {"n": 1}, 0.0)

    def test_pass_requires_counts(self):
        with pytest.raises(ValueError):
            VerificationReport("x", "y", None, PASS, None, {}, 0.0)

    def test_combine_status(self):
        assert combine_status([PASS, UNMET]) == PASS
        assert combine_status([UNMET, UNMET]) == UNMET
        assert combine_status([PASS, FAIL, UNMET]) == FAIL

    def test_body_has_contract_fields(self, gb):
        report = verify.verify_theorem_3_8(gb, CHAIN, "two")
        body = report.body()
        assert set(body) == {
            "suite",
            "instance",
            "chain",
            "status",
            "counterexample",
            "counts",
            "notes",
        }
        assert body["chain"] == ["0/1", "1/2", "1/1"]
