"""Matrix instances, the operator-matrix isomorphisms, and the fuzzy lift."""

from fractions import Fraction

import pytest

from gsl import core
from gsl.config import RunConfig
from gsl.fuzzy import FuzzySubset, GradeChain, enumerate_fuzzy_ideals, is_fuzzy_ideal_gamma
from gsl.matrix import (
    MatrixCapExceeded,
    build_matrix_gamma,
    check_operator_matrix_iso,
    lift_fuzzy_to_matrix,
    matrix_semiring,
    verify_theorem_3_19,
)
from gsl.report import PASS, UNMET

HALF = Fraction(1, 2)
CHAIN = GradeChain.of(0, HALF, 1)
CHAIN01 = GradeChain.of(0, 1)


class TestBuild:
    def test_boolean_2x2(self, gb):
        mg = build_matrix_gamma(gb, 2)
        assert len(mg.gamma.S) == 16
        assert len(mg.gamma.G) == 16
        assert mg.gamma.S[0] == "m0"
        assert core.validate_gamma_semiring(mg.gamma).ok

    def test_z2_2x2(self, z2):
        mg = build_matrix_gamma(z2, 2)
        assert len(mg.gamma.S) == 16
        assert core.validate_gamma_semiring(mg.gamma).ok

    def test_n1_collapses_to_base(self, gb, z4):
        for g in (gb, z4):
            mg = build_matrix_gamma(g, 1, cap=16)
            assert mg.gamma.addS == g.addS
            assert mg.gamma.addG == g.addG
            assert mg.gamma.prod == g.prod

    def test_cap(self, z4):
        with pytest.raises(MatrixCapExceeded):
            build_matrix_gamma(z4, 2, cap=16)

    def test_product_is_triple_matrix_product(self, gb):
        mg = build_matrix_gamma(gb, 2)
        # A = [[1,0],[0,0]], D = [[1,0],[0,0]], B = [[1,1],[0,0]]
        a = mg.encode_s((1, 0, 0, 0))
        d = mg.encode_g((1, 0, 0, 0))
        b = mg.encode_s((1, 1, 0, 0))
        assert mg.decode_s(mg.gamma.prod[a][d][b]) == (1, 1, 0, 0)

    def test_matrix_semiring(self, bool_sr):
        m = matrix_semiring(bool_sr, 2)
        assert len(m.carrier) == 16
        assert core.validate_semiring(m).ok
        assert not core.mul_commutative(m)


class TestFuzzyLift:
    def test_entrywise_min(self, gb):
        mg = build_matrix_gamma(gb, 2)
        mu = FuzzySubset.of_grades(gb, [1, HALF])
        lifted = lift_fuzzy_to_matrix(mg, mu)
        assert lifted.grades[0] == 1  # zero matrix
        for k in range(1, 16):
            assert lifted.grades[k] == HALF  # any matrix containing a 1

    def test_constant_lifts_to_constant(self, z2):
        mg = build_matrix_gamma(z2, 2)
        assert lift_fuzzy_to_matrix(mg, FuzzySubset.constant(z2, 1)).is_constant()

    def test_characteristic_lifts_to_characteristic_of_matrices_over(self, gb):
        mg = build_matrix_gamma(gb, 2)
        lam = FuzzySubset.of_grades(gb, [1, 0])  # characteristic of {0}
        lifted = lift_fuzzy_to_matrix(mg, lam)
        for k in range(16):
            inside = all(e == 0 for e in mg.decode_s(k))
            assert lifted.grades[k] == (1 if inside else 0)

    def test_lift_preserves_ideals(self, gb, z2):
        for g in (gb, z2):
            mg = build_matrix_gamma(g, 2)
            for mu in enumerate_fuzzy_ideals(g, CHAIN, "two"):
                assert is_fuzzy_ideal_gamma(mg.gamma, lift_fuzzy_to_matrix(mg, mu), "two")


class TestOperatorMatrixIso:
    @pytest.mark.parametrize("side", ["left", "right"])
    def test_boolean(self, gb, side):
        report = check_operator_matrix_iso(gb, 2, side)
        assert report.status == PASS
        assert report.counts["operator_elements"] == 16
        assert report.counts["matrix_semiring_elements"] == 16

    @pytest.mark.parametrize("side", ["left", "right"])
    def test_z2(self, z2, side):
        report = check_operator_matrix_iso(z2, 2, side)
        assert report.status == PASS

    def test_zero_product_degenerate_pass(self, zero_product):
        report = check_operator_matrix_iso(zero_product, 2, "left")
        assert report.status == PASS
        assert report.counts["operator_elements"] == 1

    def test_cap_reports_unmet(self, z4):
        report = check_operator_matrix_iso(z4, 2, RunConfig())
        assert report.status == UNMET


class TestTheorem319:
    def test_boolean_binary_chain(self, gb):
        report = verify_theorem_3_19(gb, 2, CHAIN01)
        assert report.status == PASS
        assert report.counts["fuzzy_ideals_base"] == 2
        assert report.counts["fuzzy_ideals_matrix"] == 2

    def test_z2_binary_chain(self, z2):
        report = verify_theorem_3_19(z2, 2, CHAIN01)
        assert report.status == PASS
        assert report.counts["fuzzy_ideals_base"] == 2

    def test_boolean_ternary_chain_full(self, gb):
        report = verify_theorem_3_19(gb, 2, CHAIN)
        assert report.status == PASS
        assert report.counts["fuzzy_ideals_base"] == 3
        assert report.counts["fuzzy_ideals_matrix"] == 3

    def test_downgrade_when_cap_exceeded(self, gb):
        config = RunConfig(surjectivity_cap=1000)
        report = verify_theorem_3_19(gb, 2, CHAIN, config)
        assert report.status == PASS
        assert "fuzzy_ideals_matrix" not in report.counts
        assert any("surjectivity skipped (cap)" in n for n in report.notes)

    def test_unity_gating(self, zero_product):
        report = verify_theorem_3_19(zero_product, 2, CHAIN01)
        assert report.status == UNMET

    def test_matrix_cap_gating(self, z4):
        report = verify_theorem_3_19(z4, 2, CHAIN01, RunConfig())
        assert report.status == UNMET
