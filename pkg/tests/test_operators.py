"""Operator semiring construction against the length-bounded closure oracle,
plus the pair-class correspondences."""

import pytest

from gsl import core
from gsl.fuzzy import CrispSubset, carrier_of
from gsl.operators import (
    ClosureCapExceeded,
    action_of_pair,
    build_operator_semiring,
    find_unity,
    plus_set,
    plusprime_set,
    star_set,
    starprime_set,
)
from oracles import naive_operator_actions


class TestActionOfPair:
    def test_boolean_pairs(self, gb):
        zero = (0, 0)
        ident = (0, 1)
        assert action_of_pair(gb, 0, 1, "left").values == zero
        assert action_of_pair(gb, 1, 1, "left").values == ident
        assert action_of_pair(gb, 1, 0, "left").values == zero
        assert action_of_pair(gb, 1, 1, "right").values == ident

    def test_additivity_invariant(self, all_small_instances):
        for g in all_small_instances:
            for side in ("left", "right"):
                op = build_operator_semiring(g, side)
                for f in op.elements:
                    for a in range(len(g.S)):
                        for b in range(len(g.S)):
                            assert (
                                f.values[g.addS[a][b]]
                                == g.addS[f.values[a]][f.values[b]]
                            )
                        assert f.values[0] == 0


class TestBuild:
    @pytest.mark.parametrize("side", ["left", "right"])
    def test_closure_matches_length_bounded_oracle(self, all_small_instances, side):
        for g in all_small_instances:
            op = build_operator_semiring(g, side)
            oracle = naive_operator_actions(g, side)
            assert {f.values for f in op.elements} == oracle, g.name

    def test_frozen_sizes(self, gb, z2, z4):
        assert len(build_operator_semiring(gb, "left")) == 2
        assert len(build_operator_semiring(z2, "left")) == 2
        assert len(build_operator_semiring(z4, "left")) == 4

    def test_zero_map_is_index_zero_and_valid_semiring(self, all_small_instances):
        for g in all_small_instances:
            for side in ("left", "right"):
                op = build_operator_semiring(g, side)
                assert op.elements[0].values == (0,) * len(g.S)
                assert core.validate_semiring(op.semiring).ok

    def test_pair_product_law(self, all_small_instances):
        # composing the actions of [x,a] and [y,b] is the action of [x@y, b]
        for g in all_small_instances:
            op = build_operator_semiring(g, "left")
            for x in range(len(g.S)):
                for a in range(len(g.G)):
                    for y in range(len(g.S)):
                        for b in range(len(g.G)):
                            i = op.pair_index[x][a]
                            j = op.pair_index[y][b]
                            k = op.pair_index[g.prod[x][a][y]][b]
                            assert op.mul[i][j] == k

    def test_right_pair_product_law(self, z4):
        # dual law: [a,x][b,y] acts as [a, x@y] with the middle product x b y
        op = build_operator_semiring(z4, "right")
        for a in range(4):
            for x in range(4):
                for b in range(4):
                    for y in range(4):
                        i = op.pair_index[x][a]
                        j = op.pair_index[y][b]
                        k = op.pair_index[z4.prod[x][b][y]][a]
                        assert op.mul[i][j] == k

    def test_rebuild_is_identical(self, z4):
        a = build_operator_semiring(z4, "left")
        b = build_operator_semiring(z4, "left")
        assert a.elements == b.elements
        assert a.add == b.add
        assert a.mul == b.mul
        assert a.provenance == b.provenance

    def test_left_right_match_on_symmetric_instances(self, gb, z2, z4):
        for g in (gb, z2, z4):
            left = build_operator_semiring(g, "left")
            right = build_operator_semiring(g, "right")
            assert [f.values for f in left.elements] == [f.values for f in right.elements]
            assert left.add == right.add
            assert left.mul == right.mul

    def test_cap_raises(self, z4):
        with pytest.raises(ClosureCapExceeded):
            build_operator_semiring(z4, "left", cap=2)

    def test_z4_provenance_is_shortest_lex(self, z4):
        op = build_operator_semiring(z4, "left")
        # multiplication-by-k maps, canonically ordered as f0..f3
        assert [f.values for f in op.elements] == [
            (0, 0, 0, 0),
            (0, 1, 2, 3),
            (0, 2, 0, 2),
            (0, 3, 2, 1),
        ]
        assert op.provenance[0] == ((0, 0),)
        assert op.provenance[1] == ((1, 1),)
        assert op.provenance[2] == ((1, 2),)
        assert op.provenance[3] == ((1, 3),)


class TestUnity:
    def test_unities_present(self, gb, z2, z4):
        for g in (gb, z2, z4):
            left = build_operator_semiring(g, "left")
            right = build_operator_semiring(g, "right")
            assert find_unity(g, left) is not None
            assert find_unity(g, right) is not None

    def test_boolean_unity_provenance(self, gb):
        op = build_operator_semiring(gb, "left")
        u = find_unity(gb, op)
        assert op.provenance_expr(u) == "[1,1]"

    def test_z4_unity_provenance(self, z4):
        op = build_operator_semiring(z4, "left")
        u = find_unity(z4, op)
        assert op.provenance_expr(u) == "[1,1]"

    def test_zero_product_has_no_unity(self, zero_product):
        op = build_operator_semiring(zero_product, "left")
        assert len(op) == 1
        assert find_unity(zero_product, op) is None


class TestCorrespondences:
    def test_plus_set_boolean(self, gb):
        op = build_operator_semiring(gb, "left")
        carrier = carrier_of(op)
        zero_only = CrispSubset.of_indices(carrier, [0])
        assert plus_set(op, zero_only).sorted_ids() == ("0",)
        everything = CrispSubset.of_indices(carrier, [0, 1])
        assert plus_set(op, everything).sorted_ids() == ("0", "1")
        empty = CrispSubset.of_indices(carrier, [])
        assert plus_set(op, empty).sorted_ids() == ()

    def test_plusprime_set_z4(self, z4):
        op = build_operator_semiring(z4, "left")
        even = CrispSubset.of_ids(z4, ["0", "2"])
        assert plusprime_set(op, even).sorted_ids() == ("f0", "f2")
        full = CrispSubset.of_ids(z4, ["0", "1", "2", "3"])
        assert plusprime_set(op, full).sorted_ids() == ("f0", "f1", "f2", "f3")
        zero = CrispSubset.of_ids(z4, ["0"])
        assert plusprime_set(op, zero).sorted_ids() == ("f0",)

    def test_star_side_duals_transpose(self, gb, z2, z4):
        for g in (gb, z2, z4):
            left = build_operator_semiring(g, "left")
            right = build_operator_semiring(g, "right")
            for members in _subsets(len(g.S)):
                q = CrispSubset.of_indices(carrier_of(g), members)
                assert (
                    plusprime_set(left, q).sorted_indices()
                    == starprime_set(right, q).sorted_indices()
                )
            for members in _subsets(len(left)):
                p_left = CrispSubset.of_indices(carrier_of(left), members)
                p_right = CrispSubset.of_indices(carrier_of(right), members)
                assert (
                    plus_set(left, p_left).sorted_indices()
                    == star_set(right, p_right).sorted_indices()
                )

    def test_star_set_full_and_zero(self, z4):
        right = build_operator_semiring(z4, "right")
        full = CrispSubset.of_indices(carrier_of(right), range(len(right)))
        assert star_set(right, full).sorted_ids() == ("0", "1", "2", "3")
        zero_only = CrispSubset.of_ids(z4, ["0"])
        assert starprime_set(right, zero_only).sorted_ids() == ("f0",)

    def test_side_mismatch_rejected(self, gb):
        left = build_operator_semiring(gb, "left")
        right = build_operator_semiring(gb, "right")
        q = CrispSubset.of_ids(gb, ["0"])
        with pytest.raises(ValueError):
            plusprime_set(right, q)
        with pytest.raises(ValueError):
            starprime_set(left, q)
        p = CrispSubset.of_indices(carrier_of(left), [0])
        with pytest.raises(ValueError):
            star_set(left, p)
        with pytest.raises(ValueError):
            plus_set(right, CrispSubset.of_indices(carrier_of(right), [0]))


def _subsets(n):
    import itertools

    for bits in itertools.product((0, 1), repeat=n):
        yield [i for i, b in enumerate(bits) if b]
