from fractions import Fraction

import pytest

import vattol as vt
from vattol import (
    BadParameter,
    DisconnectedInput,
    EmptySet,
    FullSet,
    TooLarge,
    TrivialGraph,
    VolumeTooLarge,
)
from naive_oracle import naive_vat, naive_weighted_vat

F = Fraction


def two_triangles():
    return vt.build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


class TestSetVat:
    def test_star_center(self):
        g = vt.star(4)
        assert vt.set_vat(g, 1) == F(1, 4)

    def test_c4_single(self):
        g = vt.cycle(4)
        for v in range(4):
            assert vt.set_vat(g, 1 << v) == F(1)

    def test_c6_antipodal(self):
        assert vt.set_vat(vt.cycle(6), vt.mask_from_vertices([0, 3])) == F(2, 3)

    def test_errors(self):
        g = vt.cycle(4)
        with pytest.raises(EmptySet):
            vt.set_vat(g, 0)
        with pytest.raises(FullSet):
            vt.set_vat(g, vt.full_mask(4))
        with pytest.raises(DisconnectedInput):
            vt.set_vat(two_triangles(), 1)
        with pytest.raises(TrivialGraph):
            vt.set_vat(vt.build_graph(1, []), 1)


class TestVatExact:
    def test_star_five(self):
        r = vt.vat_exact(vt.star(5))
        assert r.value == F(1, 5)
        assert r.witness_vertices == [0]

    def test_k2(self):
        r = vt.vat_exact(vt.complete(2))
        assert r.value == F(1)
        assert r.witness_vertices == [0]

    def test_c6(self):
        r = vt.vat_exact(vt.cycle(6))
        assert r.value == F(2, 3)
        assert r.witness_vertices == [0, 3]

    def test_witness_consistency(self):
        for g in (vt.cycle(7), vt.petersen(), vt.hypercube(3), vt.star(6)):
            r = vt.vat_exact(g)
            assert vt.set_vat(g, r.witness) == r.value

    def test_errors(self):
        with pytest.raises(DisconnectedInput):
            vt.vat_exact(two_triangles())
        with pytest.raises(TrivialGraph):
            vt.vat_exact(vt.build_graph(1, []))
        with pytest.raises(TooLarge):
            vt.vat_exact(vt.cycle(12), limit=10)

    def test_limit_env_override(self, monkeypatch):
        monkeypatch.setenv(vt.metrics.LIMIT_ENV_VAR, "11")
        with pytest.raises(TooLarge):
            vt.vat_exact(vt.cycle(12))
        monkeypatch.setenv(vt.metrics.LIMIT_ENV_VAR, "12")
        assert vt.vat_exact(vt.cycle(12)).value == F(1, 3)

    def test_range_invariant(self):
        for g in (vt.cycle(5), vt.complete(6), vt.star(7), vt.petersen()):
            r = vt.vat_exact(g)
            assert 0 < r.value <= 1
            assert vt.largest_component(g, r.witness) != 0


class TestAlphaBetaVat:
    def test_identity_at_one_zero(self):
        for g in (vt.cycle(6), vt.star(5), vt.petersen()):
            base = vt.vat_exact(g)
            r = vt.alpha_beta_vat_exact(g, 1, 0)
            assert r.value == base.value and r.witness == base.witness

    def test_k2_one_one(self):
        r = vt.alpha_beta_vat_exact(vt.complete(2), 1, 1)
        assert r.value == F(2)

    def test_star_scaling(self):
        r = vt.alpha_beta_vat_exact(vt.star(5), 2, 0)
        assert r.value == F(2, 5)
        assert r.witness_vertices == [0]

    def test_float_parameters(self):
        g = vt.cycle(5)
        r = vt.alpha_beta_vat_exact(g, 2.5, 0.5)
        assert isinstance(r.value, float)
        ref, mask = naive_weighted_vat(g, alpha=2.5, beta=0.5)
        assert r.value == pytest.approx(ref)
        assert r.witness == mask

    def test_bad_parameters(self):
        g = vt.cycle(4)
        with pytest.raises(BadParameter):
            vt.alpha_beta_vat_exact(g, 0, 0)
        with pytest.raises(BadParameter):
            vt.alpha_beta_vat_exact(g, -1, 0)
        with pytest.raises(BadParameter):
            vt.alpha_beta_vat_exact(g, 1, -0.5)


class TestWeightedVat:
    def test_unweighted_equals_vat(self):
        for g in (vt.cycle(6), vt.star(4), vt.hypercube(3)):
            base = vt.vat_exact(g)
            r = vt.weighted_vat_exact(g)
            assert r.value == base.value and r.witness == base.witness
            assert isinstance(r.value, Fraction)

    def test_costly_center_shifts_witness(self):
        g = vt.build_graph(
            6,
            [(0, i) for i in range(1, 6)],
            costs=[10.0] + [1.0] * 5,
            values=[1.0] * 6,
        )
        r = vt.weighted_vat_exact(g)
        assert r.value == 1.0
        assert r.witness_vertices == [1]  # one leaf, the smallest id

    def test_k2_uniform_weights(self):
        g = vt.build_graph(2, [(0, 1)], costs=[3.0, 3.0], values=[3.0, 3.0])
        r = vt.weighted_vat_exact(g)
        ref, mask = naive_weighted_vat(g)
        assert r.value == ref == 3.0
        assert r.witness == mask == 1

    def test_matches_naive_oracle(self):
        g = vt.build_graph(
            5,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)],
            costs=[1.5, 2.0, 0.5, 1.0, 3.0],
            values=[1.0, 0.5, 2.0, 1.0, 0.25],
        )
        r = vt.weighted_vat_exact(g)
        ref, mask = naive_weighted_vat(g)
        assert r.value == pytest.approx(ref)
        assert r.witness == mask


class TestAlphaBetaWeighted:
    def test_reduction_chain(self):
        for g in (vt.cycle(6), vt.petersen(), vt.star(5)):
            base = vt.vat_exact(g)
            r = vt.alpha_beta_weighted_vat_exact(g, 1, 0)
            assert r.value == base.value and r.witness == base.witness

    def test_unit_weights_match_alpha_beta(self):
        g = vt.complete(2)
        assert (
            vt.alpha_beta_weighted_vat_exact(g, 1, 1).value
            == vt.alpha_beta_vat_exact(g, 1, 1).value
            == F(2)
        )

    def test_star4_center_set_value(self):
        # direct formula check: the (2,1)-cost of attacking the center
        g = vt.star(4)
        r = vt.alpha_beta_weighted_vat_exact(g, 2, 1)
        ref, mask = naive_weighted_vat(g, alpha=2, beta=1)
        assert float(r.value) == pytest.approx(ref)
        assert r.witness == mask
        # attacking the center costs (2*1+1)/4
        assert F(3, 4) >= r.value  # the oracle minimum can only be at or below

    def test_weighted_float_path(self):
        g = vt.build_graph(
            4, [(0, 1), (1, 2), (2, 3), (3, 0)], costs=[1.0, 2.0, 1.0, 2.0]
        )
        r = vt.alpha_beta_weighted_vat_exact(g, 1.5, 0.25)
        ref, mask = naive_weighted_vat(g, alpha=1.5, beta=0.25)
        assert r.value == pytest.approx(ref)
        assert r.witness == mask


class TestSetConductance:
    def test_c6_arc(self):
        assert vt.set_conductance(vt.cycle(6), 0b111) == F(1, 3)

    def test_star_center_admissible(self):
        assert vt.set_conductance(vt.star(5), 1) == F(1)

    def test_k4_pair(self):
        assert vt.set_conductance(vt.complete(4), 0b11) == F(2, 3)

    def test_errors(self):
        g = vt.cycle(6)
        with pytest.raises(EmptySet):
            vt.set_conductance(g, 0)
        with pytest.raises(VolumeTooLarge):
            vt.set_conductance(g, vt.mask_from_vertices([0, 1, 2, 3]))
        with pytest.raises(DisconnectedInput):
            vt.set_conductance(two_triangles(), 1)


class TestConductanceExact:
    def test_stars_maximal(self):
        for leaves in range(3, 9):
            assert vt.conductance_exact(vt.star(leaves)).value == F(1)

    def test_c6(self):
        r = vt.conductance_exact(vt.cycle(6))
        assert r.value == F(1, 3)
        assert r.witness_vertices == [0, 1, 2]

    def test_k4(self):
        r = vt.conductance_exact(vt.complete(4))
        assert r.value == F(2, 3)
        assert r.witness_vertices == [0, 1]

    def test_witness_consistency_and_admissibility(self):
        for g in (vt.cycle(9), vt.petersen(), vt.hypercube(3)):
            r = vt.conductance_exact(g)
            assert vt.set_conductance(g, r.witness) == r.value
            assert vt.volume(g, r.witness) * 2 <= 2 * g.m
            assert 0 < r.value <= 1

    def test_minimizers_contains_witness(self):
        g = vt.cycle(6)
        mins = vt.conductance_minimizers(g)
        r = vt.conductance_exact(g)
        assert r.witness == mins[0]
        assert all(vt.set_conductance(g, s) == r.value for s in mins)
        assert len(mins) == 6  # the six arcs of three consecutive vertices


class TestWitnessComponents:
    def test_c6(self):
        g = vt.cycle(6)
        r = vt.vat_exact(g)
        t, others = vt.vat_witness_components(g, r)
        assert t.bit_count() == 2
        assert [c.bit_count() for c in others] == [2]

    def test_star(self):
        g = vt.star(5)
        t, others = vt.vat_witness_components(g, vt.vat_exact(g))
        assert t.bit_count() == 1
        assert len(others) == 4

    def test_k4(self):
        g = vt.complete(4)
        t, others = vt.vat_witness_components(g, vt.vat_exact(g))
        assert t.bit_count() == 3 and others == []


class TestMonotoneSanity:
    def test_vat_is_global_minimum(self):
        g = vt.petersen()
        best = vt.vat_exact(g).value
        masks = [1, 0b11, 0b1010, vt.mask_from_vertices([0, 4, 7]), 0b1111100000]
        for s in masks:
            assert best <= vt.set_vat(g, s)


def test_oracle_spotcheck_small():
    for g in (vt.cycle(5), vt.star(4), vt.hypercube(3), vt.complete_bipartite(3)):
        value, mask = naive_vat(g)
        r = vt.vat_exact(g)
        assert (r.value, r.witness) == (value, mask)
