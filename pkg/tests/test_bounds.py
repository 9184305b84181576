"""Bound formulas, semi-simplicity detection, and the exact linear system."""

from fractions import Fraction

import pytest

from conftest import disjoint_union
from gemkit.bounds import (
    A_INVERSE,
    A_MATRIX,
    PAIRS,
    TRIPLES,
    ManifoldParams,
    _invert_exactly,
    is_semisimple,
    lens_times_circle_bounds,
    semisimple_type,
    solve_gij_from_gijk,
    surface_product_bounds,
    theorem1_lower_bounds,
    theorem2_equalities,
    validate_params_for_graph,
)
from gemkit.colored_graphs import ColoredGraph
from gemkit.complex_invariants import pair_counts, triple_counts
from gemkit.errors import (
    ChiMismatch,
    InvalidGenus,
    NotContracted,
    RankExceedsBound,
)
from gemkit.fixtures import builtin
from gemkit.regular_genus import regular_genus_of_graph

S4 = ColoredGraph([[1, 0]] * 5)


class TestLinearSystem:
    def test_product_is_identity(self):
        n = len(A_MATRIX)
        for r in range(n):
            for c in range(n):
                entry = sum(A_MATRIX[r][k] * A_INVERSE[k][c] for k in range(n))
                assert entry == (1 if r == c else 0)

    def test_elimination_rederives_inverse(self):
        assert _invert_exactly(A_MATRIX) == A_INVERSE

    def test_rows_encode_triples(self):
        for r, triple in enumerate(TRIPLES):
            ones = {PAIRS[c] for c in range(10) if A_MATRIX[r][c] == 1}
            want = {(triple[0], triple[1]), (triple[0], triple[2]),
                    (triple[1], triple[2])}
            assert ones == want

    def test_uniform_sphere_data(self):
        sol = solve_gij_from_gijk([1] * 10, 1)
        assert all(v == 1 for v in sol.values())

    def test_uniform_rp4_data(self):
        sol = solve_gij_from_gijk([2] * 10, 8)
        assert all(v == Fraction(4) for v in sol.values())

    @pytest.mark.parametrize("key", ["s4", "s1xs3", "s1~s3", "rp4", "s2xrp2"])
    def test_reproduces_measured_pairs(self, key):
        g = builtin(key).graph
        sol = solve_gij_from_gijk(triple_counts(g), g.order // 2)
        assert sol == pair_counts(g)

    def test_accepts_mapping_and_sequence(self):
        g = builtin("s2xrp2").graph
        tc = triple_counts(g)
        seq = [tc[t] for t in TRIPLES]
        assert solve_gij_from_gijk(tc, 12) == solve_gij_from_gijk(seq, 12)

    def test_non_integral_solutions_reported(self):
        sol = solve_gij_from_gijk([1, 2, 1, 1, 1, 1, 1, 1, 1, 1], 1)
        assert any(v.denominator > 1 for v in sol.values())


class TestTheoremBounds:
    @pytest.mark.parametrize("chi,rank,want", [
        (2, 0, (0, 0)),      # the sphere attains zero
        (0, 2, (14, 6)),     # lens space times circle
        (2, 1, (10, 5)),     # S^2 x RP^2
        (0, 1, (4, 1)),      # S^3-bundles over S^1
        (1, 1, (7, 3)),      # RP^4
    ])
    def test_lower_bounds(self, chi, rank, want):
        assert theorem1_lower_bounds(ManifoldParams(chi, rank)) == want

    @pytest.mark.parametrize("chi,rank,k,genus", [
        (1, 1, 7, 3),
        (2, 0, 0, 0),
        (0, 1, 4, 1),
    ])
    def test_equalities(self, chi, rank, k, genus):
        got_k, got_genus, check = theorem2_equalities(ManifoldParams(chi, rank))
        assert (got_k, got_genus) == (k, genus)
        assert check == Fraction(3 * genus + 5 * rank, 2) == k


class TestSemisimple:
    @pytest.mark.parametrize("key,t", [
        ("s4", 0), ("s1xs3", 1), ("s1~s3", 1), ("rp4", 1), ("s2xrp2", None),
    ])
    def test_type_candidates(self, key, t):
        assert semisimple_type(builtin(key).graph) == t

    def test_not_contracted(self):
        with pytest.raises(NotContracted):
            semisimple_type(disjoint_union(S4, S4))

    def test_is_semisimple_fixtures(self):
        assert is_semisimple(builtin("s1xs3").graph, ManifoldParams(0, 1))
        assert is_semisimple(builtin("rp4").graph, ManifoldParams(1, 1))
        assert not is_semisimple(builtin("s2xrp2").graph, ManifoldParams(2, 1))

    def test_order_identity_on_fixtures(self):
        for key, params in (("s1xs3", (0, 1)), ("rp4", (1, 1))):
            g = builtin(key).graph
            chi, m = params
            assert g.order == 6 * chi + 20 * m - 10

    def test_chi_mismatch(self):
        with pytest.raises(ChiMismatch):
            is_semisimple(builtin("rp4").graph, ManifoldParams(3, 1))

    def test_wrong_rank_is_false_not_error(self):
        assert not is_semisimple(builtin("rp4").graph, ManifoldParams(1, 0))

    def test_corrupt_input_trips_cross_check(self):
        # contracted, uniform triple counts, but not a 4-manifold gem: the
        # type test says yes while the order identity says no
        from gemkit.colored_graphs import from_compact
        from gemkit.errors import InternalInconsistency
        g = from_compact("5;4;c0:0-1,2-3;c1:0-1,2-3;c2:0-2,1-3;c3:0-2,1-3;c4:0-3,1-2")
        assert semisimple_type(g) == 0
        with pytest.raises(InternalInconsistency):
            is_semisimple(g, ManifoldParams(chi=1, rank=0))

    def test_parity_of_genus_minus_rank(self):
        for key in ("s4", "s1xs3", "s1~s3", "rp4"):
            fx = builtin(key)
            rho = regular_genus_of_graph(fx.graph)
            assert (rho - fx.declared.rank).twice % 4 == 0  # even integer

    def test_params_validation(self):
        g = builtin("rp4").graph
        validate_params_for_graph(ManifoldParams(1, 1), g)
        with pytest.raises(RankExceedsBound):
            validate_params_for_graph(ManifoldParams(1, 2), g)
        with pytest.raises(ChiMismatch):
            validate_params_for_graph(ManifoldParams(0, 1), g)


class TestProductBounds:
    @pytest.mark.parametrize("kind,a,b,want", [
        ("TxT", 1, 1, (16, 34)),
        ("TxT", 0, 0, (4, 6)),     # S^2 x S^2
        ("TxT", 0, 1, (6, 14)),    # S^2 x T_1
        ("TxU", 0, 1, (5, 10)),    # S^2 x RP^2
        ("TxU", 1, 1, (11, 24)),
        ("UxU", 1, 1, (8, 17)),
    ])
    def test_values(self, kind, a, b, want):
        assert surface_product_bounds(kind, a, b) == want

    def test_closed_forms_match_generic_route(self):
        cases = [(g, r) for g in range(5) for r in range(4)]
        assert len(cases) == 20
        for g, r in cases:
            genus_lb, k_lb = surface_product_bounds("TxT", g, r)
            assert genus_lb == 8 * g * r + 2 * g + 2 * r + 4
            assert k_lb == 12 * g * r + 8 * g + 8 * r + 6
        for g, h in [(g, h) for g in range(4) for h in range(1, 6)]:
            genus_lb, k_lb = surface_product_bounds("TxU", g, h)
            assert genus_lb == 4 * g * h + 2 * g + h + 4
            assert k_lb == 6 * g * h + 8 * g + 4 * h + 6
        for h, k in [(h, k) for h in range(1, 6) for k in range(1, 5)]:
            genus_lb, k_lb = surface_product_bounds("UxU", h, k)
            assert genus_lb == 2 * h * k + h + k + 4
            assert k_lb == 3 * h * k + 4 * h + 4 * k + 6

    def test_invalid_genus(self):
        with pytest.raises(InvalidGenus):
            surface_product_bounds("TxU", 1, 0)
        with pytest.raises(InvalidGenus):
            surface_product_bounds("TxT", -1, 0)
        with pytest.raises(InvalidGenus):
            surface_product_bounds("QxQ", 1, 1)


class TestLensTimesCircle:
    @pytest.mark.parametrize("r,want", [
        (1, (6, 14)),
        (0, (1, 4)),
        (3, (16, 34)),
    ])
    def test_values(self, r, want):
        assert lens_times_circle_bounds(r) == want

    def test_matches_exact_bundle_values(self):
        # r = 0 reproduces the exact S^1 x S^3 numbers from the equalities
        k, genus, _ = theorem2_equalities(ManifoldParams(0, 1))
        assert lens_times_circle_bounds(0) == (genus, k)

    def test_negative_rank(self):
        with pytest.raises(InvalidGenus):
            lens_times_circle_bounds(-1)
