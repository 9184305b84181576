"""Transcription battery for the built-in graphs, including mutation tests."""

import random

import pytest

from conftest import single_edge_swaps
from gemkit.catalog import necessary_manifold_conditions
from gemkit.complex_invariants import (
    dehn_sommerville_residuals,
    f1_identity_residual,
    face_vector,
)
from gemkit.errors import UnknownFixture
from gemkit.fixtures import FIXTURE_KEYS, Fixture, builtin, verify_fixture
from gemkit.reports import compute_invariants

EXPECTED = {
    #        order  chi  rho  k  bipartite  uniform g3
    "s4":     (2,   2,   0,   0,  True,  1),
    "s1xs3":  (10,  0,   1,   4,  True,  2),
    "s1~s3":  (10,  0,   1,   4,  False, 2),
    "rp4":    (16,  1,   3,   7,  False, 2),
    "s2xrp2": (24,  2,   5,   11, False, None),
}


class TestBattery:
    @pytest.mark.parametrize("key", FIXTURE_KEYS)
    def test_battery_clean(self, key):
        assert verify_fixture(builtin(key)) == []

    @pytest.mark.parametrize("key", FIXTURE_KEYS)
    def test_expected_profile(self, key):
        order, chi, rho, k, bipartite, g3 = EXPECTED[key]
        inv = compute_invariants(builtin(key).graph)
        assert inv.order == order
        assert inv.chi == chi
        assert inv.rho == rho
        assert inv.k_graph == k
        assert inv.bipartite == bipartite
        if g3 is None:
            assert len(set(inv.g3.values())) > 1
        else:
            assert set(inv.g3.values()) == {g3}

    def test_declared_data_matches_keys(self):
        assert builtin("rp4").declared.chi == 1
        assert builtin("rp4").declared.rank == 1
        assert builtin("s4").declared.rank == 0
        for key in FIXTURE_KEYS:
            assert builtin(key).provenance

    def test_unknown_key(self):
        with pytest.raises(UnknownFixture):
            builtin("k3")

    def test_fixture_objects_are_fresh(self):
        assert builtin("rp4").graph == builtin("rp4").graph


def battery_passes(fx: Fixture, mutant) -> bool:
    """The full transcription battery, as a predicate for mutation testing.

    Compares labelled pair and triple counts, not just their multisets,
    since the counts are color-sensitive data of the transcription.
    """
    base = compute_invariants(fx.graph)
    inv = compute_invariants(mutant)
    return (
        inv.connected
        and inv.contracted
        and inv.chi == base.chi
        and inv.bipartite == base.bipartite
        and inv.g2 == base.g2
        and inv.g3 == base.g3
        and inv.rho == base.rho
        and necessary_manifold_conditions(mutant)[0]
        and dehn_sommerville_residuals(face_vector(mutant)) == (0, 0, 0)
        and f1_identity_residual(mutant) == 0
    )


class TestMutation:
    @pytest.mark.parametrize("key", [k for k in FIXTURE_KEYS if k != "s4"])
    def test_random_edge_swaps_break_battery(self, key):
        # s4 has one edge per color, so it admits no swap at all
        fx = builtin(key)
        rng = random.Random(hash(key) % 10_000 + 6)
        mutants = list(single_edge_swaps(fx.graph))
        sample = rng.sample(mutants, 20)
        for mutant in sample:
            assert not battery_passes(fx, mutant)

    def test_every_rp4_swap_breaks_battery(self):
        # small enough to sweep the whole mutation universe
        fx = builtin("rp4")
        for mutant in single_edge_swaps(fx.graph):
            assert not battery_passes(fx, mutant)
