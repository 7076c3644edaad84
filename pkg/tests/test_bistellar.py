import itertools

import pytest

from simptop import (
    FlipSchedule,
    apply_generalized_move,
    are_isomorphic,
    catalog,
    classify_move,
    core,
    cycle,
    enumerate_moves,
    flip_search,
    from_facets,
    random_bistellar_walk,
    standard_sphere,
)
from simptop.bistellar import (
    BISTELLAR,
    PROPER_BISTELLAR,
    SINGULAR_BS1,
    SINGULAR_BS2,
    replay_trace,
)
from simptop.structure import is_weak_pseudomanifold
from simptop.verification import replay_move_identities

from conftest import sc


class TestCore:
    def test_fresh_vertex_core_is_the_fresh_vertex(self):
        # A = facet + new vertex: only A minus the new vertex is a facet
        s2 = catalog.get("Sigma2").complex
        a_set = s2.facet_masks[0] | (1 << 8)
        beta = core(s2, a_set)
        assert beta.vertices == (8,)
        move = classify_move(s2, a_set)
        assert move.classification == BISTELLAR
        assert move.i == 2

    def test_sigma2_proper_move_core(self):
        move = classify_move(catalog.get("Sigma2").complex, (2, 3, 4, 6))
        assert move.alpha.vertices == (3, 6)
        assert move.beta.vertices == (2, 4)
        assert move.i == 1

    def test_upsilon2_bs2_failure(self):
        move = classify_move(catalog.get("Upsilon2").complex, (1, 2, 3, 6))
        assert move.classification == SINGULAR_BS2

    def test_inadmissible_a(self):
        s = standard_sphere(2, (1, 2, 3, 4))
        with pytest.raises(ValueError, match="inadmissible A"):
            core(s, (1, 2, 3, 4))  # contains all four facets
        with pytest.raises(ValueError, match="inadmissible A"):
            core(catalog.get("Sigma2").complex, (1, 2, 3))


class TestApply:
    def test_involution_on_catalog(self):
        for name in ("RP2_6", "Sigma2", "Sigma4", "Upsilon1", "octahedron"):
            k = catalog.get(name).complex
            d = k.dim
            for combo in itertools.combinations(k.vertices, d + 2):
                a_mask = sum(1 << v for v in combo)
                inside = sum(1 for f in k.facet_masks if f & ~a_mask == 0)
                if not 1 <= inside <= d + 1:
                    continue
                assert apply_generalized_move(apply_generalized_move(k, a_mask), a_mask) == k

    def test_rp2_singular_image(self, rp2):
        image = apply_generalized_move(rp2, (1, 2, 5, 6))
        assert image == catalog.get("R").complex
        assert not is_weak_pseudomanifold(image)

    def test_upsilon_moves(self):
        u1 = catalog.get("Upsilon1").complex
        u2 = catalog.get("Upsilon2").complex
        image = apply_generalized_move(u1, (1, 2, 3, 6))
        assert are_isomorphic(image, u2) is not None
        assert apply_generalized_move(u2, (1, 2, 3, 6)) == u1

    def test_purity_preserved(self, rp2):
        image = apply_generalized_move(rp2, (1, 2, 5, 6))
        assert image.is_pure()
        assert image.dim == 2


class TestClassify:
    def test_example_identities_all_pass(self):
        result = replay_move_identities()
        assert result.passed, result.failures

    def test_facet_count_invariant_for_middle_moves(self):
        # d even, i = d/2: facet count is preserved (1-moves on surfaces)
        for name in ("Sigma2", "Sigma3", "octahedron"):
            k = catalog.get(name).complex
            for move in enumerate_moves(k, (PROPER_BISTELLAR,)):
                if move.i == 1:
                    image = apply_generalized_move(k, move.a_set)
                    assert len(image.facets) == len(k.facets)

    def test_proper_moves_preserve_weak_pm(self):
        for name in ("Sigma2", "Sigma5", "octahedron", "S3_5"):
            k = catalog.get(name).complex
            for move in enumerate_moves(k, (PROPER_BISTELLAR,))[:6]:
                assert is_weak_pseudomanifold(apply_generalized_move(k, move.a_set))


class TestEnumerate:
    def test_standard_spheres_admit_no_moves(self):
        for d in (2, 3):
            s = standard_sphere(d, tuple(range(d + 2)))
            assert enumerate_moves(s) == []

    def test_sigma2_has_the_recorded_proper_move(self):
        moves = enumerate_moves(catalog.get("Sigma2").complex, (PROPER_BISTELLAR,))
        assert any(m.a_set.vertices == (2, 3, 4, 6) for m in moves)

    def test_octahedron_proper_moves_are_the_twelve_edge_flips(self):
        octa = catalog.get("octahedron").complex
        moves = enumerate_moves(octa, (PROPER_BISTELLAR,))
        assert len(moves) == 12
        assert all(m.i == 1 for m in moves)
        flipped = {m.alpha.vertices for m in moves}
        assert flipped == {e.vertices for e in octa.faces(1)}

    def test_filters(self):
        s2 = catalog.get("Sigma2").complex
        all_moves = enumerate_moves(s2)
        singular = enumerate_moves(s2, (SINGULAR_BS1, SINGULAR_BS2))
        proper = enumerate_moves(s2, (PROPER_BISTELLAR,))
        bist = enumerate_moves(s2, (BISTELLAR,))
        assert len(all_moves) == len(singular) + len(proper) + len(bist)

    def test_expanding_excluded_by_default(self):
        s2 = catalog.get("Sigma2").complex
        default = enumerate_moves(s2)
        with_exp = enumerate_moves(s2, include_expanding=True)
        assert len(with_exp) == len(default) + len(s2.facets)


class TestFlipSearch:
    def test_sigma3_reduces_to_standard(self):
        trace = flip_search(catalog.get("Sigma3").complex, "standard-sphere", seed=5)
        assert trace is not None
        end = replay_trace(catalog.get("Sigma3").complex, trace)
        assert are_isomorphic(end, standard_sphere(2, (1, 2, 3, 4))) is not None

    def test_round_trip_from_s3(self):
        s35 = standard_sphere(3, (1, 2, 3, 4, 5))
        walked = random_bistellar_walk(s35, 5, seed=3, max_vertices=11)
        trace = flip_search(walked, "standard-sphere", seed=9)
        assert trace is not None
        assert replay_trace(walked, trace).f_vector() == (5, 10, 10, 5)

    def test_dunce_hat_rejected(self, dunce_hat):
        with pytest.raises(ValueError, match="weak pseudomanifold"):
            flip_search(dunce_hat, "standard-sphere", seed=1)

    def test_seed_mandatory(self):
        with pytest.raises(ValueError, match="seed"):
            flip_search(catalog.get("Sigma3").complex, "standard-sphere")

    def test_goal_facet_count(self):
        sigma5 = catalog.get("Sigma5").complex
        trace = flip_search(sigma5, ("facet-count", 6), seed=8)
        assert trace is not None
        end = replay_trace(sigma5, trace)
        assert len(end.facets) <= 6

    def test_goal_reach_complex(self):
        sigma2 = catalog.get("Sigma2").complex
        sigma3 = catalog.get("Sigma3").complex
        trace = flip_search(sigma2, ("reach", sigma3), seed=4)
        assert trace is not None
        assert are_isomorphic(replay_trace(sigma2, trace), sigma3) is not None

    def test_trace_only_bistellar_moves(self):
        trace = flip_search(catalog.get("Sigma4").complex, "standard-sphere", seed=11)
        assert trace is not None
        assert all(
            m.classification in (BISTELLAR, PROPER_BISTELLAR) for m in trace.moves
        )

    def test_cycle_reduces_by_vertex_removals(self):
        trace = flip_search(cycle(7, tuple(range(7))), "standard-sphere", seed=6)
        assert trace is not None
        assert all(m.i == 0 for m in trace.moves)
        assert len(trace.moves) == 4

    def test_walk_respects_vertex_cap(self):
        s = standard_sphere(2, (1, 2, 3, 4))
        walked = random_bistellar_walk(s, 30, seed=2, max_vertices=8)
        assert len(walked.vertices) <= 8
        assert is_weak_pseudomanifold(walked)
