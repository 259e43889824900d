import pytest

from alcuin import (
    alpha,
    hall_strict,
    is_vertex_cover,
    mask_of,
    min_covers,
)
from alcuin import generators as gen
from alcuin.cover import independent_subsets
from brute import brute_alpha, brute_min_covers


class TestAlpha:
    def test_star_leaves(self):
        assert alpha(gen.star(3)) == 3

    def test_c5(self):
        assert alpha(gen.cycle(5)) == 2

    def test_petersen(self):
        g = gen.petersen()
        assert brute_alpha(g) == 4  # reference computation
        assert alpha(g) == 4
        assert alpha(g) + min_covers(g).beta == 10

    def test_empty_graph(self):
        assert alpha(gen.edgeless(0)) == 0

    def test_agrees_with_reference(self):
        for n in range(5):
            for g in gen.all_labeled_graphs(n):
                assert alpha(g) == brute_alpha(g)
        for seed in range(30):
            g = gen.random_graph(7, 0.4, seed)
            assert alpha(g) == brute_alpha(g)


class TestMinCovers:
    def test_c4_two_covers(self):
        rep = min_covers(gen.cycle(4))
        assert rep.beta == 2
        assert rep.covers == (mask_of([0, 2]), mask_of([1, 3]))
        assert not rep.unique
        assert rep.complete

    def test_star_unique_center(self):
        rep = min_covers(gen.star(3))
        assert rep.beta == 1 and rep.covers == (1,) and rep.unique

    def test_edgeless_empty_cover(self):
        rep = min_covers(gen.edgeless(3))
        assert rep.beta == 0 and rep.covers == (0,) and rep.unique

    def test_covers_sorted_and_all_minimum(self):
        for g in gen.all_labeled_graphs(4):
            rep = min_covers(g)
            assert list(rep.covers) == sorted(rep.covers)
            for c in rep.covers:
                assert is_vertex_cover(g, c)
                assert c.bit_count() == rep.beta
            assert rep.unique == (len(rep.covers) == 1)

    def test_agrees_with_reference(self):
        for n in range(5):
            for g in gen.all_labeled_graphs(n):
                beta, covers = brute_min_covers(g)
                rep = min_covers(g)
                assert rep.beta == beta
                assert list(rep.covers) == covers
        for seed in range(50):
            g = gen.random_graph(6, 0.5, seed)
            beta, covers = brute_min_covers(g)
            rep = min_covers(g)
            assert (rep.beta, list(rep.covers)) == (beta, covers)

    def test_budget_degrades_to_witness(self):
        g = gen.random_graph(18, 0.3, 5)
        rep = min_covers(g)
        assert not rep.complete
        assert not rep.unique
        assert len(rep.covers) == 1
        assert is_vertex_cover(g, rep.covers[0])
        assert rep.covers[0].bit_count() == rep.beta == g.n - alpha(g)

    def test_budget_is_configurable(self):
        assert not min_covers(gen.cycle(4), full_limit=3).complete
        assert min_covers(gen.random_graph(18, 0.3, 5), full_limit=18).complete

    def test_gallai_identity(self):
        for g in gen.all_labeled_graphs(5):
            assert alpha(g) + min_covers(g).beta == g.n


class TestIndependentSubsets:
    def test_triangle(self):
        subs = independent_subsets(gen.complete(3), 0b111)
        assert sorted(m for m, _ in subs) == [0, 1, 2, 4]

    def test_neighborhoods_are_unions(self):
        g = gen.path(4)
        subs = dict(independent_subsets(g, g.full_mask))
        assert subs[mask_of([0, 2])] == g.adj[0] | g.adj[2]


class TestHallStrict:
    def test_star_center(self):
        assert hall_strict(gen.star(3), 1)

    def test_k2_fails(self):
        assert not hall_strict(gen.complete(2), 1)

    def test_overlapping_stars_cover(self):
        # {0}: 2 > 1; {1}: 2 > 1; {0,1}: 3 > 2
        assert hall_strict(gen.overlapping_stars(1), mask_of([0, 1]))

    def test_empty_cover_vacuous(self):
        assert hall_strict(gen.edgeless(3), 0)

    def test_rejects_non_cover(self):
        with pytest.raises(ValueError):
            hall_strict(gen.path(3), mask_of([0]))

    def test_rejects_non_minimum_cover(self):
        with pytest.raises(ValueError):
            hall_strict(gen.path(3), mask_of([0, 1]))

    def test_characterizes_uniqueness(self):
        # full n <= 6 quantification lives in the acceptance suite
        for n in range(5):
            for g in gen.all_labeled_graphs(n):
                rep = min_covers(g)
                for c in rep.covers:
                    assert hall_strict(g, c) == rep.unique
