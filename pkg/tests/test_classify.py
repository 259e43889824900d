import pytest

from alcuin import (
    BudgetExceededError,
    CLASS_ONE,
    CLASS_TWO,
    ConditionHolds,
    Degenerate,
    Graph,
    MultipleCovers,
    PairWitness,
    classification_condition,
    classify,
    exists_2x_witness,
    fast_paths,
    mask_of,
)
from alcuin import generators as gen


class TestConditionOnUniqueCovers:
    def test_claw_holds(self):
        # the 3 leaves exceed |S|+|T| = 2 for the only candidate pair
        outcome = classification_condition(gen.star(3), 1)
        assert outcome == ConditionHolds(1)

    def test_two_leaf_star_violates(self):
        outcome = classification_condition(gen.star(2), 1)
        assert outcome == PairWitness(1, 1, 1)

    def test_overlapping_stars_first_witness(self):
        # {0} paired with itself already violates: |N({0})| = 2 <= 2
        outcome = classification_condition(gen.overlapping_stars(1), mask_of([0, 1]))
        assert outcome == PairWitness(mask_of([0, 1]), 1, 1)

    def test_cross_pair_also_violates(self):
        # the shared leaf is the only common neighbor of the two centers
        g = gen.overlapping_stars(1)
        common = g.adj[0] & g.adj[1]
        assert common == mask_of([3])

    def test_invalid_cover_rejected(self):
        with pytest.raises(ValueError):
            classification_condition(gen.star(3), mask_of([1]))


class TestClassify:
    def test_claw_is_class_two(self):
        cls = classify(gen.star(3))
        assert cls.verdict == CLASS_TWO and cls.c == 2
        assert cls.reason == ConditionHolds(1)

    def test_big_stars_are_class_two(self):
        for k in (3, 4, 5):
            cls = classify(gen.star(k))
            assert cls.verdict == CLASS_TWO and cls.c == 2

    def test_c4_multiple_covers(self):
        cls = classify(gen.cycle(4))
        assert cls.verdict == CLASS_ONE and cls.c == 2
        assert cls.reason == MultipleCovers(mask_of([0, 2]), mask_of([1, 3]))

    def test_single_vertex(self):
        cls = classify(gen.complete(1))
        assert cls.verdict == CLASS_TWO and cls.c == 1

    def test_edgeless_graphs_class_two(self):
        for n in (1, 2, 5):
            cls = classify(gen.edgeless(n))
            assert cls.verdict == CLASS_TWO and cls.c == 1
            assert cls.reason == ConditionHolds(0)

    def test_empty_graph_degenerate(self):
        cls = classify(Graph(0, ()))
        assert cls.c == 0 and cls.reason == Degenerate()

    def test_two_leaf_star_class_one(self):
        cls = classify(gen.star(2))
        assert cls.verdict == CLASS_ONE and cls.c == 1

    def test_overlapping_stars_class_one(self):
        for k in (1, 2, 3):
            cls = classify(gen.overlapping_stars(k))
            assert cls.verdict == CLASS_ONE and cls.c == 2

    def test_verdict_matches_c(self):
        for g in gen.all_labeled_graphs(4):
            cls = classify(g)
            from alcuin import min_covers

            beta = min_covers(g).beta
            assert (cls.verdict == CLASS_TWO) == (cls.c == beta + 1)
            assert beta <= cls.c <= beta + 1

    def test_budget_propagates(self):
        with pytest.raises(BudgetExceededError):
            classify(gen.random_graph(18, 0.3, 1))
        assert classify(gen.random_graph(18, 0.3, 1), cover_limit=18).c >= 1


class TestExists2xWitness:
    def test_two_leaf_star(self):
        assert exists_2x_witness(gen.star(2), 1) == 1

    def test_claw_has_none(self):
        assert exists_2x_witness(gen.star(3), 1) is None

    def test_c6_singleton(self):
        # vertex 0 has exactly 2 neighbors outside {0, 2, 4}
        assert exists_2x_witness(gen.cycle(6), mask_of([0, 2, 4])) == 1

    def test_agrees_with_same_set_pair(self):
        from alcuin import min_covers

        for g in gen.all_labeled_graphs(4):
            rep = min_covers(g)
            for cover in rep.covers:
                a = exists_2x_witness(g, cover)
                if a is not None:
                    outcome = classification_condition(g, cover)
                    assert isinstance(outcome, PairWitness)


class TestFastPaths:
    def test_triangle_claw_free(self):
        fp = fast_paths(gen.complete(3), mask_of([0, 1]))
        assert fp is not None and fp.kind == "claw_free"

    def test_pair_branch(self):
        # claw with a pendant on leaf 1: not claw-free, but the center has
        # only two neighbors outside the cover {0, 1}
        g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4)])
        fp = fast_paths(g, mask_of([0, 1]))
        assert fp == fast_paths(g, mask_of([0, 1]))
        assert fp.kind == "pair_common_neighbors" and (fp.u, fp.v) == (0, 0)

    def test_claw_has_no_fast_path(self):
        assert fast_paths(gen.star(3), 1) is None

    def test_advisory_never_contradicts(self):
        from alcuin import min_covers

        for g in gen.all_labeled_graphs(4):
            rep = min_covers(g)
            if rep.beta == 0:
                continue
            cls = classify(g)
            if fast_paths(g, rep.covers[0]) is not None:
                assert cls.verdict == CLASS_ONE
