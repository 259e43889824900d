import pytest

from alcuin import (
    BudgetExceededError,
    Graph,
    Schedule,
    alcuin_exact,
    feasible,
    min_covers,
    verify_schedule,
)
from alcuin import generators as gen
from brute import relabel

P3 = gen.path(3)


class TestFeasible:
    def test_path_capacity_one(self):
        res = feasible(P3, 1)
        assert res.feasible and res.min_crossings == 7
        assert verify_schedule(P3, res.schedule) is None
        assert res.states_expanded > 0

    def test_claw_needs_capacity_two(self):
        assert not feasible(gen.star(3), 1).feasible
        assert feasible(gen.star(3), 2).feasible

    def test_single_vertex(self):
        k1 = gen.complete(1)
        res0 = feasible(k1, 0)
        assert not res0.feasible and res0.schedule is None
        res1 = feasible(k1, 1)
        assert res1.feasible and res1.min_crossings == 1

    def test_empty_graph(self):
        res = feasible(Graph(0, ()), 0)
        assert res.feasible and res.min_crossings == 0 and res.schedule.moves == ()

    def test_schedule_present_iff_feasible(self):
        for g in gen.all_labeled_graphs(4):
            for b in range(0, 5):
                res = feasible(g, b)
                assert res.feasible == (res.schedule is not None)
                if res.feasible:
                    assert verify_schedule(g, res.schedule) is None
                    assert len(res.schedule.moves) == res.min_crossings

    def test_monotone_in_capacity(self):
        for n in range(1, 6):
            for seed in range(10):
                g = gen.random_graph(n, 0.5, seed)
                flags = [feasible(g, b).feasible for b in range(n + 1)]
                assert flags == sorted(flags)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            feasible(gen.edgeless(13), 1)
        assert feasible(gen.edgeless(13), 13, limit=13).feasible
        with pytest.raises(ValueError):
            feasible(P3, -1)


class TestAlcuinExact:
    def test_path(self):
        c, sched = alcuin_exact(P3)
        assert c == 1 and len(sched.moves) == 7

    def test_claw(self):
        assert alcuin_exact(gen.star(3))[0] == 2

    def test_q3(self):
        # beta(Q3) = 4 via the cover solver; the cube is class one
        g = gen.hypercube(3)
        assert min_covers(g).beta == 4
        c, sched = alcuin_exact(g)
        assert c == 4 and verify_schedule(g, sched) is None

    def test_empty_graph(self):
        assert alcuin_exact(Graph(0, ())) == (0, Schedule(0, ()))

    def test_edgeless_needs_capacity_one(self):
        for n in (1, 3):
            assert alcuin_exact(gen.edgeless(n))[0] == 1

    def test_sandwich_bound(self):
        for g in gen.all_labeled_graphs(4):
            beta = min_covers(g).beta
            c, _ = alcuin_exact(g)
            assert beta <= c <= beta + 1

    def test_beta_hint_matches(self):
        for seed in range(10):
            g = gen.random_graph(6, 0.5, seed)
            beta = min_covers(g).beta
            assert alcuin_exact(g)[0] == alcuin_exact(g, beta=beta)[0]

    def test_relabeling_invariance(self):
        # ten random permutations of each of ten random graphs
        import random

        rng = random.Random(7)
        for seed in range(10):
            g = gen.random_graph(6, 0.5, 50 + seed)
            c, _ = alcuin_exact(g)
            for _ in range(10):
                perm = list(range(6))
                rng.shuffle(perm)
                assert alcuin_exact(relabel(g, perm))[0] == c
