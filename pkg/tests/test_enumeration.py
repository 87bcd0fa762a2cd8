import io

import pytest
from hypothesis import given, settings

import bitmce.enumeration as en
from bitmce.bitset import BitSet
from bitmce.enumeration import (
    STRATEGY_NAMES,
    CliqueCollector,
    CliqueStream,
    RunStats,
    TimeLimitExceeded,
    assert_bk_invariant,
    branch_set,
    enumerate_cliques,
    maximal_cliques,
    pivot_greedy,
    pivot_naude,
    pivot_score,
    pivot_tomita,
    run_bk_ordering,
)
from bitmce.graph import BitGraph, graph_moon_moser, graph_random
from bitmce.oracle import oracle_enumerate, oracle_pivot_best_score
from bitmce.ordering import VertexOrdering, ordering_degeneracy, prepare

from conftest import complete_graph, cycle_graph, graphs, path_graph, star_graph


def bs(cap, *items):
    return BitSet.from_indices(cap, items)


@pytest.mark.parametrize("strategy", STRATEGY_NAMES)
class TestEveryStrategy:
    def test_k4(self, strategy):
        out = CliqueCollector()
        stats = enumerate_cliques(complete_graph(4), strategy, out)
        assert out.canonical() == [(0, 1, 2, 3)]
        assert stats.clique_count == 1 and stats.max_clique_size == 4

    def test_empty_graph(self, strategy):
        assert maximal_cliques(BitGraph(5, [0] * 5), strategy) == [(i,) for i in range(5)]

    def test_moon_moser(self, strategy):
        assert enumerate_cliques(graph_moon_moser(3), strategy).clique_count == 27

    def test_path(self, strategy):
        assert maximal_cliques(path_graph(4), strategy) == [(0, 1), (1, 2), (2, 3)]

    @settings(max_examples=60)
    @given(g=graphs(max_n=11))
    def test_matches_oracle(self, strategy, g):
        assert maximal_cliques(g, strategy) == oracle_enumerate(g)

    def test_bk_invariant_holds(self, strategy):
        g = graph_random(25, 0.5, 11)
        h = g if STRATEGY_NAMES.index(strategy) < 4 else prepare(g)[0]
        stats = enumerate_cliques(h, strategy, probe=assert_bk_invariant(h), prepared=True)
        assert stats.steps >= stats.clique_count >= 1

    def test_steps_equal_probe_calls(self, strategy):
        calls = []
        stats = enumerate_cliques(graph_random(20, 0.4, 2), strategy,
                                  probe=lambda P, X, R: calls.append(1))
        assert stats.steps == len(calls)


def test_cliques_are_sound_and_labelled():
    g = graph_random(60, 0.5, 8)
    for strategy in ("greedybb", "tomitabb", "tomita"):
        cliques = maximal_cliques(g, strategy)
        assert len(set(cliques)) == len(cliques)
        for c in cliques:
            assert all(g.has_edge(u, v) for i, u in enumerate(c) for v in c[:i])
            common = (1 << g.n) - 1
            for v in c:
                common &= g.adj[v]
            assert common == 0


def test_cross_variant_agreement_beyond_oracle():
    g = graph_random(70, 0.5, 21)
    ref = maximal_cliques(g, "tomita")
    for strategy in STRATEGY_NAMES:
        assert maximal_cliques(g, strategy) == ref


class TestPivots:
    def test_tomita_triangle_tie(self):
        assert pivot_tomita(BitSet.full(3), BitSet(3), complete_graph(3)) == 0

    def test_tomita_star(self):
        assert pivot_tomita(BitSet.full(4), BitSet(4), star_graph(3)) == 0

    def test_tomita_singleton_x(self):
        g = BitGraph(6, [0] * 6)
        assert pivot_tomita(BitSet(6), bs(6, 5), g) == 5

    def test_naude_triangle(self):
        g = complete_graph(3)
        p = pivot_naude(BitSet.full(3), BitSet(3), g)
        assert pivot_score(BitSet.full(3), p, g) == 2

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            pivot_tomita(BitSet(3), BitSet(3), complete_graph(3))
        with pytest.raises(ValueError):
            pivot_greedy(BitSet(3), BitSet(3), "bb", complete_graph(3))

    def test_naude_matches_exhaustive_on_sampled_states(self):
        g = graph_random(30, 0.5, 3)
        states = []
        enumerate_cliques(g, "tomita", probe=lambda P, X, R: states.append((P, X)) if P | X else None)
        for P, X in states[:: max(1, len(states) // 50)][:50]:
            Pb, Xb = BitSet(30, P), BitSet(30, X)
            best = oracle_pivot_best_score(Pb, Xb, g)
            assert pivot_score(Pb, pivot_naude(Pb, Xb, g), g) == best
            assert pivot_score(Pb, pivot_tomita(Pb, Xb, g), g) == best

    def test_naude_and_tomita_pick_same_vertex(self):
        g = graph_random(40, 0.6, 4)
        states = []
        enumerate_cliques(g, "naude", probe=lambda P, X, R: states.append((P, X)) if P | X else None)
        for P, X in states[:500]:
            Pb, Xb = BitSet(40, P), BitSet(40, X)
            assert pivot_naude(Pb, Xb, g) == pivot_tomita(Pb, Xb, g)


class TestGreedyPivot:
    def test_first_of_x(self):
        g = BitGraph(8, [0] * 8)
        assert pivot_greedy(bs(8, 1), bs(8, 3, 7), "bb", g) == 3

    @pytest.mark.parametrize("variant", ["bb", "bbtx", "bbnx"])
    def test_x_empty_takes_first_of_p(self, variant):
        g = graph_random(8, 0.5, 1)
        assert pivot_greedy(bs(8, 2, 5), BitSet(8), variant, g) == 2

    def _scored_instance(self, a, b):
        # X = {a, b}; a sees one vertex of P, b sees all four
        P = [2, 3, 4, 5]
        return BitGraph.from_edges(8, [(a, 2)] + [(b, v) for v in P]), bs(8, *P), bs(8, a, b)

    @pytest.mark.parametrize("a, b", [(0, 1), (1, 0)])
    def test_scored_variants_pick_best_of_x(self, a, b):
        g, P, X = self._scored_instance(a, b)
        assert [pivot_score(P, v, g) for v in (a, b)] == [1, 4]
        assert pivot_greedy(P, X, "bbtx", g) == b
        assert pivot_greedy(P, X, "bbnx", g) == b
        assert pivot_greedy(P, X, "bb", g) == min(a, b)

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            pivot_greedy(bs(3, 0), BitSet(3), "bbzz", complete_graph(3))

    def test_greedybb_never_scores(self, monkeypatch):
        def boom(*args):
            raise AssertionError("scoring loop executed")

        monkeypatch.setattr(en, "_scan_tomita", boom)
        monkeypatch.setattr(en, "_scan_naude", boom)
        g = graph_random(40, 0.5, 6)
        assert enumerate_cliques(g, "greedybb").clique_count == enumerate_cliques(g, "bk-plain").clique_count
        with pytest.raises(AssertionError):
            enumerate_cliques(g, "greedybbtx")


class TestBranchSet:
    def test_triangle(self):
        assert branch_set(BitSet.full(3), 0, complete_graph(3)) == bs(3, 0)

    def test_dominating_pivot_in_x(self):
        assert branch_set(bs(4, 1, 2, 3), 0, star_graph(3)) == BitSet(4)

    def test_path_middle(self):
        assert branch_set(BitSet.full(3), 1, path_graph(3)) == bs(3, 1)

    def test_path_end(self):
        assert branch_set(BitSet.full(3), 0, path_graph(3)) == bs(3, 0, 2)


class TestSteps:
    def test_triangle_tomita(self):
        # root -> {0} -> {0,1} -> {0,1,2}: the pivot leaves a single branch
        # at every level, one call per level plus the root.
        assert enumerate_cliques(complete_graph(3), "tomita").steps == 4

    def test_empty_three_plain(self):
        stats = enumerate_cliques(BitGraph(3, [0] * 3), "bk-plain")
        assert (stats.steps, stats.clique_count) == (4, 3)

    def test_moon_moser_pivot_prunes(self):
        g = graph_moon_moser(2)
        plain = enumerate_cliques(g, "bk-plain").steps
        tomita = enumerate_cliques(g, "tomita").steps
        # hand trace on K3,3: plain = root + 3 * (1 + 3 leaves) + 3 dead ends
        # (v in {3,4,5} after {0,1,2} moved to X); tomita's pivot 0 skips them
        assert (plain, tomita) == (16, 13)
        assert tomita < plain

    def test_steps_at_least_cliques(self):
        g = graph_random(50, 0.3, 1)
        for strategy in STRATEGY_NAMES:
            s = enumerate_cliques(g, strategy)
            assert s.steps >= s.clique_count


class TestBkOrdering:
    def test_c5_degeneracy(self):
        out = CliqueCollector()
        run_bk_ordering(cycle_graph(5), ordering_degeneracy(cycle_graph(5)), "tomita", out)
        assert out.canonical() == oracle_enumerate(cycle_graph(5))
        assert len(out.cliques) == 5

    def test_empty_four(self):
        stats = run_bk_ordering(BitGraph(4, [0] * 4))
        assert stats.clique_count == 4 and stats.steps == 4

    @settings(max_examples=40)
    @given(graphs(max_n=11))
    def test_any_ordering_any_inner(self, g):
        ref = maximal_cliques(g, "tomita")
        for order in (VertexOrdering.identity(g.n), VertexOrdering(tuple(reversed(range(g.n))))):
            for inner in ("tomita", "naude", "greedybb", "bk-plain"):
                out = CliqueCollector()
                run_bk_ordering(g, order, inner, out)
                assert out.canonical() == ref

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            run_bk_ordering(path_graph(3), VertexOrdering.identity(2))
        with pytest.raises(ValueError):
            run_bk_ordering(path_graph(3), inner="bk-ordering")


class TestRunPlumbing:
    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            enumerate_cliques(path_graph(3), "quick")

    def test_time_limit_carries_partial_stats(self):
        g = graph_random(300, 0.5, 1)
        with pytest.raises(TimeLimitExceeded) as info:
            enumerate_cliques(g, "greedybb", time_limit=0.05)
        stats = info.value.stats
        assert not stats.completed and stats.steps > 0 and stats.elapsed >= 0.05

    def test_sink_failure_propagates(self):
        def sink(c):
            raise OSError("disk full")

        with pytest.raises(OSError):
            enumerate_cliques(path_graph(3), "greedybb", sink)

    def test_stream_format(self):
        buf = io.StringIO()
        enumerate_cliques(path_graph(3), "tomita", CliqueStream(buf))
        assert sorted(buf.getvalue().splitlines()) == ["1 2", "2 3"]

    def test_prepared_graph_reports_original_labels(self):
        g = graph_random(30, 0.5, 5)
        h, _ = prepare(g)
        assert maximal_cliques(h, "greedybb", prepared=True) == maximal_cliques(g, "tomita")

    def test_stats_row_round_trip(self):
        s = enumerate_cliques(graph_random(30, 0.3, 1), "greedybb", source="x")
        row = dict(zip(RunStats.header(), s.to_row()))
        assert RunStats.from_row(row) == s
        assert s.n == 30 and abs(s.density - s.m / 435) < 1e-12

    def test_null_graph(self):
        s = enumerate_cliques(BitGraph(0, []), "greedybb")
        assert s.clique_count == 0
