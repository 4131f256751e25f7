from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from quiverhom.errors import ComposeMismatch, ParseError
from quiverhom.quiver import (
    INFINITE,
    Path,
    Quiver,
    analyze,
    compose,
    final_subhearts,
    infinite_path_core,
    is_cycle_graph,
    strongly_connected_components,
)

from helpers import random_quiver, seeded


def cycle_quiver(n):
    verts = [str(i + 1) for i in range(n)]
    arrows = [(f"c{i}", verts[i], verts[(i + 1) % n]) for i in range(n)]
    return Quiver(verts, arrows)


def linear_quiver(n):
    verts = [str(i + 1) for i in range(n)]
    arrows = [(f"l{i}", verts[i], verts[i + 1]) for i in range(n - 1)]
    return Quiver(verts, arrows)


def sec4_quiver():
    return Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1"), ("g", "2", "2")])


class TestQuiverValidation:
    def test_duplicate_arrow_names_rejected(self):
        with pytest.raises(ParseError):
            Quiver(["1"], [("a", "1", "1"), ("a", "1", "1")])

    def test_undeclared_endpoint_rejected(self):
        with pytest.raises(ParseError):
            Quiver(["1"], [("a", "1", "2")])

    def test_empty_vertex_set_rejected(self):
        with pytest.raises(ParseError):
            Quiver([], [])


class TestCompose:
    def test_trivial_identity(self):
        q = cycle_quiver(2)
        e1 = Path.trivial(q, "1")
        assert compose(e1, e1) == e1

    def test_c2_loop(self):
        # traverse a then b: a loop at 1 of length 2
        q = cycle_quiver(2)
        a, b = Path(q, ("c0",)), Path(q, ("c1",))
        p = compose(b, a)
        assert p.arrows == ("c0", "c1")
        assert p.length == 2 and p.source == "1" and p.target == "1"

    def test_sec4_killed_loop(self):
        # function-order product alpha*beta traverses beta then alpha: the
        # length-2 loop at 2 that the monomial ideal kills
        q = sec4_quiver()
        alpha, beta = Path(q, ("a",)), Path(q, ("b",))
        p = compose(alpha, beta)
        assert p.arrows == ("b", "a") and p.source == "2" and p.target == "2"

    def test_mismatch_raises(self):
        q = linear_quiver(3)
        with pytest.raises(ComposeMismatch):
            compose(Path(q, ("l0",)), Path(q, ("l0",)))

    def test_left_identity(self):
        q = sec4_quiver()
        p = Path(q, ("a", "g"))
        assert compose(Path.trivial(q, p.target), p) == p

    @given(st.integers(0, 400))
    @settings(max_examples=40, deadline=None)
    def test_length_additivity_random(self, seed):
        rng = seeded(seed)
        q = random_quiver(rng)
        # random composable pair via a random walk split in two
        v = rng.choice(q.vertices)
        walk = []
        cur = v
        for _ in range(rng.randint(0, 6)):
            outs = q.arrows_from(cur)
            if not outs:
                break
            a = rng.choice(outs)
            walk.append(a.name)
            cur = a.target
        cut = rng.randint(0, len(walk))
        first = Path(q, tuple(walk[:cut])) if cut else Path.trivial(q, v)
        second = (Path(q, tuple(walk[cut:])) if cut < len(walk)
                  else Path.trivial(q, first.target))
        prod = compose(second, first)
        assert prod.length == first.length + second.length
        assert prod.source == first.source and prod.target == second.target


class TestGraphAnalysis:
    def test_linear_a3(self):
        info = analyze(linear_quiver(3))
        assert info.is_acyclic and not info.is_cycle_graph
        assert info.longest_path == 2

    def test_c4(self):
        info = analyze(cycle_quiver(4))
        assert len(info.sccs) == 1 and info.is_cycle_graph
        assert info.longest_path == INFINITE

    def test_sec4_degrees(self):
        # derived by exhaustive degree check: one SCC, vertex 2 has
        # out-degree 2 so not a cycle graph
        q = sec4_quiver()
        info = analyze(q)
        assert info.sccs == [frozenset({"1", "2"})]
        assert not info.is_acyclic and not info.is_cycle_graph
        assert q.out_degree("2") == 2

    def test_parallel_arrows_not_cycle_graph(self):
        q = Quiver(["1", "2"], [("a", "1", "2"), ("a2", "1", "2"), ("b", "2", "1")])
        assert not is_cycle_graph(q)

    def test_single_loop_is_c1(self):
        assert is_cycle_graph(Quiver(["v"], [("p", "v", "v")]))

    def test_scc_oracle_random(self):
        # oracle: two-way reachability by brute-force closure
        for seed in range(40):
            rng = seeded(seed)
            q = random_quiver(rng)
            reach = {v: {v} for v in q.vertices}
            changed = True
            while changed:
                changed = False
                for a in q.arrows:
                    for v in q.vertices:
                        if a.source in reach[v] and a.target not in reach[v]:
                            reach[v].add(a.target)
                            changed = True
            expected = set()
            for v in q.vertices:
                comp = frozenset(w for w in q.vertices
                                 if w in reach[v] and v in reach[w])
                expected.add(comp)
            assert set(strongly_connected_components(q)) == expected

    def test_longest_path_oracle_random(self):
        # oracle: DFS over all paths (safe: acyclic instances only)
        for seed in range(30):
            rng = seeded(seed)
            q = random_quiver(rng, max_vertices=5, max_arrows=6)
            info = analyze(q)
            if not info.is_acyclic:
                continue
            best = 0
            stack = [(v, 0) for v in q.vertices]
            while stack:
                v, ln = stack.pop()
                best = max(best, ln)
                for a in q.arrows_from(v):
                    stack.append((a.target, ln + 1))
            assert info.longest_path == best


class TestInfinitePathCore:
    def test_acyclic_empty(self):
        assert infinite_path_core(linear_quiver(4)) is None

    def test_c3_everything(self):
        q = cycle_quiver(3)
        core = infinite_path_core(q)
        assert set(core.vertices) == set(q.vertices)
        assert len(core.arrows) == 3

    def test_loop_plus_exit(self):
        # loop at v plus arrow v->w: only v (and its loop) can start
        # arbitrarily long paths; oracle: reachability to a cycle
        q = Quiver(["v", "w"], [("p", "v", "v"), ("e", "v", "w")])
        core = infinite_path_core(q)
        assert set(core.vertices) == {"v"}
        assert [a.name for a in core.arrows] == ["p"]

    def test_idempotent_random(self):
        for seed in range(40):
            q = random_quiver(seeded(seed))
            core = infinite_path_core(q)
            if core is None:
                continue
            again = infinite_path_core(core)
            assert again is not None
            assert set(again.vertices) == set(core.vertices)
            assert set(a.name for a in again.arrows) == set(a.name for a in core.arrows)


class TestFinalSubhearts:
    def test_a2_sink(self):
        hearts = final_subhearts(linear_quiver(2))
        assert len(hearts) == 1
        assert hearts[0].trivial and set(hearts[0].subquiver.vertices) == {"2"}

    def test_cn_whole(self):
        hearts = final_subhearts(cycle_quiver(4))
        assert len(hearts) == 1 and not hearts[0].trivial
        assert hearts[0].is_cycle_graph()

    def test_two_cycles_condensation(self):
        # C^2 feeding a C^1: the only final subheart is the loop component
        q = Quiver(
            ["1", "2", "3"],
            [("a", "1", "2"), ("b", "2", "1"), ("j", "2", "3"), ("l", "3", "3")],
        )
        hearts = final_subhearts(q)
        assert len(hearts) == 1
        assert set(hearts[0].subquiver.vertices) == {"3"}
        assert not hearts[0].trivial and hearts[0].is_cycle_graph()

    def test_subhearts_inside_core_random(self):
        for seed in range(60):
            q = random_quiver(seeded(seed))
            core = infinite_path_core(q)
            for heart in final_subhearts(q):
                if heart.subquiver.arrows:
                    assert core is not None
                    assert set(heart.subquiver.vertices) <= set(core.vertices)

    def test_cycle_no_sinks_gives_nontrivial_subheart(self):
        # a trivial final subheart is exactly a sink, so a sink-free quiver
        # with a cycle always has a non-trivial one (the stated "no sources"
        # hypothesis fails on: loop at 2 plus arrow 2 -> 1)
        hits = 0
        for seed in range(120):
            q = random_quiver(seeded(seed))
            info = analyze(q)
            has_sink = any(q.out_degree(v) == 0 for v in q.vertices)
            if info.is_acyclic or has_sink:
                continue
            hits += 1
            assert any(not h.trivial for h in final_subhearts(q))
        assert hits > 10

    def test_acyclic_iff_finite_longest_iff_empty_core(self):
        for seed in range(60):
            q = random_quiver(seeded(seed))
            info = analyze(q)
            assert info.is_acyclic == (info.longest_path != INFINITE)
            assert info.is_acyclic == (infinite_path_core(q) is None)
