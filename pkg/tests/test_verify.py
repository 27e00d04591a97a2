import random
from itertools import combinations

import pytest

from ramseykit.counting import count_shape
from ramseykit.errors import InputError
from ramseykit.fixtures import fixture_by_id
from ramseykit.graphs import Graph, MultiColoring, all_graphs
from ramseykit.problems import Book, Clique, TwoColorProblem, Wheel, parse_problem
from ramseykit.verify import (
    Verdict,
    find_book,
    find_clique,
    find_shape,
    find_wheel,
    has_shape_through,
    is_ramsey_witness,
    verify,
    verify_gr,
    verify_witness,
    violation_holds,
)


def random_graph(rng, n, p=0.5):
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


SHAPES = [Book(1), Book(2), Book(3), Wheel(4), Wheel(5), Clique(3), Clique(4)]


class TestFinders:
    def test_find_book_embedding_is_real(self):
        rng = random.Random(20)
        for _ in range(80):
            g = random_graph(rng, rng.randint(3, 10))
            hit = find_book(g, 2)
            if hit is None:
                assert count_shape(g, Book(2)) == 0
                continue
            (u, v), pages = hit
            assert g.has_edge(u, v)
            assert len(pages) == 2
            for p in pages:
                assert g.has_edge(u, p) and g.has_edge(v, p)

    def test_find_wheel_embedding_is_real(self):
        rng = random.Random(21)
        for _ in range(80):
            g = random_graph(rng, rng.randint(5, 10), 0.6)
            hit = find_wheel(g, 5)
            if hit is None:
                assert count_shape(g, Wheel(5)) == 0
                continue
            hub, rim = hit
            assert len(set(rim)) == 4 and hub not in rim
            for x in rim:
                assert g.has_edge(hub, x)
            for i in range(4):
                assert g.has_edge(rim[i], rim[(i + 1) % 4])

    def test_find_clique_embedding_is_real(self):
        rng = random.Random(22)
        for _ in range(80):
            g = random_graph(rng, rng.randint(3, 10))
            hit = find_clique(g, 4)
            if hit is None:
                assert count_shape(g, Clique(4)) == 0
                continue
            assert all(g.has_edge(a, b) for a, b in combinations(hit, 2))

    def test_find_shape_agrees_with_counts_exhaustively(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                for shape in SHAPES:
                    assert (find_shape(g, shape) is None) == (
                        count_shape(g, shape) == 0
                    )


class TestThroughVertex:
    def test_deleting_the_vertex_is_the_oracle(self):
        # a shape passes through x iff deleting x lowers the count
        rng = random.Random(23)
        for _ in range(120):
            g = random_graph(rng, rng.randint(5, 9), rng.uniform(0.3, 0.8))
            shape = SHAPES[rng.randrange(len(SHAPES))]
            x = rng.randrange(g.n)
            drop = count_shape(g, shape) - count_shape(g.delete_vertex(x), shape)
            assert has_shape_through(g, x, shape) == (drop > 0)

    def test_union_over_vertices_matches_existence(self):
        rng = random.Random(24)
        for _ in range(60):
            g = random_graph(rng, rng.randint(4, 9))
            for shape in (Book(2), Wheel(5), Clique(4)):
                anywhere = find_shape(g, shape) is not None
                assert any(
                    has_shape_through(g, x, shape) for x in range(g.n)
                ) == anywhere

    def test_unknown_shape_rejected(self):
        with pytest.raises(InputError):
            has_shape_through(Graph.complete(4), 0, "K4")


class TestTwoColorVerify:
    def test_complement_duality(self):
        rng = random.Random(25)
        problems = [
            TwoColorProblem(Book(2), Book(3)),
            TwoColorProblem(Clique(3), Clique(3)),
            TwoColorProblem(Wheel(5), Wheel(5)),
            TwoColorProblem(Book(2), Clique(4)),
        ]
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 9))
            p = problems[rng.randrange(len(problems))]
            q = TwoColorProblem(p.right, p.left)
            assert verify(g, p).valid == verify(g.complement(), q).valid

    def test_k6_fails_k3_k3(self):
        p = parse_problem("K3,K3")
        v = verify(Graph.complete(6), p)
        assert not v.valid and v.violation.side == "graph"
        v = verify(Graph(6), p)
        assert not v.valid and v.violation.side == "complement"
        assert is_ramsey_witness(Graph.cycle(5), p)

    def test_fixture_witnesses_pass(self):
        for fid in ("RB2B8-20", "RW5W7-14", "RB3B6-18"):
            rec = fixture_by_id(fid)
            assert verify(rec.load(), rec.problem).valid

    def test_invalid_verdicts_carry_checkable_certificates(self):
        rng = random.Random(26)
        problems = [
            TwoColorProblem(Book(2), Book(2)),
            TwoColorProblem(Wheel(5), Clique(3)),
            TwoColorProblem(Clique(3), Clique(4)),
        ]
        checked = 0
        for _ in range(150):
            g = random_graph(rng, rng.randint(4, 9))
            p = problems[rng.randrange(len(problems))]
            v = verify(g, p)
            if not v.valid:
                assert violation_holds(g, p, v.violation)
                checked += 1
        assert checked > 50

    def test_tampered_certificate_rejected(self):
        p = parse_problem("K3,K3")
        v = verify(Graph.complete(6), p)
        bad = v.violation
        bad.roles["clique"] = (0, 1, 5) if bad.roles["clique"] != (0, 1, 5) else (0, 2, 5)
        g = Graph.complete(6)
        g.remove_edge(*bad.roles["clique"][:2])
        assert not violation_holds(g, p, bad)

    def test_verdict_is_truthy(self):
        assert bool(Verdict(True)) and not bool(Verdict(False))


class TestGrVerify:
    def test_valid_fixture(self):
        rec = fixture_by_id("GR3K4T2-9")
        assert verify_gr(rec.load(), rec.problem).valid

    def test_monochromatic_violation(self):
        p = parse_problem("GR:3,K4,2")
        mc = MultiColoring(5, 3)
        v = verify_gr(mc, p)
        assert not v.valid
        assert len(v.violation.roles["clique"]) == 4
        assert set(v.violation.colors) == {1}
        assert violation_holds(mc, p, v.violation)

    def test_r_mismatch_rejected(self):
        with pytest.raises(InputError):
            verify_gr(MultiColoring(5, 4), parse_problem("GR:3,K4,2"))

    def test_score_zero_iff_valid(self):
        from ramseykit.counting import gr_score

        rng = random.Random(27)
        p = parse_problem("GR:3,K4,2")
        for _ in range(100):
            mc = MultiColoring(rng.randint(4, 8), 3)
            for u in range(mc.n):
                for v in range(u + 1, mc.n):
                    mc.set_color(u, v, rng.randint(1, 3))
            assert verify_gr(mc, p).valid == (gr_score(mc, 4, 2) == 0)

    def test_tampered_gr_certificate_rejected(self):
        p = parse_problem("GR:3,K4,2")
        mc = MultiColoring(5, 3)
        v = verify_gr(mc, p)
        mc.set_color(0, 1, 2)
        mc.set_color(0, 2, 3)
        assert not violation_holds(mc, p, v.violation)


class TestDispatch:
    def test_two_color_accepts_r2_coloring(self):
        rec = fixture_by_id("RB2B8-20")
        g = rec.load()
        mc = MultiColoring(g.n, 2)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                mc.set_color(u, v, 1 if g.has_edge(u, v) else 2)
        assert verify_witness(mc, rec.problem).valid
        assert verify_witness(g, rec.problem).valid

    def test_two_color_rejects_r3_coloring(self):
        with pytest.raises(InputError):
            verify_witness(MultiColoring(4, 3), parse_problem("B2,B3"))

    def test_gr_rejects_plain_graph(self):
        with pytest.raises(InputError):
            verify_witness(Graph.complete(4), parse_problem("GR:3,K4,2"))

    def test_violation_str_mentions_roles(self):
        v = verify(Graph.complete(6), parse_problem("K3,K3")).violation
        assert "clique=" in str(v)
        v = verify_gr(MultiColoring(5, 3), parse_problem("GR:3,K4,2")).violation
        assert "colors={1}" in str(v)
