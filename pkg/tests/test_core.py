import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from core.assembly import Answer, Assembly, GenomeModel, Topology, Verdict, Walk, canonical_sequence
from core.compatibility import edge_is_realized, is_compatible
from core.errors import BadMultiplicity, BadOrder, DegenerateEdge, OrderedAdjacency, UndeclaredVertex
from core.hypergraph import (
    AssemblyHypergraph,
    Edge,
    connected_components,
    fresh_vertex,
    induced_adjacency_graph,
    repeat_clusters,
    validate,
)
from tests.fixtures import adj, star, star_ordered, triangle


class ValidateTests(unittest.TestCase):
    def test_star_statistics(self):
        stats = validate(star())
        self.assertEqual(
            (stats.n, stats.m, stats.s, stats.max_edge_size, stats.max_degree, stats.max_multiplicity),
            (5, 4, 8, 2, 4, 2),
        )
        self.assertEqual(stats.repeat_count, 1)
        self.assertEqual(stats.repeats, frozenset({"c"}))

    def test_single_vertex(self):
        stats = validate(AssemblyHypergraph({"v": 1}))
        self.assertEqual(
            (stats.n, stats.m, stats.s, stats.max_edge_size, stats.max_degree, stats.max_multiplicity),
            (1, 0, 0, 0, 0, 1),
        )
        self.assertEqual(stats.repeat_count, 0)

    def test_ordered_adjacency_is_rejected(self):
        h = AssemblyHypergraph({"a": 1, "b": 1}, (Edge(frozenset({"a", "b"}), 1, ("a", "b")),))
        with self.assertRaises(OrderedAdjacency):
            validate(h)

    def test_undeclared_vertex(self):
        with self.assertRaises(UndeclaredVertex):
            validate(AssemblyHypergraph({"a": 1}, (adj("a", "b"),)))

    def test_multiplicity_must_be_positive(self):
        with self.assertRaises(BadMultiplicity):
            validate(AssemblyHypergraph({"a": 0}))

    def test_order_must_cover_members(self):
        edge = Edge.interval(["a", "b", "c"], 1, ["a", "b", "a"])
        with self.assertRaises(BadOrder):
            validate(AssemblyHypergraph({"a": 2, "b": 1, "c": 1}, (edge,)))

    def test_order_may_repeat_members(self):
        edge = Edge.interval(["a", "b", "c"], 1, ["a", "b", "a", "c"])
        stats = validate(AssemblyHypergraph({"a": 2, "b": 1, "c": 1}, (edge,)))
        self.assertEqual(stats.m, 1)

    def test_single_member_edge_is_degenerate(self):
        with self.assertRaises(DegenerateEdge):
            validate(AssemblyHypergraph({"a": 1}, (Edge(frozenset({"a"})),)))


class DerivedStructureTests(unittest.TestCase):
    def test_induced_adjacency_graph_drops_intervals(self):
        self.assertEqual(induced_adjacency_graph(star_ordered()), star())

    def test_induced_adjacency_graph_is_idempotent(self):
        once = induced_adjacency_graph(star_ordered())
        self.assertEqual(induced_adjacency_graph(once), once)

    def test_interval_only_input_keeps_vertices(self):
        h = AssemblyHypergraph({"a": 1, "b": 1, "c": 1}, (Edge.interval(["a", "b", "c"]),))
        induced = induced_adjacency_graph(h)
        self.assertEqual(induced.edges, ())
        self.assertEqual(induced.vertices, ("a", "b", "c"))

    def test_repeat_clusters(self):
        self.assertEqual(repeat_clusters(star()), frozenset({frozenset({"c"})}))
        self.assertEqual(repeat_clusters(triangle()), frozenset())

    def test_unique_vertex_separates_clusters(self):
        h = AssemblyHypergraph({"r1": 2, "r2": 2, "u": 1}, (adj("r1", "u"), adj("r2", "u")))
        self.assertEqual(repeat_clusters(h), frozenset({frozenset({"r1"}), frozenset({"r2"})}))

    def test_interval_joins_repeats_into_one_cluster(self):
        h = AssemblyHypergraph({"r1": 2, "r2": 2, "u": 1}, (Edge.interval(["r1", "r2", "u"]),))
        self.assertEqual(repeat_clusters(h), frozenset({frozenset({"r1", "r2"})}))

    def test_connected_components(self):
        h = AssemblyHypergraph({"a": 1, "b": 1, "z": 1}, (adj("a", "b"),))
        self.assertEqual(connected_components(h), [("a", "b"), ("z",)])

    def test_fresh_vertex(self):
        self.assertEqual(fresh_vertex("t1", ["a"]), "t1")
        self.assertEqual(fresh_vertex("t1", ["t1", "t1~1"]), "t1~2")

    def test_edges_are_sorted_and_deduplicated(self):
        h = AssemblyHypergraph({"a": 1, "b": 1, "c": 1}, (adj("b", "c"), adj("a", "b"), adj("b", "a")))
        self.assertEqual([e.describe() for e in h.edges], ["{a,b}", "{b,c}"])


class AssemblyTests(unittest.TestCase):
    def test_linear_walks_are_canonical_under_reversal(self):
        self.assertEqual(Walk.linear("d", "c", "a").canonical(), Walk.linear("a", "c", "d"))

    def test_circular_walks_are_canonical_under_rotation(self):
        self.assertEqual(Walk.circular("z", "x", "y").canonical(), Walk.circular("x", "y", "z"))
        self.assertEqual(Walk.circular("x", "z", "y").canonical(), Walk.circular("x", "y", "z"))

    def test_assemblies_compare_as_multisets(self):
        left = Assembly.of(Walk.linear("b", "c", "e"), Walk.linear("d", "c", "a"))
        right = Assembly.of(Walk.linear("a", "c", "d"), Walk.linear("e", "c", "b"))
        self.assertEqual(left, right)
        self.assertEqual(left.render_lines(), ["L a c d", "L b c e"])

    def test_empty_walk_is_rejected(self):
        with self.assertRaises(ValueError):
            Walk.linear()

    def test_verdict_carries_witness_exactly_when_yes(self):
        with self.assertRaises(ValueError):
            Verdict(Answer.YES)
        with self.assertRaises(ValueError):
            Verdict(Answer.NO, Assembly.of(Walk.linear("a")))
        self.assertFalse(Verdict.no("test").is_yes)

    @given(st.lists(st.sampled_from("abcd"), min_size=1, max_size=6), st.integers(0, 5))
    @settings(max_examples=60, deadline=None)
    def test_canonical_form_ignores_rotation_and_reflection(self, seq, shift):
        shift %= len(seq)
        rotated = seq[shift:] + seq[:shift]
        base = canonical_sequence(seq, Topology.CIRCULAR)
        self.assertEqual(canonical_sequence(rotated, Topology.CIRCULAR), base)
        self.assertEqual(canonical_sequence(rotated[::-1], Topology.CIRCULAR), base)
        self.assertEqual(
            canonical_sequence(seq, Topology.LINEAR), canonical_sequence(seq[::-1], Topology.LINEAR)
        )


class CompatibilityTests(unittest.TestCase):
    def test_star_ordered_accepts_the_ordered_assembly(self):
        a = Assembly.of(Walk.linear("a", "c", "d"), Walk.linear("b", "c", "e"))
        self.assertTrue(is_compatible(a, star_ordered(), GenomeModel.LINEAR).ok)

    def test_star_ordered_rejects_the_other_pairing(self):
        a = Assembly.of(Walk.linear("a", "c", "b"), Walk.linear("d", "c", "e"))
        report = is_compatible(a, star_ordered(), GenomeModel.LINEAR)
        self.assertFalse(report.ok)
        self.assertEqual(report.first.kind, "edge")
        self.assertEqual(report.first.subject, "a.c.d")
        self.assertEqual(len(report.violations), 1)

    def test_circular_walk_depends_on_model(self):
        a = Assembly.of(Walk.circular("x", "y", "z"))
        self.assertTrue(is_compatible(a, triangle(), GenomeModel.MIXED))
        report = is_compatible(a, triangle(), GenomeModel.LINEAR)
        self.assertEqual(report.first.kind, "circular")

    def test_multiplicity_and_cover(self):
        h = AssemblyHypergraph({"a": 1, "b": 1, "z": 1}, (adj("a", "b"),))
        twice = Assembly.of(Walk.linear("a", "b", "a"), Walk.linear("z"))
        self.assertEqual(is_compatible(twice, h, GenomeModel.LINEAR).first.kind, "multiplicity")
        uncovered = Assembly.of(Walk.linear("a", "b"))
        self.assertEqual(is_compatible(uncovered, h, GenomeModel.LINEAR).first.kind, "uncovered")
        self.assertTrue(is_compatible(uncovered, h, GenomeModel.LINEAR, require_cover=False))

    def test_unknown_vertex(self):
        a = Assembly.of(Walk.linear("p", "q"), Walk.linear("x", "y", "z"))
        self.assertEqual(is_compatible(a, triangle(), GenomeModel.LINEAR).first.kind, "unknown-vertex")

    def test_windows_may_revisit_repeats(self):
        edge = Edge.interval(["a", "b", "r"])
        self.assertTrue(edge_is_realized(Assembly.of(Walk.linear("a", "r", "r", "b")), edge))
        self.assertFalse(edge_is_realized(Assembly.of(Walk.linear("a", "r", "x", "b")), edge))

    def test_ordered_window_matches_mirror(self):
        edge = Edge.interval(["a", "c", "d"], 1, ["a", "c", "d"])
        self.assertTrue(edge_is_realized(Assembly.of(Walk.linear("b", "d", "c", "a")), edge))
        self.assertFalse(edge_is_realized(Assembly.of(Walk.linear("c", "a", "d")), edge))

    def test_windows_wrap_on_circular_walks(self):
        a = Assembly.of(Walk.circular("w", "x", "y", "z"))
        self.assertTrue(edge_is_realized(a, adj("w", "z")))
        self.assertTrue(edge_is_realized(a, Edge.interval(["y", "z", "w"], 1, ["y", "z", "w"])))
        self.assertFalse(edge_is_realized(a, adj("w", "y")))

    def test_removing_edges_keeps_compatibility(self):
        h = star_ordered()
        a = Assembly.of(Walk.linear("a", "c", "d"), Walk.linear("b", "c", "e"))
        for dropped in h.edges:
            smaller = h.with_edges(e for e in h.edges if e != dropped)
            self.assertTrue(is_compatible(a, smaller, GenomeModel.LINEAR).ok, dropped.describe())


if __name__ == "__main__":
    unittest.main()
