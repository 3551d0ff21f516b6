import unittest

from core.assembly import Assembly, GenomeModel, Walk
from core.compatibility import is_compatible
from core.errors import PreconditionViolated
from core.hypergraph import AssemblyHypergraph
from engines.adjacency import (
    AdjacencyEngine,
    decide_adjacency,
    degree_violations,
    maximize_adjacencies_mixed,
    spare_capacity_violations,
)
from tests.fixtures import adj, claw, k4, path3, star, star_ordered, triangle

STAR_ASSEMBLIES = {
    Assembly.of(Walk.linear("a", "c", "b"), Walk.linear("d", "c", "e")),
    Assembly.of(Walk.linear("a", "c", "d"), Walk.linear("b", "c", "e")),
    Assembly.of(Walk.linear("a", "c", "e"), Walk.linear("b", "c", "d")),
}


class DecideAdjacencyTests(unittest.TestCase):
    def test_star_has_one_of_three_linear_assemblies(self):
        verdict = decide_adjacency(star(), GenomeModel.LINEAR)
        self.assertTrue(verdict.is_yes)
        self.assertIn(verdict.witness, STAR_ASSEMBLIES)

    def test_claw_exceeds_degree(self):
        verdict = decide_adjacency(claw(), GenomeModel.MIXED)
        self.assertFalse(verdict.is_yes)
        self.assertEqual(degree_violations(claw()), ["x has 3 neighbours but multiplicity 1"])
        self.assertEqual(list(verdict.notes), degree_violations(claw()))

    def test_triangle_needs_spare_capacity_on_a_line(self):
        self.assertFalse(decide_adjacency(triangle(), GenomeModel.LINEAR).is_yes)
        self.assertEqual(spare_capacity_violations(triangle()), ["component {x,y,z} has no spare capacity"])
        verdict = decide_adjacency(triangle(), GenomeModel.MIXED)
        self.assertEqual(verdict.witness, Assembly.of(Walk.circular("x", "y", "z")))

    def test_doubled_vertex_opens_the_triangle(self):
        h = AssemblyHypergraph({"x": 2, "y": 1, "z": 1}, triangle().edges)
        verdict = decide_adjacency(h, GenomeModel.LINEAR)
        self.assertTrue(verdict.is_yes)
        self.assertEqual(verdict.witness.circular, ())
        self.assertEqual(verdict.witness.occurrences()["x"], 2)

    def test_k4_is_never_assemblable(self):
        for model in GenomeModel:
            self.assertFalse(decide_adjacency(k4(), model).is_yes)

    def test_isolated_vertices_get_their_own_walk(self):
        h = AssemblyHypergraph({"p": 1, "q": 1, "z": 1}, (adj("p", "q"),))
        verdict = decide_adjacency(h, GenomeModel.LINEAR)
        self.assertEqual(verdict.witness, Assembly.of(Walk.linear("p", "q"), Walk.linear("z")))

    def test_intervals_are_rejected(self):
        with self.assertRaises(PreconditionViolated):
            decide_adjacency(star_ordered(), GenomeModel.LINEAR)
        self.assertFalse(AdjacencyEngine().supports(star_ordered()))
        self.assertTrue(AdjacencyEngine().supports(star()))


class MaximizeAdjacenciesTests(unittest.TestCase):
    def test_claw_drops_one_adjacency(self):
        optimum = maximize_adjacencies_mixed(claw())
        self.assertEqual(optimum.weight, 2)
        self.assertEqual(len(optimum.kept), 2)
        self.assertTrue(is_compatible(optimum.assembly, claw().with_edges(optimum.kept), GenomeModel.MIXED))

    def test_star_keeps_everything(self):
        optimum = maximize_adjacencies_mixed(star())
        self.assertEqual(optimum.weight, 4)
        self.assertEqual(optimum.kept, star().edges)

    def test_k4_keeps_a_cycle(self):
        optimum = maximize_adjacencies_mixed(k4())
        self.assertEqual(optimum.weight, 4)
        (walk,) = optimum.assembly.walks
        self.assertTrue(walk.is_circular)

    def test_path_keeps_both_edges(self):
        self.assertEqual(maximize_adjacencies_mixed(path3()).weight, 2)

    def test_heavy_edges_win(self):
        h = AssemblyHypergraph(
            {"a": 1, "b": 1, "c": 1, "x": 1},
            (adj("a", "x", 5), adj("b", "x", 1), adj("c", "x", 4)),
        )
        optimum = maximize_adjacencies_mixed(h)
        self.assertEqual(optimum.weight, 9)
        self.assertEqual([e.describe() for e in optimum.kept], ["{a,x}", "{c,x}"])

    def test_intervals_are_rejected(self):
        with self.assertRaises(PreconditionViolated):
            maximize_adjacencies_mixed(star_ordered())


if __name__ == "__main__":
    unittest.main()
