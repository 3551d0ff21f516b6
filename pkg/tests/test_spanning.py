import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from core.assembly import Assembly, GenomeModel, Walk
from core.errors import PreconditionViolated
from core.hypergraph import AssemblyHypergraph, Edge
from engines.spanning import (
    EXPERIMENTAL_NOTE,
    SpanningEngine,
    decide_spanning,
    is_spanning_interval,
    realize,
    shape_violations,
)
from oracle.enumeration import oracle_decide
from tests.fixtures import adj, star, star_ordered, two_intervals


def _ordered(*order, weight=1) -> Edge:
    return Edge.interval(order, weight, order)


def _overused() -> AssemblyHypergraph:
    """Three occurrences of a repeat of multiplicity two."""
    return AssemblyHypergraph(
        {"a": 1, "b": 1, "d": 1, "e": 1, "r": 2},
        (_ordered("a", "r", "r", "b"), _ordered("d", "r", "e")),
    )


def _chain_plus_adjacency() -> AssemblyHypergraph:
    return AssemblyHypergraph({"u": 1, "v": 1, "r": 2, "x": 1}, (_ordered("u", "r", "v"), adj("x", "r")))


class SpanningIntervalTests(unittest.TestCase):
    def test_star_ordered_interval(self):
        (interval,) = star_ordered().intervals
        self.assertTrue(is_spanning_interval(interval, star_ordered()))
        self.assertFalse(is_spanning_interval(interval.unordered(), star_ordered()))

    def test_interior_must_be_repeats(self):
        h = AssemblyHypergraph({"u": 1, "w": 1, "r": 2, "v": 1}, (_ordered("u", "r", "w", "v"),))
        self.assertFalse(is_spanning_interval(h.intervals[0], h))

    def test_endpoints_must_be_unique(self):
        h = AssemblyHypergraph({"u": 2, "r": 2, "v": 1}, (_ordered("u", "r", "v"),))
        self.assertFalse(is_spanning_interval(h.intervals[0], h))

    def test_undeclared_endpoints_are_not_spanning(self):
        edge = _ordered("x", "c", "y")
        self.assertFalse(is_spanning_interval(edge, star()))

    def test_unordered_intervals_need_a_companion(self):
        self.assertEqual(
            shape_violations(two_intervals()),
            ["unordered interval {a,b,r} has no companion edge", "unordered interval {c,d,r} has no companion edge"],
        )
        self.assertFalse(SpanningEngine().supports(two_intervals()))
        self.assertTrue(SpanningEngine().supports(star_ordered()))


class RealizeTests(unittest.TestCase):
    def test_star_ordered(self):
        realization = realize(star_ordered())
        self.assertEqual(
            {e.describe() for e in realization.edges},
            {"{b,c}", "{c,e}", "{a,t1}", "{d,t1}"},
        )
        self.assertEqual(realization.multiplicity["c"], 1)
        self.assertEqual(dict(realization.decode), {"t1": "c"})
        self.assertEqual([e.describe() for e in realization.moved], ["{a,c}", "{c,d}"])

    def test_no_ordered_intervals_changes_nothing(self):
        realization = realize(star())
        self.assertEqual(realization.hypergraph(), star())
        self.assertEqual(realization.moved, ())

    def test_overuse_goes_negative(self):
        realization = realize(_overused())
        self.assertEqual(realization.multiplicity["r"], -1)
        self.assertEqual(realization.shortfalls(), ["c'(r) = -1"])

    def test_mirrored_orders_share_a_chain(self):
        h = AssemblyHypergraph(
            {"a": 1, "b": 1, "r": 2},
            (_ordered("a", "r", "b"), _ordered("b", "r", "a", weight=2)),
        )
        realization = realize(h)
        self.assertEqual(realization.fresh_for("r"), ("t1",))
        self.assertEqual(len(realization.spanning), 2)

    def test_loose_orders_are_rejected(self):
        h = AssemblyHypergraph({"u": 2, "r": 2, "v": 1}, (_ordered("u", "r", "v"),))
        with self.assertRaises(PreconditionViolated):
            realize(h)

    @given(
        st.integers(2, 4),
        st.lists(
            st.tuples(st.sampled_from(["a", "b", "d", "e"]), st.integers(1, 2), st.sampled_from(["a", "b", "d", "e"])),
            min_size=1,
            max_size=3,
        ),
    )
    @settings(max_examples=60, deadline=None)
    def test_multiplicity_bookkeeping(self, copies, orders):
        edges = tuple(_ordered(u, *(["r"] * k), v) for u, k, v in orders if u != v)
        h = AssemblyHypergraph({"a": 1, "b": 1, "d": 1, "e": 1, "r": copies}, edges)
        realization = realize(h)
        self.assertEqual(h.c("r"), realization.multiplicity["r"] + len(realization.fresh_for("r")))
        for fresh in realization.decode:
            self.assertEqual(realization.multiplicity[fresh], 1)


class DecideSpanningTests(unittest.TestCase):
    def test_star_ordered_has_a_single_assembly(self):
        verdict = decide_spanning(star_ordered(), GenomeModel.LINEAR)
        self.assertEqual(verdict.witness, Assembly.of(Walk.linear("a", "c", "d"), Walk.linear("b", "c", "e")))

    def test_overuse_is_no(self):
        verdict = decide_spanning(_overused(), GenomeModel.MIXED)
        self.assertFalse(verdict.is_yes)
        self.assertIn("c'(r) = -1", verdict.notes)

    def test_chain_next_to_an_adjacency(self):
        realization = realize(_chain_plus_adjacency())
        self.assertEqual(realization.multiplicity["r"], 1)
        self.assertEqual({e.describe() for e in realization.edges}, {"{r,x}", "{t1,u}", "{t1,v}"})
        verdict = decide_spanning(_chain_plus_adjacency(), GenomeModel.LINEAR)
        self.assertEqual(verdict.witness, Assembly.of(Walk.linear("u", "r", "v"), Walk.linear("x", "r")))

    def test_used_up_repeat_with_edges_left(self):
        h = AssemblyHypergraph(
            {"a": 1, "b": 1, "d": 1, "r": 2},
            (_ordered("a", "r", "r", "b"), adj("d", "r")),
        )
        verdict = decide_spanning(h, GenomeModel.MIXED)
        self.assertFalse(verdict.is_yes)
        self.assertEqual(verdict.notes, ("c'(r) = 0 but r still has edges",))

    def test_companion_interval_goes_through_fpt(self):
        h = AssemblyHypergraph(
            {"u": 1, "v": 1, "r": 2, "x": 1, "y": 1},
            (_ordered("u", "r", "v"), Edge.interval(["x", "y", "r"]), adj("x", "y")),
        )
        mixed = decide_spanning(h, GenomeModel.MIXED)
        self.assertTrue(mixed.is_yes)
        self.assertIn(EXPERIMENTAL_NOTE, mixed.notes)
        linear = decide_spanning(h, GenomeModel.LINEAR)
        self.assertTrue(linear.is_yes)
        self.assertNotIn(EXPERIMENTAL_NOTE, linear.notes)

    def test_companion_interval_cannot_share_an_order_occurrence(self):
        # a e r r b d r reuses the order's last r for {a,e,r}; the rewrite cannot
        h = AssemblyHypergraph(
            {"a": 1, "b": 1, "d": 1, "e": 1, "r": 3},
            (
                adj("a", "e"),
                Edge.interval(["a", "e", "r"]),
                adj("b", "d"),
                _ordered("e", "r", "r", "b"),
                adj("b", "r"),
                adj("d", "r"),
            ),
        )
        self.assertTrue(oracle_decide(h, GenomeModel.LINEAR).is_yes)
        self.assertFalse(decide_spanning(h, GenomeModel.LINEAR).is_yes)

    def test_shape_violations_are_a_precondition_failure(self):
        with self.assertRaises(PreconditionViolated):
            decide_spanning(two_intervals(), GenomeModel.LINEAR)


if __name__ == "__main__":
    unittest.main()
