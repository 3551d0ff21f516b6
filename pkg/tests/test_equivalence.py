"""Engines against the exhaustive oracle on small random instances."""

import unittest
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from core.assembly import GenomeModel
from core.compatibility import is_compatible
from core.hypergraph import AssemblyHypergraph, Edge
from engines.adjacency import decide_adjacency, maximize_adjacencies_mixed
from engines.c1p import decide_c1p
from engines.fpt import decide_fpt
from engines.spanning import decide_spanning
from oracle.enumeration import oracle_decide, oracle_max_subset
from services.engine_dispatch import EngineDispatcher

_NAMES = ["a", "b", "c", "d"]
_PAIRS = [frozenset(p) for p in combinations(_NAMES, 2)]
_TRIPLES = [frozenset(t) for t in combinations(_NAMES, 3)]


@st.composite
def hypergraphs(draw, max_multiplicity=2, intervals=True, max_edges=4):
    multiplicity = {v: draw(st.integers(1, max_multiplicity)) for v in _NAMES}
    pool = _PAIRS + (_TRIPLES if intervals else [])
    members = draw(st.lists(st.sampled_from(pool), max_size=max_edges, unique=True))
    weights = draw(st.lists(st.integers(1, 3), min_size=len(members), max_size=len(members)))
    return AssemblyHypergraph(multiplicity, tuple(Edge(m, w) for m, w in zip(members, weights)))


@st.composite
def spanning_instances(draw):
    uniques = ["a", "b", "d", "e"]
    multiplicity = {v: 1 for v in uniques}
    multiplicity["r"] = draw(st.integers(2, 3))
    edges = []
    for _ in range(draw(st.integers(1, 2))):
        u, v = draw(st.lists(st.sampled_from(uniques), min_size=2, max_size=2, unique=True))
        inner = ["r"] * draw(st.integers(1, 2))
        order = [u, *inner, v]
        edges.append(Edge.interval(order, 1, order))
    pairs = [frozenset(p) for p in combinations(uniques + ["r"], 2)]
    for pair in draw(st.lists(st.sampled_from(pairs), max_size=3, unique=True)):
        edges.append(Edge(pair))
    return AssemblyHypergraph(multiplicity, tuple(edges))


class DecisionEquivalenceTests(unittest.TestCase):
    def assert_agrees(self, verdict, h, model):
        expected = oracle_decide(h, model)
        self.assertEqual(verdict.is_yes, expected.is_yes, f"{model.value}: {[e.describe() for e in h.edges]}")
        if verdict.is_yes:
            self.assertTrue(is_compatible(verdict.witness, h, model).ok)

    @given(hypergraphs(max_multiplicity=1))
    @settings(max_examples=60, deadline=None)
    def test_c1p(self, h):
        for model in GenomeModel:
            self.assert_agrees(decide_c1p(h, model), h, model)

    @given(hypergraphs(intervals=False))
    @settings(max_examples=60, deadline=None)
    def test_adjacency(self, h):
        for model in GenomeModel:
            self.assert_agrees(decide_adjacency(h, model), h, model)

    @given(hypergraphs(max_edges=3))
    @settings(max_examples=40, deadline=None)
    def test_fpt(self, h):
        for model in GenomeModel:
            self.assert_agrees(decide_fpt(h, model), h, model)

    @given(hypergraphs(max_edges=3))
    @settings(max_examples=30, deadline=None)
    def test_dispatch(self, h):
        for model in GenomeModel:
            self.assert_agrees(EngineDispatcher().decide(h, model), h, model)

    @given(spanning_instances())
    @settings(max_examples=60, deadline=None)
    def test_spanning_adjacency_shape(self, h):
        for model in GenomeModel:
            self.assert_agrees(decide_spanning(h, model), h, model)


class OptimizerEquivalenceTests(unittest.TestCase):
    @given(hypergraphs(max_multiplicity=1, intervals=False, max_edges=6))
    @settings(max_examples=40, deadline=None)
    def test_maximize_adjacencies(self, h):
        optimum = maximize_adjacencies_mixed(h)
        _, best = oracle_max_subset(h, h.edges, GenomeModel.MIXED)
        self.assertEqual(optimum.weight, best)
        self.assertTrue(is_compatible(optimum.assembly, h.with_edges(optimum.kept), GenomeModel.MIXED).ok)


if __name__ == "__main__":
    unittest.main()
