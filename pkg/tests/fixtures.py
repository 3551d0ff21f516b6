"""Shared instances used across the suites."""

from core.hypergraph import AssemblyHypergraph, Edge


def adj(u, v, weight=1):
    return Edge.adjacency(u, v, weight)


def star() -> AssemblyHypergraph:
    """Five vertices around a repeat c of multiplicity 2."""
    return AssemblyHypergraph(
        {"a": 1, "b": 1, "c": 2, "d": 1, "e": 1},
        (adj("a", "c"), adj("b", "c"), adj("c", "d"), adj("c", "e")),
    )


def star_ordered() -> AssemblyHypergraph:
    h = star()
    return h.with_edges(h.edges + (Edge.interval(["a", "c", "d"], 1, ["a", "c", "d"]),))


def path3() -> AssemblyHypergraph:
    return AssemblyHypergraph({"p": 1, "q": 1, "r": 1}, (adj("p", "q"), adj("q", "r")))


def triangle() -> AssemblyHypergraph:
    return AssemblyHypergraph({"x": 1, "y": 1, "z": 1}, (adj("x", "y"), adj("y", "z"), adj("x", "z")))


def claw() -> AssemblyHypergraph:
    return AssemblyHypergraph(
        {"a": 1, "b": 1, "c": 1, "x": 1}, (adj("a", "x"), adj("b", "x"), adj("c", "x"))
    )


def k4() -> AssemblyHypergraph:
    names = ["a", "b", "c", "d"]
    return AssemblyHypergraph(
        {v: 1 for v in names},
        tuple(adj(u, v) for i, u in enumerate(names) for v in names[i + 1:]),
    )


def trip1() -> AssemblyHypergraph:
    """A repeat r shared by three unique vertices, plus the triple {a,r,b} of weight 2."""
    return AssemblyHypergraph(
        {"a": 1, "b": 1, "d": 1, "r": 2},
        (adj("a", "r"), adj("b", "r"), adj("d", "r"), Edge.interval(["a", "r", "b"], 2)),
    )


def two_intervals() -> AssemblyHypergraph:
    """Intervals {a,b,r} and {c,d,r} sharing a repeat r of multiplicity 2."""
    return AssemblyHypergraph(
        {"a": 1, "b": 1, "c": 1, "d": 1, "r": 2},
        (Edge.interval(["a", "b", "r"]), Edge.interval(["c", "d", "r"])),
    )


STAR_TEXT = """V a 1
V b 1
V c 2
V d 1
V e 1
A a c 1
A b c 1
A c d 1
A c e 1
"""

STAR_ORDERED_TEXT = STAR_TEXT + "I 1 3 a c d O 3 a c d\n"

MARKERS_TEXT = """M m1 1
M m2 1
OA m1 h m2 t 3
"""
