"""Consecutive-ones recognition for hypergraphs without repeats."""

import logging
from collections import defaultdict
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from core.assembly import Assembly, GenomeModel, Verdict, Walk
from core.compatibility import is_compatible
from core.errors import PreconditionViolated
from core.hypergraph import AssemblyHypergraph, Vertex, connected_components, validate
from engines.base_engine import DecisionEngine, certify

logger = logging.getLogger(__name__)

ENGINE_NAME = "c1p"

Constraint = FrozenSet[Vertex]


def consecutive_order(
    items: Sequence[Vertex],
    constraints: Iterable[Constraint],
) -> Optional[List[Vertex]]:
    """
    Order ``items`` so that every constraint occupies a contiguous block.

    Vertices sharing the same constraint pattern are placed as one block.
    The search extends a prefix one block at a time: the next block must
    belong to every constraint the prefix has started but not finished.
    Prefixes are identified by their placed set, so dead sets are memoized.

    :return: an ordering, or None when none exists.
    """
    item_set = frozenset(items)
    restricted = {frozenset(c) & item_set for c in constraints}
    restricted = [c for c in restricted if len(c) >= 2]

    pattern_to_items = defaultdict(list)
    for item in sorted(item_set):
        pattern = frozenset(i for i, c in enumerate(restricted) if item in c)
        pattern_to_items[pattern].append(item)
    blocks = sorted(pattern_to_items.values())
    block_of = {item: index for index, block in enumerate(blocks) for item in block}
    block_constraints = {frozenset(block_of[v] for v in c) for c in restricted}
    block_constraints = [c for c in block_constraints if len(c) >= 2]
    everything = frozenset(range(len(blocks)))

    dead = set()
    chosen: List[int] = []

    def extend(placed: FrozenSet[int]) -> bool:
        if placed == everything:
            return True
        if placed in dead:
            return False
        started = [c for c in block_constraints if c & placed and not c <= placed]
        candidates = frozenset.intersection(*started) if started else everything
        for block in sorted(candidates - placed):
            chosen.append(block)
            if extend(placed | {block}):
                return True
            chosen.pop()
        dead.add(placed)
        return False

    if not extend(frozenset()):
        return None
    return [item for block in chosen for item in blocks[block]]


def circular_order(
    items: Sequence[Vertex],
    constraints: Iterable[Constraint],
) -> Optional[List[Vertex]]:
    """
    Arrange ``items`` on a circle so every constraint is an arc.

    Fixes the smallest item as the cut point, replaces each constraint
    through it by its complement and solves the linear problem on the rest.
    """
    ordered = sorted(items)
    if not ordered:
        return []
    pivot, rest = ordered[0], frozenset(ordered[1:])
    reduced = []
    for constraint in constraints:
        constraint = frozenset(constraint) & frozenset(ordered)
        reduced.append(rest - constraint if pivot in constraint else constraint)
    line = consecutive_order(sorted(rest), reduced)
    if line is None:
        return None
    return [pivot] + line


def _order_constraints(h: AssemblyHypergraph) -> List[Constraint]:
    pairs = []
    for edge in h.edges:
        for left, right in zip(edge.order, edge.order[1:]):
            pairs.append(frozenset((left, right)))
    return pairs


def _assemble(
    h: AssemblyHypergraph,
    constraints: Sequence[Constraint],
    model: GenomeModel,
) -> Optional[Assembly]:
    walks = []
    for component in connected_components(h):
        members = frozenset(component)
        local = [c for c in constraints if c <= members]
        line = consecutive_order(component, local)
        if line is not None:
            walks.append(Walk.linear(*line))
            continue
        if model is GenomeModel.MIXED and len(component) >= 3:
            circle = circular_order(component, local)
            if circle is not None:
                walks.append(Walk.circular(*circle))
                continue
        logger.debug("Component %s admits no %s arrangement", ",".join(component), model.value)
        return None
    return Assembly(tuple(walks))


def solve_c1p(h: AssemblyHypergraph, model: GenomeModel) -> Tuple[Optional[Assembly], Tuple[str, ...]]:
    """
    Arrange a multiplicity-one hypergraph without validating it.

    Each component becomes one linear walk, or in the mixed model a circular
    walk when no linear arrangement exists. Ordered intervals are first
    ignored; when the witness breaks an order, the instance is solved again
    with each order's consecutive pairs added as constraints.

    :return: the witness (None when there is none) and diagnostic notes.
    """
    for edge in h.edges:
        if edge.order and len(edge.order) != len(edge.members):
            return None, (f"order {edge.describe()} repeats a vertex of multiplicity 1",)

    base = [e.members for e in h.edges]
    witness = _assemble(h, base, model)
    if witness is not None and h.has_ordered_intervals() and not is_compatible(witness, h, model):
        logger.debug("Unordered witness breaks an order; solving with order pairs")
        return _assemble(h, base + _order_constraints(h), model), ("orders enforced through consecutive pairs",)
    return witness, ()


def decide_c1p(h: AssemblyHypergraph, model: GenomeModel) -> Verdict:
    """Decide a hypergraph whose vertices all have multiplicity one."""
    stats = validate(h)
    if stats.max_multiplicity > 1:
        raise PreconditionViolated(
            [f"c1p needs every multiplicity to be 1 (max is {stats.max_multiplicity})"]
        )

    witness, notes = solve_c1p(h, model)
    if witness is None:
        return certify(Verdict.no(ENGINE_NAME, notes), h, model)
    return certify(Verdict.yes(witness, ENGINE_NAME, notes), h, model)


def c1p_linear(h: AssemblyHypergraph) -> Verdict:
    return decide_c1p(h, GenomeModel.LINEAR)


def c1p_mixed(h: AssemblyHypergraph) -> Verdict:
    return decide_c1p(h, GenomeModel.MIXED)


class C1PEngine(DecisionEngine):
    name = ENGINE_NAME

    def decide(self, h: AssemblyHypergraph, model: GenomeModel) -> Verdict:
        return decide_c1p(h, model)

    def unsupported(self, h: AssemblyHypergraph) -> Tuple[str, ...]:
        if h.repeats:
            return (f"repeats present: {', '.join(sorted(h.repeats))}",)
        return ()
