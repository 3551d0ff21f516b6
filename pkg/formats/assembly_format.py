"""Assembly text: one ``L``/``C`` line per walk, as printed by the CLI."""

from typing import List, Optional

from core.assembly import Assembly, Topology, Verdict, Walk
from core.errors import FormatSyntaxError
from core.hypergraph import Weight
from formats.hypergraph_format import format_weight, tokenize

_HEADERS = {"YES", "NO", "WEIGHT"}


def parse_assembly(text: str, source: Optional[str] = None) -> Assembly:
    """Read walk lines; verdict, weight and ``#`` note lines from CLI output are skipped."""
    walks = []
    for record in tokenize(text):
        head = record[0]
        if head.text in _HEADERS:
            continue
        if head.text not in (Topology.LINEAR.value, Topology.CIRCULAR.value):
            raise FormatSyntaxError(f"unknown record {head.text!r}", head.line, head.column, source)
        if len(record) < 2:
            raise FormatSyntaxError("walk without vertices", head.line, head.column, source)
        walks.append(Walk(tuple(t.text for t in record[1:]), Topology(head.text)))
    return Assembly(tuple(walks))


def render_assembly(assembly: Assembly) -> List[str]:
    return assembly.render_lines()


def render_verdict(verdict: Verdict, weight: Optional[Weight] = None, notes: bool = False) -> str:
    lines = [verdict.answer.value]
    if notes:
        lines.extend(f"# {note}" for note in verdict.notes)
    if verdict.is_yes:
        lines.extend(render_assembly(verdict.witness))
    if weight is not None:
        lines.append(f"WEIGHT {format_weight(weight)}")
    return "\n".join(lines) + "\n"
