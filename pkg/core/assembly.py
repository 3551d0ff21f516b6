from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from core.hypergraph import Vertex


class Topology(str, Enum):
    LINEAR = "L"
    CIRCULAR = "C"


class GenomeModel(str, Enum):
    """Linear model allows only linear walks; mixed also allows circular ones."""

    LINEAR = "linear"
    MIXED = "mixed"


class Answer(str, Enum):
    YES = "YES"
    NO = "NO"


def canonical_sequence(vertices: Sequence[Vertex], topology: Topology) -> Tuple[Vertex, ...]:
    """Smallest representative under reversal, plus rotation for circular walks."""
    forward = tuple(vertices)
    backward = forward[::-1]
    if topology is Topology.LINEAR:
        return min(forward, backward)
    candidates = []
    for base in (forward, backward):
        for shift in range(len(base)):
            candidates.append(base[shift:] + base[:shift])
    return min(candidates)


@dataclass(frozen=True)
class Walk:
    vertices: Tuple[Vertex, ...]
    topology: Topology = Topology.LINEAR

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "topology", Topology(self.topology))
        if not self.vertices:
            raise ValueError("a walk needs at least one vertex")

    @classmethod
    def linear(cls, *vertices: Vertex) -> "Walk":
        return cls(tuple(vertices), Topology.LINEAR)

    @classmethod
    def circular(cls, *vertices: Vertex) -> "Walk":
        return cls(tuple(vertices), Topology.CIRCULAR)

    @property
    def is_circular(self) -> bool:
        return self.topology is Topology.CIRCULAR

    def __len__(self) -> int:
        return len(self.vertices)

    def canonical(self) -> "Walk":
        return Walk(canonical_sequence(self.vertices, self.topology), self.topology)

    def pairs(self) -> Iterator[Tuple[Vertex, Vertex]]:
        """Consecutive pairs, including the closing pair of a circular walk."""
        seq = self.vertices
        for index in range(len(seq) - 1):
            yield seq[index], seq[index + 1]
        if self.is_circular:
            yield seq[-1], seq[0]

    def decode(self, mapping: Mapping[Vertex, Vertex]) -> "Walk":
        return Walk(tuple(mapping.get(v, v) for v in self.vertices), self.topology)

    def sort_key(self):
        return (self.vertices, self.topology.value)

    def render(self) -> str:
        return " ".join((self.topology.value,) + self.vertices)


@dataclass(frozen=True)
class Assembly:
    """A multiset of canonical walks, kept sorted so equal assemblies compare equal."""

    walks: Tuple[Walk, ...] = ()

    def __post_init__(self):
        canonical = tuple(sorted((w.canonical() for w in self.walks), key=Walk.sort_key))
        object.__setattr__(self, "walks", canonical)

    @classmethod
    def of(cls, *walks: Walk) -> "Assembly":
        return cls(tuple(walks))

    @property
    def linear(self) -> Tuple[Walk, ...]:
        return tuple(w for w in self.walks if not w.is_circular)

    @property
    def circular(self) -> Tuple[Walk, ...]:
        return tuple(w for w in self.walks if w.is_circular)

    def occurrences(self) -> Counter:
        counts: Counter = Counter()
        for walk in self.walks:
            counts.update(walk.vertices)
        return counts

    def decode(self, mapping: Mapping[Vertex, Vertex]) -> "Assembly":
        return Assembly(tuple(w.decode(mapping) for w in self.walks))

    def render_lines(self) -> List[str]:
        return [w.render() for w in self.walks]

    def __len__(self) -> int:
        return len(self.walks)


@dataclass(frozen=True)
class Verdict:
    """Yes with a witness assembly, or No. ``notes`` carries engine diagnostics."""

    answer: Answer
    witness: Optional[Assembly] = None
    engine: str = ""
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "notes", tuple(self.notes))
        if (self.answer is Answer.YES) != (self.witness is not None):
            raise ValueError("a verdict carries a witness exactly when it answers YES")

    @classmethod
    def yes(cls, witness: Assembly, engine: str = "", notes: Iterable[str] = ()) -> "Verdict":
        return cls(Answer.YES, witness, engine, tuple(notes))

    @classmethod
    def no(cls, engine: str = "", notes: Iterable[str] = ()) -> "Verdict":
        return cls(Answer.NO, None, engine, tuple(notes))

    @property
    def is_yes(self) -> bool:
        return self.answer is Answer.YES
