"""Finite cobweb posets: levels, order relation, Hasse digraph, linear extension.

A vertex (j, s) sits at position j on level s.  Comparability is decided by
levels alone: x <= y holds exactly when x.level < y.level or x == y, so
every vertex lies below all vertices of every higher level and consecutive
levels are completely connected in the Hasse digraph.  Level 0 always
materializes as the single root (1, 0), even for sequences with F_0 = 0;
this keeps the root edge and the vertex count nu = 1 + sum(F_1..F_n).
"""

from dataclasses import dataclass

from .errors import AdmissibilityError, CobwebError, NotInPosetError
from .sequence import CobwebSequence


@dataclass(frozen=True)
class Vertex:
    """A poset element: position >= 1 within level >= 0."""

    position: int
    level: int

    def __post_init__(self):
        if self.position < 1:
            raise AdmissibilityError(f"vertex position must be >= 1, got {self.position}")
        if self.level < 0:
            raise AdmissibilityError(f"vertex level must be >= 0, got {self.level}")

    def __str__(self):
        return f"({self.position},{self.level})"


def leq(x: Vertex, y: Vertex) -> bool:
    """Order relation: x <= y iff x.level < y.level, or x == y."""
    return x.level < y.level or x == y


def lt(x: Vertex, y: Vertex) -> bool:
    """Strict order; same-level vertices are never comparable."""
    return x.level < y.level


def covers(x: Vertex, y: Vertex) -> bool:
    """True when y sits exactly one level above x (then |[x, y]| = 2)."""
    return y.level == x.level + 1


def rank(x: Vertex) -> int:
    """The rank of a vertex is its level."""
    return x.level


def level_width(seq: CobwebSequence, level: int) -> int:
    """Number of vertices on a level; level 0 is always the single root."""
    return 1 if level == 0 else seq.eval(level)


def validate_vertex(seq: CobwebSequence, v: Vertex) -> None:
    """Raise AdmissibilityError unless v exists in the poset over seq."""
    width = level_width(seq, v.level)
    if v.position > width:
        raise AdmissibilityError(
            f"vertex {v} is inadmissible for '{seq.spec}': level {v.level} "
            f"holds {width} vertex(es)")


class FinitePoset:
    """A materialized finite cobweb poset of some depth n.

    Carries all levels 0..n and the linear extension that orders vertices
    by (level, position).  The linear extension refines the partial order,
    so every incidence function over it is an upper triangular nu x nu
    matrix.  Instances are immutable after construction.
    """

    def __init__(self, seq: CobwebSequence, depth: int, levels: list[list[Vertex]]):
        self.seq = seq
        self.depth = depth
        self.levels = levels
        self.vertices = [v for lv in levels for v in lv]
        self.nu = len(self.vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._edges: list[tuple[Vertex, Vertex]] | None = None

    def __repr__(self):
        return f"FinitePoset(seq={self.seq.spec!r}, depth={self.depth}, nu={self.nu})"

    @property
    def key(self) -> tuple[str, int]:
        """Identity for compatibility checks: (sequence spec, depth)."""
        return (self.seq.spec, self.depth)

    def __contains__(self, v: Vertex) -> bool:
        return v in self._index

    def require_member(self, v: Vertex) -> None:
        if v not in self._index:
            raise NotInPosetError(
                f"vertex {v} is not in P_{self.depth} over '{self.seq.spec}'")

    def index_of(self, v: Vertex) -> int:
        """Position of v in the linear extension."""
        self.require_member(v)
        return self._index[v]

    def vertex(self, i: int) -> Vertex:
        """Inverse of index_of."""
        return self.vertices[i]

    def level_sizes(self) -> list[int]:
        return [len(lv) for lv in self.levels]

    def interval(self, x: Vertex, y: Vertex) -> list[Vertex]:
        """All z with x <= z <= y, in linear-extension order."""
        self.require_member(x)
        self.require_member(y)
        return [z for z in self.vertices if leq(x, z) and leq(z, y)]

    def hasse_edges(self) -> list[tuple[Vertex, Vertex]]:
        """Cover edges: every vertex of level s to every vertex of level s+1."""
        if self._edges is None:
            edges = []
            for s in range(self.depth):
                for a in self.levels[s]:
                    for b in self.levels[s + 1]:
                        edges.append((a, b))
            self._edges = edges
        return self._edges

    def to_json_dict(self) -> dict:
        return {
            "sequence": self.seq.spec,
            "depth": self.depth,
            "nu": self.nu,
            "levels": self.level_sizes(),
            "edges": [[[a.position, a.level], [b.position, b.level]]
                      for a, b in self.hasse_edges()],
        }


def build_subposet(seq: CobwebSequence, n: int) -> FinitePoset:
    """Materialize the finite poset of depth n over seq.

    Evaluates F_0..F_n up front (so a too-short 'list:' sequence fails
    here), then lays out vertices level by level, position ascending.
    """
    if n < 0:
        raise CobwebError(f"poset depth must be >= 0, got {n}")
    widths = [level_width(seq, s) for s in range(n + 1)]
    levels = [[Vertex(j, s) for j in range(1, widths[s] + 1)] for s in range(n + 1)]
    return FinitePoset(seq, n, levels)
