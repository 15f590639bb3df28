"""Core types for edge-colored vertex-ordered complete graphs.

Vertices are 1..m in their linear order.  An edge is an unordered pair
written (lo, hi) with lo < hi.  Two vertex-disjoint ("independent") edges
stand in exactly one of three relations -- crossing, nested, separated --
and every structural guarantee in this package is phrased as "no pair
realizes a forbidden relation" or "every pair realizes a required one".

Everything here is an immutable value; operations are pure functions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Relation",
    "Edge",
    "OrderedColoring",
    "Constraint",
    "Certificate",
    "ValidationReport",
    "OrdramError",
    "IdenticalEdge",
    "SharedVertex",
    "ColoringFormatError",
    "OracleLimitExceeded",
    "LimitExceeded",
    "AlgorithmStuck",
    "NotARedClique",
    "EdgeNotRed",
    "InsufficientVertices",
    "NoneFound",
    "BudgetExceeded",
    "classify_pair",
    "validate_certificate",
    "relation_profile",
    "reverse",
    "reverse_edges",
    "reverse_certificate",
    "edge_index",
    "all_edges",
    "coloring_to_text",
    "coloring_from_text",
    "save_coloring",
    "load_coloring",
    "certificate_to_json",
    "certificate_from_json",
    "save_certificate",
    "load_certificate",
]

TOOL_VERSION = "1.0.0"


# ============================================================
# Errors
# ============================================================

class OrdramError(Exception):
    """Base class for all domain errors raised by this package."""


class IdenticalEdge(OrdramError):
    """Raised when a pair operation receives the same edge twice."""


class SharedVertex(OrdramError):
    """Raised when a pair operation receives edges sharing an endpoint."""


class ColoringFormatError(OrdramError):
    """Raised by the coloring/certificate loaders on malformed input."""


class OracleLimitExceeded(OrdramError):
    """Input too large for an exact exhaustive oracle."""


class LimitExceeded(OrdramError):
    """Input too large for the exact chromatic-number search."""


class AlgorithmStuck(OrdramError):
    """A constructive solver hit a dead end its guarantee rules out.

    Carries a trace of the decisions taken so the instance can be replayed.
    """

    def __init__(self, message: str, trace: object = None):
        super().__init__(message if trace is None else f"{message}\ntrace: {trace!r}")
        self.trace = trace


class NotARedClique(OrdramError):
    """The supplied vertex set does not span a clique of color 0."""


class EdgeNotRed(OrdramError):
    """The supplied edge is not colored 0 as required."""


class InsufficientVertices(OrdramError):
    """Fewer vertices available than the requested matching size needs."""


class NoneFound(OrdramError):
    """A guaranteed object was not found -- signals a defect, not bad input."""


class BudgetExceeded(OrdramError):
    """Search budget exhausted.  Carries the partial statistics."""

    def __init__(self, message: str, stats: object = None):
        super().__init__(message)
        self.stats = stats


# ============================================================
# Relations and edges
# ============================================================

class Relation(Enum):
    """The three possible relations of an independent edge pair."""

    CROSSING = "Crossing"
    NESTED = "Nested"
    SEPARATED = "Separated"

    def __str__(self) -> str:  # serialized spelling
        return self.value

    @classmethod
    def from_name(cls, name: str) -> "Relation":
        key = name.strip().lower()
        for rel in cls:
            if rel.value.lower() == key:
                return rel
        raise ColoringFormatError(f"unknown relation name: {name!r}")


@dataclass(frozen=True, order=True)
class Edge:
    """An edge (lo, hi) of the ordered complete graph, 1-based, lo < hi."""

    lo: int
    hi: int

    def __post_init__(self):
        if not (isinstance(self.lo, int) and isinstance(self.hi, int)):
            raise ValueError(f"edge endpoints must be ints, got ({self.lo!r}, {self.hi!r})")
        if not (1 <= self.lo < self.hi):
            raise ValueError(f"edge needs 1 <= lo < hi, got ({self.lo}, {self.hi})")

    @property
    def length(self) -> int:
        return self.hi - self.lo

    def shares_vertex(self, other: "Edge") -> bool:
        return len({self.lo, self.hi, other.lo, other.hi}) < 4

    def __iter__(self):
        return iter((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"({self.lo},{self.hi})"


def _as_edge(e) -> Edge:
    if isinstance(e, Edge):
        return e
    lo, hi = e
    return Edge(int(lo), int(hi))


def classify_pair(e: Edge, f: Edge) -> Relation:
    """Relation of two independent edges; errors on non-independent input."""
    e = _as_edge(e)
    f = _as_edge(f)
    if e == f:
        raise IdenticalEdge(f"identical edges {e}")
    if e.shares_vertex(f):
        raise SharedVertex(f"edges {e} and {f} share a vertex")
    if f.lo < e.lo:
        e, f = f, e
    # now e.lo < f.lo and all four endpoints are distinct
    if e.hi < f.lo:
        return Relation.SEPARATED
    if f.hi < e.hi:
        return Relation.NESTED
    return Relation.CROSSING


def relation_profile(edges: Iterable) -> dict:
    """Counts of each relation over the independent pairs of an edge set.

    Pairs sharing a vertex are not counted; the three counts sum to the
    number of independent pairs.
    """
    es = [_as_edge(e) for e in edges]
    counts = {Relation.CROSSING: 0, Relation.NESTED: 0, Relation.SEPARATED: 0}
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if not es[i].shares_vertex(es[j]):
                counts[classify_pair(es[i], es[j])] += 1
    return counts


# ============================================================
# Colorings
# ============================================================

def edge_index(m: int, lo: int, hi: int) -> int:
    """Position of edge (lo,hi) in the lexicographic edge order of [m]."""
    if not (1 <= lo < hi <= m):
        raise ValueError(f"edge ({lo},{hi}) out of range for m={m}")
    # edges with smaller lo come first; within a row, by hi
    return (lo - 1) * m - (lo * (lo - 1)) // 2 + (hi - lo - 1)


def all_edges(m: int) -> Iterator[Edge]:
    """All edges of the ordered complete graph on [m], lexicographic."""
    for lo in range(1, m + 1):
        for hi in range(lo + 1, m + 1):
            yield Edge(lo, hi)


@dataclass(frozen=True)
class OrderedColoring:
    """A total t-coloring of the edges of the ordered complete graph on [m].

    Colors are 0-based; for t = 2 color 0 reads "red" and color 1 "blue"
    in human-facing output.  The color vector is stored in lexicographic
    edge order.
    """

    m: int
    t: int
    colors: tuple

    def __post_init__(self):
        if self.m < 1 or self.t < 1:
            raise ValueError(f"need m >= 1 and t >= 1, got m={self.m}, t={self.t}")
        want = self.m * (self.m - 1) // 2
        if len(self.colors) != want:
            raise ValueError(f"expected {want} edge colors for m={self.m}, got {len(self.colors)}")
        for c in self.colors:
            if not (isinstance(c, int) and 0 <= c < self.t):
                raise ValueError(f"color {c!r} out of range 0..{self.t - 1}")

    # ---- constructors ----

    @classmethod
    def from_function(cls, m: int, t: int, fn) -> "OrderedColoring":
        """Build from fn(lo, hi) -> color."""
        return cls(m, t, tuple(int(fn(e.lo, e.hi)) for e in all_edges(m)))

    @classmethod
    def constant(cls, m: int, t: int, color: int = 0) -> "OrderedColoring":
        return cls(m, t, tuple([color] * (m * (m - 1) // 2)))

    # ---- access ----

    def color_of(self, e, hi: Optional[int] = None) -> int:
        if hi is not None:
            lo = e
        else:
            e = _as_edge(e)
            lo, hi = e.lo, e.hi
        return self.colors[edge_index(self.m, lo, hi)]

    def edges(self) -> Iterator[Edge]:
        return all_edges(self.m)

    def color_class(self, color: int) -> list:
        """Edges of the given color, lexicographic."""
        return [e for e in all_edges(self.m) if self.color_of(e) == color]

    def counts(self) -> list:
        out = [0] * self.t
        for c in self.colors:
            out[c] += 1
        return out


def reverse(obj, m: Optional[int] = None):
    """Reverse the vertex order, i -> m+1-i.

    Accepts an OrderedColoring (colors carried along) or an edge iterable
    (then m is required).  An involution; relations are preserved.
    """
    if isinstance(obj, OrderedColoring):
        c = obj
        return OrderedColoring.from_function(
            c.m, c.t, lambda lo, hi: c.color_of(c.m + 1 - hi, c.m + 1 - lo))
    if m is None:
        raise ValueError("reversing an edge set needs the vertex count m")
    return reverse_edges(obj, m)


def reverse_edges(edges: Iterable, m: int) -> tuple:
    """The edge set under i -> m+1-i, sorted lexicographically."""
    out = [Edge(m + 1 - e.hi, m + 1 - e.lo) for e in map(_as_edge, edges)]
    return tuple(sorted(out))


# ============================================================
# Constraints and certificates
# ============================================================

@dataclass(frozen=True)
class Constraint:
    """Pairwise requirement on the independent pairs of a certificate.

    Either a set of forbidden relations (possibly empty) or one required
    relation -- never both.  Edges sharing a vertex are unconstrained.
    """

    forbidden: frozenset = frozenset()
    required: Optional[Relation] = None

    def __post_init__(self):
        if self.required is not None and self.forbidden:
            raise ValueError("constraint cannot both forbid and require")
        for r in self.forbidden:
            if not isinstance(r, Relation):
                raise ValueError(f"forbidden entries must be Relations, got {r!r}")

    @classmethod
    def forbid(cls, *relations: Relation) -> "Constraint":
        return cls(forbidden=frozenset(relations))

    @classmethod
    def require(cls, relation: Relation) -> "Constraint":
        return cls(required=relation)

    @classmethod
    def none(cls) -> "Constraint":
        return cls()

    def allows(self, rel: Relation) -> bool:
        if self.required is not None:
            return rel == self.required
        return rel not in self.forbidden

    def describe(self) -> str:
        if self.required is not None:
            return f"required {self.required}"
        if not self.forbidden:
            return "unconstrained"
        names = sorted(str(r) for r in self.forbidden)
        return "forbidden {" + ", ".join(names) + "}"


NON_CROSSING = Constraint.forbid(Relation.CROSSING)
NON_NESTED = Constraint.forbid(Relation.NESTED)
NON_SEPARATED = Constraint.forbid(Relation.SEPARATED)

KINDS = ("Matching", "SpanningTree", "Subtree", "Subgraph")


@dataclass(frozen=True)
class Certificate:
    """A checkable witness: an edge set of one color with a pairwise guarantee.

    kind is one of Matching / SpanningTree / Subtree / Subgraph; size is the
    matching size n for Matching kind, else None.  producer names the
    operation that built the certificate.  Edges are kept sorted.
    """

    kind: str
    edges: tuple
    color: int
    constraint: Constraint = field(default_factory=Constraint)
    producer: str = ""
    size: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        object.__setattr__(self, "edges", tuple(sorted(_as_edge(e) for e in self.edges)))
        if self.kind == "Matching" and self.size is None:
            object.__setattr__(self, "size", len(self.edges))

    def vertices(self) -> set:
        out: set = set()
        for e in self.edges:
            out.update((e.lo, e.hi))
        return out


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_certificate; truthy iff the certificate holds."""

    ok: bool
    reason: Optional[str] = None
    pair: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "valid" if self.ok else f"invalid: {self.reason}"


def _fail(reason: str, pair=None) -> ValidationReport:
    return ValidationReport(False, reason, pair)


def validate_certificate(coloring: OrderedColoring, cert: Certificate) -> ValidationReport:
    """Independent check of every certificate invariant against a coloring.

    Reports the first violated invariant and, for pairwise violations, the
    offending edge pair.
    """
    m = coloring.m
    edges = cert.edges
    seen = set()
    for e in edges:
        if e.hi > m:
            return _fail(f"edge {e} outside [1,{m}]")
        if e in seen:
            return _fail(f"duplicate edge {e}")
        seen.add(e)
    if not (0 <= cert.color < coloring.t):
        return _fail(f"color {cert.color} out of range for t={coloring.t}")
    for e in edges:
        got = coloring.color_of(e)
        if got != cert.color:
            return _fail(f"edge {e} has color {got}, certificate claims {cert.color}")

    # kind-specific structure
    if cert.kind == "Matching":
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if edges[i].shares_vertex(edges[j]):
                    return _fail("matching edges share a vertex", (edges[i], edges[j]))
        if cert.size is not None and cert.size != len(edges):
            return _fail(f"matching states size {cert.size} but has {len(edges)} edges")
    elif cert.kind in ("SpanningTree", "Subtree"):
        if cert.kind == "SpanningTree":
            if len(edges) != m - 1:
                return _fail(f"spanning tree needs {m - 1} edges, has {len(edges)}")
            need = set(range(1, m + 1))
        else:
            need = cert.vertices()
        if edges:
            if len(edges) != len(need) - 1:
                return _fail(f"tree on {len(need)} vertices needs {len(need) - 1} edges, has {len(edges)}")
            # connectivity via union-find; edge count + connected => acyclic
            parent = {v: v for v in need}

            def find(v):
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                return v

            for e in edges:
                ra, rb = find(e.lo), find(e.hi)
                if ra == rb:
                    return _fail("tree edges contain a cycle")
                parent[ra] = rb
            roots = {find(v) for v in need}
            if len(roots) > 1:
                return _fail("tree edges do not connect all their vertices")
        elif cert.kind == "SpanningTree" and m > 1:
            return _fail(f"spanning tree needs {m - 1} edges, has 0")
    # Subgraph: no structural requirement

    # pairwise relation constraint
    con = cert.constraint
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            e, f = edges[i], edges[j]
            if e.shares_vertex(f):
                continue
            rel = classify_pair(e, f)
            if not con.allows(rel):
                return _fail(f"pair {e},{f} is {rel}, violating {con.describe()}", (e, f))
    return ValidationReport(True)


def reverse_certificate(cert: Certificate, m: int) -> Certificate:
    """The certificate under vertex reversal (constraints are invariant)."""
    return Certificate(
        kind=cert.kind,
        edges=reverse_edges(cert.edges, m),
        color=cert.color,
        constraint=cert.constraint,
        producer=cert.producer,
        size=cert.size,
    )


# ============================================================
# Serialization
# ============================================================

def coloring_to_text(c: OrderedColoring) -> str:
    """Plain-text coloring document: header lines then one edge triple per line."""
    lines = [f"m {c.m}", f"t {c.t}"]
    for e in all_edges(c.m):
        lines.append(f"{e.lo} {e.hi} {c.color_of(e)}")
    return "\n".join(lines) + "\n"


def coloring_from_text(text: str) -> OrderedColoring:
    """Parse a coloring document; rejects duplicates, gaps and bad colors."""
    m = t = None
    triples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "m" and len(parts) == 2 and m is None:
            m = int(parts[1])
        elif parts[0] == "t" and len(parts) == 2 and t is None:
            t = int(parts[1])
        elif len(parts) == 3:
            try:
                triples.append((int(parts[0]), int(parts[1]), int(parts[2]), lineno))
            except ValueError as exc:
                raise ColoringFormatError(f"line {lineno}: not an integer triple: {raw!r}") from exc
        else:
            raise ColoringFormatError(f"line {lineno}: unrecognized line {raw!r}")
    if m is None or t is None:
        raise ColoringFormatError("missing m or t header line")
    if m < 1 or t < 1:
        raise ColoringFormatError(f"bad header values m={m}, t={t}")
    want = m * (m - 1) // 2
    colors: list = [None] * want
    for lo, hi, col, lineno in triples:
        if not (1 <= lo < hi <= m):
            raise ColoringFormatError(f"line {lineno}: edge ({lo},{hi}) out of range for m={m}")
        if not (0 <= col < t):
            raise ColoringFormatError(f"line {lineno}: color {col} out of range for t={t}")
        idx = edge_index(m, lo, hi)
        if colors[idx] is not None:
            raise ColoringFormatError(f"line {lineno}: duplicate edge ({lo},{hi})")
        colors[idx] = col
    if any(c is None for c in colors):
        missing = [str(e) for e in all_edges(m) if colors[edge_index(m, e.lo, e.hi)] is None]
        raise ColoringFormatError(f"missing edges: {', '.join(missing[:5])}"
                                  + ("..." if len(missing) > 5 else ""))
    return OrderedColoring(m, t, tuple(colors))


def save_coloring(c: OrderedColoring, path) -> None:
    with open(path, "w") as fh:
        fh.write(coloring_to_text(c))


def load_coloring(path) -> OrderedColoring:
    with open(path) as fh:
        return coloring_from_text(fh.read())


def certificate_to_json(cert: Certificate) -> str:
    """Structured certificate document; embeds the producing operation and tool version."""
    doc = {
        "kind": cert.kind,
        "color": cert.color,
        "constraint": (
            {"required": str(cert.constraint.required)}
            if cert.constraint.required is not None
            else {"forbidden": sorted(str(r) for r in cert.constraint.forbidden)}
        ),
        "edges": [[e.lo, e.hi] for e in cert.edges],
        "producer": cert.producer,
        "version": TOOL_VERSION,
    }
    if cert.size is not None:
        doc["size"] = cert.size
    return json.dumps(doc, indent=2) + "\n"


def certificate_from_json(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ColoringFormatError(f"bad certificate document: {exc}") from exc
    try:
        con_doc = doc.get("constraint", {})
        if "required" in con_doc:
            con = Constraint.require(Relation.from_name(con_doc["required"]))
        else:
            con = Constraint.forbid(*(Relation.from_name(r) for r in con_doc.get("forbidden", ())))
        return Certificate(
            kind=doc["kind"],
            edges=tuple(Edge(int(lo), int(hi)) for lo, hi in doc["edges"]),
            color=int(doc["color"]),
            constraint=con,
            producer=str(doc.get("producer", "")),
            size=int(doc["size"]) if "size" in doc else None,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ColoringFormatError(f"bad certificate document: {exc}") from exc


def save_certificate(cert: Certificate, path) -> None:
    with open(path, "w") as fh:
        fh.write(certificate_to_json(cert))


def load_certificate(path) -> Certificate:
    with open(path) as fh:
        return certificate_from_json(fh.read())


def color_name(color: int, t: int) -> str:
    """Human-readable color label: red/blue at t=2, else the index."""
    if t == 2:
        return {0: "red", 1: "blue"}[color]
    return f"color {color}"
