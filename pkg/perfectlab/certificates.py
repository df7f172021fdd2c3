"""Certificates, verdict records, and an independent certificate validator.

Every witness is expressed in the ORIGINAL vertex labels of the graph it was
computed on and serializes to ``{"type": ..., "data": ...}``.

The validator at the bottom deliberately re-derives everything from raw
adjacency (``g.n`` and ``g.adj``) instead of calling the engines in
``invariants``/``perfection``, so a bug there cannot hide a bad certificate.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import TYPE_CHECKING, Any, Union

from .bitset import VertexSet, bits, full_mask, popcount, to_list, to_mask

if TYPE_CHECKING:
    from .graph import Graph

# Sides larger than this are not re-validated for perfection (2^n scan).
VALIDATION_SCAN_CAP = 16


@dataclass(frozen=True)
class Coloring:
    classes: tuple[VertexSet, ...]   # color classes, color i = classes[i]

    @property
    def num_colors(self) -> int:
        return sum(1 for c in self.classes if c)

    def color_of(self, v: int) -> int:
        for i, cls in enumerate(self.classes):
            if cls >> v & 1:
                return i
        raise KeyError(v)

    def to_dict(self) -> dict:
        return {"type": "coloring", "data": {"classes": [to_list(c) for c in self.classes]}}


@dataclass(frozen=True)
class Bipartition:
    left: VertexSet
    right: VertexSet

    def to_dict(self) -> dict:
        return {"type": "bipartition", "data": {"left": to_list(self.left), "right": to_list(self.right)}}


@dataclass(frozen=True)
class Partition2:
    a: VertexSet
    b: VertexSet

    def to_dict(self) -> dict:
        return {"type": "partition", "data": {"a": to_list(self.a), "b": to_list(self.b)}}


@dataclass(frozen=True)
class StableSet:
    vertices: VertexSet

    def to_dict(self) -> dict:
        return {"type": "stable_set", "data": {"vertices": to_list(self.vertices)}}


@dataclass(frozen=True)
class OddCycle:
    """Cyclically ordered odd cycle.

    kind "hole": induced in G, length >= 5. "antihole": a hole of the complement.
    "cycle": an odd closed walk without repeated vertices (bipartiteness refutation).
    """

    vertices: tuple[int, ...]
    kind: str = "hole"

    def to_dict(self) -> dict:
        return {"type": "odd_cycle", "data": {"vertices": list(self.vertices), "kind": self.kind}}


@dataclass(frozen=True)
class CliqueWitness:
    vertices: VertexSet

    def to_dict(self) -> dict:
        return {"type": "clique", "data": {"vertices": to_list(self.vertices)}}


@dataclass(frozen=True)
class ImperfectionWitness:
    """Induced subgraph with chi > omega (or chi - omega >= 2 for niceness)."""

    subset: VertexSet
    chi: int
    omega: int

    def to_dict(self) -> dict:
        return {
            "type": "subgraph_gap",
            "data": {"subset": to_list(self.subset), "chi": self.chi, "omega": self.omega},
        }


@dataclass(frozen=True)
class RefutingSubgraph:
    """Induced subgraph admitting no valid two-part division."""

    subset: VertexSet
    omega: int

    def to_dict(self) -> dict:
        return {"type": "refuting_subgraph", "data": {"subset": to_list(self.subset), "omega": self.omega}}


@dataclass(frozen=True)
class Exhausted:
    """Marker: the existential search space was exhausted (negative) or the
    universal sweep completed (positive) without an explicit object to show."""

    reason: str

    def to_dict(self) -> dict:
        return {"type": "exhausted", "data": {"reason": self.reason}}


Certificate = Union[
    Coloring, Bipartition, Partition2, StableSet, OddCycle, CliqueWitness,
    ImperfectionWitness, RefutingSubgraph, Exhausted,
]


@dataclass
class PropertyReport:
    """Verdict for one property of one graph."""

    name: str
    holds: bool
    certificate: Certificate | None = None
    nodes_searched: int = 0
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "class": self.name,
            "holds": self.holds,
            "certificate": self.certificate.to_dict() if self.certificate is not None else None,
            "nodes_searched": self.nodes_searched,
        }
        if self.extra:
            out["extra"] = self.extra
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "PropertyReport":
        cert = data.get("certificate")
        return cls(
            name=data["class"],
            holds=bool(data["holds"]),
            certificate=certificate_from_dict(cert) if cert else None,
            nodes_searched=int(data.get("nodes_searched", 0)),
            extra=dict(data.get("extra", {})),
        )


def certificate_from_dict(data: dict) -> Certificate:
    """Inverse of ``to_dict`` for every certificate type."""
    kind, d = data["type"], data["data"]
    if kind == "coloring":
        return Coloring(tuple(to_mask(c) for c in d["classes"]))
    if kind == "bipartition":
        return Bipartition(to_mask(d["left"]), to_mask(d["right"]))
    if kind == "partition":
        return Partition2(to_mask(d["a"]), to_mask(d["b"]))
    if kind == "stable_set":
        return StableSet(to_mask(d["vertices"]))
    if kind == "odd_cycle":
        return OddCycle(tuple(d["vertices"]), d.get("kind", "hole"))
    if kind == "clique":
        return CliqueWitness(to_mask(d["vertices"]))
    if kind == "subgraph_gap":
        return ImperfectionWitness(to_mask(d["subset"]), d["chi"], d["omega"])
    if kind == "refuting_subgraph":
        return RefutingSubgraph(to_mask(d["subset"]), d["omega"])
    if kind == "exhausted":
        return Exhausted(d["reason"])
    raise ValueError(f"Unknown certificate type: {kind}")


# --- independent validator -------------------------------------------------

def _adjacent(g: "Graph", u: int, v: int) -> bool:
    return bool(g.adj[u] >> v & 1)


def _independent(g: "Graph", s: VertexSet) -> bool:
    return all(not _adjacent(g, u, v) for u, v in combinations(bits(s), 2))


def _complete(g: "Graph", s: VertexSet) -> bool:
    return all(_adjacent(g, u, v) for u, v in combinations(bits(s), 2))


def _clique_number(g: "Graph", s: VertexSet) -> int:
    """Largest k such that some k-subset of s is complete (plain scan)."""
    members = to_list(s)
    best = 0
    for k in range(1, len(members) + 1):
        if any(_complete(g, to_mask(c)) for c in combinations(members, k)):
            best = k
        else:
            break
    return best


def _two_colorable(g: "Graph", s: VertexSet) -> bool:
    side: dict[int, int] = {}
    for root in bits(s):
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in bits(s):
                if v != u and _adjacent(g, u, v):
                    if v not in side:
                        side[v] = 1 - side[u]
                        stack.append(v)
                    elif side[v] == side[u]:
                        return False
    return True


def _induces_cycle(g: "Graph", s: VertexSet, complement: bool) -> bool:
    members = to_list(s)

    def adj(u: int, v: int) -> bool:
        return _adjacent(g, u, v) != complement

    for u in members:
        if sum(1 for v in members if v != u and adj(u, v)) != 2:
            return False
    # 2-regular: a single cycle iff connected
    seen = {members[0]}
    stack = [members[0]]
    while stack:
        u = stack.pop()
        for v in members:
            if v not in seen and v != u and adj(u, v):
                seen.add(v)
                stack.append(v)
    return len(seen) == len(members)


def _perfect(g: "Graph", s: VertexSet) -> bool | None:
    """Perfection of G[s] by scanning odd subsets for holes and antiholes.

    Returns None when s is too large to scan.
    """
    if _two_colorable(g, s):
        return True
    members = to_list(s)
    if len(members) > VALIDATION_SCAN_CAP:
        return None
    for k in range(5, len(members) + 1, 2):
        for combo in combinations(members, k):
            mask = to_mask(combo)
            if _induces_cycle(g, mask, False) or _induces_cycle(g, mask, True):
                return False
    return True


def _validate_odd_cycle(g: "Graph", cyc: OddCycle) -> list[str]:
    verts = list(cyc.vertices)
    k = len(verts)
    problems = []
    if k % 2 == 0 or len(set(verts)) != k or any(not 0 <= v < g.n for v in verts):
        return [f"odd cycle {verts} has even length, repeats, or bad labels"]
    complement = cyc.kind == "antihole"

    def adj(u: int, v: int) -> bool:
        return _adjacent(g, u, v) != complement

    for i in range(k):
        if not adj(verts[i], verts[(i + 1) % k]):
            problems.append(f"{verts[i]}-{verts[(i + 1) % k]} not consecutive-adjacent")
    if cyc.kind in ("hole", "antihole"):
        if k < 5:
            problems.append(f"hole of length {k} < 5")
        for i, j in combinations(range(k), 2):
            if (j - i) % k not in (1, k - 1) and adj(verts[i], verts[j]):
                problems.append(f"chord {verts[i]}-{verts[j]}")
    return problems


def _validate_coloring(g: "Graph", col: Coloring, domain: VertexSet, budget: int | None) -> list[str]:
    problems = []
    union = 0
    for cls in col.classes:
        if union & cls:
            problems.append("color classes overlap")
        union |= cls
        if not _independent(g, cls):
            problems.append(f"color class {to_list(cls)} is not independent")
    if union != domain:
        problems.append("coloring does not cover the domain exactly")
    if budget is not None and col.num_colors > budget:
        problems.append(f"uses {col.num_colors} colors, budget {budget}")
    return problems


def _validate_partition(g: "Graph", part: Partition2) -> list[str]:
    if part.a & part.b or (part.a | part.b) != full_mask(g.n):
        return ["partition sides overlap or do not cover V(G)"]
    return []


def validate(g: "Graph", report: PropertyReport) -> list[str]:
    """Re-check a report's certificate against the graph; return the problems found.

    Positive certificates are checked in full; negative ones as far as an
    adjacency-only check allows (the witness exists and has the stated shape).
    """
    cert = report.certificate
    if cert is None or isinstance(cert, Exhausted):
        return []
    full = full_mask(g.n)
    name = report.name

    if isinstance(cert, OddCycle):
        return _validate_odd_cycle(g, cert)
    if isinstance(cert, CliqueWitness):
        return [] if _complete(g, cert.vertices) else ["clique witness is not complete"]
    if isinstance(cert, Bipartition):
        problems = []
        if cert.left & cert.right or (cert.left | cert.right) != full:
            problems.append("bipartition sides overlap or do not cover V(G)")
        if not (_independent(g, cert.left) and _independent(g, cert.right)):
            problems.append("bipartition side is not independent")
        return problems
    if isinstance(cert, Coloring):
        budget = None
        if name == "nice":
            budget = _clique_number(g, full) + 1
        elif "colors" in report.extra:
            budget = int(report.extra["colors"])
        return _validate_coloring(g, cert, full, budget)
    if isinstance(cert, StableSet):
        problems = [] if _independent(g, cert.vertices) else ["stable set is not independent"]
        if _perfect(g, full & ~cert.vertices) is False:
            problems.append("removing the stable set leaves an imperfect graph")
        return problems
    if isinstance(cert, Partition2):
        problems = _validate_partition(g, cert)
        if problems:
            return problems
        if name == "2-perfect":
            for side in (cert.a, cert.b):
                if _perfect(g, side) is False:
                    problems.append(f"side {to_list(side)} is not perfect")
        elif name == "perfectly-divisible":
            if _perfect(g, cert.a) is False:
                problems.append("side A is not perfect")
            if g.n and _clique_number(g, cert.b) >= _clique_number(g, full):
                problems.append("omega(B) is not below omega(G)")
        elif name == "2-divisible":
            top = _clique_number(g, full)
            if _clique_number(g, cert.a) >= top or _clique_number(g, cert.b) >= top:
                problems.append("a side does not lower the clique number")
        return problems
    if isinstance(cert, ImperfectionWitness):
        problems = []
        if cert.subset & ~full:
            problems.append("witness subset out of range")
        elif _clique_number(g, cert.subset) != cert.omega:
            problems.append("witness omega does not match")
        if cert.chi <= cert.omega:
            problems.append("witness does not show chi > omega")
        return problems
    if isinstance(cert, RefutingSubgraph):
        if cert.subset & ~full or not cert.subset:
            return ["refuting subset empty or out of range"]
        if _clique_number(g, cert.subset) != cert.omega:
            return ["refuting subset omega does not match"]
        return []
    return [f"unknown certificate {type(cert).__name__}"]


def clique_size(g: "Graph", s: VertexSet) -> int:
    """Plain-scan clique number, exposed for tests as an oracle."""
    return _clique_number(g, s) if popcount(s) else 0
