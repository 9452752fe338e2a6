"""
Induced P3 Containment

A necessary condition for being a biclique graph: every induced P3 must lie
inside an induced diamond or an induced gem. A P3 without such a containment
is a sound certificate that the graph is not a biclique graph.

A diamond around x - y - z is one extra vertex adjacent to all three. A gem
is a 5-set with 7 edges whose universal vertex sees an induced P4 on the
other four; the P3 only has to be a subset of the 5-set.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

from kblab.core.errors import PreconditionError, VerificationError
from kblab.core.graph import Graph, VertexSet, iter_members, mask_of

Triple = Tuple[int, int, int]

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"

KIND_DIAMOND = "diamond"
KIND_GEM = "gem"


@dataclass(frozen=True)
class ContainmentWitness:
    """Extra vertices completing a P3 to an induced diamond (one) or gem (two)."""

    kind: str
    vertices: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


@dataclass
class P3Report:
    """
    Outcome of the containment check.

    Attributes:
        verdict: "pass" or "fail"
        witness: First uncontained P3 for a fail, else None
        containment: P3 -> witness for every contained P3, filled when traced
    """

    verdict: str
    witness: Optional[Triple] = None
    containment: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == VERDICT_PASS

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": list(self.witness) if self.witness else None,
            "containment": [
                {"p3": list(p3), **w.to_dict()} for p3, w in sorted(self.containment.items())
            ],
        }


def induced_p3s(g: Graph) -> List[Triple]:
    """Every induced P3 (x, y, z) with center y and x < z, sorted."""
    triples = []
    for y in range(g.n):
        nbrs = list(iter_members(g.adj[y]))
        for x, z in combinations(nbrs, 2):
            if not g.has_edge(x, z):
                triples.append((x, y, z))
    return sorted(triples)


def is_induced_p3(g: Graph, triple: Triple) -> bool:
    x, y, z = triple
    if len({x, y, z}) != 3 or not all(0 <= v < g.n for v in triple):
        return False
    return g.has_edge(x, y) and g.has_edge(y, z) and not g.has_edge(x, z)


def _induced_edges(g: Graph, mask: VertexSet) -> int:
    return sum((g.adj[v] & mask).bit_count() for v in iter_members(mask)) // 2


def is_induced_diamond(g: Graph, mask: VertexSet) -> bool:
    """Four vertices inducing exactly five edges."""
    return mask.bit_count() == 4 and _induced_edges(g, mask) == 5


def is_induced_gem(g: Graph, mask: VertexSet) -> bool:
    """Five vertices, seven edges, a universal vertex, and an induced P4 on the rest."""
    if mask.bit_count() != 5 or _induced_edges(g, mask) != 7:
        return False
    for u in iter_members(mask):
        rest = mask & ~(1 << u)
        if g.adj[u] & rest != rest:
            continue
        # Four vertices with three edges and degrees (1, 1, 2, 2) form a P4.
        degrees = sorted((g.adj[v] & rest).bit_count() for v in iter_members(rest))
        if degrees == [1, 1, 2, 2]:
            return True
    return False


def verify_witness(g: Graph, triple: Triple, witness: ContainmentWitness) -> bool:
    """Structural re-check of a containment witness."""
    mask = mask_of(triple) | mask_of(witness.vertices)
    if witness.kind == KIND_DIAMOND:
        return len(witness.vertices) == 1 and is_induced_diamond(g, mask)
    if witness.kind == KIND_GEM:
        return len(witness.vertices) == 2 and is_induced_gem(g, mask)
    return False


def p3_contained(g: Graph, triple: Triple) -> Optional[ContainmentWitness]:
    """
    Find a diamond or gem around an induced P3.

    Returns:
        A verified witness, diamond preferred, or None

    Raises:
        PreconditionError: if triple is not an induced P3 of g
        VerificationError: if a found witness fails the structural re-check
    """
    if not is_induced_p3(g, triple):
        raise PreconditionError(f"{triple} is not an induced P3")
    x, y, z = triple
    base = mask_of(triple)

    common = g.adj[x] & g.adj[y] & g.adj[z]
    if common:
        witness = ContainmentWitness(KIND_DIAMOND, ((common & -common).bit_length() - 1,))
    else:
        witness = None
        # Each gem vertex outside the P3 sees at least one of x, y, z.
        touching = (g.adj[x] | g.adj[y] | g.adj[z]) & ~base
        cands = list(iter_members(touching))
        for w1, w2 in combinations(cands, 2):
            if is_induced_gem(g, base | (1 << w1) | (1 << w2)):
                witness = ContainmentWitness(KIND_GEM, (w1, w2))
                break

    if witness is not None and not verify_witness(g, triple, witness):
        raise VerificationError(f"{witness.kind} witness {witness.vertices} for {triple} failed re-verification")
    return witness


def check_theorem1(g: Graph, trace: bool = False) -> P3Report:
    """
    Check that every induced P3 lies in an induced diamond or gem.

    Args:
        g: Graph to check
        trace: Record the witness of every contained P3

    Returns:
        P3Report; a fail carries the first uncontained P3 in sorted order
    """
    report = P3Report(verdict=VERDICT_PASS)
    for triple in induced_p3s(g):
        witness = p3_contained(g, triple)
        if witness is None:
            report.verdict = VERDICT_FAIL
            report.witness = triple
            return report
        if trace:
            report.containment[triple] = witness
    return report


def p3_violations(g: Graph) -> List[Triple]:
    """Every induced P3 with no diamond or gem around it."""
    return [t for t in induced_p3s(g) if p3_contained(g, t) is None]
