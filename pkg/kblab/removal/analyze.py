"""
Iterative Degree-Two Stripping

Since removing a degree-two vertex from a biclique graph leaves a biclique
graph, a chain G = G_0, G_1, ..., G_t of degree-two deletions that reaches a
graph violating the P3 containment condition proves that G (and every graph
before the violator) is not a biclique graph. A preimage of G_0 proves the
opposite; a preimage of a later G_i settles nothing about G_0.

The default walk is one greedy chain that always deletes the smallest
degree-two vertex. The exhaustive mode explores every deletion order,
memoised by canonical form.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

from kblab.atlas.atlas_constants import CANONICAL_CAP
from kblab.atlas.canonical import canonical_form
from kblab.core.errors import CapExceededError, PreconditionError, VerificationError
from kblab.core.formats import to_graph6
from kblab.core.graph import Graph, is_connected, remove_vertex
from kblab.lab.lab_constants import (
    DEFAULT_PREIMAGE_MAX_N,
    EXHAUSTIVE_ANALYSIS_CAP,
    VERDICT_INCONCLUSIVE,
    VERDICT_IS_BICLIQUE,
    VERDICT_NOT_BICLIQUE,
)
from kblab.lab.preimage import PreimageIndex, find_preimage, shared_index, verify_preimage
from kblab.structure.conditions import P3Report, check_theorem1, is_induced_p3, p3_contained


@dataclass
class ChainStep:
    """
    One graph of the strip chain.

    Attributes:
        graph: G_i
        removed: Vertex of G_{i-1} deleted to obtain G_i (None for G_0)
        p3: Containment check of G_i
        preimage: Host with KB(host) isomorphic to G_i, when one was found
    """

    graph: Graph
    removed: Optional[int]
    p3: P3Report
    preimage: Optional[Graph] = None

    def to_dict(self) -> dict:
        return {
            "graph6": to_graph6(self.graph),
            "removed": self.removed,
            "p3": self.p3.verdict,
            "witness": list(self.p3.witness) if self.p3.witness else None,
            "preimage": to_graph6(self.preimage) if self.preimage is not None else None,
        }


@dataclass
class AnalysisResult:
    verdict: str
    chain: List[ChainStep] = field(default_factory=list)
    reason: str = ""

    @property
    def certificate(self) -> Optional[ChainStep]:
        """The chain element carrying the certificate of a definite verdict."""
        if self.verdict == VERDICT_NOT_BICLIQUE:
            return self.chain[-1]
        if self.verdict == VERDICT_IS_BICLIQUE:
            return self.chain[0]
        return None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "chain": [step.to_dict() for step in self.chain],
        }


def degree2_vertices(g: Graph) -> List[int]:
    return [v for v in range(g.n) if g.degree(v) == 2]


def _check(g: Graph, removed: Optional[int]) -> ChainStep:
    return ChainStep(graph=g, removed=removed, p3=check_theorem1(g))


def remove_all_degree2_chain(g: Graph) -> List[Graph]:
    """The greedy chain without certificates: delete the smallest degree-two vertex until none is left."""
    chain = [g]
    while True:
        current = chain[-1]
        ds = degree2_vertices(current)
        if not ds:
            return chain
        nxt, _ = remove_vertex(current, ds[0])
        if nxt.n == 0 or not is_connected(nxt):
            return chain
        chain.append(nxt)


def analyze_not_biclique(g: Graph, max_preimage_n: int = DEFAULT_PREIMAGE_MAX_N,
                         exhaustive: bool = False,
                         store_path: Optional[Union[str, Path]] = None) -> AnalysisResult:
    """
    Decide, where the certificates allow, whether g is a biclique graph.

    Args:
        g: Connected graph
        max_preimage_n: Largest host order tried by the preimage search
        exhaustive: Explore every deletion order instead of the greedy chain
        store_path: SQLite atlas cache behind the preimage search

    Returns:
        AnalysisResult with verdict "not-biclique", "is-biclique" or
        "inconclusive" and the chain that supports it

    Raises:
        PreconditionError: if g is empty or disconnected
    """
    if g.n == 0 or not is_connected(g):
        raise PreconditionError("Analysis needs a nonempty connected graph")

    index = shared_index(store_path)
    first = _check(g, None)
    if not first.p3.passed:
        return _verified(AnalysisResult(VERDICT_NOT_BICLIQUE, [first], "P3 violation in G"))
    first.preimage = find_preimage(g, max_preimage_n, index)
    if first.preimage is not None:
        return _verified(AnalysisResult(VERDICT_IS_BICLIQUE, [first], f"preimage on {first.preimage.n} vertices"))

    if exhaustive:
        return _verified(_explore_all(first, max_preimage_n, index))
    return _verified(_greedy(first, max_preimage_n, index))


def _greedy(first: ChainStep, max_preimage_n: int, index: PreimageIndex) -> AnalysisResult:
    chain = [first]
    while True:
        current = chain[-1].graph
        ds = degree2_vertices(current)
        if not ds:
            return AnalysisResult(VERDICT_INCONCLUSIVE, chain, "no degree-2 vertex left")
        q = ds[0]
        nxt, _ = remove_vertex(current, q)
        if nxt.n == 0 or not is_connected(nxt):
            return AnalysisResult(VERDICT_INCONCLUSIVE, chain, f"removing {q} disconnects G_{len(chain) - 1}")
        step = _check(nxt, q)
        chain.append(step)
        if not step.p3.passed:
            return AnalysisResult(VERDICT_NOT_BICLIQUE, chain, f"P3 violation in G_{len(chain) - 1}")
        step.preimage = find_preimage(nxt, max_preimage_n, index)
        if step.preimage is not None:
            return AnalysisResult(
                VERDICT_INCONCLUSIVE, chain, f"G_{len(chain) - 1} is a biclique graph; nothing follows for G"
            )


def _memo_key(g: Graph):
    if g.n <= CANONICAL_CAP:
        return canonical_form(g).key
    return to_graph6(g)


def _explore_all(first: ChainStep, max_preimage_n: int, index: PreimageIndex) -> AnalysisResult:
    """Depth-first search over deletion orders for a chain ending in a P3 violator."""
    if first.graph.n > EXHAUSTIVE_ANALYSIS_CAP:
        raise CapExceededError(f"Exhaustive analysis supports n <= {EXHAUSTIVE_ANALYSIS_CAP}, got {first.graph.n}")
    dead: Dict[object, bool] = {}

    def search(chain: List[ChainStep]) -> Optional[List[ChainStep]]:
        current = chain[-1].graph
        for q in degree2_vertices(current):
            nxt, _ = remove_vertex(current, q)
            if nxt.n == 0 or not is_connected(nxt):
                continue
            key = _memo_key(nxt)
            if key in dead:
                continue
            step = _check(nxt, q)
            if not step.p3.passed:
                return chain + [step]
            if find_preimage(nxt, max_preimage_n, index) is None:
                found = search(chain + [step])
                if found is not None:
                    return found
            dead[key] = True
        return None

    found = search([first])
    if found is not None:
        return AnalysisResult(VERDICT_NOT_BICLIQUE, found, f"P3 violation in G_{len(found) - 1}")
    return AnalysisResult(VERDICT_INCONCLUSIVE, [first], f"no deletion order reaches a P3 violation ({len(dead)} graphs explored)")


def _verified(result: AnalysisResult) -> AnalysisResult:
    """Re-check the certificate of a definite verdict before it leaves the module."""
    cert = result.certificate
    if result.verdict == VERDICT_NOT_BICLIQUE:
        triple = cert.p3.witness
        if not is_induced_p3(cert.graph, triple) or p3_contained(cert.graph, triple) is not None:
            raise VerificationError(f"P3 witness {triple} does not re-verify")
        for before, after in zip(result.chain, result.chain[1:]):
            if before.graph.degree(after.removed) != 2:
                raise VerificationError(f"Chain removed vertex {after.removed} of degree != 2")
    elif result.verdict == VERDICT_IS_BICLIQUE:
        if not verify_preimage(cert.graph, cert.preimage):
            raise VerificationError("Preimage certificate does not re-verify")
    return result
