"""
Degree-Two Vertex Removal

If q is a vertex of degree two in G = KB(H), then G - q is again a biclique
graph, and a host H' with KB(H') isomorphic to G - q can be built from H.
H may be assumed twin-free since KB(H) = KB(Tw(H)). For a twin-free H on at
least seven vertices the biclique B behind q falls in one of two families:

Family 1: B = {v} | {w} with N[v] = N[w] = {v, w, x} and the set
    I = N(x) - {v, w} independent. H' removes v and w, adds a copy y of x
    (N(y) = I), a pendant x' on x and a pendant y' on y.

Family 2: B = {b} | {a, c} with N(a) = {b} and N(b) = {a, c}. H' = H - a.

The family-1 host can carry one biclique too many: {x, y} | I is complete
bipartite, and when no other vertex extends it, it is maximal. Linking x'
to y as well turns it into {x, y} | I + {x'}, the image of {x} | I + {v},
and every other biclique through x gains y on x's side. That linked variant
is tried whenever the literal construction does not verify.

Smaller hosts are not covered by the families; there, and whenever both
constructions fail, the result comes from an exhaustive preimage search
instead. Every H' is checked against KB(H) - q by isomorphism before it is
returned.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import ClassVar, Dict, List, Optional, Tuple, Union

from kblab.atlas.canonical import are_isomorphic
from kblab.core.errors import (
    NoFamilyMatchError,
    PreconditionError,
    StalePlanError,
    VerificationError,
)
from kblab.core.graph import (
    Graph,
    add_vertex,
    is_connected,
    is_independent_mask,
    iter_members,
    lowest,
    members,
    remove_vertex,
    remove_vertices,
)
from kblab.lab.lab_constants import (
    CONSTRUCTION_FAMILY,
    CONSTRUCTION_LINKED_COPY,
    CONSTRUCTION_PREIMAGE,
    DEFAULT_PREIMAGE_MAX_N,
    FALLBACK_PREIMAGE_MAX_N,
    FAMILY_GUARANTEE_N,
)
from kblab.lab.preimage import find_preimage
from kblab.structure.bicliques import Biclique, is_biclique, transfer_biclique
from kblab.structure.kb import LabeledKB, biclique_graph
from kblab.structure.twins import is_twin_free, twin_reduce


@dataclass(frozen=True)
class Family1Plan:
    """B = {v} | {w}, both of closed neighborhood {v, w, x}; I = N(x) - {v, w}."""

    family: ClassVar[int] = 1
    v: int
    w: int
    x: int
    independent: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {"family": 1, "v": self.v, "w": self.w, "x": self.x, "I": list(self.independent)}


@dataclass(frozen=True)
class Family2Plan:
    """B = {b} | {a, c} with N(a) = {b} and N(b) = {a, c}."""

    family: ClassVar[int] = 2
    a: int
    b: int
    c: int

    def to_dict(self) -> dict:
        return {"family": 2, "a": self.a, "b": self.b, "c": self.c}


@dataclass(frozen=True)
class FallbackPlan:
    """Marker for a host found by preimage search instead of a construction."""

    family: ClassVar[Optional[int]] = None
    reason: str

    def to_dict(self) -> dict:
        return {"family": None, "fallback": self.reason}


Degree2Plan = Union[Family1Plan, Family2Plan]


@dataclass
class RemovalResult:
    """
    Outcome of remove_degree2.

    Attributes:
        h_prime: Host with KB(h_prime) isomorphic to KB(H) - q
        plan: Family plan applied to Tw(H), or the fallback marker
        verified: Isomorphism check of KB(h_prime) against KB(H) - q
        reduced: Tw(H)
        q_reduced: The KB-vertex of KB(Tw(H)) corresponding to q
        vertex_map: Tw(H) vertex -> h_prime vertex, empty for the fallback
        transcript: Human-readable steps, in order
        construction: "family", "family-linked-copy" or "preimage-search"
        diagnostic: Why the literal family construction was not used, if it was not
    """

    h_prime: Graph
    plan: Union[Family1Plan, Family2Plan, FallbackPlan]
    verified: bool
    reduced: Graph
    q_reduced: int
    vertex_map: Dict[int, int] = field(default_factory=dict)
    transcript: List[str] = field(default_factory=list)
    construction: str = CONSTRUCTION_FAMILY
    diagnostic: Optional[str] = None


# =============================================================================
# CLASSIFICATION
# =============================================================================

def _check_degree2(kb: LabeledKB, q: int) -> None:
    if not 0 <= q < kb.graph.n:
        raise PreconditionError(f"KB-vertex {q} outside 0..{kb.graph.n - 1}")
    if kb.graph.degree(q) != 2:
        raise PreconditionError(f"KB-vertex {q} has degree {kb.graph.degree(q)}, expected 2")


def classify_degree2(h: Graph, kb: LabeledKB, q: int) -> Degree2Plan:
    """
    Match the biclique behind a degree-two KB-vertex against the two families.

    Args:
        h: Connected twin-free host
        kb: Labeled biclique graph of h
        q: KB-vertex of degree 2

    Returns:
        Family1Plan or Family2Plan, validated against h

    Raises:
        PreconditionError: if d(q) != 2 or h has false twins
        NoFamilyMatchError: if neither family matches
    """
    _check_degree2(kb, q)
    if not is_twin_free(h):
        raise PreconditionError("Degree-2 classification needs a twin-free host")

    b = kb.bicliques[q]
    sizes = (b.left.bit_count(), b.right.bit_count())

    if sizes == (1, 1):
        v, w = lowest(b.left), lowest(b.right)
        common = h.closed_mask(v)
        if common == h.closed_mask(w) and common.bit_count() == 3:
            x = lowest(common & ~((1 << v) | (1 << w)))
            rest = h.adj[x] & ~((1 << v) | (1 << w))
            if not rest:
                raise NoFamilyMatchError(f"Family 1 shape at {v}, {w} with empty I (host is a triangle)")
            if is_independent_mask(h, rest):
                plan = Family1Plan(v=min(v, w), w=max(v, w), x=x, independent=members(rest))
                validate_plan(h, kb, q, plan)
                return plan

    if sorted(sizes) == [1, 2]:
        center, pair = (b.left, b.right) if sizes[0] == 1 else (b.right, b.left)
        bv = lowest(center)
        if h.adj[bv] == pair:
            ends = [u for u in iter_members(pair) if h.adj[u] == center]
            if ends:
                a = ends[0]
                c = lowest(pair & ~(1 << a))
                plan = Family2Plan(a=a, b=bv, c=c)
                validate_plan(h, kb, q, plan)
                return plan

    raise NoFamilyMatchError(f"Biclique {b} of KB-vertex {q} matches neither family")


def validate_plan(h: Graph, kb: LabeledKB, q: int, plan: Degree2Plan) -> None:
    """
    Check every structural condition of a plan against the host, field by field.

    Raises:
        StalePlanError: on the first condition that does not hold
    """
    b = kb.bicliques[q] if 0 <= q < len(kb.bicliques) else None
    if kb.host_n != h.n:
        raise StalePlanError(f"KB built for a {kb.host_n}-vertex host, plan applied to {h.n} vertices")
    if not all(0 <= u < h.n for u in _plan_vertices(plan)):
        raise StalePlanError("Plan names a vertex outside the host")

    if isinstance(plan, Family1Plan):
        v, w, x = plan.v, plan.w, plan.x
        if b != Biclique.of(1 << v, 1 << w):
            raise StalePlanError(f"KB-vertex {q} is not the biclique {{{v}}} | {{{w}}}")
        triple = (1 << v) | (1 << w) | (1 << x)
        if h.closed_mask(v) != triple or h.closed_mask(w) != triple:
            raise StalePlanError(f"N[{v}] and N[{w}] are not both {{{v}, {w}, {x}}}")
        rest = h.adj[x] & ~((1 << v) | (1 << w))
        if members(rest) != plan.independent:
            raise StalePlanError(f"I does not equal N({x}) - {{{v}, {w}}}")
        if not rest or not is_independent_mask(h, rest):
            raise StalePlanError(f"I = {plan.independent} is empty or not independent")
        return

    a, bv, c = plan.a, plan.b, plan.c
    if b != Biclique.of(1 << bv, (1 << a) | (1 << c)):
        raise StalePlanError(f"KB-vertex {q} is not the biclique {{{bv}}} | {{{a}, {c}}}")
    if h.adj[a] != 1 << bv:
        raise StalePlanError(f"N({a}) is not {{{bv}}}")
    if h.adj[bv] != (1 << a) | (1 << c):
        raise StalePlanError(f"N({bv}) is not {{{a}, {c}}}")


def _plan_vertices(plan: Degree2Plan) -> Tuple[int, ...]:
    if isinstance(plan, Family1Plan):
        return (plan.v, plan.w, plan.x) + plan.independent
    return plan.a, plan.b, plan.c


def family1_neighbor_bicliques(h: Graph, plan: Family1Plan) -> Tuple[Biclique, Biclique]:
    """The two bicliques that meet B in family 1: {x} | N(x) - {w} and {x} | N(x) - {v}."""
    x_mask = 1 << plan.x
    return (
        Biclique.of(x_mask, h.adj[plan.x] & ~(1 << plan.w)),
        Biclique.of(x_mask, h.adj[plan.x] & ~(1 << plan.v)),
    )


# =============================================================================
# CONSTRUCTION
# =============================================================================

def construct_h_prime(h: Graph, plan: Degree2Plan, kb: Optional[LabeledKB] = None,
                      q: Optional[int] = None, linked_copy: bool = False) -> Tuple[Graph, Dict[int, int]]:
    """
    Build H' from a validated plan.

    Args:
        h: Host the plan was made for
        plan: Family1Plan or Family2Plan
        kb, q: When given, the plan is re-validated against them first
        linked_copy: Family 1 only; make x' adjacent to both x and y

    Returns:
        Tuple of (H', host vertex -> H' vertex for every surviving vertex).
        For family 1, y, x' and y' are the last three vertices of H'.

    Raises:
        StalePlanError: if the plan no longer matches h
        VerificationError: if H' is disconnected
    """
    if kb is not None and q is not None:
        validate_plan(h, kb, q, plan)

    if isinstance(plan, Family2Plan):
        if h.adj[plan.a] != 1 << plan.b:
            raise StalePlanError(f"N({plan.a}) is not {{{plan.b}}}")
        h_prime, mapping = remove_vertex(h, plan.a)
    else:
        rest = h.adj[plan.x] & ~((1 << plan.v) | (1 << plan.w))
        if members(rest) != plan.independent or not rest:
            raise StalePlanError(f"I does not equal N({plan.x}) - {{{plan.v}, {plan.w}}}")
        base, mapping = remove_vertices(h, (plan.v, plan.w))
        x = mapping[plan.x]
        y = base.n
        h_prime = add_vertex(base, [mapping[u] for u in plan.independent])
        h_prime = add_vertex(h_prime, [x, y] if linked_copy else [x])
        h_prime = add_vertex(h_prime, [y])

    if not is_connected(h_prime):
        raise VerificationError("Constructed H' is disconnected")
    return h_prime, mapping


def extra_family1_biclique(h_prime: Graph) -> Optional[Biclique]:
    """
    {x, y} | I when it is a biclique of a literal family-1 H', else None.

    This is the one biclique the literal construction can add on top of the
    images of the bicliques of H - B.
    """
    y = h_prime.n - 3
    x = lowest(h_prime.adj[h_prime.n - 2])
    cand = Biclique.of((1 << x) | (1 << y), h_prime.adj[y] & h_prime.adj[x])
    if not cand.left or not cand.right:
        return None
    return cand if is_biclique(h_prime, cand) else None


# =============================================================================
# REMOVAL WITH VERIFICATION
# =============================================================================

def remove_degree2(h: Graph, q: int, kb: Optional[LabeledKB] = None,
                   store_path: Optional[Union[str, Path]] = None) -> RemovalResult:
    """
    Build a host of KB(H) - q for a degree-two KB-vertex q.

    The family construction is tried first. A family-1 construction that does
    not verify is retried with x' linked to y; if that fails too, or no family
    matches a host below seven vertices, the preimage search takes over and
    the family plan, if any, stays in the result.

    Args:
        h: Connected host graph
        q: Vertex of KB(H) (in the labeling of biclique_graph(h)) with degree 2
        kb: Precomputed biclique_graph(h)
        store_path: SQLite atlas cache for the preimage search

    Returns:
        RemovalResult with verified = True

    Raises:
        PreconditionError: if h is disconnected or d(q) != 2
        NoFamilyMatchError: if a host on 7 or more vertices matches no family
        VerificationError: if no construction verifies and the preimage search
            finds no host
    """
    if h.n < 2 or not is_connected(h):
        raise PreconditionError("Degree-2 removal needs a connected host with n >= 2")
    kb = kb or biclique_graph(h)
    _check_degree2(kb, q)
    target, _ = remove_vertex(kb.graph, q)

    reduction = twin_reduce(h)
    reduced = reduction.graph
    kb_reduced = biclique_graph(reduced)
    q_reduced = kb_reduced.vertex_of(transfer_biclique(kb.bicliques[q], reduction.vertex_map, reduction.kept))
    transcript = [
        f"Tw(H) has {reduced.n} of {h.n} vertices",
        f"KB-vertex {q} of KB(H) is KB-vertex {q_reduced} of KB(Tw(H)): {kb_reduced.bicliques[q_reduced]}",
    ]

    try:
        plan = classify_degree2(reduced, kb_reduced, q_reduced)
    except NoFamilyMatchError as e:
        if reduced.n >= FAMILY_GUARANTEE_N:
            raise
        transcript.append(f"No family match: {e}")
        return _fallback(target, reduced, q_reduced, transcript, FallbackPlan("no family match"),
                         f"no family match: {e}", FALLBACK_PREIMAGE_MAX_N, store_path)

    h_prime, mapping = construct_h_prime(reduced, plan)
    transcript.append(f"Family {plan.family} plan {plan.to_dict()}; H' has {h_prime.n} vertices")
    if are_isomorphic(biclique_graph(h_prime).graph, target):
        transcript.append("KB(H') is isomorphic to KB(H) - q")
        return RemovalResult(h_prime, plan, True, reduced, q_reduced, mapping, transcript)

    diagnostic = f"family {plan.family} H' does not verify"
    if isinstance(plan, Family1Plan):
        extra = extra_family1_biclique(h_prime)
        if extra is not None:
            diagnostic = f"family 1 H' has the extra biclique {extra}"
        transcript.append(f"KB(H') is not isomorphic to KB(H) - q: {diagnostic}")

        h_prime, mapping = construct_h_prime(reduced, plan, linked_copy=True)
        transcript.append("Retrying with x' adjacent to both x and y")
        if are_isomorphic(biclique_graph(h_prime).graph, target):
            transcript.append("KB(H') is isomorphic to KB(H) - q")
            return RemovalResult(h_prime, plan, True, reduced, q_reduced, mapping, transcript,
                                 CONSTRUCTION_LINKED_COPY, diagnostic)
        diagnostic += "; linked copy does not verify either"
        transcript.append("The linked copy does not verify either")
    else:
        transcript.append(f"KB(H') is not isomorphic to KB(H) - q: {diagnostic}")

    cap = FALLBACK_PREIMAGE_MAX_N if reduced.n < FAMILY_GUARANTEE_N else DEFAULT_PREIMAGE_MAX_N
    return _fallback(target, reduced, q_reduced, transcript, plan, diagnostic, cap, store_path)


def _fallback(target: Graph, reduced: Graph, q_reduced: int, transcript: List[str],
              plan: Union[Family1Plan, Family2Plan, FallbackPlan], diagnostic: str, cap: int,
              store_path: Optional[Union[str, Path]]) -> RemovalResult:
    host = find_preimage(target, cap, store_path=store_path)
    if host is None:
        raise VerificationError(
            f"{diagnostic}; no host on at most {cap} vertices has KB isomorphic to KB(H) - q"
        )
    transcript.append(f"Preimage search found a host on {host.n} vertices")
    if not are_isomorphic(biclique_graph(host).graph, target):
        raise VerificationError("Preimage search returned a host that does not re-verify")
    return RemovalResult(host, plan, True, reduced, q_reduced, {}, transcript, CONSTRUCTION_PREIMAGE, diagnostic)
