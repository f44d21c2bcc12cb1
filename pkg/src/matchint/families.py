"""The explicit matching-integral graphs H_k, H'_k and the 7-vertex graph F7.

Labelling: core vertices a=0, b=1, c=2, then the attachment vertices (p, q for
H_k; the pendant p for H'_k), then the independent set R in ascending order.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .graph import (
    Graph,
    cut_vertices,
    delete_vertices,
    new_graph,
    to_graph6,
    vertex_connectivity_at_least,
)
from .matching import matching_polynomial_recurrence
from .polynomial import IntegralityReport, IntPolynomial, extract_integer_zeros

__all__ = [
    "FamilyKind",
    "FamilySpec",
    "FamilyReport",
    "build_Hk",
    "build_Hk_prime",
    "build_F7",
    "build_family",
    "expected_mu",
    "expected_zeros",
    "verify_family",
]


class FamilyKind(str, enum.Enum):
    HK = "hk"
    HK_PRIME = "hkprime"
    F7 = "f7"


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    k: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", FamilyKind(self.kind))
        if self.kind is not FamilyKind.F7 and self.k < 1:
            raise ValueError(f"{self.kind.value} needs k >= 1, got {self.k}")

    @property
    def label(self) -> str:
        if self.kind is FamilyKind.F7:
            return "F7"
        return f"H_{self.k}" if self.kind is FamilyKind.HK else f"H'_{self.k}"


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def build_Hk(k: int) -> Graph:
    """Core {a, b, c} with edge bc, p and q joined to a and b, and k(k+2)
    further vertices each joined to a, b and c."""
    _check_k(k)
    size = k * (k + 2)
    a, b, c, p, q = range(5)
    edges = [(b, c), (p, a), (p, b), (q, a), (q, b)]
    for r in range(5, 5 + size):
        edges += [(r, a), (r, b), (r, c)]
    return new_graph(5 + size, edges)


def build_Hk_prime(k: int) -> Graph:
    """Core {a, b, c} with edge bc, pendant p on a, and k^2 vertices joined to a, b, c."""
    _check_k(k)
    a, b, c, p = range(4)
    edges = [(b, c), (p, a)]
    for r in range(4, 4 + k * k):
        edges += [(r, a), (r, b), (r, c)]
    return new_graph(4 + k * k, edges)


def build_F7() -> Graph:
    # l1=0, l2=1, m1..m3=2..4, r1=5, r2=6
    edges = [(0, 1), (5, 6)]
    for m in (2, 3, 4):
        edges += [(0, m), (1, m), (m, 5), (m, 6)]
    return new_graph(7, edges)


def build_family(spec: FamilySpec) -> Graph:
    if spec.kind is FamilyKind.HK:
        return build_Hk(spec.k)
    if spec.kind is FamilyKind.HK_PRIME:
        return build_Hk_prime(spec.k)
    return build_F7()


def _even_factor(values: list[int]) -> IntPolynomial:
    # prod (x^2 - v^2)
    out = IntPolynomial((1,))
    for v in values:
        out = out * IntPolynomial((-v * v, 0, 1))
    return out


def expected_mu(spec: FamilySpec) -> IntPolynomial:
    """Closed-form matching polynomial for a family member, fully expanded."""
    k = spec.k
    if spec.kind is FamilyKind.HK:
        return IntPolynomial.monomial(1, k * (k + 2) - 1) * _even_factor([k, k + 1, k + 2])
    if spec.kind is FamilyKind.HK_PRIME:
        if k == 1:
            return IntPolynomial.x() * _even_factor([1, 2])
        return IntPolynomial.monomial(1, k * k - 2) * _even_factor([k - 1, k, k + 1])
    return IntPolynomial((0, -36, 0, 49, 0, -14, 0, 1))


def expected_zeros(spec: FamilySpec) -> dict[int, int]:
    """Integer zeros with multiplicity implied by :func:`expected_mu`."""
    k = spec.k
    if spec.kind is FamilyKind.HK:
        zero_mult, vals = k * (k + 2) - 1, [k, k + 1, k + 2]
    elif spec.kind is FamilyKind.HK_PRIME:
        zero_mult, vals = (1, [1, 2]) if k == 1 else (k * k - 2, [k - 1, k, k + 1])
    else:
        zero_mult, vals = 1, [1, 2, 3]
    out: dict[int, int] = {}
    for v in vals:
        for z in (v, -v):
            out[z] = out.get(z, 0) + 1
    out[0] = out.get(0, 0) + zero_mult
    return dict(sorted(out.items()))


@dataclass
class FamilyReport:
    spec: FamilySpec
    graph6: str | None
    n: int
    edge_count: int
    computed_mu: IntPolynomial
    expected_mu: IntPolynomial
    integrality: IntegralityReport
    connectivity_claim: str
    connectivity_claim_holds: bool
    details: dict = field(default_factory=dict)

    @property
    def match(self) -> bool:
        return self.computed_mu == self.expected_mu

    @property
    def ok(self) -> bool:
        return self.match and self.connectivity_claim_holds and self.integrality.integral

    def to_dict(self) -> dict:
        return {
            "family": self.spec.kind.value,
            "k": None if self.spec.kind is FamilyKind.F7 else self.spec.k,
            "label": self.spec.label,
            "graph6": self.graph6,
            "n": self.n,
            "edge_count": self.edge_count,
            "computed_mu": self.computed_mu.to_text(),
            "expected_mu": self.expected_mu.to_text(),
            "match": self.match,
            "integral": self.integrality.integral,
            "zeros": self.integrality.zeros_text(),
            "connectivity_claim": self.connectivity_claim,
            "connectivity_claim_holds": self.connectivity_claim_holds,
            **self.details,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _connectivity_claim(spec: FamilySpec, g: Graph) -> tuple[str, bool, dict]:
    if spec.kind is FamilyKind.HK:
        return "2-connected", vertex_connectivity_at_least(g, 2), {}
    if spec.kind is FamilyKind.F7:
        return "3-connected", vertex_connectivity_at_least(g, 3), {}
    cuts = cut_vertices(g)
    details = {"cut_vertices": cuts}
    if spec.k == 1:
        return "has a cut vertex", bool(cuts), details
    core_3conn = vertex_connectivity_at_least(delete_vertices(g, [3]), 3)
    details["minus_pendant_3_connected"] = core_3conn
    return "has a cut vertex; minus the pendant is 3-connected", bool(cuts) and core_3conn, details


def verify_family(spec: FamilySpec) -> FamilyReport:
    """Build a family member, compute mu(G, x) and compare with the closed form."""
    g = build_family(spec)
    mu = matching_polynomial_recurrence(g)
    claim, holds, details = _connectivity_claim(spec, g)
    return FamilyReport(
        spec=spec,
        graph6=to_graph6(g) if g.n <= 62 else None,
        n=g.n,
        edge_count=g.num_edges,
        computed_mu=mu,
        expected_mu=expected_mu(spec),
        integrality=extract_integer_zeros(mu, max(g.n - 1, 0)),
        connectivity_claim=claim,
        connectivity_claim_holds=holds,
        details=details,
    )
