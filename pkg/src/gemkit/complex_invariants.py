"""Face counts and derived invariants of the triangulation dual to a graph.

The h-simplices of the associated triangulation labelled by a set of d+1-h
colors biject with the components of the residue on the complementary h
colors, so the whole f-vector is a matter of counting components.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .colored_graphs import ColoredGraph
from .errors import Disconnected, NotContracted, WrongDimension


@dataclass(frozen=True)
class FaceVector:
    """f[h] = number of h-simplices, h = 0..d."""

    f: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.f) - 1

    def alternating_sum(self) -> int:
        return sum((-1) ** h * fh for h, fh in enumerate(self.f))


def face_vector(g: ColoredGraph) -> FaceVector:
    """Face vector of the triangulation associated to a connected graph.

    f[d-h] is the total component count over all h-subsets of colors;
    f[d] is the graph order (one top simplex per vertex).
    """
    if not g.is_connected():
        raise Disconnected("face vector needs a connected graph")
    d = g.degree
    f = [0] * (d + 1)
    for h in range(1, d + 1):
        f[d - h] = sum(g.g_count(b) for b in combinations(g.colors, h))
    f[d] = g.order
    return FaceVector(tuple(f))


def euler_characteristic(g: ColoredGraph) -> int:
    return face_vector(g).alternating_sum()


def dehn_sommerville_residuals(fv: FaceVector, chi: int | None = None) -> tuple[int, int, int]:
    """Defects of the three linear face-count relations that every closed
    4-manifold triangulation satisfies.

    ``chi`` defaults to the alternating sum of ``fv`` itself, which makes
    the first defect vanish identically; pass a declared value to test a
    face vector against an external Euler characteristic.
    """
    if fv.dimension != 4:
        raise WrongDimension(f"relations are 4-dimensional, got dimension {fv.dimension}")
    f0, f1, f2, f3, f4 = fv.f
    if chi is None:
        chi = fv.alternating_sum()
    return (
        f0 - f1 + f2 - f3 + f4 - chi,
        2 * f1 - 3 * f2 + 4 * f3 - 5 * f4,
        2 * f3 - 5 * f4,
    )


def gem_complexity_of_graph(g: ColoredGraph) -> int:
    """order/2 - 1; an upper bound for the complexity of the represented
    manifold, exact when this graph has minimum order."""
    if not g.is_contracted():
        raise NotContracted("gem complexity is defined for contracted graphs")
    return g.order // 2 - 1


def rank_upper_bound(g: ColoredGraph) -> int:
    """Upper bound for the rank of the fundamental group.

    All but one component of the residue missing colors {i, j} map to
    generators, so min over triples of (g_{ijk} - 1) bounds the rank.
    """
    if g.num_colors != 5:
        raise WrongDimension(f"rank bound is defined for 5 colors, got {g.num_colors}")
    if not g.is_contracted():
        raise NotContracted("rank bound is defined for contracted graphs")
    return min(g.g_count(t) for t in combinations(g.colors, 3)) - 1


def f1_identity_residual(g: ColoredGraph) -> int:
    """Defect of  order = 6*chi + 2*f1 - 30.

    Zero for every crystallization of a closed 4-manifold; the identity
    follows from the face-count relations with f0 = 5.
    """
    if g.num_colors != 5:
        raise WrongDimension(f"identity is 4-dimensional, got {g.num_colors} colors")
    if not g.is_contracted():
        raise NotContracted("identity assumes a contracted graph")
    fv = face_vector(g)
    chi = fv.alternating_sum()
    return g.order - (6 * chi + 2 * fv.f[1] - 30)


def pair_counts(g: ColoredGraph) -> dict[tuple[int, int], int]:
    """g_{ij} for every color pair i < j."""
    return {b: g.g_count(b) for b in combinations(g.colors, 2)}


def triple_counts(g: ColoredGraph) -> dict[tuple[int, int, int], int]:
    """g_{ijk} for every color triple i < j < k."""
    return {b: g.g_count(b) for b in combinations(g.colors, 3)}
