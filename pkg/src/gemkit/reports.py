"""One-stop invariant report for a graph, and its JSON rendering.

Fields that need connectivity, contractedness, or five colors are None when
the graph does not qualify, so the report itself never raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bounds import semisimple_type
from .colored_graphs import ColoredGraph
from .complex_invariants import (
    face_vector,
    gem_complexity_of_graph,
    pair_counts,
    rank_upper_bound,
    triple_counts,
)
from .regular_genus import (
    GenusReport,
    HalfInteger,
    cyclic_permutations,
    genus_report,
    residue_genus,
)


@dataclass(frozen=True)
class GemInvariants:
    order: int
    num_colors: int
    bipartite: bool
    connected: bool
    contracted: bool
    g2: dict
    g3: dict
    f: Optional[tuple[int, ...]]
    chi: Optional[int]
    k_graph: Optional[int]
    rank_ub: Optional[int]
    semisimple_candidate: Optional[int]
    genus: Optional[GenusReport]
    residue_rho: Optional[dict]

    @property
    def rho(self) -> Optional[HalfInteger]:
        return None if self.genus is None else self.genus.rho


def compute_invariants(g: ColoredGraph) -> GemInvariants:
    connected = g.is_connected()
    contracted = connected and g.is_contracted()
    fv = face_vector(g) if connected else None
    genus = genus_report(g) if connected else None
    residue = None
    if contracted and g.num_colors == 5:
        residue = {
            i: {
                e.label(): residue_genus(g, i, e)
                for e in cyclic_permutations(g.degree)
            }
            for i in g.colors
        }
    return GemInvariants(
        order=g.order,
        num_colors=g.num_colors,
        bipartite=g.is_bipartite(),
        connected=connected,
        contracted=contracted,
        g2=pair_counts(g),
        g3=triple_counts(g) if g.num_colors >= 3 else {},
        f=None if fv is None else fv.f,
        chi=None if fv is None else fv.alternating_sum(),
        k_graph=gem_complexity_of_graph(g) if contracted else None,
        rank_ub=rank_upper_bound(g) if contracted and g.num_colors == 5 else None,
        semisimple_candidate=(
            semisimple_type(g) if contracted and g.num_colors == 5 else None
        ),
        genus=genus,
        residue_rho=residue,
    )


def _subset_key(subset) -> str:
    return "".join(str(c) for c in subset)


def invariants_to_json(inv: GemInvariants) -> dict:
    """JSON-ready dict; half-integers become strings like "3" or "5/2"."""
    out = {
        "order": inv.order,
        "colors": inv.num_colors,
        "bipartite": inv.bipartite,
        "connected": inv.connected,
        "contracted": inv.contracted,
        "f": None if inv.f is None else list(inv.f),
        "chi": inv.chi,
        "g2": {_subset_key(b): n for b, n in sorted(inv.g2.items())},
        "g3": {_subset_key(b): n for b, n in sorted(inv.g3.items())},
        "k_graph": inv.k_graph,
        "rank_ub": inv.rank_ub,
        "semisimple_candidate": inv.semisimple_candidate,
    }
    if inv.genus is None:
        out.update({"rho": None, "rho_by_perm": None, "argmin": None})
    else:
        out.update(genus_to_json(inv.genus))
    if inv.residue_rho is not None:
        out["residue_rho"] = {
            str(i): {lbl: str(v) for lbl, v in per.items()}
            for i, per in inv.residue_rho.items()
        }
    return out


def genus_to_json(rep: GenusReport) -> dict:
    return {
        "rho_by_perm": {e.label(): str(r) for e, r in rep.rho_by_perm},
        "rho": str(rep.rho),
        "argmin": [e.label() for e in rep.argmin],
    }
