"""Isomorph-free generation of colored graphs of bounded order.

Generation is orderly: the color-0 matching is normalized to the pairing
(0,1)(2,3)... (always possible by relabeling), the remaining matchings are
extended color by color, and a partial assignment survives only while it is
the lexicographically least among its relabelings by pairing-preserving
vertex maps.  Prefix minimality is necessary for full minimality, so the
pruning is sound, and each color-preserving isomorphism class has exactly
one minimal labeling, so leaves need no further deduplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterator, Optional

from .colored_graphs import ColoredGraph, canonical_code
from .errors import Disconnected, WrongDimension


@dataclass(frozen=True)
class EnumFilter:
    bipartite_only: bool = False
    contracted_only: bool = False
    connected_only: bool = False
    require_manifold_conditions: bool = False


def necessary_manifold_conditions(g: ColoredGraph) -> tuple[bool, list[dict]]:
    """Check that every 3-colored residue component is a sphere gem.

    For a 5-colored graph this is the classical necessary condition to
    represent a closed 4-manifold: each component of each 4-colored residue
    must be a closed-3-manifold gem, which holds exactly when all of its
    3-colored residue components carry surfaces of Euler characteristic 2.
    A False verdict certifies the graph represents no 4-manifold; True is
    necessary but not sufficient (3-sphere recognition is not attempted).

    Returns (verdict, violations); each violation records the triple, the
    least vertex of the offending component, and the surface characteristic.
    """
    if g.num_colors != 5:
        raise WrongDimension(f"manifold conditions need 5 colors, got {g.num_colors}")
    if not g.is_connected():
        raise Disconnected("manifold conditions need a connected graph")
    violations = []
    for triple in combinations(g.colors, 3):
        pair_comps = {
            pair: g.residue_components(pair) for pair in combinations(triple, 2)
        }
        for comp in g.residue_components(triple):
            members = set(comp)
            cycles = sum(
                1
                for comps in pair_comps.values()
                for pc in comps
                if pc[0] in members
            )
            chi = cycles - len(comp) // 2
            if chi != 2:
                violations.append(
                    {"triple": triple, "component_min": comp[0], "chi": chi}
                )
    return (not violations, violations)


def _involutions(order: int) -> list[tuple[int, ...]]:
    """All fixed-point-free involutions on 0..order-1, lexicographically."""
    out: list[tuple[int, ...]] = []
    row = [-1] * order

    def rec(remaining: list[int]) -> None:
        if not remaining:
            out.append(tuple(row))
            return
        u = remaining[0]
        rest = remaining[1:]
        for k, w in enumerate(rest):
            row[u], row[w] = w, u
            rec(rest[:k] + rest[k + 1:])
            row[u] = row[w] = -1

    rec(list(range(order)))
    return out


def _pairing_preserving_maps(p: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All vertex maps preserving the pairing (0,1)(2,3)..., with inverses.

    These are the relabelings that keep the normalized color-0 matching
    fixed: permute the p pairs and optionally swap inside each pair.
    """
    maps = []
    for tau in permutations(range(p)):
        for bits in range(1 << p):
            sigma = [0] * (2 * p)
            for i in range(p):
                swap = (bits >> i) & 1
                sigma[2 * i] = 2 * tau[i] + swap
                sigma[2 * i + 1] = 2 * tau[i] + 1 - swap
            inv = [0] * (2 * p)
            for v, w in enumerate(sigma):
                inv[w] = v
            maps.append((tuple(sigma), tuple(inv)))
    return maps


def _some_relabeling_smaller(rows, maps) -> bool:
    n = len(rows[0]) if rows else 0
    for sigma, sigma_inv in maps:
        for row in rows:
            verdict = 0
            for v in range(n):
                a = sigma[row[sigma_inv[v]]]
                b = row[v]
                if a != b:
                    verdict = -1 if a < b else 1
                    break
            if verdict:
                break
        if verdict < 0:
            return True
    return False


def _passes(g: ColoredGraph, filt: EnumFilter) -> bool:
    if filt.connected_only and not g.is_connected():
        return False
    if filt.contracted_only and not g.is_contracted():
        return False
    if filt.bipartite_only and not g.is_bipartite():
        return False
    if filt.require_manifold_conditions:
        if not g.is_connected():
            return False
        ok, _ = necessary_manifold_conditions(g)
        if not ok:
            return False
    return True


def enumerate_graphs(
    colors: int,
    max_order: int,
    filt: EnumFilter = EnumFilter(),
    progress: Optional[Callable[[int, int], None]] = None,
) -> Iterator[ColoredGraph]:
    """One representative per color-preserving isomorphism class, for every
    even order up to ``max_order``, filtered; within each order the output
    is sorted by canonical code.

    ``progress``, if given, is called as progress(order, found_so_far) after
    each order completes.
    """
    if colors < 3:
        raise WrongDimension(f"enumeration needs at least 3 colors, got {colors}")
    if max_order < 2 or max_order % 2 != 0:
        raise WrongDimension(f"max_order must be even and >= 2, got {max_order}")
    if filt.require_manifold_conditions and colors != 5:
        raise WrongDimension("manifold conditions only apply to 5 colors")

    total = 0
    for order in range(2, max_order + 1, 2):
        batch = []
        m0 = tuple(v ^ 1 for v in range(order))
        maps = _pairing_preserving_maps(order // 2)
        candidates = _involutions(order)
        rows: list[tuple[int, ...]] = []

        def extend() -> None:
            if len(rows) == colors - 1:
                g = ColoredGraph([m0, *rows])
                if _passes(g, filt):
                    batch.append(g)
                return
            for cand in candidates:
                rows.append(cand)
                if not _some_relabeling_smaller(rows, maps):
                    extend()
                rows.pop()

        extend()
        batch.sort(key=canonical_code)
        total += len(batch)
        if progress is not None:
            progress(order, total)
        yield from batch


def survey(
    colors: int,
    max_order: int,
    filt: EnumFilter = EnumFilter(),
    workers: int = 1,
) -> list[dict]:
    """Tabulate enumerated graphs grouped by (order, chi, genus, type).

    Connectivity is forced into the filter, since the grouped invariants
    are only defined for connected graphs.  Rows are sorted by group key;
    half-integer genera are rendered as strings.
    """
    from .reports import compute_invariants

    filt = EnumFilter(
        bipartite_only=filt.bipartite_only,
        contracted_only=filt.contracted_only,
        connected_only=True,
        require_manifold_conditions=filt.require_manifold_conditions,
    )
    graphs = list(enumerate_graphs(colors, max_order, filt))
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(compute_invariants, graphs))
    else:
        reports = [compute_invariants(g) for g in graphs]

    groups: dict[tuple, int] = {}
    for rep in reports:
        key = (
            rep.order,
            rep.chi,
            str(rep.rho),
            -1 if rep.semisimple_candidate is None else rep.semisimple_candidate,
        )
        groups[key] = groups.get(key, 0) + 1
    rows = []
    for (order, chi, rho, sstype) in sorted(groups):
        rows.append({
            "order": order,
            "chi": chi,
            "rho": rho,
            "type": None if sstype == -1 else sstype,
            "count": groups[(order, chi, rho, sstype)],
        })
    return rows
