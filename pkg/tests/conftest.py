"""Shared helpers: random graphs, relabelings, brute-force oracles."""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from gemkit.colored_graphs import ColoredGraph


def rand_involution(rng: random.Random, order: int) -> list[int]:
    verts = list(range(order))
    rng.shuffle(verts)
    row = [0] * order
    for i in range(0, order, 2):
        a, b = verts[i], verts[i + 1]
        row[a], row[b] = b, a
    return row


def rand_graph(rng: random.Random, colors: int, order: int) -> ColoredGraph:
    return ColoredGraph([rand_involution(rng, order) for _ in range(colors)])


def relabel(g: ColoredGraph, sigma) -> ColoredGraph:
    rows = []
    for row in g.matchings:
        new = [0] * g.order
        for v in range(g.order):
            new[sigma[v]] = sigma[row[v]]
        rows.append(new)
    return ColoredGraph(rows)


def brute_force_isomorphic(g1: ColoredGraph, g2: ColoredGraph,
                           allow_color_permutation: bool = False) -> bool:
    """Exhaustive search over all vertex bijections (and color bijections
    when allowed); only usable for tiny graphs."""
    if g1.order != g2.order or g1.num_colors != g2.num_colors:
        return False
    color_perms = (
        permutations(g1.colors) if allow_color_permutation
        else [tuple(g1.colors)]
    )
    for cperm in color_perms:
        for sigma in permutations(range(g1.order)):
            if all(
                sigma[g1.matchings[c][v]] == g2.matchings[cperm[c]][sigma[v]]
                for c in g1.colors
                for v in range(g1.order)
            ):
                return True
    return False


def disjoint_union(g1: ColoredGraph, g2: ColoredGraph) -> ColoredGraph:
    assert g1.num_colors == g2.num_colors
    n1 = g1.order
    rows = []
    for c in g1.colors:
        rows.append(list(g1.matchings[c]) + [w + n1 for w in g2.matchings[c]])
    return ColoredGraph(rows)


def all_involutions(order: int) -> list[tuple[int, ...]]:
    out = []
    row = [-1] * order

    def rec(remaining):
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


def brute_class_representatives(colors: int, order: int) -> dict[bytes, ColoredGraph]:
    """Exhaustive generate-and-dedup oracle: every tuple of fixed-point-free
    involutions, deduplicated by canonical code."""
    from gemkit.colored_graphs import canonical_code

    reps: dict[bytes, ColoredGraph] = {}
    for rows in product(all_involutions(order), repeat=colors):
        g = ColoredGraph(rows)
        reps.setdefault(canonical_code(g), g)
    return reps


def single_edge_swaps(g: ColoredGraph):
    """All graphs obtained by rewiring two same-colored edges."""
    for c in g.colors:
        pairs = g.pairs(c)
        for (a, b), (x, y) in combinations(pairs, 2):
            for (p, q), (r, s) in (((a, x), (b, y)), ((a, y), (b, x))):
                rows = [list(row) for row in g.matchings]
                rows[c][p], rows[c][q] = q, p
                rows[c][r], rows[c][s] = s, r
                yield ColoredGraph(rows)
