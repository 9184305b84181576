"""Properly edge-colored regular multigraphs stored as perfect matchings.

A graph with colors 0..d on an even vertex set 0..2p-1 is kept as d+1
fixed-point-free involutions: ``matchings[c][v]`` is the vertex joined to
``v`` by the edge of color ``c``.  Regularity of degree d+1 together with a
proper edge coloring is exactly this data; multiple edges between a vertex
pair are allowed (distinguished by color) while loops are not.

Graphs are immutable after construction, so every operation here is pure and
safe to share across threads.
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .errors import (
    ColorCountMismatch,
    FormatError,
    InvalidColor,
    InvalidVertex,
    LoopEdge,
    NotInvolution,
    OddOrder,
)

ColorSubset = frozenset  # subsets of the color set are plain frozensets


class ColoredGraph:
    """A (d+1)-regular properly edge-colored multigraph on an even vertex set."""

    __slots__ = ("_matchings",)

    def __init__(self, matchings: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in matchings)
        if len(rows) < 2:
            raise ColorCountMismatch(
                f"need at least 2 colors, got {len(rows)}"
            )
        order = len(rows[0])
        if order == 0 or order % 2 != 0:
            raise OddOrder(f"vertex count must be even and positive, got {order}")
        for c, row in enumerate(rows):
            if len(row) != order:
                raise NotInvolution(
                    f"matching {c} pairs {len(row)} vertices, expected {order}"
                )
            for v, w in enumerate(row):
                if not 0 <= w < order:
                    raise NotInvolution(
                        f"matching {c} sends vertex {v} to {w}, outside 0..{order - 1}"
                    )
                if w == v:
                    raise LoopEdge(f"matching {c} fixes vertex {v}")
                if row[w] != v:
                    raise NotInvolution(
                        f"matching {c} is not an involution at vertex {v}"
                    )
        self._matchings = rows

    # -- basic structure ---------------------------------------------------

    @property
    def matchings(self) -> tuple[tuple[int, ...], ...]:
        return self._matchings

    @property
    def num_colors(self) -> int:
        return len(self._matchings)

    @property
    def degree(self) -> int:
        """The dimension d; colors run over 0..d."""
        return len(self._matchings) - 1

    @property
    def order(self) -> int:
        return len(self._matchings[0])

    @property
    def colors(self) -> range:
        return range(self.num_colors)

    def neighbor(self, color: int, vertex: int) -> int:
        return self._matchings[color][vertex]

    def pairs(self, color: int) -> tuple[tuple[int, int], ...]:
        """The edges of one color as sorted (u, v) pairs, u < v."""
        row = self._matchings[self._check_color(color)]
        return tuple((v, w) for v, w in enumerate(row) if v < w)

    def _check_color(self, c: int) -> int:
        if not 0 <= c < self.num_colors:
            raise InvalidColor(f"color {c} outside 0..{self.degree}")
        return c

    def _check_vertex(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise InvalidVertex(f"vertex {v} outside 0..{self.order - 1}")
        return v

    def _check_subset(self, colors: Iterable[int]) -> tuple[int, ...]:
        subset = sorted(set(colors))
        for c in subset:
            if not 0 <= c < self.num_colors:
                raise InvalidColor(f"color {c} outside 0..{self.degree}")
        return tuple(subset)

    def __eq__(self, other) -> bool:
        return isinstance(other, ColoredGraph) and self._matchings == other._matchings

    def __hash__(self) -> int:
        return hash(self._matchings)

    def __repr__(self) -> str:
        return f"ColoredGraph(colors={self.num_colors}, order={self.order})"

    # -- residues and components -------------------------------------------

    def residue_components(self, colors: Iterable[int]) -> tuple[tuple[int, ...], ...]:
        """Connected components of the subgraph with edge colors restricted
        to ``colors``, as sorted vertex tuples ordered by least vertex.

        The empty subset yields one singleton component per vertex.
        """
        subset = self._check_subset(colors)
        rows = [self._matchings[c] for c in subset]
        seen = [False] * self.order
        comps = []
        for start in range(self.order):
            if seen[start]:
                continue
            seen[start] = True
            stack = [start]
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for row in rows:
                    w = row[v]
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def g_count(self, colors: Iterable[int]) -> int:
        """Number of connected components of the ``colors`` residue."""
        return len(self.residue_components(colors))

    def is_connected(self) -> bool:
        return self.g_count(self.colors) == 1

    def is_contracted(self) -> bool:
        """True when dropping any single color leaves a connected residue."""
        all_colors = set(self.colors)
        return all(
            self.g_count(all_colors - {c}) == 1 for c in self.colors
        )

    def bipartition(self) -> Optional[tuple[int, ...]]:
        """A proper 2-coloring of the vertices, or None if there is none.

        In each component the class of the least vertex is 0.
        """
        side = [-1] * self.order
        for start in range(self.order):
            if side[start] != -1:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for row in self._matchings:
                    w = row[v]
                    if side[w] == -1:
                        side[w] = 1 - side[v]
                        stack.append(w)
                    elif side[w] == side[v]:
                        return None
        return tuple(side)

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    # -- connected sum -------------------------------------------------------

    def connected_sum(self, v1: int, other: "ColoredGraph", v2: int) -> "ColoredGraph":
        """Delete ``v1`` here and ``v2`` in ``other`` and weld the hanging
        same-colored edges.

        The result keeps this graph's vertices (minus ``v1``, renumbered in
        increasing order) followed by ``other``'s (minus ``v2``, shifted).
        Vertex choice matters: two inequivalent sums may exist, so it is
        never defaulted.
        """
        if self.num_colors != other.num_colors:
            raise ColorCountMismatch(
                f"{self.num_colors} vs {other.num_colors} colors"
            )
        self._check_vertex(v1)
        other._check_vertex(v2)

        n1, n2 = self.order, other.order
        map1 = [-1] * n1
        map2 = [-1] * n2
        nxt = 0
        for v in range(n1):
            if v != v1:
                map1[v] = nxt
                nxt += 1
        for v in range(n2):
            if v != v2:
                map2[v] = nxt
                nxt += 1

        out = []
        for c in self.colors:
            row = [-1] * (n1 + n2 - 2)
            a = self._matchings[c][v1]   # hanging end in self
            b = other._matchings[c][v2]  # hanging end in other
            row[map1[a]] = map2[b]
            row[map2[b]] = map1[a]
            for v in range(n1):
                w = self._matchings[c][v]
                if v != v1 and w != v1:
                    row[map1[v]] = map1[w]
            for v in range(n2):
                w = other._matchings[c][v]
                if v != v2 and w != v2:
                    row[map2[v]] = map2[w]
            out.append(row)
        return ColoredGraph(out)

    # -- vertex invariants used by the isomorphism search --------------------

    def bicolored_cycle_lengths(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the tuple over color pairs {i<j} (in lexicographic
        order) of the length of the {i,j}-colored cycle through it.

        Two involutions generate disjoint cycles of even length, so this is a
        cheap isomorphism invariant of the vertex.
        """
        per_vertex: list[list[int]] = [[] for _ in range(self.order)]
        for i, j in combinations(self.colors, 2):
            ri, rj = self._matchings[i], self._matchings[j]
            length = [0] * self.order
            for start in range(self.order):
                if length[start]:
                    continue
                members = []
                v = start
                while True:
                    members.append(v)
                    w = ri[v]
                    members.append(w)
                    v = rj[w]
                    if v == start:
                        break
                for m in members:
                    length[m] = len(members)
            for v in range(self.order):
                per_vertex[v].append(length[v])
        return tuple(tuple(inv) for inv in per_vertex)


def validate(raw) -> ColoredGraph:
    """Build a validated graph from a raw description.

    Accepts an existing graph (returned as is), a parsed JSON dict in the
    file format, a compact one-line string, or a sequence of involution rows.
    """
    if isinstance(raw, ColoredGraph):
        return raw
    if isinstance(raw, dict):
        return from_json_dict(raw)
    if isinstance(raw, str):
        return from_compact(raw)
    return ColoredGraph(raw)


def from_pairs(order: int, pairs_by_color: Sequence[Iterable[tuple[int, int]]]) -> ColoredGraph:
    """Build a graph from explicit edge lists, one list of (u, v) per color."""
    if order <= 0 or order % 2 != 0:
        raise OddOrder(f"vertex count must be even and positive, got {order}")
    rows = []
    for c, pairs in enumerate(pairs_by_color):
        row = [-1] * order
        for u, v in pairs:
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidVertex(f"edge ({u},{v}) outside 0..{order - 1}")
            if u == v:
                raise LoopEdge(f"matching {c} contains loop at {u}")
            if row[u] != -1 or row[v] != -1:
                raise NotInvolution(f"matching {c} pairs a vertex twice")
            row[u], row[v] = v, u
        if any(x == -1 for x in row):
            missing = [v for v, x in enumerate(row) if x == -1]
            raise NotInvolution(f"matching {c} leaves vertices {missing} unpaired")
        rows.append(row)
    return ColoredGraph(rows)


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def to_json_dict(g: ColoredGraph) -> dict:
    """Canonical JSON form: pairs u<v, sorted lexicographically, by color."""
    return {
        "colors": g.num_colors,
        "order": g.order,
        "matchings": [[[u, v] for u, v in g.pairs(c)] for c in g.colors],
    }


def to_json(g: ColoredGraph) -> str:
    return json.dumps(to_json_dict(g), separators=(",", ":"))


def from_json_dict(obj: dict) -> ColoredGraph:
    try:
        colors = int(obj["colors"])
        order = int(obj["order"])
        matchings = obj["matchings"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed graph object: {exc}") from None
    if len(matchings) != colors:
        raise ColorCountMismatch(
            f"'colors' says {colors} but {len(matchings)} matchings given"
        )
    return from_pairs(order, [[(int(u), int(v)) for u, v in m] for m in matchings])


def from_json(text: str) -> ColoredGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise FormatError("graph JSON must be an object")
    return from_json_dict(obj)


def to_compact(g: ColoredGraph) -> str:
    """One-line form ``d+1;2p;c0:u-v,u-v,...;c1:...``."""
    segs = [str(g.num_colors), str(g.order)]
    for c in g.colors:
        body = ",".join(f"{u}-{v}" for u, v in g.pairs(c))
        segs.append(f"c{c}:{body}")
    return ";".join(segs)


def from_compact(line: str) -> ColoredGraph:
    parts = line.strip().split(";")
    if len(parts) < 3:
        raise FormatError("compact form needs 'colors;order;c0:...' segments")
    try:
        colors = int(parts[0])
        order = int(parts[1])
    except ValueError:
        raise FormatError(f"bad header {parts[:2]!r} in compact form") from None
    if len(parts) - 2 != colors:
        raise ColorCountMismatch(
            f"header says {colors} colors but {len(parts) - 2} segments given"
        )
    pair_lists = []
    for c, seg in enumerate(parts[2:]):
        label, _, body = seg.partition(":")
        if not _:
            raise FormatError(f"segment {seg!r} missing ':'")
        if label not in (f"c{c}", str(c)):
            raise FormatError(f"segment {seg!r} out of order, expected color {c}")
        pairs = []
        if body:
            for token in body.split(","):
                u, _, v = token.partition("-")
                try:
                    pairs.append((int(u), int(v)))
                except ValueError:
                    raise FormatError(f"bad edge token {token!r}") from None
        pair_lists.append(pairs)
    return from_pairs(order, pair_lists)


# ---------------------------------------------------------------------------
# isomorphism and canonical codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsoCertificate:
    """Witness of an isomorphism from graph 1 onto graph 2.

    ``vertex_map[v]`` is the image of vertex v and ``color_map[c]`` the image
    of color c (the identity in color-preserving mode).
    """

    vertex_map: tuple[int, ...]
    color_map: tuple[int, ...]

    def verify(self, g1: ColoredGraph, g2: ColoredGraph) -> bool:
        if sorted(self.vertex_map) != list(range(g1.order)):
            return False
        if sorted(self.color_map) != list(range(g1.num_colors)):
            return False
        if g1.order != g2.order or g1.num_colors != g2.num_colors:
            return False
        vm, cm = self.vertex_map, self.color_map
        return all(
            vm[g1.matchings[c][v]] == g2.matchings[cm[c]][vm[v]]
            for c in g1.colors
            for v in range(g1.order)
        )


def _components_as_lists(g: ColoredGraph) -> list[list[int]]:
    return [list(comp) for comp in g.residue_components(g.colors)]


def _propagate_map(g1: ColoredGraph, g2: ColoredGraph, v0: int, w0: int,
                   mapping: dict[int, int], used: set[int]) -> bool:
    """Extend ``mapping`` by v0 -> w0 and everything that forces.

    In a connected properly colored graph the image of one vertex determines
    the whole color-preserving isomorphism, so this either completes the
    component or exposes a conflict.
    """
    stack = [(v0, w0)]
    while stack:
        v, w = stack.pop()
        prev = mapping.get(v)
        if prev is not None:
            if prev != w:
                return False
            continue
        if w in used:
            return False
        mapping[v] = w
        used.add(w)
        for c in g1.colors:
            stack.append((g1.matchings[c][v], g2.matchings[c][w]))
    return True


def _iso_color_preserving(g1: ColoredGraph, g2: ColoredGraph) -> Optional[tuple[int, ...]]:
    """Vertex bijection g1 -> g2 preserving every color, or None."""
    if g1.order != g2.order or g1.num_colors != g2.num_colors:
        return None
    inv1 = g1.bicolored_cycle_lengths()
    inv2 = g2.bicolored_cycle_lengths()
    if sorted(inv1) != sorted(inv2):
        return None

    comps1 = _components_as_lists(g1)
    comps2 = _components_as_lists(g2)
    if sorted(len(c) for c in comps1) != sorted(len(c) for c in comps2):
        return None

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def place(idx: int) -> bool:
        if idx == len(comps1):
            return True
        comp = comps1[idx]
        # individualize the least vertex in the rarest invariant cell
        counts: dict[tuple[int, ...], int] = {}
        for v in comp:
            counts[inv1[v]] = counts.get(inv1[v], 0) + 1
        v0 = min(comp, key=lambda v: (counts[inv1[v]], v))
        for comp2 in comps2:
            # components are matched atomically, so checking one vertex
            # of comp2 against `used` is enough
            if len(comp2) != len(comp) or comp2[0] in used:
                continue
            for w0 in comp2:
                if inv2[w0] != inv1[v0]:
                    continue
                local: dict[int, int] = {}
                local_used: set[int] = set()
                if _propagate_map(g1, g2, v0, w0, local, local_used):
                    mapping.update(local)
                    used.update(local_used)
                    if place(idx + 1):
                        return True
                    for v in local:
                        del mapping[v]
                    used.difference_update(local_used)
        return False

    if not place(0):
        return None
    return tuple(mapping[v] for v in range(g1.order))


def _recolor(g: ColoredGraph, color_map: Sequence[int]) -> ColoredGraph:
    """Graph whose color ``color_map[c]`` matching is g's color c matching."""
    rows: list[Optional[tuple[int, ...]]] = [None] * g.num_colors
    for c in g.colors:
        rows[color_map[c]] = g.matchings[c]
    return ColoredGraph(rows)  # type: ignore[arg-type]


def _pair_cycle_profile(g: ColoredGraph) -> dict[tuple[int, int], tuple[int, ...]]:
    """Sorted multiset of {i,j}-cycle lengths, per color pair."""
    inv = g.bicolored_cycle_lengths()
    prof = {}
    for k, (i, j) in enumerate(combinations(g.colors, 2)):
        lengths = sorted(inv[v][k] for v in range(g.order))
        prof[(i, j)] = tuple(lengths)
    return prof


def are_isomorphic(g1: ColoredGraph, g2: ColoredGraph,
                   allow_color_permutation: bool = False) -> Optional[IsoCertificate]:
    """Search for an isomorphism and return a verified certificate, or None.

    Color-preserving by default; with the flag set, any permutation of the
    color set may be composed in.
    """
    if g1.order != g2.order or g1.num_colors != g2.num_colors:
        return None
    if not allow_color_permutation:
        vm = _iso_color_preserving(g1, g2)
        if vm is None:
            return None
        cert = IsoCertificate(vm, tuple(g1.colors))
        assert cert.verify(g1, g2)
        return cert

    prof1 = _pair_cycle_profile(g1)
    prof2 = _pair_cycle_profile(g2)
    for perm in permutations(g1.colors):
        ok = all(
            prof1[(i, j)] == prof2[tuple(sorted((perm[i], perm[j])))]
            for i, j in prof1
        )
        if not ok:
            continue
        g2_pulled = _recolor(g2, _inverse_perm(perm))
        vm = _iso_color_preserving(g1, g2_pulled)
        if vm is not None:
            cert = IsoCertificate(vm, tuple(perm))
            assert cert.verify(g1, g2)
            return cert
    return None


def _inverse_perm(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def _component_encoding(g: ColoredGraph, comp: Sequence[int]) -> tuple[int, ...]:
    """Least label-sequence encoding of one component over all start vertices.

    From a fixed start, vertices are labeled in discovery order of a
    traversal that scans colors 0..d from each vertex in label order; the
    encoding lists, vertex by vertex, the labels of its colored neighbors.
    Isomorphic components give equal minima, distinct ones cannot.
    """
    best: Optional[tuple[int, ...]] = None
    rows = g.matchings
    ncol = g.num_colors
    for start in comp:
        label = {start: 0}
        order_list = [start]
        idx = 0
        while idx < len(order_list):
            v = order_list[idx]
            idx += 1
            for c in range(ncol):
                w = rows[c][v]
                if w not in label:
                    label[w] = len(order_list)
                    order_list.append(w)
        enc = tuple(
            label[rows[c][v]] for v in order_list for c in range(ncol)
        )
        if best is None or enc < best:
            best = enc
    assert best is not None
    return best


def _code_sequence(g: ColoredGraph) -> tuple[int, ...]:
    comps = g.residue_components(g.colors)
    encodings = sorted(
        (len(comp), _component_encoding(g, comp)) for comp in comps
    )
    seq: list[int] = [g.num_colors, g.order, len(encodings)]
    for size, enc in encodings:
        seq.append(size)
        seq.extend(enc)
    return tuple(seq)


def canonical_code(g: ColoredGraph, allow_color_permutation: bool = False) -> bytes:
    """A byte string equal for two graphs iff :func:`are_isomorphic` succeeds
    under the same flag; stable across runs and platforms.
    """
    if allow_color_permutation:
        seq = min(
            _code_sequence(_recolor(g, perm))
            for perm in permutations(g.colors)
        )
    else:
        seq = _code_sequence(g)
    return struct.pack(f">{len(seq)}I", *seq)
