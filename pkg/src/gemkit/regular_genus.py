"""Genus of the regular surface embeddings indexed by cyclic color orders.

For a connected graph with colors 0..d and a cyclic ordering e of the colors,
the relevant surface has Euler characteristic

    chi_e = sum over consecutive pairs of e of g_{e_i e_{i+1}}
            + (1 - d) * order / 2,

and genus (half the genus in the non-orientable case) rho_e = 1 - chi_e / 2.
The regular genus of the graph is the minimum of rho_e over the d!/2 cyclic
orderings that are distinct up to rotation and reflection.

rho_e can be a half-integer for non-bipartite graphs, so all values here are
exact :class:`HalfInteger` instances, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from itertools import permutations
from typing import Sequence, Union

from .colored_graphs import ColoredGraph
from .errors import ColorMismatch, Disconnected, NotContracted, WrongDimension


@total_ordering
class HalfInteger:
    """An exact multiple of 1/2, stored as twice its value."""

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        self.twice = int(twice)

    @classmethod
    def from_int(cls, n: int) -> "HalfInteger":
        return cls(2 * n)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def _twice_of(self, other) -> int:
        if isinstance(other, HalfInteger):
            return other.twice
        if isinstance(other, int):
            return 2 * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else self.twice == t

    def __lt__(self, other) -> bool:
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else self.twice < t

    def __hash__(self) -> int:
        return hash(Fraction(self.twice, 2))

    def __add__(self, other) -> "HalfInteger":
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else HalfInteger(self.twice + t)

    __radd__ = __add__

    def __sub__(self, other) -> "HalfInteger":
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else HalfInteger(self.twice - t)

    def __rsub__(self, other) -> "HalfInteger":
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else HalfInteger(t - self.twice)

    def __neg__(self) -> "HalfInteger":
        return HalfInteger(-self.twice)

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInteger({self.twice})"


@dataclass(frozen=True)
class CyclicPermutation:
    """A cyclic ordering of the color set, canonical up to rotation and
    reflection: the smallest color comes first and seq[1] < seq[-1]."""

    seq: tuple[int, ...]

    @classmethod
    def canonical(cls, ordering: Sequence[int]) -> "CyclicPermutation":
        seq = tuple(int(c) for c in ordering)
        if len(set(seq)) != len(seq):
            raise ColorMismatch(f"repeated colors in {seq}")
        k = seq.index(min(seq))
        seq = seq[k:] + seq[:k]
        if len(seq) > 2 and seq[1] > seq[-1]:
            seq = (seq[0],) + tuple(reversed(seq[1:]))
        return cls(seq)

    def consecutive_pairs(self) -> tuple[tuple[int, int], ...]:
        n = len(self.seq)
        return tuple((self.seq[i], self.seq[(i + 1) % n]) for i in range(n))

    def drop_color(self, color: int) -> tuple[int, ...]:
        """The induced cyclic ordering of the remaining colors."""
        if color not in self.seq:
            raise ColorMismatch(f"color {color} not in {self.seq}")
        return tuple(c for c in self.seq if c != color)

    def label(self) -> str:
        return "(" + ",".join(str(c) for c in self.seq) + ")"


EpsilonLike = Union[CyclicPermutation, Sequence[int]]


def cyclic_permutations(d: int) -> list[CyclicPermutation]:
    """All d!/2 cyclic orderings of colors 0..d up to rotation/reflection,
    in lexicographic order of their canonical sequences."""
    if d < 2:
        raise WrongDimension(f"need at least 3 colors, got d={d}")
    out = []
    for rest in permutations(range(1, d + 1)):
        if rest[0] < rest[-1]:
            out.append(CyclicPermutation((0,) + rest))
    return out


def _ordering_of(g: ColoredGraph, e: EpsilonLike) -> tuple[int, ...]:
    seq = tuple(e.seq) if isinstance(e, CyclicPermutation) else tuple(int(c) for c in e)
    if sorted(seq) != list(g.colors):
        raise ColorMismatch(
            f"ordering {seq} is not a permutation of colors 0..{g.degree}"
        )
    return seq


def chi_epsilon(g: ColoredGraph, e: EpsilonLike) -> int:
    """Euler characteristic of the surface attached to the ordering ``e``.

    Any representative of the dihedral class of ``e`` gives the same value,
    since only the set of consecutive pairs enters the sum.
    """
    if not g.is_connected():
        raise Disconnected("chi_epsilon needs a connected graph")
    seq = _ordering_of(g, e)
    n = len(seq)
    total = sum(g.g_count((seq[i], seq[(i + 1) % n])) for i in range(n))
    return total + (1 - g.degree) * g.order // 2


def rho_epsilon(g: ColoredGraph, e: EpsilonLike) -> HalfInteger:
    """Genus contribution 1 - chi_e/2 as an exact half-integer."""
    return HalfInteger(2 - chi_epsilon(g, e))


@dataclass(frozen=True)
class GenusReport:
    """Genus of a graph together with its full per-ordering spread."""

    rho_by_perm: tuple[tuple[CyclicPermutation, HalfInteger], ...]
    rho: HalfInteger
    argmin: tuple[CyclicPermutation, ...]

    def is_constant(self) -> bool:
        return len({r.twice for _, r in self.rho_by_perm}) == 1


def genus_report(g: ColoredGraph) -> GenusReport:
    if not g.is_connected():
        raise Disconnected("regular genus needs a connected graph")
    values = [(e, rho_epsilon(g, e)) for e in cyclic_permutations(g.degree)]
    best = min(r.twice for _, r in values)
    argmin = tuple(e for e, r in values if r.twice == best)
    return GenusReport(tuple(values), HalfInteger(best), argmin)


def regular_genus_of_graph(g: ColoredGraph) -> HalfInteger:
    """Minimum of rho_e over all cyclic orderings of the colors."""
    return genus_report(g).rho


def residue_genus(g: ColoredGraph, i: int, e: EpsilonLike) -> HalfInteger:
    """rho of the 4-colored residue obtained by dropping color ``i``, under
    the ordering induced by ``e``."""
    if g.num_colors != 5:
        raise WrongDimension(f"residue genus is defined for 5 colors, got {g.num_colors}")
    g._check_color(i)
    seq = _ordering_of(g, e)
    sub = tuple(c for c in seq if c != i)
    if g.g_count(sub) != 1:
        raise NotContracted(f"residue without color {i} is disconnected")
    # chi of the residue surface: 4 consecutive pair counts, d = 3
    total = sum(g.g_count((sub[k], sub[(k + 1) % 4])) for k in range(4))
    chi = total - g.order
    return HalfInteger(2 - chi)


def check_genus_relations(g: ColoredGraph, e: EpsilonLike) -> tuple[
    tuple[HalfInteger, ...], tuple[HalfInteger, ...]
]:
    """Defects of the two per-position identities linking pair and triple
    counts to rho and the residue genera.

    For each position i (mod 5) in the ordering e, with rho = rho_e(graph)
    and rho_hat(i) the residue genus dropping color e[i]:

        g_{e[i-1], e[i+1]}         = g_{e[i-1], e[i], e[i+1]} + rho - rho_hat(i)
        g_{e[i-1], e[i+1], e[i+2]} = 1 + rho - rho_hat(i) - rho_hat(i+3)

    Returns the two lists of defects (lhs - rhs); both are all zero on any
    crystallization of a closed 4-manifold.
    """
    if g.num_colors != 5:
        raise WrongDimension(f"genus relations need 5 colors, got {g.num_colors}")
    seq = _ordering_of(g, e)
    rho = rho_epsilon(g, e)
    rho_hat = [residue_genus(g, seq[i], seq) for i in range(5)]
    first = []
    second = []
    for i in range(5):
        lhs1 = g.g_count((seq[(i - 1) % 5], seq[(i + 1) % 5]))
        rhs1 = g.g_count((seq[(i - 1) % 5], seq[i], seq[(i + 1) % 5])) + rho - rho_hat[i]
        first.append(HalfInteger(2 * lhs1) - rhs1)
        lhs2 = g.g_count((seq[(i - 1) % 5], seq[(i + 1) % 5], seq[(i + 2) % 5]))
        rhs2 = 1 + rho - rho_hat[i] - rho_hat[(i + 3) % 5]
        second.append(HalfInteger(2 * lhs2) - rhs2)
    return tuple(first), tuple(second)
