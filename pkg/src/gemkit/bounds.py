"""Lower bounds, semi-simplicity detection, and the exact pair/triple system.

Everything here is exact: integer bound formulas, and rational arithmetic
(:class:`fractions.Fraction`) for the 10x10 linear system relating pair
component counts to triple component counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Optional, Sequence, Union

from .colored_graphs import ColoredGraph
from .complex_invariants import euler_characteristic, rank_upper_bound, triple_counts
from .errors import (
    ChiMismatch,
    InternalInconsistency,
    InvalidGenus,
    NotContracted,
    RankExceedsBound,
    WrongDimension,
)

Rational = Fraction

PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(5), 2))
TRIPLES: tuple[tuple[int, int, int], ...] = tuple(combinations(range(5), 3))

# Row for triple {i,j,k}: ones in the columns of its three sub-pairs.
# Then  A X = B  with X the pair counts and B_t = 2 g_t + order/2.
A_MATRIX: tuple[tuple[int, ...], ...] = tuple(
    tuple(1 if set(pair) <= set(triple) else 0 for pair in PAIRS)
    for triple in TRIPLES
)

_T = Fraction(1, 3)
_S = Fraction(-1, 6)
A_INVERSE: tuple[tuple[Fraction, ...], ...] = (
    (_T, _T, _T, _S, _S, _S, _S, _S, _S, _T),
    (_T, _S, _S, _T, _T, _S, _S, _S, _T, _S),
    (_S, _T, _S, _T, _S, _T, _S, _T, _S, _S),
    (_S, _S, _T, _S, _T, _T, _T, _S, _S, _S),
    (_T, _S, _S, _S, _S, _T, _T, _T, _S, _S),
    (_S, _T, _S, _S, _T, _S, _T, _S, _T, _S),
    (_S, _S, _T, _T, _S, _S, _S, _T, _T, _S),
    (_S, _S, _T, _T, _S, _S, _T, _S, _S, _T),
    (_S, _T, _S, _S, _T, _S, _S, _T, _S, _T),
    (_T, _S, _S, _S, _S, _T, _S, _S, _T, _T),
)


def _invert_exactly(matrix: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    """Inverse by Gauss-Jordan elimination over the rationals."""
    n = len(matrix)
    aug = [
        [Fraction(matrix[r][c]) for c in range(n)]
        + [Fraction(1 if c == r else 0) for c in range(n)]
        for r in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise InternalInconsistency("pair/triple matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = Fraction(1) / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _verify_linear_system() -> None:
    n = len(A_MATRIX)
    for r in range(n):
        for c in range(n):
            entry = sum(A_MATRIX[r][k] * A_INVERSE[k][c] for k in range(n))
            if entry != (1 if r == c else 0):
                raise InternalInconsistency(
                    f"A * A^-1 differs from the identity at ({r},{c})"
                )
    if _invert_exactly(A_MATRIX) != A_INVERSE:
        raise InternalInconsistency(
            "hard-coded inverse disagrees with exact elimination"
        )


# Transcription guard: run once at import, abort on any drift.
_verify_linear_system()


@dataclass(frozen=True)
class ManifoldParams:
    """Topological data declared by the caller: Euler characteristic and
    fundamental-group rank (the rank is not computable from a graph)."""

    chi: int
    rank: int
    name: Optional[str] = None

    def __post_init__(self):
        if self.rank < 0:
            raise InvalidGenus(f"rank must be non-negative, got {self.rank}")


def validate_params_for_graph(params: ManifoldParams, g: ColoredGraph) -> None:
    """Check that declared data is consistent with the graph."""
    chi = euler_characteristic(g)
    if params.chi != chi:
        raise ChiMismatch(f"declared chi={params.chi}, graph has chi={chi}")
    bound = rank_upper_bound(g)
    if params.rank > bound:
        raise RankExceedsBound(
            f"declared rank={params.rank} exceeds graph bound {bound}"
        )


def theorem1_lower_bounds(params: ManifoldParams) -> tuple[int, int]:
    """(complexity bound, genus bound) = (3 chi + 10 m - 6, 2 chi + 5 m - 4)."""
    chi, m = params.chi, params.rank
    return 3 * chi + 10 * m - 6, 2 * chi + 5 * m - 4


def theorem2_equalities(params: ManifoldParams) -> tuple[int, int, Fraction]:
    """Exact values attained when semi-simple crystallizations exist.

    Returns (k, genus, (3*genus + 5m)/2); the rational always equals k,
    and is returned so callers can assert the identity in exact arithmetic.
    """
    k, genus = theorem1_lower_bounds(params)
    return k, genus, Fraction(3 * genus + 5 * params.rank, 2)


def semisimple_type(g: ColoredGraph) -> Optional[int]:
    """The common value minus one of the ten triple counts, or None if they
    are not all equal.

    The graph is a semi-simple crystallization of this type only if the
    value also equals the true rank of the fundamental group, which the
    caller must supply via :class:`ManifoldParams`.
    """
    if g.num_colors != 5:
        raise WrongDimension(f"semi-simplicity needs 5 colors, got {g.num_colors}")
    if not g.is_contracted():
        raise NotContracted("semi-simplicity is defined for contracted graphs")
    values = set(triple_counts(g).values())
    if len(values) != 1:
        return None
    return values.pop() - 1


def is_semisimple(g: ColoredGraph, params: ManifoldParams) -> bool:
    """True iff the triple counts are uniformly params.rank + 1.

    Cross-checked against the order identity order = 6 chi + 20 m - 10,
    which characterizes the same class; a disagreement between the two
    tests means corrupt input data.
    """
    chi = euler_characteristic(g)
    if params.chi != chi:
        raise ChiMismatch(f"declared chi={params.chi}, graph has chi={chi}")
    by_type = semisimple_type(g) == params.rank
    by_order = g.order == 6 * params.chi + 20 * params.rank - 10
    if by_type != by_order:
        raise InternalInconsistency(
            f"type test ({by_type}) and order identity ({by_order}) disagree"
        )
    return by_type


TripleCounts = Union[Mapping[tuple[int, int, int], int], Sequence[int]]


def solve_gij_from_gijk(triple_values: TripleCounts, half_order: int) -> dict[tuple[int, int], Fraction]:
    """Recover the ten pair counts from the ten triple counts by solving the
    exact linear system; entries may be non-integral for inconsistent input.

    ``triple_values`` is a mapping keyed by sorted triples, or a sequence in
    lexicographic triple order; ``half_order`` is #vertices / 2.
    """
    if half_order < 1:
        raise InvalidGenus(f"half_order must be positive, got {half_order}")
    if isinstance(triple_values, Mapping):
        column = [int(triple_values[t]) for t in TRIPLES]
    else:
        column = [int(x) for x in triple_values]
        if len(column) != len(TRIPLES):
            raise WrongDimension(f"need {len(TRIPLES)} triple counts, got {len(column)}")
    b = [2 * x + half_order for x in column]
    return {
        pair: sum(A_INVERSE[r][c] * b[c] for c in range(len(b)))
        for r, pair in enumerate(PAIRS)
    }


# surface factors: T_g orientable of genus g, U_h non-orientable of genus h
def _surface_data(kind: str, genus: int) -> tuple[int, int]:
    """(chi, rank of the fundamental group) of one surface factor."""
    if kind == "T":
        if genus < 0:
            raise InvalidGenus(f"orientable genus must be >= 0, got {genus}")
        return 2 - 2 * genus, 2 * genus
    if kind == "U":
        if genus < 1:
            raise InvalidGenus(f"non-orientable genus must be >= 1, got {genus}")
        return 2 - genus, genus
    raise InvalidGenus(f"unknown surface kind {kind!r}")


_CLOSED_FORMS = {
    "TxT": lambda g, r: (8 * g * r + 2 * g + 2 * r + 4, 12 * g * r + 8 * g + 8 * r + 6),
    "TxU": lambda g, h: (4 * g * h + 2 * g + h + 4, 6 * g * h + 8 * g + 4 * h + 6),
    "UxU": lambda h, k: (2 * h * k + h + k + 4, 3 * h * k + 4 * h + 4 * k + 6),
}


def surface_product_bounds(kind: str, a: int, b: int) -> tuple[int, int]:
    """(genus bound, complexity bound) for a product of two closed surfaces.

    ``kind`` is one of TxT, TxU, UxU; ``a`` and ``b`` are the genera of the
    factors.  Computed through :func:`theorem1_lower_bounds` with the product
    Euler characteristic and the sum of the factor ranks, then checked
    against the closed-form polynomials.
    """
    if kind not in _CLOSED_FORMS:
        raise InvalidGenus(f"kind must be one of {sorted(_CLOSED_FORMS)}, got {kind!r}")
    chi_a, m_a = _surface_data(kind[0], a)
    chi_b, m_b = _surface_data(kind[2], b)
    k_lb, genus_lb = theorem1_lower_bounds(
        ManifoldParams(chi=chi_a * chi_b, rank=m_a + m_b)
    )
    expected = _CLOSED_FORMS[kind](a, b)
    if (genus_lb, k_lb) != expected:
        raise InternalInconsistency(
            f"{kind}({a},{b}): general bounds {(genus_lb, k_lb)} vs closed form {expected}"
        )
    return genus_lb, k_lb


def lens_times_circle_bounds(rank_of_pi1_m3: int) -> tuple[int, int]:
    """(genus bound, complexity bound) for M^3 x S^1 where the 3-manifold has
    finitely generated abelian fundamental group of the given rank."""
    r = int(rank_of_pi1_m3)
    if r < 0:
        raise InvalidGenus(f"rank must be non-negative, got {r}")
    k_lb, genus_lb = theorem1_lower_bounds(ManifoldParams(chi=0, rank=r + 1))
    assert (genus_lb, k_lb) == (5 * r + 1, 10 * r + 4)
    return genus_lb, k_lb
