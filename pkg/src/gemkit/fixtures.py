"""Built-in graphs of well-known 4-manifolds, with their declared data.

The order-2 sphere gem is canonical; the other four are transcriptions of
published order-10/16/24 crystallizations.  Each fixture carries the Euler
characteristic computed from its graph and the known fundamental-group rank
of the represented manifold; `verify_fixture` re-derives the whole battery
and is run over all fixtures by the test suite, so a mis-transcribed edge
cannot survive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import ManifoldParams, validate_params_for_graph
from .colored_graphs import ColoredGraph, from_pairs
from .errors import GemError, UnknownFixture


@dataclass(frozen=True)
class Fixture:
    key: str
    graph: ColoredGraph
    declared: ManifoldParams
    provenance: str


def _s4() -> ColoredGraph:
    return ColoredGraph([[1, 0]] * 5)


def _s1xs3() -> ColoredGraph:
    return from_pairs(10, [
        [(0, 2), (1, 3), (4, 5), (6, 7), (8, 9)],
        [(0, 1), (2, 4), (3, 5), (6, 7), (8, 9)],
        [(0, 1), (2, 3), (4, 6), (5, 7), (8, 9)],
        [(0, 1), (2, 3), (4, 5), (6, 8), (7, 9)],
        [(0, 9), (1, 8), (2, 3), (4, 5), (6, 7)],
    ])


def _s1_twisted_s3() -> ColoredGraph:
    # same as _s1xs3 except the color-4 long edges close up without the
    # class swap, which kills bipartiteness
    return from_pairs(10, [
        [(0, 2), (1, 3), (4, 5), (6, 7), (8, 9)],
        [(0, 1), (2, 4), (3, 5), (6, 7), (8, 9)],
        [(0, 1), (2, 3), (4, 6), (5, 7), (8, 9)],
        [(0, 1), (2, 3), (4, 5), (6, 8), (7, 9)],
        [(0, 8), (1, 9), (2, 3), (4, 5), (6, 7)],
    ])


def _rp4() -> ColoredGraph:
    return from_pairs(16, [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13), (14, 15)],
        [(0, 8), (1, 9), (2, 10), (3, 11), (4, 12), (5, 13), (6, 14), (7, 15)],
        [(0, 3), (1, 2), (4, 7), (5, 6), (8, 11), (9, 10), (12, 15), (13, 14)],
        [(0, 13), (1, 12), (2, 15), (3, 14), (4, 9), (5, 8), (6, 11), (7, 10)],
        [(0, 7), (1, 6), (2, 5), (3, 4), (8, 15), (9, 14), (10, 13), (11, 12)],
    ])


def _s2xrp2() -> ColoredGraph:
    return from_pairs(24, [
        [(1, 7), (9, 20), (2, 6), (8, 18), (10, 22), (14, 21),
         (0, 4), (3, 11), (5, 17), (13, 16), (12, 19), (15, 23)],
        [(7, 20), (2, 9), (1, 6), (10, 18), (14, 22), (8, 21),
         (4, 11), (0, 3), (13, 17), (5, 16), (15, 19), (12, 23)],
        [(0, 1), (2, 8), (4, 7), (3, 10), (5, 15), (6, 18),
         (11, 22), (16, 23), (14, 20), (9, 21), (12, 19), (13, 17)],
        [(4, 12), (7, 19), (16, 22), (17, 21), (0, 1), (2, 6),
         (3, 9), (15, 20), (11, 23), (8, 18), (5, 14), (10, 13)],
        [(4, 13), (3, 9), (6, 16), (8, 15), (10, 12), (11, 20),
         (18, 23), (19, 21), (14, 22), (1, 5), (7, 17), (0, 2)],
    ])


_BUILDERS = {
    "s4": (
        _s4,
        ManifoldParams(chi=2, rank=0, name="S^4"),
        "the order-2 sphere gem (five parallel edges on two vertices)",
    ),
    "s1xs3": (
        _s1xs3,
        ManifoldParams(chi=0, rank=1, name="S^1 x S^3"),
        "order-10 semi-simple crystallization of the orientable S^3-bundle over S^1",
    ),
    "s1~s3": (
        _s1_twisted_s3,
        ManifoldParams(chi=0, rank=1, name="S^1 ~x S^3"),
        "order-10 semi-simple crystallization of the twisted S^3-bundle over S^1",
    ),
    "rp4": (
        _rp4,
        ManifoldParams(chi=1, rank=1, name="RP^4"),
        "the unique order-16 crystallization of real projective 4-space",
    ),
    "s2xrp2": (
        _s2xrp2,
        ManifoldParams(chi=2, rank=1, name="S^2 x RP^2"),
        "order-24 genus-5 crystallization of S^2 x RP^2",
    ),
}

FIXTURE_KEYS: tuple[str, ...] = tuple(_BUILDERS)


def builtin(key: str) -> Fixture:
    """Return a built-in fixture by key; see FIXTURE_KEYS for the choices."""
    try:
        build, declared, provenance = _BUILDERS[key]
    except KeyError:
        raise UnknownFixture(
            f"unknown fixture {key!r}; choices: {', '.join(FIXTURE_KEYS)}"
        ) from None
    return Fixture(key=key, graph=build(), declared=declared, provenance=provenance)


def verify_fixture(fx: Fixture) -> list[str]:
    """Run the transcription battery; returns a list of failure messages.

    Checks validity, contractedness, the manifold necessary conditions,
    declared-vs-computed Euler characteristic and rank bound, plus the
    face-count identities.  An empty list means the fixture is sound.
    """
    from .catalog import necessary_manifold_conditions
    from .complex_invariants import (
        dehn_sommerville_residuals,
        f1_identity_residual,
        face_vector,
    )

    g = fx.graph
    failures = []
    if not g.is_connected():
        failures.append("graph is disconnected")
        return failures
    if not g.is_contracted():
        failures.append("graph is not contracted")
    try:
        validate_params_for_graph(fx.declared, g)
    except GemError as exc:
        failures.append(f"declared data rejected: {exc}")
    ok, problems = necessary_manifold_conditions(g)
    if not ok:
        failures.append(f"manifold conditions fail: {problems[:3]}")
    if dehn_sommerville_residuals(face_vector(g)) != (0, 0, 0):
        failures.append("face-count relations violated")
    if f1_identity_residual(g) != 0:
        failures.append("order identity violated")
    return failures
