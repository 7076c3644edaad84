"""Generalized bistellar moves, their classification, and heuristic flip search.

A move is specified by a (d+2)-set A holding between one and d+1 facets.
Its core is beta = {x in A : A minus x is a facet}; alpha = A \\ beta.  The
move swaps the facets inside A for the (d+1)-subsets of A that were absent.
It is bistellar when beta is not already a face and the link of alpha is
the standard sphere on beta (or alpha is itself a facet); proper when
1 <= dim(alpha) <= d-1.  Singular moves can still be applied; they are
merely flagged, since applying them is exactly how some of the catalog
complexes arise.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .complexes import (
    VERTEX_LIMIT,
    Face,
    SimplicialComplex,
    _as_mask,
    _bits,
    are_isomorphic,
)
from .structure import is_weak_pseudomanifold

BISTELLAR = "bistellar"
PROPER_BISTELLAR = "proper-bistellar"
SINGULAR_BS1 = "singular-bs1"
SINGULAR_BS2 = "singular-bs2"
INVALID = "invalid"

CLASSIFICATIONS = (BISTELLAR, PROPER_BISTELLAR, SINGULAR_BS1, SINGULAR_BS2, INVALID)


@dataclass(frozen=True)
class MoveDescriptor:
    a_set: Face
    alpha: Face
    beta: Face
    i: int
    classification: str

    def is_bistellar(self) -> bool:
        return self.classification in (BISTELLAR, PROPER_BISTELLAR)


@dataclass(frozen=True)
class FlipTrace:
    """A replayable sequence of bistellar moves from start to end."""

    moves: Tuple[MoveDescriptor, ...]
    start: str
    end: str


def _check_admissible(k: SimplicialComplex, a_mask: int) -> Tuple[int, List[int]]:
    """Validate A and return (d, facets of k inside A)."""
    if k.is_empty() or not k.is_pure():
        raise ValueError("bistellar moves need a pure non-empty complex")
    d = k.dim
    if d < 1:
        raise ValueError("bistellar moves need dimension >= 1")
    if a_mask.bit_count() != d + 2:
        raise ValueError(
            f"inadmissible A: needs {d + 2} elements, got {a_mask.bit_count()}"
        )
    inside = [f for f in k.facet_masks if f & ~a_mask == 0]
    if not 1 <= len(inside) <= d + 1:
        raise ValueError(
            f"inadmissible A: contains {len(inside)} facets, needs 1..{d + 1}"
        )
    return d, inside


def core(k: SimplicialComplex, a_set) -> Face:
    """The core of A: members whose removal from A leaves a facet of k."""
    a_mask = _as_mask(a_set)
    _check_admissible(k, a_mask)
    beta = 0
    rest = a_mask
    while rest:
        bit = rest & -rest
        if k.has_face(a_mask ^ bit):
            beta |= bit
        rest ^= bit
    return Face.from_mask(beta)


def apply_generalized_move(k: SimplicialComplex, a_set) -> SimplicialComplex:
    """Facets of k not inside A, plus the (d+1)-subsets of A that were absent."""
    a_mask = _as_mask(a_set)
    d, _ = _check_admissible(k, a_mask)
    kept = [f for f in k.facet_masks if f & ~a_mask]
    added = []
    rest = a_mask
    while rest:
        bit = rest & -rest
        candidate = a_mask ^ bit
        if not k.has_face(candidate):
            added.append(candidate)
        rest ^= bit
    return SimplicialComplex._from_facet_masks(sorted(kept + added, key=_bits))


def classify_move(k: SimplicialComplex, a_set) -> MoveDescriptor:
    """Classify the move at A as (proper) bistellar or singular.

    bs1 asks that the core not already be a face; bs2 that alpha be a facet
    or have link exactly the standard sphere on the core (tested by exact
    vertex-set equality of the computed link).
    """
    a_mask = _as_mask(a_set)
    d, _ = _check_admissible(k, a_mask)
    beta_mask = core(k, a_mask).mask
    alpha_mask = a_mask & ~beta_mask
    i = alpha_mask.bit_count() - 1

    bs1 = not k.has_face(beta_mask)
    if alpha_mask.bit_count() == d + 1:
        bs2 = True
    else:
        bs2 = k.link(alpha_mask).vertex_mask == beta_mask

    if not bs1:
        classification = SINGULAR_BS1
    elif not bs2:
        classification = SINGULAR_BS2
    elif 1 <= i <= d - 1:
        classification = PROPER_BISTELLAR
    else:
        classification = BISTELLAR
    return MoveDescriptor(
        a_set=Face.from_mask(a_mask),
        alpha=Face.from_mask(alpha_mask),
        beta=Face.from_mask(beta_mask),
        i=i,
        classification=classification,
    )


def enumerate_moves(
    k: SimplicialComplex,
    classifications: Optional[Iterable[str]] = None,
    include_expanding: bool = False,
) -> List[MoveDescriptor]:
    """All classified moves over (d+2)-subsets of V(k), in vertex order.

    Moves that star a fresh vertex into a facet enlarge the complex, so
    they are left out unless ``include_expanding`` is set; the fresh vertex
    is the smallest id outside V(k).
    """
    if k.is_empty() or not k.is_pure():
        raise ValueError("enumerate_moves needs a pure non-empty complex")
    wanted = None if classifications is None else set(classifications)
    d = k.dim
    out: List[MoveDescriptor] = []
    verts = k.vertices
    for combo in itertools.combinations(verts, d + 2):
        a_mask = 0
        for v in combo:
            a_mask |= 1 << v
        inside = sum(1 for f in k.facet_masks if f & ~a_mask == 0)
        if not 1 <= inside <= d + 1:
            continue
        move = classify_move(k, a_mask)
        if wanted is None or move.classification in wanted:
            out.append(move)
    if include_expanding:
        fresh = next(v for v in range(VERTEX_LIMIT) if not k.vertex_mask >> v & 1)
        for f in k.facet_masks:
            move = classify_move(k, f | (1 << fresh))
            if wanted is None or move.classification in wanted:
                out.append(move)
    return out


@dataclass(frozen=True)
class FlipSchedule:
    restarts: int = 10
    steps: int = 10_000
    start_temperature: float = 2.0
    cooling: float = 0.999


def _energy(k: SimplicialComplex) -> float:
    degrees = [k.degree([v]) for v in k.vertices]
    return len(k.facet_masks) + sum(d * d for d in degrees) / 10_000.0


def _goal_reached(k: SimplicialComplex, goal) -> bool:
    if goal == "standard-sphere":
        d = k.dim
        return len(k.vertices) == d + 2 and len(k.facet_masks) == d + 2
    kind = goal[0]
    if kind == "facet-count":
        return len(k.facet_masks) <= goal[1]
    if kind == "reach":
        target = goal[1]
        if k.f_vector() != target.f_vector() or len(k.vertices) > 12:
            return False
        return are_isomorphic(k, target) is not None
    raise ValueError(f"unknown flip goal {goal!r}")


def replay_trace(k: SimplicialComplex, trace: FlipTrace) -> SimplicialComplex:
    """Re-apply a trace move by move, failing on any non-bistellar step."""
    if k.canonical_encoding() != trace.start:
        raise ValueError("trace does not start at this complex")
    current = k
    for move in trace.moves:
        check = classify_move(current, move.a_set)
        if not check.is_bistellar():
            raise ValueError(f"trace step is not bistellar: {move}")
        current = apply_generalized_move(current, move.a_set)
    if current.canonical_encoding() != trace.end:
        raise ValueError("trace does not end at its recorded complex")
    return current


def flip_search(
    k: SimplicialComplex,
    goal,
    schedule: Optional[FlipSchedule] = None,
    seed: Optional[int] = None,
    allow_expanding: bool = False,
) -> Optional[FlipTrace]:
    """Simulated-annealing search through bistellar moves.

    Only moves classified bistellar are ever applied, so a returned trace
    replays; failure returns None and proves nothing.  The seed is
    mandatory: every run is reproducible.
    """
    if seed is None:
        raise ValueError("flip_search needs an explicit seed")
    if not is_weak_pseudomanifold(k):
        raise ValueError("flip_search needs a weak pseudomanifold")
    sched = schedule or FlipSchedule()
    start_enc = k.canonical_encoding()
    if _goal_reached(k, goal):
        return FlipTrace((), start_enc, start_enc)

    for restart in range(sched.restarts):
        rng = random.Random(seed * 1_000_003 + restart)
        current = k
        trace: List[MoveDescriptor] = []
        temperature = sched.start_temperature
        energy = _energy(current)
        for _ in range(sched.steps):
            moves = enumerate_moves(
                current,
                (BISTELLAR, PROPER_BISTELLAR),
                include_expanding=allow_expanding,
            )
            if not moves:
                break
            move = rng.choice(moves)
            candidate = apply_generalized_move(current, move.a_set)
            delta = _energy(candidate) - energy
            if delta <= 0 or rng.random() < math.exp(-delta / max(temperature, 1e-9)):
                current = candidate
                energy += delta
                trace.append(move)
                if _goal_reached(current, goal):
                    return FlipTrace(
                        tuple(trace), start_enc, current.canonical_encoding()
                    )
            temperature *= sched.cooling
    return None


def random_bistellar_walk(
    k: SimplicialComplex,
    steps: int,
    seed: int,
    max_vertices: Optional[int] = None,
) -> SimplicialComplex:
    """Apply ``steps`` random bistellar moves (growing only under the cap).

    Every step is a classified-bistellar move, so the result is bistellar
    equivalent to the start; with a sphere as start it stays one.
    """
    rng = random.Random(seed)
    current = k
    for _ in range(steps):
        expanding = (
            max_vertices is None or len(current.vertices) < max_vertices
        ) and len(current.vertices) < VERTEX_LIMIT - 1
        moves = enumerate_moves(
            current, (BISTELLAR, PROPER_BISTELLAR), include_expanding=expanding
        )
        if not moves:
            break
        current = apply_generalized_move(current, rng.choice(moves).a_set)
    return current
