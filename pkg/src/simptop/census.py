"""Brute-force census of small 2-dimensional complexes, plus sampled
verification that small GF(2)-acyclic complexes collapse.

The enumerator is a deficiency-driven backtracker.  A partial complex with
an edge at the wrong parity must eventually fix that edge, and fixing the
smallest deficient edge first gives every final facet set exactly one
generation path: the next triangle is forced to contain that edge (under
the even constraint, branching on a closer bans the smaller closers so the
path stays unique).  When no edge is deficient the state is a finished
complex; it is emitted and then extended by seeding a fresh triangle whose
index exceeds every earlier seed.  Symmetry breaking, when enabled, pins
the first seed to the lexicographically least triangle, which every
isomorphism class can be relabeled to contain.
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
import random
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from . import collapse as collapse_mod
from . import homology
from .complexes import SimplicialComplex, _bits, are_isomorphic

CONSTRAINT_CLOSED = "ridge-degree-exactly-2"
CONSTRAINT_EVEN = "ridge-degree-even"
CONSTRAINT_BOUNDARY = "ridge-degree-in-{1,2}"

CONSTRAINTS = (CONSTRAINT_CLOSED, CONSTRAINT_EVEN, CONSTRAINT_BOUNDARY)

MAX_CENSUS_VERTICES = 7

# Facet inclusion probabilities for the random-complex sampler, tuned once
# so that GF(2)-acyclic hits stay frequent at 7 vertices (roughly 17% of
# 2-dimensional and 48% of 3-dimensional draws).
SAMPLER_P = {2: 0.22, 3: 0.18}


@dataclass(frozen=True)
class CensusSpec:
    n_vertices: int
    constraint: str = CONSTRAINT_CLOSED
    dimension: int = 2
    max_facets: Optional[int] = None
    exact_vertices: bool = False
    reduce_iso: bool = True
    symmetry_breaking: bool = True

    def validated(self) -> "CensusSpec":
        if self.dimension != 2:
            raise ValueError("census supports dimension 2 only")
        if not 4 <= self.n_vertices <= MAX_CENSUS_VERTICES:
            raise ValueError(
                f"census vertex count must be 4..{MAX_CENSUS_VERTICES}"
            )
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"unknown constraint {self.constraint!r}")
        if self.constraint == CONSTRAINT_BOUNDARY and self.n_vertices > 6:
            # no deficiency forcing exists for this constraint, so the
            # include/exclude search space at 7 vertices is not desk-scale
            raise ValueError("boundary-constraint census is capped at 6 vertices")
        cap = math.comb(self.n_vertices, 3)
        if self.max_facets is not None and not 1 <= self.max_facets <= cap:
            raise ValueError("max_facets outside the feasible range")
        return self

    @property
    def facet_cap(self) -> int:
        cap = math.comb(self.n_vertices, 3)
        return cap if self.max_facets is None else min(cap, self.max_facets)


@dataclass
class CensusResult:
    spec: CensusSpec
    representatives: Tuple[SimplicialComplex, ...]
    labeled_per_class: Tuple[int, ...]
    labeled_count: int
    nodes: int
    seconds: float

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    def counts_by_f_vector(self) -> Dict[Tuple[int, ...], int]:
        counts: Dict[Tuple[int, ...], int] = {}
        for rep in self.representatives:
            fv = rep.f_vector()
            counts[fv] = counts.get(fv, 0) + 1
        return counts


class _Tables:
    """Triangle/edge index tables for a fixed vertex pool."""

    def __init__(self, n: int):
        self.n = n
        self.triangles = [
            (1 << a) | (1 << b) | (1 << c)
            for a, b, c in itertools.combinations(range(n), 3)
        ]
        edges = list(itertools.combinations(range(n), 2))
        self.edge_count = len(edges)
        edge_index = {(1 << a) | (1 << b): i for i, (a, b) in enumerate(edges)}
        self.tri_edges: List[Tuple[int, int, int]] = []
        for mask in self.triangles:
            a, b, c = _bits(mask)
            self.tri_edges.append(
                (
                    edge_index[(1 << a) | (1 << b)],
                    edge_index[(1 << a) | (1 << c)],
                    edge_index[(1 << b) | (1 << c)],
                )
            )
        self.edge_tris: List[List[int]] = [[] for _ in edges]
        for t, trio in enumerate(self.tri_edges):
            for e in trio:
                self.edge_tris[e].append(t)
        self.full_mask = (1 << n) - 1


_TABLES: Dict[int, _Tables] = {}


def _tables(n: int) -> _Tables:
    if n not in _TABLES:
        _TABLES[n] = _Tables(n)
    return _TABLES[n]


def _even_cap(n: int) -> int:
    top = n - 2
    return top if top % 2 == 0 else top - 1


@dataclass
class _Frontier:
    chosen: Tuple[int, ...]
    banned: Tuple[int, ...]
    floor: int


class _Enumerator:
    """Deficiency-driven DFS for the closed and even-degree constraints."""

    def __init__(self, spec: CensusSpec, frontier_depth: Optional[int] = None):
        self.spec = spec
        self.tables = _tables(spec.n_vertices)
        self.even = spec.constraint == CONSTRAINT_EVEN
        self.cap = _even_cap(spec.n_vertices) if self.even else 2
        self.max_facets = spec.facet_cap
        self.frontier_depth = frontier_depth
        self.results: List[Tuple[int, ...]] = []
        self.frontier: List[_Frontier] = []
        self.nodes = 0

        t = self.tables
        self.deg = [0] * t.edge_count
        self.chosen: List[int] = []
        self.chosen_flags = [False] * len(t.triangles)
        self.banned = [False] * len(t.triangles)
        self.used_mask = 0

    def _deficient(self, d: int) -> bool:
        return d % 2 == 1 if self.even else d == 1

    def _compatible(self, t: int) -> bool:
        deg = self.deg
        for e in self.tables.tri_edges[t]:
            if deg[e] >= self.cap:
                return False
        return True

    def _emit(self) -> None:
        spec = self.spec
        if not self.chosen:
            return
        if spec.exact_vertices and self.used_mask != self.tables.full_mask:
            return
        self.results.append(
            tuple(sorted(self.tables.triangles[t] for t in self.chosen))
        )

    def _push(self, t: int) -> int:
        self.chosen.append(t)
        self.chosen_flags[t] = True
        old_mask = self.used_mask
        self.used_mask |= self.tables.triangles[t]
        for e in self.tables.tri_edges[t]:
            self.deg[e] += 1
        return old_mask

    def _pop(self, t: int, old_mask: int) -> None:
        self.chosen.pop()
        self.chosen_flags[t] = False
        self.used_mask = old_mask
        for e in self.tables.tri_edges[t]:
            self.deg[e] -= 1

    def run(self, start: Optional[_Frontier] = None) -> None:
        if start is not None:
            for t in start.chosen:
                self._push(t)
            for t in start.banned:
                self.banned[t] = True
            self._walk(start.floor)
            return
        self._walk(-1)

    def _walk(self, floor: int) -> None:
        self.nodes += 1
        if (
            self.frontier_depth is not None
            and len(self.chosen) >= self.frontier_depth
        ):
            self.frontier.append(
                _Frontier(
                    tuple(self.chosen),
                    tuple(i for i, b in enumerate(self.banned) if b),
                    floor,
                )
            )
            return

        deficient = -1
        deficient_total = 0
        for e in range(self.tables.edge_count):
            if self._deficient(self.deg[e]):
                deficient_total += 1
                if deficient == -1:
                    deficient = e

        budget_left = self.max_facets - len(self.chosen)
        if deficient >= 0:
            if (deficient_total + 2) // 3 > budget_left:
                return
            candidates = [
                t
                for t in self.tables.edge_tris[deficient]
                if t > floor
                and not self.chosen_flags[t]
                and not self.banned[t]
                and self._compatible(t)
            ]
            if self.even:
                newly_banned: List[int] = []
                for t in candidates:
                    old_mask = self._push(t)
                    self._walk(floor)
                    self._pop(t, old_mask)
                    self.banned[t] = True
                    newly_banned.append(t)
                for t in newly_banned:
                    self.banned[t] = False
            else:
                for t in candidates:
                    old_mask = self._push(t)
                    self._walk(floor)
                    self._pop(t, old_mask)
            return

        self._emit()
        if budget_left <= 0:
            return
        if self.spec.exact_vertices:
            missing = (self.tables.full_mask & ~self.used_mask).bit_count()
            if (missing + 2) // 3 > budget_left:
                return
        if floor == -1 and self.spec.symmetry_breaking:
            seeds: Sequence[int] = (0,)
        else:
            seeds = range(floor + 1, len(self.tables.triangles))
        for t in seeds:
            if t <= floor or self.banned[t] or self.chosen_flags[t]:
                continue
            if not self._compatible(t):
                continue
            old_mask = self._push(t)
            self._walk(t)
            self._pop(t, old_mask)


class _BoundaryEnumerator:
    """Include/exclude DFS for the ridge-degree-in-{1,2} constraint."""

    def __init__(self, spec: CensusSpec):
        self.spec = spec
        self.tables = _tables(spec.n_vertices)
        self.max_facets = spec.facet_cap
        self.results: List[Tuple[int, ...]] = []
        self.nodes = 0
        self.deg = [0] * self.tables.edge_count
        self.chosen: List[int] = []
        self.used_mask = 0

    def run(self) -> None:
        self._walk(0)

    def _emit(self) -> None:
        if not self.chosen:
            return
        if any(d == 1 for d in self.deg):
            if (
                not self.spec.exact_vertices
                or self.used_mask == self.tables.full_mask
            ):
                self.results.append(
                    tuple(sorted(self.tables.triangles[t] for t in self.chosen))
                )

    def _walk(self, index: int) -> None:
        self.nodes += 1
        if index == len(self.tables.triangles):
            self._emit()
            return
        self._walk(index + 1)
        if len(self.chosen) >= self.max_facets:
            return
        trio = self.tables.tri_edges[index]
        if any(self.deg[e] >= 2 for e in trio):
            return
        self.chosen.append(index)
        old_mask = self.used_mask
        self.used_mask |= self.tables.triangles[index]
        for e in trio:
            self.deg[e] += 1
        self._walk(index + 1)
        for e in trio:
            self.deg[e] -= 1
        self.used_mask = old_mask
        self.chosen.pop()


def _link_invariant(k: SimplicialComplex) -> Tuple:
    return (k.f_vector(), tuple(sorted(k.link([v]).f_vector() for v in k.vertices)))


def _reduce_classes(
    labeled: List[Tuple[int, ...]]
) -> Tuple[List[SimplicialComplex], List[int]]:
    buckets: Dict[Tuple, List[Tuple[SimplicialComplex, int]]] = {}
    for masks in labeled:
        k = SimplicialComplex._from_facet_masks(masks)
        key = _link_invariant(k)
        bucket = buckets.setdefault(key, [])
        for i, (rep, _) in enumerate(bucket):
            if are_isomorphic(rep, k) is not None:
                bucket[i] = (rep, bucket[i][1] + 1)
                break
        else:
            bucket.append((k, 1))
    reps: List[Tuple[SimplicialComplex, int]] = []
    for bucket in buckets.values():
        reps.extend(bucket)
    reps.sort(key=lambda pair: (pair[0].f_vector(), pair[0].facet_tuples()))
    return [r for r, _ in reps], [c for _, c in reps]


def _worker(args) -> Tuple[List[Tuple[int, ...]], int]:
    spec, frontier = args
    walker = _Enumerator(spec)
    walker.run(frontier)
    return walker.results, walker.nodes


def enumerate_census(spec: CensusSpec, workers: int = 1) -> CensusResult:
    """Run the census described by ``spec``.

    The labeled enumeration is exact and duplicate-free; with
    ``reduce_iso`` the result keeps one representative per isomorphism
    class, merged in canonical encoding order independent of worker
    scheduling.
    """
    spec = spec.validated()
    t0 = time.perf_counter()

    if spec.constraint == CONSTRAINT_BOUNDARY:
        walker = _BoundaryEnumerator(spec)
        walker.run()
        labeled, nodes = walker.results, walker.nodes
    elif workers <= 1:
        walker = _Enumerator(spec)
        walker.run()
        labeled, nodes = walker.results, walker.nodes
    else:
        splitter = _Enumerator(spec, frontier_depth=2)
        splitter.run()
        labeled = list(splitter.results)
        nodes = splitter.nodes
        tasks = [(spec, f) for f in splitter.frontier]
        with multiprocessing.Pool(processes=workers) as pool:
            for chunk, chunk_nodes in pool.map(_worker, tasks):
                labeled.extend(chunk)
                nodes += chunk_nodes

    labeled.sort()
    if spec.reduce_iso:
        reps, per_class = _reduce_classes(labeled)
    else:
        reps = [SimplicialComplex._from_facet_masks(m) for m in labeled]
        per_class = [1] * len(reps)
    return CensusResult(
        spec=spec,
        representatives=tuple(reps),
        labeled_per_class=tuple(per_class),
        labeled_count=len(labeled),
        nodes=nodes,
        seconds=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class CatalogMatch:
    mapping: Dict[str, int]
    unexpected: Tuple[int, ...]
    missing: Tuple[str, ...]

    @property
    def perfect(self) -> bool:
        return not self.unexpected and not self.missing


def match_catalog(result: CensusResult, expected_names: Sequence[str]) -> CatalogMatch:
    """Match census classes against named catalog entries by isomorphism."""
    from . import catalog

    mapping: Dict[str, int] = {}
    matched: Set[int] = set()
    missing: List[str] = []
    for name in expected_names:
        target = catalog.get(name).complex
        for i, rep in enumerate(result.representatives):
            if i in matched:
                continue
            if rep.f_vector() == target.f_vector() and are_isomorphic(rep, target):
                mapping[name] = i
                matched.add(i)
                break
        else:
            missing.append(name)
    unexpected = tuple(
        i for i in range(len(result.representatives)) if i not in matched
    )
    return CatalogMatch(mapping, unexpected, tuple(missing))


# f-vectors a minimal non-collapsible acyclic 3-complex on 7 vertices would
# have to carry; the sampler cross-checks any no-free-face hit against them
# (none can exist if every acyclic sample collapses, so the list stays idle)
MINIMAL_3D_COUNTEREXAMPLE_F_VECTORS = (
    (7, 20, 30, 16),
    (7, 21, 32, 17),
    (7, 21, 33, 18),
    (7, 21, 34, 19),
    (7, 21, 35, 20),
)


@dataclass
class CollapsibilitySampleReport:
    samples: int
    seed: int
    nonempty: int
    acyclic_found: int
    collapsible_count: int
    counterexamples: Tuple[str, ...]
    acyclic_without_free_faces: Tuple[str, ...]
    minimal_f_vector_hits: Tuple[Tuple[int, ...], ...]
    chi_failures: int

    @property
    def consistent(self) -> bool:
        return not self.counterexamples and self.chi_failures == 0


def sample_acyclic_collapsibility(
    n_samples: int,
    seed: int,
    n_vertices: int = 7,
    budget: int = 2_000_000,
) -> CollapsibilitySampleReport:
    """Sample random pure complexes; every acyclic one must collapse.

    Each sample draws a dimension in {2, 3} and keeps each candidate facet
    with the calibrated probability for that dimension.  Acyclic samples go
    through the exhaustive collapsibility search; a counterexample list
    that stays empty is the verification.
    """
    if n_samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)
    candidates = {
        d: [
            sum(1 << v for v in combo)
            for combo in itertools.combinations(range(n_vertices), d + 1)
        ]
        for d in (2, 3)
    }
    nonempty = acyclic = collapsible = chi_failures = 0
    counterexamples: List[str] = []
    no_free_faces: List[str] = []
    fvector_hits: List[Tuple[int, ...]] = []
    for _ in range(n_samples):
        d = rng.choice((2, 3))
        p = SAMPLER_P[d]
        facets = [m for m in candidates[d] if rng.random() < p]
        if not facets:
            continue
        nonempty += 1
        k = SimplicialComplex._from_facet_masks(facets)
        if not homology.is_z2_acyclic(k):
            continue
        acyclic += 1
        if k.euler_characteristic() != 1:
            chi_failures += 1
        verdict = collapse_mod.is_collapsible(k, budget)
        if verdict.collapsible:
            collapsible += 1
        else:
            counterexamples.append(k.canonical_encoding())
            if not collapse_mod.free_faces(k) and k.face_count() > 1:
                no_free_faces.append(k.canonical_encoding())
                if k.f_vector() in MINIMAL_3D_COUNTEREXAMPLE_F_VECTORS:
                    fvector_hits.append(k.f_vector())
    return CollapsibilitySampleReport(
        samples=n_samples,
        seed=seed,
        nonempty=nonempty,
        acyclic_found=acyclic,
        collapsible_count=collapsible,
        counterexamples=tuple(counterexamples),
        acyclic_without_free_faces=tuple(no_free_faces),
        minimal_f_vector_hits=tuple(fvector_hits),
        chi_failures=chi_failures,
    )
