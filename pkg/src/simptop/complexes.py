"""Finite simplicial complexes on at most 64 vertices.

A complex is stored as the antichain of its facets; every face query is
answered against the downward closure of that antichain.  Faces are small
integer sets held as single-word bit masks, so subset tests, links and
induced subcomplexes are a handful of machine operations.  All values are
immutable; every operation returns a fresh complex.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

VERTEX_LIMIT = 64

ISO_SEARCH_CAP = 12


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"vertex id must be an integer, got {v!r}")
        if v < 0 or v >= VERTEX_LIMIT:
            raise ValueError(f"vertex cap: id {v} outside 0..{VERTEX_LIMIT - 1}")
        mask |= 1 << v
    return mask


def _bits(mask: int) -> Tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _submasks_nonempty(mask: int) -> Iterator[int]:
    """All non-empty submasks of ``mask``."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


class Face:
    """An abstract simplex: a strictly increasing set of vertex ids < 64."""

    __slots__ = ("_mask",)

    def __init__(self, vertices: Iterable[int]):
        object.__setattr__(self, "_mask", _mask_of(vertices))

    @classmethod
    def from_mask(cls, mask: int) -> "Face":
        f = object.__new__(cls)
        object.__setattr__(f, "_mask", mask)
        return f

    def __setattr__(self, name, value):
        raise AttributeError("Face is immutable")

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def vertices(self) -> Tuple[int, ...]:
        return _bits(self._mask)

    @property
    def dim(self) -> int:
        return self._mask.bit_count() - 1

    def is_empty(self) -> bool:
        return self._mask == 0

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < VERTEX_LIMIT and bool(self._mask >> v & 1)

    def issubset(self, other: "Face") -> bool:
        return self._mask & ~other._mask == 0

    def __le__(self, other: "Face") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "Face") -> bool:
        return self.vertices < other.vertices

    def __or__(self, other: "Face") -> "Face":
        return Face.from_mask(self._mask | other._mask)

    def __and__(self, other: "Face") -> "Face":
        return Face.from_mask(self._mask & other._mask)

    def __sub__(self, other: "Face") -> "Face":
        return Face.from_mask(self._mask & ~other._mask)

    def __eq__(self, other) -> bool:
        return isinstance(other, Face) and self._mask == other._mask

    def __hash__(self) -> int:
        return hash(self._mask)

    def __repr__(self) -> str:
        return "Face(%s)" % ", ".join(map(str, self.vertices))


def _as_mask(face) -> int:
    if isinstance(face, Face):
        return face.mask
    if isinstance(face, int):
        return face
    return _mask_of(face)


def _antichain(masks: Iterable[int]) -> List[int]:
    """Drop every mask contained in another; result sorted by vertex tuple."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: List[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    kept.sort(key=_bits)
    return kept


class SimplicialComplex:
    """A simplicial complex given by its facet antichain.

    The facet list sorted by vertex tuples is the canonical encoding; two
    complexes are equal exactly when those lists coincide.  The empty
    complex exists only as the value of link/complement operations and is
    never produced by :func:`from_facets`.
    """

    def __init__(self, facets: Iterable) -> None:
        masks = [_as_mask(f) for f in facets]
        if any(m == 0 for m in masks):
            raise ValueError("faces of a complex must be non-empty")
        self._facets: Tuple[int, ...] = tuple(_antichain(masks))

    @classmethod
    def _from_facet_masks(cls, masks: Iterable[int]) -> "SimplicialComplex":
        """Trusted constructor: ``masks`` must already form an antichain."""
        k = object.__new__(cls)
        k._facets = tuple(sorted(masks, key=_bits))
        return k

    # -- basic queries ------------------------------------------------

    @property
    def facet_masks(self) -> Tuple[int, ...]:
        return self._facets

    @property
    def facets(self) -> Tuple[Face, ...]:
        return tuple(Face.from_mask(m) for m in self._facets)

    def is_empty(self) -> bool:
        return not self._facets

    @cached_property
    def vertex_mask(self) -> int:
        mask = 0
        for f in self._facets:
            mask |= f
        return mask

    @property
    def vertices(self) -> Tuple[int, ...]:
        return _bits(self.vertex_mask)

    @property
    def vertex_set(self) -> Set[int]:
        return set(self.vertices)

    @cached_property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        if not self._facets:
            return -1
        return max(m.bit_count() for m in self._facets) - 1

    @cached_property
    def _face_set(self) -> Set[int]:
        closure: Set[int] = set()
        for f in self._facets:
            for sub in _submasks_nonempty(f):
                closure.add(sub)
        return closure

    @cached_property
    def _faces_by_dim(self) -> Dict[int, List[int]]:
        grouped: Dict[int, List[int]] = {}
        for m in self._face_set:
            grouped.setdefault(m.bit_count() - 1, []).append(m)
        for q in grouped:
            grouped[q].sort(key=_bits)
        return grouped

    def has_face(self, face) -> bool:
        m = _as_mask(face)
        return any(m & ~f == 0 for f in self._facets)

    def __contains__(self, face) -> bool:
        return self.has_face(face)

    def faces(self, q: int) -> Set[Face]:
        """All q-dimensional faces; empty set when q is out of range."""
        return {Face.from_mask(m) for m in self._faces_by_dim.get(q, ())}

    def face_count(self) -> int:
        return len(self._face_set)

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self._faces_by_dim.get(q, ())) for q in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * n for q, n in enumerate(self.f_vector()))

    # -- derived complexes --------------------------------------------

    def link(self, face) -> "SimplicialComplex":
        m = _as_mask(face)
        if not self.has_face(m):
            raise ValueError("not a face: %r" % (_bits(m),))
        return SimplicialComplex._from_facet_masks(
            f & ~m for f in self._facets if m & ~f == 0 and f != m
        )

    def degree(self, face) -> int:
        return self.link(face).vertex_mask.bit_count()

    def induced(self, vertices) -> "SimplicialComplex":
        u = _as_mask(vertices)
        if u & ~self.vertex_mask:
            raise ValueError(
                "induced subcomplex needs U within the vertex set, extra: %s"
                % (_bits(u & ~self.vertex_mask),)
            )
        return SimplicialComplex._from_facet_masks(
            _antichain(m for f in self._facets if (m := f & u))
        )

    def pure_part(self) -> "SimplicialComplex":
        d = self.dim
        return SimplicialComplex._from_facet_masks(
            f for f in self._facets if f.bit_count() - 1 == d
        )

    def is_pure(self) -> bool:
        d = self.dim
        return all(f.bit_count() - 1 == d for f in self._facets)

    def cone(self, apex: int) -> "SimplicialComplex":
        a = _mask_of([apex])
        if a & self.vertex_mask:
            raise ValueError(f"cone apex {apex} already a vertex")
        return SimplicialComplex._from_facet_masks(f | a for f in self._facets)

    def is_connected(self) -> bool:
        return self.component_count() <= 1

    def component_count(self) -> int:
        remaining = list(self._facets)
        count = 0
        while remaining:
            count += 1
            reach = remaining.pop()
            changed = True
            while changed:
                changed = False
                rest = []
                for f in remaining:
                    if f & reach:
                        reach |= f
                        changed = True
                    else:
                        rest.append(f)
                remaining = rest
        return count

    # -- identity ------------------------------------------------------

    def facet_tuples(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(_bits(f) for f in self._facets)

    def canonical_encoding(self) -> str:
        """Facet list, lex-sorted under the identity labeling."""
        return ", ".join(" ".join(map(str, t)) for t in self.facet_tuples())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex) and self._facets == other._facets
        )

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        if not self._facets:
            return "SimplicialComplex(<empty>)"
        return "SimplicialComplex(%s)" % self.canonical_encoding()


EMPTY_COMPLEX = SimplicialComplex._from_facet_masks(())


def from_facets(faces: Iterable) -> SimplicialComplex:
    """Build a complex from faces; dominated faces are absorbed."""
    faces = list(faces)
    if not faces:
        raise ValueError("empty complex")
    return SimplicialComplex(faces)


def join(k: SimplicialComplex, l: SimplicialComplex) -> SimplicialComplex:
    if k.vertex_mask & l.vertex_mask:
        raise ValueError(
            "join requires disjoint vertex sets, shared: %s"
            % (_bits(k.vertex_mask & l.vertex_mask),)
        )
    return SimplicialComplex._from_facet_masks(
        a | b for a in k.facet_masks for b in l.facet_masks
    )


def standard_sphere(d: int, labels: Optional[Sequence[int]] = None) -> SimplicialComplex:
    """S^d on d+2 vertices: every proper non-empty subset is a face."""
    if d < 0:
        raise ValueError("sphere dimension must be >= 0")
    labels = tuple(range(d + 2)) if labels is None else tuple(labels)
    if len(labels) != d + 2:
        raise ValueError(f"standard {d}-sphere needs {d + 2} labels, got {len(labels)}")
    return SimplicialComplex(itertools.combinations(labels, d + 1))


def standard_ball(d: int, labels: Optional[Sequence[int]] = None) -> SimplicialComplex:
    """The solid d-simplex on d+1 vertices."""
    if d < 0:
        raise ValueError("ball dimension must be >= 0")
    labels = tuple(range(d + 1)) if labels is None else tuple(labels)
    if len(labels) != d + 1:
        raise ValueError(f"standard {d}-ball needs {d + 1} labels, got {len(labels)}")
    return SimplicialComplex([labels])


def cycle(n: int, labels: Optional[Sequence[int]] = None) -> SimplicialComplex:
    """The n-gon S^1_n."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    labels = tuple(range(n)) if labels is None else tuple(labels)
    if len(labels) != n:
        raise ValueError(f"cycle({n}) needs {n} labels")
    return SimplicialComplex(
        [(labels[i], labels[(i + 1) % n]) for i in range(n)]
    )


def relabel(k: SimplicialComplex, mapping: Dict[int, int]) -> SimplicialComplex:
    """Apply a vertex bijection; mapping must cover V(k) injectively."""
    images = [mapping[v] for v in k.vertices]
    if len(set(images)) != len(images):
        raise ValueError("relabeling is not injective")
    return SimplicialComplex._from_facet_masks(
        _antichain(_mask_of(mapping[v] for v in _bits(f)) for f in k.facet_masks)
    )


def _vertex_invariants(k: SimplicialComplex) -> Dict[int, Tuple]:
    return {v: k.link([v]).f_vector() for v in k.vertices}


def are_isomorphic(
    k: SimplicialComplex, l: SimplicialComplex
) -> Optional[Dict[int, int]]:
    """A vertex bijection carrying k onto l, or None.

    Exhaustive backtracking pruned by link f-vectors; capped at 12
    vertices, which covers everything the census and catalog need.
    """
    nk, nl = len(k.vertices), len(l.vertices)
    if max(nk, nl) > ISO_SEARCH_CAP:
        raise ValueError(f"isomorphism search cap: more than {ISO_SEARCH_CAP} vertices")
    if nk != nl or k.f_vector() != l.f_vector():
        return None
    inv_k, inv_l = _vertex_invariants(k), _vertex_invariants(l)
    if sorted(inv_k.values()) != sorted(inv_l.values()):
        return None

    faces_k, faces_l = k._face_set, l._face_set
    # rarest invariant first keeps the branching factor low
    freq: Dict[Tuple, int] = {}
    for t in inv_k.values():
        freq[t] = freq.get(t, 0) + 1
    order = sorted(k.vertices, key=lambda v: (freq[inv_k[v]], v))
    candidates = {
        v: [w for w in l.vertices if inv_l[w] == inv_k[v]] for v in order
    }

    assigned: Dict[int, int] = {}
    used = 0

    def consistent(v: int, w: int) -> bool:
        placed = assigned.keys()
        img = {a: b for a, b in assigned.items()}
        img[v] = w
        count = 0
        for face in faces_k:
            if face >> v & 1 and all(
                (face >> u & 1) == 0 or u == v or u in placed for u in _bits(face)
            ):
                count += 1
                image = 0
                for u in _bits(face):
                    image |= 1 << img[u]
                if image not in faces_l:
                    return False
        # matched face counts force non-faces onto non-faces
        wmask = (1 << w) | sum(1 << assigned[u] for u in placed)
        lcount = sum(1 for face in faces_l if face >> w & 1 and face & ~wmask == 0)
        return count == lcount

    def backtrack(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if used >> w & 1:
                continue
            if consistent(v, w):
                assigned[v] = w
                used |= 1 << w
                if backtrack(i + 1):
                    return True
                del assigned[v]
                used ^= 1 << w
        return False

    if backtrack(0):
        return dict(assigned)
    return None
