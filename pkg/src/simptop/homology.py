"""Simplicial homology with GF(2) coefficients.

Boundary matrices are dense bit rows (Python ints); ranks come from plain
Gaussian elimination.  Everything at catalog scale is at most tens of rows,
so no sparse machinery is warranted.  The zeroth reduced Betti number is
taken from the component count, which sidesteps the empty-face convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .complexes import SimplicialComplex


@dataclass(frozen=True)
class Gf2Matrix:
    """Row-major bit matrix: bit j of row_bits[i] is the (i, j) entry."""

    rows: int
    cols: int
    row_bits: Tuple[int, ...]

    def entry(self, i: int, j: int) -> int:
        return self.row_bits[i] >> j & 1

    def rank(self) -> int:
        return gf2_rank(self.row_bits)

    def mul(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in GF(2) product")
        out = []
        for row in self.row_bits:
            acc = 0
            r = row
            while r:
                low = r & -r
                acc ^= other.row_bits[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return Gf2Matrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.row_bits)


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank of a list of GF(2) vectors packed as ints."""
    pivots: Dict[int, int] = {}
    rank = 0
    for vec in vectors:
        while vec:
            top = vec.bit_length() - 1
            if top in pivots:
                vec ^= pivots[top]
            else:
                pivots[top] = vec
                rank += 1
                break
    return rank


def boundary_matrix(k: SimplicialComplex, q: int) -> Gf2Matrix:
    """The GF(2) boundary map from q-faces to (q-1)-faces.

    Faces are indexed in lexicographic vertex order in both dimensions.
    """
    if q < 1 or q > k.dim:
        raise ValueError(f"boundary matrix needs 1 <= q <= dim, got q={q}")
    low = k._faces_by_dim.get(q - 1, [])
    high = k._faces_by_dim.get(q, [])
    index = {m: i for i, m in enumerate(low)}
    rows = [0] * len(low)
    for j, face in enumerate(high):
        rest = face
        while rest:
            bit = rest & -rest
            rows[index[face ^ bit]] |= 1 << j
            rest ^= bit
    return Gf2Matrix(len(low), len(high), tuple(rows))


def _boundary_ranks(faces_by_dim: Dict[int, List[int]], dim: int) -> List[int]:
    """rank of the q-th boundary map for q = 1..dim, computed column-wise."""
    ranks = []
    for q in range(1, dim + 1):
        low = faces_by_dim.get(q - 1, [])
        high = faces_by_dim.get(q, [])
        index = {m: i for i, m in enumerate(low)}
        cols = []
        for face in high:
            col = 0
            rest = face
            while rest:
                bit = rest & -rest
                col |= 1 << index[face ^ bit]
                rest ^= bit
            cols.append(col)
        ranks.append(gf2_rank(cols))
    return ranks


def reduced_betti(k: SimplicialComplex) -> Tuple[int, ...]:
    """Reduced GF(2) Betti numbers (b0~, ..., bdim~), exact integers."""
    if k.is_empty():
        raise ValueError("reduced_betti needs a non-empty complex")
    dim = k.dim
    fvec = k.f_vector()
    ranks = _boundary_ranks(k._faces_by_dim, dim)
    betti = [k.component_count() - 1]
    for q in range(1, dim + 1):
        kernel = fvec[q] - ranks[q - 1]
        image_above = ranks[q] if q < dim else 0
        betti.append(kernel - image_above)
    return tuple(betti)


def is_z2_acyclic(k: SimplicialComplex) -> bool:
    return all(b == 0 for b in reduced_betti(k))


def is_z2_homology_sphere(k: SimplicialComplex, d: int) -> bool:
    """Reduced GF(2) homology equal to that of the d-sphere."""
    if k.is_empty():
        return False
    betti = reduced_betti(k)
    if d >= len(betti):
        return False
    return all(b == (1 if q == d else 0) for q, b in enumerate(betti))
