"""Simplicial complexes with exact reduced homology ranks.

Complexes are stored by their inclusion-maximal faces.  The void complex
(no faces at all) and the irrelevant complex {emptyset} are distinct
objects: the latter has reduced homology of rank one in dimension -1.

Ranks of boundary maps are computed either over the rationals, by integer
row elimination with cross-multiplication and gcd stripping (no floating
point, no fraction blowup), or over a prime field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

DEFAULT_PRIME = 32003


def _maximalize(faces: Iterable[frozenset]) -> tuple[frozenset, ...]:
    distinct = set(faces)
    kept = [f for f in distinct if not any(f < g for g in distinct)]
    return tuple(sorted(kept, key=lambda f: (len(f), sorted(f))))


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex; faces are frozensets of integer labels."""

    maximal_faces: tuple[frozenset, ...]

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(_maximalize(frozenset(f) for f in faces))

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(())

    @classmethod
    def irrelevant(cls) -> "SimplicialComplex":
        return cls((frozenset(),))

    @property
    def is_void(self) -> bool:
        return not self.maximal_faces

    @property
    def is_irrelevant(self) -> bool:
        return self.maximal_faces == (frozenset(),)

    @property
    def vertices(self) -> tuple[int, ...]:
        out: set[int] = set()
        for f in self.maximal_faces:
            out |= f
        return tuple(sorted(out))

    @property
    def dimension(self) -> int:
        """Top face dimension; -1 for {emptyset}.  Void complex -> ValueError."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.maximal_faces) - 1

    def contains_face(self, face: Iterable[int]) -> bool:
        fs = frozenset(face)
        return any(fs <= m for m in self.maximal_faces)

    def faces(self, dim: int) -> list[tuple[int, ...]]:
        """All faces of the given dimension as sorted vertex tuples."""
        if dim < -1 or self.is_void:
            return []
        if dim == -1:
            return [()]
        size = dim + 1
        out: set[tuple[int, ...]] = set()
        for m in self.maximal_faces:
            if len(m) >= size:
                out.update(itertools.combinations(sorted(m), size))
        return sorted(out)

    def f_vector(self) -> list[int]:
        """Counts (f_{-1}, f_0, ..., f_top); empty list for the void complex."""
        if self.is_void:
            return []
        return [len(self.faces(d)) for d in range(-1, self.dimension + 1)]

    @property
    def is_cone(self) -> bool:
        """True when one vertex lies in every maximal face (contractible)."""
        if self.is_void or self.is_irrelevant:
            return False
        apex_candidates = set(self.maximal_faces[0])
        for m in self.maximal_faces[1:]:
            apex_candidates &= m
            if not apex_candidates:
                return False
        return True

    def restrict(self, vertices: Iterable[int]) -> "SimplicialComplex":
        """Induced subcomplex on a vertex subset (faces contained in it)."""
        w = frozenset(vertices)
        return SimplicialComplex(_maximalize(m & w for m in self.maximal_faces))


def _strip_gcd(row: dict) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def rank_rational(rows: Sequence[dict]) -> int:
    """Rank over the rationals of a sparse integer matrix (rows of col->val).

    Elimination keeps pivot rows free of each other's pivot columns, so
    each reduction strictly shrinks the set of pivot columns in the work
    row.  All arithmetic is integer; rows are gcd-stripped to stay small.
    """
    pivots: dict[int, dict] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while True:
            hit = next((c for c in row if c in pivots), None)
            if hit is None:
                break
            prow = pivots[hit]
            a, b = row[hit], prow[hit]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            new = {}
            for c, v in row.items():
                new[c] = v * ma
            for c, v in prow.items():
                w = new.get(c, 0) - v * mb
                if w:
                    new[c] = w
                elif c in new:
                    del new[c]
            row = new
            _strip_gcd(row)
        if not row:
            continue
        col = min(row, key=lambda c: (abs(row[c]), c))
        # clear the new pivot column from stored rows to keep the invariant
        for pcol in list(pivots):
            prow = pivots[pcol]
            if col in prow:
                a, b = prow[col], row[col]
                g = gcd(a, b)
                ma, mb = b // g, a // g
                new = {c: v * ma for c, v in prow.items()}
                for c, v in row.items():
                    w = new.get(c, 0) - v * mb
                    if w:
                        new[c] = w
                    elif c in new:
                        del new[c]
                _strip_gcd(new)
                pivots[pcol] = new
        pivots[col] = row
    return len(pivots)


def rank_mod_p(rows: Sequence[dict], p: int = DEFAULT_PRIME) -> int:
    """Rank over GF(p) by the same sparse elimination."""
    pivots: dict[int, dict] = {}
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while True:
            hit = next((c for c in row if c in pivots), None)
            if hit is None:
                break
            prow = pivots[hit]
            factor = (row[hit] * pow(prow[hit], -1, p)) % p
            new = dict(row)
            for c, v in prow.items():
                w = (new.get(c, 0) - factor * v) % p
                if w:
                    new[c] = w
                elif c in new:
                    del new[c]
            row = new
        if not row:
            continue
        col = min(row)
        for prow in pivots.values():
            if col in prow:
                factor = (prow[col] * pow(row[col], -1, p)) % p
                for c, v in row.items():
                    w = (prow.get(c, 0) - factor * v) % p
                    if w:
                        prow[c] = w
                    elif c in prow:
                        del prow[c]
        pivots[col] = row
    return len(pivots)


def boundary_rank(
    lower: Sequence[tuple[int, ...]],
    upper: Sequence[tuple[int, ...]],
    field: str = "rational",
    prime: int = DEFAULT_PRIME,
) -> int:
    """Rank of the boundary map from span(upper) to span(lower).

    Faces are sorted vertex tuples; removing position idx carries the sign
    (-1)^idx.  Rows of the sparse matrix are the upper faces.
    """
    if not upper or not lower:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    rows = []
    for face in upper:
        row = {}
        for idx in range(len(face)):
            sub = face[:idx] + face[idx + 1 :]
            row[index[sub]] = 1 if idx % 2 == 0 else -1
        rows.append(row)
    if field == "rational":
        return rank_rational(rows)
    if field == "prime":
        return rank_mod_p(rows, prime)
    raise ValueError(f"unknown field {field!r}")


def homology_ranks(
    c: SimplicialComplex,
    field: str = "rational",
    prime: int = DEFAULT_PRIME,
) -> dict[int, int]:
    """Reduced homology ranks by dimension, from -1 up to dim(c).

    Void complex -> empty dict.  Uses rank H~_d = f_d - rank d_d - rank d_{d+1}
    with the augmentation map to the empty face included.
    """
    if c.is_void:
        return {}
    top = c.dimension
    faces_by_dim = {d: c.faces(d) for d in range(-1, top + 1)}
    faces_by_dim[top + 1] = []
    ranks = {}
    bnd = {}  # d -> rank of boundary from dim d to dim d-1
    for d in range(0, top + 2):
        bnd[d] = boundary_rank(
            faces_by_dim[d - 1], faces_by_dim.get(d, []), field, prime
        )
    for d in range(-1, top + 1):
        ranks[d] = len(faces_by_dim[d]) - bnd.get(d, 0) - bnd.get(d + 1, 0)
    return ranks


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    """Alternating face-count sum starting at the empty face; 0 for void."""
    if c.is_void:
        return 0
    total = 0
    for d, count in enumerate(c.f_vector(), start=-1):
        total += count if d % 2 == 0 else -count
    return total
