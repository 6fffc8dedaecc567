"""Points, point sets and linear algebra in PG(n, q).

A point is stored as a normalized coordinate vector (leftmost nonzero
coordinate equal to 1).  Points are indexed by leading position first and
then lexicographically in the trailing coordinates, so PG(2, 3) starts with
(1,0,0), (1,0,1), ... and ends with (0,0,1).
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple

import numpy as np

from .gf import Field, gf


class Point(NamedTuple):
    coords: tuple[int, ...]
    index: int


class Space:
    """PG(n, q) over a fixed field."""

    def __init__(self, n: int, field: Field):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        self.field = field
        self.q = q = field.q
        self.dim = n + 1
        self.size = (q ** (n + 1) - 1) // (q - 1)
        self.weights = np.array([q ** (n - i) for i in range(n + 1)], dtype=np.int64)
        # offsets[j] = number of points whose leading 1 is left of position j
        self.offsets = np.array([sum(q ** (n - i) for i in range(j)) for j in range(n + 2)], dtype=np.int64)
        self._points = None

    def __eq__(self, other):
        return isinstance(other, Space) and self.n == other.n and self.field is other.field

    def __hash__(self):
        return hash((self.n, self.field.p, self.field.k, self.field.modulus))

    def __repr__(self):
        return f"PG({self.n},{self.q})"

    # -- normalization and indexing -------------------------------------------

    def normalize(self, vecs) -> np.ndarray:
        """Normalize rows; zero rows stay zero."""
        v = np.asarray(vecs, dtype=np.int64)
        nz = v != 0
        lead = np.argmax(nz, axis=-1)
        lv = np.take_along_axis(v, lead[..., None], axis=-1)
        iv = self.field.inv_table[lv]
        return self.field.vmul(v, iv)

    def index_of(self, vecs) -> np.ndarray:
        """Indices of the points spanned by the rows of ``vecs`` (-1 for zero rows)."""
        v = np.asarray(vecs, dtype=np.int64)
        nz = v != 0
        lead = np.argmax(nz, axis=-1)
        lv = np.take_along_axis(v, lead[..., None], axis=-1)
        iv = self.field.inv_table[lv]
        nv = self.field.vmul(v, iv)
        full = nv @ self.weights
        idx = self.offsets[lead] + full - self.weights[lead]
        return np.where(nz.any(axis=-1), idx, -1)

    def index(self, vec) -> int:
        i = int(self.index_of(np.asarray(vec)[None, :])[0])
        if i < 0:
            raise ValueError("zero vector is not a point")
        return i

    def coords_of(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        lead = np.searchsorted(self.offsets, idx, side="right") - 1
        tail = idx - self.offsets[lead]
        full = tail + self.weights[lead]
        out = (full[..., None] // self.weights) % self.q
        return out

    def point(self, vec) -> Point:
        nv = self.normalize(np.asarray(vec)[None, :])[0]
        if not nv.any():
            raise ValueError("zero vector is not a point")
        return Point(tuple(int(c) for c in nv), self.index(nv))

    def all_coords(self) -> np.ndarray:
        if self._points is None:
            self._points = self.coords_of(np.arange(self.size))
        return self._points

    # -- linear algebra ---------------------------------------------------------

    def rank(self, rows) -> int:
        return rank_gf(self.field, rows)

    def span_indices(self, vecs) -> np.ndarray:
        return span_members(self, vecs)


@functools.lru_cache(maxsize=None)
def pg(n: int, q: int, modulus: int | None = None) -> Space:
    return Space(n, gf(q, modulus))


def enumerate_points(n: int, q: int) -> list[Point]:
    space = pg(n, q)
    coords = space.all_coords()
    return [Point(tuple(int(c) for c in row), i) for i, row in enumerate(coords)]


# ---------------------------------------------------------------------------
# matrices over GF(q): plain 2-d integer arrays plus the field


def _row_reduce(field: Field, m: np.ndarray, ncols: int | None = None):
    """Gauss-Jordan elimination; returns (reduced copy, pivot columns)."""
    a = np.array(m, dtype=np.int64, copy=True)
    rows, cols = a.shape
    ncols = cols if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nzr = np.nonzero(a[r:, c])[0]
        if len(nzr) == 0:
            continue
        pr = r + nzr[0]
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = field.vmul(a[r], field.inv(int(a[r, c])))
        col = a[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if len(others):
            f = field.neg_table[col[others]]
            a[others] = field.vadd(a[others], field.vmul(f[:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rank_gf(field: Field, m) -> int:
    m = np.asarray(m, dtype=np.int64)
    if m.size == 0:
        return 0
    if m.ndim == 1:
        m = m[None, :]
    if field.p == 2 and field.k == 1:
        return _rank_gf2(m)
    return len(_row_reduce(field, m)[1])


def _rank_gf2(m: np.ndarray) -> int:
    rows = [int("".join(map(str, r)), 2) for r in m.tolist()]
    rank = 0
    while rows:
        piv = rows.pop()
        if piv:
            rank += 1
            top = piv.bit_length() - 1
            rows = [r ^ piv if (r >> top) & 1 else r for r in rows]
    return rank


def inverse_gf(field: Field, m) -> np.ndarray:
    m = np.asarray(m, dtype=np.int64)
    n = m.shape[0]
    aug = np.concatenate([m, np.eye(n, dtype=np.int64)], axis=1)
    red, piv = _row_reduce(field, aug, ncols=n)
    if len(piv) < n:
        raise ValueError("matrix is singular")
    return red[:, n:]


def matmul_gf(field: Field, a, b) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if field.k == 1:
        return (a @ b) % field.p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for l in range(a.shape[1]):
        out = field.vadd(out, field.vmul(a[:, l][:, None], b[l, :][None, :]))
    return out


def solve_gf(field: Field, a, b) -> np.ndarray:
    """Solve a x = b for square invertible a (b a vector)."""
    return matmul_gf(field, inverse_gf(field, a), np.asarray(b, dtype=np.int64)[:, None])[:, 0]


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PointSet:
    """Ordered duplicate-free list of points of one space."""

    space: Space
    coords: np.ndarray
    indices: np.ndarray

    @classmethod
    def from_vectors(cls, space: Space, vecs) -> "PointSet":
        vecs = np.asarray(vecs, dtype=np.int64).reshape(-1, space.dim)
        if (vecs < 0).any() or (vecs >= space.q).any():
            raise ValueError("coordinate out of field range")
        idx = space.index_of(vecs)
        if (idx < 0).any():
            raise ValueError("zero vector in point set")
        _, first = np.unique(idx, return_index=True)
        if len(first) != len(idx):
            raise ValueError("duplicate points in point set")
        return cls(space, space.normalize(vecs), idx)

    @classmethod
    def from_indices(cls, space: Space, idx) -> "PointSet":
        idx = np.asarray(idx, dtype=np.int64).reshape(-1)
        if len(np.unique(idx)) != len(idx):
            raise ValueError("duplicate points in point set")
        if len(idx) and (idx.min() < 0 or idx.max() >= space.size):
            raise ValueError("point index out of range")
        return cls(space, space.coords_of(idx), idx)

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        for row, i in zip(self.coords, self.indices):
            yield Point(tuple(int(c) for c in row), int(i))

    @property
    def n(self):
        return self.space.n

    @property
    def q(self):
        return self.space.q

    @property
    def field(self):
        return self.space.field

    def index_set(self) -> frozenset:
        return frozenset(int(i) for i in self.indices)

    def union(self, other) -> "PointSet":
        if isinstance(other, PointSet):
            if other.space != self.space:
                raise ValueError("point sets live in different spaces")
            other = other.indices
        extra = [int(i) for i in np.atleast_1d(other) if int(i) not in self.index_set()]
        return PointSet.from_indices(self.space, np.concatenate([self.indices, np.array(extra, dtype=np.int64)]))

    def sorted(self) -> "PointSet":
        order = np.argsort(self.indices)
        return PointSet(self.space, self.coords[order], self.indices[order])

    def same_points(self, other: "PointSet") -> bool:
        return self.space == other.space and self.index_set() == other.index_set()

    def __repr__(self):
        return f"PointSet({self.space}, size={len(self)})"


# ---------------------------------------------------------------------------


def span_members(space: Space, vecs) -> np.ndarray:
    """Indices of all points of the subspace spanned by ``vecs``."""
    v = np.asarray(vecs, dtype=np.int64).reshape(-1, space.dim)
    f = space.field
    red, piv = _row_reduce(f, v)
    basis = red[: len(piv)]
    if len(basis) == 0:
        return np.zeros(0, dtype=np.int64)
    coeffs = np.array(list(product(range(space.q), repeat=len(basis))), dtype=np.int64)[1:]
    acc = np.zeros((len(coeffs), space.dim), dtype=np.int64)
    for i, b in enumerate(basis):
        acc = f.vadd(acc, f.vmul(coeffs[:, i][:, None], b[None, :]))
    return np.unique(space.index_of(acc))


def apply_projectivity(space: Space, m, pts) -> np.ndarray:
    """Images of points (rows) under x -> m x, normalized."""
    m = np.asarray(m, dtype=np.int64)
    if rank_gf(space.field, m) != space.dim:
        raise ValueError("singular matrix")
    p = np.asarray(pts, dtype=np.int64)
    single = p.ndim == 1
    p = p.reshape(-1, space.dim)
    img = matmul_gf(space.field, p, m.T)
    img = space.normalize(img)
    return img[0] if single else img


def transform(x: PointSet, m) -> PointSet:
    return PointSet.from_vectors(x.space, apply_projectivity(x.space, m, x.coords))


def general_position(space: Space, pts) -> bool:
    p = np.asarray(pts, dtype=np.int64).reshape(-1, space.dim)
    if len(p) > space.dim + 1:
        raise ValueError("at most n+2 points")
    idx = space.index_of(p)
    if len(set(idx.tolist())) != len(idx) or (idx < 0).any():
        return False
    if len(p) <= space.dim:
        return rank_gf(space.field, p) == len(p)
    return all(rank_gf(space.field, p[list(s)]) == space.dim for s in combinations(range(len(p)), space.dim))


def normalize_matrix(field: Field, m) -> np.ndarray:
    """Scale a matrix so its first nonzero entry (row-major) is 1."""
    m = np.asarray(m, dtype=np.int64)
    flat = m.reshape(-1)
    lead = int(flat[np.nonzero(flat)[0][0]])
    return field.vmul(m, field.inv(lead))


def orbit(space: Space, seeds, generators) -> np.ndarray:
    """Point indices of the orbit of ``seeds`` under the group generated by ``generators``."""
    seen = set(int(i) for i in space.index_of(np.asarray(seeds).reshape(-1, space.dim)))
    todo = deque(seen)
    gens = [np.asarray(g, dtype=np.int64) for g in generators]
    while todo:
        batch = np.array([todo.popleft() for _ in range(len(todo))], dtype=np.int64)
        c = space.coords_of(batch)
        for g in gens:
            for j in space.index_of(matmul_gf(space.field, c, g.T)).tolist():
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
    return np.array(sorted(seen), dtype=np.int64)


def group_closure(field: Field, generators, limit: int = 100000) -> list[np.ndarray]:
    """Elements of the projective group generated by the matrices (as normalized matrices)."""
    gens = [normalize_matrix(field, g) for g in generators]
    dim = gens[0].shape[0]
    ident = np.eye(dim, dtype=np.int64)
    seen = {ident.tobytes(): ident}
    todo = deque([ident])
    while todo:
        a = todo.popleft()
        for g in gens:
            b = normalize_matrix(field, matmul_gf(field, g, a))
            key = b.tobytes()
            if key not in seen:
                seen[key] = b
                todo.append(b)
                if len(seen) > limit:
                    raise RuntimeError("group larger than limit")
    return list(seen.values())


def pgl_order(n: int, q: int) -> int:
    """|PGL(n+1, q)|."""
    o = 1
    for i in range(n + 1):
        o *= q ** (n + 1) - q**i
    return o // (q - 1)
