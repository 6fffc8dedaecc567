"""Point sets as parity-check matrices: length, dimension, minimum distance, covering radius."""

from __future__ import annotations

from dataclasses import dataclass, asdict
from itertools import combinations, product
from math import comb

import numpy as np

from .gf import Field
from .projspace import PointSet, Space, rank_gf

MITM_LIMIT = 40_000_000
SYNDROME_LIMIT = 10**8


class NotComputable(RuntimeError):
    """Raised when a code parameter is out of reach at desk scale."""


@dataclass
class ParityCheck:
    """(n+1) x N matrix over ``field``; columns are the point representatives."""

    field: Field
    matrix: np.ndarray

    @property
    def shape(self):
        return self.matrix.shape


@dataclass
class CodeParams:
    length: int
    codimension: int
    dimension: int
    min_distance: int
    covering_radius: int | None
    q: int
    exceptions: list

    def to_json(self) -> dict:
        d = asdict(self)
        return {"N": d["length"], "k": d["dimension"], "d": d["min_distance"], "rho": d["covering_radius"], "q": self.q, "exceptions": self.exceptions}


def parity_check(x: PointSet) -> ParityCheck:
    if rank_gf(x.field, x.coords) != x.space.dim:
        raise ValueError("point set does not span the space")
    return ParityCheck(x.field, x.coords.T.copy())


def _codes(f: Field, cols: np.ndarray, subsets: np.ndarray, coeffs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Integer codes of sum_i c_i h_{s_i} for every subset s and coefficient tuple c."""
    r = cols.shape[0]
    weights = f.q ** np.arange(r, dtype=np.int64)
    out = []
    ids = []
    sub = cols[:, subsets]  # (r, m, s)
    for c in coeffs:
        acc = np.zeros((len(subsets), r), dtype=np.int64)
        for t, ct in enumerate(c):
            acc = f.vadd(acc, f.vmul(int(ct), sub[:, :, t].T))
        out.append(acc @ weights)
        ids.append(np.arange(len(subsets)))
    return np.concatenate(out), np.concatenate(ids)


def min_distance(h: ParityCheck, start: int = 2) -> int:
    """Least w such that some w columns are dependent (meet in the middle on column combinations).

    The search runs w = start, start+1, ...; a match for w with distinct supports is a
    dependency of at most w columns, so it is exactly w once the smaller sizes were ruled out.
    """
    f, cols = h.field, np.asarray(h.matrix, dtype=np.int64)
    r, n_cols = cols.shape
    if (cols == 0).all(axis=0).any():
        return 1
    q = f.q
    top = min(n_cols, r + 1)
    for w in range(max(2, start), top + 1):
        s, t = (w + 1) // 2, w // 2
        work = comb(n_cols, s) * (q - 1) ** (s - 1) + comb(n_cols, t) * (q - 1) ** t
        if work > MITM_LIMIT:
            raise NotComputable(f"minimum distance search at w={w} needs {work} combinations")
        ls = np.array(list(combinations(range(n_cols), s)), dtype=np.int64).reshape(-1, s)
        rs = np.array(list(combinations(range(n_cols), t)), dtype=np.int64).reshape(-1, t)
        lc = np.array([(1,) + c for c in product(range(1, q), repeat=s - 1)], dtype=np.int64)
        rc = np.array(list(product(range(1, q), repeat=t)), dtype=np.int64)
        lcode, lid = _codes(f, cols, ls, lc)
        rcode, rid = _codes(f, cols, rs, rc)
        common = np.intersect1d(lcode, rcode)
        if len(common) == 0:
            continue
        if s != t:
            return w
        # same subset on both sides can cancel trivially; need two different supports
        code = np.concatenate([lcode, rcode])
        sid = np.concatenate([lid, rid])
        keep = np.isin(code, common)
        code, sid = code[keep], sid[keep]
        order = np.lexsort((sid, code))
        code, sid = code[order], sid[order]
        starts = np.r_[0, np.nonzero(np.diff(code))[0] + 1]
        ends = np.r_[starts[1:], len(code)]
        if (sid[starts] != sid[ends - 1]).any():
            return w
    raise ValueError("columns are independent; the code is trivial")


def covering_radius(h: ParityCheck) -> int:
    """Least rho such that every syndrome is a combination of at most rho columns."""
    f = h.field
    cols = np.asarray(h.matrix, dtype=np.int64).T
    r = cols.shape[1]
    if f.q**r > SYNDROME_LIMIT:
        raise NotComputable("syndrome space too large for desk-scale enumeration")
    if rank_gf(f, cols) != r:
        raise ValueError("columns do not span; covering radius is infinite")
    space = Space(r - 1, f)
    cov = np.zeros(space.size, dtype=bool)
    first = np.unique(space.index_of(cols))
    cov[first] = True
    frontier = first
    scal = np.arange(1, f.q, dtype=np.int64)
    steps = f.vmul(scal[:, None, None], cols[None, :, :]).reshape(-1, r)  # all a * h_i
    rho = 1
    chunk = max(1, 4_000_000 // (len(steps) * r))
    while not cov.all():
        rho += 1
        uncovered = np.nonzero(~cov)[0]
        new = np.zeros(space.size, dtype=bool)
        if len(frontier) <= len(uncovered):
            base = space.coords_of(frontier)
            for s in range(0, len(base), chunk):
                v = f.vadd(base[s : s + chunk, None, :], steps[None, :, :])
                idx = space.index_of(v.reshape(-1, r))
                new[idx[idx >= 0]] = True
        else:
            # v is reached iff v - a h_i is already covered for some i, a
            base = space.coords_of(uncovered)
            neg = f.vmul(f.neg(1), steps)
            for s in range(0, len(base), chunk):
                v = f.vadd(base[s : s + chunk, None, :], neg[None, :, :])
                flat = v.reshape(-1, r)
                zero = ~flat.any(axis=1)
                idx = np.zeros(len(flat), dtype=np.int64)
                idx[~zero] = space.index_of(flat[~zero])
                hit = np.where(zero, True, cov[idx]).reshape(len(v), -1).any(axis=1)
                new[uncovered[s : s + chunk][hit]] = True
        new &= ~cov
        frontier = np.nonzero(new)[0]
        if len(frontier) == 0:
            raise AssertionError("syndrome closure stalled")
        cov |= new
    return rho


def exception_tags(x: PointSet, d: int) -> list[str]:
    tags = []
    if x.q == 2 and x.n == 5 and len(x) == 7 and d == 7:
        tags.append("repetition [7,1,7]_2")
    if x.q == 2 and x.n == 10 and len(x) == 23 and d == 7:
        tags.append("Golay [23,12,7]_2")
    return tags


def code_params(x: PointSet, complete: bool | None = None, with_radius: bool = True) -> CodeParams:
    """Parameters of the code with parity-check matrix built from x.

    When ``complete`` is true the set is taken as complete 4-general and d is
    required to lie in {5, 6} unless the set is one of the two sporadic cases.
    """
    h = parity_check(x)
    n_cols = len(x)
    r = x.space.dim
    d = min_distance(h)
    rho = covering_radius(h) if with_radius else None
    tags = exception_tags(x, d)
    if complete and n_cols > r and not tags and d not in (5, 6):
        raise AssertionError(f"complete 4-general set with d = {d}")
    return CodeParams(n_cols, r, n_cols - r, d, rho, x.q, tags)
