"""Cap / 4-general / completeness checks for point sets of PG(n, q)."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

import numpy as np

from .projspace import PointSet, Space, rank_gf

MAX_WITNESSES = 10


class NotFourGeneralError(ValueError):
    def __init__(self, report):
        super().__init__("point set is not 4-general")
        self.report = report


@dataclass
class VerifyReport:
    size: int
    spans_space: bool
    is_cap: bool
    is_4general: bool
    is_complete: bool | None = None
    violations: list = dc_field(default_factory=list)
    covered_count: int | None = None

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "spans": self.spans_space,
            "cap": self.is_cap,
            "four_general": self.is_4general,
            "complete": self.is_complete,
            "covered": self.covered_count,
            "violations": [{"kind": k, "points": [int(i) for i in pts]} for k, pts in self.violations],
        }


def _pairs(k):
    i, j = np.triu_indices(k, 1)
    return i.astype(np.int64), j.astype(np.int64)


def secant_points(x: PointSet):
    """Points x_i + b x_j (b != 0) for every pair i < j.

    Returns (indices shaped (pairs, q-1), pair_i, pair_j).  These are the
    points of the secant lines other than x_i and x_j.
    """
    f = x.field
    i, j = _pairs(len(x))
    b = np.arange(1, x.q, dtype=np.int64)
    v = f.vadd(x.coords[i][:, None, :], f.vmul(b[None, :, None], x.coords[j][:, None, :]))
    return x.space.index_of(v), i, j


def coverage(x: PointSet) -> np.ndarray:
    """Boolean array over the space: points of x, its secant lines, and all planes on three points."""
    space, f = x.space, x.field
    cov = np.zeros(space.size, dtype=bool)
    cov[x.indices] = True
    k = len(x)
    if k < 2:
        return cov
    sec, pi, pj = secant_points(x)
    cov[sec.ravel()] = True
    if k < 3:
        return cov
    # pair vectors x_i + b x_j grouped by j; extend with c x_l for l > j
    b = np.arange(1, x.q, dtype=np.int64)
    pv = f.vadd(x.coords[pi][:, None, :], f.vmul(b[None, :, None], x.coords[pj][:, None, :]))
    pv = pv.reshape(-1, space.dim)
    pj_rep = np.repeat(pj, x.q - 1)
    order = np.argsort(pj_rep, kind="stable")
    pv, pj_rep = pv[order], pj_rep[order]
    ends = np.searchsorted(pj_rep, np.arange(k), side="left")
    cs = np.arange(1, x.q, dtype=np.int64)
    for l in range(2, k):
        base = pv[: ends[l]]
        if len(base) == 0:
            continue
        step = f.vmul(cs[:, None], x.coords[l][None, :])  # (q-1, dim)
        chunk = max(1, 2_000_000 // (len(cs) * space.dim))
        for s in range(0, len(base), chunk):
            blk = base[s : s + chunk]
            v = f.vadd(blk[:, None, :], step[None, :, :])
            cov[space.index_of(v).ravel()] = True
    return cov


def verify_4general(x: PointSet, others=None) -> VerifyReport:
    if others is not None:
        for o in others:
            if o.space != x.space:
                raise ValueError("point sets from different spaces")
    k = len(x)
    if k < 1:
        raise ValueError("empty point set")
    spans = rank_gf(x.field, x.coords) == x.space.dim
    violations = []
    if not spans:
        violations.append(("not_spanning", []))
    is_cap = True
    four = True
    if k >= 2:
        sec, pi, pj = secant_points(x)
        member = np.isin(sec, x.indices)
        seen = set()
        if member.any():
            is_cap = False
            rows = np.nonzero(member.any(axis=1))[0]
            for r in rows:
                third = int(sec[r][member[r]][0])
                key = ("collinear", tuple(sorted([int(x.indices[pi[r]]), int(x.indices[pj[r]]), third])))
                if key not in seen and len(seen) < MAX_WITNESSES:
                    seen.add(key)
                    violations.append((key[0], list(key[1])))
        flat = sec.ravel()
        owner = np.repeat(np.arange(len(pi)), x.q - 1)
        order = np.argsort(flat, kind="stable")
        fs, os_ = flat[order], owner[order]
        dup = np.nonzero(fs[1:] == fs[:-1])[0]
        if len(dup):
            four = False
            for d in dup:
                a, b = int(os_[d]), int(os_[d + 1])
                quad = {int(x.indices[pi[a]]), int(x.indices[pj[a]]), int(x.indices[pi[b]]), int(x.indices[pj[b]])}
                if len(quad) < 4:
                    # two secant lines sharing a point and meeting again: the three points are collinear
                    is_cap = False
                    kind = "collinear"
                else:
                    kind = "coplanar"
                key = (kind, tuple(sorted(quad)))
                if key not in seen and len(seen) < MAX_WITNESSES:
                    seen.add(key)
                    violations.append((kind, sorted(quad)))
    four = four and is_cap
    return VerifyReport(size=k, spans_space=spans, is_cap=is_cap, is_4general=four and spans, violations=violations)


def verify_complete(x: PointSet) -> VerifyReport:
    rep = verify_4general(x)
    if not rep.is_4general:
        raise NotFourGeneralError(rep)
    cov = coverage(x)
    rep.covered_count = int(cov.sum())
    rep.is_complete = bool(cov.all())
    if not rep.is_complete:
        rep.violations = [("uncovered", [int(i)]) for i in np.nonzero(~cov)[0][:MAX_WITNESSES]]
    return rep


def extension_candidates(x: PointSet) -> np.ndarray:
    """Indices of points P not in x with x + P still free of 3 collinear / 4 coplanar points."""
    return np.nonzero(~coverage(x))[0]


def is_4general_naive(space: Space, coords) -> bool:
    """All-triples / all-quadruples rank test plus spanning (testing oracle)."""
    c = np.asarray(coords, dtype=np.int64).reshape(-1, space.dim)
    f = space.field
    if rank_gf(f, c) != space.dim:
        return False
    if len(set(space.index_of(c).tolist())) != len(c):
        return False
    for t in combinations(range(len(c)), 3):
        if rank_gf(f, c[list(t)]) < 3:
            return False
    for t in combinations(range(len(c)), 4):
        if rank_gf(f, c[list(t)]) < 4:
            return False
    return True


def counting_bound_holds(x: PointSet) -> bool:
    k = len(x)
    return (x.q - 1) * comb(k, 2) + k <= x.space.size


# ---------------------------------------------------------------------------


@dataclass
class SecantGraph:
    pairs: list  # (i, j) positions into the point set
    adjacency: np.ndarray
    vertices: int
    degree: set
    lam: set
    mu: set
    triangular: bool
    shares_point_rule: bool


def secant_graph(x: PointSet) -> SecantGraph:
    """Graph on secant lines, adjacent when the lines meet; checks it is T_k."""
    k = len(x)
    space = x.space
    i, j = _pairs(k)
    m = len(i)
    # every point of every secant line, as an incidence list
    sec, _, _ = secant_points(x)
    line_pts = np.concatenate([x.indices[i][:, None], x.indices[j][:, None], sec], axis=1)
    rows = np.repeat(np.arange(m), line_pts.shape[1])
    cols = line_pts.ravel()
    uniq, inv = np.unique(cols, return_inverse=True)
    from scipy.sparse import csr_matrix

    inc = csr_matrix((np.ones(len(rows), dtype=np.int32), (rows, inv)), shape=(m, len(uniq)))
    meet = (inc @ inc.T).toarray() > 0
    np.fill_diagonal(meet, False)
    a = meet.astype(np.float64)
    deg = a.sum(axis=1).astype(int)
    a2 = a @ a
    adj_vals = a2[meet].astype(int)
    off = ~meet
    np.fill_diagonal(off, False)
    non_vals = a2[off].astype(int)
    share = (i[:, None] == i[None, :]) | (i[:, None] == j[None, :]) | (j[:, None] == i[None, :]) | (j[:, None] == j[None, :])
    np.fill_diagonal(share, False)
    degree, lam, mu = set(deg.tolist()), set(np.unique(adj_vals).tolist()), set(np.unique(non_vals).tolist())
    tri = m == comb(k, 2) and degree <= {2 * (k - 2)} and lam <= {k - 2} and mu <= {4}
    return SecantGraph(
        pairs=list(zip(i.tolist(), j.tolist())),
        adjacency=meet,
        vertices=m,
        degree=degree,
        lam=lam,
        mu=mu,
        triangular=bool(tri),
        shares_point_rule=bool(np.array_equal(meet, share)),
    )


def nmds_check(x: PointSet) -> tuple[bool, bool, bool]:
    if x.n != 4:
        raise ValueError("NMDS test is defined in PG(4, q)")
    f, c = x.field, x.coords
    k = len(x)
    c1 = all(rank_gf(f, c[list(t)]) == 4 for t in combinations(range(k), 4))
    c2 = any(rank_gf(f, c[list(t)]) <= 4 for t in combinations(range(k), 5))
    c3 = all(rank_gf(f, c[list(t)]) == 5 for t in combinations(range(k), 6))
    return c1, c2, c3


def independent_subsets(x: PointSet) -> int:
    """Number of (n+1)-subsets of x that span the space."""
    d = x.space.dim
    return sum(1 for t in combinations(range(len(x)), d) if rank_gf(x.field, x.coords[list(t)]) == d)
