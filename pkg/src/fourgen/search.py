"""Greedy completion, maximum size search and classification of small complete 4-general sets."""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

import numpy as np

from . import aut as autmod
from .bounds import m3_upper
from .constructions import htw_y
from .genset import coverage, extension_candidates, independent_subsets, verify_4general, verify_complete
from .projspace import PointSet, Space, pg, pgl_order

MANDATORY = {(3, 2), (4, 2), (3, 3)}
OPTIONAL = {(5, 2), (3, 4), (3, 5)}


class OutOfScope(ValueError):
    pass


def _priority(space: Space, order, seed):
    if isinstance(order, str):
        if order == "lex":
            return None
        if order == "random":
            if seed is None:
                raise ValueError("random order needs an explicit seed")
            rng = np.random.default_rng(seed)
            rank = np.empty(space.size, dtype=np.int64)
            rank[rng.permutation(space.size)] = np.arange(space.size)
            return rank
        raise ValueError(f"unknown order {order!r}")
    # explicit priority list of point indices, remaining points after it in index order
    pri = np.asarray(order, dtype=np.int64)
    rank = np.full(space.size, space.size, dtype=np.int64) + np.arange(space.size)
    rank[pri] = np.arange(len(pri))
    return rank


def greedy_complete(x: PointSet | None = None, order="lex", seed=None, space: Space | None = None) -> PointSet:
    """Add the first extension candidate (least index, or least rank under ``order``) until none is left."""
    if x is None or len(x) == 0:
        space = space if space is not None else (x.space if x is not None else None)
        if space is None:
            raise ValueError("need a space to seed an empty set")
        d = space.dim
        x = PointSet.from_vectors(space, np.concatenate([np.eye(d, dtype=np.int64), np.ones((1, d), dtype=np.int64)]))
    rep = verify_4general(x)
    if not rep.is_4general:
        raise ValueError("input is not 4-general")
    rank = _priority(x.space, order, seed)
    while True:
        cand = extension_candidates(x)
        if len(cand) == 0:
            break
        pick = cand[0] if rank is None else cand[np.argmin(rank[cand])]
        x = x.union(np.array([pick]))
    return x


def completed_y(d: int = 2) -> PointSet:
    return greedy_complete(htw_y(d))


def klein_plane_order() -> np.ndarray:
    """Priority for the PG(6,2) frame: the lexicographically first admissible Klein-quadric triple first."""
    from .constructions import pg62_triples

    return np.array(pg62_triples()[0], dtype=np.int64)


# ---------------------------------------------------------------------------


def _basis(space: Space) -> PointSet:
    return PointSet.from_vectors(space, np.eye(space.dim, dtype=np.int64))


def _extend_candidates(x: PointSet, cov=None) -> np.ndarray:
    return np.nonzero(~(coverage(x) if cov is None else cov))[0]


def complete_supersets_of_basis(n: int, q: int, deadline: float | None = None):
    """All complete 4-general sets of PG(n, q) containing the standard basis, as sorted index tuples.

    Points are added in increasing index order, so each set is produced once.
    """
    space = pg(n, q)
    base = _basis(space)
    out = []

    def rec(x: PointSet, last: int):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError
        cand = _extend_candidates(x)
        if len(cand) == 0:
            out.append(tuple(sorted(int(i) for i in x.indices)))
            return
        for c in cand[cand > last]:
            rec(x.union(np.array([c])), int(c))

    rec(base, -1)
    return space, out


@dataclass
class ClassInfo:
    representative: PointSet
    size: int
    aut_order: int
    labeled_count: int  # number of sets in the PGL-orbit
    independent_subsets: int


@dataclass
class ClassificationResult:
    n: int
    q: int
    classes: list
    basis_counts: dict  # size -> number of complete sets containing the standard basis
    consistent: bool
    details: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "classes": [
                {"size": c.size, "aut": c.aut_order, "labeled": c.labeled_count, "points": [int(i) for i in c.representative.indices]}
                for c in self.classes
            ],
            "consistent": self.consistent,
        }


def _signature(x: PointSet):
    """Cheap PGL invariant: size and hyperplane intersection numbers."""
    space, f = x.space, x.field
    hyp = space.all_coords()
    acc = np.zeros((len(hyp), len(x)), dtype=np.int64)
    for i in range(space.dim):
        acc = f.vadd(acc, f.vmul(hyp[:, i][:, None], x.coords[:, i][None, :]))
    sizes = (acc == 0).sum(axis=1)
    vals, counts = np.unique(sizes, return_counts=True)
    return (len(x), tuple(zip(vals.tolist(), counts.tolist())))


def classify_complete(n: int, q: int, allow_optional: bool = False) -> ClassificationResult:
    if (n, q) not in MANDATORY and not ((n, q) in OPTIONAL and allow_optional):
        if (n, q) in OPTIONAL:
            raise OutOfScope(f"classification of PG({n},{q}) is optional-long; pass allow_optional")
        raise OutOfScope(f"classification of PG({n},{q}) is outside the supported range")
    space, found = complete_supersets_of_basis(n, q)
    reps: dict = {}
    basis_counts: dict = {}
    for idx in found:
        x = PointSet.from_indices(space, np.array(idx))
        basis_counts[len(x)] = basis_counts.get(len(x), 0) + 1
        sig = _signature(x)
        bucket = reps.setdefault(sig, [])
        if not any(autmod.are_equivalent(r, x) for r in bucket):
            bucket.append(x)
    pgl = pgl_order(n, q)
    classes = []
    for bucket in reps.values():
        for r in bucket:
            a = autmod.aut_order(r)
            classes.append(ClassInfo(r, len(r), a, pgl // a, independent_subsets(r)))
    classes.sort(key=lambda c: (c.size, -c.aut_order))
    # orbit-stabilizer: sum over classes of |orbit| * (# bases inside) = (# bases of space) * E_s
    gl = pgl * (q - 1)
    n_bases = gl // ((q - 1) ** (n + 1) * _fact(n + 1))
    ok = True
    details = {}
    for s, e in basis_counts.items():
        lhs = sum(c.labeled_count * c.independent_subsets for c in classes if c.size == s)
        details[s] = (lhs, n_bases * e)
        ok &= lhs == n_bases * e
    for c in classes:
        if not verify_complete(c.representative).is_complete:
            ok = False
    return ClassificationResult(n, q, classes, basis_counts, bool(ok), details)


def _fact(m):
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def brute_force_complete(n: int, q: int, max_size: int) -> list[tuple[int, ...]]:
    """Every complete 4-general set of PG(n, q) with at most ``max_size`` points, by subset enumeration."""
    space = pg(n, q)
    out = []
    for k in range(space.dim, max_size + 1):
        for t in combinations(range(space.size), k):
            x = PointSet.from_indices(space, np.array(t))
            rep = verify_4general(x)
            if rep.is_4general and coverage(x).all():
                out.append(t)
    return out


# ---------------------------------------------------------------------------


@dataclass
class MaxResult:
    n: int
    q: int
    size: int
    witness: PointSet
    exhaustive: bool  # False when the budget ran out

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "size": self.size, "complete_search": self.exhaustive, "witness": [int(i) for i in self.witness.indices]}


def max_size(n: int, q: int, budget: float = 60.0) -> MaxResult:
    """Largest 4-general set of PG(n, q) by branch and bound over supersets of the standard basis."""
    space = pg(n, q)
    cap = m3_upper(n, q).integer_bound
    deadline = time.monotonic() + budget
    best = [_basis(space)]
    exhaustive = [True]

    class Done(Exception):
        pass

    def rec(x: PointSet, last: int):
        if len(x) > len(best[0]):
            best[0] = x
            if len(x) >= cap:
                raise Done
        if time.monotonic() > deadline:
            exhaustive[0] = False
            raise Done
        cand = _extend_candidates(x)
        cand = cand[cand > last]
        if len(x) + len(cand) <= len(best[0]):
            return
        for t, c in enumerate(cand):
            if len(x) + len(cand) - t <= len(best[0]):
                return
            rec(x.union(np.array([c])), int(c))

    try:
        rec(best[0], -1)
    except Done:
        pass
    return MaxResult(n, q, len(best[0]), best[0], exhaustive[0])
