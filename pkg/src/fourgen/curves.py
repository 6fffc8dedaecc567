"""Point counts of two plane cubics and base loci of Hermitian pencils and nets."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from math import isqrt

import numpy as np

from .gf import Field, gf, make_field, prime_power, subfield_embed
from .projspace import Space, rank_gf


def _check_even_1mod3(q):
    p, _ = prime_power(q)
    if p != 2 or q % 3 != 1:
        raise ValueError("q must be even with q = 1 mod 3")


def _grid(f: Field):
    x, y = np.meshgrid(np.arange(f.q), np.arange(f.q), indexing="ij")
    return x.ravel(), y.ravel()


def cubic1_count(q: int) -> int:
    """Affine points of X^2 Y + X Y^2 + X^2 + Y^2 + XY = 0 over GF(q)."""
    _check_even_1mod3(q)
    f = gf(q)
    x, y = _grid(f)
    x2, y2, xy = f.vmul(x, x), f.vmul(y, y), f.vmul(x, y)
    v = f.vadd(f.vadd(f.vmul(x2, y), f.vmul(x, y2)), f.vadd(f.vadd(x2, y2), xy))
    return int((v == 0).sum())


def cubic2_count(q: int, gamma: int) -> int:
    """Affine points of g(X^2 Y + X Y^2) + X^2 + X + Y^2 + Y + (g+1) XY = 0 over GF(q)."""
    _check_even_1mod3(q)
    f = gf(q)
    if gamma in (0, 1) or not 0 <= gamma < q:
        raise ValueError("gamma must be an element of GF(q) other than 0, 1")
    x, y = _grid(f)
    x2, y2, xy = f.vmul(x, x), f.vmul(y, y), f.vmul(x, y)
    cub = f.vmul(gamma, f.vadd(f.vmul(x2, y), f.vmul(x, y2)))
    rest = f.vadd(f.vadd(f.vadd(x2, x), f.vadd(y2, y)), f.vmul(f.add(gamma, 1), xy))
    return int((f.vadd(cub, rest) == 0).sum())


def in_hasse_window(q: int, r: int) -> bool:
    """q - 2 sqrt(q) - 2 <= r <= q + 2 sqrt(q) - 2, decided exactly."""
    return (r + 2 - q) ** 2 <= 4 * q


def hasse_window(q: int) -> tuple[int, int]:
    """Least and largest nonnegative integers inside the window."""
    vals = [r for r in range(0, 2 * q + 1) if in_hasse_window(q, r)]
    return vals[0], vals[-1]


# ---------------------------------------------------------------------------
# Hermitian curves in PG(2, q^2)


class HermitianPlane:
    def __init__(self, q: int):
        if q not in (2, 3, 4, 5):
            raise ValueError("Hermitian probes are meant for small q")
        self.q = q
        base = gf(q)
        self.field = make_field(base.p, 2 * base.k)
        self.space = Space(2, self.field)
        f = self.field
        pts = self.space.all_coords()
        conj = f.vpow(pts, q)
        # monomials v_i * v_j^q for each point, shape (points, 3, 3)
        self.mono = f.vmul(pts[:, :, None], conj[:, None, :])
        self.sub = np.array([a for a in range(f.q) if f.pow(a, q) == a], dtype=np.int64)

    def conj(self, m):
        return self.field.vpow(np.asarray(m, dtype=np.int64), self.q)

    def is_hermitian(self, h) -> bool:
        return bool((np.asarray(h).T == self.conj(h)).all())

    def random(self, rng) -> np.ndarray:
        f = self.field
        h = np.zeros((3, 3), dtype=np.int64)
        for i in range(3):
            h[i, i] = rng.choice(self.sub)
            for j in range(i + 1, 3):
                h[i, j] = rng.integers(f.q)
                h[j, i] = f.pow(int(h[i, j]), self.q)
        return h

    def zeros(self, h) -> np.ndarray:
        """Boolean mask over the points of PG(2, q^2) where v^T h v^(q) vanishes."""
        f = self.field
        acc = np.zeros(len(self.mono), dtype=np.int64)
        for i in range(3):
            for j in range(3):
                if h[i, j]:
                    acc = f.vadd(acc, f.vmul(int(h[i, j]), self.mono[:, i, j]))
        return acc == 0

    def rank(self, h) -> int:
        return rank_gf(self.field, h)

    def combine(self, coeffs, mats) -> np.ndarray:
        """GF(q)-linear combination of Hermitian matrices."""
        f = self.field
        out = np.zeros((3, 3), dtype=np.int64)
        for c, m in zip(coeffs, mats):
            out = f.vadd(out, f.vmul(int(c), m))
        return out

    def members(self, mats):
        """One matrix per member of the pencil/net spanned over GF(q) (first nonzero coefficient 1)."""
        out = []
        for c in product(self.sub.tolist(), repeat=len(mats)):
            nz = [v for v in c if v]
            if nz and nz[0] == 1:
                out.append(self.combine(c, mats))
        return out


@dataclass
class NetProbeReport:
    q: int
    seed: int
    trials: int
    admissible_nets: int
    draws: int
    empty_base_loci: int
    net_base_sizes: dict = dc_field(default_factory=dict)
    pencils: int = 0
    pencil_sizes: dict = dc_field(default_factory=dict)
    pencil_sizes_ok: bool = True
    min_rank3_per_pencil: int | None = None
    rank3_point_counts: set = dc_field(default_factory=set)
    all_rank3_sizes: set = dc_field(default_factory=set)  # sizes of pencils whose members are all non-degenerate
    degenerate_pencil_sizes: dict = dc_field(default_factory=dict)  # pencils without a non-degenerate member
    exhausted: bool = False

    def allowed_pencil_sizes(self) -> set:
        q = self.q
        return {q * q - q + 1, q * q + 1, q * q + q + 1, q * q + 2 * q + 1}

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "seed": self.seed,
            "trials": self.trials,
            "admissible_nets": self.admissible_nets,
            "draws": self.draws,
            "empty_base_loci": self.empty_base_loci,
            "net_base_sizes": {str(k): v for k, v in sorted(self.net_base_sizes.items())},
            "pencils": self.pencils,
            "pencil_sizes": {str(k): v for k, v in sorted(self.pencil_sizes.items())},
            "pencil_sizes_ok": self.pencil_sizes_ok,
            "min_rank3_per_pencil": self.min_rank3_per_pencil,
            "rank3_point_counts": sorted(self.rank3_point_counts),
            "all_rank3_sizes": sorted(self.all_rank3_sizes),
            "degenerate_pencil_sizes": {str(k): v for k, v in sorted(self.degenerate_pencil_sizes.items())},
            "exhausted": self.exhausted,
        }


def _independent(hp: HermitianPlane, mats) -> bool:
    return all(hp.combine(c, mats).any() for c in product(hp.sub.tolist(), repeat=len(mats)) if any(c))


def hermitian_net_probe(q: int, trials: int, seed: int, pencil_trials: int | None = None, max_draws: int | None = None) -> NetProbeReport:
    """Sample nets with a rank-2 and no rank-1 member and check their base loci are nonempty.

    Every pencil inside an accepted net, plus ``pencil_trials`` independent random
    pencils without rank-1 members, is checked against the four allowed base-locus sizes.
    Pencils made only of cones fall outside that list and are tallied separately.
    """
    if q not in (3, 4):
        raise ValueError("q must be 3 or 4")
    if trials < 1:
        raise ValueError("trials >= 1")
    hp = HermitianPlane(q)
    rng = np.random.default_rng(seed)
    rep = NetProbeReport(q, seed, trials, 0, 0, 0)
    allowed = rep.allowed_pencil_sizes()
    max_draws = max_draws or 200 * trials
    cache = {}

    def info(h):
        key = h.tobytes()
        if key not in cache:
            z = hp.zeros(h)
            r = hp.rank(h)
            cache[key] = (z, r)
            if r == 3:
                rep.rank3_point_counts.add(int(z.sum()))
        return cache[key]

    def pencil(mats):
        mem = hp.members(mats)
        infos = [info(m) for m in mem]
        if any(r == 1 for _, r in infos):
            return
        base = np.logical_and.reduce([z for z, _ in infos])
        size = int(base.sum())
        n3 = sum(1 for _, r in infos if r == 3)
        if n3 == 0:
            # only cones: the size list does not cover these, keep them apart
            rep.degenerate_pencil_sizes[size] = rep.degenerate_pencil_sizes.get(size, 0) + 1
            return
        rep.pencils += 1
        rep.pencil_sizes[size] = rep.pencil_sizes.get(size, 0) + 1
        rep.pencil_sizes_ok &= size in allowed
        if n3 == len(infos):
            rep.all_rank3_sizes.add(size)
        rep.min_rank3_per_pencil = n3 if rep.min_rank3_per_pencil is None else min(rep.min_rank3_per_pencil, n3)

    while rep.admissible_nets < trials:
        if rep.draws >= max_draws:
            rep.exhausted = True
            break
        rep.draws += 1
        mats = [hp.random(rng) for _ in range(3)]
        if not _independent(hp, mats):
            continue
        mem = hp.members(mats)
        ranks = [info(m)[1] for m in mem]
        if 1 in ranks or 2 not in ranks:
            continue
        rep.admissible_nets += 1
        base = np.logical_and.reduce([info(m)[0] for m in mem])
        size = int(base.sum())
        rep.net_base_sizes[size] = rep.net_base_sizes.get(size, 0) + 1
        if size == 0:
            rep.empty_base_loci += 1
        # pencils of the net: lines of the coefficient plane
        for a, b in _pencil_pairs(hp):
            pencil([hp.combine(a, mats), hp.combine(b, mats)])
    for _ in range(pencil_trials if pencil_trials is not None else trials):
        mats = [hp.random(rng) for _ in range(2)]
        if _independent(hp, mats):
            pencil(mats)
    return rep


def _pencil_pairs(hp: HermitianPlane):
    """Two coefficient vectors spanning each line of the net's parameter plane PG(2, q)."""
    small = gf(hp.q)
    emb = subfield_embed(hp.field, small)
    space = Space(2, small)
    pts = space.all_coords()
    out = []
    for ln in pts:  # dual coordinates
        dots = np.zeros(len(pts), dtype=np.int64)
        for i in range(3):
            dots = small.vadd(dots, small.vmul(int(ln[i]), pts[:, i]))
        on = pts[dots == 0]
        out.append((emb[on[0]].tolist(), emb[on[1]].tolist()))
    return out
