"""Explicit point sets: frames, quadrics, cyclic orbits, cubics and the sporadic examples."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from math import gcd

import numpy as np

from .gf import Coordinates, Field, gf, make_field, prime_power
from .genset import extension_candidates, verify_4general
from .projspace import PointSet, Space, group_closure, matmul_gf, orbit, pg, rank_gf, span_members


@dataclass
class ConstructionSpec:
    id: str
    parameters: dict
    expected_size: int


def _emit(space: Space, vecs, spec: ConstructionSpec) -> PointSet:
    x = PointSet.from_vectors(space, vecs)
    if len(x) != spec.expected_size:
        raise AssertionError(f"{spec.id}: got {len(x)} points, expected {spec.expected_size}")
    return x


def _dedup(space: Space, vecs):
    vecs = np.asarray(vecs, dtype=np.int64)
    idx = space.index_of(vecs)
    _, first = np.unique(idx, return_index=True)
    return vecs[np.sort(first)]


# ---------------------------------------------------------------------------


def frame(n: int, q: int) -> PointSet:
    space = pg(n, q)
    vecs = np.concatenate([np.eye(n + 1, dtype=np.int64), np.ones((1, n + 1), dtype=np.int64)])
    return _emit(space, vecs, ConstructionSpec("frame", {"n": n, "q": q}, n + 2))


def _irreducible_quadratic(f: Field):
    """(a, b) with X^2 + aX + b irreducible over f, smallest encoding."""
    for b in range(1, f.q):
        for a in range(f.q):
            if all(f.add(f.add(f.mul(x, x), f.mul(a, x)), b) != 0 for x in range(f.q)):
                return a, b
    raise AssertionError("no irreducible quadratic")


def elliptic_quadric(q: int) -> PointSet:
    """Points of x0 x1 = x2^2 + a x2 x3 + b x3^2 with the quadratic form irreducible."""
    space = pg(3, q)
    f = space.field
    a, b = _irreducible_quadratic(f)
    pts = space.all_coords()
    x0, x1, x2, x3 = pts.T
    lhs = f.vmul(x0, x1)
    rhs = f.vadd(f.vadd(f.vmul(x2, x2), f.vmul(a, f.vmul(x2, x3))), f.vmul(b, f.vmul(x3, x3)))
    vecs = pts[lhs == rhs]
    return _emit(space, vecs, ConstructionSpec("elliptic_quadric", {"q": q}, q * q + 1))


# ---------------------------------------------------------------------------
# cyclic model


def cyclic_theta0(d: int, q: int) -> PointSet:
    """The orbit theta_0 = {<w^i> : w^(i(q-1)M) = 1} in PG(2d-1, 3) or PG(2d, 4)."""
    if q == 3:
        if d < 2:
            raise ValueError("q=3 needs d >= 2")
        n = 2 * d - 1
        m = (3**d + 1) // 2
    elif q == 4:
        if d < 1:
            raise ValueError("q=4 needs d >= 1")
        n = 2 * d
        m = (2 ** (2 * d + 1) + 1) // 3
    else:
        raise ValueError("theta0 is defined for q in {3, 4}")
    space = pg(n, q)
    small = space.field
    big = make_field(small.p, small.k * (n + 1))
    coords = Coordinates(big, small)
    total = (big.q - 1) // (q - 1)
    step = total // m  # N
    elems = [big.exp(s * step) for s in range(m)]
    vecs = coords.flatten_many(elems)
    return _emit(space, vecs, ConstructionSpec("theta0", {"d": d, "q": q}, m))


def theta0_orbit_closed(d: int, q: int) -> bool:
    """theta_0 is one orbit of the cyclic projectivity w^i -> w^(i N)."""
    x = cyclic_theta0(d, q)
    space = x.space
    small = space.field
    big = make_field(small.p, small.k * (space.n + 1))
    coords = Coordinates(big, small)
    n_ = (big.q - 1) // (q - 1) // len(x)
    # multiplication by w^N is F_q-linear: columns are images of the basis
    g = big.exp(n_)
    mat = np.array([coords.flatten(big.mul(g, b)) for b in coords.basis], dtype=np.int64).T
    orb = orbit(space, x.coords[:1], [mat])
    return set(orb.tolist()) == x.index_set()


def htw_y(d: int) -> PointSet:
    """{(1, a, a^2) : a in F_{3^d}} flattened over F_3, inside PG(2d, 3)."""
    if d < 1:
        raise ValueError("d >= 1")
    space = pg(2 * d, 3)
    big = make_field(3, d)
    coords = Coordinates(big, space.field)
    a = np.arange(big.q)
    sq = big.vmul(a, a)
    vecs = np.concatenate([np.ones((big.q, 1), dtype=np.int64), coords.flatten_many(a), coords.flatten_many(sq)], axis=1)
    return _emit(space, vecs, ConstructionSpec("htw_y", {"d": d}, 3**d))


# ---------------------------------------------------------------------------
# V_alpha in PG(2d-1, 4)


class VModel:
    """PG(V) for V = {v(a, b)} over F_4 with coordinates interleaving a-bar and b-bar."""

    def __init__(self, d: int):
        if d < 2:
            raise ValueError("d >= 2")
        self.d = d
        self.space = pg(2 * d - 1, 4)
        self.big = make_field(2, 2 * d)
        self.coords = Coordinates(self.big, self.space.field)

    def vectors(self, a, b) -> np.ndarray:
        ca = self.coords.flatten_many(a)
        cb = self.coords.flatten_many(b)
        out = np.empty((len(ca), 2 * self.d), dtype=np.int64)
        out[:, 0::2] = ca
        out[:, 1::2] = cb
        return out

    def v_alpha_vectors(self, alpha: int) -> np.ndarray:
        big = self.big
        x = np.arange(1, big.q)
        b = big.vmul(alpha, big.vpow(x, -2))
        return _dedup(self.space, self.vectors(x, b))

    def pi1(self):
        x = np.arange(1, self.big.q)
        return _dedup(self.space, self.vectors(np.zeros_like(x), x))

    def pi2(self):
        x = np.arange(1, self.big.q)
        return _dedup(self.space, self.vectors(x, np.zeros_like(x)))

    def matrix(self, fa, fb) -> np.ndarray:
        """F_4-matrix of v(a, b) -> v(fa(a), fb(b)) for F_4-linear maps fa, fb."""
        d = self.d
        cols = []
        for i in range(2 * d):
            e = np.zeros(2 * d, dtype=np.int64)
            e[i] = 1
            a = self.coords.unflatten(e[0::2])
            b = self.coords.unflatten(e[1::2])
            cols.append(self.vectors(np.array([fa(a)]), np.array([fb(b)]))[0])
        return np.array(cols, dtype=np.int64).T


def v_alpha(d: int, alpha: int = 1) -> PointSet:
    """V_alpha = {P(x, alpha x^-2) : x != 0} in PG(2d-1, 4); alpha is an element of GF(4^d)."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    model = VModel(d)
    if not 0 < alpha < model.big.q:
        raise ValueError("alpha out of range")
    vecs = model.v_alpha_vectors(alpha)
    return _emit(model.space, vecs, ConstructionSpec("v_alpha", {"d": d, "alpha": alpha}, (4**d - 1) // 3))


def v_alpha_partition(d: int) -> bool:
    """The V_alpha together with Pi_1, Pi_2 partition PG(2d-1, 4)."""
    model = VModel(d)
    parts = [model.space.index_of(model.pi1()), model.space.index_of(model.pi2())]
    parts += [model.space.index_of(model.v_alpha_vectors(a)) for a in range(1, model.big.q)]
    allidx = np.concatenate(parts)
    return len(allidx) == model.space.size and len(np.unique(allidx)) == model.space.size


def v_alpha_properties(d: int) -> dict:
    """Checks of the sizes, the regular action of Phi and the maps V_alpha -> V_{delta alpha}."""
    model = VModel(d)
    big, space = model.big, model.space
    w = big.generator
    m = (4**d - 1) // 3
    phi = model.matrix(lambda a: big.mul(w, a), lambda b: big.mul(big.pow(w, -2), b))
    out = {}
    sets = {a: set(space.index_of(model.v_alpha_vectors(a)).tolist()) for a in range(1, big.q)}
    out["sizes"] = all(len(s) == m for s in sets.values())
    gens = group_closure(space.field, [phi])
    out["phi_order"] = len(gens)
    regular = True
    for pts in [model.pi1(), model.pi2(), model.v_alpha_vectors(1)]:
        orb = orbit(space, pts[:1], [phi])
        regular &= len(orb) == m == len(gens) and set(orb.tolist()) == set(space.index_of(pts).tolist())
    out["phi_regular"] = bool(regular)
    delta_ok = True
    for delta in range(1, big.q):
        mat = model.matrix(lambda a: a, lambda b, _d=delta: big.mul(_d, b))
        img = space.index_of(matmul_gf(space.field, model.v_alpha_vectors(1), mat.T))
        delta_ok &= set(img.tolist()) == sets[delta]
    out["delta_maps"] = bool(delta_ok)
    out["partition"] = v_alpha_partition(d)
    return out


# ---------------------------------------------------------------------------
# PG(3, q) arcs


def twisted_cubic(q: int, h: int = 1) -> PointSet:
    """{(1, t, t^(2^h), t^(2^h + 1))} + (0,0,0,1); h > 1 needs q = 2^e with gcd(e, h) = 1."""
    p, e = prime_power(q)
    if h < 1:
        raise ValueError("h >= 1")
    if h > 1 and (p != 2 or gcd(e, h) != 1):
        raise ValueError("h > 1 needs q even and gcd(log2 q, h) = 1")
    space = pg(3, q)
    f = space.field
    s = 2**h
    t = np.arange(q)
    vecs = np.stack([np.ones(q, dtype=np.int64), t, f.vpow(t, s), f.vpow(t, s + 1)], axis=1)
    vecs[0, 2:] = 0  # 0^s
    vecs = np.concatenate([vecs, [[0, 0, 0, 1]]])
    return _emit(space, vecs, ConstructionSpec("twisted_cubic", {"q": q, "h": h}, q + 1))


def pg38_seven_set() -> PointSet:
    space = pg(3, 8)
    f = space.field
    t = np.arange(2, 8)
    vecs = np.stack([np.ones(6, dtype=np.int64), t, f.vpow(t, 2), f.vpow(t, 3)], axis=1)
    vecs = np.concatenate([vecs, [[0, 1, 1, 0]]])
    return _emit(space, vecs, ConstructionSpec("pg38_seven", {}, 7))


# ---------------------------------------------------------------------------
# three twisted cubics in PG(5, q), q = 1 mod 3


@dataclass
class TripleCubic:
    points: PointSet
    generators: list  # matrices over GF(q^2) acting on the conjugate-pair model
    group_order: int
    orbit_size: int
    orbit_is_union: bool
    big: Field = dc_field(repr=False)


class ConjugatePairModel:
    """PG(5, q) as the F_q-points of (x, x^q, y, y^q, z, z^q) inside PG(5, q^2)."""

    def __init__(self, q: int):
        self.q = q
        self.space = pg(5, q)
        small = self.space.field
        self.big = make_field(small.p, 2 * small.k)
        self.big_space = Space(5, self.big)
        self.coords = Coordinates(self.big, small)

    def descend(self, vec) -> np.ndarray:
        """F_q coordinates of a PG(5, q^2) point fixed by the conjugate-swap map."""
        big, q = self.big, self.q
        v = [int(c) for c in vec]
        r = next(i for i in range(0, 6, 2) if v[i])
        target = big.div(v[r + 1], big.pow(v[r], q))
        lam = next(big.exp(j) for j in range(big.q - 1) if big.pow(big.exp(j), q - 1) == target)
        w = [big.mul(lam, c) for c in v]
        for i in range(0, 6, 2):
            if big.pow(w[i], q) != w[i + 1]:
                raise ValueError("vector is not in the F_q-subspace")
        return np.concatenate([self.coords.flatten_many([w[0], w[2], w[4]])]).reshape(-1)


def _norm_one(big: Field, q: int) -> list[int]:
    return [t for t in range(1, big.q) if big.pow(t, q + 1) == 1]


def triple_cubic(q: int) -> TripleCubic:
    if q % 3 != 1:
        raise ValueError("q must be 1 mod 3")
    model = ConjugatePairModel(q)
    big = model.big
    emb = model.coords.embed
    small = model.space.field
    xi_small = next(x for x in range(small.q) if small.add(small.add(small.mul(x, x), x), 1) == 0)
    xi = int(emb[xi_small])
    xi2 = big.mul(xi, xi)
    g1 = np.zeros((6, 6), dtype=np.int64)
    g1[0, 0] = g1[1, 1] = 1
    g1[2, 2] = g1[3, 3] = xi
    g1[4, 2] = g1[5, 3] = 1
    g1[4, 4] = g1[5, 5] = xi2
    t0 = big.exp(q - 1)  # generator of the norm-1 group
    g2 = np.diag([1, big.pow(t0, 3), t0, big.pow(t0, 2), t0, big.pow(t0, 2)]).astype(np.int64)
    bs = model.big_space
    p0 = np.array([1, 1, 1, 1, 0, 0])
    orb = orbit(bs, p0[None, :], [g1, g2])
    group = group_closure(big, [g1, g2])
    cubics = []
    minus1 = big.neg(1)
    for t in _norm_one(big, q):
        t2, t3 = big.mul(t, t), big.pow(t, 3)
        cubics.append([1, t3, t, t2, 0, 0])
        cubics.append([1, t3, big.mul(xi, t), big.mul(xi, t2), t, t2])
        cubics.append([1, t3, big.mul(xi2, t), big.mul(xi2, t2), big.mul(minus1, t), big.mul(minus1, t2)])
    cub_idx = set(bs.index_of(np.array(cubics)).tolist())
    vecs = np.array([model.descend(v) for v in bs.coords_of(orb)])
    pts = _emit(model.space, vecs, ConstructionSpec("triple_cubic", {"q": q}, 3 * (q + 1)))
    return TripleCubic(pts, [g1, g2], len(group), len(orb), cub_idx == set(orb.tolist()), big)


def triple_cubic_rank_matrices(q: int):
    """All 4x6 matrices (over GF(q^2)) of the coplanarity condition, t1 != 1."""
    model = ConjugatePairModel(q)
    big = model.big
    small = model.space.field
    xi = int(model.coords.embed[next(x for x in range(small.q) if small.add(small.add(small.mul(x, x), x), 1) == 0)])
    xi2 = big.mul(xi, xi)
    m1 = big.neg(1)
    ts = _norm_one(big, q)
    for t1, t2, t3 in product(ts, repeat=3):
        if t1 == 1:
            continue
        yield np.array(
            [
                [1, 1, 1, 1, 0, 0],
                [1, big.pow(t1, 3), t1, big.pow(t1, 2), 0, 0],
                [1, big.pow(t2, 3), big.mul(xi, t2), big.mul(xi, big.pow(t2, 2)), t2, big.pow(t2, 2)],
                [1, big.pow(t3, 3), big.mul(xi2, t3), big.mul(xi2, big.pow(t3, 2)), big.mul(m1, t3), big.mul(m1, big.pow(t3, 2))],
            ],
            dtype=np.int64,
        ), big


def triple_cubic_line_check(q: int) -> bool:
    """A plane through the fixed line meets the set in at most one point."""
    tc = triple_cubic(q)
    model = ConjugatePairModel(q)
    big = model.big
    line = np.array([model.descend([1, x, 0, 0, 0, 0]) for x in _norm_one(big, q)])
    f = model.space.field
    base = line[:2]
    if rank_gf(f, base) != 2:
        base = line[[0, 2]]
    pts = tc.points.coords
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if rank_gf(f, np.concatenate([base, pts[[i, j]]])) <= 3:
                return False
    return True


# ---------------------------------------------------------------------------
# named examples in PG(5, 5), PG(5, 16), PG(6, 2)


def pg55_a() -> PointSet:
    space = pg(5, 5)
    vecs = []
    for x, y in product(range(5), repeat=2):
        vecs.append([1, x, y, 2 * x * y, x * x + 2 * y * y, x**3 + x * x * y + x * y * y - y**3])
    vecs = np.array(vecs, dtype=np.int64) % 5
    return _emit(space, vecs, ConstructionSpec("pg55_A", {}, 25))


def pg55_lines() -> np.ndarray:
    """Point indices on the three lines X1=X2=X3=X5-aX4=0, a in {0, 2, 3}."""
    space = pg(5, 5)
    idx = set()
    for a in (0, 2, 3):
        idx |= set(span_members(space, [[0, 0, 0, 1, a, 0], [0, 0, 0, 0, 0, 1]]).tolist())
    return np.array(sorted(idx), dtype=np.int64)


def pg55() -> PointSet:
    a = pg55_a()
    extra = np.array([[0, 0, 0, 1, 0, 0], [0, 0, 0, 1, 2, 0], [0, 0, 0, 0, 0, 1]])
    vecs = np.concatenate([a.coords, extra])
    return _emit(a.space, vecs, ConstructionSpec("pg55", {}, 28))


def pg516_group(space: Space, a_values=None, c_values=None) -> list[np.ndarray]:
    """Matrices of t -> a^2 t + ac on the curve (1, t, t^2, t^3, t^4, t^5), q = 16.

    The default parameters a^5 = 1, c in F_16 give the group of order 80.
    """
    f = space.field
    if a_values is None:
        a_values = [a for a in range(1, 16) if f.pow(a, 5) == 1]
    if c_values is None:
        c_values = range(16)
    mats = []
    for a in a_values:
        for c in c_values:
            P = lambda e: f.pow(a, e)
            C = lambda e: f.pow(c, e)
            m = np.zeros((6, 6), dtype=np.int64)
            m[0, 0] = 1
            m[1, 0], m[1, 1] = f.mul(a, c), P(2)
            m[2, 0], m[2, 2] = f.mul(P(2), C(2)), P(4)
            m[3, 0], m[3, 1], m[3, 2], m[3, 3] = f.mul(P(3), C(3)), f.mul(P(4), C(2)), f.mul(P(5), c), P(6)
            m[4, 0], m[4, 4] = f.mul(P(4), C(4)), P(8)
            m[5, 0], m[5, 1], m[5, 4], m[5, 5] = f.mul(P(5), C(5)), f.mul(P(6), C(4)), f.mul(P(9), c), P(10)
            mats.append(m)
    return mats


def pg516_b() -> PointSet:
    space = pg(5, 16, 19)
    f = space.field
    xi = f.generator
    seed = np.array([[1, f.pow(xi, 5), xi, f.pow(xi, 2), 0, 0]])
    orb = orbit(space, seed, pg516_group(space))
    return _emit(space, space.coords_of(orb), ConstructionSpec("pg516_B", {}, 80))


def pg516() -> PointSet:
    b = pg516_b()
    extra = np.array([[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]])
    return _emit(b.space, np.concatenate([b.coords, extra]), ConstructionSpec("pg516", {}, 82))


def klein_quadric_points() -> np.ndarray:
    """Indices of the points of PG(6, 2) on sum X_i = 0 and sum_{i<=j} X_i X_j = 0."""
    space = pg(6, 2)
    c = space.all_coords()
    s = c.sum(axis=1)
    pairs = (s * s - s) // 2  # sum_{i<j} X_i X_j over the integers
    quad = (s + pairs) % 2
    return np.nonzero((s % 2 == 0) & (quad == 0))[0]


def pg62_triples() -> list[tuple[int, int, int]]:
    """All triples of extension points of the PG(6,2) frame keeping it 4-general."""
    s = frame(6, 2)
    cand = extension_candidates(s)
    out = []
    for t in combinations(cand.tolist(), 3):
        if verify_4general(s.union(np.array(t))).is_4general:
            out.append(t)
    return out


def pg62() -> PointSet:
    triples = pg62_triples()
    if not triples:
        raise RuntimeError("no admissible triple found for the PG(6,2) example")
    s = frame(6, 2)
    x = s.union(np.array(triples[0]))
    if len(x) != 11:
        raise AssertionError("pg62 size")
    return x


def named_example(name: str) -> PointSet:
    table = {"pg55": pg55, "pg516": pg516, "pg62": pg62}
    if name not in table:
        raise ValueError(f"unknown example {name!r}")
    return table[name]()


# ---------------------------------------------------------------------------
# PG(7, q): the set O and its hyperplane sections


def set_o(q: int) -> PointSet:
    space = pg(7, q)
    small = space.field
    big = make_field(small.p, 3 * small.k)
    coords = Coordinates(big, small)
    x = np.arange(big.q)
    y = coords.flatten_many(x)
    z = coords.flatten_many(big.vpow(x, q * q + q))
    nrm = big.vpow(x, q * q + q + 1)
    t = np.array([coords.to_small(int(v)) for v in nrm], dtype=np.int64)
    vecs = np.concatenate([np.ones((big.q, 1), dtype=np.int64), y, z, t[:, None]], axis=1)
    vecs = np.concatenate([vecs, [[0] * 7 + [1]]])
    return _emit(space, vecs, ConstructionSpec("set_O", {"q": q}, q**3 + 1))


def o_hyperplane_sections(q: int, check_sections: bool = False) -> dict:
    """Distribution of |H cap O| over all hyperplanes H of PG(7, q)."""
    o = set_o(q)
    space, f = o.space, o.field
    hyp = space.all_coords()
    acc = np.zeros((len(hyp), len(o)), dtype=np.int64)
    for i in range(space.dim):
        acc = f.vadd(acc, f.vmul(hyp[:, i][:, None], o.coords[:, i][None, :]))
    inc = acc == 0
    sizes = inc.sum(axis=1)
    vals, counts = np.unique(sizes, return_counts=True)
    out = {"distribution": {int(v): int(c) for v, c in zip(vals, counts)}}
    if check_sections:
        ranks = set()
        ok = True
        for h in range(len(hyp)):
            sec = o.coords[inc[h]]
            ranks.add(rank_gf(f, sec))
            sub = PointSet.from_vectors(space, sec)
            r = verify_4general(sub)
            ok &= r.is_cap and not any(v[0] == "coplanar" for v in r.violations)
        out["sections_no4coplanar"] = bool(ok)
        out["section_ranks"] = sorted(ranks)
    return out


# ---------------------------------------------------------------------------


def abb_arc(q: int) -> PointSet:
    """Andre/Bruck-Bose image in AG(6, q) of the twisted cubic of PG(3, q^2)."""
    small = gf(q)
    big = make_field(small.p, 2 * small.k)
    coords = Coordinates(big, small)
    bs = Space(3, big)
    qq = big.q
    t = np.arange(qq)
    arc = np.stack([np.ones(qq, dtype=np.int64), t, big.vpow(t, 2), big.vpow(t, 3)], axis=1)
    arc[0, 2:] = 0
    arc = np.concatenate([arc, [[0, 0, 0, 1]]])
    plane = None
    hyp = bs.all_coords()
    for h in range(bs.size):
        acc = np.zeros(len(arc), dtype=np.int64)
        for i in range(4):
            acc = big.vadd(acc, big.vmul(hyp[h, i], arc[:, i]))
        if (acc != 0).all():
            plane = hyp[h]
            break
    if plane is None:
        raise RuntimeError("no plane of PG(3, q^2) external to the arc")
    lead = int(np.nonzero(plane)[0][0])
    rows = [plane] + [np.eye(4, dtype=np.int64)[j] for j in range(4) if j != lead]
    m = np.array(rows, dtype=np.int64)
    y = matmul_gf(big, arc, m.T)
    y = big.vmul(y, big.inv_table[y[:, :1]])
    space = pg(6, q)
    vecs = np.concatenate([np.ones((len(y), 1), dtype=np.int64)] + [coords.flatten_many(y[:, i]) for i in (1, 2, 3)], axis=1)
    return _emit(space, vecs, ConstructionSpec("abb_arc", {"q": q}, q * q + 1))


# ---------------------------------------------------------------------------


def _gf2_divmod(a: int, b: int):
    qout = 0
    db = b.bit_length()
    while a and a.bit_length() >= db:
        s = a.bit_length() - db
        qout |= 1 << s
        a ^= b << s
    return qout, a


GOLAY_G = (1 << 11) | (1 << 10) | (1 << 6) | (1 << 5) | (1 << 4) | (1 << 2) | 1


def golay_generator() -> int:
    """Degree-11 factor of X^23 - 1 over GF(2), found by trial division."""
    target = (1 << 23) | 1
    found = []
    for mid in range(1 << 10):
        g = (1 << 11) | (mid << 1) | 1
        if _gf2_divmod(target, g)[1] == 0:
            found.append(g)
    rev = int(f"{GOLAY_G:012b}"[::-1], 2)
    for g in found:
        if g in (GOLAY_G, rev):
            return g
    raise AssertionError("Golay factor not found")


def golay_cap23() -> PointSet:
    g = golay_generator()
    space = pg(10, 2)
    cols = []
    for i in range(23):
        r = _gf2_divmod(1 << i, g)[1]
        cols.append([(r >> j) & 1 for j in range(11)])
    return _emit(space, np.array(cols, dtype=np.int64), ConstructionSpec("golay_cap23", {}, 23))


def frame_secant_shadow(d: int) -> PointSet:
    """Points other than the frame on the secant lines of the frame of PG(2d, 2)."""
    s = frame(2 * d, 2)
    c = s.coords
    vecs = [(c[i] + c[j]) % 2 for i, j in combinations(range(len(c)), 2)]
    x = PointSet.from_vectors(s.space, np.array(vecs))
    if len(x) != (2 * d + 1) * (d + 1):
        raise AssertionError("secant shadow size")
    if (x.coords.sum(axis=1) % 2).any():
        raise AssertionError("secant shadow not in the hyperplane sum X_i = 0")
    return x


def hyperplane_sum_zero(n: int) -> np.ndarray:
    space = pg(n, 2)
    return np.nonzero(space.all_coords().sum(axis=1) % 2 == 0)[0]
