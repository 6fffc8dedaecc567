from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fourgen import constructions as C
from fourgen.aut import are_equivalent, aut_order, automorphisms, find_basis, find_frame
from fourgen.projspace import PointSet, inverse_gf, matmul_gf, pg, rank_gf, transform


def _all_matrices(p, d):
    vals = np.array(list(product(range(p), repeat=d * d)), dtype=np.int64)
    m = vals.reshape(-1, d, d)
    det = np.rint(np.linalg.det(m.astype(float))).astype(np.int64) % p
    return m[det != 0]


def _canon(v, p):
    # scale so the first nonzero coordinate is 1 (p prime)
    lead = np.argmax(v != 0, axis=-1)
    a = np.take_along_axis(v, lead[..., None], axis=-1)
    inv = np.array([0] + [pow(int(i), -1, p) for i in range(1, p)])
    return (v * inv[a]) % p


def _stabilizer_brute(coords, p):
    """Count projectivities fixing the set by running over all of GL(d, p)."""
    d = coords.shape[1]
    mats = _all_matrices(p, d)
    target = {tuple(r) for r in _canon(coords, p).tolist()}
    img = _canon(np.einsum("mij,kj->mki", mats, coords) % p, p)
    key = lambda rows: {tuple(r) for r in rows}
    hits = sum(1 for rows in img.tolist() if key(rows) == target)
    return hits // (p - 1)


@pytest.mark.parametrize(
    "build,order",
    [
        (lambda: C.frame(3, 2), 120),
        (lambda: PointSet.from_vectors(pg(3, 2), np.eye(4, dtype=np.int64)), 24),
        (lambda: C.elliptic_quadric(2), 120),
        (lambda: C.twisted_cubic(5), 120),
        (lambda: C.twisted_cubic(7), 336),
        (lambda: C.pg38_seven_set(), 6),
        (lambda: C.pg62(), 48),
    ],
)
def test_known_orders(build, order):
    assert aut_order(build()) == order


def test_frame_in_pg32_brute_force():
    x = C.frame(3, 2)
    assert _stabilizer_brute(x.coords, 2) == 120
    b = np.eye(4, dtype=np.int64)
    assert _stabilizer_brute(b, 2) == 24


@settings(max_examples=25)
@given(st.data())
def test_matches_brute_force_pg32(data):
    space = pg(3, 2)
    idx = data.draw(st.lists(st.integers(0, space.size - 1), min_size=4, max_size=8, unique=True))
    x = PointSet.from_indices(space, idx)
    if rank_gf(space.field, x.coords) < 4:
        return
    assert aut_order(x) == _stabilizer_brute(x.coords, 2)


@settings(max_examples=15)
@given(st.data())
def test_matches_brute_force_pg23(data):
    space = pg(2, 3)
    idx = data.draw(st.lists(st.integers(0, space.size - 1), min_size=3, max_size=7, unique=True))
    x = PointSet.from_indices(space, idx)
    if rank_gf(space.field, x.coords) < 3:
        return
    assert aut_order(x) == _stabilizer_brute(x.coords, 3)


def _random_invertible(field, d, rng):
    while True:
        m = rng.integers(field.q, size=(d, d))
        if rank_gf(field, m) == d:
            return m


@pytest.mark.parametrize("build", [lambda: C.frame(4, 3), lambda: C.htw_y(2), lambda: C.twisted_cubic(8), lambda: C.cyclic_theta0(2, 3)])
def test_invariant_under_conjugation(build, rng):
    x = build()
    m = _random_invertible(x.field, x.space.dim, rng)
    y = transform(x, m)
    assert aut_order(y) == aut_order(x)
    assert are_equivalent(x, y)


def test_automorphisms_fix_set():
    x = C.twisted_cubic(5)
    gens = automorphisms(x)
    assert len(gens) == aut_order(x)
    for g in gens[:20]:
        assert transform(x, g).same_points(x)


def test_inequivalent():
    space = pg(3, 2)
    frame = C.frame(3, 2)
    other = PointSet.from_vectors(space, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0]])
    assert not are_equivalent(frame, other)


def test_semilinear_twisted_cubic_q8():
    # Frobenius of GF(8) normalizes the set, so PGammaL gains a factor 3
    x = C.twisted_cubic(8)
    assert aut_order(x, semilinear=True) == 3 * aut_order(x)


def test_frame_and_basis_finders():
    x = C.cyclic_theta0(2, 4)
    fr = find_frame(x)
    assert fr is not None and len(fr) == x.space.dim + 1
    b = find_basis(PointSet.from_vectors(pg(3, 2), np.eye(4, dtype=np.int64)))
    assert b is not None and len(b) == 4
