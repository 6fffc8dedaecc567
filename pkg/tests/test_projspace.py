from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fourgen.gf import gf
from fourgen.projspace import (
    PointSet,
    apply_projectivity,
    enumerate_points,
    general_position,
    group_closure,
    inverse_gf,
    matmul_gf,
    orbit,
    pg,
    pgl_order,
    rank_gf,
    solve_gf,
    span_members,
    transform,
)


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (3, 4), (4, 3), (5, 5), (3, 9), (2, 16)])
def test_point_count_and_index_roundtrip(n, q):
    space = pg(n, q)
    assert space.size == (q ** (n + 1) - 1) // (q - 1)
    c = space.all_coords()
    assert (space.index_of(c) == np.arange(space.size)).all()
    # normalized: leading nonzero coordinate is 1
    lead = c[np.arange(len(c)), np.argmax(c != 0, axis=1)]
    assert (lead == 1).all()


def test_index_order_pg23():
    pts = enumerate_points(2, 3)
    assert len(pts) == 13
    assert pts[0].coords == (1, 0, 0)
    assert pts[-1].coords == (0, 0, 1)
    assert [p.index for p in pts] == list(range(13))


@given(st.sampled_from([(2, 3), (3, 4), (3, 5), (4, 2), (2, 9)]), st.data())
def test_index_is_scalar_invariant(nq, data):
    n, q = nq
    space = pg(n, q)
    f = space.field
    v = np.array(data.draw(st.lists(st.integers(0, q - 1), min_size=n + 1, max_size=n + 1)))
    if not v.any():
        return
    lam = data.draw(st.integers(1, q - 1))
    assert space.index(v) == space.index(f.vmul(lam, v))


def _rank_oracle(f, m):
    """Rank from the number of vectors in the row space (q^rank), by enumeration."""
    m = np.asarray(m)
    span = set()
    for c in product(range(f.q), repeat=m.shape[0]):
        acc = np.zeros(m.shape[1], dtype=np.int64)
        for ci, row in zip(c, m):
            acc = f.vadd(acc, f.vmul(ci, row))
        span.add(tuple(acc.tolist()))
    r = 0
    while f.q**r < len(span):
        r += 1
    return r


@given(st.sampled_from([2, 3, 4, 5, 8, 9]), st.data())
def test_rank_against_span_count(q, data):
    f = gf(q)
    rows = data.draw(st.integers(1, 4))
    cols = data.draw(st.integers(1, 4))
    m = np.array(data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows)))
    assert rank_gf(f, m) == _rank_oracle(f, m)


@pytest.mark.parametrize("q", [2, 3, 4, 7, 16])
def test_inverse_and_solve(q, rng):
    f = gf(q)
    for _ in range(20):
        m = rng.integers(0, q, (4, 4))
        if rank_gf(f, m) < 4:
            continue
        inv = inverse_gf(f, m)
        assert (matmul_gf(f, m, inv) == np.eye(4, dtype=np.int64)).all()
        b = rng.integers(0, q, 4)
        x = solve_gf(f, m, b)
        assert (matmul_gf(f, m, x.reshape(4, 1)).reshape(-1) == b).all()


def test_pointset_rejections():
    space = pg(3, 2)
    with pytest.raises(ValueError):
        PointSet.from_vectors(space, [[1, 0, 0, 0], [1, 0, 0, 0]])
    with pytest.raises(ValueError):
        PointSet.from_vectors(space, [[0, 0, 0, 0]])
    with pytest.raises(ValueError):
        PointSet.from_vectors(space, [[2, 0, 0, 0]])
    with pytest.raises(ValueError):
        PointSet.from_indices(space, [0, 15])


def test_span_members_sizes():
    space = pg(4, 3)
    line = span_members(space, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]])
    plane = span_members(space, np.eye(5, dtype=np.int64)[:3])
    assert len(line) == 4 and len(plane) == 13
    assert set(line) <= set(plane)


def test_projectivity_and_orbits():
    space = pg(2, 2)
    # Singer cycle of PG(2,2): companion matrix of X^3 + X + 1 has order 7 and acts transitively
    m = np.array([[0, 0, 1], [1, 0, 1], [0, 1, 0]])
    assert len(orbit(space, [[1, 0, 0]], [m])) == 7
    assert len(group_closure(space.field, [m])) == 7
    with pytest.raises(ValueError):
        apply_projectivity(space, np.zeros((3, 3), dtype=np.int64), [[1, 0, 0]])
    x = PointSet.from_vectors(space, [[1, 0, 0], [0, 1, 0]])
    y = transform(x, m)
    assert len(y) == 2


def test_pgl_order():
    assert pgl_order(3, 2) == 20160
    assert pgl_order(1, 3) == 24
    assert pgl_order(2, 4) == 60480


def test_general_position():
    space = pg(3, 3)
    fr = np.concatenate([np.eye(4, dtype=np.int64), np.ones((1, 4), dtype=np.int64)])
    assert general_position(space, fr)
    assert not general_position(space, np.array([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 1], [1, 1, 1, 1]]))
