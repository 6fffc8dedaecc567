from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fourgen import constructions as C
from fourgen.genset import (
    NotFourGeneralError,
    counting_bound_holds,
    coverage,
    extension_candidates,
    independent_subsets,
    is_4general_naive,
    nmds_check,
    secant_graph,
    verify_4general,
    verify_complete,
)
from fourgen.projspace import PointSet, pg, rank_gf


def _naive_candidates(x: PointSet):
    """Points whose addition keeps x free of 3 collinear and 4 coplanar points (rank oracle)."""
    f = x.field
    out = []
    for i in range(x.space.size):
        if i in x.index_set():
            continue
        p = x.space.coords_of(np.array([i]))
        ok = True
        for t in combinations(range(len(x)), 2):
            if rank_gf(f, np.concatenate([x.coords[list(t)], p])) < 3:
                ok = False
                break
        if ok:
            for t in combinations(range(len(x)), 3):
                if rank_gf(f, np.concatenate([x.coords[list(t)], p])) < 4:
                    ok = False
                    break
        if ok:
            out.append(i)
    return out


@given(st.sampled_from([(3, 2), (3, 3), (4, 2), (2, 4)]), st.data())
def test_secant_criterion_matches_rank_oracle(nq, data):
    n, q = nq
    space = pg(n, q)
    k = data.draw(st.integers(n + 1, min(n + 4, space.size)))
    idx = data.draw(st.lists(st.integers(0, space.size - 1), min_size=k, max_size=k, unique=True))
    x = PointSet.from_indices(space, idx)
    assert verify_4general(x).is_4general == is_4general_naive(space, x.coords)


@pytest.mark.parametrize(
    "build",
    [lambda: C.frame(4, 2), lambda: C.cyclic_theta0(2, 3), lambda: C.twisted_cubic(4), lambda: C.htw_y(2), lambda: C.frame(3, 3)],
)
def test_extension_candidates_match_rank_oracle(build):
    x = build()
    assert extension_candidates(x).tolist() == _naive_candidates(x)


def test_witnesses():
    space = pg(3, 2)
    x = PointSet.from_vectors(space, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 0]])
    rep = verify_4general(x)
    assert not rep.is_4general and rep.is_cap
    kinds = {k for k, _ in rep.violations}
    assert kinds == {"coplanar"}
    pts = rep.violations[0][1]
    assert rank_gf(space.field, space.coords_of(np.array(pts))) == 3
    y = PointSet.from_vectors(space, [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    rep = verify_4general(y)
    assert not rep.is_cap
    assert ("collinear", sorted(space.index_of(np.array([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]])).tolist())) in rep.violations
    with pytest.raises(NotFourGeneralError) as err:
        verify_complete(y)
    assert err.value.report is not None


def test_non_spanning_reported():
    space = pg(4, 2)
    x = PointSet.from_vectors(space, np.eye(5, dtype=np.int64)[:4])
    rep = verify_4general(x)
    assert rep.is_cap and not rep.spans_space and not rep.is_4general
    assert rep.violations[0][0] == "not_spanning"


def test_examples_from_tables():
    assert verify_complete(C.elliptic_quadric(2)).is_complete
    assert verify_complete(C.frame(3, 3)).is_complete
    assert verify_complete(C.frame(4, 2)).is_complete
    q3 = C.elliptic_quadric(3)
    rep = verify_4general(q3)
    assert rep.is_cap and not rep.is_4general
    y = C.htw_y(2)
    rep = verify_complete(y)
    assert rep.is_4general and not rep.is_complete
    assert all(k == "uncovered" for k, _ in rep.violations)


def test_frame_pg62_candidates_are_klein_points():
    x = C.frame(6, 2)
    assert set(extension_candidates(x).tolist()) == set(C.klein_quadric_points().tolist())


def test_coverage_size_formula_for_small_sets():
    # points + secant points + plane points are disjoint when the set is 4-general
    x = C.cyclic_theta0(3, 3)
    k, q = len(x), x.q
    cov = coverage(x)
    upper = k + comb(k, 2) * (q - 1) + comb(k, 3) * (q - 1) ** 2
    assert cov.sum() <= upper
    assert counting_bound_holds(x)


@pytest.mark.parametrize("build", [lambda: C.elliptic_quadric(2), lambda: C.cyclic_theta0(3, 3), lambda: C.v_alpha(2), lambda: C.golay_cap23()])
def test_secant_graph_is_triangular(build):
    x = build()
    g = secant_graph(x)
    k = len(x)
    assert g.vertices == comb(k, 2)
    assert g.triangular and g.shares_point_rule
    assert g.degree == {2 * (k - 2)} and g.lam == {k - 2}
    if k > 4:
        assert g.mu == {4}


def test_nmds_characterisation():
    # theta0 in PG(4,4): every 4 points span a solid, every 6 span the space
    x = C.cyclic_theta0(2, 4)
    c1, c2, c3 = nmds_check(x)
    assert c1 and c3
    assert independent_subsets(x) <= comb(len(x), 5)
