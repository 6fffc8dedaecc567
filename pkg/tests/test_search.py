import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fourgen import constructions as C
from fourgen.bounds import m3_upper, t3_counting
from fourgen.genset import counting_bound_holds, verify_complete
from fourgen.projspace import PointSet, pg
from fourgen.search import (
    OutOfScope,
    brute_force_complete,
    classify_complete,
    complete_supersets_of_basis,
    completed_y,
    greedy_complete,
    max_size,
)


def test_greedy_lex_is_deterministic():
    a = greedy_complete(space=pg(4, 3))
    b = greedy_complete(space=pg(4, 3))
    assert a.same_points(b)
    assert verify_complete(a).is_complete


@settings(max_examples=10)
@given(st.sampled_from([(3, 2), (4, 2), (3, 3), (5, 2), (4, 3), (3, 4)]), st.integers(0, 10**6))
def test_greedy_random_properties(nq, seed):
    n, q = nq
    x = greedy_complete(space=pg(n, q), order="random", seed=seed)
    rep = verify_complete(x)
    assert rep.is_4general and rep.is_complete
    assert t3_counting(n, q).integer_bound <= len(x) <= m3_upper(n, q).integer_bound
    assert counting_bound_holds(x)


def test_greedy_keeps_input():
    y = C.htw_y(2)
    z = greedy_complete(y)
    assert set(y.indices.tolist()) <= set(z.indices.tolist())
    assert z.same_points(completed_y(2))
    with pytest.raises(ValueError):
        greedy_complete(y, order="random")
    with pytest.raises(ValueError):
        greedy_complete(PointSet.from_vectors(pg(3, 2), [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))


def test_completed_y():
    z = completed_y(2)
    assert len(z) == 11 and verify_complete(z).is_complete


def test_brute_force_oracle_pg32():
    # every complete 4-general set of PG(3,2) is an elliptic quadric: PGL(4,2) has 20160/120 = 168 of them
    found = brute_force_complete(3, 2, 6)
    assert len(found) == 168
    assert all(len(t) == 5 for t in found)
    space, sup = complete_supersets_of_basis(3, 2)
    basis = set(space.index_of(np.eye(4, dtype=np.int64)).tolist())
    assert set(sup) == {t for t in found if basis <= set(t)}


def test_classification_mandatory():
    r = classify_complete(3, 2)
    assert [(c.size, c.aut_order) for c in r.classes] == [(5, 120)] and r.consistent
    r = classify_complete(4, 2)
    assert [(c.size, c.aut_order) for c in r.classes] == [(6, 720), (6, 120)] and r.consistent
    r = classify_complete(3, 3)
    assert [(c.size, c.aut_order) for c in r.classes] == [(5, 120)] and r.consistent
    assert r.to_json()["classes"][0]["aut"] == 120


def test_classification_scope():
    with pytest.raises(OutOfScope):
        classify_complete(5, 2)
    with pytest.raises(OutOfScope):
        classify_complete(6, 2, allow_optional=True)


def test_classification_optional_pg34():
    r = classify_complete(3, 4, allow_optional=True)
    assert [(c.size, c.aut_order) for c in r.classes] == [(5, 120)] and r.consistent


def test_max_size():
    assert max_size(3, 2).size == 5
    r = max_size(4, 3, budget=60)
    assert r.size == 11 and r.exhaustive
    assert max_size(3, 4).size == 5
