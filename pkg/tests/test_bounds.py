from decimal import Decimal, getcontext
from math import floor

import pytest
from hypothesis import given, strategies as st

from fourgen.bounds import (
    ag_upper,
    bounds_report,
    ceil_2sqrt,
    m3_upper,
    nmds_lower,
    reference_values,
    simplified_applies,
    t3_counting,
    t3_lower,
    t3_lower_variants,
)

getcontext().prec = 80
PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64]


def _m3_decimal(n, q):
    d = Decimal(8 * q ** (n + 1) + q * q - 6 * q + 1)
    return (d.sqrt() + q - 3) / (2 * (q - 1))


def _cbrt(v: Decimal) -> Decimal:
    return v.copy_sign(1) ** (Decimal(1) / 3) * (1 if v >= 0 else -1) if v else Decimal(0)


def _t3_general_decimal(n, q):
    a = Decimal(6 * q ** (n + 1) - q * q - q)
    b = Decimal(q * q - 5 * q + 1)
    return _cbrt(a + b * _cbrt(a)) / (q - 1) + Decimal(q - 2) / (q - 1)


def _least_greater(v: Decimal) -> int:
    return floor(v) + 1


@given(st.integers(2, 12), st.sampled_from(PRIME_POWERS))
def test_m3_matches_high_precision(n, q):
    assert m3_upper(n, q).integer_bound == floor(_m3_decimal(n, q))


@given(st.integers(2, 12), st.sampled_from(PRIME_POWERS))
def test_t3_general_matches_high_precision(n, q):
    v = t3_lower_variants(n, q)["general"]
    assert v.integer_bound == _least_greater(_t3_general_decimal(n, q))


@given(st.integers(2, 12), st.sampled_from([2, 3, 4]))
def test_t3_simplified_matches_high_precision(n, q):
    v = t3_lower_variants(n, q)["simplified"]
    thr = _cbrt(Decimal(6 * q ** (n + 1) - 1)) / (q - 1)
    assert v.integer_bound == _least_greater(thr)
    assert t3_lower(n, q).integer_bound == max(b.integer_bound for b in t3_lower_variants(n, q).values())


def test_known_values():
    b = m3_upper(3, 2)
    assert b.integer_bound == 5 and b.attained and b.note == "equality case"
    b = m3_upper(4, 3)
    assert b.integer_bound == 11 and b.attained
    assert m3_upper(5, 5).integer_bound == 44
    assert t3_lower(3, 2).integer_bound == 5
    assert t3_lower(6, 2).integer_bound == 10
    assert abs(t3_lower_variants(6, 2)["simplified"].real_value - 767 ** (1 / 3)) < 1e-9
    assert "simplified" not in t3_lower_variants(3, 9)
    assert simplified_applies(3, 5) and not simplified_applies(5, 5)


def test_ag_bounds():
    assert ag_upper(5, 2).integer_bound == 6
    assert ag_upper(4, 3).integer_bound == 9
    assert ag_upper(4, 5).integer_bound == 28
    # even n, q = 2: floor(2^((n+1)/2) + 1/2) - 2
    for n in (2, 4, 6, 8):
        assert ag_upper(n, 2).integer_bound == floor(Decimal(2) ** (Decimal(n + 1) / 2) + Decimal("0.5")) - 2
    assert ag_upper(3, 3).integer_bound == 6  # ceil(3^1.5) = ceil(5.196)


def test_nmds():
    assert [ceil_2sqrt(q) for q in (4, 5, 9, 16, 8)] == [4, 5, 6, 8, 6]
    assert nmds_lower(4) == 9
    # q = 8: ceil(2 sqrt 8) = 6 is divisible by 2 and 8 = 2^3 has odd exponent >= 3
    assert nmds_lower(8) == 14
    assert nmds_lower(9) == 16


def test_reference_values():
    ref = reference_values(3, 8)
    assert {"quantity": "M3", "relation": "=", "value": 9} in ref
    assert any(r["relation"] == ">=" and r["value"] == 9 for r in reference_values(4, 4))
    assert {"quantity": "M3", "relation": "=", "value": 5} in reference_values(3, 3)
    rep = bounds_report(5, 5)
    assert rep["m3_upper"] == 44
    assert any(r.get("value") == 28 for r in rep["reference"])


def test_rejects():
    with pytest.raises(ValueError):
        m3_upper(1, 2)
    with pytest.raises(ValueError):
        m3_upper(3, 6)


@given(st.integers(2, 9), st.sampled_from([2, 3, 4, 5, 7, 8, 9]))
def test_counting_bound_brute(n, q):
    size = (q ** (n + 1) - 1) // (q - 1)
    x = 1
    while (q - 1) ** 2 * x * (x - 1) * (x - 2) // 6 + (q - 1) * x * (x - 1) // 2 + x < size:
        x += 1
    assert t3_counting(n, q).integer_bound == x
    # the closed form only weakens the count
    assert t3_lower_variants(n, q)["general"].integer_bound <= x


def test_simplified_variant_refuted_in_pg52():
    # the frame of PG(5,2) is complete 4-general with 7 points, its planes cover the space exactly once
    from fourgen import constructions as C
    from fourgen.genset import verify_complete

    x = C.frame(5, 2)
    assert len(x) == 7 and verify_complete(x).is_complete
    c = t3_counting(5, 2)
    assert c.integer_bound == 7 and c.attained
    assert t3_lower_variants(5, 2)["simplified"].integer_bound == 8
    assert t3_lower(5, 2).integer_bound == 8
