"""Counting bounds for 4-general sets, evaluated with exact integer arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, asdict
from math import comb, isqrt

from .gf import prime_power


@dataclass(frozen=True)
class BoundValue:
    name: str
    n: int
    q: int
    real_value: float  # for display only
    integer_bound: int  # floor for upper bounds; least admissible size for lower bounds
    attained: bool = False  # the real value is an integer equal to integer_bound
    note: str = ""

    def to_json(self) -> dict:
        return asdict(self)


def _check(n, q):
    if n < 2:
        raise ValueError("n >= 2")
    prime_power(q)


def _floor_div_sqrt(d: int, c: int, m: int) -> tuple[int, bool]:
    """floor((sqrt(d) + c) / m) and whether the quotient is exact."""
    s = isqrt(d)
    exact = s * s == d and (s + c) % m == 0
    return (s + c) // m, exact


def m3_upper(n: int, q: int) -> BoundValue:
    _check(n, q)
    d = 8 * q ** (n + 1) + q * q - 6 * q + 1
    val, exact = _floor_div_sqrt(d, q - 3, 2 * (q - 1))
    real = (d**0.5 + q - 3) / (2 * (q - 1))
    eq_case = (q, n) in {(2, 3), (3, 4)}
    note = "equality case" if eq_case else ""
    return BoundValue("m3_upper", n, q, real, val, exact, note)


def _general_ok(x: int, n: int, q: int) -> bool:
    """x > cbrt(A + B cbrt A)/(q-1) + (q-2)/(q-1), decided exactly."""
    a = 6 * q ** (n + 1) - q * q - q
    b = q * q - 5 * q + 1
    m = (q - 1) * x - (q - 2)
    if m <= 0:
        return False
    lhs = m**3 - a  # need lhs > b * cbrt(a)
    if b >= 0:
        return lhs > 0 and lhs**3 > b**3 * a
    # b < 0: lhs > -|b| cbrt(a)
    if lhs >= 0:
        return True
    return (-lhs) ** 3 < (-b) ** 3 * a


def _simplified_ok(x: int, n: int, q: int) -> bool:
    return ((q - 1) * x) ** 3 > 6 * q ** (n + 1) - 1


def _least(pred) -> int:
    """Least x >= 1 with pred(x), for pred monotone and false at 0."""
    lo, hi = 0, 1
    while not pred(hi):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


def simplified_applies(n: int, q: int) -> bool:
    return q in (2, 3, 4) or (q == 5 and n in (3, 4))


def t3_lower_variants(n: int, q: int) -> dict[str, BoundValue]:
    _check(n, q)
    out = {}
    a = 6 * q ** (n + 1) - q * q - q
    b = q * q - 5 * q + 1
    real = (a + b * a ** (1 / 3)) ** (1 / 3) / (q - 1) + (q - 2) / (q - 1)
    out["general"] = BoundValue("t3_lower", n, q, real, _least(lambda x: _general_ok(x, n, q)), note="general")
    if simplified_applies(n, q):
        real = (6 * q ** (n + 1) - 1) ** (1 / 3) / (q - 1)
        out["simplified"] = BoundValue("t3_lower", n, q, real, _least(lambda x: _simplified_ok(x, n, q)), note="simplified")
    return out


def t3_counting(n: int, q: int) -> BoundValue:
    """Least x with C(x,3)(q-1)^2 + C(x,2)(q-1) + x >= |PG(n, q)|: every point lies on a plane spanned by the set."""
    _check(n, q)
    size = (q ** (n + 1) - 1) // (q - 1)
    ok = lambda x: comb(x, 3) * (q - 1) ** 2 + comb(x, 2) * (q - 1) + x >= size
    x = _least(ok)
    tight = comb(x, 3) * (q - 1) ** 2 + comb(x, 2) * (q - 1) + x == size
    return BoundValue("t3_counting", n, q, float(x), x, tight, note="planes cover every point exactly" if tight else "")


def t3_lower(n: int, q: int) -> BoundValue:
    """Least size a complete 4-general set of PG(n, q) can have by counting; the stronger variant."""
    v = t3_lower_variants(n, q)
    return max(v.values(), key=lambda b: (b.integer_bound, b.note == "simplified"))


def ag_upper(n: int, q: int) -> BoundValue:
    """Known upper bound on 4-general sets of AG(n, q)."""
    _check(n, q)
    if q == 2 and n % 2 == 1:
        val = 2 ** ((n + 1) // 2) - 2
        real = float(val)
    elif q == 2:
        # floor(2^((n+1)/2) + 1/2) = floor((sqrt(2^(n+3)) + 1) / 2)
        val = (isqrt(2 ** (n + 3)) + 1) // 2 - 2
        real = 2 ** ((n + 1) / 2) + 0.5 - 2
    elif q == 3:
        t = 3**n
        s = isqrt(t)
        val = s if s * s == t else s + 1
        real = 3 ** (n / 2)
    else:
        val = isqrt(4 * q**n // (q - 2))
        real = 2 * q ** (n / 2) / (q - 2) ** 0.5
    return BoundValue("ag_upper", n, q, real, val)


def ceil_2sqrt(q: int) -> int:
    """ceil(2 sqrt(q)), exact."""
    t = 4 * q
    s = isqrt(t)
    return s if s * s == t else s + 1


def nmds_lower(q: int) -> int:
    p, r = prime_power(q)
    c = ceil_2sqrt(q)
    if r >= 3 and r % 2 == 1 and c % p == 0:
        return q + c
    return q + c + 1


def reference_values(n: int, q: int) -> list[dict]:
    """Known exact values and construction lower bounds for M3(n, q)."""
    _check(n, q)
    out = []
    if n == 3:
        out.append({"quantity": "M3", "relation": "=", "value": 5 if q in (2, 3) else q + 1})
    if n == 4:
        out.append({"quantity": "M3", "relation": ">=", "value": nmds_lower(q), "source": "NMDS sets from elliptic curves"})
    if q == 3 and n % 2 == 1 and n >= 3:
        d = (n + 1) // 2
        out.append({"quantity": "M3", "relation": ">=", "value": (3**d + 1) // 2, "source": "cyclic theta0"})
    if q == 4 and n % 2 == 0:
        d = n // 2
        out.append({"quantity": "M3", "relation": ">=", "value": (2 ** (2 * d + 1) + 1) // 3, "source": "cyclic theta0"})
    if q == 4 and n % 2 == 1 and n >= 3:
        d = (n + 1) // 2
        out.append({"quantity": "M3", "relation": ">=", "value": (4**d - 1) // 3, "source": "V_alpha"})
    if n == 5 and q % 3 == 1:
        out.append({"quantity": "M3", "relation": ">=", "value": 3 * (q + 1), "source": "three twisted cubics"})
    if n == 7:
        out.append({"quantity": "M3", "relation": ">=", "value": q**3 + 1, "source": "set O"})
    if (n, q) == (5, 5):
        out.append({"quantity": "M3", "relation": ">=", "value": 28, "source": "PG(5,5) example"})
    if (n, q) == (5, 16):
        out.append({"quantity": "M3", "relation": ">=", "value": 82, "source": "PG(5,16) example"})
    out.append({"quantity": "M3", "relation": "<=", "value": m3_upper(n, q).integer_bound, "source": "counting"})
    out.append({"quantity": "T3", "relation": ">=", "value": t3_lower(n, q).integer_bound, "source": "counting"})
    return out


def bounds_report(n: int, q: int) -> dict:
    return {
        "n": n,
        "q": q,
        "m3_upper": m3_upper(n, q).integer_bound,
        "m3_upper_attained": m3_upper(n, q).attained,
        "t3_lower": t3_lower(n, q).integer_bound,
        "t3_counting": t3_counting(n, q).integer_bound,
        "ag_upper": ag_upper(n, q).integer_bound,
        "reference": reference_values(n, q),
    }
