"""Finite fields GF(p^k) with exp/log/Zech tables.

Elements are plain integers in [0, q): the base-p digits of the integer,
least significant first, are the coefficients of the residue polynomial
(so 0 is zero and 1 is one).  The modulus is encoded the same way, including
its leading coefficient, e.g. X^4 + X + 1 over GF(2) is 0b10011 = 19.
"""

from __future__ import annotations

import functools
import re
from itertools import product

import numpy as np

MAX_Q = 1 << 20
MAX_DEGREE = 20
_TABLE_Q = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


# ---------------------------------------------------------------------------
# polynomials over GF(p) as coefficient lists, lowest degree first


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _digits(x: int, p: int, k: int | None = None) -> list[int]:
    out = []
    while x:
        out.append(x % p)
        x //= p
    if k is not None:
        out += [0] * (k - len(out))
    return out


def _undigits(d, p: int) -> int:
    x = 0
    for c in reversed(d):
        x = x * p + c
    return x


def _pmod(a, m, p):
    a = _trim(list(a))
    m = _trim(list(m))
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(poly: list[int], p: int) -> bool:
    """Ben-Or test for a polynomial over GF(p) given as a coefficient list."""
    f = _trim(list(poly))
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(k // 2):
        xp = _ppowmod(xp, p, f, p)
        g = _pgcd(f, _psub(xp, x, p), p)
        if len(g) > 1:
            return False
    return True


# ---------------------------------------------------------------------------


class Field:
    """GF(p^k) with a fixed primitive element ``generator``.

    Construct through :func:`make_field` so instances are shared.
    """

    def __init__(self, p: int, k: int, modulus: int | None = None):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if k < 1:
            raise ValueError("k must be positive")
        if k > MAX_DEGREE or p**k > MAX_Q:
            raise ValueError(f"GF({p}^{k}) exceeds the supported size q <= 2^20")
        self.p, self.k = p, k
        self.q = q = p**k
        if modulus is None:
            modulus, gen = _default_modulus(p, k)
        else:
            gen = None
            _check_modulus(modulus, p, k)
        self.modulus = modulus
        self._mod_digits = _digits(modulus, p, k + 1)

        if gen is None:
            xres = self._x_residue()
            gen = xres if self._order_is_full(xres) else None
            if gen is None:
                gen = next(g for g in range(2, q) if self._order_is_full(g))
        self.generator = gen

        exp = [0] * (q - 1)
        log = [-1] * q
        e = 1
        for i in range(q - 1):
            exp[i] = e
            log[e] = i
            e = self._slow_mul(e, gen)
        if e != 1 or any(log[x] < 0 for x in range(1, q)):
            raise ValueError("generator is not primitive")
        self._exp = exp
        self._log = log
        # zech[m] = log(1 + w^m), -1 when 1 + w^m = 0
        zech = [-1] * (q - 1)
        for m in range(q - 1):
            s = self._add_one(exp[m])
            zech[m] = log[s] if s else -1
        self._zech = zech
        self.exp_table = np.array(exp + exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)
        self.zech_table = np.array(zech, dtype=np.int64)
        self._neg = [self._slow_neg(x) for x in range(q)]
        self.neg_table = np.array(self._neg, dtype=np.int64)
        inv = [0] * q
        for x in range(1, q):
            inv[x] = exp[(-log[x]) % (q - 1)]
        self._inv = inv
        self.inv_table = np.array(inv, dtype=np.int64)
        self._add_tab = None
        self._mul_tab = None

    # -- construction helpers ------------------------------------------------

    def _x_residue(self):
        if self.k > 1:
            return self.p
        # modulus X + c: X = -c
        return (-self._mod_digits[0]) % self.p

    def _slow_mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        prod = _pmul(_digits(a, p), _digits(b, p), p)
        return _undigits(_pmod(prod, self._mod_digits, p), p)

    def _order_is_full(self, g):
        if g == 0:
            return False
        n = self.q - 1
        for r in prime_factors(n) if n > 1 else []:
            if self._slow_pow(g, n // r) == 1:
                return False
        return True

    def _slow_pow(self, g, e):
        out = 1
        while e:
            if e & 1:
                out = self._slow_mul(out, g)
            g = self._slow_mul(g, g)
            e >>= 1
        return out

    def _add_one(self, x):
        p = self.p
        d0 = x % p
        return x - d0 + (d0 + 1) % p

    def _slow_neg(self, x):
        p = self.p
        if p == 2:
            return x
        return _undigits([(-d) % p for d in _digits(x, p)], p)

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self._log[a], self._log[b]
        z = self._zech[(lb - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._exp[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("negative power of 0")
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int, j: int = 1) -> int:
        """a^(p^j)."""
        return self.pow(a, self.p ** (j % self.k))

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of 0")
        return self._log[a]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def arith(self, op: str, *operands):
        """Tagged dispatch: add, sub, mul, div, inv, neg, pow, frobenius."""
        fn = {
            "add": self.add,
            "sub": self.sub,
            "mul": self.mul,
            "div": self.div,
            "inv": self.inv,
            "neg": self.neg,
            "pow": self.pow,
            "frobenius": self.frobenius,
        }.get(op)
        if fn is None:
            raise ValueError(f"unknown field operation {op!r}")
        for x in operands[:2] if op in ("add", "sub", "mul", "div") else operands[:1]:
            if not 0 <= x < self.q:
                raise ValueError(f"{x} is not an element of GF({self.q})")
        return fn(*operands)

    # -- vectorised arithmetic -------------------------------------------------

    @property
    def add_table(self) -> np.ndarray:
        if self._add_tab is None:
            if self.q > _TABLE_Q:
                raise ValueError("addition table only built for q <= 1024")
            a = np.arange(self.q, dtype=np.int64)
            self._add_tab = self._vadd_slow(a[:, None], a[None, :])
        return self._add_tab

    @property
    def mul_table(self) -> np.ndarray:
        if self._mul_tab is None:
            if self.q > _TABLE_Q:
                raise ValueError("multiplication table only built for q <= 1024")
            a = np.arange(self.q, dtype=np.int64)
            self._mul_tab = self._vmul_slow(a[:, None], a[None, :])
        return self._mul_tab

    def _vadd_slow(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        out = np.where(a == 0, b, a).copy()
        both = (a != 0) & (b != 0)
        la = self.log_table[a[both]]
        lb = self.log_table[b[both]]
        z = self.zech_table[(lb - la) % (self.q - 1)]
        res = np.where(z < 0, 0, self.exp_table[(la + np.maximum(z, 0)) % (self.q - 1)])
        out[both] = res
        return out

    def _vmul_slow(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        la = self.log_table[a]
        lb = self.log_table[b]
        out = self.exp_table[(la + lb) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vadd(self, a, b) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.q <= _TABLE_Q:
            return self.add_table[a, b]
        return self._vadd_slow(a, b)

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.neg_table[b])

    def vmul(self, a, b) -> np.ndarray:
        if self.q <= _TABLE_Q:
            return self.mul_table[a, b]
        return self._vmul_slow(a, b)

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        out = self.exp_table[(self.log_table[a] * e) % (self.q - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    # -- misc ----------------------------------------------------------------

    def header(self) -> str:
        return f"field p={self.p} k={self.k} modulus={self.modulus}"

    def __repr__(self):
        return f"Field(p={self.p}, k={self.k}, modulus={self.modulus})"

    def __reduce__(self):
        return (make_field, (self.p, self.k, self.modulus))


def _check_modulus(modulus: int, p: int, k: int) -> None:
    if not p**k <= modulus < 2 * p**k:
        raise ValueError(f"modulus {modulus} does not encode a monic degree-{k} polynomial over GF({p})")
    if not is_irreducible(_digits(modulus, p), p):
        raise ValueError(f"modulus {modulus} is reducible over GF({p})")


def _default_modulus(p: int, k: int) -> tuple[int, int | None]:
    """Smallest encoding of a monic irreducible with X primitive, else smallest irreducible."""
    q = p**k
    first_irr = None
    for m in range(q, 2 * q):
        d = _digits(m, p)
        if not is_irreducible(d, p):
            continue
        if first_irr is None:
            first_irr = m
        x = p if k > 1 else (-d[0]) % p
        if x == 0:
            continue
        if _poly_order_full(x, d, p, k):
            return m, x
    return first_irr, None


def _poly_order_full(x, mod_digits, p, k):
    n = p**k - 1
    if n == 1:
        return True
    for r in prime_factors(n):
        if k == 1:
            if pow(x, n // r, p) == 1:
                return False
        elif _ppowmod(_digits(x, p), n // r, mod_digits, p) == [1]:
            return False
    return True


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int = 1, modulus: int | None = None) -> Field:
    """Return GF(p^k); ``modulus`` overrides the default defining polynomial."""
    if modulus is None:
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if k < 1 or p**k > MAX_Q:
            raise ValueError(f"unsupported field GF({p}^{k})")
        m, _ = _default_modulus(p, k)
        return make_field(p, k, m)
    return Field(p, k, modulus)


def gf(q: int, modulus: int | None = None) -> Field:
    p, k = prime_power(q)
    return make_field(p, k, modulus)


_HEADER_RE = re.compile(r"^field\s+p=(\d+)\s+k=(\d+)\s+modulus=(\d+)\s*$")


def parse_header(line: str) -> Field:
    m = _HEADER_RE.match(line.strip())
    if not m:
        raise ValueError(f"bad field header: {line!r}")
    p, k, mod = map(int, m.groups())
    return make_field(p, k, mod)


def poly_encode(coeffs: list[int], p: int) -> int:
    """Encode a coefficient list (lowest degree first) as an integer."""
    return _undigits(coeffs, p)


# ---------------------------------------------------------------------------
# subfields and coordinates over subfields


def subfield_embed(big: Field, small: Field | int) -> np.ndarray:
    """Embedding GF(small_q) -> big as an array indexed by small elements."""
    if isinstance(small, int):
        small = gf(small)
    if small.p != big.p or big.k % small.k:
        raise ValueError(f"GF({small.q}) is not a subfield of GF({big.q})")
    if small is big:
        return np.arange(big.q, dtype=np.int64)
    if small.k == 1:
        return np.arange(small.q, dtype=np.int64)
    root = _find_root(big, small)
    powers = [1]
    for _ in range(small.k - 1):
        powers.append(big.mul(powers[-1], root))
    out = np.zeros(small.q, dtype=np.int64)
    for x in range(small.q):
        acc = 0
        for c, bp in zip(_digits(x, small.p, small.k), powers):
            if c:
                acc = big.add(acc, big.mul(c, bp))
        out[x] = acc
    return out


def _find_root(big: Field, small: Field) -> int:
    step = (big.q - 1) // (small.q - 1)
    coeffs = small._mod_digits
    for i in range(1, small.q - 1):
        beta = big.exp(i * step)
        acc = 0
        for c in reversed(coeffs):
            acc = big.add(big.mul(acc, beta), c)
        if acc == 0:
            return beta
    raise AssertionError("no root of the subfield modulus found")


def subfield_elements(big: Field, small_q: int) -> list[int]:
    """Solutions of x^small_q = x in ``big``."""
    return [x for x in range(big.q) if big.pow(x, small_q) == x]


class Coordinates:
    """Coordinates of ``big`` as a vector space over the subfield ``small``.

    ``basis`` is a list of big-field elements; it defaults to the powers of
    ``big.generator``.  ``flatten`` returns a tuple of small-field elements.
    """

    def __init__(self, big: Field, small: Field, basis: list[int] | None = None):
        self.big, self.small = big, small
        self.m = big.k // small.k
        self.embed = subfield_embed(big, small)
        if basis is None:
            basis = [big.pow(big.generator, i) for i in range(self.m)]
        if len(basis) != self.m:
            raise ValueError(f"basis needs {self.m} elements")
        self.basis = list(basis)
        combos = np.array(list(product(range(small.q), repeat=self.m)), dtype=np.int64).reshape(-1, self.m)
        vals = np.zeros(len(combos), dtype=np.int64)
        for i, b in enumerate(self.basis):
            vals = big.vadd(vals, big.vmul(self.embed[combos[:, i]], b))
        table = np.full((big.q, self.m), -1, dtype=np.int64)
        table[vals] = combos
        if (table[:, 0] < 0).any():
            raise ValueError("basis is linearly dependent over the subfield")
        self.table = table
        self._unembed = np.full(big.q, -1, dtype=np.int64)
        self._unembed[self.embed] = np.arange(small.q)

    def flatten(self, x: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.table[x])

    def flatten_many(self, xs) -> np.ndarray:
        return self.table[np.asarray(xs, dtype=np.int64)]

    def unflatten(self, coords) -> int:
        acc = 0
        for c, b in zip(coords, self.basis):
            acc = self.big.add(acc, self.big.mul(int(self.embed[c]), b))
        return acc

    def to_small(self, x: int) -> int:
        """Inverse of the embedding; x must lie in the subfield."""
        v = int(self._unembed[x])
        if v < 0:
            raise ValueError(f"{x} is not in the subfield GF({self.small.q})")
        return v
