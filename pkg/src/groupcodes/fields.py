"""Exact arithmetic in one master finite field GF(p^m) and its subfields.

All algebra in this package happens inside a single "master" field chosen
large enough to contain every root and block field a given computation
needs.  A field element is a plain int:

* ``ZERO`` (== -1) is the zero element;
* ``k`` in ``[0, p^m - 2]`` is ``xi**k`` for the fixed primitive element
  ``xi`` (the class of ``x`` modulo the chosen modulus).

Multiplication/inversion are exponent arithmetic; addition goes through a
Zech-logarithm table (``1 + xi**k = xi**zech[k]``).  Subfields are viewed
through :class:`Subfield`, which also carries dense numpy lookup tables so
code-level linear algebra can run on small integer indices instead of
master-field logs.

The modulus is the lexicographically smallest primitive polynomial of
degree m over GF(p) (coefficients compared from the x^(m-1) coefficient
down to the constant), so every run of the library reproduces the same
discrete logs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

ZERO = -1

# Hard ceiling on master-field size: the exp/log/zech tables are O(p^m).
DEFAULT_FIELD_BUDGET = 2**24


class FieldBudgetError(ValueError):
    """Raised when a requested field would exceed the table budget."""


class MissingSubfieldError(ValueError):
    """Raised when a requested subfield does not embed in the master field."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending (trial division; n is small)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def mult_order(a: int, n: int) -> int:
    """Multiplicative order of a modulo n (requires gcd(a, n) = 1)."""
    import math

    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1, no multiplicative order")
    if n == 1:
        return 1
    order = 1
    x = a % n
    while x != 1:
        x = (x * a) % n
        order += 1
    return order


def split_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^e with p prime; raises if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in prime_factors(q):
        e = 0
        m = q
        while m % p == 0:
            m //= p
            e += 1
        if m == 1:
            return p, e
    raise ValueError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# modulus search (dense little-endian coefficient lists over GF(p))


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    m = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    # reduce by the monic modulus
    for i in range(len(res) - 1, m - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(m):
                res[i - m + j] = (res[i - m + j] - c * mod[j]) % p
    res = res[:m]
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    return res


def _poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    acc = list(base)
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, mod, p)
        acc = _poly_mulmod(acc, acc, mod, p)
        e >>= 1
    return result


def _x_is_primitive(mod: list[int], p: int, group_order: int, prime_divs: list[int]) -> bool:
    """True iff x generates the full unit group of GF(p)[x]/(mod).

    An element of order p^m - 1 forces the quotient ring to be a field, so
    this single test establishes both irreducibility and primitivity.
    """
    if mod[0] == 0:  # x divides mod, x is not a unit
        return False
    x = [0, 1]
    if _poly_powmod(x, group_order, mod, p) != [1]:
        return False
    for ell in prime_divs:
        if _poly_powmod(x, group_order // ell, mod, p) == [1]:
            return False
    return True


def smallest_primitive_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree m.

    Candidates x^m + c_{m-1} x^{m-1} + ... + c_0 are ordered by the tuple
    (c_{m-1}, ..., c_0).  Returned little-endian including the leading 1.
    """
    group_order = p**m - 1
    prime_divs = prime_factors(group_order)
    for tail in itertools.product(range(p), repeat=m):
        # tail = (c_{m-1}, ..., c_0)
        coeffs = [tail[m - 1 - i] for i in range(m)] + [1]  # little-endian
        if _x_is_primitive(coeffs, p, group_order, prime_divs):
            return tuple(coeffs)
    raise RuntimeError(f"no primitive polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------
# master field


class FieldTable:
    """Dense discrete-log tables for GF(p^m).

    Attributes
    ----------
    p, m : characteristic and extension degree over the prime field
    order : p^m
    mult_order : p^m - 1
    modulus : little-endian coefficients of the primitive modulus
    exp : numpy array, exp[k] = base-p packed coefficient vector of xi^k
    log : numpy array indexed by packed value; log[0] = ZERO
    zech : numpy array, zech[k] = log(1 + xi^k) (ZERO where 1 + xi^k = 0)
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...],
                 exp: np.ndarray, log: np.ndarray, zech: np.ndarray):
        self.p = p
        self.m = m
        self.order = p**m
        self.mult_order = self.order - 1
        self.modulus = modulus
        self.exp = exp
        self.log = log
        self.zech = zech
        self.one = 0
        self._subfields: dict[int, Subfield] = {}
        # dlog of -1: xi^((p^m-1)/2) for odd p, 1 == -1 for p = 2
        self.minus_one = 0 if p == 2 else self.mult_order // 2

    def __repr__(self):
        return f"FieldTable(GF({self.p}^{self.m}))"

    # -- scalar ops ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        if a > b:
            a, b = b, a
        z = self.zech[b - a]
        if z == ZERO:
            return ZERO
        return (a + int(z)) % self.mult_order

    def neg(self, a: int) -> int:
        if a == ZERO or self.p == 2:
            return a
        return (a + self.mult_order // 2) % self.mult_order

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % self.mult_order

    def inv(self, a: int) -> int:
        if a == ZERO:
            raise ZeroDivisionError("inverse of zero field element")
        return (-a) % self.mult_order

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == ZERO:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return self.one if e == 0 else ZERO
        return (a * e) % self.mult_order

    def equal(self, a: int, b: int) -> bool:
        return a == b

    # -- structure ----------------------------------------------------------

    def element_from_packed(self, packed: int) -> int:
        return int(self.log[packed])

    def packed(self, a: int) -> int:
        if a == ZERO:
            return 0
        return int(self.exp[a])

    def prime_coords(self, a: int) -> tuple[int, ...]:
        """Coefficients of a over the prime-field power basis (length m)."""
        v = self.packed(a)
        out = []
        for _ in range(self.m):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def from_prime_scalar(self, c: int) -> int:
        """Embed an integer (mod p) as a field element."""
        c %= self.p
        if c == 0:
            return ZERO
        return int(self.log[c])

    def nth_root_of_unity(self, n: int) -> int:
        if n <= 0 or self.mult_order % n != 0:
            raise ValueError(f"GF({self.p}^{self.m}) has no primitive {n}-th root of unity")
        return (self.mult_order // n) % self.mult_order

    def subfield(self, q: int) -> "Subfield":
        sf = self._subfields.get(q)
        if sf is None:
            sf = Subfield(self, q)
            self._subfields[q] = sf
        return sf


def _build_exp_table(p: int, m: int, modulus: tuple[int, ...]) -> np.ndarray:
    """Packed coefficient vectors of xi^k for k = 0..p^m-2.

    Multiplication by x is a linear map on coefficient vectors; the orbit of
    1 under that map is computed in blocks with one small matmul per block.
    """
    n = p**m - 1
    # A[j, i]: contribution of old coeff j to new coeff i under v -> x*v
    A = np.zeros((m, m), dtype=np.int64)
    for j in range(m - 1):
        A[j, j + 1] = 1
    for i in range(m):
        A[m - 1, i] = (-modulus[i]) % p

    block = min(n, 4096)
    states = np.zeros((block, m), dtype=np.int64)
    states[0, 0] = 1
    for k in range(1, block):
        states[k] = states[k - 1] @ A % p

    weights = np.array([p**i for i in range(m)], dtype=np.int64)
    exp = np.empty(n, dtype=np.int64)
    exp[:block] = states @ weights

    if n > block:
        # jump matrix for a whole block: A^block mod p
        Ab = np.eye(m, dtype=np.int64)
        e = block
        base = A.copy()
        while e:
            if e & 1:
                Ab = Ab @ base % p
            base = base @ base % p
            e >>= 1
        pos = block
        while pos < n:
            states = states @ Ab % p
            take = min(block, n - pos)
            exp[pos:pos + take] = states[:take] @ weights
            pos += take
    return exp


# Optional precomputed exp tables keyed by (p, m), seeded by the CLI disk
# cache before build_field runs.  Values are (modulus, exp array).
_EXP_SEEDS: dict[tuple[int, int], tuple[tuple[int, ...], np.ndarray]] = {}


@lru_cache(maxsize=None)
def build_field(p: int, m: int, budget: int = DEFAULT_FIELD_BUDGET) -> FieldTable:
    """Construct (and cache) the GF(p^m) tables."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    order = p**m
    if order > budget:
        raise FieldBudgetError(
            f"GF({p}^{m}) has {order} elements, over the table budget {budget}")

    modulus = smallest_primitive_modulus(p, m)
    seed = _EXP_SEEDS.get((p, m))
    if seed is not None and seed[0] == modulus and seed[1].shape == (order - 1,):
        exp = seed[1].astype(np.int64, copy=False)
    else:
        exp = _build_exp_table(p, m, modulus)

    log = np.full(order, ZERO, dtype=np.int64)
    log[exp] = np.arange(order - 1, dtype=np.int64)
    if int((log != ZERO).sum()) != order - 1:
        raise RuntimeError("exp table is not a full multiplicative orbit")

    # zech[k] = log(1 + xi^k); adding 1 only touches the constant coefficient
    c0 = exp % p
    zech = log[exp - c0 + (c0 + 1) % p]
    return FieldTable(p, m, modulus, exp, log, zech)


# ---------------------------------------------------------------------------
# subfields


MAX_TABLE_ORDER = 4096


class Subfield:
    """The copy of GF(q) inside a master field, with dense index tables.

    Elements get compact indices 0..q-1: index 0 is zero and index i >= 1 is
    gen^(i-1) where gen = xi^step is the canonical subfield generator.
    numpy tables (add_t, mul_t, neg_t, inv_t) operate on these indices.
    """

    def __init__(self, master: FieldTable, q: int):
        p, e = split_prime_power(q)
        if p != master.p or master.m % e != 0:
            raise MissingSubfieldError(
                f"GF({q}) does not embed in GF({master.p}^{master.m})")
        self.master = master
        self.q = q
        self.p = p
        self.degree = e  # over the prime field
        self.step = master.mult_order // (q - 1)
        self.gen = self.step if q > 2 else 0  # gen of GF(2) is 1 itself
        if q > MAX_TABLE_ORDER:
            raise FieldBudgetError(f"subfield GF({q}) too large for dense index tables")
        self._build_tables()

    def __repr__(self):
        return f"Subfield(GF({self.q}) of GF({self.p}^{self.master.m}))"

    # -- element/index conversion ------------------------------------------

    def contains(self, a: int) -> bool:
        return a == ZERO or a % self.step == 0

    def index(self, a: int) -> int:
        if a == ZERO:
            return 0
        if a % self.step:
            raise ValueError("element not in subfield")
        return 1 + (a // self.step)

    def element(self, i: int) -> int:
        if i == 0:
            return ZERO
        return (i - 1) * self.step

    def elements(self):
        """All subfield elements as master ints, in index order."""
        yield ZERO
        for k in range(self.q - 1):
            yield k * self.step

    def dlog(self, a: int) -> int | None:
        """Discrete log of a w.r.t. the subfield generator (None for zero)."""
        if a == ZERO:
            return None
        return self.index(a) - 1

    def frobenius(self, a: int) -> int:
        """a -> a^q (identity on this subfield, used on extension elements)."""
        return self.master.pow(a, self.q)

    # -- numpy tables --------------------------------------------------------

    def _build_tables(self):
        q = self.q
        F = self.master
        elems = list(self.elements())
        dt = np.int16 if q <= 2**14 else np.int32
        add_t = np.empty((q, q), dtype=dt)
        mul_t = np.empty((q, q), dtype=dt)
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                add_t[i, j] = self.index(F.add(a, b))
                mul_t[i, j] = self.index(F.mul(a, b))
        neg_t = np.array([self.index(F.neg(a)) for a in elems], dtype=dt)
        inv_t = np.zeros(q, dtype=dt)
        for i, a in enumerate(elems):
            if i:
                inv_t[i] = self.index(F.inv(a))
        self.add_t = add_t
        self.mul_t = mul_t
        self.neg_t = neg_t
        self.inv_t = inv_t

    def to_indices(self, row) -> np.ndarray:
        return np.array([self.index(a) for a in row], dtype=self.add_t.dtype)

    def to_elements(self, idx_row) -> list[int]:
        return [self.element(int(i)) for i in idx_row]


# ---------------------------------------------------------------------------
# derived constants


def sqrt_minus_one(sub: Subfield) -> int:
    """The canonical square root of -1 in GF(q), q ≡ 1 (mod 4).

    Of the two roots the one with the smaller master discrete log is chosen.
    """
    if sub.q % 4 != 1:
        raise ValueError(f"-1 is not a square in GF({sub.q})")
    F = sub.master
    k = F.mult_order // 4
    cand = sorted((k, 3 * k))
    for c in cand:
        if F.mul(c, c) == F.minus_one:
            return c
    raise AssertionError("no 4th root of unity found")  # pragma: no cover


def solve_sum_of_squares(sub: Subfield, c: int) -> tuple[int, int]:
    """Deterministic (u, v) in GF(q)^2 with u^2 + v^2 = c.

    Scans u in subfield index order and picks the square root v with the
    smaller index.  Always solvable in a finite field.
    """
    F = sub.master
    for u in sub.elements():
        w = F.sub(c, F.mul(u, u))
        v = _sqrt_in_subfield(sub, w)
        if v is not None:
            return u, v
    raise AssertionError(f"no sum-of-squares decomposition for {c}")  # pragma: no cover


def _sqrt_in_subfield(sub: Subfield, w: int) -> int | None:
    F = sub.master
    if w == ZERO:
        return ZERO
    if sub.p == 2:
        return F.pow(w, sub.q // 2)  # squaring is bijective
    d = sub.dlog(w)
    if d % 2:  # odd dlog: a non-square of GF(q)
        return None
    r = sub.element(1 + d // 2)
    return min(r, F.neg(r))
