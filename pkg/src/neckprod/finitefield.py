"""Finite fields F_{p^k} and brute-force counting of monic irreducibles.

Elements of F_{p^k} are degree-<k coefficient vectors over F_p reduced mod
a fixed monic irreducible modulus, encoded as integer codes
sum v_i p^i in [0, q).  The modulus is chosen deterministically (the
lexicographically smallest irreducible, comparing coefficient tuples from
the constant term upward), so contexts reproduce across runs and
platforms.  Small fields additionally carry plain add/mul/inv lookup
tables derived from that representation; these are ordinary Cayley tables,
not Zech/discrete-log tables.

Two independent irreducibility tests are provided:

* is_irreducible_trial -- exhaustive long division by every monic
  polynomial of degree 1..deg(f)//2; the slow oracle.
* is_irreducible_rabin -- x^(q^n) == x (mod f) plus
  gcd(x^(q^(n/l)) - x, f) = 1 for each prime l | n.

Counting sweeps the full space of q^n monic polynomials.  The sweep runs
on a vectorized block engine (numpy) so exhaustive desk-scale counts stay
within seconds; the scalar tests above are the reference semantics and the
engine is held to them in the test suite.  Counts above the enumeration
budget are refused outright rather than truncated.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

DEFAULT_BUDGET = 1 << 24
_TABLE_LIMIT = 256  # build element lookup tables when q <= this
_BLOCK = 1 << 16


class NotPrimeError(ValueError):
    """Raised when a field characteristic fails the primality check."""


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed the configured budget."""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """(p, k) with q = p**k and p prime, or None if q is not a prime power.

    Works by trial-dividing out the smallest prime factor and checking the
    remaining cofactor is a power of it.
    """
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return (q, 1)
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def _prime_factors(n: int) -> list[int]:
    factors = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    return factors


# ---------------------------------------------------------------------------
# Polynomials over the prime field F_p (modulus selection, element arithmetic)
# ---------------------------------------------------------------------------


def _fp_rem(f: list[int], g: tuple[int, ...], p: int) -> list[int]:
    # remainder of f mod monic g, coefficients low-to-high
    r = list(f)
    d = len(g) - 1
    for j in range(len(r) - 1, d - 1, -1):
        lead = r[j]
        if lead:
            for i in range(d):
                if g[i]:
                    r[j - d + i] = (r[j - d + i] - lead * g[i]) % p
            r[j] = 0
    return r[:d]


def _fp_is_irreducible(f: tuple[int, ...], p: int) -> bool:
    # monic f over F_p, trial division by all monic polys of degree <= deg/2
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for free in itertools.product(range(p), repeat=d):
            g = free + (1,)
            if not any(_fp_rem(list(f), g, p)):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    # lex-smallest monic irreducible of degree k, scanning (c0, .., c_{k-1})
    for free in itertools.product(range(p), repeat=k):
        candidate = free + (1,)
        if _fp_is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible of degree {k} over F_{p} found")


# ---------------------------------------------------------------------------
# Field contexts
# ---------------------------------------------------------------------------


class FieldContext:
    """Arithmetic context for F_{p^k} with a fixed irreducible modulus.

    Element codes are integers in [0, q); code sum v_i p^i stands for the
    coefficient vector (v_0, .., v_{k-1}).  Codes 0 and 1 are the additive
    and multiplicative identities.  Instances are immutable after
    construction and safe to share between threads.

    build_field selects the modulus deterministically; constructing a
    context directly with an explicit modulus is allowed, and the modulus
    is verified irreducible by trial division either way.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        if not is_prime(p):
            raise NotPrimeError(f"p={p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree k must be >= 1, got {k}")
        modulus = tuple(modulus)
        if k == 1:
            if modulus != (0, 1):
                raise ValueError("prime fields use the identity modulus x, i.e. (0, 1)")
        else:
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {k}")
            if not all(0 <= c < p for c in modulus):
                raise ValueError("modulus coefficients must be reduced mod p")
            if not _fp_is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._mul_table: list[list[int]] | None = None
        self._inv_table: list[int] | None = None
        if k >= 2 and self.q <= _TABLE_LIMIT:
            self._build_tables()
        self._np_cache: dict[str, np.ndarray] = {}

    def __repr__(self):
        return f"FieldContext(p={self.p}, k={self.k}, modulus={self.modulus})"

    def __eq__(self, other):
        if not isinstance(other, FieldContext):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # -- element encoding ---------------------------------------------------

    def element_vector(self, code: int) -> tuple[int, ...]:
        """Coefficient vector (v_0, .., v_{k-1}) of an element code."""
        if not 0 <= code < self.q:
            raise ValueError(f"element code {code} outside [0, {self.q})")
        out = []
        for _ in range(self.k):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def element_code(self, vector) -> int:
        """Inverse of element_vector."""
        if len(vector) != self.k:
            raise ValueError(f"vector length {len(vector)} != k={self.k}")
        code = 0
        for v in reversed(vector):
            if not 0 <= v < self.p:
                raise ValueError(f"coefficient {v} outside [0, {self.p})")
            code = code * self.p + v
        return code

    # -- element arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.k):
            out += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.k):
            out += ((-a) % p) * shift
            a //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_direct(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of the zero element")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self._inv_direct(a)

    def frobenius(self, a: int) -> int:
        """a**p, the p-power Frobenius on element codes."""
        result = 1
        base = a
        e = self.p
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _mul_direct(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        av = self.element_vector(a)
        bv = self.element_vector(b)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(av):
            if ai:
                for j, bj in enumerate(bv):
                    if bj:
                        prod[i + j] = (prod[i + j] + ai * bj) % p
        mod = self.modulus
        for j in range(2 * k - 2, k - 1, -1):
            lead = prod[j]
            if lead:
                for i in range(k):
                    if mod[i]:
                        prod[j - k + i] = (prod[j - k + i] - lead * mod[i]) % p
                prod[j] = 0
        return self.element_code(tuple(prod[:k]))

    def _inv_direct(self, a: int) -> int:
        # extended Euclid over F_p[x] between the element and the modulus
        p = self.p
        r0 = list(self.modulus)
        r1 = list(self.element_vector(a))
        s0, s1 = [0], [1]
        while any(r1):
            while r1 and r1[-1] == 0:
                r1.pop()
            d1 = len(r1) - 1
            lead_inv = pow(r1[-1], p - 2, p)
            q_poly = [0] * (len(r0) - len(r1) + 1)
            r = list(r0)
            for j in range(len(r) - 1, d1 - 1, -1):
                c = (r[j] * lead_inv) % p
                if c:
                    q_poly[j - d1] = c
                    for i in range(d1 + 1):
                        r[j - d1 + i] = (r[j - d1 + i] - c * r1[i]) % p
            # s_next = s0 - q * s1
            s_next = list(s0) + [0] * max(0, len(q_poly) + len(s1) - 1 - len(s0))
            for i, qi in enumerate(q_poly):
                if qi:
                    for j, sj in enumerate(s1):
                        if sj:
                            s_next[i + j] = (s_next[i + j] - qi * sj) % p
            r0, r1 = r1, [c % p for c in r[:d1]]
            s0, s1 = s1, s_next
        while r0 and r0[-1] == 0:
            r0.pop()
        if len(r0) != 1:
            raise ZeroDivisionError("element is not invertible (modulus not irreducible?)")
        scale = pow(r0[0], p - 2, p)
        vec = [(c * scale) % p for c in s0[: self.k]]
        vec += [0] * (self.k - len(vec))
        return self.element_code(tuple(vec))

    def _build_tables(self):
        q = self.q
        self._mul_table = [
            [self._mul_direct(a, b) for b in range(q)] for a in range(q)
        ]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._inv_direct(a)
        self._inv_table = inv

    # -- numpy views used by the block engine ---------------------------------

    def _np_table(self, name: str) -> np.ndarray:
        if name not in self._np_cache:
            q = self.q
            if name == "mul":
                if self._mul_table is None:
                    raise BudgetExceededError(
                        f"no lookup tables for q={q} > {_TABLE_LIMIT}; "
                        "vectorized counting unavailable"
                    )
                arr = np.array(self._mul_table, dtype=np.int64)
            elif name == "sub":
                arr = np.array(
                    [[self.sub(a, b) for b in range(q)] for a in range(q)],
                    dtype=np.int64,
                )
            elif name == "frob":
                arr = np.array([self.frobenius(a) for a in range(q)], dtype=np.int64)
            else:
                raise KeyError(name)
            self._np_cache[name] = arr
        return self._np_cache[name]

    # -- element rendering ----------------------------------------------------

    def element_str(self, code: int) -> str:
        """Human-readable element: plain integer for prime fields, a
        polynomial in the generator 'a' for extensions."""
        if self.k == 1:
            return str(code)
        vec = self.element_vector(code)
        terms = []
        for i in range(self.k - 1, -1, -1):
            v = vec[i]
            if v == 0:
                continue
            if i == 0:
                terms.append(str(v))
            elif i == 1:
                terms.append("a" if v == 1 else f"{v}a")
            else:
                terms.append(f"a^{i}" if v == 1 else f"{v}a^{i}")
        return " + ".join(terms) if terms else "0"


def build_field(p: int, k: int) -> FieldContext:
    """F_{p^k} with the lexicographically smallest irreducible modulus.

    For k = 1 the modulus is the identity polynomial x.  Non-prime p is
    rejected with NotPrimeError.
    """
    if not is_prime(p):
        raise NotPrimeError(f"p={p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree k must be >= 1, got {k}")
    if k == 1:
        modulus: tuple[int, ...] = (0, 1)
    else:
        modulus = _smallest_irreducible(p, k)
    return FieldContext(p, k, modulus)


# ---------------------------------------------------------------------------
# Monic polynomials over F_q
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonicPoly:
    """Monic polynomial over a FieldContext.

    coeffs holds element codes, constant term first; the last entry must
    be the multiplicative identity.
    """

    field: FieldContext
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("MonicPoly needs at least one coefficient")
        q = self.field.q
        for c in self.coeffs:
            if not 0 <= c < q:
                raise ValueError(f"coefficient code {c} outside [0, {q})")
        if self.coeffs[-1] != 1:
            raise ValueError("leading coefficient must be the identity")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        fld = self.field
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if fld.k == 1 or c in (0, 1):
                cs = str(c)
            else:
                es = fld.element_str(c)
                cs = f"({es})" if " " in es else es
            if i == 0:
                terms.append(cs)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if c == 1 else f"{cs}{xs}")
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        """JSON coefficient array: plain integers for prime fields, nested
        coefficient vectors for extensions."""
        if self.field.k == 1:
            return list(self.coeffs)
        return [list(self.field.element_vector(c)) for c in self.coeffs]


def _index_coeffs(q: int, n: int, idx: int) -> tuple[int, ...]:
    # lex rank -> free coefficients (c_0 most significant digit)
    out = [0] * n
    for j in range(n - 1, -1, -1):
        idx, out[j] = divmod(idx, q)
    return tuple(out)


def enumerate_monic(field: FieldContext, n: int, budget: int = DEFAULT_BUDGET):
    """Yield all q^n monic degree-n polynomials in lexicographic
    coefficient order (constant term most significant, coefficients
    ordered by element code).

    Refuses outright when q^n exceeds the enumeration budget.
    """
    if n < 1:
        raise ValueError(f"degree n must be >= 1, got {n}")
    total = field.q**n
    if total > budget:
        raise BudgetExceededError(
            f"enumerating q^n = {total} monic polynomials exceeds the "
            f"budget of {budget}"
        )
    for idx in range(total):
        yield MonicPoly(field, _index_coeffs(field.q, n, idx) + (1,))


# ---------------------------------------------------------------------------
# Scalar polynomial arithmetic over F_q (reference irreducibility tests)
# ---------------------------------------------------------------------------


def _poly_rem_is_zero(field: FieldContext, f: list[int], g: list[int]) -> bool:
    # does monic g divide f?
    r = list(f)
    d = len(g) - 1
    sub, mul = field.sub, field.mul
    for j in range(len(r) - 1, d - 1, -1):
        lead = r[j]
        if lead:
            for i in range(d):
                if g[i]:
                    r[j - d + i] = sub(r[j - d + i], mul(lead, g[i]))
            r[j] = 0
    return not any(r[:d])


def _poly_mulmod(field: FieldContext, a: list[int], b: list[int], f: list[int]) -> list[int]:
    # a, b of degree < n; f monic of degree n; result reduced, length n
    n = len(f) - 1
    add, mul, sub = field.add, field.mul, field.sub
    prod = [0] * (2 * n - 1) if n > 1 else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = add(prod[i + j], mul(ai, bj))
    for j in range(len(prod) - 1, n - 1, -1):
        lead = prod[j]
        if lead:
            for i in range(n):
                if f[i]:
                    prod[j - n + i] = sub(prod[j - n + i], mul(lead, f[i]))
            prod[j] = 0
    return prod[:n]


def _poly_powmod(field: FieldContext, base: list[int], e: int, f: list[int]) -> list[int]:
    n = len(f) - 1
    result = [0] * n
    result[0] = 1
    b = list(base)
    while e:
        if e & 1:
            result = _poly_mulmod(field, result, b, f)
        e >>= 1
        if e:
            b = _poly_mulmod(field, b, b, f)
    return result


def _poly_trim(c: list[int]) -> list[int]:
    out = list(c)
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_gcd_is_one(field: FieldContext, a: list[int], b: list[int]) -> bool:
    # gcd over F_q[x]; only the "is the gcd constant" verdict is needed
    a = _poly_trim(a)
    b = _poly_trim(b)
    sub, mul, inv = field.sub, field.mul, field.inv
    while b:
        d = len(b) - 1
        lead_inv = inv(b[-1])
        r = list(a)
        for j in range(len(r) - 1, d - 1, -1):
            c = mul(r[j], lead_inv)
            if c:
                for i in range(d):
                    if b[i]:
                        r[j - d + i] = sub(r[j - d + i], mul(c, b[i]))
                r[j] = 0
        a, b = b, _poly_trim(r[:d] if d > 0 else [])
    return len(a) == 1


def _x_rep(field: FieldContext, f: list[int]) -> list[int]:
    # the polynomial x reduced mod f, as a length-(deg f) vector
    n = len(f) - 1
    if n == 1:
        return [field.neg(f[0])]
    rep = [0] * n
    rep[1] = 1
    return rep


def is_irreducible_trial(f: MonicPoly) -> bool:
    """Irreducibility by exhaustive trial division.

    True iff no monic polynomial of degree 1..deg(f)//2 divides f.  This
    is the slow oracle against which the Rabin test is validated.
    """
    n = f.degree
    if n < 1:
        raise ValueError("irreducibility is undefined for degree 0")
    field = f.field
    q = field.q
    fc = list(f.coeffs)
    for d in range(1, n // 2 + 1):
        for gidx in range(q**d):
            g = list(_index_coeffs(q, d, gidx)) + [1]
            if _poly_rem_is_zero(field, fc, g):
                return False
    return True


def is_irreducible_rabin(f: MonicPoly) -> bool:
    """Rabin's irreducibility test.

    f of degree n is irreducible over F_q iff x^(q^n) == x (mod f) and
    gcd(x^(q^(n/l)) - x, f) = 1 for every prime l dividing n.  Powers are
    computed by repeated squaring in the quotient ring.
    """
    n = f.degree
    if n < 1:
        raise ValueError("irreducibility is undefined for degree 0")
    field = f.field
    fc = list(f.coeffs)
    x = _x_rep(field, fc)
    checkpoints = {n // l for l in _prime_factors(n)}
    t = list(x)
    for j in range(1, n + 1):
        t = _poly_powmod(field, t, field.q, fc)
        if j in checkpoints:
            diff = [field.sub(ti, xi) for ti, xi in zip(t, x)]
            if not _poly_gcd_is_one(field, fc, diff):
                return False
    return t == x


# ---------------------------------------------------------------------------
# Vectorized block engine
# ---------------------------------------------------------------------------
#
# Blocks of monic polynomials are held as (rows, n) int64 arrays of element
# codes (free coefficients; the leading 1 is implicit).  Prime fields use
# direct mod-p arithmetic; extensions use the lookup tables via fancy
# indexing.  Verdicts match the scalar tests row for row.


def _block_coeffs(q: int, n: int, lo: int, hi: int) -> np.ndarray:
    idx = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((hi - lo, n), dtype=np.int64)
    for j in range(n - 1, -1, -1):
        idx, out[:, j] = np.divmod(idx, q)
    return out


def _batch_supported(field: FieldContext) -> bool:
    return field.k == 1 or field._mul_table is not None


def _trial_flags_block(field: FieldContext, n: int, lo: int, hi: int) -> np.ndarray:
    q, p, k = field.q, field.p, field.k
    rows = hi - lo
    if n == 1:
        return np.ones(rows, dtype=bool)
    work = np.empty((rows, n + 1), dtype=np.int64)
    work[:, :n] = _block_coeffs(q, n, lo, hi)
    work[:, n] = 1
    if k >= 2:
        mul_t = field._np_table("mul")
        sub_t = field._np_table("sub")
    reducible = np.zeros(rows, dtype=bool)
    alive_idx = np.arange(rows)
    cur = work
    for d in range(1, n // 2 + 1):
        for gidx in range(q**d):
            g = np.array(_index_coeffs(q, d, gidx), dtype=np.int64)
            r = cur.copy()
            for j in range(n, d - 1, -1):
                lead = r[:, j]
                if k == 1:
                    r[:, j - d : j] = (r[:, j - d : j] - lead[:, None] * g[None, :]) % p
                else:
                    r[:, j - d : j] = sub_t[r[:, j - d : j], mul_t[lead[:, None], g[None, :]]]
            divisible = ~r[:, :d].any(axis=1)
            if divisible.any():
                reducible[alive_idx[divisible]] = True
                keep = ~divisible
                alive_idx = alive_idx[keep]
                cur = cur[keep]
                if alive_idx.size == 0:
                    return ~reducible
    return ~reducible


def _batch_pow_q(field: FieldContext, t: np.ndarray, fmat: np.ndarray) -> np.ndarray:
    # rowwise t^q mod f: k rounds of (coefficientwise p-power, spread by p,
    # reduce), using (sum a_i x^i)^p = sum a_i^p x^(pi) in characteristic p
    p, k, n = field.p, field.k, fmat.shape[1]
    rows = t.shape[0]
    if k >= 2:
        frob_t = field._np_table("frob")
        mul_t = field._np_table("mul")
        sub_t = field._np_table("sub")
    for _ in range(k):
        spread = np.zeros((rows, p * (n - 1) + 1), dtype=np.int64)
        if k == 1:
            spread[:, :: p] = t
        else:
            spread[:, :: p] = frob_t[t]
        for j in range(p * (n - 1), n - 1, -1):
            lead = spread[:, j]
            if k == 1:
                spread[:, j - n : j] = (spread[:, j - n : j] - lead[:, None] * fmat) % p
            else:
                spread[:, j - n : j] = sub_t[spread[:, j - n : j], mul_t[lead[:, None], fmat]]
        t = spread[:, :n]
    return t


def _rabin_flags_block(field: FieldContext, n: int, lo: int, hi: int) -> np.ndarray:
    q = field.q
    rows = hi - lo
    if n == 1:
        return np.ones(rows, dtype=bool)
    fmat = _block_coeffs(q, n, lo, hi)
    x = np.zeros((rows, n), dtype=np.int64)
    x[:, 1] = 1
    checkpoints = {n // l for l in _prime_factors(n)}
    saved: dict[int, np.ndarray] = {}
    t = x
    for j in range(1, n + 1):
        t = _batch_pow_q(field, t, fmat)
        if j in checkpoints:
            saved[j] = t
    flags = (t == x).all(axis=1)
    # survivors have all factor degrees dividing n; finish them with the
    # gcd conditions on the saved intermediate powers
    for ridx in np.nonzero(flags)[0]:
        fc = [int(c) for c in fmat[ridx]] + [1]
        xr = [0] * n
        xr[1] = 1
        for arr in saved.values():
            diff = [field.sub(int(c), xi) for c, xi in zip(arr[ridx], xr)]
            if not _poly_gcd_is_one(field, fc, diff):
                flags[ridx] = False
                break
    return flags


def _scalar_flags_block(field, n, lo, hi, method):
    test = is_irreducible_trial if method == "trial" else is_irreducible_rabin
    out = np.empty(hi - lo, dtype=bool)
    for i, idx in enumerate(range(lo, hi)):
        poly = MonicPoly(field, _index_coeffs(field.q, n, idx) + (1,))
        out[i] = test(poly)
    return out


def _flags_range(field, n, lo, hi, method) -> np.ndarray:
    if not _batch_supported(field):
        return _scalar_flags_block(field, n, lo, hi, method)
    parts = []
    for blk_lo in range(lo, hi, _BLOCK):
        blk_hi = min(blk_lo + _BLOCK, hi)
        if method == "trial":
            parts.append(_trial_flags_block(field, n, blk_lo, blk_hi))
        else:
            parts.append(_rabin_flags_block(field, n, blk_lo, blk_hi))
    return parts[0] if len(parts) == 1 else np.concatenate(parts)


def irreducible_flags(
    field: FieldContext, n: int, method: str = "rabin", budget: int = DEFAULT_BUDGET
) -> np.ndarray:
    """Boolean verdict for every monic degree-n polynomial, in
    enumeration order.  Same budget rule as enumerate_monic."""
    if method not in ("trial", "rabin"):
        raise ValueError(f"unknown method {method!r}; expected 'trial' or 'rabin'")
    if n < 1:
        raise ValueError(f"degree n must be >= 1, got {n}")
    total = field.q**n
    if total > budget:
        raise BudgetExceededError(
            f"scanning q^n = {total} monic polynomials exceeds the budget of {budget}"
        )
    return _flags_range(field, n, 0, total, method)


def _count_range(args) -> int:
    p, k, n, lo, hi, method = args
    field = build_field(p, k)
    return int(_flags_range(field, n, lo, hi, method).sum())


def count_irreducibles(
    field: FieldContext,
    n: int,
    method: str = "rabin",
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> int:
    """Number of monic degree-n irreducibles over F_q by full enumeration
    with the chosen test ('trial' or 'rabin').

    The q^n sweep may be partitioned into contiguous blocks counted in
    parallel (workers > 1); the result is independent of the worker count.
    """
    if method not in ("trial", "rabin"):
        raise ValueError(f"unknown method {method!r}; expected 'trial' or 'rabin'")
    if n < 1:
        raise ValueError(f"degree n must be >= 1, got {n}")
    total = field.q**n
    if total > budget:
        raise BudgetExceededError(
            f"counting q^n = {total} monic polynomials exceeds the budget of {budget}"
        )
    if workers <= 1:
        return int(_flags_range(field, n, 0, total, method).sum())
    bounds = np.linspace(0, total, workers + 1, dtype=np.int64)
    jobs = [
        (field.p, field.k, n, int(lo), int(hi), method)
        for lo, hi in zip(bounds[:-1], bounds[1:])
        if hi > lo
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_range, jobs))
