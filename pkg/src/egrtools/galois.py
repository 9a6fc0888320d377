"""Finite field GF(p^e) arithmetic backed by exp/log lookup tables.

Elements are plain integers in ``[0, q)``.  The integer encodes the
coefficient vector of a polynomial over the coefficient field in base
``p`` (base ``|F|`` when the field is built as an extension of another
field ``F``), least-significant digit = constant term.

The reducing modulus is always the lexicographically smallest monic
irreducible polynomial, coefficients compared constant-term first, so
every field -- and everything built on top of it -- is reproducible
byte-for-byte across runs.  Size caps: q <= 2**20 for ``GF``,
q**d <= 2**24 for ``Field.extension``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

MAX_FIELD_ORDER = 2**20
MAX_EXTENSION_ORDER = 2**24


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """Finite field of order ``q = p**e`` with table-based arithmetic.

    Use :func:`GF` or :meth:`Field.extension` to build instances.

    Attributes
    ----------
    p : characteristic (prime)
    e : degree over the prime field
    q : order, p**e
    modulus : monic irreducible polynomial used for reduction, as a list
        of coefficient-field indices in ascending degree (monic: last
        entry is 1).  For prime fields this is the conventional [0, 1].
    base : the coefficient field when built as an extension, else None.
    degree : degree over the coefficient field (= e for prime-built
        fields, = d for extensions).
    """

    def __init__(self, p: int, modulus: list[int], base: "Field | None" = None):
        self.base = base
        self.p = p
        self.modulus = list(modulus)
        self.degree = len(modulus) - 1
        csize = base.q if base is not None else p
        self._csize = csize
        self.q = csize**self.degree
        self.e = self.degree * (base.e if base is not None else 1)
        self._build_tables()

    # -- coefficient-field arithmetic (ints mod p, or the base field) --

    def _cadd(self, a: int, b: int) -> int:
        return (a + b) % self.p if self.base is None else self.base.add(a, b)

    def _csub(self, a: int, b: int) -> int:
        return (a - b) % self.p if self.base is None else self.base.sub(a, b)

    def _cmul(self, a: int, b: int) -> int:
        return (a * b) % self.p if self.base is None else self.base.mul(a, b)

    # -- digit vector <-> element index --

    def coords(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of ``a`` over the coefficient field."""
        if not 0 <= a < self.q:
            raise ValueError(f"element index {a} out of range for field of order {self.q}")
        v = []
        for _ in range(self.degree):
            a, r = divmod(a, self._csize)
            v.append(r)
        return tuple(v)

    def from_coords(self, v) -> int:
        idx = 0
        for c in reversed(list(v)):
            idx = idx * self._csize + c
        return idx

    def _vec_mul_mod(self, u: list[int], w: list[int]) -> list[int]:
        """Schoolbook product of two coefficient vectors, reduced by the modulus."""
        m = self.degree
        prod = [0] * (2 * m - 1)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, wj in enumerate(w):
                if wj:
                    prod[i + j] = self._cadd(prod[i + j], self._cmul(ui, wj))
        # reduce: x^t = -(modulus minus leading term) * x^(t-m), top down
        for t in range(2 * m - 2, m - 1, -1):
            c = prod[t]
            if c == 0:
                continue
            prod[t] = 0
            for j in range(m):
                prod[t - m + j] = self._csub(prod[t - m + j], self._cmul(c, self.modulus[j]))
        return prod[:m]

    def _raw_mul(self, a: int, b: int) -> int:
        return self.from_coords(self._vec_mul_mod(list(self.coords(a)), list(self.coords(b))))

    # -- table construction --

    def _build_tables(self):
        q = self.q
        if q == 2:
            self.generator = 1
            self._exp = [1]
            self._log = [0, 0]
            return
        factors = _prime_factors(q - 1)
        gen = None
        for g in range(2, q):
            if all(self._raw_pow(g, (q - 1) // r) != 1 for r in factors):
                gen = g
                break
        if gen is None:
            raise ArithmeticError("no multiplicative generator found; modulus is not irreducible")
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        if x != 1 or len(set(exp)) != q - 1:
            raise ArithmeticError("multiplicative group is not cyclic of order q-1")
        self.generator = gen
        self._exp = exp
        self._log = log

    def _raw_pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            n >>= 1
        return r

    # -- public arithmetic --

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        va, vb = self.coords(a), self.coords(b)
        return self.from_coords(self._cadd(x, y) for x, y in zip(va, vb))

    def sub(self, a: int, b: int) -> int:
        va, vb = self.coords(a), self.coords(b)
        return self.from_coords(self._csub(x, y) for x, y in zip(va, vb))

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        self.coords(a), self.coords(b)  # range check
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        self.coords(a)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("inversion of zero field element")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        """The field automorphism a -> a**p (p = characteristic)."""
        return self.pow(a, self.p)

    def mul_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        from math import gcd

        return (self.q - 1) // gcd(self._log[a], self.q - 1)

    def extension(self, d: int) -> "Field":
        """Degree-``d`` extension of this field.

        The result is GF(q**d) viewed as a d-dimensional vector space over
        this field: ``coords``/``from_coords`` convert between an element
        and its coefficient vector, and this field embeds as the elements
        with index < q (the constant polynomials), so the embedding is
        literally the identity on indices.
        """
        if d < 2:
            raise ValueError("extension degree must be at least 2")
        if self.q**d > MAX_EXTENSION_ORDER:
            raise ValueError(f"extension order {self.q}**{d} exceeds the cap {MAX_EXTENSION_ORDER}")
        return _extension_cached(self, d)

    def __repr__(self):
        if self.base is not None:
            return f"Field(GF({self.p}^{self.e}) as degree-{self.degree} extension of GF({self.base.q}))"
        return f"Field(GF({self.p}^{self.e}))" if self.e > 1 else f"Field(GF({self.p}))"


def _smallest_irreducible(csize: int, degree: int, cadd, csub, cmul) -> list[int]:
    """Lexicographically smallest monic irreducible polynomial of the given
    degree over a coefficient field, low-degree coefficients compared first.

    Irreducibility by trial division against every monic polynomial of
    degree 1..degree//2 (exhaustive factor test).
    """
    if degree == 1:
        return [0, 1]  # the polynomial x; never used for reduction

    def divides(div: list[int], poly: list[int]) -> bool:
        # div monic; remainder of poly / div == 0?
        rem = list(poly)
        dd = len(div) - 1
        for t in range(len(rem) - 1, dd - 1, -1):
            c = rem[t]
            if c == 0:
                continue
            for j in range(dd + 1):
                rem[t - dd + j] = csub(rem[t - dd + j], cmul(c, div[j]))
        return all(c == 0 for c in rem)

    monic_divisors = []
    for dd in range(1, degree // 2 + 1):
        for tail in product(range(csize), repeat=dd):
            monic_divisors.append(list(tail) + [1])

    for coeffs in product(range(csize), repeat=degree):
        cand = list(coeffs) + [1]
        if cand[0] == 0:
            continue  # divisible by x
        if not any(divides(d, cand) for d in monic_divisors):
            return cand
    raise ArithmeticError("no irreducible polynomial found")  # unreachable for q, degree valid


@lru_cache(maxsize=None)
def GF(p: int, e: int = 1) -> Field:
    """The finite field GF(p**e), given by characteristic and degree.

    p must be prime; note GF(4) is spelled GF(2, 2).  Deterministic: the
    modulus is the lexicographically smallest irreducible polynomial, so
    repeated calls (and separate runs) agree element-for-element.
    """
    if not isinstance(p, int) or not isinstance(e, int):
        raise TypeError("p and e must be integers")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime (did you mean GF(p, e) with p**e = {p}?)")
    if e < 1:
        raise ValueError("extension degree e must be >= 1")
    if p**e > MAX_FIELD_ORDER:
        raise ValueError(f"field order {p}**{e} exceeds the cap {MAX_FIELD_ORDER}")
    modulus = _smallest_irreducible(
        p, e, lambda a, b: (a + b) % p, lambda a, b: (a - b) % p, lambda a, b: (a * b) % p
    )
    return Field(p, modulus, base=None)


@lru_cache(maxsize=None)
def _extension_cached(F: Field, d: int) -> Field:
    modulus = _smallest_irreducible(F.q, d, F.add, F.sub, F.mul)
    return Field(F.p, modulus, base=F)
