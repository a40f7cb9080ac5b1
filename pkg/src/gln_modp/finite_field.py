"""Exact arithmetic in finite fields F_{p^m}.

A field is presented by a prime p and a monic irreducible modulus polynomial
over F_p.  Elements are coefficient vectors in the modulus basis
(c_0 + c_1*x + ... + c_{m-1}*x^{m-1}), so equality is decidable and printing
is exact.  Only tiny fields are ever needed here (coefficients of Satake
expansions, roots of unity for characters), so all arithmetic is schoolbook.

Polynomials over F_p appear only internally and are held as tuples of ints
with the leading coefficient last; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _trim(poly):
    i = len(poly)
    while i > 0 and poly[i - 1] == 0:
        i -= 1
    return tuple(poly[:i])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_divmod(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    quo = [0] * max(0, len(a) - db)
    while len(_trim(a)) - 1 >= db and _trim(a):
        a = list(_trim(a))
        if len(a) - 1 < db:
            break
        c = (a[-1] * inv_lb) % p
        k = len(a) - 1 - db
        quo[k] = c
        for j, bj in enumerate(b):
            a[k + j] = (a[k + j] - c * bj) % p
    return _trim(quo), _trim(a)


def _poly_mod(a, b, p):
    return _poly_divmod(a, b, p)[1]


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return _trim(tuple((x - y) % p for x, y in zip(a, b)))


def poly_is_irreducible(poly, p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    poly = _trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for lower in product(range(p), repeat=d):
            g = lower + (1,)
            if not _poly_mod(poly, g, p):
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, m: int):
    """Smallest (lexicographic) monic irreducible of degree m over F_p."""
    if m == 1:
        return (0, 1)
    for lower in product(range(p), repeat=m):
        cand = lower + (1,)
        if poly_is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FqField:
    """The field F_{p^m} = F_p[x] / (modulus)."""

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1:
            raise ValueError("m must be >= 1")
        if modulus is None:
            modulus = default_modulus(p, m)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not poly_is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.size = p ** m
        self.zero = FqElem(self, (0,) * m)
        self.one = FqElem(self, (1,) + (0,) * (m - 1))

    def __call__(self, value) -> "FqElem":
        if isinstance(value, FqElem):
            if value.field is not self and value.field != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.m - 1)
            return FqElem(self, coeffs)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients")
        coeffs = coeffs + (0,) * (self.m - len(coeffs))
        return FqElem(self, coeffs)

    def parse(self, text: str) -> "FqElem":
        return self(tuple(int(t) for t in text.split(",")))

    def elements(self):
        for coeffs in product(range(self.p), repeat=self.m):
            yield FqElem(self, coeffs)

    def units(self):
        return (x for x in self.elements() if x)

    def __eq__(self, other):
        return (isinstance(other, FqField)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FqField(p={self.p}, m={self.m})"


@dataclass(frozen=True)
class FqElem:
    field: FqField
    coeffs: tuple

    def _check(self, other) -> "FqElem":
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FqElem) or other.field != self.field:
            raise ValueError("mixed-field arithmetic")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        p = self.field.p
        prod_ = _poly_mul(_trim(self.coeffs), _trim(other.coeffs), p)
        rem = _poly_mod(prod_, self.field.modulus, p)
        rem = rem + (0,) * (self.field.m - len(rem))
        return FqElem(self.field, rem)

    __rmul__ = __mul__

    def inverse(self) -> "FqElem":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in F_p[x]
        p = self.field.p
        r0, r1 = self.field.modulus, _trim(self.coeffs)
        s0, s1 = (), (1,)
        while r1:
            q, r = _poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
        # r0 is now a nonzero constant gcd, s0 * self = r0 (mod modulus)
        c_inv = pow(r0[0], p - 2, p)
        inv = _poly_mod(_poly_mul(s0, (c_inv,), p), self.field.modulus, p)
        inv = inv + (0,) * (self.field.m - len(inv))
        return FqElem(self.field, inv)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"Fq({self})"
