"""Small prime-power fields ``F_{p^k}`` as polynomial residue rings.

Elements are tuples of ``k`` coefficients (constant term first) modulo a
monic irreducible polynomial found by exhaustive sieve.  Meant for
desk-scale enumeration, not speed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, m, p):
    """Remainder of ``a`` by monic ``m`` over ``F_p`` (coefficient lists, low first)."""
    a = [x % p for x in a]
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            for t in range(dm + 1):
                a[k - dm + t] = (a[k - dm + t] - c * m[t]) % p
    return _trim(a[:dm]) if dm else []


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_pow(a, n, p):
    result = [1]
    base = _trim(x % p for x in a)
    while n:
        if n & 1:
            result = poly_mul(result, base, p)
        base = poly_mul(base, base, p)
        n >>= 1
    return result


@lru_cache(maxsize=None)
def irreducible(p: int, k: int) -> tuple:
    """First monic irreducible polynomial of degree ``k`` over ``F_p`` in lexicographic order."""
    if k == 1:
        return (0, 1)
    divisors = []
    for d in range(1, k // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisors.append(list(tail) + [1])
    for tail in product(range(p), repeat=k):
        cand = list(tail) + [1]
        if cand[0] == 0:
            continue
        if all(poly_mod(cand, dv, p) for dv in divisors):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


class GF:
    """The field ``F_{p^k}``; elements are ``k``-tuples."""

    def __init__(self, p: int, k: int = 1):
        self.p = p
        self.k = k
        self.modulus = irreducible(p, k)
        self.order = p**k

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def elements(self):
        return product(range(self.p), repeat=self.k)

    def zero(self):
        return (0,) * self.k

    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def embed(self, n: int):
        return (n % self.p,) + (0,) * (self.k - 1)

    def _pad(self, a):
        a = list(a)
        return tuple(a + [0] * (self.k - len(a)))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        return self._pad(poly_mod(poly_mul(list(a), list(b), self.p), list(self.modulus), self.p))

    def pow(self, a, n: int):
        r = self.one()
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def eval_poly(self, coeffs, x):
        """Horner evaluation of an integer-coefficient polynomial (low first) at ``x``."""
        acc = self.zero()
        for cf in reversed(coeffs):
            acc = self.add(self.mul(acc, x), self.embed(cf))
        return acc
