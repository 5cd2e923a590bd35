"""Small finite fields, elements encoded as integers ``0..q-1``.

Prime fields use residues.  GF(4), GF(8) and GF(9) use polynomial bases with
the fixed irreducibles x^2+x+1, x^3+x+1 and x^2+1; an element's integer code
holds its coefficients in base p, constant term first.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import GroupError

# q -> (p, k, coefficients of the monic irreducible, low degree first)
IRREDUCIBLES = {
    4: (2, 2, (1, 1, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (1, 0, 1)),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def supported_field_sizes() -> list[int]:
    return sorted([p for p in range(2, 32) if is_prime(p)] + list(IRREDUCIBLES))


class FiniteField:
    def __init__(self, q: int):
        if is_prime(q) and q <= 31:
            self.p, self.k = q, 1
            self.add = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        elif q in IRREDUCIBLES:
            self.p, self.k, poly = IRREDUCIBLES[q]
            self.add = [[self._padd(a, b) for b in range(q)] for a in range(q)]
            self.mul = [[self._pmul(a, b, poly) for b in range(q)] for a in range(q)]
        else:
            raise GroupError(f"unsupported field size {q}; use one of {supported_field_sizes()}")
        self.q = q
        self.neg = [self.add[a].index(0) for a in range(q)]
        self.inv = [None] + [self.mul[a].index(1) for a in range(1, q)]

    def _digits(self, a):
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def _code(self, digits):
        return sum(d * self.p**i for i, d in enumerate(digits))

    def _padd(self, a, b):
        return self._code([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _pmul(self, a, b, poly):
        p, k = self.p, self.k
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce with x^k = -(poly[0] + ... + poly[k-1] x^(k-1))
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i in range(k):
                    prod[deg - k + i] = (prod[deg - k + i] - c * poly[i]) % p
        return self._code(prod[:k])

    def primitive_element(self) -> int:
        for a in range(2, self.q) if self.q > 2 else [1]:
            x, n = a, 1
            while x != 1:
                x = self.mul[x][a]
                n += 1
            if n == self.q - 1:
                return a
        return 1


@lru_cache(maxsize=None)
def field(q: int) -> FiniteField:
    return FiniteField(q)
