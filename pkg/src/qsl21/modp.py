"""Modular rank certificates for exact cyclotomic matrices.

A ring homomorphism Q(zeta_n) -> F_p exists whenever p is a prime with
p = 1 (mod n) and no denominator in sight is divisible by p: send zeta_n
to any element of exact multiplicative order n in F_p*.  Ranks can only
drop under such a homomorphism, so

    rank mod p == full  =>  exact rank is full  (a certificate), while
    rank mod p  < full  =>  only a hint; callers must confirm deficiency
                            by an exact computation or witness.

Primes are kept below 2e6 so that accumulating `rank * p^2` terms in int64
numpy arithmetic cannot overflow during row reduction (4096 * (2e6)^2 is
still below 2^63).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from gmpy2 import is_prime, mpq

from .cyclo import CycloScalar, FieldError
from .linalg import Matrix

_PRIME_CAP = 2_000_000


@lru_cache(maxsize=None)
def modular_embedding(n: int, skip: int = 0) -> tuple[int, int]:
    """(p, z): a prime p = 1 mod n below the overflow cap and an element z
    of exact order n in F_p*.  `skip` picks later primes for retries."""
    count = 0
    start = _PRIME_CAP - (_PRIME_CAP % n) - n + 1
    for p in range(start, n, -n):
        if not is_prime(p):
            continue
        if count < skip:
            count += 1
            continue
        z = _order_n_element(p, n)
        if z is not None:
            return p, z
    raise FieldError(f"no usable prime p = 1 mod {n} below {_PRIME_CAP}")


def _order_n_element(p: int, n: int) -> int | None:
    if n == 1:
        return 1
    cof = (p - 1) // n
    for g in range(2, 200):
        z = pow(g, cof, p)
        if z == 1:
            continue
        # z^n = 1 automatically; exact order n iff z^(n/r) != 1 for primes r | n
        if all(pow(z, n // r, p) != 1 for r in _prime_factors(n)):
            return z
    return None


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def scalar_mod(x: CycloScalar, p: int, z: int) -> int:
    """The image of x in F_p under zeta -> z.  Raises if a denominator
    vanishes mod p."""
    acc, zp = 0, 1
    for c in x.coeffs:
        if c != 0:
            num, den = c.numerator, c.denominator
            if den % p == 0:
                raise FieldError("denominator vanishes modulo the chosen prime")
            acc = (acc + int(num) * pow(int(den), -1, p) % p * zp) % p
        zp = zp * z % p
    return acc


def matrix_mod(m: Matrix, n: int, p: int, z: int) -> np.ndarray:
    """Dense int64 image of a sparse exact matrix, entries lifted to
    conductor n first."""
    out = np.zeros((m.nrows, m.ncols), dtype=np.int64)
    for i, row in enumerate(m.rows):
        for j, x in row.items():
            out[i, j] = scalar_mod(x.lift(n) if x.n != n else x, p, z)
    return out


class ModularEchelon:
    """Incremental row reduction over F_p with numpy rows.

    Rows are kept reduced with pivot entries 1; reduction of an incoming
    vector is a single vectorized combination, safe in int64 because every
    intermediate is bounded by ncols * p^2 < 2^63.
    """

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.pivots: list[int] = []
        self.rows: list[np.ndarray] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.mod(v.astype(np.int64), self.p)
        if self.rows:
            coeffs = v[self.pivots]
            if coeffs.any():
                stack = np.stack(self.rows)
                v = np.mod(v - coeffs @ stack, self.p)
        return v

    def add(self, v: np.ndarray) -> bool:
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        piv = int(nz[0])
        v = v * pow(int(v[piv]), -1, self.p) % self.p
        for k, row in enumerate(self.rows):
            c = int(row[piv])
            if c:
                self.rows[k] = np.mod(row - c * v, self.p)
        self.pivots.append(piv)
        self.rows.append(v)
        return True


def rank_mod(rows, ncols: int, p: int) -> int:
    """Rank over F_p of an iterable of int64 numpy rows."""
    ech = ModularEchelon(ncols, p)
    for v in rows:
        ech.add(v)
    return ech.rank
