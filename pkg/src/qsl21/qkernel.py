"""Root-of-unity context and shared q-combinatorics.

Everything downstream works over a fixed primitive l-th root of unity
q = zeta_l.  The q-bracket [x] = (q^x - q^-x)/(q - q^-1) appears in two
guises: at integer arguments (qint) and at a "shifted parameter" [mu + s]
where only lam = q^mu is known (qbracket); mu itself is never used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from gmpy2 import mpq

from .cyclo import CycloScalar, cyclo, rat


class DomainError(ValueError):
    """Raised for arguments outside an operation's domain."""


@dataclass(frozen=True)
class QContext:
    """A root of unity q of order l >= 3, with l' = l (l odd) or l/2 (l even)."""

    l: int
    lprime: int = field(init=False)
    q: CycloScalar = field(init=False)
    qinv: CycloScalar = field(init=False)

    def __post_init__(self):
        if self.l < 3:
            raise DomainError(f"order of q must be >= 3, got {self.l}")
        object.__setattr__(self, "lprime", self.l if self.l % 2 else self.l // 2)
        object.__setattr__(self, "q", cyclo(self.l, 1))
        object.__setattr__(self, "qinv", cyclo(self.l, -1))

    def qpow(self, m: int) -> CycloScalar:
        return cyclo(self.l, m)

    @property
    def qdiff(self) -> CycloScalar:
        """q - q^-1, the ubiquitous denominator."""
        return self.q - self.qinv


def qint(ctx: QContext, m: int) -> CycloScalar:
    """The q-integer [m] = (q^m - q^-m)/(q - q^-1)."""
    return (ctx.qpow(m) - ctx.qpow(-m)) / ctx.qdiff


def qbracket(ctx: QContext, lam: CycloScalar, s: int) -> CycloScalar:
    """[mu + s] for q^mu = lam, i.e. (lam q^s - lam^-1 q^-s)/(q - q^-1)."""
    if not isinstance(lam, CycloScalar):
        lam = rat(lam)
    if lam.is_zero():
        raise DomainError("qbracket needs a nonzero eigenvalue")
    return (lam * ctx.qpow(s) - lam.inverse() * ctx.qpow(-s)) / ctx.qdiff


def chebyshev1(l: int, t: CycloScalar) -> CycloScalar:
    """First-kind Chebyshev polynomial P_l(t), P_l(cos x) = cos(l x)."""
    if l < 0:
        raise DomainError("degree must be nonnegative")
    if not isinstance(t, CycloScalar):
        t = rat(t)
    p_prev, p_cur = rat(1), t
    if l == 0:
        return p_prev
    for _ in range(l - 1):
        p_prev, p_cur = p_cur, rat(2) * t * p_cur - p_prev
    return p_cur


def centre_poly_terms(l: int):
    """The (m, n, coefficient) triples of the sum part of the centre polynomial.

    Coefficient is l/(m-1) * binom(m+n-1, n+1) * binom(l-m, n), an exact
    rational (the prefactor need not be an integer termwise).
    """
    out = []
    for m in range(2, l + 1):
        for n in range(0, l - m + 1):
            coeff = mpq(l, m - 1) * math.comb(m + n - 1, n + 1) * math.comb(l - m, n)
            out.append((m, n, coeff))
    return out


def centre_poly(ctx: QContext, c, allow_even: bool = False) -> CycloScalar:
    """Evaluate P_l(C_1, ..., C_l) = (C_1+1)^l - 1 + sum of C_m C_1^n terms.

    `c` lists the values of C_p for p = 1..l.  The identity this polynomial
    participates in is only asserted for odd l; even l is rejected unless
    allow_even is set (experimental evaluation, no identity claimed).
    """
    l = ctx.l
    if l % 2 == 0 and not allow_even:
        raise DomainError("centre polynomial identity requires odd l")
    if len(c) != l:
        raise DomainError(f"need the values of C_1..C_{l}, got {len(c)}")
    c = [x if isinstance(x, CycloScalar) else rat(x) for x in c]
    c1 = c[0]
    total = (c1 + 1) ** l - 1
    for m, n, coeff in centre_poly_terms(l):
        total = total + c[m - 1] * c1 ** n * rat(coeff)
    return total
