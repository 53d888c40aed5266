"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are residues in Q[x]/(Phi_n(x)) with x standing for the primitive
n-th root of unity zeta_n = exp(2*pi*i/n).  Phi_n is the n-th cyclotomic
polynomial, so the quotient is a field and every nonzero element is
invertible.  Coefficients are exact rationals (gmpy2.mpq).

Mixed-conductor arithmetic lifts both operands into Q(zeta_lcm) through
zeta_n = zeta_lcm**(lcm/n).
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from gmpy2 import mpq

_Q0 = mpq(0)
_Q1 = mpq(1)


class FieldError(ArithmeticError):
    """Raised on invalid field operations (division by zero, bad conductor)."""


def _poly_trim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_divmod(a, b):
    """Quotient and remainder of rational polynomials (lists, low to high)."""
    a = list(a)
    q = [_Q0] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c != 0:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _poly_trim(a[: len(b) - 1])


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int):
    """Coefficients of Phi_n, monic, low to high, as a tuple of mpq."""
    if n < 1:
        raise FieldError(f"conductor must be >= 1, got {n}")
    # x^n - 1 divided by the product of Phi_d over proper divisors d | n
    num = [_Q0] * (n + 1)
    num[0], num[n] = mpq(-1), _Q1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_table(n: int):
    """x^k mod Phi_n for deg <= k <= max(2*deg-2, n-1), as coefficient tuples."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    table = {}
    # x^deg = -(phi minus leading term)
    cur = [-c for c in phi[:deg]]
    table[deg] = tuple(cur)
    for k in range(deg + 1, max(2 * deg - 1, n)):
        nxt = [_Q0] + cur[:]
        if len(nxt) > deg:
            top = nxt.pop()
            if top != 0:
                base = table[deg]
                nxt = [c + top * b for c, b in zip(nxt, base)]
        cur = nxt
        table[k] = tuple(cur)
    return deg, table


def _reduce_mod_phi(n: int, cs):
    """Reduce a coefficient list (arbitrary length) mod Phi_n; returns tuple of length deg."""
    deg, table = _reduction_table(n)
    out = [_Q0] * deg
    for k, c in enumerate(cs):
        if c == 0:
            continue
        if k < deg:
            out[k] += c
        elif k in table:
            row = table[k]
            for j, r in enumerate(row):
                if r != 0:
                    out[j] += c * r
        else:
            # exponents >= 2*deg-1 only occur transiently; fold via x^n = 1 first
            k2 = k % n
            if k2 < deg:
                out[k2] += c
            else:
                row = table[k2]
                for j, r in enumerate(row):
                    if r != 0:
                        out[j] += c * r
    return tuple(out)


class CycloScalar:
    """An exact element of Q(zeta_n), canonical mod Phi_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs, reduce: bool = True):
        self.n = n
        if reduce:
            self.coeffs = _reduce_mod_phi(n, [mpq(c) for c in coeffs])
        else:
            self.coeffs = tuple(coeffs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def rational(p, q=1) -> "CycloScalar":
        return CycloScalar(1, (mpq(p, q),), reduce=False)

    @staticmethod
    def zero() -> "CycloScalar":
        return _ZERO

    @staticmethod
    def one() -> "CycloScalar":
        return _ONE

    # -- coercion -----------------------------------------------------

    def lift(self, m: int) -> "CycloScalar":
        """Embed into Q(zeta_m) for n | m via zeta_n = zeta_m**(m/n)."""
        if m == self.n:
            return self
        if m % self.n != 0:
            raise FieldError(f"cannot lift conductor {self.n} into {m}")
        step = m // self.n
        out = [_Q0] * (self.n * step)
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return CycloScalar(m, out)

    @staticmethod
    def _pair(a, b):
        if not isinstance(b, CycloScalar):
            b = CycloScalar.rational(b)
        if a.n == b.n:
            return a, b
        m = math.lcm(a.n, b.n)
        return a.lift(m), b.lift(m)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, mpq)) or not isinstance(other, CycloScalar):
            if not isinstance(other, (int, mpq)):
                return NotImplemented
            other = CycloScalar.rational(other)
        a, b = CycloScalar._pair(self, other)
        return a.coeffs == b.coeffs

    __hash__ = None  # mixed-conductor equality makes hashing treacherous

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        a, b = CycloScalar._pair(self, other)
        return CycloScalar(a.n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.n, tuple(-c for c in self.coeffs), reduce=False)

    def __sub__(self, other):
        a, b = CycloScalar._pair(self, other)
        return CycloScalar(a.n, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), reduce=False)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = CycloScalar._pair(self, other)
        la, lb = a.coeffs, b.coeffs
        prod = [_Q0] * (len(la) + len(lb) - 1)
        for i, x in enumerate(la):
            if x == 0:
                continue
            for j, y in enumerate(lb):
                if y != 0:
                    prod[i + j] += x * y
        return CycloScalar(a.n, _reduce_mod_phi(a.n, prod), reduce=False)

    __rmul__ = __mul__

    def inverse(self) -> "CycloScalar":
        """Field inverse via the extended Euclidean algorithm mod Phi_n."""
        if self.is_zero():
            raise FieldError("division by zero in cyclotomic field")
        if self.is_rational():
            return CycloScalar(self.n, (1 / self.coeffs[0],) + (_Q0,) * (len(self.coeffs) - 1),
                               reduce=False)
        # maintain s*self = r (mod Phi_n)
        r0, r1 = list(cyclotomic_poly(self.n)), _poly_trim(list(self.coeffs))
        s0, s1 = [], [_Q1]
        while len(r1) > 1:
            q, r2 = _poly_divmod(r0, r1)
            s2 = list(s0)
            s2 += [_Q0] * (len(q) + len(s1) - 1 - len(s2))
            for i, qi in enumerate(q):
                if qi == 0:
                    continue
                for j, sj in enumerate(s1):
                    s2[i + j] -= qi * sj
            r0, r1, s0, s1 = r1, r2, s1, _poly_trim(s2)
        if not r1:
            raise FieldError("element not invertible (Phi_n not irreducible?)")
        inv_c = 1 / r1[0]
        return CycloScalar(self.n, [c * inv_c for c in s1])

    def __truediv__(self, other):
        if not isinstance(other, CycloScalar):
            other = CycloScalar.rational(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycloScalar.rational(other) * self.inverse()

    def __pow__(self, k: int) -> "CycloScalar":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CycloScalar(self.n, (_Q1,) + (_Q0,) * (len(self.coeffs) - 1), reduce=False)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- views --------------------------------------------------------

    def as_rational(self) -> mpq:
        if not self.is_rational():
            raise FieldError("scalar is not rational")
        return self.coeffs[0]

    def complex_value(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        acc, zp = 0j, 1 + 0j
        for c in self.coeffs:
            acc += float(c) * zp
            zp *= z
        return acc

    def serialize(self) -> str:
        """Canonical text form "n; c0,c1,..." with rationals as p/q strings."""
        return f"{self.n}; " + ",".join(str(c) for c in self.coeffs)

    @staticmethod
    def parse(text: str) -> "CycloScalar":
        head, _, tail = text.partition(";")
        n = int(head.strip())
        coeffs = [mpq(part.strip()) for part in tail.split(",")]
        deg = len(cyclotomic_poly(n)) - 1
        if len(coeffs) != deg:
            raise FieldError(f"expected {deg} coefficients for conductor {n}, got {len(coeffs)}")
        return CycloScalar(n, coeffs)

    def __repr__(self):
        return f"CycloScalar({self.serialize()!r})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        return self.serialize()


_ZERO = CycloScalar.rational(0)
_ONE = CycloScalar.rational(1)


def cyclo(n: int, k: int) -> CycloScalar:
    """The exact root of unity zeta_n**k."""
    if n < 1:
        raise FieldError(f"conductor must be >= 1, got {n}")
    k %= n
    deg = len(cyclotomic_poly(n)) - 1
    cs = [_Q0] * (k + 1)
    cs[k] = _Q1
    return CycloScalar(n, cs) if k >= deg else CycloScalar(n, cs + [_Q0] * (deg - k - 1), reduce=False)


def rat(p, q=1) -> CycloScalar:
    """A rational number as a conductor-1 scalar."""
    return CycloScalar.rational(p, q)
