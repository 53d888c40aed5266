"""PBW normal forms for the quantum superalgebra on generators
k1, k2, e1, e2, f1, f2 (with the composites e3, f3 kept as basis letters).

Normal-ordered monomials are

    f2^rho f3^sigma f1^p  k1^a1 k2^a2  e1^t e3^sigmap e2^rhop

with rho, sigma, sigmap, rhop in {0, 1} (the odd letters square to zero).
An algebra element is a finite scalar combination of such monomials.

Products are computed by appending one generator letter at a time and
bubbling it left into its slot with the straightening rules derived from
the defining relations:

    k1 k2 = k2 k1
    k_i e_j = q^{a_ij} e_j k_i,    k_i f_j = q^{-a_ij} f_j k_i
    e1 f1 - f1 e1 = (k1 - k1^-1)/(q - q^-1)
    e2 f2 + f2 e2 = (k2 - k2^-1)/(q - q^-1)
    [e1, f2] = [e2, f1] = 0,   e2^2 = f2^2 = 0
    e3 = e1 e2 - q^-1 e2 e1,   f3 = f2 f1 - q f1 f2

together with the mixed exchange rules these force:

    e1 e3 = q e3 e1            f3 f1 = q^-1 f1 f3
    e2 e3 = -q e3 e2           f3 f2 = -q^-1 f2 f3
    e1 f3 = f3 e1 - q f2 k1    e3 f2 = -f2 e3 + k2 e1
    e2 f3 = -f3 e2 + f1 k2^-1  e3 f1 = f1 e3 - q^-1 k1^-1 e2
    e3 f3 + f3 e3 = (k1 k2 - k1^-1 k2^-1)/(q - q^-1),  e3^2 = f3^2 = 0

The rule set is certified empirically: the relation audit and the
associativity property test act as a confluence check over the tested
degree window.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .cyclo import CycloScalar, rat
from .qkernel import DomainError, QContext, qint

GENERATORS = ("f2", "f3", "f1", "k1", "k1inv", "k2", "k2inv", "e1", "e3", "e2")


class PBWMonomial(NamedTuple):
    rho: int = 0     # f2 exponent (0/1)
    sigma: int = 0   # f3 exponent (0/1)
    p: int = 0       # f1 exponent
    a1: int = 0      # k1 exponent (any sign)
    a2: int = 0      # k2 exponent (any sign)
    t: int = 0       # e1 exponent
    sigmap: int = 0  # e3 exponent (0/1)
    rhop: int = 0    # e2 exponent (0/1)

    def degree_z2(self) -> int:
        return (self.rho + self.sigma + self.sigmap + self.rhop) % 2

    def word(self) -> list[str]:
        """The monomial as a sequence of generator letters, left to right."""
        out = ["f2"] * self.rho + ["f3"] * self.sigma + ["f1"] * self.p
        out += ["k1" if self.a1 > 0 else "k1inv"] * abs(self.a1)
        out += ["k2" if self.a2 > 0 else "k2inv"] * abs(self.a2)
        out += ["e1"] * self.t + ["e3"] * self.sigmap + ["e2"] * self.rhop
        return out

    def grading(self, l: int) -> tuple[int, int]:
        """(d1, d2) mod l with k_i x k_i^-1 = q^{d_i} x."""
        d1 = 2 * self.t + self.sigmap - self.rhop - 2 * self.p - self.sigma + self.rho
        d2 = self.p + self.sigma - self.t - self.sigmap
        return d1 % l, d2 % l

    def __str__(self):
        parts = []
        for sym, e in (("f2", self.rho), ("f3", self.sigma), ("f1", self.p),
                       ("k1", self.a1), ("k2", self.a2), ("e1", self.t),
                       ("e3", self.sigmap), ("e2", self.rhop)):
            if e == 1:
                parts.append(sym)
            elif e != 0:
                parts.append(f"{sym}^{e}")
        return " ".join(parts) if parts else "1"


ONE_MONO = PBWMonomial()


def _merge(acc: dict, mono: PBWMonomial, coeff: CycloScalar):
    cur = acc.get(mono)
    cur = coeff if cur is None else cur + coeff
    if cur.is_zero():
        acc.pop(mono, None)
    else:
        acc[mono] = cur


class AlgebraElement:
    """A finite scalar combination of PBW monomials over a fixed QContext."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: QContext, terms: dict | None = None):
        self.ctx = ctx
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero(ctx: QContext) -> "AlgebraElement":
        return AlgebraElement(ctx)

    @staticmethod
    def one(ctx: QContext) -> "AlgebraElement":
        return AlgebraElement(ctx, {ONE_MONO: rat(1)})

    @staticmethod
    def monomial(ctx: QContext, mono: PBWMonomial, coeff=None) -> "AlgebraElement":
        c = rat(1) if coeff is None else coeff
        return AlgebraElement(ctx, {} if c.is_zero() else {mono: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def copy(self) -> "AlgebraElement":
        return AlgebraElement(self.ctx, dict(self.terms))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _merge(out, m, c)
        return AlgebraElement(self.ctx, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(rat(-1))

    def scale(self, c: CycloScalar) -> "AlgebraElement":
        if c.is_zero():
            return AlgebraElement(self.ctx)
        return AlgebraElement(self.ctx, {m: c * x for m, x in self.terms.items()})

    def _check(self, other: "AlgebraElement"):
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise DomainError("elements live over different root-of-unity contexts")

    def times_gen(self, gen: str) -> "AlgebraElement":
        """Right-multiply by a single generator letter, renormalizing."""
        out: dict = {}
        for mono, coeff in self.terms.items():
            for m2, c2 in _append(self.ctx, mono, gen):
                _merge(out, m2, coeff * c2)
        return AlgebraElement(self.ctx, out)

    def times_word(self, word: Iterable) -> "AlgebraElement":
        elem = self
        for letter in word:
            if isinstance(letter, tuple):
                sym, exp = letter
                for g, n in _expand_letter(sym, exp):
                    for _ in range(n):
                        elem = elem.times_gen(g)
            else:
                elem = elem.times_gen(letter)
        return elem

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out: dict = {}
        for mono_b, coeff_b in other.terms.items():
            prod = self.times_word(mono_b.word())
            for m, c in prod.terms.items():
                _merge(out, m, c * coeff_b)
        return AlgebraElement(self.ctx, out)

    def degree_z2(self) -> int | None:
        """The common Z2-degree of all terms, or None if mixed/zero."""
        degs = {m.degree_z2() for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) * {m}" for m, c in self.sorted_terms())

    def __repr__(self):
        return f"<AlgebraElement l={self.ctx.l}: {self}>"


def _expand_letter(sym: str, exp: int):
    """A symbol with an integer exponent as repeated single letters."""
    if sym in ("k1", "k2"):
        if exp >= 0:
            return [(sym, exp)]
        return [(sym + "inv", -exp)]
    if sym in ("k1inv", "k2inv"):
        base = sym[:2]
        return [(sym, exp)] if exp >= 0 else [(base, -exp)]
    if exp < 0:
        raise DomainError(f"negative exponent on non-invertible generator {sym}")
    return [(sym, exp)]


def from_word(ctx: QContext, word: Iterable) -> AlgebraElement:
    """PBW normal form of a product of generator letters.

    `word` is a sequence of symbols from GENERATORS, or (symbol, exponent)
    pairs; k1/k2 accept negative exponents.
    """
    return AlgebraElement.one(ctx).times_word(word)


# ---------------------------------------------------------------------------
# the straightening engine: append one generator on the right
# ---------------------------------------------------------------------------

_append_cache: dict = {}


def _append(ctx: QContext, mono: PBWMonomial, gen: str):
    """mono * gen as a list of (monomial, coefficient) pairs."""
    key = (ctx.l, mono, gen)
    hit = _append_cache.get(key)
    if hit is None:
        hit = _append_cache[key] = _append_compute(ctx, mono, gen)
    return hit


def _app_terms(ctx: QContext, terms, gen: str):
    """Append gen to each (mono, coeff) pair and merge."""
    out: dict = {}
    for mono, coeff in terms:
        for m2, c2 in _append(ctx, mono, gen):
            _merge(out, m2, coeff * c2)
    return list(out.items())


def _append_compute(ctx: QContext, m: PBWMonomial, gen: str):
    one = rat(1)
    qp = ctx.qpow
    s = ctx.qdiff

    if gen == "e2":
        if m.rhop:
            return []
        return [(m._replace(rhop=1), one)]

    if gen == "e3":
        if m.sigmap:
            return []
        # move past e2^rhop:  e2 e3 = -q e3 e2
        coeff = -ctx.q if m.rhop else one
        return [(m._replace(sigmap=1), coeff)]

    if gen == "e1":
        if m.rhop:
            y = m._replace(rhop=0)
            # e2 e1 = q e1 e2 - q e3
            part = _app_terms(ctx, _append(ctx, y, "e1"), "e2")
            out = {m2: ctx.q * c for m2, c in part}
            for m2, c in _append(ctx, y, "e3"):
                _merge(out, m2, -ctx.q * c)
            return list(out.items())
        if m.sigmap:
            # e3 e1 = q^-1 e1 e3
            y = m._replace(sigmap=0)
            return [(m2, ctx.qinv * c)
                    for m2, c in _app_terms(ctx, _append(ctx, y, "e1"), "e3")]
        return [(m._replace(t=m.t + 1), one)]

    if gen in ("k1", "k1inv", "k2", "k2inv"):
        if gen == "k1":
            coeff = qp(m.rhop - m.sigmap - 2 * m.t)
            return [(m._replace(a1=m.a1 + 1), coeff)]
        if gen == "k1inv":
            coeff = qp(-m.rhop + m.sigmap + 2 * m.t)
            return [(m._replace(a1=m.a1 - 1), coeff)]
        if gen == "k2":
            coeff = qp(m.t + m.sigmap)
            return [(m._replace(a2=m.a2 + 1), coeff)]
        coeff = qp(-m.t - m.sigmap)
        return [(m._replace(a2=m.a2 - 1), coeff)]

    if gen == "f1":
        if m.rhop:
            # e2 f1 = f1 e2
            y = m._replace(rhop=0)
            return _app_terms(ctx, _append(ctx, y, "f1"), "e2")
        if m.sigmap:
            # e3 f1 = f1 e3 - q^-1 k1^-1 e2
            y = m._replace(sigmap=0)
            out = dict(_app_terms(ctx, _append(ctx, y, "f1"), "e3"))
            for m2, c in _app_terms(ctx, _append(ctx, y, "k1inv"), "e2"):
                _merge(out, m2, -ctx.qinv * c)
            return list(out.items())
        if m.t:
            # e1 f1 = f1 e1 + (k1 - k1^-1)/(q - q^-1)
            y = m._replace(t=m.t - 1)
            out = dict(_app_terms(ctx, _append(ctx, y, "f1"), "e1"))
            sinv = s.inverse()
            for m2, c in _append(ctx, y, "k1"):
                _merge(out, m2, sinv * c)
            for m2, c in _append(ctx, y, "k1inv"):
                _merge(out, m2, -sinv * c)
            return list(out.items())
        # only k and f blocks remain: pure phase
        coeff = qp(-2 * m.a1 + m.a2)
        return [(m._replace(p=m.p + 1), coeff)]

    if gen == "f3":
        if m.rhop:
            # e2 f3 = -f3 e2 + f1 k2^-1
            y = m._replace(rhop=0)
            out = {m2: -c for m2, c in _app_terms(ctx, _append(ctx, y, "f3"), "e2")}
            for m2, c in _app_terms(ctx, _append(ctx, y, "f1"), "k2inv"):
                _merge(out, m2, c)
            return list(out.items())
        if m.sigmap:
            # e3 f3 = -f3 e3 + (k1 k2 - k1^-1 k2^-1)/(q - q^-1)
            y = m._replace(sigmap=0)
            out = {m2: -c for m2, c in _app_terms(ctx, _append(ctx, y, "f3"), "e3")}
            sinv = s.inverse()
            for m2, c in _app_terms(ctx, _append(ctx, y, "k1"), "k2"):
                _merge(out, m2, sinv * c)
            for m2, c in _app_terms(ctx, _append(ctx, y, "k1inv"), "k2inv"):
                _merge(out, m2, -sinv * c)
            return list(out.items())
        if m.t:
            # e1 f3 = f3 e1 - q f2 k1
            y = m._replace(t=m.t - 1)
            out = dict(_app_terms(ctx, _append(ctx, y, "f3"), "e1"))
            for m2, c in _app_terms(ctx, _append(ctx, y, "f2"), "k1"):
                _merge(out, m2, -ctx.q * c)
            return list(out.items())
        if m.sigma:
            return []
        # past k1^a1 k2^a2 (phase q^{-a1+a2}) and f1^p (phase q^p)
        coeff = qp(-m.a1 + m.a2 + m.p)
        return [(m._replace(sigma=1), coeff)]

    if gen == "f2":
        if m.rhop:
            # e2 f2 = -f2 e2 + (k2 - k2^-1)/(q - q^-1)
            y = m._replace(rhop=0)
            out = {m2: -c for m2, c in _app_terms(ctx, _append(ctx, y, "f2"), "e2")}
            sinv = s.inverse()
            for m2, c in _append(ctx, y, "k2"):
                _merge(out, m2, sinv * c)
            for m2, c in _append(ctx, y, "k2inv"):
                _merge(out, m2, -sinv * c)
            return list(out.items())
        if m.sigmap:
            # e3 f2 = -f2 e3 + k2 e1
            y = m._replace(sigmap=0)
            out = {m2: -c for m2, c in _app_terms(ctx, _append(ctx, y, "f2"), "e3")}
            for m2, c in _app_terms(ctx, _append(ctx, y, "k2"), "e1"):
                _merge(out, m2, c)
            return list(out.items())
        if m.t:
            # e1 f2 = f2 e1
            y = m._replace(t=m.t - 1)
            return _app_terms(ctx, _append(ctx, y, "f2"), "e1")
        if m.a1 or m.a2:
            # pull f2 through the Cartan block first (k1 f2 = q f2 k1,
            # k2 commutes); the remaining product stays inside the f-block
            y = m._replace(a1=0, a2=0)
            return [(m2._replace(a1=m.a1, a2=m.a2), qp(m.a1) * c)
                    for m2, c in _append(ctx, y, "f2")]
        if m.p:
            # f1 f2 = q^-1 f2 f1 - q^-1 f3
            y = m._replace(p=m.p - 1)
            out = {m2: ctx.qinv * c
                   for m2, c in _app_terms(ctx, _append(ctx, y, "f2"), "f1")}
            for m2, c in _append(ctx, y, "f3"):
                _merge(out, m2, -ctx.qinv * c)
            return list(out.items())
        if m.rho:
            return []
        # past k1^a1 (phase q^{a1}), k2 commutes, f3^sigma (sign -q^-1 each)
        coeff = qp(m.a1) * ((-ctx.qinv) ** m.sigma if m.sigma else rat(1))
        return [(m._replace(rho=1), coeff)]

    raise DomainError(f"unknown generator {gen!r}")


# ---------------------------------------------------------------------------
# distinguished elements
# ---------------------------------------------------------------------------

def monomial_window(p_max: int = 2, t_max: int = 2,
                    a_max: int = 2) -> list[PBWMonomial]:
    """All normal-ordered monomials with f1/e1 exponents up to p_max/t_max,
    |k-exponents| up to a_max, and all sixteen patterns of odd letters."""
    out = []
    for rho in (0, 1):
        for sigma in (0, 1):
            for p in range(p_max + 1):
                for a1 in range(-a_max, a_max + 1):
                    for a2 in range(-a_max, a_max + 1):
                        for t in range(t_max + 1):
                            for sigmap in (0, 1):
                                for rhop in (0, 1):
                                    out.append(PBWMonomial(rho, sigma, p, a1,
                                                           a2, t, sigmap, rhop))
    return out


def cartan_bracket(ctx: QContext, c1: int, c2: int, shift: int) -> AlgebraElement:
    """[c1*h1 + c2*h2 + shift] as a Laurent element in k1, k2:
    (q^shift k1^c1 k2^c2 - q^-shift k1^-c1 k2^-c2) / (q - q^-1)."""
    sinv = ctx.qdiff.inverse()
    pos = PBWMonomial(a1=c1, a2=c2)
    neg = PBWMonomial(a1=-c1, a2=-c2)
    out: dict = {}
    _merge(out, pos, ctx.qpow(shift) * sinv)
    _merge(out, neg, -ctx.qpow(-shift) * sinv)
    return AlgebraElement(ctx, out)


def casimir_element(ctx: QContext, p: int) -> AlgebraElement:
    """The deformed Casimir element C_p in PBW normal form."""
    s = ctx.qdiff
    qp = ctx.qpow
    w = lambda *letters: from_word(ctx, letters)

    body = cartan_bracket(ctx, 1, 1, 1) * cartan_bracket(ctx, 0, 1, 0)
    body = body - w("f1", "e1")
    body = body + w("f2", "e2") * (cartan_bracket(ctx, 1, 1, 0).scale(qp(1 - 2 * p))
                                   - cartan_bracket(ctx, 1, 1, 1))
    body = body + w("f3", "e3") * (cartan_bracket(ctx, 0, 1, -2).scale(qp(1 - 2 * p))
                                   - cartan_bracket(ctx, 0, 1, -1))
    body = body + w("f3", "e2", "e1", "k2").scale(s * qp(-1 - p) * qint(ctx, p))
    body = body + w("f1", "f2", "e3", "k2inv").scale(s * qp(2 - p) * qint(ctx, p - 1))
    body = body + w("f2", "f3", "e3", "e2").scale(s * s * qp(1 - 2 * p)
                                                  * qint(ctx, p) * qint(ctx, p - 1))
    prefix = AlgebraElement.monomial(ctx, PBWMonomial(a1=2 * p - 1, a2=4 * p - 2), s * s)
    return prefix * body


def central_powers(ctx: QContext):
    """(z1, z2, x1, y1) = (k1^l, k2^l, e1^l, f1^l) as algebra elements."""
    l = ctx.l
    mk = lambda **kw: AlgebraElement.monomial(ctx, PBWMonomial(**kw))
    return mk(a1=l), mk(a2=l), mk(t=l), mk(p=l)


def apply_psi(elem: AlgebraElement) -> AlgebraElement:
    """The involutive automorphism psi: e_i <-> f_i, k1 -> k1^-1, k2 -> -k2^-1,
    extended multiplicatively in word order (psi(e3) = -q^-1 f3,
    psi(f3) = -q e3)."""
    ctx = elem.ctx
    out = AlgebraElement.zero(ctx)
    for m, c in elem.terms.items():
        word = ([("e2", m.rho), ("e3", m.sigma), ("e1", m.p),
                 ("k1", -m.a1), ("k2", -m.a2),
                 ("f1", m.t), ("f3", m.sigmap), ("f2", m.rhop)])
        sign = ((-ctx.q) ** m.sigma if m.sigma else rat(1)) \
            * (rat(-1) ** m.a2) \
            * ((-ctx.qinv) ** m.sigmap if m.sigmap else rat(1))
        out = out + from_word(ctx, word).scale(c * sign)
    return out


def defining_relations(ctx: QContext) -> dict[str, AlgebraElement]:
    """Each defining (and derived) relation as an element that must be zero."""
    w = lambda *letters: from_word(ctx, letters)
    s = ctx.qdiff
    k1_minus = w("k1") - w("k1inv")
    k2_minus = w("k2") - w("k2inv")
    kk_minus = w("k1", "k2") - w("k1inv", "k2inv")
    rels = {
        "k1k2_commute": w("k1", "k2") - w("k2", "k1"),
        "k1e1": w("k1", "e1") - w("e1", "k1").scale(ctx.qpow(2)),
        "k1e2": w("k1", "e2") - w("e2", "k1").scale(ctx.qpow(-1)),
        "k2e1": w("k2", "e1") - w("e1", "k2").scale(ctx.qpow(-1)),
        "k2e2": w("k2", "e2") - w("e2", "k2"),
        "k1f1": w("k1", "f1") - w("f1", "k1").scale(ctx.qpow(-2)),
        "k1f2": w("k1", "f2") - w("f2", "k1").scale(ctx.qpow(1)),
        "k2f1": w("k2", "f1") - w("f1", "k2").scale(ctx.qpow(1)),
        "k2f2": w("k2", "f2") - w("f2", "k2"),
        "e1f1": w("e1", "f1") - w("f1", "e1") - k1_minus.scale(s.inverse()),
        "e2f2": w("e2", "f2") + w("f2", "e2") - k2_minus.scale(s.inverse()),
        "e1f2": w("e1", "f2") - w("f2", "e1"),
        "e2f1": w("e2", "f1") - w("f1", "e2"),
        "e2sq": w("e2", "e2"),
        "f2sq": w("f2", "f2"),
        "serre_e": w("e1", "e1", "e2") - w("e1", "e2", "e1").scale(ctx.q + ctx.qinv)
                   + w("e2", "e1", "e1"),
        "serre_f": w("f1", "f1", "f2") - w("f1", "f2", "f1").scale(ctx.q + ctx.qinv)
                   + w("f2", "f1", "f1"),
        "e3_def": w("e3") - (w("e1", "e2") - w("e2", "e1").scale(ctx.qinv)),
        "f3_def": w("f3") - (w("f2", "f1") - w("f1", "f2").scale(ctx.q)),
        "e1e3": w("e1", "e3") - w("e3", "e1").scale(ctx.q),
        "f3f1": w("f3", "f1") - w("f1", "f3").scale(ctx.qinv),
        "e2e3": w("e2", "e3") + w("e3", "e2").scale(ctx.q),
        "f3f2": w("f3", "f2") + w("f2", "f3").scale(ctx.qinv),
        "e3f3": w("e3", "f3") + w("f3", "e3") - kk_minus.scale(s.inverse()),
        "e3sq": w("e3", "e3"),
        "f3sq": w("f3", "f3"),
    }
    return rels
