"""Constructors for every representation family: the gl(2)-type even
subalgebra modules, the five closed-form families of the superalgebra, the
induced-module builder, the classification function, and the generic
parameter sampler.

Basis labels:
  * gl(2) modules: integer p.
  * four-layer modules: (rho, sigma, p) with rho, sigma in {0,1} labelling
    the f2/f3 layers over the bottom layer V0.
  * two-layer (atypical) modules: (sigma, p).

Boundary conventions: nilpotent families treat any out-of-range target
index as the zero vector; periodic families wrap p modulo l.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from gmpy2 import mpq

from .cyclo import CycloScalar, rat
from .linalg import Matrix
from .modules import ModuleRep
from .pbw import from_word
from .qkernel import DomainError, QContext, qbracket, qint


def _coerce(x) -> CycloScalar:
    return x if isinstance(x, CycloScalar) else rat(x)


# ---------------------------------------------------------------------------
# gl(2) modules (generators k1, k2, e1, f1 only)
# ---------------------------------------------------------------------------

@dataclass
class Gl2Module:
    """An even-subalgebra module: diagonal k1, k2 and ladder e1, f1."""

    ctx: QContext
    family: str
    params: dict
    dim: int
    mats: dict  # k1, k1inv, k2, k2inv, e1, f1

    def audit(self) -> dict[str, bool]:
        m = self.mats
        ctx = self.ctx
        ident = Matrix.identity(self.dim)
        checks = {
            "cartan_inverses": (m["k1"] * m["k1inv"] - ident)
                               + (m["k2"] * m["k2inv"] - ident)
                               + (m["k1"] * m["k2"] - m["k2"] * m["k1"]),
            "cartan_e1": (m["k1"] * m["e1"] - (m["e1"] * m["k1"]).scale(ctx.qpow(2)))
                         + (m["k2"] * m["e1"] - (m["e1"] * m["k2"]).scale(ctx.qpow(-1))),
            "cartan_f1": (m["k1"] * m["f1"] - (m["f1"] * m["k1"]).scale(ctx.qpow(-2)))
                         + (m["k2"] * m["f1"] - (m["f1"] * m["k2"]).scale(ctx.qpow(1))),
            "e1f1": (m["e1"] * m["f1"] - m["f1"] * m["e1"]
                     - (m["k1"] - m["k1inv"]).scale(ctx.qdiff.inverse())),
        }
        return {name: mat.is_zero() for name, mat in checks.items()}

    def casimir_matrix(self) -> Matrix:
        ctx = self.ctx
        m = self.mats
        return (m["k1"].scale(ctx.q) + m["k1inv"].scale(ctx.qinv)
                + (m["f1"] * m["e1"]).scale(ctx.qdiff * ctx.qdiff))


def _diag(entries) -> Matrix:
    return Matrix.diagonal(list(entries))


def gl2_nilpotent(ctx: QContext, n: int, lambda1, lambda2) -> Gl2Module:
    """The N-dimensional nilpotent module: k1 v_p = lam1 q^{-2p} v_p,
    f1 v_p = v_{p+1} (v_N = 0), e1 v_p = [p][mu1-p+1] v_{p-1},
    k2 v_p = lam2 q^p v_p.

    N must be the smallest positive integer with [N][mu1-N+1] = 0.
    """
    lam1, lam2 = _coerce(lambda1), _coerce(lambda2)
    lp = ctx.lprime
    if not 1 <= n <= lp:
        raise DomainError(f"dimension must satisfy 1 <= N <= l' = {lp}")
    if not (qint(ctx, n) * qbracket(ctx, lam1, 1 - n)).is_zero():
        raise DomainError("[N][mu1-N+1] must vanish at the stated dimension")
    for smaller in range(1, n):
        if (qint(ctx, smaller) * qbracket(ctx, lam1, 1 - smaller)).is_zero():
            raise DomainError(f"[{smaller}][mu1-{smaller}+1] already vanishes; "
                              f"dimension {n} is not minimal")
    k1 = _diag(lam1 * ctx.qpow(-2 * p) for p in range(n))
    k2 = _diag(lam2 * ctx.qpow(p) for p in range(n))
    f1 = Matrix(n, n)
    e1 = Matrix(n, n)
    for p in range(n - 1):
        f1.rows[p + 1][p] = rat(1)
    for p in range(1, n):
        e1.set(p - 1, p, qint(ctx, p) * qbracket(ctx, lam1, 1 - p))
    mats = {"k1": k1, "k1inv": _diag(x.inverse() for x in (lam1 * ctx.qpow(-2 * p) for p in range(n))),
            "k2": k2, "k2inv": _diag((lam2 * ctx.qpow(p)).inverse() for p in range(n)),
            "e1": e1, "f1": f1}
    return Gl2Module(ctx=ctx, family="gl2-nilpotent", dim=n,
                     params={"N": n, "lambda1": lam1, "lambda2": lam2}, mats=mats)


def gl2_periodic(ctx: QContext, lambda1, lambda2, phi, beta) -> Gl2Module:
    """The l-dimensional periodic/semi-periodic module: f1 v_p = phi v_{p+1},
    e1 v_p = phi^{-1}([p][mu1-p+1] + beta) v_{p-1}, indices mod l."""
    lam1, lam2, phi, beta = map(_coerce, (lambda1, lambda2, phi, beta))
    if phi.is_zero():
        raise DomainError("phi must be nonzero (apply the e<->f automorphism "
                          "for the transposed one-sided case)")
    l = ctx.l
    k1 = _diag(lam1 * ctx.qpow(-2 * p) for p in range(l))
    k2 = _diag(lam2 * ctx.qpow(p) for p in range(l))
    f1 = Matrix(l, l)
    e1 = Matrix(l, l)
    phinv = phi.inverse()
    for p in range(l):
        f1.set((p + 1) % l, p, phi)
        e1.set((p - 1) % l, p, phinv * (qint(ctx, p) * qbracket(ctx, lam1, 1 - p) + beta))
    mats = {"k1": k1, "k1inv": _diag((lam1 * ctx.qpow(-2 * p)).inverse() for p in range(l)),
            "k2": k2, "k2inv": _diag((lam2 * ctx.qpow(p)).inverse() for p in range(l)),
            "e1": e1, "f1": f1}
    return Gl2Module(ctx=ctx, family="gl2-periodic", dim=l,
                     params={"lambda1": lam1, "lambda2": lam2, "phi": phi,
                             "beta": beta}, mats=mats)


# ---------------------------------------------------------------------------
# closed-form superalgebra families
# ---------------------------------------------------------------------------

def _module_from_action(ctx, family, params, labels, action, v0=None) -> ModuleRep:
    """Build a ModuleRep from a per-generator action on labelled basis
    vectors.  `action(gen, label)` yields (target_label, coefficient) pairs;
    unknown target labels are dropped (the out-of-range convention)."""
    index = {lab: i for i, lab in enumerate(labels)}
    dim = len(labels)
    mats = {}
    for gen in ("k1", "k1inv", "k2", "k2inv", "e1", "e2", "f1", "f2"):
        mat = Matrix(dim, dim)
        for lab, j in index.items():
            for target, coeff in action(gen, lab):
                i = index.get(target)
                if i is not None and not coeff.is_zero():
                    cur = mat.rows[i].get(j)
                    val = coeff if cur is None else cur + coeff
                    if val.is_zero():
                        mat.rows[i].pop(j, None)
                    else:
                        mat.rows[i][j] = val
        mats[gen] = mat
    v0_indices = [index[lab] for lab in v0] if v0 else []
    return ModuleRep(ctx=ctx, family=family, params=params, dim=dim,
                     basis=list(labels), mats=mats, v0_indices=v0_indices)


def typical_nilpotent(ctx: QContext, n: int, lambda1, lambda2) -> ModuleRep:
    """The 4N-dimensional typical nilpotent module on basis w_{rho,sigma,p}."""
    lam1, lam2 = _coerce(lambda1), _coerce(lambda2)
    gl2_nilpotent(ctx, n, lam1, lam2)  # validates (N, lambda1)
    labels = [(rho, sigma, p) for rho, sigma in itertools.product((0, 1), (0, 1))
              for p in range(n)]
    zero = rat(0)

    def act(gen, lab):
        rho, sigma, p = lab
        if gen == "k1":
            return [((rho, sigma, p), lam1 * ctx.qpow(rho - sigma - 2 * p))]
        if gen == "k1inv":
            return [((rho, sigma, p), (lam1 * ctx.qpow(rho - sigma - 2 * p)).inverse())]
        if gen == "k2":
            return [((rho, sigma, p), lam2 * ctx.qpow(sigma + p))]
        if gen == "k2inv":
            return [((rho, sigma, p), (lam2 * ctx.qpow(sigma + p)).inverse())]
        if gen == "f1":
            out = [((rho, sigma, p + 1), ctx.qpow(sigma - rho))]
            if rho and not sigma:
                out.append(((rho - 1, sigma + 1, p), -ctx.qpow(-rho)))
            return out
        if gen == "f2":
            return [] if rho else [((rho + 1, sigma, p), rat(1))]
        if gen == "e1":
            out = []
            if sigma and not rho:
                out.append(((rho + 1, sigma - 1, p), -lam1 * ctx.qpow(-2 * p + 1)))
            out.append(((rho, sigma, p - 1), qint(ctx, p) * qbracket(ctx, lam1, 1 - p)))
            return out
        if gen == "e2":
            out = []
            if rho:
                out.append(((rho - 1, sigma, p), qbracket(ctx, lam2, p + sigma)))
            if sigma:
                coeff = lam2.inverse() * ctx.qpow(-p)
                if rho:
                    coeff = -coeff
                out.append(((rho, sigma - 1, p + 1), coeff))
            return out
        raise DomainError(gen)

    return _module_from_action(ctx, "typical-nilpotent",
                               {"N": n, "lambda1": lam1, "lambda2": lam2},
                               labels, act, v0=[(0, 0, p) for p in range(n)])


def atypical_mu2(ctx: QContext, n: int, lambda1, epsilon: int,
                 type_b: bool = False) -> ModuleRep:
    """The atypical nilpotent family with k2^2 eigenvalue 1 on the bottom
    layer ([mu2] = 0): dimension 2N-1 (type A) or 2l' (type B)."""
    lam1 = _coerce(lambda1)
    if epsilon not in (1, -1):
        raise DomainError("epsilon must be +1 or -1")
    eps = rat(epsilon)
    if type_b:
        n = ctx.lprime
        labels = [(s, p) for s in (0, 1) for p in range(ctx.lprime)]
    else:
        if not 1 <= n <= ctx.lprime:
            raise DomainError(f"dimension label must satisfy 1 <= N <= l' = {ctx.lprime}")
        if not qbracket(ctx, lam1, 1 - n).is_zero():
            raise DomainError("the bounded branch requires lambda1 = +/- q^{N-1} "
                              "([mu1-N+1] = 0); use type_b for generic lambda1")
        labels = [(s, p) for s in (0, 1) for p in range(n - s)]

    def act(gen, lab):
        sigma, p = lab
        if gen == "k1":
            return [((sigma, p), lam1 * ctx.qpow(-sigma - 2 * p))]
        if gen == "k1inv":
            return [((sigma, p), (lam1 * ctx.qpow(-sigma - 2 * p)).inverse())]
        if gen == "k2":
            return [((sigma, p), eps * ctx.qpow(sigma + p))]
        if gen == "k2inv":
            return [((sigma, p), (eps * ctx.qpow(sigma + p)).inverse())]
        if gen == "f1":
            return [((sigma, p + 1), ctx.qpow(sigma))]
        if gen == "f2":
            if sigma:
                return []
            return [((sigma + 1, p - 1), ctx.qpow(p - 1) * qint(ctx, p))]
        if gen == "e1":
            return [((sigma, p - 1),
                     ctx.qpow(-sigma) * qint(ctx, p) * qbracket(ctx, lam1, 1 - p - sigma))]
        if gen == "e2":
            if not sigma:
                return []
            return [((sigma - 1, p + 1), eps * ctx.qpow(-p))]
        raise DomainError(gen)

    return _module_from_action(ctx, "atypical-mu2",
                               {"N": n, "lambda1": lam1, "epsilon": epsilon,
                                "type_b": type_b},
                               labels, act)


def atypical_sum(ctx: QContext, n: int, lambda1, epsilon: int,
                 type_b: bool = False) -> ModuleRep:
    """The atypical nilpotent family with vanishing [mu1+mu2+1] (k2
    eigenvalue eps lam1^-1 q^-1 at the top): dimension 2N+1 (type A) or
    2l' (type B)."""
    lam1 = _coerce(lambda1)
    if epsilon not in (1, -1):
        raise DomainError("epsilon must be +1 or -1")
    eps = rat(epsilon)
    lam1inv = lam1.inverse()
    if type_b:
        # the sigma = 1 layer is shifted down by one, as in the bounded
        # (2N+1)-dimensional case; the relation audit pins this convention
        n = ctx.lprime
        labels = [(s, p) for s in (0, 1) for p in range(-s, ctx.lprime - s)]
    else:
        if not 1 <= n <= ctx.lprime:
            raise DomainError(f"dimension label must satisfy 1 <= N <= l' = {ctx.lprime}")
        if not qbracket(ctx, lam1, 1 - n).is_zero():
            raise DomainError("the bounded branch requires lambda1 = +/- q^{N-1} "
                              "([mu1-N+1] = 0); use type_b for generic lambda1")
        labels = [(s, p) for s in (0, 1) for p in range(-s, n)]

    def act(gen, lab):
        sigma, p = lab
        if gen == "k1":
            return [((sigma, p), lam1 * ctx.qpow(-sigma - 2 * p))]
        if gen == "k1inv":
            return [((sigma, p), (lam1 * ctx.qpow(-sigma - 2 * p)).inverse())]
        if gen == "k2":
            return [((sigma, p), eps * lam1inv * ctx.qpow(sigma + p - 1))]
        if gen == "k2inv":
            return [((sigma, p), (eps * lam1inv * ctx.qpow(sigma + p - 1)).inverse())]
        if gen == "f1":
            return [((sigma, p + 1), ctx.qpow(sigma))]
        if gen == "f2":
            if sigma:
                return []
            return [((sigma + 1, p - 1),
                     -lam1inv * ctx.qpow(p - 2) * qbracket(ctx, lam1, 1 - p))]
        if gen == "e1":
            return [((sigma, p - 1),
                     ctx.qpow(-sigma) * qint(ctx, p + sigma) * qbracket(ctx, lam1, 1 - p))]
        if gen == "e2":
            if not sigma:
                return []
            return [((sigma - 1, p + 1), eps * lam1 * ctx.qpow(1 - p))]
        raise DomainError(gen)

    return _module_from_action(ctx, "atypical-sum",
                               {"N": n, "lambda1": lam1, "epsilon": epsilon,
                                "type_b": type_b},
                               labels, act)


def typical_periodic(ctx: QContext, lambda1, lambda2, phi, beta) -> ModuleRep:
    """The 4l-dimensional typical periodic module (p wraps modulo l)."""
    lam1, lam2, phi, beta = map(_coerce, (lambda1, lambda2, phi, beta))
    if phi.is_zero():
        raise DomainError("phi must be nonzero")
    atyp = qbracket(ctx, lam2, 0) * qbracket(ctx, lam1 * lam2, 1) - beta
    if atyp.is_zero():
        raise DomainError("parameters are atypical ([mu2][mu1+mu2+1] = beta); "
                          "use the atypical periodic constructor")
    l = ctx.l
    labels = [(rho, sigma, p) for rho, sigma in itertools.product((0, 1), (0, 1))
              for p in range(l)]
    phinv = phi.inverse()

    def act(gen, lab):
        rho, sigma, p = lab
        if gen == "k1":
            return [((rho, sigma, p), lam1 * ctx.qpow(rho - sigma - 2 * p))]
        if gen == "k1inv":
            return [((rho, sigma, p), (lam1 * ctx.qpow(rho - sigma - 2 * p)).inverse())]
        if gen == "k2":
            return [((rho, sigma, p), lam2 * ctx.qpow(sigma + p))]
        if gen == "k2inv":
            return [((rho, sigma, p), (lam2 * ctx.qpow(sigma + p)).inverse())]
        if gen == "f1":
            out = [((rho, sigma, (p + 1) % l), phi * ctx.qpow(sigma - rho))]
            if rho and not sigma:
                out.append(((rho - 1, sigma + 1, p), -phi * ctx.qpow(-rho)))
            return out
        if gen == "f2":
            return [] if rho else [((rho + 1, sigma, p), rat(1))]
        if gen == "e1":
            out = []
            if sigma and not rho:
                out.append(((rho + 1, sigma - 1, p), -phinv * lam1 * ctx.qpow(-2 * p + 1)))
            out.append(((rho, sigma, (p - 1) % l),
                        phinv * (qint(ctx, p) * qbracket(ctx, lam1, 1 - p) + beta)))
            return out
        if gen == "e2":
            out = []
            if rho:
                out.append(((rho - 1, sigma, p), qbracket(ctx, lam2, p + sigma)))
            if sigma:
                coeff = lam2.inverse() * ctx.qpow(-p)
                if rho:
                    coeff = -coeff
                out.append(((rho, sigma - 1, (p + 1) % l), coeff))
            return out
        raise DomainError(gen)

    return _module_from_action(ctx, "typical-periodic",
                               {"lambda1": lam1, "lambda2": lam2, "phi": phi,
                                "beta": beta},
                               labels, act, v0=[(0, 0, p) for p in range(l)])


def atypical_periodic(ctx: QContext, lambda1, lambda2, phi) -> ModuleRep:
    """The 2l-dimensional atypical periodic module; the e1 return coefficient
    is pinned to beta = [mu2][mu1+mu2+1]."""
    lam1, lam2, phi = map(_coerce, (lambda1, lambda2, phi))
    if phi.is_zero():
        raise DomainError("phi must be nonzero")
    l = ctx.l
    labels = [(s, p) for s in (0, 1) for p in range(l)]
    phinv = phi.inverse()
    lam12 = lam1 * lam2

    def act(gen, lab):
        sigma, p = lab
        if gen == "k1":
            return [((sigma, p), lam1 * ctx.qpow(-sigma - 2 * p))]
        if gen == "k1inv":
            return [((sigma, p), (lam1 * ctx.qpow(-sigma - 2 * p)).inverse())]
        if gen == "k2":
            return [((sigma, p), lam2 * ctx.qpow(sigma + p))]
        if gen == "k2inv":
            return [((sigma, p), (lam2 * ctx.qpow(sigma + p)).inverse())]
        if gen == "f1":
            return [((sigma, (p + 1) % l), phi * ctx.qpow(sigma))]
        if gen == "f2":
            if sigma:
                return []
            return [((sigma + 1, (p - 1) % l),
                     lam2 * ctx.qpow(p - 1) * qbracket(ctx, lam2, p))]
        if gen == "e1":
            return [((sigma, (p - 1) % l),
                     phinv * ctx.qpow(-sigma) * qbracket(ctx, lam2, p)
                     * qbracket(ctx, lam12, 1 - p - sigma))]
        if gen == "e2":
            if not sigma:
                return []
            return [((sigma - 1, (p + 1) % l), lam2.inverse() * ctx.qpow(-p))]
        raise DomainError(gen)

    return _module_from_action(ctx, "atypical-periodic",
                               {"lambda1": lam1, "lambda2": lam2, "phi": phi},
                               labels, act)


# ---------------------------------------------------------------------------
# induced modules
# ---------------------------------------------------------------------------

def induce(ctx: QContext, v0: Gl2Module) -> ModuleRep:
    """The induced module on V0 extended by e2 V0 = 0, realized on the basis
    w_{rho,sigma,p} = phi^{-sigma} f2^rho f3^sigma (x) v_p.

    The action is computed through the normal-form engine: each generator
    times f2^rho f3^sigma is straightened, the right tail (powers of e1,
    k-letters, f1) acts inside V0, and terms ending in e2 or e3 annihilate
    V0.  phi is read from the parameters when V0 is periodic (1 otherwise).
    """
    n = v0.dim
    phi = v0.params.get("phi", rat(1))
    phinv = phi.inverse()
    labels = [(rho, sigma, p) for rho, sigma in itertools.product((0, 1), (0, 1))
              for p in range(n)]
    index = {lab: i for i, lab in enumerate(labels)}
    dim = 4 * n

    def tail_matrix(mono) -> Matrix | None:
        """Matrix on V0 of the PBW tail f1^p k1^a1 k2^a2 e1^t e3 e2."""
        if mono.rhop or mono.sigmap:
            return None
        out = Matrix.identity(n)
        if mono.p:
            out = out * v0.mats["f1"] ** mono.p
        if mono.a1:
            out = out * (v0.mats["k1"] if mono.a1 > 0 else v0.mats["k1inv"]) ** abs(mono.a1)
        if mono.a2:
            out = out * (v0.mats["k2"] if mono.a2 > 0 else v0.mats["k2inv"]) ** abs(mono.a2)
        if mono.t:
            out = out * v0.mats["e1"] ** mono.t
        return out

    mats = {}
    for gen in ("k1", "k1inv", "k2", "k2inv", "e1", "e2", "f1", "f2"):
        mat = Matrix(dim, dim)
        for rho, sigma in itertools.product((0, 1), (0, 1)):
            word = [gen] + ["f2"] * rho + ["f3"] * sigma
            elem = from_word(ctx, word)
            for mono, coeff in elem.terms.items():
                tail = tail_matrix(mono)
                if tail is None:
                    continue
                scale = coeff * phi ** (mono.sigma - sigma)
                for p in range(n):
                    j = index[(rho, sigma, p)]
                    col = tail.apply({p: rat(1)})
                    for p2, x in col.items():
                        i = index[(mono.rho, mono.sigma, p2)]
                        cur = mat.rows[i].get(j)
                        val = scale * x if cur is None else cur + scale * x
                        if val.is_zero():
                            mat.rows[i].pop(j, None)
                        else:
                            mat.rows[i][j] = val
        mats[gen] = mat
    params = dict(v0.params)
    return ModuleRep(ctx=ctx, family="induced/" + v0.family, params=params,
                     dim=dim, basis=labels, mats=mats,
                     v0_indices=[index[(0, 0, p)] for p in range(n)])


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def classify(ctx: QContext, lambda1, lambda2, n: int | None = None,
             phi=None, beta=None, e_periodic: bool = False) -> tuple[str, int]:
    """Map exact parameters to (family, dimension of the irreducible module).

    Nilpotent data: (lambda1, lambda2, N).  Periodic data adds phi (nonzero)
    and beta.  `e_periodic` requests the transposed one-sided case, which is
    reached through the e<->f automorphism, not directly.
    """
    lam1, lam2 = _coerce(lambda1), _coerce(lambda2)
    l, lp = ctx.l, ctx.lprime
    if e_periodic:
        raise DomainError("apply the e<->f automorphism first: one-sided "
                          "e-periodic data is the image of f-periodic data")
    if phi is not None:
        phi = _coerce(phi)
        if phi.is_zero():
            raise DomainError("apply the e<->f automorphism first (phi = 0 "
                              "with periodicity requested)")
        beta = _coerce(beta if beta is not None else 0)
        atyp = qbracket(ctx, lam2, 0) * qbracket(ctx, lam1 * lam2, 1) - beta
        if atyp.is_zero():
            return "atypical-periodic", 2 * l
        return "typical-periodic", 4 * l
    if n is None:
        raise DomainError("nilpotent data requires the bottom-layer dimension N")
    if not 1 <= n <= lp:
        raise DomainError(f"N must satisfy 1 <= N <= l' = {lp}")
    mu2_zero = qbracket(ctx, lam2, 0).is_zero()
    n_mu2_zero = qbracket(ctx, lam2, n).is_zero()
    type_a = qbracket(ctx, lam1, 1 - n).is_zero()
    if not type_a and n != lp:
        raise DomainError("a nilpotent bottom layer with N < l' requires "
                          "lambda1 = +/- q^{N-1}")
    if mu2_zero and n_mu2_zero:
        # forces N = l'; the bounded (2l'-1)-dimensional branch needs the
        # lambda1 constraint, otherwise the simple quotient keeps dimension 2l'
        return ("atypical-mu2", 2 * lp - 1) if type_a else ("atypical-mu2", 2 * lp)
    if mu2_zero:
        return "atypical-mu2", 2 * n - 1
    if type_a:
        if n_mu2_zero:
            return "atypical-sum", 2 * n + 1
        return "typical-nilpotent", 4 * n
    # type B: N = l', lambda1 free; atypicality is [mu1+mu2+1] = 0
    if qbracket(ctx, lam1 * lam2, 1).is_zero():
        return "atypical-sum", 2 * lp
    return "typical-nilpotent", 4 * n


def expected_casimir_scalar(ctx: QContext, p: int, lambda1, lambda2,
                            beta=0) -> CycloScalar:
    """Closed-form Casimir eigenvalue on a highest-weight/periodic family:
    (q-q^-1)^2 lam1^{2p-1} lam2^{4p-2} ([mu2][mu1+mu2+1] - beta), with
    beta = 0 on nilpotent families."""
    lam1, lam2, beta = map(_coerce, (lambda1, lambda2, beta))
    s = ctx.qdiff
    return (s * s * lam1 ** (2 * p - 1) * lam2 ** (4 * p - 2)
            * (qbracket(ctx, lam2, 0) * qbracket(ctx, lam1 * lam2, 1) - beta))


# ---------------------------------------------------------------------------
# generic parameter sampling
# ---------------------------------------------------------------------------

def sample_typical_periodic(ctx: QContext, rng, count: int = 1) -> list[dict]:
    """Draw `count` generic rational parameter sets (lambda1, lambda2, phi,
    beta), exactly rejecting every degeneracy: phi = 0, [mu2] = 0,
    [mu1+mu2+1] = 0, [mu2][mu1+mu2+1] - beta = 0, and repeats."""
    out = []
    seen = set()
    while len(out) < count:
        vals = [mpq(rng.randint(1, 60), rng.randint(1, 60)) for _ in range(4)]
        if rng.random() < 0.5:
            vals[3] = -vals[3]
        key = tuple(vals)
        if key in seen:
            continue
        lam1, lam2, phi, beta = (rat(v) for v in vals)
        if phi.is_zero() or lam1.is_zero() or lam2.is_zero():
            continue
        if qbracket(ctx, lam2, 0).is_zero():
            continue
        if qbracket(ctx, lam1 * lam2, 1).is_zero():
            continue
        if (qbracket(ctx, lam2, 0) * qbracket(ctx, lam1 * lam2, 1) - beta).is_zero():
            continue
        seen.add(key)
        out.append({"lambda1": lam1, "lambda2": lam2, "phi": phi, "beta": beta})
    return out
