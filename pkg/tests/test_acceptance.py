"""Acceptance suite: eight exact, zero-tolerance criteria.

Each test prints exactly one `CRITERION n: PASS/FAIL - detail` line (echoed
again in the terminal summary).  Every check is exact arithmetic; a FAIL
here is a genuine mathematical discrepancy, not a tolerance issue.  The
rationale for the expected-red parts of criteria 4 and 8 is documented in
the project notes kept outside the repository.
"""

import random
import time

import pytest

from qsl21.cli import (build_module, casimir_parameters, check_chebyshev_gl2,
                       sample_family_params)
from qsl21.cyclo import rat
from qsl21.families import (Gl2Module, atypical_mu2, atypical_periodic,
                            atypical_sum, classify, expected_casimir_scalar,
                            gl2_nilpotent, gl2_periodic, induce,
                            sample_typical_periodic, typical_nilpotent,
                            typical_periodic)
from qsl21.modules import centre_identity, complete_set_rank, psi_module
from qsl21.pbw import (apply_psi, defining_relations, from_word,
                       monomial_window)
from qsl21.qkernel import QContext, centre_poly, qbracket

from _criterion_log import record


# ---------------------------------------------------------------------------
# criterion 1: relation audit on every family instance
# ---------------------------------------------------------------------------

def test_criterion_1_relation_audit(family_instances):
    start = time.monotonic()
    failures = []
    audited = 0
    for ctx, family, params, m in family_instances:
        audit = m.audit() if isinstance(m, Gl2Module) else m.audit_relations()
        if not isinstance(m, Gl2Module):
            assert len(audit) == 13
        audited += 1
        bad = [k for k, ok in audit.items() if not ok]
        if bad:
            failures.append((ctx.l, family, bad))
    elapsed = time.monotonic() - start
    ok = not failures and audited >= 5 * 7 * 3 and elapsed < 60.0
    record(1, ok, f"{audited} instances over l=3..7, all residuals exactly "
                  f"zero, {elapsed:.1f}s" if ok else f"failures={failures} "
                  f"elapsed={elapsed:.1f}s")
    assert ok, failures


# ---------------------------------------------------------------------------
# criterion 2: dimension ledger with Burnside certificates
# ---------------------------------------------------------------------------

def _simple(m) -> bool:
    return m.burnside_dim() == m.dim * m.dim


def test_criterion_2_dimension_ledger():
    problems = []

    def expect(m, dim, cls=None):
        if m.dim != dim:
            problems.append((m.family, m.params, "dim", m.dim, dim))
        elif not _simple(m):
            problems.append((m.family, m.params, "burnside deficient"))
        if cls is not None and cls != (m.family, dim):
            problems.append((m.family, m.params, "classify", cls))

    ctx = QContext(3)
    lp = ctx.lprime
    lam2 = rat(5, 7)
    # exhaustive over the bottom-layer dimension N at l = 3
    for n in (1, 2, 3):
        lam1 = ctx.qpow(n - 1)
        expect(typical_nilpotent(ctx, n, lam1, lam2), 4 * n,
               classify(ctx, lam1, lam2, n=n))
    # first atypical branch: 2N - 1, plus the N = l' corner and type B
    for n in (1, 2):
        lam1 = ctx.qpow(n - 1)
        expect(atypical_mu2(ctx, n, lam1, 1), 2 * n - 1,
               classify(ctx, lam1, rat(1), n=n))
    expect(atypical_mu2(ctx, lp, ctx.qpow(lp - 1), -1), 2 * lp - 1,
           classify(ctx, ctx.qpow(lp - 1), rat(-1), n=lp))
    expect(atypical_mu2(ctx, lp, rat(2, 3), 1, type_b=True), 2 * lp,
           classify(ctx, rat(2, 3), rat(1), n=lp))
    # second atypical branch: 2N + 1, plus type B
    for n in (1, 2):
        lam1 = ctx.qpow(n - 1)
        expect(atypical_sum(ctx, n, lam1, 1), 2 * n + 1,
               classify(ctx, lam1, lam1.inverse() * ctx.qinv, n=n))
    expect(atypical_sum(ctx, lp, rat(3, 2), -1, type_b=True), 2 * lp,
           classify(ctx, rat(3, 2), rat(-1) * rat(2, 3) * ctx.qinv, n=lp))
    # periodic: 4l typical, 2l atypical
    per = sample_typical_periodic(ctx, random.Random(2026), 1)[0]
    expect(typical_periodic(ctx, **per), 4 * ctx.l,
           classify(ctx, per["lambda1"], per["lambda2"],
                    phi=per["phi"], beta=per["beta"]))
    expect(atypical_periodic(ctx, rat(2), rat(3), rat(5)), 2 * ctx.l)
    # a reducible induced module must be Burnside-deficient
    big = induce(ctx, gl2_nilpotent(ctx, 2, ctx.q, rat(1)))
    if _simple(big):
        problems.append(("induced atypical data", "unexpectedly simple"))
    # spot checks at l = 5
    ctx5 = QContext(5)
    expect(typical_nilpotent(ctx5, 2, ctx5.q, lam2), 8,
           classify(ctx5, ctx5.q, lam2, n=2))
    expect(atypical_mu2(ctx5, 2, ctx5.q, 1), 3,
           classify(ctx5, ctx5.q, rat(1), n=2))
    expect(atypical_sum(ctx5, 3, ctx5.qpow(2), -1), 7)
    expect(atypical_periodic(ctx5, rat(2), rat(3), rat(5)), 10)
    per5 = sample_typical_periodic(ctx5, random.Random(7), 1)[0]
    expect(typical_periodic(ctx5, **per5), 20)

    ok = not problems
    record(2, ok, "all family dimensions certified by construction, "
                  "Burnside closure and classification (l=3 exhaustive, "
                  "l=5 spots)" if ok else f"problems={problems}")
    assert ok, problems


# ---------------------------------------------------------------------------
# criterion 3: Casimir centrality and closed-form eigenvalues
# ---------------------------------------------------------------------------

def test_criterion_3_casimir_eigenvalues(family_instances):
    failures = []
    checked = 0
    for ctx, family, params, m in family_instances:
        if isinstance(m, Gl2Module):
            continue
        lam1, lam2, beta = casimir_parameters(ctx, m)
        for p in range(1, ctx.l + 1):
            if not m.casimir_commutes(p):
                failures.append((ctx.l, family, p, "not central"))
                continue
            want = expected_casimir_scalar(ctx, p, lam1, lam2, beta)
            if not (m.casimir_scalar(p) - want).is_zero():
                failures.append((ctx.l, family, p, "eigenvalue mismatch"))
        checked += 1
    ok = not failures and checked >= 5 * 5 * 3
    record(3, ok, f"C_p central with the closed-form eigenvalue for "
                  f"p=1..l on {checked} instances" if ok
           else f"failures={failures[:5]}")
    assert ok, failures[:10]


# ---------------------------------------------------------------------------
# criterion 4: centre relations on typical/atypical periodic modules
# ---------------------------------------------------------------------------

def test_criterion_4_centre_relations():
    start = time.monotonic()
    rng = random.Random(40444)
    partial_bad = []       # failures of the product/shift relations
    main_fail = 0
    draws = 0
    atyp_lhs_bad = atyp_rhs_fail = 0
    atyp_draws = 0
    for l in (3, 5, 7):
        ctx = QContext(l)
        for p in sample_typical_periodic(ctx, rng, 20):
            m = typical_periodic(ctx, **p)
            rep = centre_identity(m)
            draws += 1
            for key in ("products", "shift_full", "shift_lth_power"):
                if not rep.verdicts[key]:
                    partial_bad.append((l, key, p))
            if not rep.verdicts["main_identity"]:
                main_fail += 1
        for _ in range(5):
            ap = sample_family_params(ctx, rng, "atypical-periodic")
            rep = centre_identity(build_module(ctx, "atypical-periodic", ap))
            atyp_draws += 1
            if not rep.lhs.is_zero():
                atyp_lhs_bad += 1
            if not rep.rhs.is_zero():
                atyp_rhs_fail += 1
    elapsed = time.monotonic() - start
    ok = (not partial_bad and main_fail == 0 and atyp_lhs_bad == 0
          and atyp_rhs_fail == 0 and draws >= 60 and elapsed < 120.0)
    record(4, ok,
           f"all centre relations exact on {draws} draws, {elapsed:.1f}s"
           if ok else
           f"product/shift relations and atypical lhs=0 exact on {draws}"
           f"+{atyp_draws} draws ({elapsed:.1f}s), but the stated polynomial "
           f"identity fails on {main_fail}/{draws} generic draws and its "
           f"right-hand side is nonzero on {atyp_rhs_fail}/{atyp_draws} "
           f"atypical draws; the factorised closed form "
           f"(centre report verdict 'factorised_eigenvalue') matches instead")
    # the parts that do hold must stay exact
    assert not partial_bad, partial_bad
    assert atyp_lhs_bad == 0
    assert elapsed < 120.0
    # the identity as stated, asserted faithfully (expected red; the
    # right-hand side depends only on (z1, z2, x1, y1), which provably
    # cannot determine the polynomial's value -- see the project notes)
    assert ok, (f"stated centre identity fails on {main_fail}/{draws} "
                f"generic draws")


# ---------------------------------------------------------------------------
# criterion 5: even-subalgebra Chebyshev relation and factorization
# ---------------------------------------------------------------------------

def test_criterion_5_gl2_chebyshev():
    rng = random.Random(50555)
    failures = []
    for l in (3, 5, 7):
        ctx = QContext(l)
        for p in sample_typical_periodic(ctx, rng, 20):
            m = gl2_periodic(ctx, p["lambda1"], p["lambda2"], p["phi"],
                             p["beta"])
            if not check_chebyshev_gl2(m):
                failures.append((l, "chebyshev", p))
        # polynomial factorization at random rational points:
        # with x2 = L x1 and C_p = L^{2p-2} C_1, C_1 = L (x1-1/x1)(x2-1/x2),
        # the centre polynomial equals L^l (x1^l - x1^-l)(x2^l - x2^-l)
        for _ in range(50):
            x1 = rat(rng.randint(1, 40), rng.randint(1, 40))
            big = rat(rng.randint(1, 40), rng.randint(1, 40))
            x2 = big * x1
            c1 = big * (x1 - x1.inverse()) * (x2 - x2.inverse())
            cs = [big ** (2 * k - 2) * c1 for k in range(1, l + 1)]
            lhs = centre_poly(ctx, cs)
            rhs = big ** l * (x1 ** l - x1 ** -l) * (x2 ** l - x2 ** -l)
            if not (lhs - rhs).is_zero():
                failures.append((l, "factorization", str(x1), str(big)))
    ok = not failures
    record(5, ok, "Chebyshev relation exact on 20 even-subalgebra periodic "
                  "modules per l in {3,5,7}; polynomial factorization exact "
                  "at 50 rational points per l" if ok
           else f"failures={failures[:5]}")
    assert ok, failures[:10]


# ---------------------------------------------------------------------------
# criterion 6: induction / quotient round trip per atypical branch
# ---------------------------------------------------------------------------

def test_criterion_6_induction_quotients():
    problems = []

    def check(cond, label):
        if not cond:
            problems.append(label)

    ctx = QContext(5)
    l, lp = ctx.l, ctx.lprime

    # branch 1: k2-weight eps on the bottom layer, N < l'.  The singular
    # vector w_{1,0,0} generates a (2N+1)-dimensional submodule; the
    # quotient is the (2N-1)-dimensional closed-form module.
    v0 = gl2_nilpotent(ctx, 2, ctx.q, rat(1))
    big = induce(ctx, v0)
    check(all(big.audit_relations().values()), "b1 audit")
    j = big.basis.index((1, 0, 0))
    w = {j: rat(1)}
    check(not big.mats["e1"].apply(w) and not big.mats["e2"].apply(w),
          "b1 w_{1,0,0} singular")
    sub = big.submodule_generated([w])
    check(sub.rank == 5, f"b1 submodule dim {sub.rank} != 5")
    quot = big.quotient(sub)
    check(quot.dim == 3, "b1 quotient dim")
    check(quot.isomorphism_to(atypical_mu2(ctx, 2, ctx.q, 1)) is not None,
          "b1 intertwiner")

    # branch 2: vanishing [N + mu2].  The stated combination
    # lam1 q w_{1,0,1} + [mu1] w_{0,1,0} is singular, generates dimension
    # 2N-1, and the quotient is the (2N+1)-dimensional closed form.
    lam1, lam2 = ctx.q, ctx.qpow(-2)
    big = induce(ctx, gl2_nilpotent(ctx, 2, lam1, lam2))
    vs = {big.basis.index((1, 0, 1)): lam1 * ctx.q,
          big.basis.index((0, 1, 0)): qbracket(ctx, lam1, 0)}
    vs = {k: v for k, v in vs.items() if not v.is_zero()}
    check(not big.mats["e1"].apply(vs) and not big.mats["e2"].apply(vs),
          "b2 stated vector singular")
    sub = big.submodule_generated([vs])
    check(sub.rank == 3, f"b2 submodule dim {sub.rank} != 3")
    quot = big.quotient(sub)
    check(quot.dim == 5, "b2 quotient dim")
    iso = quot.isomorphism_to(atypical_sum(ctx, 2, lam1, 1))
    check(iso is not None, "b2 intertwiner")

    # N = 1 corner: w_{1,1,0} generates a 1-dimensional submodule
    big = induce(ctx, gl2_nilpotent(ctx, 1, rat(1), ctx.qinv))
    sub = big.submodule_generated([{big.basis.index((1, 1, 0)): rat(1)}])
    check(sub.rank == 1, f"N=1 submodule dim {sub.rank} != 1")
    check(big.quotient(sub).dim == 3, "N=1 quotient dim")

    # N = l' corner of branch 1: w_{0,1,l'-1} is subsingular (singular only
    # modulo the submodule of w_{1,0,0}); together they generate dimension
    # 2l'+1 and the quotient is the (2l'-1)-dimensional closed form.
    lam1 = ctx.qpow(lp - 1)
    big = induce(ctx, gl2_nilpotent(ctx, lp, lam1, rat(1)))
    j = big.basis.index((1, 0, 0))
    j2 = big.basis.index((0, 1, lp - 1))
    first = big.submodule_generated([{j: rat(1)}])
    w2 = {j2: rat(1)}
    check(bool(big.mats["e1"].apply(w2)) or bool(big.mats["e2"].apply(w2)),
          "corner vector is not plainly singular")
    check(not first.reduce(big.mats["e1"].apply(w2))
          and not first.reduce(big.mats["e2"].apply(w2)),
          "corner vector subsingular")
    sub = big.submodule_generated([{j: rat(1)}, w2])
    check(sub.rank == 2 * lp + 1, f"corner submodule dim {sub.rank}")
    quot = big.quotient(sub)
    check(quot.dim == 2 * lp - 1, "corner quotient dim")
    check(quot.isomorphism_to(atypical_mu2(ctx, lp, lam1, 1)) is not None,
          "corner intertwiner")

    # type B of branch 1 (generic k1-weight at N = l'): submodule and
    # quotient both of dimension 2l'
    big = induce(ctx, gl2_nilpotent(ctx, lp, rat(7), rat(1)))
    sub = big.submodule_generated([{big.basis.index((1, 0, 0)): rat(1)}])
    check(sub.rank == 2 * lp, f"typeB1 submodule dim {sub.rank}")
    quot = big.quotient(sub)
    check(quot.dim == 2 * lp, "typeB1 quotient dim")
    check(quot.isomorphism_to(atypical_mu2(ctx, lp, rat(7), 1,
                                           type_b=True)) is not None,
          "typeB1 intertwiner")

    # type B of branch 2
    lam1 = rat(7)
    big = induce(ctx, gl2_nilpotent(ctx, lp, lam1,
                                    lam1.inverse() * ctx.qinv))
    vs = {big.basis.index((1, 0, 1)): lam1 * ctx.q,
          big.basis.index((0, 1, 0)): qbracket(ctx, lam1, 0)}
    check(not big.mats["e1"].apply(vs) and not big.mats["e2"].apply(vs),
          "typeB2 stated vector singular")
    sub = big.submodule_generated([vs])
    check(sub.rank == 2 * lp, f"typeB2 submodule dim {sub.rank}")
    quot = big.quotient(sub)
    check(quot.dim == 2 * lp, "typeB2 quotient dim")
    iso = quot.isomorphism_to(atypical_sum(ctx, lp, lam1, 1, type_b=True))
    if iso is None:
        iso = quot.isomorphism_to(atypical_sum(ctx, lp, lam1, -1,
                                               type_b=True))
    check(iso is not None, "typeB2 intertwiner")

    # periodic atypical branch at l = 3: the stated submodule generators
    # u_p = [mu2+p+1] w_{0,1,p} - lam2^-1 q^-p w_{1,0,p+1} and w_{1,1,p}
    # generate dimension 2l; the quotient matches the closed form
    ctx3 = QContext(3)
    lam1, lam2, phi = rat(2), rat(3), rat(5)
    beta = qbracket(ctx3, lam2, 0) * qbracket(ctx3, lam1 * lam2, 1)
    big = induce(ctx3, gl2_periodic(ctx3, lam1, lam2, phi, beta))
    gens = []
    for p in range(ctx3.l):
        u = {big.basis.index((0, 1, p)): qbracket(ctx3, lam2, p + 1),
             big.basis.index((1, 0, (p + 1) % ctx3.l)):
                 -lam2.inverse() * ctx3.qpow(-p)}
        gens.append({k: v for k, v in u.items() if not v.is_zero()})
        gens.append({big.basis.index((1, 1, p)): rat(1)})
    sub = big.submodule_generated(gens)
    check(sub.rank == 2 * ctx3.l, f"periodic submodule dim {sub.rank}")
    quot = big.quotient(sub)
    check(quot.dim == 2 * ctx3.l, "periodic quotient dim")
    check(all(quot.audit_relations().values()), "periodic quotient audit")
    check(quot.isomorphism_to(atypical_periodic(ctx3, lam1, lam2, phi))
          is not None, "periodic intertwiner")

    ok = not problems
    record(6, ok, "every atypical branch: stated singular/subsingular "
                  "vectors found, submodule dimensions match, quotient "
                  "isomorphic to the closed-form module (invertible "
                  "intertwiner)" if ok else f"problems={problems}")
    assert ok, problems


# ---------------------------------------------------------------------------
# criterion 7: completeness rank evidence at l = 3
# ---------------------------------------------------------------------------

def test_criterion_7_complete_set_rank():
    ctx = QContext(3)
    rng = random.Random(70777)
    monos = monomial_window(2, 2, 2)
    assert len(monos) == 3600
    sample = [typical_periodic(ctx, **p)
              for p in sample_typical_periodic(ctx, rng, 25)]
    rank25, count = complete_set_rank(ctx, monos, sample)
    # the literal 5-module sample: its 5 * 144 = 720 coordinates cap the
    # rank below the monomial count for any parameters (see project notes);
    # run it anyway and require the maximum it can achieve
    rank5, _ = complete_set_rank(ctx, monos, sample[:5])
    # nilpotent replacement: e1^l f1^l evaluates to exactly zero
    elfl = from_word(ctx, [("e1", ctx.l), ("f1", ctx.l)])
    nil = [typical_nilpotent(ctx, n, ctx.qpow(n - 1), rat(5, 7))
           for n in (1, 2, 3)]
    nil_zero = all(m.eval(elfl).is_zero() for m in nil)
    per_nonzero = not sample[0].eval(elfl).is_zero()
    nil_rank, nil_count = complete_set_rank(ctx, list(elfl.terms), nil)

    ok = (rank25 == count == 3600 and rank5 == 720 and nil_zero
          and per_nonzero and nil_rank < nil_count)
    record(7, ok, f"evaluation map injective on all 3600 window monomials "
                  f"over 25 generic periodic modules (5 modules saturate "
                  f"their 720-coordinate cap); the degree-l ladder product "
                  f"vanishes identically on nilpotent samples "
                  f"(rank {nil_rank}/{nil_count})" if ok else
           f"rank25={rank25}/{count} rank5={rank5} nil_zero={nil_zero} "
           f"nil_rank={nil_rank}/{nil_count}")
    assert ok


# ---------------------------------------------------------------------------
# criterion 8: the e<->f involution
# ---------------------------------------------------------------------------

def test_criterion_8_involution():
    rng = random.Random(80888)
    problems = []
    letters = ("f2", "f3", "f1", "k1", "k1inv", "k2", "k2inv",
               "e1", "e3", "e2")
    for l in (3, 5):
        ctx = QContext(l)
        for _ in range(25):
            word = [rng.choice(letters) for _ in range(rng.randrange(6))]
            x = from_word(ctx, word).scale(rat(rng.randrange(-4, 5)))
            if apply_psi(apply_psi(x)) != x:
                problems.append((l, "involution", word))
        for name, relation in defining_relations(ctx).items():
            if not apply_psi(relation).is_zero():
                problems.append((l, "relation image", name))
    # twisted periodic modules: full audit and the centre report
    centre_red = []
    for l in (3, 5):
        ctx = QContext(l)
        for p in sample_typical_periodic(ctx, random.Random(l), 3):
            tw = psi_module(typical_periodic(ctx, **p))
            if not all(tw.audit_relations().values()):
                problems.append((l, "twisted audit", p))
                continue
            rep = centre_identity(tw)
            for key in ("products", "shift_full", "shift_lth_power"):
                if not rep.verdicts[key]:
                    problems.append((l, "twisted " + key, p))
            if not rep.ok():
                centre_red.append((l, tuple(k for k, v in rep.verdicts.items()
                                            if not v)))
    ok = not problems and not centre_red
    record(8, ok, "involution squares to the identity, preserves all 26 "
                  "relations, and twisted periodic modules pass audit and "
                  "centre identity" if ok else
           ("involution and audits exact; the twisted modules inherit the "
            f"known centre-identity failure: {sorted(set(centre_red))}"
            if not problems else f"problems={problems[:5]}"))
    assert not problems, problems[:10]
    assert ok, centre_red
