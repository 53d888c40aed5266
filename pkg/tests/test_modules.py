"""Module engine: evaluation, audits, Casimir operators, irreducibility,
quotients, twisting, centre report."""

import random

import pytest

from qsl21.cyclo import rat
from qsl21.families import (atypical_periodic, typical_nilpotent,
                            typical_periodic, sample_typical_periodic,
                            expected_casimir_scalar)
from qsl21.modules import (GEN_NAMES, ModuleError, centre_identity,
                           complete_set_rank, psi_module)
from qsl21.pbw import (ONE_MONO, PBWMonomial, casimir_element, from_word,
                       monomial_window)
from qsl21.qkernel import DomainError, QContext


def _typical_periodic(l, seed=12):
    ctx = QContext(l)
    params = sample_typical_periodic(ctx, random.Random(seed), 1)[0]
    return ctx, params, typical_periodic(ctx, **params)


def test_eval_matches_matrix_products():
    ctx, _, m = _typical_periodic(3)
    rng = random.Random(8)
    for _ in range(15):
        word = [rng.choice(GEN_NAMES) for _ in range(rng.randrange(1, 5))]
        direct = m.mats[word[0]]
        for g in word[1:]:
            direct = direct * m.mats[g]
        assert m.eval(from_word(ctx, word)) == direct


def test_eval_monomial_uses_composite_letters():
    ctx, _, m = _typical_periodic(3)
    mono = PBWMonomial(rho=1, sigma=1, p=2, a1=-1, a2=1, t=1, sigmap=1, rhop=1)
    assert m.eval_monomial(mono) == m.eval(from_word(ctx, mono.word()))


def test_audit_detects_corruption():
    _, _, m = _typical_periodic(3)
    assert all(m.audit_relations().values())
    m.mats["e1"].set(0, 0, m.mats["e1"].get(0, 0) + rat(1))
    broken = m.audit_relations()
    assert not all(broken.values())


def test_central_scalars_closed_forms():
    ctx, params, m = _typical_periodic(5)
    z1, z2, x1, y1 = m.central_scalars()
    lam1, lam2, phi = params["lambda1"], params["lambda2"], params["phi"]
    assert (z1 - lam1 ** ctx.l).is_zero()
    assert (z2 - lam2 ** ctx.l).is_zero()
    assert (y1 - phi ** ctx.l).is_zero()
    assert not x1.is_zero()   # generic periodic: e1^l also acts invertibly
    ctx3 = QContext(3)
    nil = typical_nilpotent(ctx3, 2, ctx3.q, rat(2, 7))
    _, _, x1n, y1n = nil.central_scalars()
    assert x1n.is_zero() and y1n.is_zero()


def test_scalar_of_rejects_non_scalar_operators():
    _, _, m = _typical_periodic(3)
    with pytest.raises(ModuleError):
        m.scalar_of(m.mats["f1"])


def test_casimir_matrix_matches_algebra_element():
    ctx, _, m = _typical_periodic(3)
    for p in (1, 2):
        assert m.casimir_matrix(p) == m.eval(casimir_element(ctx, p))


def test_casimir_commutes_and_scalar():
    ctx, params, m = _typical_periodic(5)
    assert m.casimir_commutes(1)
    want = expected_casimir_scalar(ctx, 2, params["lambda1"],
                                   params["lambda2"], params["beta"])
    assert (m.casimir_scalar(2) - want).is_zero()


def test_burnside_certificates():
    ctx, _, m = _typical_periodic(3)
    assert m.burnside_dim() == m.dim * m.dim      # simple: full matrix algebra
    nil = typical_nilpotent(ctx, 1, rat(1), rat(3, 5))
    assert nil.burnside_dim() == nil.dim * nil.dim


def test_submodule_and_quotient_machinery():
    ctx, _, m = _typical_periodic(3)
    full = m.submodule_generated([{0: rat(1)}])
    assert full.rank == m.dim                      # simple module
    from qsl21.linalg import EchelonBasis
    bogus = EchelonBasis(m.dim)
    bogus.add({0: rat(1)})
    with pytest.raises(ModuleError):
        m.quotient(bogus)                          # not invariant
    assert not m.singular_vectors()                # e-action is invertible


def test_isomorphism_to_self_and_psi_twist():
    ctx, _, m = _typical_periodic(3)
    assert m.isomorphism_to(m) is not None
    tw = psi_module(m)
    assert all(tw.audit_relations().values())
    z1, z2, x1, y1 = m.central_scalars()
    tz1, tz2, tx1, ty1 = tw.central_scalars()
    assert (tx1 - y1).is_zero() and (ty1 - x1).is_zero()
    assert (tz1 * z1 - rat(1)).is_zero()
    # k2 -> -k2^-1 so k2^l picks up (-1)^l
    assert (tz2 * z2 - rat(-1) ** ctx.l).is_zero()


def test_centre_identity_report_structure():
    ctx, _, m = _typical_periodic(5)
    rep = centre_identity(m)
    assert rep.l == 5 and len(rep.cp_scalars) == 5
    for key in ("main_identity", "shift_full", "shift_lth_power", "products",
                "gl2_chebyshev", "factorised_eigenvalue"):
        assert key in rep.verdicts
    # the relations that hold on every tested module
    assert rep.verdicts["shift_full"]
    assert rep.verdicts["shift_lth_power"]
    assert rep.verdicts["products"]
    assert rep.verdicts["gl2_chebyshev"]
    assert rep.verdicts["factorised_eigenvalue"]
    assert rep.ok() == all(rep.verdicts.values())


def test_centre_identity_requires_odd_order():
    ctx = QContext(4)
    m = typical_periodic(ctx, rat(2, 3), rat(5, 7), rat(1), rat(4))
    with pytest.raises(DomainError):
        centre_identity(m)


def test_atypical_periodic_centre_scalars():
    ctx = QContext(5)
    m = atypical_periodic(ctx, rat(2, 3), rat(5, 7), rat(1))
    # the Casimir operators all vanish on the atypical locus
    for p in (1, 2):
        assert m.casimir_matrix(p).is_zero()
    rep = centre_identity(m)
    assert rep.lhs.is_zero()


def test_complete_set_rank_small_window():
    ctx = QContext(3)
    sample = [typical_periodic(ctx, **d)
              for d in sample_typical_periodic(ctx, random.Random(2), 4)]
    r, n = complete_set_rank(ctx, [ONE_MONO], sample)
    assert (r, n) == (1, 1)
    window = monomial_window(1, 1, 0)
    r, n = complete_set_rank(ctx, window, sample)
    assert n == len(window)
    assert r <= n
