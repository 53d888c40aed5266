"""Modular reduction certificates."""

import numpy as np
import pytest
from gmpy2 import is_prime

from qsl21.cyclo import FieldError, cyclo, rat
from qsl21.linalg import Matrix
from qsl21.linalg import rank as exact_rank
from qsl21.modp import (matrix_mod, modular_embedding, rank_mod, scalar_mod)


def test_modular_embedding_properties():
    for n in (1, 2, 3, 5, 7, 12, 24):
        p, z = modular_embedding(n)
        assert is_prime(p) and p % n in (0, 1) and p < 2_000_000
        assert pow(z, n, p) == 1
        for r in range(1, n):
            if n % r == 0:
                assert pow(z, r, p) != 1   # exact order n
    p0, _ = modular_embedding(5)
    p1, _ = modular_embedding(5, skip=1)
    assert p0 != p1


def test_scalar_mod_is_a_homomorphism():
    n = 7
    p, z = modular_embedding(n)
    a = cyclo(7, 3) + rat(2, 3)
    b = cyclo(7, 5) - rat(1, 4)
    ha, hb = scalar_mod(a, p, z), scalar_mod(b, p, z)
    assert scalar_mod(a + b, p, z) == (ha + hb) % p
    assert scalar_mod(a * b, p, z) == (ha * hb) % p
    assert scalar_mod(rat(1), p, z) == 1
    # the root of unity maps to z itself
    assert scalar_mod(cyclo(7, 1).lift(7), p, z) == z
    with pytest.raises(FieldError):
        scalar_mod(rat(1, p), p, z)


def test_matrix_mod_and_rank_certificate():
    n = 5
    p, z = modular_embedding(n)
    zeta = cyclo(5, 1)
    m = Matrix.from_dense([
        [rat(1), zeta, rat(0)],
        [zeta, zeta * zeta, rat(0)],   # multiple of row 0
        [rat(0), rat(1), rat(2, 3)],
    ])
    img = matrix_mod(m, n, p, z)
    r = rank_mod(img, 3, p)
    assert r == 2 == exact_rank(m)
    full = matrix_mod(Matrix.identity(4), n, p, z)
    assert rank_mod(full, 4, p) == 4   # full modular rank certifies full exact rank


def test_rank_mod_agrees_with_numpy_over_small_prime_free_integers():
    rng = np.random.default_rng(7)
    p, z = modular_embedding(1)
    for _ in range(10):
        a = rng.integers(-4, 5, size=(6, 8))
        m = Matrix.from_dense([[rat(int(x)) for x in row] for row in a])
        assert rank_mod(matrix_mod(m, 1, p, z), 8, p) == exact_rank(m)
