"""Exact sparse linear algebra over cyclotomic fields.

Matrices are row-sparse (dict per row); vectors are index->scalar dicts.
The representation matrices in this project have O(1) nonzeros per row, so
products of a few of them stay cheap.  Rank/kernel work goes through an
incremental reduced row echelon basis.
"""

from __future__ import annotations

from .cyclo import CycloScalar, rat

_ZERO = rat(0)
_ONE = rat(1)


def vec_scale(v: dict, c: CycloScalar) -> dict:
    if c.is_zero():
        return {}
    return {i: c * x for i, x in v.items()}


def vec_addmul(v: dict, w: dict, c: CycloScalar) -> dict:
    """v + c*w, dropping exact zeros."""
    out = dict(v)
    for i, x in w.items():
        y = out.get(i)
        y = c * x if y is None else y + c * x
        if y.is_zero():
            out.pop(i, None)
        else:
            out[i] = y
    return out


class Matrix:
    """A sparse exact matrix; rows[i] maps column -> nonzero scalar."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [{i: _ONE} for i in range(n)])

    @staticmethod
    def zero(n: int, m: int | None = None) -> "Matrix":
        return Matrix(n, m if m is not None else n)

    @staticmethod
    def diagonal(entries) -> "Matrix":
        entries = list(entries)
        return Matrix(len(entries), len(entries),
                      [{} if e.is_zero() else {i: e} for i, e in enumerate(entries)])

    @staticmethod
    def from_dense(rows) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        m = Matrix(nr, nc)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if not x.is_zero():
                    m.rows[i][j] = x
        return m

    def to_dense(self):
        return [[self.rows[i].get(j, _ZERO) for j in range(self.ncols)]
                for i in range(self.nrows)]

    def set(self, i: int, j: int, x: CycloScalar):
        if x.is_zero():
            self.rows[i].pop(j, None)
        else:
            self.rows[i][j] = x

    def get(self, i: int, j: int) -> CycloScalar:
        return self.rows[i].get(j, _ZERO)

    def copy(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols, [dict(r) for r in self.rows])

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self - other).is_zero()

    def __add__(self, other: "Matrix") -> "Matrix":
        out = self.copy()
        for i, r in enumerate(other.rows):
            row = out.rows[i]
            for j, x in r.items():
                y = row.get(j)
                y = x if y is None else y + x
                if y.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = y
        return out

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(rat(-1))

    def scale(self, c: CycloScalar) -> "Matrix":
        if c.is_zero():
            return Matrix.zero(self.nrows, self.ncols)
        return Matrix(self.nrows, self.ncols,
                      [{j: c * x for j, x in r.items()} for r in self.rows])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.ncols} vs {other.nrows}")
        out = Matrix(self.nrows, other.ncols)
        for i, r in enumerate(self.rows):
            acc = out.rows[i]
            for k, a in r.items():
                for j, b in other.rows[k].items():
                    y = acc.get(j)
                    y = a * b if y is None else y + a * b
                    if y.is_zero():
                        acc.pop(j, None)
                    else:
                        acc[j] = y
        return out

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def apply(self, v: dict) -> dict:
        """Matrix times a sparse column vector."""
        out = {}
        for i, r in enumerate(self.rows):
            acc = None
            for j, a in r.items():
                x = v.get(j)
                if x is not None:
                    acc = a * x if acc is None else acc + a * x
            if acc is not None and not acc.is_zero():
                out[i] = acc
        return out

    def commutator(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def anticommutator(self, other: "Matrix") -> "Matrix":
        return self * other + other * self

    def restrict(self, indices) -> "Matrix":
        """Principal submatrix on the given coordinate set (must be invariant
        to be meaningful as an operator)."""
        indices = list(indices)
        pos = {b: a for a, b in enumerate(indices)}
        out = Matrix(len(indices), len(indices))
        for a, i in enumerate(indices):
            for j, x in self.rows[i].items():
                if j in pos:
                    out.rows[a][pos[j]] = x
        return out

    def flatten(self) -> dict:
        """Row-major flattening into a sparse vector of length nrows*ncols."""
        out = {}
        for i, r in enumerate(self.rows):
            base = i * self.ncols
            for j, x in r.items():
                out[base + j] = x
        return out


class EchelonBasis:
    """An incremental reduced row echelon basis of sparse vectors."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: list[int] = []       # pivot column per row, sorted order of insertion
        self.rows: list[dict] = []        # normalized: rows[k][pivots[k]] == 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        v = {i: x for i, x in v.items() if not x.is_zero()}
        for piv, row in zip(self.pivots, self.rows):
            c = v.get(piv)
            if c is not None:
                v = vec_addmul(v, row, -c)
        return v

    def add(self, v: dict) -> bool:
        """Insert v if independent of the current span; returns True if added."""
        v = self.reduce(v)
        if not v:
            return False
        piv = min(v)
        inv = v[piv].inverse()
        v = vec_scale(v, inv)
        # keep reduced form: clear the new pivot column in existing rows
        for k, row in enumerate(self.rows):
            c = row.get(piv)
            if c is not None:
                self.rows[k] = vec_addmul(row, v, -c)
        self.pivots.append(piv)
        self.rows.append(v)
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def rank(m: Matrix) -> int:
    basis = EchelonBasis(m.ncols)
    for r in m.rows:
        if r:
            basis.add(r)
    return basis.rank


def nullspace(m: Matrix) -> list[dict]:
    """Exact right kernel basis of m (vectors as sparse dicts of length ncols)."""
    basis = EchelonBasis(m.ncols)
    for r in m.rows:
        if r:
            basis.add(r)
    pivset = set(basis.pivots)
    free = [j for j in range(m.ncols) if j not in pivset]
    out = []
    for j in free:
        v = {j: _ONE}
        for piv, row in zip(basis.pivots, basis.rows):
            c = row.get(j)
            if c is not None:
                v[piv] = -c
        out.append(v)
    return out


def intersect_kernels(mats) -> list[dict]:
    """Basis of the intersection of the right kernels of several matrices."""
    mats = list(mats)
    if not mats:
        raise ValueError("need at least one matrix")
    ncols = mats[0].ncols
    stacked = Matrix(sum(m.nrows for m in mats), ncols)
    off = 0
    for m in mats:
        for i, r in enumerate(m.rows):
            stacked.rows[off + i] = dict(r)
        off += m.nrows
    return nullspace(stacked)


def solve_intertwiner(mats_a: dict, mats_b: dict, dim: int) -> Matrix | None:
    """Find invertible T with T A_g = B_g T for all generators g, or None.

    mats_a and mats_b map generator names to dim x dim matrices.  Returns one
    invertible solution when the joint solution space contains one (for a pair
    of irreducible modules, Schur gives a 1-dimensional space).
    """
    n2 = dim * dim
    rows = []
    for g, a in mats_a.items():
        b = mats_b[g]
        # (T A - B T)[i, j] = sum_k T[i,k] A[k,j] - B[i,k] T[k,j]
        for i in range(dim):
            for j in range(dim):
                row = {}
                for k in range(dim):
                    c = a.get(k, j)
                    if not c.is_zero():
                        row[i * dim + k] = row.get(i * dim + k, _ZERO) + c
                for k, c in b.rows[i].items():
                    idx = k * dim + j
                    y = row.get(idx, _ZERO) - c
                    if y.is_zero():
                        row.pop(idx, None)
                    else:
                        row[idx] = y
                if row:
                    rows.append(row)
    system = Matrix(len(rows), n2, rows)
    basis = nullspace(system)

    def as_matrix(v: dict) -> Matrix:
        t = Matrix(dim, dim)
        for idx, x in v.items():
            t.rows[idx // dim][idx % dim] = x
        return t

    candidates = list(basis)
    if len(basis) > 1:
        # an invertible solution need not sit on a basis vector; try small
        # integer combinations (generic combinations hit one if any exists)
        for weights in ([1] * len(basis), list(range(1, len(basis) + 1)),
                        [(3 * k + 1) % 7 + 1 for k in range(len(basis))]):
            v: dict = {}
            for w, b in zip(weights, basis):
                v = vec_addmul(v, b, rat(w))
            candidates.append(v)
    for v in candidates:
        t = as_matrix(v)
        if rank(t) == dim:
            return t
    return None
