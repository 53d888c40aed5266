"""Canonical serialization: module dumps, centre reports, CSV tables.

Scalars serialize as "n; c0,c1,..." (conductor, then rational coefficients
on the power basis of the cyclotomic field).  JSON output is canonical —
sorted keys, no whitespace — so byte-identical runs certify determinism.
CSV numeric columns carry the exact scalar string plus a complex float
approximation column for human scanning.
"""

from __future__ import annotations

import json
import os
import tempfile

from .cyclo import CycloScalar
from .modules import GEN_NAMES, CentreReport, ModuleRep


def scalar_str(x: CycloScalar) -> str:
    return x.serialize()


def scalar_float(x: CycloScalar) -> str:
    z = x.complex_value()
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _param_value(v):
    if isinstance(v, CycloScalar):
        return scalar_str(v)
    if isinstance(v, bool) or isinstance(v, int):
        return v
    return str(v)


def _basis_entry(label):
    if isinstance(label, tuple):
        if len(label) == 3:
            return {"rho": label[0], "sigma": label[1], "p": label[2]}
        if len(label) == 2:
            return {"sigma": label[0], "p": label[1]}
    return {"p": int(label)}


def matrix_rows(mat) -> list:
    """Row-major dense array of scalar strings."""
    zero = "1; 0"
    out = []
    for i in range(mat.nrows):
        row = [zero] * mat.ncols
        for j, x in mat.rows[i].items():
            row[j] = scalar_str(x)
        out.append(row)
    return out


def module_to_dict(m) -> dict:
    """The dump schema shared by the superalgebra and even-subalgebra
    modules: family, context, exact parameters, basis labels and the
    generator matrices as row-major scalar-string arrays."""
    gens = GEN_NAMES if isinstance(m, ModuleRep) else tuple(m.mats)
    return {
        "family": m.family,
        "l": m.ctx.l,
        "lprime": m.ctx.lprime,
        "params": {k: _param_value(v) for k, v in m.params.items()},
        "dim": m.dim,
        "basis": [_basis_entry(lab) for lab in getattr(m, "basis",
                                                      range(m.dim))],
        "matrices": {g: matrix_rows(m.mats[g]) for g in gens},
    }


def centre_report_to_dict(r: CentreReport) -> dict:
    return {
        "l": r.l,
        "family": r.family,
        "params": {k: _param_value(v) for k, v in r.params.items()},
        "cp_scalars": [scalar_str(c) for c in r.cp_scalars],
        "z1": scalar_str(r.z1),
        "z2": scalar_str(r.z2),
        "x1": scalar_str(r.x1),
        "y1": scalar_str(r.y1),
        "xi_plus_xiinv": None if r.xi_plus_xiinv is None
                         else scalar_str(r.xi_plus_xiinv),
        "lhs": scalar_str(r.lhs),
        "rhs": scalar_str(r.rhs),
        "lhs_float": scalar_float(r.lhs),
        "rhs_float": scalar_float(r.rhs),
        "verdicts": dict(sorted(r.verdicts.items())),
        "ok": r.ok(),
    }


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=True)


def write_text(path: str, text: str) -> None:
    """Atomic write: temp file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qsl21-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def csv_table(header: list, rows: list) -> str:
    def cell(x):
        x = str(x)
        if any(c in x for c in ",\"\n"):
            x = '"' + x.replace('"', '""') + '"'
        return x

    lines = [",".join(cell(h) for h in header)]
    lines.extend(",".join(cell(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"
