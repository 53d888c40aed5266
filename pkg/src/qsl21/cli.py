"""Batch front end: construct representation families, run exact audits,
emit classification tables, centre reports, and canonical JSON/CSV dumps.

Subcommands: verify, classify, centre-table, dump-module, complete-set.
Exit codes: 0 = every selected check passed, 1 = at least one exact check
violated, 2 = configuration error (bad family, bad parameters, a check
requested outside its domain).  Checks are never silently skipped — a
skipped check appears in the report with its reason and does not fail
the run.
"""

from __future__ import annotations

import argparse
import math
import os
import random
import sys

from gmpy2 import mpq

from .cyclo import CycloScalar, rat
from .families import (Gl2Module, atypical_mu2, atypical_periodic,
                       atypical_sum, classify, expected_casimir_scalar,
                       gl2_nilpotent, gl2_periodic, induce,
                       sample_typical_periodic, typical_nilpotent,
                       typical_periodic)
from .linalg import Matrix
from .modules import (ModuleError, ModuleRep, centre_identity,
                      complete_set_rank)
from .pbw import monomial_window
from .qkernel import DomainError, QContext, qbracket
from .serialize import (canonical_json, centre_report_to_dict, csv_table,
                        module_to_dict, scalar_float, scalar_str, write_text)

EXIT_OK, EXIT_VIOLATION, EXIT_CONFIG = 0, 1, 2

ALL_CHECKS = ("relations", "centrality", "eigenvalues", "burnside",
              "quotients", "centre-identity", "complete-set", "chebyshev")

FAMILIES = ("typical-nilpotent", "atypical-mu2", "atypical-sum",
            "typical-periodic", "atypical-periodic",
            "gl2-nilpotent", "gl2-periodic")


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parameter parsing
# ---------------------------------------------------------------------------

_INT_KEYS = {"N", "epsilon", "omega"}
_BOOL_KEYS = {"type_b"}


def parse_scalar(ctx: QContext, text: str) -> CycloScalar:
    """A scalar literal: a rational "p/q", a root-of-unity power "q^k" or
    "-q^k", a product "r*q^k", or the canonical "n; c0,c1,..." form."""
    text = text.strip()
    if ";" in text:
        return CycloScalar.parse(text)
    sign = rat(1)
    if "*" in text:
        head, _, tail = text.partition("*")
        return parse_scalar(ctx, head) * parse_scalar(ctx, tail)
    if text.startswith("-"):
        sign, text = rat(-1), text[1:]
    if text == "q":
        return sign * ctx.q
    if text.startswith("q^"):
        return sign * ctx.qpow(int(text[2:]))
    try:
        return sign * rat(mpq(text))
    except ValueError as exc:
        raise ConfigError(f"cannot parse scalar {text!r}") from exc


def parse_params(ctx: QContext, text: str) -> dict:
    """A comma-separated key=value parameter list."""
    out: dict = {}
    if not text.strip():
        return out
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep:
            if key in _BOOL_KEYS:
                out[key] = True
                continue
            raise ConfigError(f"malformed parameter {item!r} (expected key=value)")
        value = value.strip()
        if key in _INT_KEYS:
            out[key] = int(value)
        elif key in _BOOL_KEYS:
            out[key] = value.lower() in ("1", "true", "yes")
        else:
            out[key] = parse_scalar(ctx, value)
    return out


# ---------------------------------------------------------------------------
# family construction and sampling
# ---------------------------------------------------------------------------

def _need(params: dict, *keys):
    missing = [k for k in keys if k not in params]
    if missing:
        raise ConfigError(f"missing parameter(s): {', '.join(missing)}")
    return [params[k] for k in keys]


def build_module(ctx: QContext, family: str, params: dict):
    """Instantiate a family; raises ConfigError for unusable input."""
    try:
        if family.startswith("induced/"):
            v0 = build_module(ctx, family[len("induced/"):], params)
            if not isinstance(v0, Gl2Module):
                raise ConfigError("induction starts from an even-subalgebra module")
            return induce(ctx, v0)
        if family == "typical-nilpotent":
            n, l1, l2 = _need(params, "N", "lambda1", "lambda2")
            return typical_nilpotent(ctx, n, l1, l2)
        if family == "atypical-mu2":
            n, l1, eps = _need(params, "N", "lambda1", "epsilon")
            return atypical_mu2(ctx, n, l1, eps, params.get("type_b", False))
        if family == "atypical-sum":
            n, l1, eps = _need(params, "N", "lambda1", "epsilon")
            return atypical_sum(ctx, n, l1, eps, params.get("type_b", False))
        if family == "typical-periodic":
            l1, l2, phi, beta = _need(params, "lambda1", "lambda2", "phi", "beta")
            return typical_periodic(ctx, l1, l2, phi, beta)
        if family == "atypical-periodic":
            l1, l2, phi = _need(params, "lambda1", "lambda2", "phi")
            return atypical_periodic(ctx, l1, l2, phi)
        if family == "gl2-nilpotent":
            n, l1, l2 = _need(params, "N", "lambda1", "lambda2")
            return gl2_nilpotent(ctx, n, l1, l2)
        if family == "gl2-periodic":
            l1, l2, phi, beta = _need(params, "lambda1", "lambda2", "phi", "beta")
            return gl2_periodic(ctx, l1, l2, phi, beta)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    raise ConfigError(f"unknown family {family!r} (choose from "
                      f"{', '.join(FAMILIES)} or induced/<gl2 family>)")


def _rand_rational(rng: random.Random) -> CycloScalar:
    v = mpq(rng.randint(1, 60), rng.randint(1, 60))
    if rng.random() < 0.5:
        v = -v
    return rat(v)


def sample_family_params(ctx: QContext, rng: random.Random, family: str) -> dict:
    """One generic parameter draw for a family, with every degeneracy the
    family forbids rejected exactly."""
    lp = ctx.lprime
    if family in ("typical-periodic", "induced/gl2-periodic"):
        return sample_typical_periodic(ctx, rng, 1)[0]
    if family == "gl2-periodic":
        draw = sample_typical_periodic(ctx, rng, 1)[0]
        return draw
    if family == "atypical-periodic":
        while True:
            l1, l2, phi = (_rand_rational(rng) for _ in range(3))
            if not (l1.is_zero() or l2.is_zero() or phi.is_zero()):
                return {"lambda1": l1, "lambda2": l2, "phi": phi}
    if family in ("typical-nilpotent", "gl2-nilpotent", "induced/gl2-nilpotent"):
        while True:
            n = rng.randint(1, lp)
            omega = rng.choice((1, -1))
            l1 = ctx.qpow(n - 1) * rat(omega)
            l2 = _rand_rational(rng)
            if l2.is_zero() or qbracket(ctx, l2, 0).is_zero():
                continue
            if qbracket(ctx, l1 * l2, 1).is_zero():
                continue
            return {"N": n, "lambda1": l1, "lambda2": l2}
    if family in ("atypical-mu2", "atypical-sum"):
        type_b = rng.random() < 0.3
        eps = rng.choice((1, -1))
        if type_b:
            l1 = _rand_rational(rng)
            while l1.is_zero():
                l1 = _rand_rational(rng)
            return {"N": lp, "lambda1": l1, "epsilon": eps, "type_b": True}
        n = rng.randint(1, max(1, lp - 1))
        l1 = ctx.qpow(n - 1) * rat(rng.choice((1, -1)))
        return {"N": n, "lambda1": l1, "epsilon": eps}
    raise ConfigError(f"no sampler for family {family!r}")


def casimir_parameters(ctx: QContext, m) -> tuple:
    """(lambda1, lambda2, beta) feeding the closed-form eigenvalue."""
    p = m.params
    fam = m.family.split("/")[-1].removesuffix("/psi")
    lam1 = p["lambda1"]
    if "lambda2" in p:
        lam2 = p["lambda2"]
    elif "atypical-mu2" in m.family:
        lam2 = rat(p["epsilon"])
    elif "atypical-sum" in m.family:
        lam2 = rat(p["epsilon"]) * lam1.inverse() * ctx.qinv
    else:
        raise ConfigError(f"cannot derive k2 weight for family {fam!r}")
    if "atypical-periodic" in m.family:
        beta = qbracket(ctx, lam2, 0) * qbracket(ctx, lam1 * lam2, 1)
    else:
        beta = p.get("beta", rat(0))
    return lam1, lam2, beta


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def _cheb_matrix(l: int, t: Matrix) -> Matrix:
    p_prev, p_cur = Matrix.identity(t.nrows), t
    for _ in range(l - 1):
        p_prev, p_cur = p_cur, t.scale(rat(2)) * p_cur - p_prev
    return p_cur


def check_chebyshev_gl2(m: Gl2Module) -> bool:
    """2 P_l(C/2) = k1^l + k1^-l + (q-q^-1)^{2l} f1^l e1^l as matrices."""
    ctx = m.ctx
    l = ctx.l
    lhs = _cheb_matrix(l, m.casimir_matrix().scale(rat(1, 2))).scale(rat(2))
    rhs = (m.mats["k1"] ** l + m.mats["k1inv"] ** l
           + (m.mats["f1"] ** l * m.mats["e1"] ** l).scale(ctx.qdiff ** (2 * l)))
    return (lhs - rhs).is_zero()


def _pass(detail=None):
    out = {"status": "pass"}
    if detail is not None:
        out["detail"] = detail
    return out


def _fail(detail=None):
    out = {"status": "fail"}
    if detail is not None:
        out["detail"] = detail
    return out


def _skip(reason):
    return {"status": "skip", "reason": reason}


def _quotient_roundtrip(ctx: QContext, m: ModuleRep) -> dict:
    """For an atypical closed-form family: rebuild it as the simple quotient
    of an induced module and align the two by an exact intertwiner."""
    from .linalg import intersect_kernels

    p = m.params
    if "atypical-mu2" in m.family:
        v0 = gl2_nilpotent(ctx, p["N"], p["lambda1"], rat(p["epsilon"]))
        big = induce(ctx, v0)
    elif "atypical-sum" in m.family:
        lam2 = rat(p["epsilon"]) * p["lambda1"].inverse() * ctx.qinv
        v0 = gl2_nilpotent(ctx, p["N"], p["lambda1"], lam2)
        big = induce(ctx, v0)
    elif "atypical-periodic" in m.family:
        lam1, lam2, phi = p["lambda1"], p["lambda2"], p["phi"]
        beta = qbracket(ctx, lam2, 0) * qbracket(ctx, lam1 * lam2, 1)
        v0 = gl2_periodic(ctx, lam1, lam2, phi, beta)
        big = induce(ctx, v0)
    else:
        return _skip("round trip applies to the atypical closed forms only")
    # candidate generators of the maximal submodule: vectors killed by the
    # two raising odd letters (nilpotent case also killed by e1)
    if "periodic" in m.family:
        cands = intersect_kernels([big.mats["e2"], big.mats["e3"]])
    else:
        cands = [v for v, proper in big.singular_vectors() if proper]
        if not cands:
            cands = intersect_kernels([big.mats["e2"], big.mats["e3"]])
    for v in cands:
        sub = big.submodule_generated([v])
        if not 0 < sub.rank < big.dim:
            continue
        if big.dim - sub.rank != m.dim:
            continue
        quot = big.quotient(sub)
        if quot.isomorphism_to(m) is not None:
            return _pass({"induced_dim": big.dim, "submodule_dim": sub.rank})
    return _fail({"induced_dim": big.dim,
                  "note": "no invariant complement reproduced the closed form"})


def run_checks(ctx: QContext, m, checks, rng: random.Random,
               golden_text: str | None = None) -> dict:
    out: dict = {}
    is_gl2 = isinstance(m, Gl2Module)
    for check in checks:
        try:
            if check == "relations":
                detail = m.audit() if is_gl2 else m.audit_relations()
                entry = _pass(detail) if all(detail.values()) else _fail(detail)
            elif check == "chebyshev":
                if is_gl2:
                    entry = _pass() if check_chebyshev_gl2(m) else _fail()
                elif m.v0_indices:
                    from .qkernel import chebyshev1
                    xi = m.gl2_casimir_v0()
                    z1, _, x1, y1 = m.central_scalars()
                    lhs = rat(2) * chebyshev1(ctx.l, xi / rat(2))
                    rhs = z1 + z1.inverse() + ctx.qdiff ** (2 * ctx.l) * y1 * x1
                    entry = _pass() if (lhs - rhs).is_zero() else _fail(
                        {"lhs": scalar_str(lhs), "rhs": scalar_str(rhs)})
                else:
                    entry = _skip("module has no distinguished even-subalgebra "
                                  "bottom layer")
            elif is_gl2:
                entry = _skip("check applies to full superalgebra modules only")
            elif check == "centrality":
                bad = [p for p in range(1, ctx.l + 1) if not m.casimir_commutes(p)]
                entry = _pass() if not bad else _fail({"non_central_p": bad})
            elif check == "eigenvalues":
                lam1, lam2, beta = casimir_parameters(ctx, m)
                mism = {}
                for p in range(1, ctx.l + 1):
                    got = m.casimir_scalar(p)
                    want = expected_casimir_scalar(ctx, p, lam1, lam2, beta)
                    if not (got - want).is_zero():
                        mism[p] = {"got": scalar_str(got), "want": scalar_str(want)}
                entry = _pass({"C1": scalar_str(m.casimir_scalar(1))}) \
                    if not mism else _fail(mism)
            elif check == "burnside":
                got = m.burnside_dim()
                entry = _pass({"closure": got}) if got == m.dim * m.dim \
                    else _fail({"closure": got, "full": m.dim * m.dim})
            elif check == "quotients":
                entry = _quotient_roundtrip(ctx, m)
            elif check == "centre-identity":
                report = centre_identity(m)
                entry = (_pass if report.ok() else _fail)(
                    {"verdicts": dict(sorted(report.verdicts.items())),
                     "lhs": scalar_str(report.lhs), "rhs": scalar_str(report.rhs)})
            elif check == "complete-set":
                entry = _skip("run the complete-set subcommand (sample-level "
                              "check, not per-module)")
            else:
                raise ConfigError(f"unknown check {check!r}")
        except (ModuleError, DomainError) as exc:
            entry = _fail({"error": str(exc)})
        out[check] = entry
    if golden_text is not None:
        if is_gl2:
            out["golden"] = _skip("golden comparison covers superalgebra dumps")
        else:
            import json as _json
            mine = canonical_json(module_to_dict(m))
            try:
                theirs = canonical_json(_json.loads(golden_text))
            except ValueError as exc:
                out["golden"] = _fail({"error": f"unreadable golden file: {exc}"})
            else:
                out["golden"] = _pass() if mine == theirs else _fail(
                    {"note": "canonical dump differs from golden file"})
    return out


def _verify_instance(args) -> dict:
    """Worker for one (family, params) instance; picklable for --parallel."""
    l, family, params, checks, golden_text = args
    ctx = QContext(l)
    m = build_module(ctx, family, params)
    rng = random.Random(0)
    report = run_checks(ctx, m, checks, rng, golden_text)
    return {"family": family, "l": l, "dim": m.dim,
            "params": {k: (scalar_str(v) if isinstance(v, CycloScalar) else v)
                       for k, v in params.items()},
            "checks": report,
            "ok": all(entry["status"] != "fail" for entry in report.values())}


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------

def _emit(text: str, out_path: str | None):
    if out_path:
        write_text(out_path, text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _verify_csv(instances) -> str:
    rows = []
    for inst in instances:
        ptext = ",".join(f"{k}={v}" for k, v in sorted(inst["params"].items()))
        for check, entry in sorted(inst["checks"].items()):
            rows.append([inst["family"], inst["l"], ptext, check,
                         entry["status"],
                         canonical_json(entry.get("detail", entry.get("reason", "")))])
    return csv_table(["family", "l", "params", "check", "status", "detail"], rows)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_verify(args, rng: random.Random) -> int:
    ctx = QContext(args.l)
    checks = [c.strip() for c in args.checks.split(",")] if args.checks \
        else ["relations", "centrality", "eigenvalues"]
    for c in checks:
        if c not in ALL_CHECKS:
            raise ConfigError(f"unknown check {c!r} (choose from "
                              f"{', '.join(ALL_CHECKS)})")
    if "centre-identity" in checks and args.l % 2 == 0:
        raise ConfigError("odd l required for the centre-identity check")
    golden_text = None
    if args.golden:
        try:
            with open(args.golden) as handle:
                golden_text = handle.read()
        except OSError as exc:
            raise ConfigError(f"cannot read golden file: {exc}") from exc

    families = [args.family] if args.family else list(FAMILIES)
    jobs = []
    for family in families:
        if args.params is not None:
            params = parse_params(ctx, args.params)
            jobs.append((args.l, family, params, tuple(checks), golden_text))
        else:
            for _ in range(args.draws):
                params = sample_family_params(ctx, rng, family)
                jobs.append((args.l, family, params, tuple(checks), golden_text))

    if args.parallel > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            instances = list(pool.map(_verify_instance, jobs))
    else:
        instances = [_verify_instance(job) for job in jobs]

    ok = all(inst["ok"] for inst in instances)
    report = {"command": "verify", "l": args.l, "checks": checks,
              "instances": instances, "ok": ok}
    if args.format == "csv":
        _emit(_verify_csv(instances), args.out)
    else:
        _emit(canonical_json(report), args.out)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_classify(args, rng: random.Random) -> int:
    ctx = QContext(args.l)
    rows_in: list[tuple[int, str]] = []
    if args.params is not None:
        rows_in.append((1, args.params))
    if args.params_file:
        try:
            with open(args.params_file) as handle:
                for lineno, line in enumerate(handle, start=1):
                    line = line.strip()
                    if line and not line.startswith("#"):
                        rows_in.append((lineno, line))
        except OSError as exc:
            raise ConfigError(f"cannot read parameter file: {exc}") from exc
    if not rows_in:
        raise ConfigError("classify needs --params or --params-file")

    header = ["line", "family", "typicality", "dim",
              "C1_exact", "C1_float"]
    rows, errors = [], []
    for lineno, text in rows_in:
        try:
            p = parse_params(ctx, text)
            lam1, lam2 = _need(p, "lambda1", "lambda2")
            family, dim = classify(ctx, lam1, lam2, n=p.get("N"),
                                   phi=p.get("phi"), beta=p.get("beta"))
            beta = p.get("beta", rat(0))
            if family == "atypical-periodic":
                beta = qbracket(ctx, lam2, 0) * qbracket(ctx, lam1 * lam2, 1)
            c1 = expected_casimir_scalar(ctx, 1, lam1, lam2, beta)
            typicality = "atypical" if "atypical" in family else "typical"
            rows.append([lineno, family, typicality, dim,
                         scalar_str(c1), scalar_float(c1)])
        except (ConfigError, DomainError, ValueError) as exc:
            errors.append(f"line {lineno}: {exc}")
    _emit(csv_table(header, rows), args.out)
    if errors:
        print("\n".join(errors), file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


def cmd_centre_table(args, rng: random.Random) -> int:
    ctx = QContext(args.l)
    if args.l % 2 == 0:
        raise ConfigError("odd l required for the centre identity")
    family = args.family or "typical-periodic"
    if args.params is not None:
        params = parse_params(ctx, args.params)
    else:
        params = sample_family_params(ctx, rng, family)
    m = build_module(ctx, family, params)
    if isinstance(m, Gl2Module):
        raise ConfigError("centre-table needs a full superalgebra family")
    report = centre_identity(m)
    data = centre_report_to_dict(report)
    if args.format == "csv":
        rows = [["lhs", data["lhs"], scalar_float(report.lhs)],
                ["rhs", data["rhs"], scalar_float(report.rhs)],
                ["z1", data["z1"], scalar_float(report.z1)],
                ["z2", data["z2"], scalar_float(report.z2)],
                ["x1", data["x1"], scalar_float(report.x1)],
                ["y1", data["y1"], scalar_float(report.y1)]]
        rows += [[f"C_{i + 1}", scalar_str(c), scalar_float(c)]
                 for i, c in enumerate(report.cp_scalars)]
        rows += [[f"verdict:{k}", v, ""] for k, v in sorted(report.verdicts.items())]
        _emit(csv_table(["quantity", "exact", "float"], rows), args.out)
    else:
        _emit(canonical_json(data), args.out)
    return EXIT_OK if report.ok() else EXIT_VIOLATION


def cmd_dump_module(args, rng: random.Random) -> int:
    ctx = QContext(args.l)
    if not args.family:
        raise ConfigError("dump-module needs --family")
    if args.params is not None:
        params = parse_params(ctx, args.params)
    else:
        params = sample_family_params(ctx, rng, args.family)
    m = build_module(ctx, args.family, params)
    _emit(canonical_json(module_to_dict(m)), args.out)
    return EXIT_OK


def cmd_complete_set(args, rng: random.Random) -> int:
    ctx = QContext(args.l)
    monomials = monomial_window(args.p_max, args.t_max, args.a_max)
    if args.nilpotent:
        sample = []
        while len(sample) < args.count:
            params = sample_family_params(ctx, rng, "typical-nilpotent")
            sample.append(typical_nilpotent(ctx, params["N"],
                                            params["lambda1"], params["lambda2"]))
    else:
        count = args.count
        if count == 0:
            count = math.ceil(len(monomials) / (4 * ctx.l) ** 2) + 2
        sample = [typical_periodic(ctx, **p)
                  for p in sample_typical_periodic(ctx, rng, count)]
    rank, count = complete_set_rank(ctx, monomials, sample)
    report = {"command": "complete-set", "l": args.l,
              "monomials": count, "rank": rank,
              "sample_modules": len(sample),
              "sample_family": "typical-nilpotent" if args.nilpotent
                               else "typical-periodic",
              "injective": rank == count}
    _emit(canonical_json(report), args.out)
    return EXIT_OK if rank == count else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--l", type=int, required=True,
                     help="order of the root of unity (>= 3)")
    sub.add_argument("--family", default=None,
                     help="representation family name")
    sub.add_argument("--params", default=None,
                     help="comma separated key=value exact parameters")
    sub.add_argument("--out", default=None, help="output file (default stdout)")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--parallel", type=int, default=1,
                     help="worker processes for independent instances")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsl21",
        description="Exact audits of root-of-unity quantum superalgebra "
                    "representations and their centre.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", help="run exact checks on family instances")
    _add_common(p)
    p.add_argument("--checks", default=None,
                   help=f"comma separated subset of: {', '.join(ALL_CHECKS)}")
    p.add_argument("--draws", type=int, default=2,
                   help="sampled parameter draws per family when --params "
                        "is not given")
    p.add_argument("--golden", default=None,
                   help="golden module dump to compare byte-exactly")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("classify", help="map exact parameters to "
                                         "(family, dimension, C1)")
    _add_common(p)
    p.add_argument("--params-file", default=None,
                   help="file with one key=value,... row per line")
    p.set_defaults(func=cmd_classify)

    p = subs.add_parser("centre-table", help="full centre report on one module")
    _add_common(p)
    p.set_defaults(func=cmd_centre_table)

    p = subs.add_parser("dump-module", help="canonical JSON dump of one module")
    _add_common(p)
    p.set_defaults(func=cmd_dump_module)

    p = subs.add_parser("complete-set", help="rank certificate for the "
                                             "monomial evaluation map")
    _add_common(p)
    p.add_argument("--count", type=int, default=0,
                   help="sample modules (0 = smallest certifying count)")
    p.add_argument("--p-max", type=int, default=2)
    p.add_argument("--t-max", type=int, default=2)
    p.add_argument("--a-max", type=int, default=2)
    p.add_argument("--nilpotent", action="store_true",
                   help="sample nilpotent modules instead (rank drops)")
    p.set_defaults(func=cmd_complete_set)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    seed_text = os.environ.get("QSL21_SEED", "0")
    try:
        rng = random.Random(int(seed_text))
    except ValueError:
        print(f"config error: QSL21_SEED must be an integer, got {seed_text!r}",
              file=sys.stderr)
        return EXIT_CONFIG
    try:
        return args.func(args, rng)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
