"""Command-line front end: ``redtensor <subcommand> ...``.

Exit status is 0 when everything verified, 1 on a verification mismatch and
2 on usage or input errors.  Output depends only on the inputs and the seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from functools import lru_cache

from . import __version__
from .catalog import CatalogEntry, builtin, builtin_names, load, serialize_category_file
from .centre import centre_simples
from .cyclotomic import Scalar, format_scalar
from .errors import (
    CategorySyntaxError,
    DiagramSyntaxError,
    MismatchReport,
    NotMinimalExtension,
    RedTensorError,
    SemanticError,
    UnknownLabel,
    UnknownName,
)
from .fusion import FusionCategory, ObjectExpr, modular_data_balancing, validate
from .linalg import EXACT, FloatField

USAGE_ERRORS = (CategorySyntaxError, DiagramSyntaxError, SemanticError, UnknownLabel, UnknownName, NotMinimalExtension)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--over", metavar="CAT", help="the symmetric category A, e.g. builtin:RepZ2")
    common.add_argument("--mode", choices=("exact", "float"))
    common.add_argument("--tol", type=float, default=None, help="float-mode tolerance")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--format", choices=("table", "structured"), default="table")
    common.add_argument("--emit", metavar="PATH", help="also write the result as a category file")

    p = _Parser(prog="redtensor", description="Reduced tensor products of braided fusion categories.")
    p.add_argument("--version", action="version", version=f"redtensor {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    s = sub.add_parser("validate", parents=[common], help="check pentagon, hexagon and the remaining axioms")
    s.add_argument("categories", nargs="+")
    s = sub.add_parser("centre", parents=[common], help="simples and modular data of Z(A)")
    s.add_argument("category")
    s = sub.add_parser("modular", parents=[common], help="S and T by balancing")
    s.add_argument("category")
    s = sub.add_parser("enrich", parents=[common], help="hom-objects of C over A")
    s.add_argument("category")
    s = sub.add_parser("redprod", parents=[common], help="the reduced tensor product of C and D over A")
    s.add_argument("left")
    s.add_argument("right")
    s = sub.add_parser("mme", parents=[common], help="product of two minimal modular extensions of A")
    s.add_argument("left")
    s.add_argument("right")
    sub.add_parser("selftest", parents=[common], help="run the built-in verification suite")
    return p


class Config:
    def __init__(self, args, environ):
        mode = args.mode or environ.get("REDTENSOR_MODE") or "exact"
        if mode not in ("exact", "float"):
            raise UsageError(f"REDTENSOR_MODE must be exact or float, not {mode!r}")
        seed = args.seed
        if seed is None:
            raw = environ.get("REDTENSOR_SEED")
            try:
                seed = int(raw) if raw is not None else 0
            except ValueError:
                raise UsageError(f"REDTENSOR_SEED must be an integer, not {raw!r}") from None
        if args.tol is not None and args.tol <= 0:
            raise UsageError("--tol must be positive")
        self.mode = mode
        self.seed = seed
        self.tol = args.tol if args.tol is not None else 1e-9
        self.format = args.format
        self.emit = args.emit

    @property
    def field(self):
        return EXACT if self.mode == "exact" else FloatField(self.tol)

    def require_exact(self, command):
        if self.mode != "exact":
            raise UsageError(f"{command} runs in exact mode only")


# ---------------------------------------------------------------------------
# helpers


def _entry(spec):
    if ":" not in spec and not os.path.exists(spec):
        # a bare name that is not a file is read as a built-in
        return builtin(spec)
    return load(spec)


def _over(args):
    if not args.over:
        raise UsageError("--over is required")
    A = _entry(args.over).category
    if not A.symmetric:
        raise SemanticError(f"{A.name} is not symmetric")
    return A


def _matrix_text(M):
    return "[" + ";".join(",".join(format_scalar(x) for x in row) for row in M.tolist()) + "]"


def _st_lines(md):
    out = ["S ="]
    for row in md.S:
        out.append("  " + " ".join(format_scalar(x) for x in row))
    out.append("T = " + " ".join(format_scalar(t) for t in md.T))
    out.append(f"modular={'yes' if md.modular else 'no'}")
    if md.central_charge is not None:
        out.append(f"central_charge={md.central_charge}")
    return out


def _md_json(md):
    return {
        "labels": list(md.labels),
        "S": [[format_scalar(x) for x in row] for row in md.S],
        "T": [format_scalar(t) for t in md.T],
        "modular": bool(md.modular),
        "central_charge": None if md.central_charge is None else str(md.central_charge),
    }


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def result_entry(data, md, inclusions=None, halfbraidings=None):
    """A catalog entry holding a fusion ring with dims, twists and S (no F/R)."""
    C = FusionCategory(data.name, data.labels, data.unit, dict(data.dual), {k: dict(v) for k, v in data.N.items()}, {}, None, dict(data.dims), dict(data.twists))
    S = {(a, b): md.S[i, j] for i, a in enumerate(data.labels) for j, b in enumerate(data.labels)}
    return CatalogEntry(data.name, C, inclusions or {}, S, halfbraidings or [])


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args, cfg, out):
    failed = False
    rows = []
    for spec in args.categories:
        entry = _entry(spec)
        report = validate(entry.category, cfg.field)
        failed |= bool(report)
        rows.append((entry.name, report))
    if cfg.format == "structured":
        out.write(_dump([{"category": n, "checked": r.checked, "violations": r.lines()} for n, r in rows]) + "\n")
    else:
        for name, report in rows:
            out.write(f"{name}: {report.summary()}\n")
            for line in report.lines():
                out.write(f"  {line}\n")
    return 1 if failed else 0


def _centre_data(cat):
    from .redprod import CategoryData

    N = {}
    for a in cat.labels:
        for b in cat.labels:
            N[(a, b)] = {c: cat.Nabc(a, b, c) for c in cat.labels if cat.Nabc(a, b, c)}
    return CategoryData(f"Z({cat.ambient.name})", cat.labels, cat.unit, N, dict(cat.dims), dict(cat.twists), dict(cat.dual))


def cmd_centre(args, cfg, out):
    cfg.require_exact("centre")
    A = _entry(args.category).category
    cat = centre_simples(A, seed=cfg.seed)
    data = _centre_data(cat)
    md = cat.modular
    hb = []
    for z in cat.simples:
        for x in A.labels:
            for c, blk in z.beta[x].blocks.items():
                hb.append((z.name, x, c, blk.tolist()))
    image = {a: ObjectExpr.simple(cat.image_of(a)) for a in A.labels}
    entry = result_entry(data, md, {A.name: image}, hb)
    if cfg.format == "structured":
        out.write(serialize_category_file(entry))
    else:
        out.write(f"# centre of {A.name} seed={cfg.seed}\n")
        for z in cat.simples:
            content = " + ".join(a if m == 1 else f"{a}^{m}" for a, m in z.content().items())
            out.write(f"{z.name}: underlying={content} dim={format_scalar(cat.dims[z.name])} twist={format_scalar(cat.twists[z.name])}\n")
        for line in _fusion_lines(data):
            out.write(line + "\n")
        for line in _st_lines(md):
            out.write(line + "\n")
        out.write(f"global_dim={format_scalar(cat.global_dim())}\n")
    if cfg.emit:
        _write(cfg.emit, serialize_category_file(entry))
    return 0


def _fusion_lines(data):
    out = []
    for a in data.labels:
        for b in data.labels:
            row = data.N[(a, b)]
            rhs = " + ".join(c if row[c] == 1 else f"{row[c]} {c}" for c in data.labels if row.get(c))
            out.append(f"{a} {b} -> {rhs}")
    return out


def _rounded(x, tol):
    """Complex value with parts below tol set to +0.0, so printed signs are stable."""
    z = complex(x)
    re_, im = (0.0 if abs(v) <= tol else v for v in (z.real, z.imag))
    return complex(re_, im)


def cmd_modular(args, cfg, out):
    entry = _entry(args.category)
    C = entry.category
    if entry.S and not C.F:
        # a result file: S and T were stored rather than derived
        from .redprod import CategoryData

        md = CategoryData(C.name, C.labels, C.unit, C.N, C.dims, C.twists, C.dual).modular_data()
    else:
        md = modular_data_balancing(C)
    if cfg.mode == "float":
        S = [[_rounded(x, cfg.tol) for x in row] for row in md.S]
        T = [_rounded(t, cfg.tol) for t in md.T]
        if cfg.format == "structured":
            out.write(_dump({"labels": list(md.labels), "S": [[[z.real, z.imag] for z in r] for r in S], "T": [[z.real, z.imag] for z in T]}) + "\n")
        else:
            out.write("S =\n")
            for row in S:
                out.write("  " + " ".join(f"{z.real:+.10f}{z.imag:+.10f}i" for z in row) + "\n")
            out.write("T = " + " ".join(f"{z.real:+.10f}{z.imag:+.10f}i" for z in T) + "\n")
        return 0
    if cfg.format == "structured":
        out.write(_dump(_md_json(md)) + "\n")
    else:
        out.write(f"# {C.name}\n")
        for line in _st_lines(md):
            out.write(line + "\n")
    return 0


def cmd_enrich(args, cfg, out):
    from .catalog import verify_inclusion
    from .enrich import Enrichment, commutant

    cfg.require_exact("enrich")
    A = _over(args)
    inc = _entry(args.category).inclusion(A)
    bad = verify_inclusion(inc)
    if bad:
        raise SemanticError("; ".join(bad))
    enr = Enrichment(inc)
    rows = []
    for c in inc.C.labels:
        for cp in inc.C.labels:
            h = enr.hom(c, cp)
            if h.is_neutral():
                hb = "neutral"
            else:
                z = h.half_braiding
                parts = []
                for x in A.labels:
                    for ch, blk in z.beta[x].blocks.items():
                        parts.append(f"{x}:{ch}={_matrix_text(blk)}")
                hb = " ".join(parts)
            rows.append((c, cp, h.format(), hb))
    neutral = commutant(inc)
    if cfg.format == "structured":
        out.write(_dump({"homs": [{"source": c, "target": cp, "object": o, "halfbraiding": hb} for c, cp, o, hb in rows], "commutant": neutral}) + "\n")
    else:
        out.write(f"# {inc.C.name} over {A.name}\n")
        for c, cp, o, hb in rows:
            out.write(f"hom({c},{cp}) = {o} ; halfbraiding: {hb}\n")
        out.write("commutant " + " ".join(neutral) + "\n")
    return 0


def _inclusions(args, A):
    return _entry(args.left).inclusion(A), _entry(args.right).inclusion(A)


def _report(rp, cfg, out, extra=()):
    if cfg.format == "structured":
        d = rp.data
        obj = {
            "inputs": list(rp.inputs),
            "over": rp.A,
            "seed": rp.seed,
            "simples": [
                {"name": s.name, "ambient": list(s.ambient), "dim": format_scalar(s.dim), "twist": format_scalar(s.twist)}
                for s in rp.simples
            ],
            "fusion": {f"{a} {b}": d.N[(a, b)] for a in d.labels for b in d.labels},
            "modular_data": _md_json(rp.modular),
            "checks": dict(rp.checks),
        }
        for k, v in extra:
            obj[k] = v
        out.write(_dump(obj) + "\n")
    else:
        for line in rp.report_lines():
            out.write(line + "\n")
        for k, v in extra:
            out.write(f"{k} {v}\n")
    if cfg.emit:
        _write(cfg.emit, serialize_category_file(result_entry(rp.data, rp.modular)))


def cmd_redprod(args, cfg, out):
    from .redprod import reduced_product

    cfg.require_exact("redprod")
    A = _over(args)
    inc1, inc2 = _inclusions(args, A)
    rp = reduced_product(inc1, inc2, seed=cfg.seed)
    _report(rp, cfg, out)
    return 0 if all(rp.checks.values()) else 1


def _identify(rp, A):
    from .redprod import category_data, find_equivalence

    for name in builtin_names():
        C = builtin(name).category
        if C.rank == rp.rank and find_equivalence(rp.data, category_data(C)):
            return name
    return "none"


def cmd_mme(args, cfg, out):
    from .redprod import mme_pair

    cfg.require_exact("mme")
    A = _over(args)
    inc1, inc2 = _inclusions(args, A)
    rp = mme_pair(inc1, inc2, seed=cfg.seed)
    _report(rp, cfg, out, [("identified", _identify(rp, A))])
    return 0 if all(rp.checks.values()) else 1


def cmd_selftest(args, cfg, out):
    cfg.require_exact("selftest")
    results = run_selftest(seed=cfg.seed)
    if cfg.format == "structured":
        out.write(_dump([{"check": n, "ok": ok, "detail": d} for n, ok, d in results]) + "\n")
    else:
        for name, ok, detail in results:
            out.write(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}\n")
        out.write(f"{sum(ok for _, ok, _ in results)}/{len(results)} checks passed\n")
    return 0 if all(ok for _, ok, _ in results) else 1


# ---------------------------------------------------------------------------
# the verification suite behind ``selftest``


def _check_axioms(seed):
    bad = [n for n in builtin_names() if validate(builtin(n).category)]
    return not bad, f"{len(builtin_names())} catalog categories" + (f", failing {' '.join(bad)}" if bad else ", no violations")


def _check_centres(seed):
    from .linalg import matrices_equal

    z = centre_simples(builtin("RepZ2").category, seed=seed)
    labels = z.labels
    group = all(sum(z.Nabc(a, b, c) for c in labels) == 1 for a in labels for b in labels)
    selfdual = all(z.Nabc(a, a, z.unit) == 1 for a in labels)
    T = [format_scalar(t) for t in z.modular.T]
    half = EXACT.array([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]) * Scalar.rational(Fraction(1, 2))
    # the S-matrix is the sign matrix up to the order of z1, z2
    s_ok = any(
        matrices_equal(EXACT, z.modular.S[list(perm)][:, list(perm)], half)
        for perm in ((0, 1, 2, 3), (0, 2, 1, 3))
    )
    ok = len(labels) == 4 and group and selfdual and T == ["1", "1", "1", "-1"] and s_ok
    z3 = centre_simples(builtin("RepS3").category, seed=seed)
    ok = ok and z3.global_dim() == 36 and len(z3.labels) == 8
    return ok, f"Z(RepZ2) rank {len(labels)} T=({' '.join(T)}); Z(RepS3) rank {len(z3.labels)} dim {format_scalar(z3.global_dim())}"


def _check_tensor_s(seed):
    from .centre import hom_dim, pi_idempotent, tensor_s, unit_s

    lines = []
    ok = True
    for name in ("RepZ2", "sVec", "RepS3"):
        z = centre_simples(builtin(name).category, seed=seed)
        for a in z.simples:
            for b in z.simples:
                P = pi_idempotent(a, b)
                ok &= (P @ P).equals(P)
                ab = sorted((s.name, m) for s, m in tensor_s(a, b, z))
                ba = sorted((s.name, m) for s, m in tensor_s(b, a, z))
                ok &= ab == ba
        lines.append(name)
    z = centre_simples(builtin("RepZ2").category, seed=seed)
    Is = unit_s(z.ambient, eng=z.eng)
    for a in z.simples:
        got = tensor_s(Is, a, z)
        ok &= len(got) == 1 and got[0][0].name == a.name and got[0][1] == 1 and hom_dim(a, got[0][0]) == 1
    return ok, "idempotent and symmetric on Z(" + "), Z(".join(lines) + "); I_s unital on Z(RepZ2)"


def _enrichments():
    from .enrich import Enrichment

    for cname, aname in (("Ising1", "sVec"), ("ToricCode", "RepZ2"), ("DoubleSemion", "RepZ2")):
        A = builtin(aname).category
        yield cname, aname, Enrichment(builtin(cname).inclusion(A))


def _check_round_trip(seed):
    from .centre import hom_dim

    ok = True
    for cname, aname, enr in _enrichments():
        for c in enr.C.labels:
            for cp in enr.C.labels:
                ok &= hom_dim(enr.I_s, enr.hom(c, cp).half_braiding) == (1 if c == cp else 0)
    return ok, "dim Hom(I_s, hom(c,c')) = dim Hom(c,c') on Ising1/sVec, ToricCode/RepZ2, DoubleSemion/RepZ2"


def _check_enrichment(seed):
    import itertools

    from .enrich import (
        Enrichment,
        check_braiding_transport,
        check_hom_half_braiding,
        check_interchange,
        check_tensor_beta,
        check_unit_triangle,
    )

    A = builtin("sVec").category
    enr = Enrichment(builtin("Ising1").inclusion(A))
    L = enr.C.labels
    pairs = list(itertools.product(L, repeat=2))
    triples = list(itertools.product(L, repeat=3))
    counts = {
        "interchange": sum(not check_interchange(enr, t1, t2) for t1 in triples for t2 in triples),
        "tensor_beta": sum(not check_tensor_beta(enr, p, q) for p in pairs for q in pairs),
        "braiding": sum(not check_braiding_transport(enr, p, q) for p in pairs for q in pairs),
        "halfbraiding": sum(not check_hom_half_braiding(enr, *p) for p in pairs),
        "unit": sum(not check_unit_triangle(enr, *p) for p in pairs),
    }
    return not any(counts.values()), "Ising1/sVec failures " + " ".join(f"{k}={v}" for k, v in counts.items())


def _inc(cname, aname):
    return builtin(cname).inclusion(builtin(aname).category)


def _check_unit_law(seed):
    from .redprod import check_unit_law

    r1 = check_unit_law(_inc("DoubleSemion", "RepZ2"), _inc("ToricCode", "RepZ2"), seed=seed)
    r2 = check_unit_law(_inc("Ising1", "sVec"), _inc("ZsVec", "sVec"), seed=seed)
    return bool(r1) and bool(r2), "; ".join([r1.lines[0], r2.lines[0]])


def _check_commutants(seed):
    from .redprod import category_data, check_commutant, find_equivalence, reduced_product

    rp = reduced_product(_inc("Ising1", "sVec"), _inc("sVec", "sVec"), seed=seed)
    ok = find_equivalence(rp.data, category_data(builtin("sVec").category)) is not None
    r1 = check_commutant(_inc("ToricCode", "RepZ2"), _inc("ToricCode", "RepZ2"), seed=seed)
    r2 = check_commutant(_inc("DoubleSemion", "RepZ2"), _inc("DoubleSemion", "RepZ2"), seed=seed)
    return ok and bool(r1) and bool(r2), f"Ising1 x sVec rank {rp.rank}; commutant (TC,TC) {bool(r1)}; (DS,DS) {bool(r2)}"


_MME_CASES = (
    ("ToricCode", "ToricCode", "RepZ2", "ToricCode"),
    ("ToricCode", "DoubleSemion", "RepZ2", "DoubleSemion"),
    ("DoubleSemion", "DoubleSemion", "RepZ2", "ToricCode"),
    ("Ising1", "Ising15", "sVec", "ZsVec"),
    ("Ising1", "Ising1", "sVec", None),
)


@lru_cache(maxsize=None)
def _mme_runs(seed):
    from .redprod import mme_pair

    return [(c, d, a, want, mme_pair(_inc(c, a), _inc(d, a), seed=seed)) for c, d, a, want in _MME_CASES]


def _check_mme(seed):
    from .cyclotomic import E
    from .redprod import category_data, find_equivalence

    ok = True
    parts = []
    for c, d, a, want, rp in _mme_runs(seed):
        good = rp.checks["modular"] and rp.checks["central_charge"]
        if want:
            good &= find_equivalence(rp.data, category_data(builtin(want).category)) is not None
            parts.append(f"{c}x{d}~{want if good else '?'}")
        else:
            vortex = [s for s in rp.simples if s.ambient == ("sigma", "sigma")]
            good &= rp.rank == 4 and bool(vortex) and all(s.twist == E(8) for s in vortex)
            parts.append(f"{c}x{d} rank {rp.rank} vortex twist {' '.join(format_scalar(s.twist) for s in vortex)}")
        ok &= good
    return ok, "; ".join(parts)


def _check_structure(seed):
    from .redprod import check_symmetry, reduced_product

    ok = True
    n = 0
    for c, d, a, want, rp in _mme_runs(seed):
        ok &= all(rp.checks.get(k, False) for k in ("global_dim", "twist_consistency", "verlinde", "traced_S"))
        n += 1
        if c != d:
            swapped = reduced_product(_inc(d, a), _inc(c, a), seed=seed)
            ok &= bool(check_symmetry(_inc(c, a), _inc(d, a), seed=seed, rp12=rp, rp21=swapped))
    return ok, f"global dimension, twist consistency, Verlinde, traced S and swap symmetry on {n} products"


SELFTEST = (
    ("axioms", _check_axioms),
    ("centre", _check_centres),
    ("tensor_s", _check_tensor_s),
    ("round_trip", _check_round_trip),
    ("enrichment", _check_enrichment),
    ("unit_law", _check_unit_law),
    ("commutant", _check_commutants),
    ("mme_group_law", _check_mme),
    ("structure", _check_structure),
)


def run_selftest(seed=0):
    """(name, ok, detail) for every check; exceptions count as failures."""
    out = []
    for name, fn in SELFTEST:
        try:
            ok, detail = fn(seed)
        except RedTensorError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, bool(ok), detail))
    return out


COMMANDS = {
    "validate": cmd_validate,
    "centre": cmd_centre,
    "modular": cmd_modular,
    "enrich": cmd_enrich,
    "redprod": cmd_redprod,
    "mme": cmd_mme,
    "selftest": cmd_selftest,
}


def run(argv=None, out=None, err=None, environ=None):
    out = out or sys.stdout
    err = err or sys.stderr
    environ = os.environ if environ is None else environ
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        cfg = Config(args, environ)
        return COMMANDS[args.command](args, cfg, out)
    except UsageError as exc:
        err.write(f"redtensor: {exc}\n")
        return 2
    except SystemExit as exc:  # --help and --version
        return exc.code if isinstance(exc.code, int) else 0
    except USAGE_ERRORS as exc:
        err.write(f"redtensor: {type(exc).__name__}: {exc}\n")
        return 2
    except MismatchReport as exc:
        err.write(f"redtensor: mismatch: {exc}\n")
        return 1
    except RedTensorError as exc:
        err.write(f"redtensor: {type(exc).__name__}: {exc}\n")
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
