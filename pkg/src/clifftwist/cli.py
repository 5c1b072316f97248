"""Command line front end: ``clifftwist {clidata,groups,verify,tables}``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import MAX_N, Multivector, Signature, monomial_str, random_multivector, star
from .forms import PRODUCTS, render_csv, render_markdown, render_text, table_sweep, worker_count
from .groups import group_lattice, normal_series_check, verify_main_theorem
from .spinors import clidata, dagger_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
GOLDEN_MAX_N = 9


class UsageError(Exception):
    pass


def parse_signs(text: str | None) -> tuple[int, ...] | None:
    """'+-+' or '1,-1,1' -> (1, -1, 1)."""
    if text is None:
        return None
    text = text.strip()
    if "," in text:
        vals = [int(t) for t in text.split(",")]
    else:
        table = {"+": 1, "-": -1}
        if any(c not in table for c in text):
            raise UsageError(f"bad sign pattern {text!r}; use e.g. +- or 1,-1")
        vals = [table[c] for c in text]
    if any(v not in (1, -1) for v in vals):
        raise UsageError(f"bad sign pattern {text!r}")
    return tuple(vals)


def _signature(p: int, q: int) -> Signature:
    if p < 0 or q < 0:
        raise UsageError("p and q must be non-negative")
    if p + q > MAX_N:
        raise UsageError(f"p+q = {p + q} is above the engine limit of {MAX_N}")
    if p + q > GOLDEN_MAX_N:
        print(f"warning: p+q = {p + q} > {GOLDEN_MAX_N}; no reference data beyond this, and it may be slow",
              file=sys.stderr)
    return Signature(p, q)


def _monos(ms) -> list[str]:
    return [monomial_str(m) for m in ms]


# ---------------------------------------------------------------------------
# clidata


def clidata_dict(sig: Signature, signs=None) -> dict:
    cd = clidata(sig, signs)
    return {
        "field": cd.field,
        "dim": cd.N,
        "type": cd.type,
        "idempotent": str(cd.f.value),
        "spinor_basis_R": _monos(cd.data5),
        "k_basis": _monos(cd.data6),
        "spinor_basis_K": _monos(cd.data7),
    }


def dump_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


def render_clidata(d: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(d)
    lists = [d["spinor_basis_R"], d["k_basis"], d["spinor_basis_K"]]
    if fmt == "text":
        body = ", ".join([d["field"], str(d["dim"]), d["type"], d["idempotent"]] + ["[" + ", ".join(x) + "]" for x in lists])
        return f"[{body}]"
    if fmt == "markdown":
        rows = [("field", d["field"]), ("dim", d["dim"]), ("type", d["type"]), ("idempotent", d["idempotent"])]
        rows += [(k, ", ".join(d[k])) for k in ("spinor_basis_R", "k_basis", "spinor_basis_K")]
        return "\n".join(["| key | value |", "|---|---|"] + [f"| {k} | {v} |" for k, v in rows])
    header = ",".join(d)
    vals = [d["field"], str(d["dim"]), d["type"], d["idempotent"]] + [" ".join(x) for x in lists]
    return header + "\n" + ",".join(vals)


def cmd_clidata(args) -> int:
    sig = _signature(args.p, args.q)
    print(render_clidata(clidata_dict(sig, parse_signs(args.signs)), args.format))
    return EXIT_OK


# ---------------------------------------------------------------------------
# groups


def groups_dict(sig: Signature, signs=None) -> dict:
    lat = group_lattice(sig, signs)
    out = {"signature": [sig.p, sig.q], "idempotent": str(lat.f.value)}
    for name, H in (("G", lat.G), ("G(f)", lat.Gf), ("T(f)", lat.T), ("K(f)", lat.K)):
        out[name] = {"order": H.order, "elements": H.label()}
    for name, tr in (("G/G(f)", lat.Gf_in_G), ("G(f)/T(f)", lat.T_in_Gf), ("G/T(f)", lat.T_in_G)):
        out[name] = {"order": len(tr), "transversal": _monos(tr.monomials())}
    return out


def cmd_groups(args) -> int:
    sig = _signature(args.p, args.q)
    d = groups_dict(sig, parse_signs(args.signs))
    if args.format == "json":
        print(dump_json(d))
        return EXIT_OK
    lines = [f"Cl({sig.p},{sig.q})  f = {d['idempotent']}"]
    for name in ("G", "G(f)", "T(f)", "K(f)"):
        lines.append(f"{name} = {d[name]['elements']}  (order {d[name]['order']})")
    for name in ("G/G(f)", "G(f)/T(f)", "G/T(f)"):
        lines.append(f"{name} -> {{{', '.join(d[name]['transversal'])}}}  (order {d[name]['order']})")
    print("\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def verify_one(p: int, q: int, signs=None, seed: int = 0, samples: int = 5) -> dict:
    """Structure theorem, normal series, star oracle and a dagger-law sample."""
    sig = Signature(p, q)
    checks = []
    for r in verify_main_theorem(sig, signs):
        checks.append((f"({r.clause})", r.passed, r.detail))
    for r in normal_series_check(sig, signs):
        checks.append((r.clause, r.passed, r.detail))
    star_ok = all(star(u) == u.transposition() for u in (Multivector.monomial(sig, m) for m in range(sig.dim)))
    checks.append(("star", star_ok, "star map equals transposition on every monomial"))
    rng = random.Random(seed * 1000003 + p * 101 + q)
    cd = clidata(sig, signs)
    us = [sig.generator(i) for i in range(1, sig.n + 1)] + [random_multivector(sig, rng) for _ in range(samples)]
    dag_ok = all(dagger_check(u, cd) for u in us)
    checks.append(("dagger", dag_ok, f"{len(us)} elements"))
    return {"p": p, "q": q, "passed": all(c[1] for c in checks), "checks": checks}


def _verify_job(args):
    return verify_one(*args)


def cmd_verify(args) -> int:
    signs = parse_signs(args.signs)
    if args.all is not None:
        if args.p is not None:
            raise UsageError("give either p q or --all MAX_N, not both")
        _signature(0, args.all)
        sigs = [(p, n - p) for n in range(args.all + 1) for p in range(n + 1)]
        if signs is not None:
            raise UsageError("--signs only applies to a single signature")
    else:
        if args.p is None or args.q is None:
            raise UsageError("verify needs p q or --all MAX_N")
        _signature(args.p, args.q)
        sigs = [(args.p, args.q)]
    jobs = worker_count(args.jobs)
    work = [(p, q, signs, args.seed, args.samples) for p, q in sigs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            reports = list(ex.map(_verify_job, work))
    else:
        reports = [verify_one(*w) for w in work]
    reports.sort(key=lambda r: (r["p"] + r["q"], r["p"]))
    if args.format == "json":
        print(dump_json([{**r, "checks": [{"check": c, "passed": ok, "detail": d} for c, ok, d in r["checks"]]}
                         for r in reports]))
    else:
        for r in reports:
            status = "PASS" if r["passed"] else "FAIL"
            n_main = sum(1 for c in r["checks"] if c[0].startswith("("))
            ok_main = sum(1 for c in r["checks"] if c[0].startswith("(") and c[1])
            print(f"Cl({r['p']},{r['q']}): {status}  main theorem {ok_main}/{n_main} clauses")
            if args.verbose or not r["passed"]:
                for c, ok, d in r["checks"]:
                    print(f"  {'ok  ' if ok else 'FAIL'} {c}: {d}")
        npass = sum(r["passed"] for r in reports)
        print(f"{npass}/{len(reports)} signatures pass")
    return EXIT_OK if all(r["passed"] for r in reports) else EXIT_FAIL


# ---------------------------------------------------------------------------
# tables


def cmd_tables(args) -> int:
    kind = args.product_pos or args.product
    if kind not in PRODUCTS:
        raise UsageError(f"unknown product {kind!r}")
    _signature(0, args.max_n)
    rows = table_sweep(args.max_n, kind, args.jobs)
    fmt = args.format
    if fmt == "json":
        print(dump_json([r.as_dict() for r in rows]))
    elif fmt == "csv":
        print(render_csv(rows), end="")
    elif fmt == "text":
        print(render_text(rows))
    else:
        print(render_markdown(rows, kind))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="clifftwist", description="Clifford algebras as twisted group rings")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, default_fmt):
        sp.add_argument("--format", choices=["json", "markdown", "csv", "text"], default=default_fmt)
        sp.add_argument("--signs", help="idempotent sign pattern, e.g. --signs=+- (default all +)")

    sp = sub.add_parser("clidata", help="the seven-element spinor data of Cl(p,q)")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    common(sp, "text")
    sp.set_defaults(func=cmd_clidata)

    sp = sub.add_parser("groups", help="vee group, stabilizer, idempotent and field groups")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    common(sp, "text")
    sp.set_defaults(func=cmd_groups)

    sp = sub.add_parser("verify", help="check the structure theorem for one or many signatures")
    sp.add_argument("p", type=int, nargs="?")
    sp.add_argument("q", type=int, nargs="?")
    sp.add_argument("--all", type=int, metavar="MAX_N", help="every (p,q) with p+q <= MAX_N")
    sp.add_argument("--seed", type=int, default=0, help="seed for the random dagger-law samples")
    sp.add_argument("--samples", type=int, default=5, help="random multivectors per signature")
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default CLIFFTWIST_JOBS or cpu count)")
    sp.add_argument("-v", "--verbose", action="store_true")
    common(sp, "text")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("tables", help="automorphism groups of a spinor scalar product")
    sp.add_argument("max_n", type=int)
    sp.add_argument("product_pos", nargs="?", choices=PRODUCTS, metavar="product")
    sp.add_argument("--product", choices=PRODUCTS, default="tp")
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--format", choices=["json", "markdown", "csv", "text"], default="markdown")
    sp.set_defaults(func=cmd_tables)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"clifftwist: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"clifftwist: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
