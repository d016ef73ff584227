"""Command-line front end.

Exit codes: 0 success, 1 domain error (or corpus mismatch), 2 usage error.
Errors are written to stderr as a single JSON object ``{"error": ...}``.
The default output format comes from ``SWFORGE_FORMAT`` (``json`` or ``table``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import alexander as alex
from . import geography as geo
from . import sw
from .knots import CorpusError, ParseError, PresentationError, load_corpus, parse_presentation
from .laurent import LaurentError, LaurentPoly, format_poly

FORMATS = ("json", "table")


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        if status:
            raise UsageError((message or "").strip())
        sys.exit(status)


# ---------------------------------------------------------------------------
# helpers

def _knot_delta(text: str) -> LaurentPoly:
    return alex.alexander(parse_presentation(text))


def _poly_arg(text: str) -> LaurentPoly:
    """A polynomial given as JSON text or as @path to a JSON file."""
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return LaurentPoly.from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise DomainError(f"polynomial is not valid JSON: {exc}") from None


def _delta_from(args) -> LaurentPoly:
    if getattr(args, "knot", None):
        return _knot_delta(args.knot)
    if getattr(args, "poly", None):
        return _poly_arg(args.poly)
    raise UsageError("one of --knot or --poly is required")


def _base(spec: str) -> sw.SWInvariant:
    if spec.startswith("en:"):
        try:
            n = int(spec[3:])
        except ValueError:
            raise UsageError(f"bad base {spec!r}; expected en:N") from None
        return sw.sw_en(n)
    if spec.startswith("@"):
        with open(spec[1:]) as fh:
            return sw.SWInvariant.from_json(json.load(fh))
    raise UsageError(f"bad base {spec!r}; expected en:N or @file.json")


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, table rows or None)

def cmd_alex(args):
    pres = parse_presentation(args.presentation)
    if args.route == "auto":
        d = alex.alexander(pres)
    else:
        routes = alex.all_routes(pres)
        if args.route not in routes:
            raise DomainError(f"route {args.route!r} does not apply to {pres}")
        d = routes[args.route]
    return {"presentation": str(pres), "alexander": d.to_json(), "pretty": format_poly(d)}


def cmd_skein(args):
    pres = parse_presentation(args.tree)
    d = alex.skein_evaluate(pres)
    return {"tree": str(pres), "alexander": d.to_json(), "pretty": format_poly(d)}


def cmd_surgery(args):
    base = _base(args.base)
    delta = _delta_from(args)
    if args.rim:
        result = sw.rim_surgery(base, delta, args.var or "r")
    else:
        result = sw.knot_surgery(base, delta, args.var or "tT")
    report = sw.basic_classes(result)
    return {
        "sw": result.to_json(),
        "pretty": format_poly(result.poly),
        "symmetric": sw.check_symmetry(result),
        "basic_classes": report.count_mod_negation,
    }


def cmd_gromov(args):
    gr = _poly_arg(args.gr) if args.gr else LaurentPoly.const(1)
    result = sw.gromov_knot_surgery(gr, _delta_from(args), args.var)
    return {"gromov": result.to_json(), "pretty": format_poly(result)}


def cmd_cover(args):
    delta = _poly_arg(args.poly) if args.poly else LaurentPoly.const(1)
    result = sw.cover_sw(delta, args.alpha)
    return {"sw": result.to_json(), "pretty": format_poly(result)}


def cmd_pairprod(args):
    delta = _delta_from(args)
    result = sw.pair_product_sw(delta)
    value = result.evaluate({v: 1 for v in result.vars})
    return {"sw": result.to_json(), "pretty": format_poly(result), "value_at_1": str(value)}


def cmd_basics(args):
    x = _base(args.base)
    if args.knot or args.poly:
        x = sw.knot_surgery(x, _delta_from(args), args.var)
    report = sw.basic_classes(x)
    return {"pretty": format_poly(x.poly), **report.to_json()}


def cmd_zk(args):
    report = sw.z_k_analysis(_delta_from(args), args.genus)
    out = report.to_json()
    out["verdict"] = "nonsymplectic" if report.nonsymplectic else "no_conclusion"
    return out


def cmd_geography(args):
    if args.scan:
        lo, hi = args.scan
        rows = []
        skipped = []
        for n in range(lo, hi + 1):
            if n % 3 == 2:
                skipped.append(n)
                continue
            cn = geo.fiber_sum_geography(n, geo.r_value(2, 2 * n + 1), geo.r_value(3, n + 1))
            rows.append({"n": n, "c1sq": cn.c1sq, "chi": cn.chi,
                         "noether_margin": geo.noether_check(cn).margin})
        payload = {"rows": rows, "skipped": skipped, "notes": [_self_sum_note()]}
        return payload, (["n", "c1sq", "chi", "noether_margin"], rows)
    if args.g is None or args.r1 is None or args.r2 is None:
        raise UsageError("give --scan LO HI or all of --g --r1 --r2")
    cn = geo.fiber_sum_geography(args.g, args.r1, args.r2)
    check = geo.noether_check(cn)
    return {**cn.to_json(), "noether_margin": check.margin, "noether_satisfied": check.satisfied}


def _self_sum_note() -> str:
    return ("self fiber sum of Z(2,2n+1) with r = 4n+4 gives c1^2 = 2, "
            "but E(n+1) has c1^2 = 0; printed r-values are used as given")


def cmd_lens(args):
    a = geo.LensSpace(args.p1, args.q1)
    b = geo.LensSpace(args.p2, args.q2)
    return {"a": str(a), "b": str(b), "orientation_sensitive": args.oriented,
            "equivalent": geo.lens_equiv(a, b, args.oriented)}


def cmd_chain(args):
    if args.framings:
        chain = geo.PlumbingChain(tuple(args.framings))
    elif args.n is not None:
        chain = geo.blowdown_chain(args.n)
    else:
        raise UsageError("give --n or --framings")
    lens = geo.chain_boundary(chain)
    out = {"framings": list(chain.framings), "p": lens.p, "q": lens.q}
    if args.n is not None and not args.framings:
        p = (args.n - 1) ** 2
        expected = geo.LensSpace(p, -args.n)
        out["expected"] = str(expected)
        out["equivalent"] = geo.lens_equiv(lens, expected)
    return out


def cmd_homeo(args):
    a = geo.FormDescriptor(args.rank1, args.sig1, args.parity1)
    b = geo.FormDescriptor(args.rank2, args.sig2, args.parity2)
    return {"verdict": geo.homeo_test(a, b).value}


def _corpus_entry(entry):
    routes = alex.all_routes(entry.presentation)
    values = list(routes.values())
    out = {
        "name": entry.name,
        "presentation": entry.text,
        "pretty": format_poly(values[0]),
        "routes": sorted(routes),
        "routes_agree": all(v == values[0] for v in values),
    }
    if entry.expect_alex is not None:
        out["expected_match"] = entry.expect_alex == values[0]
    return out, values[0]


def cmd_corpus(args):
    entries = load_corpus(args.path)
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(_corpus_entry_safe, entries))
    reports = []
    by_name: dict[str, LaurentPoly] = {}
    mismatches = []
    for i, (entry, (report, delta)) in enumerate(zip(entries, results)):
        if delta is None:
            mismatches.append({"index": i, "name": entry.name, "reason": report["error"]})
            reports.append(report)
            continue
        if not report["routes_agree"]:
            mismatches.append({"index": i, "name": entry.name, "reason": "routes disagree"})
        if report.get("expected_match") is False:
            mismatches.append({"index": i, "name": entry.name, "reason": "expect_alex mismatch"})
        if entry.name in by_name and by_name[entry.name] != delta:
            report["same_name_agree"] = False
            mismatches.append({"index": i, "name": entry.name, "reason": "disagrees with earlier entry"})
        by_name.setdefault(entry.name, delta)
        reports.append(report)
    payload = {"entries": reports, "mismatches": mismatches, "ok": not mismatches}
    rows = [{"name": r["name"], "presentation": r["presentation"],
             "alexander": r.get("pretty", "-"), "ok": r.get("routes_agree", False)
             and r.get("expected_match", True) and r.get("same_name_agree", True)} for r in reports]
    return payload, (["name", "presentation", "alexander", "ok"], rows), (1 if mismatches else 0)


def _corpus_entry_safe(entry):
    try:
        return _corpus_entry(entry)
    except (ValueError, LaurentError) as exc:
        return {"name": entry.name, "presentation": entry.text, "error": str(exc)}, None


# ---------------------------------------------------------------------------
# parser and output

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help="output format (default: $SWFORGE_FORMAT or json)")
    parser = _Parser(prog="swforge", description="Knot and 4-manifold invariant calculator",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def knot_opts(p, var_default="tT"):
        p.add_argument("--knot", help="knot presentation, e.g. 'T(2,3)'")
        p.add_argument("--poly", help="Alexander polynomial as JSON or @file")
        p.add_argument("--var", default=var_default, help="class variable name")

    p = add("alex", help="Alexander polynomial of a presentation")
    p.add_argument("presentation")
    p.add_argument("--route", default="auto", choices=["auto", "burau", "torus", "two_bridge", "skein"])
    p.set_defaults(func=cmd_alex)

    p = add("skein", help="evaluate a skein resolution tree")
    p.add_argument("tree")
    p.set_defaults(func=cmd_skein)

    p = add("surgery", help="knot or rim surgery on a base SW invariant")
    p.add_argument("--base", required=True, help="en:N or @file.json")
    knot_opts(p, var_default=None)
    p.add_argument("--rim", action="store_true", help="rim surgery (default variable r)")
    p.set_defaults(func=cmd_surgery)

    p = add("gromov", help="Gromov invariant after surgery on a fibered knot")
    p.add_argument("--gr", help="base Gromov polynomial as JSON (default 1)")
    knot_opts(p)
    p.set_defaults(func=cmd_gromov)

    p = add("cover", help="SW of the alpha-fold cover from a link polynomial")
    p.add_argument("--poly", help="link polynomial as JSON (default 1)")
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(func=cmd_cover)

    p = add("pairprod", help="D(t) * D(-t)")
    knot_opts(p)
    p.set_defaults(func=cmd_pairprod)

    p = add("basics", help="basic classes of a base invariant, optionally after surgery")
    p.add_argument("--base", required=True)
    knot_opts(p)
    p.set_defaults(func=cmd_basics)

    p = add("zk", help="basic-class analysis of Z_K")
    knot_opts(p)
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=cmd_zk)

    p = add("geography", help="fiber-sum characteristic numbers and Noether check")
    p.add_argument("--scan", nargs=2, type=int, metavar=("LO", "HI"),
                   help="scan F(2,2n+1;3,n+1) for LO <= n <= HI")
    p.add_argument("--g", type=int)
    p.add_argument("--r1", type=int)
    p.add_argument("--r2", type=int)
    p.set_defaults(func=cmd_geography)

    p = add("lens", help="compare L(p1,q1) with L(p2,q2)")
    for name in ("p1", "q1", "p2", "q2"):
        p.add_argument(name, type=int)
    p.add_argument("--oriented", action="store_true", help="orientation-sensitive comparison")
    p.set_defaults(func=cmd_lens)

    p = add("chain", help="lens-space boundary of a linear plumbing")
    p.add_argument("--n", type=int, help="use the rational-blowdown chain for n")
    p.add_argument("--framings", type=int, nargs="+")
    p.set_defaults(func=cmd_chain)

    p = add("homeo", help="compare intersection forms")
    p.add_argument("rank1", type=int)
    p.add_argument("sig1", type=int)
    p.add_argument("parity1", choices=["even", "odd"])
    p.add_argument("rank2", type=int)
    p.add_argument("sig2", type=int)
    p.add_argument("parity2", choices=["even", "odd"])
    p.set_defaults(func=cmd_homeo)

    p = add("corpus", help="batch-check a corpus file")
    p.add_argument("path")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_corpus)
    return parser


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    return str(v)


def render_table(payload: dict, table=None) -> str:
    """Aligned text; a projection of the JSON payload."""
    if table is not None:
        header, rows = table
        cells = [header] + [[_cell(r[h]) for h in header] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
        return "\n".join(lines) + "\n"
    items = [(k, _cell(v)) for k, v in payload.items()]
    width = max((len(k) for k, _ in items), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in items)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        fmt = getattr(args, "format", None) or os.environ.get("SWFORGE_FORMAT", "json")
        if fmt not in FORMATS:
            raise UsageError(f"unknown format {fmt!r}")
        result = args.func(args)
    except UsageError as exc:
        stderr.write(json.dumps({"error": str(exc), "kind": "usage"}) + "\n")
        return 2
    except (DomainError, ParseError, PresentationError, CorpusError, LaurentError,
            ValueError, OSError, ZeroDivisionError) as exc:
        stderr.write(json.dumps({"error": str(exc), "kind": "domain"}) + "\n")
        return 1
    except Exception as exc:  # never a traceback on the error stream
        stderr.write(json.dumps({"error": f"{type(exc).__name__}: {exc}", "kind": "internal"}) + "\n")
        return 1
    code = 0
    table = None
    if isinstance(result, tuple):
        payload, table, *rest = result
        code = rest[0] if rest else 0
    else:
        payload = result
    if fmt == "json":
        stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        stdout.write(render_table(payload, table))
    return code


def main():  # pragma: no cover
    sys.exit(run())
