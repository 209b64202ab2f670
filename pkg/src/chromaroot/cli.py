"""``chromaroot`` command line."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .chromatic import chromatic_polynomial, default_store, smallest_nontrivial_root
from .classes import classify, ham_form_with_path
from .gentri import brute_minor, enumerate_gentri, minor_witness, poset_minor
from .graph import GraphError, graph6_decode, graph6_encode
from .poly import PolyError, isolate_roots, refine
from .verify import (
    CLASS_FILTERS,
    MIN_SAMPLES,
    Report,
    SuiteConfig,
    certify_constants,
    dump_reports,
    number_line_svg,
    omega_scan,
    run_suite,
    suite_svg,
)

CACHE_ENV = "CHROMAROOT_CACHE"


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _reports_csv(reports: list[Report]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "passed", "witnesses"])
    for r in reports:
        w.writerow([r.name, r.passed, len(r.witnesses)])
    return buf.getvalue()


def _render_reports(reports: list[Report], fmt: str, meta: dict) -> str:
    if fmt == "csv":
        return _reports_csv(reports)
    if fmt == "svg":
        return suite_svg(reports)
    return dump_reports(reports, meta)


# -- subcommands --------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    levels = enumerate_gentri(args.max_n, jobs=args.jobs)
    if args.out == "json":
        text = _json({str(n): [graph6_encode(g) for g in gs] for n, gs in levels.items()})
    elif args.out == "csv":
        text = "n,graph6\n" + "".join(f"{n},{graph6_encode(g)}\n" for n, gs in levels.items() for g in gs)
    else:
        text = "".join(graph6_encode(g) + "\n" for gs in levels.values() for g in gs)
    _emit(text, args.output)
    return 0


def cmd_poly(args) -> int:
    g = graph6_decode(args.graph)
    res = chromatic_polynomial(g)
    obj = {"graph6": args.graph, "n": g.n, "P": str(res.poly), "Q": str(res.q_poly),
           "coefficients": list(res.poly.coeffs)}
    _emit(_json(obj) if args.out == "json" else f"P(t) = {res.poly}\nQ(t) = {res.q_poly}\n", args.output)
    return 0


def cmd_roots(args) -> int:
    g = graph6_decode(args.graph)
    p = chromatic_polynomial(g).poly
    width = Fraction(args.width)
    roots = [refine(r, width).as_json() for r in isolate_roots(p, Fraction(args.lo), Fraction(args.hi))]
    obj = {"graph6": args.graph, "interval": [args.lo, args.hi], "roots": roots}
    try:
        r = smallest_nontrivial_root(g)
        obj["smallest_nontrivial"] = refine(r, width).as_json() if r is not None else None
    except GraphError:
        obj["smallest_nontrivial"] = None
    _emit(_json(obj), args.output)
    return 0


def cmd_classify(args) -> int:
    _emit(_json(classify(graph6_decode(args.graph))), args.output)
    return 0


def cmd_minor(args) -> int:
    h, g = graph6_decode(args.h), graph6_decode(args.g)
    obj = {"h": args.h, "g": args.g, "poset_minor": poset_minor(h, g)}
    if obj["poset_minor"]:
        obj["witness"] = [[s, list(e)] for s, e in minor_witness(h, g)]
    if args.brute:
        obj["brute_minor"] = brute_minor(h, g)
    _emit(_json(obj), args.output)
    return 0


def cmd_hamform(args) -> int:
    g = graph6_decode(args.graph)
    h, steps, path = ham_form_with_path(g)
    obj = {
        "input": args.graph,
        "output": graph6_encode(h),
        "switches": [{"cut": [s.cut.x, s.cut.y], "component": sorted(s.component_vertices)} for s in steps],
        "hamiltonian_path": path,
    }
    _emit(_json(obj), args.output)
    return 0


def _config(args) -> SuiteConfig:
    return SuiteConfig(
        n_max=args.max_n,
        lemma_n_max=min(args.lemma_max_n, args.max_n),
        minor_n_max=min(args.minor_max_n, args.max_n),
        switch_n_max=max(args.switch_max_n, args.max_n),
        min_samples=args.grid,
    )


def cmd_verify(args) -> int:
    cfg = _config(args)
    progress = (lambda name: print(f"running {name}", file=sys.stderr)) if args.verbose else None
    reports = run_suite(cfg, jobs=args.jobs, progress=progress)
    _emit(_render_reports(reports, args.out, {"config": cfg.as_json()}), args.output)
    for r in reports:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def cmd_omega(args) -> int:
    filters = CLASS_FILTERS if args.class_filter == "all" else (args.class_filter,)
    reports = [omega_scan(f, args.max_n, jobs=args.jobs) for f in filters]
    _emit(_render_reports(reports, args.out, {"n_max": args.max_n}), args.output)
    return 0 if all(r.passed for r in reports) else 1


def cmd_constants(args) -> int:
    rep = certify_constants()
    if args.out == "svg":
        table = rep.details["table"]
        marks = [(k, float(v["approx"])) for k, v in table.items() if isinstance(v, dict)]
        text = number_line_svg(marks)
    else:
        text = _render_reports([rep], args.out, {})
    _emit(text, args.output)
    return 0 if rep.passed else 1


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chromaroot", description="Chromatic roots of generalised triangles.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, out_choices=("json",), default_out="json"):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--out", choices=out_choices, default=default_out)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        return p

    p = add("enumerate", cmd_enumerate, "list generalised triangles as graph6", ("graph6", "json", "csv"), "graph6")
    p.add_argument("--max-n", type=int, default=11)
    p.add_argument("--jobs", type=int, default=1)

    p = add("poly", cmd_poly, "chromatic polynomial of a graph6 graph", ("json", "text"))
    p.add_argument("graph")

    p = add("roots", cmd_roots, "isolate real chromatic roots")
    p.add_argument("graph")
    p.add_argument("--lo", default="1")
    p.add_argument("--hi", default="2")
    p.add_argument("--width", default="1/1000000000000")

    p = add("classify", cmd_classify, "2-cut properties and class membership")
    p.add_argument("graph")

    p = add("minor", cmd_minor, "minor test inside the class")
    p.add_argument("h")
    p.add_argument("g")
    p.add_argument("--brute", action="store_true", help="also run the brute-force oracle")

    p = add("hamform", cmd_hamform, "switch a K1 ∩ K2 member into Hamiltonian-path form")
    p.add_argument("graph")

    for name, fn, text in (("verify", cmd_verify, "run the full verification suite"),
                           ("omega", cmd_omega, "minimum smallest root over a class")):
        p = add(name, fn, text, ("json", "csv", "svg"))
        p.add_argument("--max-n", type=int, default=13)
        p.add_argument("--jobs", type=int, default=1)
        if name == "verify":
            p.add_argument("--grid", type=int, default=MIN_SAMPLES, help="minimum samples per t-grid")
            p.add_argument("--lemma-max-n", type=int, default=11)
            p.add_argument("--minor-max-n", type=int, default=11)
            p.add_argument("--switch-max-n", type=int, default=15)
            p.add_argument("-v", "--verbose", action="store_true")
        else:
            p.add_argument("--class", dest="class_filter", choices=CLASS_FILTERS + ("all",), default="all")

    add("constants", cmd_constants, "certify the reference constants", ("json", "csv", "svg"))
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cache = os.environ.get(CACHE_ENV)
    try:
        if cache:
            default_store.load(cache)
        code = args.func(args)
    except (GraphError, PolyError, ValueError) as exc:
        print(f"chromaroot: error: {exc}", file=sys.stderr)
        return 2
    if cache:
        default_store.save(cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
