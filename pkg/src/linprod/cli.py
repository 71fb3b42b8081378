"""Command line front end: ``linprod check|rees|betti|sagbi|decompose``.

Every run produces a JSON report (``"schema": 1``); the text tables printed
without ``--json`` are a view of the same data.  Exit codes: 0 all verdicts
passed, 1 some mathematical verdict failed, 2 a step budget ran out, 3 bad
input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from . import __version__
from . import families as fam
from .checks import (
    SCHEMA,
    Bounds,
    InputError,
    Verdicts,
    _fmt_tally,
    betti_payload,
    jsonable,
    load_instance,
    run_check,
)
from .groebner import BudgetExceeded
from .polyring import Field, ParseError

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


def bundled_instances() -> list:
    """Paths of the instance files shipped with the package, sorted by name."""
    base = resources.files("linprod") / "data" / "instances"
    return sorted(str(p) for p in base.iterdir() if p.name.endswith(".json"))


def _field(text: str | None):
    if text is None:
        return None
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _bounds(args) -> Bounds:
    return Bounds(tmax=args.tmax, bound=args.bound, n=args.n, budget=args.budget)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("LINPROD_THREADS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# single-instance workers (module level so they pickle)


def _empty_family(inst) -> bool:
    d = inst.data
    if inst.kind in ("ideals", "polymatroidal"):
        return not d.get("ideals")
    if inst.kind == "linear_forms":
        return not d.get("factors")
    if inst.kind == "northeast":
        return d.get("S") == []
    return False


def _check_one(path, field_text, bounds: Bounds) -> dict:
    inst = load_instance(path, _field(field_text))
    entry = {"name": inst.name, "kind": inst.kind, "description": inst.data.get("description", ""),
             "bounds": bounds.as_dict()}
    if _empty_family(inst):
        entry.update(verdicts={}, payload={}, seconds=0.0)
        return entry
    V, payload, secs = run_check(inst, bounds)
    entry.update(verdicts=V.items, payload=jsonable(payload), seconds=round(secs, 3))
    return entry


def _guarded(fn, *a) -> dict:
    """Run ``fn`` and turn the expected failure modes into report entries."""
    try:
        return fn(*a)
    except BudgetExceeded as exc:
        return {"error": "budget", "message": f"step budget of {exc.steps} exhausted in {exc.what}"}
    except (InputError, ParseError) as exc:
        return {"error": "input", "message": str(exc)}
    except ValueError as exc:
        return {"error": "input", "message": str(exc)}


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> tuple:
    paths = list(args.files)
    if args.all_paper_examples:
        paths += bundled_instances()
    bounds = _bounds(args)
    jobs = [(p, args.field, bounds) for p in paths]
    threads = _threads()
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futs = [pool.submit(_guarded, _check_one, *j) for j in jobs]
            entries = [f.result() for f in futs]
    else:
        entries = [_guarded(_check_one, *j) for j in jobs]
    for p, e in zip(paths, entries):
        e.setdefault("file", os.path.basename(p))
    return entries


def _single(args, fn) -> list:
    return [_guarded(fn, args.file, args)]


def _rees_one(path, args) -> dict:
    from .linres import reg0_truncated
    from .reesalg import collapse_tally, defining_ideal, present

    inst = load_instance(path, _field(args.field))
    if inst.kind == "northeast":
        pres = fam.ne_rees_presentation(inst.specs(_bounds(args))[0])
    elif inst.kind == "linear_forms":
        pres = present([P.forms() for P in inst.factors()])
    elif inst.kind in ("ideals", "polymatroidal"):
        pres = present(inst.ideals())
    else:
        raise InputError("rees needs an ideal family")
    t = time.perf_counter()
    I = defining_ideal(pres, method=args.method, bound=args.bound, budget=args.budget)
    secs = time.perf_counter() - t
    tally = collapse_tally(pres.tally)
    payload = {
        "method": pres.method,
        "bound": pres.bound,
        "xbound": {",".join(map(str, h)): b for h, b in sorted((pres.xbound or {}).items())},
        "generators": len(I.gens),
        "presentation": pres.to_json(),
    }
    if args.tally:
        payload["tally"] = _fmt_tally(tally)
    if args.show_generators:
        payload["relations"] = [str(g) for g in I.gens]
    V = Verdicts(_bounds(args))
    if "tally" in inst.expected and pres.method == "degreewise":
        from .checks import _parse_tally

        ok = tally == _parse_tally(inst.expected["tally"])
        V.add("expected:tally", ok, None if ok else f"got {payload['tally']}", bound=args.bound)
    if args.reg0:
        cert = reg0_truncated(pres, args.tmax)
        payload["reg0"] = {"reg0_up_to_bound": cert.reg0, "bound": args.tmax, "witnesses": cert["witnesses"]}
    return {"name": inst.name, "kind": inst.kind, "bounds": _bounds(args).as_dict(), "verdicts": V.items,
            "payload": jsonable(payload), "seconds": round(secs, 3)}


def _betti_one(path, args) -> dict:
    from .reesalg import product_ideal

    inst = load_instance(path, _field(args.field))
    if inst.kind == "linear_forms":
        ideals = [P.to_poly_ideal() for P in inst.factors()]
    elif inst.kind in ("ideals", "polymatroidal"):
        ideals = inst.ideals()
    elif inst.kind == "northeast":
        spec = inst.specs(_bounds(args))[0]
        ideals = [fam.ne_I(t, a, spec.n, spec.field) for t, a in spec.S]
    else:
        raise InputError("betti needs an ideal family")
    t = time.perf_counter()
    tables = {}
    for h in fam.hvectors(len(ideals), 1 if args.products is None else args.products):
        tables[",".join(map(str, h))] = betti_payload(product_ideal(ideals, h))
    V = Verdicts(_bounds(args))
    if "linear_products" in inst.expected:
        lin = all(v["linear_resolution"] for v in tables.values())
        V.add("expected:linear_products", lin == inst.expected["linear_products"])
    return {"name": inst.name, "kind": inst.kind, "bounds": _bounds(args).as_dict(), "verdicts": V.items,
            "payload": jsonable({"tables": tables, "linear_resolution": all(v["linear_resolution"] for v in tables.values())}),
            "seconds": round(time.perf_counter() - t, 3)}


def _sagbi_one(path, args) -> dict:
    inst = load_instance(path, _field(args.field))
    bounds = _bounds(args)
    if inst.kind == "northeast":
        from .checks import _sagbi_summary

        t = time.perf_counter()
        V = Verdicts(bounds)
        out = []
        for spec in inst.specs(bounds):
            s = _sagbi_summary(spec, bounds.budget)
            s["S"] = [list(p) for p in spec.S]
            out.append(s)
        V.add("sagbi_lifting", all(s["verdict"] and s["gb_lift"] for s in out))
        V.add("quadratic_groebner_basis", all(s["quadratic"] for s in out))
        return {"name": inst.name, "kind": inst.kind, "bounds": bounds.as_dict(), "verdicts": V.items,
                "payload": jsonable({"specs": out}), "seconds": round(time.perf_counter() - t, 3)}
    if inst.kind != "sagbi":
        raise InputError("sagbi needs a sagbi or northeast instance")
    V, payload, secs = run_check(inst, bounds)
    return {"name": inst.name, "kind": inst.kind, "bounds": bounds.as_dict(), "verdicts": V.items,
            "payload": jsonable(payload), "seconds": round(secs, 3)}


def _decompose_one(path, args) -> dict:
    from . import monideal as mi
    from .reesalg import product_ideal

    inst = load_instance(path, _field(args.field))
    bounds = _bounds(args)
    V = Verdicts(bounds)
    t = time.perf_counter()
    if inst.kind == "northeast":
        out = []
        for spec in inst.specs(bounds):
            d = fam.ne_decompose(spec)
            r = fam.ne_irredundant(spec)
            out.append({"n": spec.n, "S": [list(p) for p in spec.S], "e": d["e"], "I_equal": d["I_equal"],
                        "J_equal": d["J_equal"], "refined": r})
        V.add("I_decomposition", all(o["I_equal"] for o in out), n=out[0]["n"] if out else None)
        V.add("J_decomposition", all(o["J_equal"] for o in out), n=out[0]["n"] if out else None)
        V.add("refined_decomposition", all(o["refined"]["equal"] for o in out))
        payload = {"specs": out}
    elif inst.kind == "linear_forms":
        Ps = inst.factors()
        d = fam.linforms_decompose(Ps, irredundant=True)
        V.add("decomposition", d.equal)
        payload = {"components": [[P.to_json(), v] for P, v in d.components],
                   "irredundant": [[P.to_json(), v] for P, v in d.irredundant],
                   "associated": [P.to_json() for P in fam.linforms_ass(Ps)]}
    elif inst.kind == "polymatroidal":
        ideals = inst.ideals()
        I = product_ideal(ideals, (1,) * len(ideals))
        d = fam.polymatroid_decompose(I)
        V.add("decomposition", d.equal)
        names = I.ring.variables
        fmt = lambda P: [names[i] for i in P]  # noqa: E731
        payload = {"components": [[fmt(P), v] for P, v in d.components],
                   "irredundant": [[fmt(P), v] for P, v in d.irredundant]}
    elif inst.kind == "ideals":
        ideals = inst.ideals()
        I = product_ideal(ideals, (1,) * len(ideals))
        if not isinstance(I, mi.MonomialIdeal):
            raise InputError("decompose handles monomial ideals and the three families")
        comps = mi.primary_decomposition_monomial(I)
        ok = mi.intersect_all([Q for _, Q in comps]) == I
        V.add("decomposition", ok)
        names = I.ring.variables
        payload = {"primary": [[[names[i] for i in sorted(P)], [I.ring.format_monomial(g) for g in Q.gens]]
                               for P, Q in comps]}
    else:
        raise InputError("decompose needs an ideal family")
    return {"name": inst.name, "kind": inst.kind, "bounds": bounds.as_dict(), "verdicts": V.items,
            "payload": jsonable(payload), "seconds": round(time.perf_counter() - t, 3)}


# ---------------------------------------------------------------------------
# reporting


def build_report(command: str, entries: list, timings: bool) -> dict:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for e in entries:
        for v in e.get("verdicts", {}).values():
            counts[v["status"]] += 1
        if not timings:
            e.pop("seconds", None)
    return {
        "schema": SCHEMA,
        "tool": "linprod",
        "version": __version__,
        "command": command,
        "instances": entries,
        "summary": {**counts, "errors": sum(1 for e in entries if "error" in e)},
    }


def exit_code(report: dict) -> int:
    errs = [e["error"] for e in report["instances"] if "error" in e]
    if "input" in errs:
        return EXIT_INPUT
    if "budget" in errs:
        return EXIT_BUDGET
    return EXIT_FAIL if report["summary"]["fail"] else EXIT_OK


def render_text(report: dict) -> str:
    lines = [f"linprod {report['version']}  {report['command']}"]
    for e in report["instances"]:
        if "error" in e:
            lines.append(f"== {e.get('file', '?')}: {e['error']} error: {e['message']}")
            continue
        head = f"== {e['name']} ({e['kind']})"
        if "seconds" in e:
            head += f"  {e['seconds']:.2f}s"
        lines.append(head)
        vs = e["verdicts"]
        if not vs:
            lines.append("   (no checks)")
        width = max((len(k) for k in vs), default=0)
        for k in sorted(vs):
            v = vs[k]
            b = ", ".join(f"{a}={x}" for a, x in sorted(v["bounds"].items()))
            extra = f"  ({v['reason']})" if "reason" in v else ""
            lines.append(f"   {k:<{width}}  {v['status']:<7} [{b}]{extra}")
        p = e.get("payload", {})
        if "generators" in p:
            lines.append(f"   defining ideal: {p['generators']} generators ({p['method']}, bound {p['bound']})")
        if "reg0" in p:
            lines.append(f"   reg0 up to |h|<={p['reg0']['bound']}: {p['reg0']['reg0_up_to_bound']}")
        if "tally" in p:
            lines.append("   tally (a,h): " + ", ".join(f"({k}):{r}" for k, r in p["tally"].items()))
        for h, t in p.get("tables", {}).items():
            lines.append(f"   Betti table of product h=({h}), linear={t['linear_resolution']}")
            lines.extend("     " + row for row in t["text"].splitlines())
        for s in p.get("specs", []):
            if "e" in s:
                es = " ".join(f"e{k.replace(',', '')}={v}" for k, v in s["e"].items() if v)
                lines.append(f"   S={s['S']}: {es}")
    s = report["summary"]
    lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped, {s['errors']} errors")
    return "\n".join(lines)


def render_figures(report: dict, outdir: str) -> list:
    from . import figures

    made = []
    cmd = report["command"]
    for e in report["instances"]:
        if "error" in e:
            continue
        stem = os.path.join(outdir, f"{e['name']}_{cmd}")
        if e.get("verdicts"):
            made.append(figures.verdict_chart(e["verdicts"], stem + "_verdicts.png", f"{e['name']}: verdicts"))
        p = e.get("payload", {})
        if p.get("tally"):
            made.append(figures.tally_bars(p["tally"], stem + "_tally.png", f"{e['name']}: relations by degree (a,h)"))
        for h, t in p.get("tables", {}).items():
            made.append(figures.betti_heatmap(t["table"], f"{stem}_betti_{h.replace(',', '-')}.png",
                                              f"{e['name']}: Betti table, h=({h})"))
        specs = p.get("specs", [])
        if specs and "e" in specs[0]:
            s = specs[0]
            n = max(int(k.split(",")[0]) for k in s["e"])
            made.append(figures.exponent_grid(s["e"], n, stem + "_exponents.png", f"e_ub for S={s['S']}"))
    return [os.path.basename(m) for m in made]


# ---------------------------------------------------------------------------
# argument parsing


def _common(p):
    p.add_argument("--n", type=int, default=None, help="matrix size for northeast families")
    p.add_argument("--tmax", type=int, default=2, help="bound on |h| for products (and on |S| for S = 'all')")
    p.add_argument("--bound", type=int, default=3, help="T-degree bound for Rees algebra computations")
    p.add_argument("--field", default=None, help="coefficient field: q or p:<prime>")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    p.add_argument("--no-timings", action="store_true", help="omit timings (byte-identical reports)")
    p.add_argument("--budget", type=int, default=10**6, help="step budget for Gröbner computations")
    p.add_argument("--out", default=None, help="also write the JSON report to this file")
    p.add_argument("--figures", default=None, metavar="DIR", help="render matplotlib figures into DIR")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linprod", description="Linear products of ideals: checks and computations.")
    ap.add_argument("--version", action="version", version=f"linprod {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the verification battery of instance files")
    p.add_argument("files", nargs="*")
    p.add_argument("--all-paper-examples", action="store_true", help="also check every bundled instance")
    _common(p)

    p = sub.add_parser("rees", help="defining ideal of the multi-Rees algebra")
    p.add_argument("file")
    p.add_argument("--tally", action="store_true", help="report the generator tally by degree")
    p.add_argument("--method", choices=("degreewise", "elimination"), default="degreewise")
    p.add_argument("--reg0", action="store_true", help="add the truncated reg_0 certificate (bound --tmax)")
    p.add_argument("--show-generators", action="store_true")
    _common(p)

    p = sub.add_parser("betti", help="Betti tables and linear-resolution verdicts")
    p.add_argument("file")
    p.add_argument("--products", type=int, default=None, help="also tabulate products with |h| up to this")
    _common(p)

    p = sub.add_parser("sagbi", help="Sagbi lifting criterion")
    p.add_argument("file")
    _common(p)

    p = sub.add_parser("decompose", help="primary decompositions of the family products")
    p.add_argument("file")
    _common(p)
    return ap


COMMANDS = {
    "rees": _rees_one,
    "betti": _betti_one,
    "sagbi": _sagbi_one,
    "decompose": _decompose_one,
}


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if args.command == "check":
        entries = cmd_check(args)
    else:
        entries = _single(args, COMMANDS[args.command])
        entries[0].setdefault("file", os.path.basename(args.file))
    report = build_report(args.command, entries, timings=not args.no_timings)
    if args.figures:
        report["figures"] = render_figures(report, args.figures)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text if args.json else render_text(report))
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
