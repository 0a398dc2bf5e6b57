"""Command line front end. Output is JSON (default) or CSV; every payload
carries the form parameters and a schema version."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import classify as C
from .intersect import IntersectError, intersection_report
from .flag_oracle import OracleError
from .real_forms import (FormError, dim_base_cycle, dim_dual_schubert, dim_flag_manifold,
                         enumerate_flag_domains, is_signature, parse_form)
from .verification import UnknownTheorem, run_theorem, theorems_for
from .weyl_core import (WeylError, box_fill, enumerate_group, length_bfs, length_paper,
                        parse)

SCHEMA_VERSION = "1"
VERBS = ("enumerate", "classify", "length", "intersect", "counts", "dims", "verify")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="flagdomains", description="Flag domain combinatorics for classical real forms.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("--form", required=True, help="sp2n-r:N, so-star:N, so-pq:P,Q or sp-pq:P,Q")
    ap.add_argument("--perm", help='signed permutation, e.g. "-3,5,-1,4,2"')
    ap.add_argument("--alpha", help='flag domain signature, e.g. "+-+"')
    ap.add_argument("--theorem", help="verification check id (default: all that apply)")
    ap.add_argument("--perfect", action="store_true", help="restrict to super/perfect elements")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--max-n", type=int, default=6, help="cap for exhaustive verbs")
    ap.add_argument("--out", help="write output to this file")
    return ap


def _perm(args, rf):
    if not args.perm:
        raise UsageError("--perm is required")
    return parse(args.perm, rf.n, rf.weyl_family)


def _cap(args, rf):
    if rf.n > args.max_n:
        raise UsageError(f"n={rf.n} exceeds --max-n {args.max_n}")


def cmd_enumerate(args, rf):
    _cap(args, rf)
    elems = C.complementary_elements(rf) if args.perfect else enumerate_group(rf.n, rf.weyl_family)
    rows = [{"w": str(w), "length": length_paper(w)} for w in elems]
    return {"perfect": args.perfect, "elements": rows}, rows


def cmd_classify(args, rf):
    w = _perm(args, rf)
    c = C.classify(rf, w)
    body = {"w": str(w), **c.flags, "length": c.length_paper, "length_bfs": c.length_bfs}
    return body, [body]


def cmd_length(args, rf):
    w = _perm(args, rf)
    body = {"w": str(w), "length_paper": length_paper(w), "length_bfs": length_bfs(w),
            "box_fill": ",".join(map(str, box_fill(w)))}
    return body, [body]


def cmd_intersect(args, rf):
    w = _perm(args, rf)
    rep = intersection_report(rf, w)
    body = rep.to_json()
    if args.alpha:
        if not is_signature(args.alpha, rf.n) or args.alpha not in enumerate_flag_domains(rf):
            raise UsageError(f"{args.alpha!r} is not a flag domain of this form")
        pts = rep.by_domain.get(args.alpha, ())
        body = {"w": str(w), "alpha": args.alpha, "points": [f.to_json() for f in pts]}
        rows = [{"w": str(w), "alpha": args.alpha, "point": f.label_text()} for f in pts]
        return body, rows
    rows = [{"w": str(w), "alpha": a, "point": f.label_text()}
            for a, fs in rep.by_domain.items() for f in fs]
    return body, rows


def cmd_counts(args, rf):
    if args.perfect:
        body = {"perfect": True, "count": len(C.complementary_elements(rf)),
                "formula": C.perfect_count_formula(rf)}
    else:
        _cap(args, rf)
        pred = C.nonempty_predicate(rf)
        body = {"perfect": False, "group_order": 0, "count": 0}
        for w in enumerate_group(rf.n, rf.weyl_family):
            body["group_order"] += 1
            body["count"] += bool(pred(w))
    return body, [body]


def cmd_dims(args, rf):
    body = {"flag_manifold": dim_flag_manifold(rf), "base_cycle": dim_base_cycle(rf),
            "dual_schubert": dim_dual_schubert(rf)}
    return body, [body]


def cmd_verify(args, rf):
    caps = {"max_n": args.max_n}
    names = [args.theorem] if args.theorem else theorems_for(rf)
    reports, skipped = [], []
    for name in names:
        try:
            reports.append(run_theorem(rf, name, caps))
        except OracleError as exc:
            if args.theorem:
                raise UsageError(str(exc)) from exc
            skipped.append({"theorem": name, "reason": str(exc)})
    body = {"pass": all(r["pass"] for r in reports), "reports": reports, "skipped": skipped}
    rows = [{"theorem": r["theorem"], "pass": r["pass"], "checked": r["checked"],
             "counterexamples": len(r["counterexamples"])} for r in reports]
    return body, rows


HANDLERS = {
    "enumerate": cmd_enumerate, "classify": cmd_classify, "length": cmd_length,
    "intersect": cmd_intersect, "counts": cmd_counts, "dims": cmd_dims, "verify": cmd_verify,
}


def _render(fmt, meta, body, rows) -> str:
    if fmt == "json":
        return json.dumps({**meta, **body}, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    rows = [{**meta, **r} for r in rows]
    fields = list(meta) + sorted({k for r in rows for k in r} - set(meta))
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v)
                         for k, v in r.items()})
    return buf.getvalue()


def _glue_values(argv):
    """Attach values such as "-3,-2,-1" to their flag, since argparse would
    otherwise read them as options."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--perm", "--alpha"):
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def run(argv) -> tuple:
    """Returns (exit code, output text)."""
    try:
        args = build_parser().parse_args(_glue_values(list(argv)))
        rf = parse_form(args.form)
        body, rows = HANDLERS[args.verb](args, rf)
    except (UsageError, FormError, WeylError, C.ClassifyError, IntersectError,
            UnknownTheorem, OracleError) as exc:
        return 1, json.dumps({"error": str(exc), "schema_version": SCHEMA_VERSION}) + "\n"
    meta = {"form": rf.code, "n": rf.n, "p": rf.p, "q": rf.q,
            "schema_version": SCHEMA_VERSION, "verb": args.verb}
    text = _render(args.format, meta, body, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    code = 2 if args.verb == "verify" and not body["pass"] else 0
    return code, text


def main(argv=None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    (sys.stderr if code == 1 else sys.stdout).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
