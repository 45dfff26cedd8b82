"""Command-line surface.

Exit codes: 0 on success, 1 on domain errors (the error class name goes to
stderr), 2 on usage errors.  Configurations are read from ``--in`` (default
stdin) and written to ``--out`` (default stdout); search parallelism is
capped by the PSTS_THREADS environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fileio
from .analysis import (
    complement,
    decompose,
    enumerate_free_complete,
    is_freely_contained,
    structure_report,
)
from .constructions import (
    attach_complete,
    grassmannian,
    perspective_system,
    veronesian,
)
from .core import binomial_index
from .errors import NotBinomial, NotFreelyContained, PropertyFailure, PSTSError
from .isomorphism import are_isomorphic, canonical_form
from .transforms import extend_one_more, first_swap, swap_kill
from .verify import (
    DEFAULT_SEED,
    build_existence_corpus,
    classify_veblen_labellings,
    run_property_battery,
)


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _load_config(path: str | None):
    return fileio.parse_config(_read_text(path))


def _cmd_construct(args) -> int:
    if args.what == "grassmannian":
        config = grassmannian(args.n)
    elif args.what == "veronesian":
        config = veronesian(args.k)
    elif args.what == "perspective":
        spec_text = _read_text(args.spec)
        base_dir = os.path.dirname(os.path.abspath(args.spec)) \
            if args.spec not in (None, "-") else os.getcwd()

        def load_axis(rel: str):
            path = rel if os.path.isabs(rel) else os.path.join(base_dir, rel)
            return _load_config(path)

        config = perspective_system(fileio.parse_perspective(spec_text, load_axis))
    elif args.what == "attach":
        base = _load_config(args.base)
        mu = fileio.parse_labelling(_read_text(args.mu))
        config = attach_complete(args.x.split(), mu, base)
    else:  # pragma: no cover - argparse guards
        raise AssertionError(args.what)
    _write_text(args.out, fileio.emit_config(config))
    return 0


def _cmd_transform(args) -> int:
    config = _load_config(args.infile)
    if args.what == "extend":
        n = binomial_index(config)
        if n is None:
            raise NotBinomial("input is not a binomial configuration")
        subs = enumerate_free_complete(config, n - 1)
        result = extend_one_more(config, subs)
    else:  # swap
        if args.certificate:
            cert = fileio.parse_swap_certificate(_read_text(args.certificate))
            result = swap_kill(config, cert)
        else:
            result, cert = first_swap(config)
        if args.emit_certificate:
            _write_text(args.emit_certificate, fileio.emit_swap_certificate(cert))
    _write_text(args.out, fileio.emit_config(result))
    return 0


def _cmd_analyze(args) -> int:
    config = _load_config(args.infile)
    if args.what == "subgraphs":
        order = args.order
        subs = enumerate_free_complete(config, order)
        out = []
        for w in subs:
            labels = w.vertex_labels
            out.append(f"K {w.order}: " + " ".join(labels))
            out.append("sides:")
            for e in sorted(w.sides):
                a, b = (config.labels[x] for x in e)
                out.append(f"{a} {b} -> line(" + ",".join(
                    config.line_labels(w.sides[e])) + ")")
        _write_text(args.out, "\n".join(out) + "\n" if out else "")
        return 0
    if args.what == "complement":
        verts = args.vertices.replace(",", " ").split()
        witness = is_freely_contained(config, verts)
        if witness is None:
            raise NotFreelyContained(
                f"{verts} is not a freely contained complete graph")
        _write_text(args.out, fileio.emit_config(complement(config, witness)))
        return 0
    if args.what == "structure":
        subs = enumerate_free_complete(config, args.order)
        report = structure_report(config, subs)
        labels = config.labels
        out = [f"subgraphs: {report.family_size} of order {report.subgraph_order}"]
        for (i, j), q in sorted(report.centers.items()):
            out.append(f"center[{i + 1},{j + 1}] = {labels[q]}")
        for i, zs in enumerate(report.private_vertices):
            out.append(f"private[{i + 1}] = " + " ".join(labels[z] for z in zs))
        out.append(f"axis points: {len(report.axis_points)}  "
                   f"axis lines: {len(report.axis_lines)}")
        out.append("axis: " + " ".join(labels[p] for p in report.axis_points))
        out.append("all 11 structure assertions hold")
        _write_text(args.out, "\n".join(out) + "\n")
        return 0
    if args.what == "decompose":
        subs = enumerate_free_complete(config, args.order)
        data = decompose(config, subs)
        if args.out in (None, "-") and not args.axis_out:
            print("usage error: decompose needs --axis-out when writing to stdout",
                  file=sys.stderr)
            return 2
        axis_out = args.axis_out or (args.out + ".axis")
        _write_text(axis_out, fileio.emit_config(data.axis))
        rel = os.path.basename(axis_out) if args.out not in (None, "-") else axis_out
        _write_text(args.out, fileio.emit_perspective(data, rel))
        return 0
    raise AssertionError(args.what)  # pragma: no cover


def _cmd_iso(args) -> int:
    a = _load_config(args.file_a)
    b = _load_config(args.file_b)
    result = are_isomorphic(a, b)
    lines = []
    if args.emit_cert:
        for name, config in (("A", a), ("B", b)):
            cf = canonical_form(config)
            lines.append(f"certificate {name}: {cf.digest}")
            for tr in cf.certificate:
                lines.append(f"  {tr[0]} {tr[1]} {tr[2]}")
    if result:
        lines.append("isomorphic")
        for lab in a.labels:
            lines.append(f"{lab} -> {result.witness[lab]}")
    else:
        lines.append("not isomorphic")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_verify(args) -> int:
    if args.what == "battery":
        report = run_property_battery(args.n_max, args.seed)
        _write_text(args.out, report.render_text())
        if args.json:
            records = [r.as_record() for r in report.records]
            _write_text(args.json, json.dumps(records, indent=2) + "\n")
        if report.total_failures:
            raise PropertyFailure(f"{report.total_failures} property failures")
        return 0
    witnesses = build_existence_corpus(args.n)
    records = []
    out = []
    for w in witnesses:
        path = None
        if args.out_dir:
            os.makedirs(args.out_dir, exist_ok=True)
            path = os.path.join(args.out_dir, f"witness-n{w.n}-m{w.m}.cfg")
            _write_text(path, fileio.emit_config(w.entry.configuration))
        out.append(f"n={w.n} m={w.m}: witness {w.entry.name} "
                   f"(v={w.entry.configuration.v}) confirmed")
        records.append({"property": "existence-witness", "n": w.n, "m": w.m,
                        "entries": 1, "failures": 0, "witness_file": path})
    counts = sorted(w.m for w in witnesses)
    out.append("counts: " + " ".join(str(c) for c in counts))
    _write_text(args.out, "\n".join(out) + "\n")
    if args.json:
        _write_text(args.json, json.dumps(records, indent=2) + "\n")
    return 0


def _cmd_classify(args) -> int:
    report = classify_veblen_labellings()
    text = report.render_text()
    count5 = report.by_count(5)
    iso = are_isomorphic(count5[0].representative, grassmannian(5))
    text += f"count-5 class isomorphic to grassmannian(5): {'yes' if iso else 'no'}\n"
    _write_text(args.out, text)
    if args.json:
        records = [{"property": "census-class", "n": 4, "m": c.count,
                    "entries": c.size, "failures": 0, "witness_file": None,
                    "digest": c.digest} for c in report.classes]
        _write_text(args.json, json.dumps(records, indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psts",
        description="Binomial partial Steiner triple systems toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a configuration")
    csub = construct.add_subparsers(dest="what", required=True)
    g = csub.add_parser("grassmannian")
    g.add_argument("n", type=int)
    v = csub.add_parser("veronesian")
    v.add_argument("k", type=int)
    p = csub.add_parser("perspective")
    p.add_argument("--spec", required=True)
    a = csub.add_parser("attach")
    a.add_argument("--x", required=True, help="new vertex tokens, space separated")
    a.add_argument("--base", required=True)
    a.add_argument("--mu", required=True)
    for sp in (g, v, p, a):
        sp.add_argument("--out")
        sp.set_defaults(func=_cmd_construct)

    transform = sub.add_parser("transform", help="apply a constructive transform")
    tsub = transform.add_subparsers(dest="what", required=True)
    te = tsub.add_parser("extend")
    ts = tsub.add_parser("swap")
    ts.add_argument("--certificate")
    ts.add_argument("--emit-certificate")
    for sp in (te, ts):
        sp.add_argument("--in", dest="infile")
        sp.add_argument("--out")
        sp.set_defaults(func=_cmd_transform)

    analyze = sub.add_parser("analyze", help="enumerate and dissect subgraphs")
    asub = analyze.add_subparsers(dest="what", required=True)
    a1 = asub.add_parser("subgraphs")
    a1.add_argument("--order", type=int)
    a2 = asub.add_parser("complement")
    a2.add_argument("--vertices", required=True)
    a3 = asub.add_parser("structure")
    a3.add_argument("--order", type=int)
    a4 = asub.add_parser("decompose")
    a4.add_argument("--order", type=int)
    a4.add_argument("--axis-out")
    for sp in (a1, a2, a3, a4):
        sp.add_argument("--in", dest="infile")
        sp.add_argument("--out")
        sp.set_defaults(func=_cmd_analyze)

    iso = sub.add_parser("iso", help="isomorphism test")
    iso.add_argument("file_a")
    iso.add_argument("file_b")
    iso.add_argument("--emit-cert", action="store_true")
    iso.add_argument("--out")
    iso.set_defaults(func=_cmd_iso)

    verify = sub.add_parser("verify", help="run the verification suites")
    vsub = verify.add_subparsers(dest="what", required=True)
    vb = vsub.add_parser("battery")
    vb.add_argument("--n-max", type=int, required=True)
    vb.add_argument("--seed", type=int, default=DEFAULT_SEED)
    vb.add_argument("--json")
    ve = vsub.add_parser("existence")
    ve.add_argument("--n", type=int, required=True)
    ve.add_argument("--out-dir")
    ve.add_argument("--json")
    for sp in (vb, ve):
        sp.add_argument("--out")
        sp.set_defaults(func=_cmd_verify)

    classify = sub.add_parser("classify", help="labelling census")
    clsub = classify.add_subparsers(dest="what", required=True)
    cv = clsub.add_parser("veblen-labellings")
    cv.add_argument("--json")
    cv.add_argument("--out")
    cv.set_defaults(func=_cmd_classify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PSTSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
