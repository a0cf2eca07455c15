"""Command-line front end.

Subcommands: enumerate, graph, verify {geometric|perfect|coherent|
ud-match|iso}, tropicalize, preimage, omega.  Every command is a
deterministic function of its arguments and seed, so repeated runs are
byte-identical.  Exit codes: 0 success, 1 verification failure, 2
usage or parse error.
"""

import argparse
import json
import sys

from . import (cartan_core, coherent_family, geometric_crystal,
               perfect_crystal, tropicalizer, ud_crystal)

_EDGE_COLORS = ("black", "red", "blue", "darkgreen", "orange", "purple")


def _emit(text, out):
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj, out):
    _emit(json.dumps(obj, indent=2, sort_keys=True), out)


def _usage_error(message):
    sys.stderr.write("error: %s\n" % (message,))
    return 2


def _element_record(elem):
    data = perfect_crystal.element_to_dict(elem)
    data["minimal"] = perfect_crystal.is_minimal(elem)
    data["wt"] = list(perfect_crystal.wt(elem))
    data["eps"] = list(perfect_crystal.eps_weight(elem))
    data["phi"] = list(perfect_crystal.phi_weight(elem))
    return data


def _row_text(elem):
    return " ".join(",".join(str(v) for v in row) for row in elem.rows)


def cmd_enumerate(args):
    if args.l is None or not 1 <= args.l <= 4:
        return _usage_error("enumerate requires --l between 1 and 4")
    elems = perfect_crystal.enumerate_level(args.l)
    if args.format == "json":
        _dump([_element_record(e) for e in elems], args.out)
    elif args.format == "text":
        lines = []
        for e in elems:
            flag = " minimal" if perfect_crystal.is_minimal(e) else ""
            lines.append("%s | wt=%s%s"
                         % (_row_text(e), list(perfect_crystal.wt(e)), flag))
        _emit("\n".join(lines), args.out)
    else:
        return _usage_error("enumerate supports --format json or text")
    return 0


def cmd_graph(args):
    if args.l is None or not 1 <= args.l <= 3:
        return _usage_error("graph requires --l between 1 and 3")
    elems = perfect_crystal.enumerate_level(args.l)
    index = {e: i for i, e in enumerate(elems)}
    edges = [(index[src], k, index[dst])
             for src, k, dst in perfect_crystal.crystal_graph(args.l)]
    if args.format == "dot":
        lines = ["digraph crystal {"]
        for i, e in enumerate(elems):
            lines.append('  n%d [label="%s"];' % (i, _row_text(e)))
        for i, k, j in edges:
            lines.append('  n%d -> n%d [label="k=%d", color="%s"];'
                         % (i, j, k, _EDGE_COLORS[k]))
        lines.append("}")
        _emit("\n".join(lines), args.out)
    elif args.format == "json":
        _dump({"l": args.l,
               "nodes": [_element_record(e) for e in elems],
               "edges": [{"src": i, "k": k, "dst": j}
                         for i, k, j in edges]}, args.out)
    elif args.format == "text":
        _emit("\n".join("%d -[k=%d]-> %d" % (i, k, j)
                        for i, k, j in edges), args.out)
    else:
        return _usage_error("graph supports --format dot, json, or text")
    return 0


_SUITES = ("geometric", "perfect", "coherent", "ud-match", "iso")


def cmd_verify(args):
    suite = args.suite
    if suite == "geometric":
        cfg = geometric_crystal.SampleConfig(
            seed=args.seed, count=args.samples or 100,
            bound=args.box or 6)
        report = geometric_crystal.verify_axioms(cfg)
    elif suite == "perfect":
        l = args.l if args.l is not None else 2
        if not 1 <= l <= 3:
            return _usage_error("verify perfect requires --l between 1 and 3")
        report = perfect_crystal.verify_crystal(l)
    elif suite == "coherent":
        report = coherent_family.verify_coherence(
            samples=args.samples or 2000, seed=args.seed)
    elif suite == "ud-match":
        report = ud_crystal.verify_ud_match(
            samples=args.samples or 10000, box=args.box or 5,
            seed=args.seed)
    elif suite == "iso":
        report = ud_crystal.verify_isomorphism(
            samples=args.samples or 10000, box=args.box or 8,
            seed=args.seed)
    else:
        return _usage_error("unknown verify suite %r" % (suite,))
    _dump(report, args.out)
    return 0 if report["ok"] else 1


def cmd_tropicalize(args):
    try:
        ast = tropicalizer.parse(args.expr)
    except tropicalizer.ExprSyntaxError as exc:
        return _usage_error("cannot parse expression: %s" % (exc,))
    _emit(tropicalizer.trop_to_text(tropicalizer.tropicalize(ast)),
          args.out)
    return 0


def _read_stdin_json():
    text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError("stdin is not valid JSON: %s" % (exc,))


def cmd_preimage(args):
    try:
        data = _read_stdin_json()
        elem = perfect_crystal.element_from_dict(data)
        if elem.regime != "limit":
            raise ValueError("preimage expects a limit-regime record")
        l, a, inner = coherent_family.preimage(elem)
    except ValueError as exc:
        return _usage_error(str(exc))
    _dump({"l": l, "a": list(a),
           "element": perfect_crystal.element_to_dict(inner)}, args.out)
    return 0


def cmd_omega(args):
    try:
        data = _read_stdin_json()
        if isinstance(data, dict) and "rows" in data:
            elem = perfect_crystal.element_from_dict(data)
            result = {"point": list(ud_crystal.omega(elem))}
        elif isinstance(data, dict) and "point" in data:
            point = ud_crystal.point_from_list(data["point"])
            result = perfect_crystal.element_to_dict(
                ud_crystal.omega_inv(point))
        else:
            raise ValueError(
                'omega expects {"rows": ...} or {"point": ...} on stdin')
    except ValueError as exc:
        return _usage_error(str(exc))
    _dump(result, args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spincrystal",
        description="exact crystal computations for the spin node")
    sub = parser.add_subparsers(dest="command")

    def common(p, fmt_choices=None, fmt_default=None):
        p.add_argument("--l", type=int, default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--box", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        if fmt_choices:
            p.add_argument("--format", choices=fmt_choices,
                           default=fmt_default)
        p.add_argument("--out", default=None)

    common(sub.add_parser("enumerate"), ("json", "text"), "json")
    common(sub.add_parser("graph"), ("dot", "json", "text"), "dot")
    p_verify = sub.add_parser("verify")
    p_verify.add_argument("suite", choices=_SUITES)
    common(p_verify)
    p_trop = sub.add_parser("tropicalize")
    p_trop.add_argument("expr")
    common(p_trop)
    common(sub.add_parser("preimage"))
    common(sub.add_parser("omega"))
    return parser


_HANDLERS = {
    "enumerate": cmd_enumerate,
    "graph": cmd_graph,
    "verify": cmd_verify,
    "tropicalize": cmd_tropicalize,
    "preimage": cmd_preimage,
    "omega": cmd_omega,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
