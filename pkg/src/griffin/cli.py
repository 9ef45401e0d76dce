"""Command-line interface: ``griffin <command> ...``.

Exit codes: 0 success / all checks pass, 1 a mathematical check failed,
2 usage error, 3 invalid mathematical input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .construct import build_G, build_G_s
from .diagrams import (
    ContainerDiagram,
    DiagramError,
    build_D,
    build_D_direct,
    code,
    code_inv,
    minimal_elements,
)
from .groebner import groebner, hilbert_function, standard_monomials
from .ideals import generator_keys, generators
from .partitions import INF, ShapeError, enumerate_C, in_C, parse_partition
from .poly import Polynomial, PolynomialError
from .verify import SweepSpec, conjecture_sweep, format_s, max_n, parse_s, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _comp(text: str) -> tuple:
    text = text.strip()
    try:
        if text.startswith("["):
            vals = json.loads(text)
        else:
            vals = [int(x) for x in text.strip("()").split(",") if x.strip()]
    except ValueError as err:
        raise InputError(f"cannot parse composition {text!r}") from err
    if any(not isinstance(v, int) or v < 0 for v in vals):
        raise InputError(f"composition entries must be non-negative integers: {text!r}")
    return tuple(vals)


def _tuple_str(a) -> str:
    return "(" + ",".join(map(str, a)) + ")"


def _cap(n: int):
    if n > max_n():
        raise InputError(f"n={n} exceeds GRIFFIN_MAX_N={max_n()}")
    if n < 1:
        raise InputError("n must be positive")


def _emit(args, payload, text: str):
    if getattr(args, "json", False):
        out = json.dumps(payload, indent=2)
    else:
        out = text
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _poly_entry(p: Polynomial) -> dict:
    return {"text": str(p), "terms": p.to_json()}


# -- commands --------------------------------------------------------------


def cmd_gens(args):
    lam = parse_partition(args.lam)
    s = parse_s(args.s)
    gens = generators(args.n, lam, s)
    keys = generator_keys(args.n, lam)
    labels = [str(k) for k in keys] + [f"x{i}^{s}" for i in range(1, args.n + 1)][: len(gens) - len(keys)]
    payload = {
        "n": args.n,
        "lambda": list(lam),
        "s": format_s(s),
        "generators": [dict(name=lab, **_poly_entry(g)) for lab, g in zip(labels, gens)],
    }
    _emit(args, payload, "\n".join(f"{lab} = {g}" for lab, g in zip(labels, gens)))
    return EXIT_OK


def cmd_gb(args):
    _cap(args.n)
    lam = parse_partition(args.lam)
    s = parse_s(args.s)
    elements = build_G(args.n, lam)
    entries, lines = [], []
    for el in elements:
        e = {"target": list(el.target), **_poly_entry(el.value)}
        line = f"{_tuple_str(el.target)}: {el.value}"
        if args.certify:
            e["combination"] = el.poly.combination_json()
            line += f"\n    = {el.poly.combination_str()}"
        entries.append(e)
        lines.append(line)
    extra = []
    if s != INF:
        extra = build_G_s(args.n, lam, s)[len(elements):]
        for p in extra:
            entries.append({"target": list(p.leading_monomial()), **_poly_entry(p)})
            lines.append(f"{_tuple_str(p.leading_monomial())}: {p}")
    payload = {"n": args.n, "lambda": list(lam), "s": format_s(s), "elements": entries}
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_reduced_gb(args):
    _cap(args.n)
    lam = parse_partition(args.lam)
    s = parse_s(args.s)
    gb = groebner(generators(args.n, lam, s), args.order)
    payload = {
        "n": args.n,
        "lambda": list(lam),
        "s": format_s(s),
        "order": args.order,
        "elements": [_poly_entry(g) for g in gb.elements],
    }
    _emit(args, payload, "\n".join(g.to_str(args.order) for g in gb.elements))
    return EXIT_OK


def cmd_basis(args):
    lam = parse_partition(args.lam)
    s = parse_s(args.s)
    if s == INF:
        if args.max_deg is None:
            raise InputError("basis with s=inf is infinite; give --max-deg")
        cands = standard_monomials([], args.max_deg, n=args.n)
        comps = {a for a in cands if in_C(a, args.n, lam, INF)}
    else:
        comps = enumerate_C(args.n, lam, s)
        if args.max_deg is not None:
            comps = {a for a in comps if sum(a) <= args.max_deg}
    comps = sorted(comps, key=lambda a: (sum(a), a))
    payload = {"n": args.n, "lambda": list(lam), "s": format_s(s), "size": len(comps),
               "monomials": [list(a) for a in comps]}
    _emit(args, payload, "\n".join(_tuple_str(a) for a in comps) + f"\n# {len(comps)} monomials")
    return EXIT_OK


def cmd_dset(args):
    lam = parse_partition(args.lam)
    D = build_D_direct(args.n, lam) if args.direct else build_D(args.n, lam)
    if args.minimal:
        D = minimal_elements(D)
    D = sorted(D)
    payload = {"n": args.n, "lambda": list(lam), "minimal_filter": args.minimal,
               "elements": [list(a) for a in D]}
    _emit(args, payload, "\n".join(_tuple_str(a) for a in D))
    return EXIT_OK


def cmd_code(args):
    lam = parse_partition(args.lam)
    try:
        with open(args.diagram) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise InputError(f"cannot read diagram: {err}") from err
    sigma = ContainerDiagram.from_json(data, args.n)
    if sigma.lam != lam:
        raise InputError(f"diagram shape is for lambda={sigma.lam}, not {lam}")
    a = code(sigma)
    _emit(args, list(a), _tuple_str(a))
    return EXIT_OK


def cmd_decode(args):
    lam = parse_partition(args.lam)
    alpha = _comp(args.alpha)
    sigma = code_inv(alpha, args.n, lam)
    payload = sigma.to_json()
    payload["empty_boxes"] = sigma.num_empty()
    _emit(args, payload, sigma.render())
    return EXIT_OK


def cmd_verify(args):
    _cap(args.n)
    lam = parse_partition(args.lam)
    s = parse_s(args.s)
    report = verify(args.n, lam, s, args.max_deg)
    _emit(args, report.to_json(), report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_conjecture(args):
    spec = SweepSpec(
        n_max=args.n_max,
        s_max=args.s_max,
        include_inf=not args.no_inf,
        timeout=None if args.timeout <= 0 else args.timeout,
        jobs=args.jobs,
    )
    report = conjecture_sweep(spec)
    _emit(args, report.to_json(), report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_hilbert(args):
    _cap(args.n)
    lam = parse_partition(args.lam)
    s = parse_s(args.s)
    gb = groebner(generators(args.n, lam, s))
    if args.max_deg is None:
        if s == INF:
            raise InputError("hilbert with s=inf needs --max-deg")
        max_deg = args.n * (s - 1)
    else:
        max_deg = args.max_deg
    h = hilbert_function(gb, max_deg, n=args.n)
    payload = {"n": args.n, "lambda": list(lam), "s": format_s(s), "hilbert": h, "total": sum(h)}
    _emit(args, payload, " ".join(map(str, h)) + f"\n# total {sum(h)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="griffin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, s=True, json_=True):
        p.add_argument("n", type=int)
        p.add_argument("lam", metavar="lambda", help="comma-separated parts, e.g. 3,2,1")
        if s:
            p.add_argument("--s", default="inf", help="integer or 'inf' (default)")
        if json_:
            p.add_argument("--json", action="store_true")
            p.add_argument("--out", help="write output to this file")

    p = sub.add_parser("gens", help="generators of I_{n,lambda,s}")
    common(p)
    p.set_defaults(fn=cmd_gens)

    p = sub.add_parser("gb", help="the recursively constructed Groebner basis")
    common(p)
    p.add_argument("--certify", action="store_true", help="show membership combinations")
    p.set_defaults(fn=cmd_gb)

    p = sub.add_parser("reduced-gb", help="reduced Groebner basis via Buchberger")
    common(p)
    p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    p.set_defaults(fn=cmd_reduced_gb)

    p = sub.add_parser("basis", help="Griffin's monomial basis A_{n,lambda,s}")
    common(p)
    p.add_argument("--max-deg", type=int)
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("dset", help="the exponent set D_{n,lambda}")
    common(p, s=False)
    p.add_argument("--direct", action="store_true", help="enumerate diagrams instead of recursing")
    p.add_argument("--minimal", action="store_true", help="keep entrywise-minimal elements only")
    p.set_defaults(fn=cmd_dset)

    p = sub.add_parser("code", help="coinversion code of a diagram (JSON file)")
    common(p, s=False)
    p.add_argument("--diagram", required=True)
    p.set_defaults(fn=cmd_code)

    p = sub.add_parser("decode", help="container diagram with a given code")
    common(p, s=False)
    p.add_argument("alpha", help="composition, e.g. 1,0,2 or [1,0,2]")
    p.set_defaults(fn=cmd_decode)

    p = sub.add_parser("verify", help="run every check for (n, lambda, s)")
    common(p)
    p.add_argument("--max-deg", type=int, help="degree bound for s=inf (default covers every element of D)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("conjecture", help="compare lex and grevlex reduced bases")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--s-max", type=int, default=4)
    p.add_argument("--no-inf", action="store_true")
    p.add_argument("--timeout", type=float, default=60.0, help="seconds per cell; <= 0 disables")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_conjecture)

    p = sub.add_parser("hilbert", help="Hilbert function of R_{n,lambda,s}")
    common(p)
    p.add_argument("--max-deg", type=int)
    p.set_defaults(fn=cmd_hilbert)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (InputError, ShapeError, PolynomialError, DiagramError) as err:
        print(f"griffin: error: {err}", file=sys.stderr)
        return EXIT_INPUT


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
