"""Command-line front end.

Exit codes: 0 on success, 1 when a check fails, 2 on usage errors (bad
arguments, unknown names, malformed input).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .errors import ContactTriError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load(args):
    """Complex named on the command line, or read from ``--file``.

    A positional argument that is not a generator name but names an existing
    file is read as a facet list.
    """
    from .generators import generate, names
    from .io import read_facet_list

    if getattr(args, "file", None):
        return args.file, read_facet_list(args.file), None
    if not args.name:
        raise _UsageError("give a complex name or --file")
    if args.name not in names() and os.path.isfile(args.name):
        return args.name, read_facet_list(args.name), None
    params = {"n": args.n} if args.name == "t3_family" and args.n is not None else {}
    nc = generate(args.name, **params)
    return nc.name, nc.complex, nc


def _source_args(p, optional_name: bool = True):
    p.add_argument("name", nargs="?" if optional_name else None, help="generator name")
    p.add_argument("--file", help="facet-list file instead of a generator")
    p.add_argument("--n", type=int, help="size parameter for t3_family")


# ---------------------------------------------------------------------------
# subcommands

def cmd_generate(args) -> int:
    from .generators import names
    from .io import format_facet_list

    if args.list:
        print("\n".join(names()))
        return EXIT_OK
    name, X, nc = _load(args)
    if args.output:
        # files carry a provenance comment; stdout is the bare facet list
        header = None if args.quiet or nc is None else f"{nc.name}: {nc.provenance}"
        with open(args.output, "w") as fh:
            fh.write(format_facet_list(X, header))
    else:
        sys.stdout.write(format_facet_list(X))
    return EXIT_OK


def cmd_fvector(args) -> int:
    name, X, _ = _load(args)
    f = X.f_vector()
    _emit(args, {"complex": name, "f_vector": list(f), "euler_characteristic": X.euler_characteristic()},
          f"{name}: f = {f}, chi = {X.euler_characteristic()}")
    return EXIT_OK


def cmd_homology(args) -> int:
    from .algebra import homology

    name, X, _ = _load(args)
    H = homology(X)
    _emit(args, {"complex": name, "homology": H.to_json()}, f"{name}: H_* = {H}")
    return EXIT_OK


def cmd_aut(args) -> int:
    from .symmetry import automorphism_group, orbits

    name, X, _ = _load(args)
    G = automorphism_group(X, max_vertices=args.max_vertices)
    orb = {k: len(orbits(G, X.faces(k))) for k in range(X.dimension + 1)}
    payload = {"complex": name, "order": G.order, "enumerated": G.enumerated,
               "generators": G.cycle_strings(), "orbit_counts": orb}
    lines = [f"{name}: |Aut| = {G.order} (exhaustive search found {G.enumerated})"]
    lines += [f"  generator {g}" for g in G.cycle_strings()]
    lines += [f"  orbits on {k}-faces: {c}" for k, c in orb.items()]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _facet_arg(text: str | None):
    return None if text is None else tuple(text.replace(",", " ").split())


def cmd_consum(args) -> int:
    from .generators import generate
    from .io import format_facet_list, read_facet_list
    from .surgery import connected_sum_details

    def get(spec):
        try:
            return generate(spec).complex
        except ContactTriError:
            return read_facet_list(spec)

    X1, X2 = get(args.first), get(args.second)
    res = connected_sum_details(X1, X2, _facet_arg(args.sigma1), _facet_arg(args.sigma2))
    if args.json:
        _emit(args, {"f_vector": list(res.complex.f_vector()),
                     "sigma1": list(res.gluing.sigma1), "sigma2": list(res.gluing.sigma2),
                     "psi": res.gluing.psi, "flipped": res.flipped,
                     "facets": [list(f) for f in res.complex.facets]}, "")
    else:
        sys.stdout.write(format_facet_list(res.complex, None if args.quiet else
                                           f"{args.first} # {args.second}, f = {res.complex.f_vector()}"))
    return EXIT_OK


def cmd_schain(args) -> int:
    from .io import format_facet_list
    from .surgery import s_chain

    nc = s_chain(args.n, args.sign)
    led = nc.notes["ledger"]
    if args.json:
        _emit(args, {"name": nc.name, "f_vector": list(nc.complex.f_vector()),
                     "ledger": led.to_json(),
                     "steps": [s.__dict__ for s in nc.notes["steps"]],
                     "facets": [list(f) for f in nc.complex.facets]}, "")
    else:
        head = None if args.quiet else f"{nc.name}: f = {nc.complex.f_vector()}, d3 = {led.d3}"
        sys.stdout.write(format_facet_list(nc.complex, head))
    return EXIT_OK


def _parse_identify(items: Sequence[str]) -> list[list[str]]:
    classes = []
    for item in items:
        members = [x for x in item.replace(",", "=").split("=") if x]
        if len(members) < 2:
            raise _UsageError(f"--identify expects a=b[=c...], got {item!r}")
        classes.append(members)
    return classes


def cmd_quotient(args) -> int:
    from .cubes import wrap_scheme
    from .io import format_facet_list, read_facet_list
    from .surgery import IdentificationScheme, quotient

    X = read_facet_list(args.file)
    if args.wrap:
        scheme = IdentificationScheme.from_map(wrap_scheme(X, args.wrap))
    else:
        scheme = IdentificationScheme.from_classes(_parse_identify(args.identify or []))
    Q = quotient(X, scheme)
    sys.stdout.write(format_facet_list(Q, None if args.quiet else f"quotient, f = {Q.f_vector()}"))
    return EXIT_OK


def cmd_t3(args) -> int:
    from .algebra import homology
    from .cubes import t3_40, t3_family
    from .geometry.disks import disk_containment_report
    from .geometry.realization import max_diameter
    from .ledger import t3_ledger

    if args.n < 1:
        raise _UsageError("--n must be at least 1")
    nc = t3_40() if args.n == 1 else t3_family(args.n)
    X, R = nc.complex, nc.realization
    led, disks = t3_ledger(args.n, args.r0)
    reports = [disk_containment_report(X, R, d) for d in disks]
    H = homology(X)
    payload = {"complex": nc.name, "f_vector": list(X.f_vector()), "homology": str(H),
               "max_diameter": max_diameter(X, R), "ledger": led.to_json(),
               "disks": [r.to_json() for r in reports]}
    lines = [f"{nc.name}: f = {X.f_vector()}, H_* = {H}, max diameter = {max_diameter(X, R):.15g}",
             f"ledger: d2 = {led.d2}, certified f0 = {led.f0_bound}"]
    for r in reports:
        lines.append(f"disk k={r.disk.k}: r in ({r.disk.r_lo:.6g}, {r.disk.r_hi:.6g}), "
                     f"threshold {r.threshold:.6g}, max diameter {r.max_diameter:.6g}, "
                     f"{r.failing}/{r.facets} facets too large: {r.status} "
                     f"(against 2 r_hi = {2 * r.disk.r_hi:.6g}: {r.upper_status})")
    _emit(args, payload, "\n".join(lines))
    return EXIT_FAIL if any(r.status == "FAIL" for r in reports) else EXIT_OK


def cmd_delta(args) -> int:
    from .geometry.disks import delta_hat

    rep = delta_hat(samples=args.samples, tol=args.tol)
    ok = rep.delta_hat < 0.99
    _emit(args, {**rep.to_json(), "status": "PASS" if ok else "FAIL"},
          f"delta_hat = {rep.delta_hat:.12g} at t = {rep.argmax_t:g} "
          f"({rep.samples} samples, tol {rep.tol:g}): {'PASS' if ok else 'FAIL'} (< 0.99)")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ledger(args) -> int:
    from .ledger import (
        ContactClass,
        KnotClass,
        apply_lutz,
        general_vertex_bound,
        s3_vertex_bound,
    )

    ranks = {"s3": 0, "t3": 3, "s2xs1": 1}
    if args.action == "new":
        c = ContactClass.new(args.manifold, ranks[args.manifold], args.f0)
        print(c.dumps())
        return EXIT_OK
    if args.action == "twist":
        if args.load:
            with open(args.load) as fh:
                c = ContactClass.loads(fh.read())
        else:
            c = ContactClass.new(args.manifold, ranks[args.manifold], args.f0)
        cls = tuple(int(x) for x in args.cls.split(",")) if args.cls else (0,) * len(c.d2)
        k = KnotClass(cls, args.sl if not any(cls) else None, c.manifold)
        c = apply_lutz(c, k, args.df0, note=args.note or "")
        print(c.dumps())
        return EXIT_OK
    # bound
    if args.f0 is None:
        payload = {"n": args.n, "s3_vertex_bound": s3_vertex_bound(args.n)}
        text = f"S3, d3 = {args.n}: {payload['s3_vertex_bound']} vertices"
    else:
        payload = {"n": args.n, "f0": args.f0, "general_vertex_bound": general_vertex_bound(args.f0, args.n)}
        text = f"f0 = {args.f0}, shift {args.n}: {payload['general_vertex_bound']} vertices"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import SUITES, run_all, run_suite

    opts = {}
    for key in ("tol", "samples"):
        if getattr(args, key) is not None:
            opts[key] = getattr(args, key)
    if args.all:
        reports = run_all(**opts)
    elif args.target:
        if args.n is not None:
            opts["n"] = args.n
        reports = [run_suite(args.target, **opts)]
    else:
        raise _UsageError(f"give a target ({', '.join(SUITES)}) or --all")
    reports.sort(key=lambda r: r.target)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
    else:
        print("\n\n".join(r.table() for r in reports))
        bad = sum(c.status == "FAIL" for r in reports for c in r.checks)
        total = sum(len(r.checks) for r in reports)
        print(f"\n{total - bad}/{total} checks without FAIL")
    return max(r.exit_status for r in reports)


def cmd_export(args) -> int:
    from .geometry.off import off_export

    name, X, nc = _load(args)
    text = off_export(X, None if nc is None else nc.realization)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-q", "--quiet", action="store_true", help="no banner or header comments")

    p = _Parser(prog="contact-tri", description="Build and check explicit contact triangulations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("generate", parents=[common], help="write a named complex as a facet list")
    _source_args(s)
    s.add_argument("--list", action="store_true", help="list generator names")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)

    for name, func, helptext in (("fvector", cmd_fvector, "face counts"),
                                 ("homology", cmd_homology, "integer homology")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        _source_args(s)
        s.set_defaults(func=func)

    s = sub.add_parser("aut", parents=[common], help="automorphism group")
    _source_args(s)
    s.add_argument("--max-vertices", type=int, default=16)
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("consum", parents=[common], help="connected sum of two complexes")
    s.add_argument("first", help="generator name or facet-list file")
    s.add_argument("second", help="generator name or facet-list file")
    s.add_argument("--sigma1", help="removed facet of the first complex, comma separated")
    s.add_argument("--sigma2", help="removed facet of the second complex, comma separated")
    s.set_defaults(func=cmd_consum)

    s = sub.add_parser("schain", parents=[common], help="chain of twisted 7-vertex spheres")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--sign", choices=["+", "-", "0"], default="+")
    s.set_defaults(func=cmd_schain)

    s = sub.add_parser("quotient", parents=[common], help="identify vertices of a facet list")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--identify", action="append", help="class a=b[=c...]; repeatable")
    g.add_argument("--wrap", type=int, metavar="N", help="reduce grid labels p<x>_<y>_<z> mod N")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("t3", parents=[common], help="3-torus triangulation and disk containment")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r0", type=float, default=0.45)
    s.set_defaults(func=cmd_t3)

    s = sub.add_parser("delta", parents=[common], help="largest meridional disk in one cell")
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--tol", type=float, default=1e-9)
    s.set_defaults(func=cmd_delta)

    s = sub.add_parser("ledger", parents=[common], help="relative invariants under Lutz twists")
    s.add_argument("action", choices=["new", "twist", "bound"])
    s.add_argument("--manifold", choices=["s3", "t3", "s2xs1"], default="s3")
    s.add_argument("--f0", type=int)
    s.add_argument("--from", dest="load", help="ledger JSON written by 'ledger new' or 'twist'")
    s.add_argument("--class", dest="cls", help="homology class of the knot, comma separated")
    s.add_argument("--sl", type=int, help="self-linking number of a null-homologous knot")
    s.add_argument("--df0", type=int, default=0, help="change of the vertex count")
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--note")
    s.set_defaults(func=cmd_ledger)

    s = sub.add_parser("verify", parents=[common], help="run check suites")
    s.add_argument("target", nargs="?")
    s.add_argument("--all", action="store_true")
    s.add_argument("--n", type=int)
    s.add_argument("--tol", type=float)
    s.add_argument("--samples", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("export", parents=[common], help="OFF export of a realized complex")
    _source_args(s)
    s.add_argument("--format", choices=["off"], default="off")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_export)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise _UsageError(parser.format_usage().strip())
        if not args.quiet and not args.json:
            print(f"contact-tri {__version__}", file=sys.stderr)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ContactTriError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))
