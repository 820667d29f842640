"""Command line front end: ``lhomology <command> ...``.

Exit codes: 0 success, 1 input error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import Coefficients, ZZ
from .bigraded import BigradedGroups
from .complex import (ComplexError, cartesian_product, cone, disjoint_union, join,
                      standard_complex, stellar_subdivision, wedge)
from .scx import emit_scx, read_scx

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def complex_meta(K) -> dict:
    return {"vertices": K.nvertices, "f_vector": list(K.f_vector())}


def invariants_document(K, groups: BigradedGroups) -> dict:
    return {
        "tool": {"name": "lhomology", "version": __version__},
        "reduced": groups.reduced,
        "coefficients": str(groups.coeff),
        "page": groups.page,
        "complex": complex_meta(K),
        "groups": [{"s": s, "t": t, "rank": r, "torsion": list(tor)}
                   for (s, t), (r, tor) in sorted(groups.table().items())],
    }


def _groups_table(K, groups: BigradedGroups) -> str:
    tag = "LH~" if groups.reduced else "LH"
    head = (f"{tag} over {groups.coeff}, page {groups.page}; "
            f"{K.nvertices} vertices, f-vector {tuple(K.f_vector())}")
    return head + "\n" + groups.format_table() + "\n"


def _coeff(args) -> Coefficients:
    return Coefficients.parse(args.coeff)


# -- commands ---------------------------------------------------------------------


def cmd_validate(args, out):
    K = read_scx(args.file)
    if args.out == "json":
        out.write(_dump({"valid": True, "complex": complex_meta(K)}))
    else:
        out.write(f"valid: {K.nvertices} vertices, f-vector {tuple(K.f_vector())}\n")
    return EXIT_OK


def cmd_info(args, out):
    from .lhom import essential_dimension

    K = read_scx(args.file)
    info = {
        "complex": complex_meta(K),
        "names": list(K.names),
        "dimension": K.dim,
        "euler_characteristic": K.euler_characteristic(),
        "maximal_simplices": [[K.names[v] for v in s] for s in K.maximal_simplices() if s],
        "essential_dimension": essential_dimension(K, ZZ),
    }
    if args.out == "json":
        out.write(_dump(info))
    else:
        out.write(f"vertices: {' '.join(K.names) or '(none)'}\n"
                  f"f-vector: {tuple(K.f_vector())}\n"
                  f"dimension: {K.dim}\n"
                  f"euler characteristic: {info['euler_characteristic']}\n"
                  f"maximal simplices: {len(info['maximal_simplices'])}\n"
                  f"essential dimension: {info['essential_dimension']}\n")
    return EXIT_OK


def cmd_homology(args, out):
    from .chains import homology

    K = read_scx(args.file)
    coeff = _coeff(args)
    H = homology(K, coeff, reduced=args.reduced)
    rows = [{"degree": k, "rank": g.rank, "torsion": list(g.torsion)}
            for k, g in sorted(H.items()) if not g.is_zero()]
    if args.out == "json":
        out.write(_dump({"tool": {"name": "lhomology", "version": __version__},
                         "reduced": args.reduced, "coefficients": str(coeff),
                         "complex": complex_meta(K), "homology": rows}))
    else:
        tag = "reduced homology" if args.reduced else "homology"
        out.write(f"{tag} over {coeff}\n")
        for k, g in sorted(H.items()):
            if not g.is_zero():
                out.write(f"H_{k}: {g}\n")
        if not rows:
            out.write("(all zero)\n")
    return EXIT_OK


def _lh(K, coeff, reduced, page, method="auto") -> BigradedGroups:
    from .lhom import e1_page, l_homology, spectral_page

    if page == 1:
        return e1_page(K, coeff, reduced).groups()
    if page == 2:
        return l_homology(K, coeff, reduced, method)
    return spectral_page(K, coeff, page, reduced)


def cmd_lh(args, out):
    K = read_scx(args.file)
    groups = _lh(K, _coeff(args), args.reduced, args.page, args.method)
    out.write(_dump(invariants_document(K, groups)) if args.out == "json"
              else _groups_table(K, groups))
    return EXIT_OK


def _emit_complex(K, args, out):
    if args.out == "json":
        out.write(_dump({"complex": complex_meta(K), "scx": emit_scx(K)}))
    else:
        out.write(emit_scx(K))


def cmd_construct(args, out):
    arity = {"join": 2, "product": 2, "wedge": 2, "disjoint": 2, "cone": 1,
             "full": 0, "boundary": 0}[args.kind]
    if len(args.files) != arity:
        raise ValueError(f"construct {args.kind} takes {arity} input file(s)")
    if arity == 0:
        if args.n is None:
            raise ValueError(f"construct {args.kind} needs --n")
        K = standard_complex(args.kind, args.n)
    else:
        ins = [read_scx(f) for f in args.files]
        K = {"join": join, "product": cartesian_product, "wedge": wedge,
             "disjoint": disjoint_union, "cone": cone}[args.kind](*ins)
    _emit_complex(K, args, out)
    return EXIT_OK


def cmd_subdivide(args, out):
    K = read_scx(args.file)
    sigma = K.simplex(args.simplex.split())
    _emit_complex(stellar_subdivision(K, sigma), args, out)
    return EXIT_OK


def cmd_compare(args, out):
    A, B = read_scx(args.a), read_scx(args.b)
    coeff = _coeff(args)
    ga = _lh(A, coeff, args.reduced, args.page)
    gb = _lh(B, coeff, args.reduced, args.page)
    same = ga == gb
    if args.out == "json":
        out.write(_dump({"equal": same, "a": invariants_document(A, ga),
                         "b": invariants_document(B, gb)}))
    else:
        out.write(f"A: {_groups_table(A, ga)}B: {_groups_table(B, gb)}")
        out.write("equal\n" if same else "DIFFERENT\n")
    return EXIT_OK if same else EXIT_MISMATCH


def cmd_check(args, out):
    from . import checks

    coeff = _coeff(args)
    n = args.n
    if args.name == "ex7":
        rep = checks.check_simplex_closed_forms(3 if n is None else n)
    elif args.name in ("thm4", "thm6"):
        K = read_scx(args.file) if args.file else standard_complex("boundary",
                                                                  3 if n is None else n)
        rep = (checks.check_e1_identification(K, (coeff,)) if args.name == "thm4"
               else checks.check_total_complex(K, coeff))
    elif args.name == "thm11":
        rep = checks.check_unions(coeff)
    else:
        rep = checks.check_joins_cones_products()
    _write_report(args.name, rep, args, out)
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def _write_report(name, rep, args, out):
    if args.out == "json":
        out.write(_dump({"check": name, "passed": rep.passed, "lines": rep.lines}))
    else:
        out.write("\n".join(rep.lines) + f"\n{name}: {'PASS' if rep.passed else 'FAIL'}\n")


def cmd_fuzz(args, out):
    from .oracle import fuzz_invariance

    rep = fuzz_invariance(args.seed, args.trials, args.max_vertices, args.max_dim,
                          oracle=args.oracle)
    if args.out == "json":
        out.write(_dump(rep.to_dict()))
    else:
        out.write(f"seed {rep.seed}, {rep.trials} trials, "
                  f"{len(rep.failures)} failing\n")
        for r in rep.failures:
            out.write(f"trial {r.index}: {r.witness}\n")
        if rep.r_witness:
            w = rep.r_witness
            out.write(f"R-homology witness: trial {w['trial']}, subdivide {w['simplex']}\n")
        else:
            out.write("R-homology witness: none found\n")
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def cmd_oracle_check(args, out):
    from .checks import check_oracle
    from .corpus import full_corpus

    items = ([(f, read_scx(f)) for f in args.files] if args.files else full_corpus())
    lines, ok = [], True
    for name, K in items:
        rep = check_oracle(K)
        ok &= rep.passed
        lines.append(f"{'ok  ' if rep.passed else 'FAIL'} {name}")
        lines += [f"    {ln}" for ln in rep.lines if ln.startswith("FAIL")]
    if args.out == "json":
        out.write(_dump({"check": "oracle", "passed": ok, "lines": lines}))
    else:
        out.write("\n".join(lines) + f"\noracle-check: {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", choices=("json", "table"), default="table")

    def coeff_opt(p):
        p.add_argument("--coeff", default="Z", help="Z, Q or F<p> (default Z)")

    def reduced_opt(p, default=True):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--reduced", dest="reduced", action="store_true", default=default)
        g.add_argument("--unreduced", dest="reduced", action="store_false")

    parser = _Parser(prog="lhomology", description="Bigraded L-homology of simplicial complexes")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="parse and check an .scx file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", parents=[common], help="basic statistics")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("homology", parents=[common], help="ordinary simplicial homology")
    p.add_argument("file")
    coeff_opt(p)
    reduced_opt(p, default=False)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("lh", parents=[common], help="L-homology (or another page)")
    p.add_argument("file")
    coeff_opt(p)
    reduced_opt(p)
    p.add_argument("--page", type=int, default=2)
    p.add_argument("--method", choices=("auto", "e1", "direct"), default="auto")
    p.set_defaults(func=cmd_lh)

    p = sub.add_parser("construct", parents=[common], help="build a complex")
    p.add_argument("kind", choices=("join", "cone", "product", "wedge", "disjoint",
                                    "full", "boundary"))
    p.add_argument("files", nargs="*")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("subdivide", parents=[common], help="stellar subdivision")
    p.add_argument("file")
    p.add_argument("--simplex", required=True, help="vertex names, space separated")
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("compare", parents=[common], help="compare L-homology of two files")
    p.add_argument("a")
    p.add_argument("b")
    coeff_opt(p)
    reduced_opt(p)
    p.add_argument("--page", type=int, default=2)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("check", parents=[common], help="run a named verification")
    p.add_argument("name", choices=("thm4", "thm6", "ex7", "thm11", "thm12"))
    p.add_argument("file", nargs="?")
    p.add_argument("--n", type=int)
    coeff_opt(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fuzz", parents=[common], help="subdivision invariance fuzzer")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--oracle", action="store_true", help="also compare with the dense oracle")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("oracle-check", parents=[common],
                       help="main path vs dense oracle (files or the built-in corpus)")
    p.add_argument("files", nargs="*")
    p.set_defaults(func=cmd_oracle_check)
    return parser


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        err.write(f"{e}\n")
        return EXIT_INPUT
    except SystemExit as e:        # --help / --version
        return EXIT_OK if not e.code else EXIT_INPUT
    try:
        return args.func(args, out)
    except (ComplexError, ValueError, OSError) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
