"""Command-line front end over HCUBE files.

Exit status: 0 success or verified, 1 verification failed, 2 usage error or
malformed input.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

from . import io
from .conference import SKEW, SYMMETRIC, ConferenceMatrix, paley_conference, verify_conference
from .core import PM1, InputError, sylvester, verify_hadamard_hypercube
from .cubes import cube_from_conference, paley_cube, yang_cube
from .designs import design_certificate, design_hypercube, verify_symmetric_design_hypercube
from .families import ConstructionError, family_from_hadamard, family_from_hypercube, recursive_hypercube, verify_orthogonal_family
from .latin import line_rainbow_latin, modular_latin, verify_latin, verify_line_rainbow
from .triples import ast_from_skew_two_graph, ast_from_two_graph, p_report, verify_ast
from .twographs import skew_two_graph_from_conference, two_graph_from_conference

OK, FAILED, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _coeffs(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}") from None
    if len(values) != 6:
        raise argparse.ArgumentTypeError("expected six comma-separated values")
    return values


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hcube", description="Construct and verify Hadamard hypercubes and related objects.")
    p.add_argument("--verbose", action="store_true", help="report per-check timing on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    con = sub.add_parser("construct", help="build an object and write it to --out")
    csub = con.add_subparsers(dest="what", required=True, parser_class=_Parser)

    def construct(name, help_text):
        q = csub.add_parser(name, help=help_text)
        q.add_argument("--out", required=True)
        return q

    construct("conference", "Paley conference matrix of order q+1").add_argument("--q", type=int, required=True)
    construct("paley-cube", "Paley cube of order q+1").add_argument("--q", type=int, required=True)
    c = construct("cube", "six-coefficient cube over a conference matrix")
    c.add_argument("--conference", required=True)
    c.add_argument("--coeffs", type=_coeffs, required=True)
    c = construct("yang", "product cube prod A(i_j, i_k)")
    c.add_argument("--hadamard", required=True)
    c.add_argument("--dim", type=int, required=True)
    c = construct("latin", "line-rainbow (n,d,r,1) or modular Latin hypercube")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--r", type=int, default=1)
    c.add_argument("--modular", action="store_true")
    c = construct("family", "orthogonal family; --out is a directory")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--hadamard")
    src.add_argument("--hypercube")
    c.add_argument("--r", type=int)
    c.add_argument("--dim", type=int, required=True)
    c = construct("recursive", "(n^(r+1), d*s, d*s-1) hypercube from an (n^r, s+1, s) one")
    c.add_argument("--hypercube", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--dim", type=int, required=True)
    c = construct("design", "symmetric design hypercube (J-N)/2 from a normalized Hadamard matrix")
    c.add_argument("--hadamard", required=True)
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("--cube-out", help="also write the class-1 cube N")
    c.add_argument("--certificate", help="write the per-layer certificate here")
    construct("sylvester", "Sylvester Hadamard matrix").add_argument("--order", type=int, required=True)

    ver = sub.add_parser("verify", help="check an object; prints PASS or FAIL with a witness")
    vsub = ver.add_subparsers(dest="what", required=True, parser_class=_Parser)
    v = vsub.add_parser("hadamard")
    v.add_argument("--file", required=True)
    v.add_argument("--class", dest="cls", type=int, required=True)
    v.add_argument("--strict", action="store_true", help="compare every pair of parallel layers")
    vsub.add_parser("conference").add_argument("--file", required=True)
    v = vsub.add_parser("latin")
    v.add_argument("--file", required=True)
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--t", type=int, required=True)
    v.add_argument("--line-rainbow", action="store_true")
    vsub.add_parser("family").add_argument("--manifest", required=True)
    v = vsub.add_parser("design")
    v.add_argument("--file", required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--lambda", dest="lam", type=int, required=True)
    v.add_argument("--certificate")

    ast = sub.add_parser("ast", help="association schemes on triples")
    asub = ast.add_subparsers(dest="what", required=True, parser_class=_Parser)
    a = asub.add_parser("from-conference")
    a.add_argument("--file", required=True)
    a.add_argument("--out", help="write the six-class labeling here")
    a = asub.add_parser("verify")
    a.add_argument("--file", required=True)
    a.add_argument("--force", action="store_true", help="lift the order limit")

    sub.add_parser("info", help="summarize an HCUBE file").add_argument("--file", required=True)
    return p


def _emit(verdict, out) -> int:
    print(str(verdict), file=out)
    return OK if verdict else FAILED


def _conference(path) -> ConferenceMatrix:
    return ConferenceMatrix.from_matrix(io.load_cube(path))


def _construct(args, out) -> int:
    w = args.what
    if w == "conference":
        io.save(args.out, paley_conference(args.q).matrix)
    elif w == "paley-cube":
        io.save(args.out, paley_cube(args.q))
    elif w == "cube":
        io.save(args.out, cube_from_conference(_conference(args.conference), args.coeffs))
    elif w == "yang":
        io.save(args.out, yang_cube(io.load_cube(args.hadamard), args.dim))
    elif w == "latin":
        L = modular_latin(args.n, args.d) if args.modular else line_rainbow_latin(args.n, args.d, args.r)
        io.save_latin(args.out, L)
    elif w == "family":
        if args.hadamard:
            S = family_from_hadamard(io.load_cube(args.hadamard), args.dim)
        else:
            H = io.load_cube(args.hypercube)
            if args.r is not None and args.r != H.dim - 1:
                raise InputError(f"--r {args.r} does not match a hypercube of dimension {H.dim}")
            S = family_from_hypercube(H, args.dim)
        manifest = io.save_family(args.out, S.members)
        print(f"wrote {S.count} members, manifest {manifest}", file=out)
        return OK
    elif w == "recursive":
        io.save(args.out, recursive_hypercube(io.load_cube(args.hypercube), args.n, args.r, args.dim))
    elif w == "design":
        N, K = design_hypercube(io.load_cube(args.hadamard), args.dim)
        io.save(args.out, K.incidence)
        if args.cube_out:
            io.save(args.cube_out, N)
        v, k, lam = K.params
        if args.certificate:
            Path(args.certificate).write_text(design_certificate(K.incidence, k, lam), encoding="utf-8")
        print(f"wrote symmetric ({v},{args.dim},{k},{lam})-design", file=out)
        return OK
    elif w == "sylvester":
        io.save(args.out, sylvester(args.order))
    print(f"wrote {args.out}", file=out)
    return OK


def _verify(args, out) -> int:
    w = args.what
    if w == "hadamard":
        return _emit(verify_hadamard_hypercube(io.load_cube(args.file), args.cls, strict=args.strict), out)
    if w == "conference":
        return _emit(verify_conference(io.load_cube(args.file)), out)
    if w == "latin":
        cube = io.load_cube(args.file)
        verdict = verify_latin(cube, args.r, args.t)
        if verdict and args.line_rainbow:
            verdict = verify_line_rainbow(cube)
        return _emit(verdict, out)
    if w == "family":
        return _emit(verify_orthogonal_family(io.load_family(args.manifest)), out)
    if w == "design":
        cube = io.load_cube(args.file)
        if args.certificate:
            Path(args.certificate).write_text(design_certificate(cube, args.k, args.lam), encoding="utf-8")
        return _emit(verify_symmetric_design_hypercube(cube, args.k, args.lam), out)
    raise InputError(f"unknown verify target {w}")


def _ast(args, out) -> int:
    if args.what == "from-conference":
        C = _conference(args.file)
        if C.kind == SYMMETRIC:
            scheme = ast_from_two_graph(two_graph_from_conference(C))
        elif C.kind == SKEW:
            scheme = ast_from_skew_two_graph(skew_two_graph_from_conference(C))
        else:
            raise InputError("conference matrix is neither symmetric nor skew-symmetric")
        if args.out:
            io.save(args.out, scheme.labeling)
        print(f"kind={scheme.kind()} n={scheme.n} classes={scheme.m + 1}", file=out)
        out.write(p_report(scheme))
        return OK
    report = verify_ast(io.load_cube(args.file), force=args.force)
    return _emit(report, out)


def _info(args, out) -> int:
    doc = io.load(args.file)
    cube = doc.cube
    print(f"n={cube.order} d={cube.dim} alphabet={cube.alphabet} cells={cube.array.size}", file=out)
    if doc.meta:
        print("meta " + " ".join(f"{k}={v}" for k, v in doc.meta.items()), file=out)
    values, counts = np.unique(cube.array, return_counts=True)
    print("counts " + " ".join(f"{v}:{c}" for v, c in zip(values.tolist(), counts.tolist())), file=out)
    if cube.alphabet == PM1 and cube.dim >= 2:
        classes = [c for c in range(1, cube.dim) if verify_hadamard_hypercube(cube, c)]
        print(f"hadamard classes={','.join(map(str, classes)) or 'none'}", file=out)
    return OK


def _join_coeffs(argv: list[str]) -> list[str]:
    """Glue ``--coeffs`` to its value so a leading minus is not read as a flag."""
    joined: list[str] = []
    it = iter(argv)
    for token in it:
        if token == "--coeffs":
            value = next(it, None)
            joined.append(token if value is None else f"--coeffs={value}")
        else:
            joined.append(token)
    return joined


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(_join_coeffs(argv))
        handler = {"construct": _construct, "verify": _verify, "ast": _ast, "info": _info}[args.command]
        code = handler(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ConstructionError as exc:
        print(f"FAIL {exc}", file=out)
        return FAILED
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    if args.verbose:
        print(f"time={time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


def main() -> int:
    return run(sys.argv[1:])
