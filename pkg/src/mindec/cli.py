"""Command line driver.

Matrices travel as JSON documents (see the serialize module) on
standard input or via --input; results are JSON on standard output.
With --check each command appends a verification report of exact
identities and exits with status 4 if any check fails.  Exit codes:
0 success, 2 malformed input, 3 violated precondition (singular
matrix, irrational singular values, ...), 4 failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from mindec.decompose import (
    fine_decompose,
    multiplicative_jc,
    sn_decompose,
    system_of,
    unbreakable_components,
    verify_fine,
    verify_mjc,
    verify_sn,
    verify_unbreakable,
)
from mindec.covariant import materialize_projectors, verify_system
from mindec.errors import FormatError, MindecError
from mindec.generator import (
    GeneratedMatrix,
    blocks_matrix,
    matrix_from_min_poly,
    random_gram_friendly,
    random_invertible_quadratic,
    random_matrix,
    random_normal_matrix,
)
from mindec.matfun import schwerdtfeger_eval, verify_matfun
from mindec.poly import Polynomial
from mindec.realclosed import complete_mjc, svd, verify_cmjc, verify_svd_system
from mindec.scalar import rational_from_string
from mindec.serialize import (
    MatrixDocument,
    document_from_json,
    document_to_json,
    matrix_to_json,
    parse_poly_expression,
    poly_to_json,
    scalar_to_json,
)


def _load_matrix(args):
    if args.input:
        text = Path(args.input).read_text(encoding="utf-8")
    else:
        text = sys.stdin.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"input is not valid JSON: {exc}") from None
    return document_from_json(data).matrix


def _parse_poly_arg(text: str) -> Polynomial:
    """Either a polynomial expression ("(X-1)^2") or a comma-separated
    ascending coefficient list ("1,0,-2")."""
    if any(ch in text for ch in "X()^"):
        return parse_poly_expression(text)
    coeffs = tuple(rational_from_string(part.strip()) for part in text.split(","))
    return Polynomial(coeffs)


def _finish(payload, report) -> int:
    if report is not None:
        payload["report"] = report.to_json()
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if report is not None and not report.passed:
        return 4
    return 0


def _cmd_sn(args) -> int:
    M = _load_matrix(args)
    sn = sn_decompose(M)
    payload = {
        "semisimple": matrix_to_json(sn.semisimple),
        "nilpotent": matrix_to_json(sn.nilpotent),
        "s_poly": poly_to_json(sn.s_poly),
        "n_poly": poly_to_json(sn.n_poly),
        "min_poly": poly_to_json(sn.system.min_poly),
    }
    return _finish(payload, verify_sn(M, sn) if args.check else None)


def _cmd_fine(args) -> int:
    M = _load_matrix(args)
    fd = fine_decompose(M)
    payload = {
        "components": [
            {
                "factor": poly_to_json(c.factor),
                "multiplicity": c.multiplicity,
                "semisimple": matrix_to_json(c.semisimple),
                "nilpotent": matrix_to_json(c.nilpotent),
            }
            for c in fd.components
        ],
        "zero_index": fd.zero_index,
    }
    return _finish(payload, verify_fine(M, fd) if args.check else None)


def _cmd_covariants(args) -> int:
    M = _load_matrix(args)
    system = system_of(M)
    projectors = materialize_projectors(system, M)
    payload = {
        "min_poly": poly_to_json(system.min_poly),
        "factors": [
            {
                "factor": poly_to_json(factor),
                "multiplicity": mult,
                "e_poly": poly_to_json(system.e_polys[i]),
                "s_poly": poly_to_json(system.s_polys[i]),
                "n_poly": poly_to_json(system.n_polys[i]),
                "projector": matrix_to_json(projectors[i]),
            }
            for i, (factor, mult) in enumerate(system.factored.factors)
        ],
    }
    return _finish(payload, verify_system(system, M) if args.check else None)


def _cmd_unbreakable(args) -> int:
    M = _load_matrix(args)
    components = unbreakable_components(M)
    payload = {"components": [matrix_to_json(c) for c in components]}
    return _finish(payload, verify_unbreakable(M, components) if args.check else None)


def _cmd_mjc(args) -> int:
    M = _load_matrix(args)
    jc = multiplicative_jc(M)
    payload = {
        "semisimple": matrix_to_json(jc.semisimple),
        "unipotent": matrix_to_json(jc.unipotent),
    }
    return _finish(payload, verify_mjc(M, jc) if args.check else None)


def _cmd_cmjc(args) -> int:
    M = _load_matrix(args)
    dsu = complete_mjc(M)
    payload = {
        "delta": matrix_to_json(dsu.delta),
        "sigma": matrix_to_json(dsu.sigma),
        "unipotent": matrix_to_json(dsu.unipotent),
        "radicands": list(dsu.radicands),
    }
    return _finish(payload, verify_cmjc(M, dsu) if args.check else None)


def _cmd_svd(args) -> int:
    A = _load_matrix(args)
    result = svd(A)
    payload = {
        "terms": [
            {"sigma": scalar_to_json(t.sigma), "matrix": matrix_to_json(t.matrix)}
            for t in result.terms
        ],
        "radicands": list(result.radicands),
    }
    return _finish(payload, verify_svd_system(A, result) if args.check else None)


def _cmd_apply(args) -> int:
    f = _parse_poly_arg(args.poly)
    M = _load_matrix(args)
    result = schwerdtfeger_eval(f, M)
    payload = {
        "value": matrix_to_json(result.value),
        "semisimple": matrix_to_json(result.semisimple_part),
        "nilpotent": matrix_to_json(result.nilpotent_part),
        "classes": [
            {"image": poly_to_json(c.image), "indices": list(c.indices)}
            for c in result.classes
        ],
    }
    return _finish(payload, verify_matfun(f, M, result) if args.check else None)


def _cmd_gen(args) -> int:
    seed = args.seed
    if args.minpoly:
        gm = matrix_from_min_poly(parse_poly_expression(args.minpoly), seed)
    elif args.blocks:
        polys = [parse_poly_expression(s) for s in args.blocks.split(";") if s.strip()]
        gm = blocks_matrix(polys, seed)
    elif args.family == "invertible-quadratic":
        gm = random_invertible_quadratic(seed, args.size or 5)
    elif args.family == "gram":
        gm = random_gram_friendly(seed, args.size or 4)
    elif args.family == "normal":
        case = random_normal_matrix(seed, args.size or 5)
        gm = GeneratedMatrix(matrix=case.matrix, min_poly=None, label=case.label)
    else:
        gm = random_matrix(seed, args.size or 6)
    doc = MatrixDocument(
        matrix=gm.matrix, label=gm.label, seed=seed, min_poly=gm.min_poly
    )
    json.dump(document_to_json(doc), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_selftest(args) -> int:
    from mindec.selftest import run_all

    results = run_all(quick=args.quick)
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        print(f"[{tag}] criterion {r.index}: {r.name} ({r.detail})", file=sys.stderr)
    payload = {
        "subject": "selftest",
        "pass": all(r.passed for r in results),
        "criteria": [
            {
                "index": r.index,
                "name": r.name,
                "pass": r.passed,
                "detail": r.detail,
                "seconds": round(r.seconds, 3),
            }
            for r in results
        ],
    }
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if payload["pass"] else 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mindec",
        description="Exact matrix decompositions through minimal-polynomial covariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    matrix_in = argparse.ArgumentParser(add_help=False)
    matrix_in.add_argument("--input", help="matrix JSON file (default: standard input)")
    matrix_in.add_argument(
        "--check", action="store_true", help="append a verification report"
    )

    for name, handler, desc in (
        ("sn", _cmd_sn, "additive decomposition M = S + N"),
        ("fine", _cmd_fine, "fine decomposition, one pair per irreducible factor"),
        ("covariants", _cmd_covariants, "covariant system of the minimal polynomial"),
        ("unbreakable", _cmd_unbreakable, "unbreakable semisimple components"),
        ("mjc", _cmd_mjc, "multiplicative decomposition M = S U"),
        ("cmjc", _cmd_cmjc, "complete multiplicative decomposition M = Delta Sigma U"),
        ("svd", _cmd_svd, "exact singular value system"),
    ):
        p = sub.add_parser(name, parents=[matrix_in], help=desc)
        p.set_defaults(handler=handler)

    p = sub.add_parser(
        "apply", parents=[matrix_in], help="evaluate a polynomial at the matrix"
    )
    p.add_argument(
        "--poly",
        required=True,
        help='polynomial: expression like "(X-1)^2" or ascending coefficients "1,0,-2"',
    )
    p.set_defaults(handler=_cmd_apply)

    p = sub.add_parser("gen", help="emit a seeded test matrix document")
    p.add_argument("--seed", required=True, help="seed string; same seed, same matrix")
    p.add_argument("--minpoly", help="build a matrix with exactly this minimal polynomial")
    p.add_argument(
        "--blocks", help='semicolon-separated companion block polynomials, e.g. "(X-1)^2;X^2+1"'
    )
    p.add_argument(
        "--family",
        choices=("general", "invertible-quadratic", "gram", "normal"),
        default="general",
        help="random family when neither --minpoly nor --blocks is given",
    )
    p.add_argument("--size", type=int, help="upper bound on the matrix size")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("selftest", help="run the full verification suite")
    p.add_argument("--quick", action="store_true", help="reduced case counts, < 10 s")
    p.set_defaults(handler=_cmd_selftest)
    return parser


def _fail(exc: BaseException, code: int) -> int:
    json.dump({"error": type(exc).__name__, "message": str(exc)}, sys.stderr)
    sys.stderr.write("\n")
    return code


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except FormatError as exc:
        return _fail(exc, 2)
    except MindecError as exc:
        return _fail(exc, 3)
    except (ValueError, OSError) as exc:
        return _fail(exc, 2)
    except RuntimeError as exc:
        return _fail(exc, 4)


if __name__ == "__main__":
    sys.exit(main())
