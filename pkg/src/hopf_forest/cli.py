"""Command-line interface: ``hopf-forest <verb> ...``.

Exit status is 0 on success, 1 when a verification finds a counterexample and
2 on usage errors (bad flags, unparsable objects, degree above the cap).
Verification verbs end with ``RESULT pass|fail checked=<count>``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from hopf_forest import config
from hopf_forest.algebras import ALGEBRA_NAMES, HopfAlgebra, get_algebra
from hopf_forest.combinatorics import KINDS, parse_heap, parse_ordered, parse_pbt, parse_perm, phi, phi_inv, psi, psi_inv
from hopf_forest.errors import HopfForestError
from hopf_forest.isomorphisms import freeness_report, get_iso, triangularity_certificate, verify_hopf_morphism
from hopf_forest.combinatorics import enumerate_objects
from hopf_forest.lincomb import LinComb
from hopf_forest.machinery import antipode, coradical_level, eulerian, is_primitive
from hopf_forest.verification import verify_axioms

DEFAULT_MAX_DEGREE = 4


class UsageError(Exception):
    pass


def _algebra(args: argparse.Namespace) -> HopfAlgebra:
    return get_algebra(args.algebra, args.alphabet)


def _element(alg: HopfAlgebra, text: str, as_json: bool) -> LinComb:
    if not as_json:
        return alg.element(alg.parse(text))
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON input: {exc}") from None
    return LinComb.from_json(data, alg.parse)


def _emit(args: argparse.Namespace, text: str, payload: Any) -> None:
    body = json.dumps(payload, indent=2, ensure_ascii=False) if args.format == "json" else text
    if args.output:
        Path(args.output).write_text(body + "\n")
    else:
        print(body)


def _emit_lincomb(args: argparse.Namespace, lc: LinComb) -> None:
    _emit(args, str(lc), lc.to_json())


def cmd_enumerate(args: argparse.Namespace) -> int:
    items = enumerate_objects(args.kind, args.degree)
    _emit(args, "\n".join(map(str, items)), [str(x) for x in items])
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    a = _element(alg, args.left, args.json)
    b = _element(alg, args.right, args.json)
    _emit_lincomb(args, alg.multiply(a, b))
    return 0


def cmd_coproduct(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    _emit_lincomb(args, alg.coproduct(_element(alg, args.element, args.json)))
    return 0


def cmd_antipode(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    _emit_lincomb(args, antipode(alg, _element(alg, args.element, args.json)))
    return 0


def cmd_eulerian(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    _emit_lincomb(args, eulerian(alg, _element(alg, args.element, args.json)))
    return 0


def cmd_coradical_level(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    level = coradical_level(alg, _element(alg, args.element, args.json))
    _emit(args, str(level), {"level": level})
    return 0


def cmd_is_primitive(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    result = is_primitive(alg, _element(alg, args.element, args.json))
    _emit(args, "true" if result else "false", {"primitive": result})
    return 0


def cmd_bij(args: argparse.Namespace) -> int:
    table = {
        ("psi", False): (parse_pbt, psi),
        ("psi", True): (parse_ordered, psi_inv),
        ("phi", False): (parse_perm, phi),
        ("phi", True): (parse_heap, phi_inv),
    }
    parse, f = table[(args.which, args.inverse)]
    out = str(f(parse(args.object)))
    _emit(args, out, {"input": args.object, "output": out})
    return 0


def _result_line(passed: bool, checked: int) -> str:
    return f"RESULT {'pass' if passed else 'fail'} checked={checked}"


def cmd_verify_axioms(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    report = verify_axioms(alg, args.max_degree)
    lines = [f"algebra {alg.name} max-degree {args.max_degree}"]
    lines += [f"  {name}: {count} checked" for name, count in sorted(report.counts.items())]
    lines += [f"  FAIL {f}" for f in report.failures]
    payload = {"algebra": alg.name, "max_degree": args.max_degree, "counts": dict(report.counts),
               "failures": report.failures, "passed": report.passed}
    _emit(args, "\n".join(lines), payload)
    print(_result_line(report.passed, report.checked))
    return 0 if report.passed else 1


def cmd_verify_iso(args: argparse.Namespace) -> int:
    iso = get_iso(args.which)
    morph = verify_hopf_morphism(iso, args.max_degree)
    certs = [triangularity_certificate(iso, d) for d in range(1, args.max_degree + 1)]
    free = freeness_report(iso.target.name, args.max_degree)
    checked = morph.checked + len(certs) + len(free.rows)
    passed = morph.passed and all(c.unitriangular and all(c.leading_flags) for c in certs) and free.passed
    lines = [f"{iso.name}: {iso.source.name} -> {iso.target.name}, max-degree {args.max_degree}",
             f"  hopf-morphism: {morph.checked} checks, {len(morph.failures)} failures"]
    lines += [f"  FAIL {f}" for f in morph.failures[:20]]
    for c in certs:
        lines.append(f"  degree {c.degree}: {c.dimension}x{c.dimension} unitriangular={str(c.unitriangular).lower()}")
    for r in free.rows:
        lines.append(f"  dim {r.degree}: target={r.target_dim} words={r.word_count} "
                     f"generators={r.generator_dims}")
    _emit(args, "\n".join(lines), {"iso": iso.name, "passed": passed,
                                   "morphism_failures": morph.failures,
                                   "freeness": free.to_json()})
    if args.emit:
        data = {"iso": iso.name, "max_degree": args.max_degree,
                "unitriangular": all(c.unitriangular for c in certs),
                "certificates": [c.to_json() for c in certs]}
        Path(args.emit).write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    print(_result_line(passed, checked))
    return 0 if passed else 1


def cmd_export(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    layers = [alg.basis(d) for d in range(args.max_degree + 1)]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["degA", "basisA", "degB", "basisB", "basisOut", "coeff"])
    for da in range(args.max_degree + 1):
        for db in range(args.max_degree + 1 - da):
            for a in layers[da]:
                for b in layers[db]:
                    for out, c in alg.product_basis(a, b).sorted_items():
                        writer.writerow([da, str(a), db, str(b), str(out), str(c)])
    text = buf.getvalue().rstrip("\n")
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopf-forest", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key=value file with enumeration caps")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write the result to this file")
        return p

    def algebra_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--algebra", required=True, choices=ALGEBRA_NAMES)
        p.add_argument("--alphabet", choices=("perm", "pbt"), default="perm",
                       help="letters of SH/TENSOR (irreducible permutations or binary trees)")

    p = add("enumerate", cmd_enumerate, "list all objects of a kind in one degree")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--degree", required=True, type=int)

    p = add("product", cmd_product, "multiply two elements")
    algebra_flags(p)
    p.add_argument("--json", action="store_true", help="operands are LinComb JSON (or @file)")
    p.add_argument("left")
    p.add_argument("right")

    for name, func, help in [
        ("coproduct", cmd_coproduct, "coproduct of an element"),
        ("antipode", cmd_antipode, "antipode of an element"),
        ("eulerian", cmd_eulerian, "first Eulerian idempotent of an element"),
        ("coradical-level", cmd_coradical_level, "coradical filtration level of an element"),
        ("is-primitive", cmd_is_primitive, "test whether an element is primitive"),
    ]:
        p = add(name, func, help)
        algebra_flags(p)
        p.add_argument("--json", action="store_true", help="operand is LinComb JSON (or @file)")
        p.add_argument("element")

    p = add("bij", cmd_bij, "apply psi or phi (or an inverse)")
    p.add_argument("--which", required=True, choices=("psi", "phi"))
    p.add_argument("--inverse", action="store_true")
    p.add_argument("object")

    p = add("verify-axioms", cmd_verify_axioms, "exhaustive bialgebra axiom check")
    algebra_flags(p)
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)

    p = add("verify-iso", cmd_verify_iso, "verify PSI or PHI degree by degree")
    p.add_argument("--which", required=True, choices=("psi", "phi"))
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--emit", help="write triangularity certificates as JSON to this file")

    p = add("export-structure-constants", cmd_export, "CSV of product structure constants")
    algebra_flags(p)
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.config:
            config.set_limits(config.load_limits(args.config))
        return args.func(args)
    except (HopfForestError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
