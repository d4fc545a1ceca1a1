"""Command-line surface: walks, tables, cyclicity checks, ordered products.

Every subcommand shares the same option set (algebra, reduced word,
truncation order, output format) and emits one envelope with stable field
names; ``--format json`` prints it verbatim, ``--format text`` renders the
same data for reading.  Exit codes: 0 success, 1 condition not certified,
2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .cyclicity import (
    TensorFactor,
    build_ordered_product,
    check_cyclicity,
    compute_s_sets,
    compute_t_sets,
    dimension_bound,
)
from .exact import (
    GaussianRational,
    ParamPoly,
    SymbolicRootsUnavailable,
    roots_affine_in_param,
)
from .rootsystem import (
    BUILTIN_ALGEBRAS,
    CartanData,
    InvalidCartanError,
    builtin_cartan,
    is_reduced_word_of_longest,
    path_exponents,
    validate_cartan,
    weyl_longest,
)
from .verify import run_suite
from .walk import DEFAULT_ORDER, CrosscheckError, run_walk

__all__ = ["main", "parse_factors", "parse_gaussian"]

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_RATIONAL = r"-?\d+(?:/\d+)?"
_GAUSSIAN_RE = re.compile(rf"^({_RATIONAL})(?:([+-]\d+(?:/\d+)?)i)?$")

# the flagship table word; outputs for anything else are experimental
_CERTIFIED = {("g2", (1, 2, 1, 2, 1, 2)), ("a1", (1,))}


class CliInputError(Exception):
    """Malformed or out-of-range user input (exit code 2)."""


class _NotCertified(Exception):
    """Command-level condition that maps to exit code 1."""


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``[-]p[/q][(+|-)r[/s]i]`` into an exact Gaussian rational."""
    match = _GAUSSIAN_RE.match(text.strip())
    if not match:
        raise CliInputError(f"malformed rational parameter {text!r}")
    re_part, im_part = match.groups()
    return GaussianRational(
        Fraction(re_part), Fraction(im_part) if im_part else Fraction(0)
    )


def parse_factors(spec: str, rank: int) -> list[TensorFactor]:
    """Parse comma-separated ``node:param`` tokens; whitespace is ignored."""
    factors = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            raise CliInputError("empty factor token")
        node_text, _, param_text = token.partition(":")
        if not param_text:
            raise CliInputError(f"factor {token!r} is not of the form node:param")
        try:
            node = int(node_text)
        except ValueError:
            raise CliInputError(f"bad node index {node_text!r}") from None
        if not 1 <= node <= rank:
            raise CliInputError(f"node {node} out of range 1..{rank}")
        factors.append(TensorFactor(node, parse_gaussian(param_text)))
    return factors


def _parse_root_list(spec: str) -> list[GaussianRational]:
    spec = spec.strip()
    if not spec:
        return []
    return [parse_gaussian(token) for token in spec.split(",")]


def _parse_int_list(spec: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in spec.split(","))
    except ValueError:
        raise CliInputError(f"bad {what} list {spec!r}") from None


def _load_custom_algebra(path: Path) -> tuple[CartanData, tuple[int, ...] | None]:
    """Declarative algebra file: ``row`` lines for the Cartan matrix, one
    ``diag`` line for the symmetrizers, optional ``word`` line."""
    rows: list[list[int]] = []
    diag: list[int] | None = None
    word: tuple[int, ...] | None = None
    try:
        text = path.read_text()
    except OSError as exc:
        raise CliInputError(f"cannot read algebra file: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise CliInputError(f"{path}:{lineno}: non-integer entry") from None
        if keyword == "row":
            rows.append(values)
        elif keyword == "diag":
            diag = values
        elif keyword == "word":
            word = tuple(values)
        else:
            raise CliInputError(f"{path}:{lineno}: unknown keyword {keyword!r}")
    if not rows or diag is None:
        raise CliInputError(f"{path}: need 'row' lines and one 'diag' line")
    try:
        cartan = validate_cartan(rows, diag)
    except InvalidCartanError as exc:
        raise CliInputError(f"{path}: {exc}") from None
    return cartan, word


def _load_algebra(args) -> tuple[str, CartanData, tuple[int, ...], bool]:
    """Resolve --algebra/--word into (label, cartan, word, experimental)."""
    name = args.algebra.lower()
    file_word: tuple[int, ...] | None = None
    if name in BUILTIN_ALGEBRAS:
        label = name
        cartan = builtin_cartan(name)
    else:
        path = Path(args.algebra)
        if not path.exists():
            raise CliInputError(
                f"unknown algebra {args.algebra!r} (not builtin, not a file)"
            )
        cartan, file_word = _load_custom_algebra(path)
        label = f"custom:{path.name}"
    if args.word:
        word = _parse_int_list(args.word, "word")
    elif file_word is not None:
        word = file_word
    else:
        _, _, word = weyl_longest(cartan)
    if not is_reduced_word_of_longest(cartan, word):
        raise CliInputError(
            f"word {word} is not a reduced word of the longest element"
        )
    experimental = (label, word) not in _CERTIFIED
    return label, cartan, word, experimental


def _load_config(args) -> dict:
    if not args.config:
        return {}
    try:
        data = json.loads(Path(args.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliInputError(f"cannot read config: {exc}") from None
    if not isinstance(data, dict):
        raise CliInputError("config must be a JSON object")
    return data


def _fund_dims(args, cartan: CartanData) -> tuple[int, ...] | None:
    if getattr(args, "fund_dims", None):
        dims = _parse_int_list(args.fund_dims, "fundamental-dimension")
    else:
        config = _load_config(args)
        if "fund_dims" not in config:
            return None
        dims = tuple(int(x) for x in config["fund_dims"])
    if len(dims) != cartan.rank or any(d <= 0 for d in dims):
        raise CliInputError("fund_dims must list one positive integer per node")
    return dims


def _envelope(args, label: str, experimental: bool, inputs: dict, results: dict):
    return {
        "command": args.command,
        "algebra": label,
        "engine_version": __version__,
        "order": args.order,
        "experimental": experimental,
        "inputs": inputs,
        "results": results,
    }


def _intercept_str(root: tuple[Fraction, Fraction]) -> str:
    alpha, beta = root
    return str(ParamPoly((beta, alpha)))


def _walk_rows(report, cartan: CartanData) -> list[dict]:
    rows = []
    for rec in report.rows():
        try:
            roots = [
                _intercept_str(r) for r in roots_affine_in_param(rec.poly)
            ]
        except SymbolicRootsUnavailable:
            roots = None
        rows.append(
            {
                "step": rec.step,
                "node": rec.node,
                "exponent": rec.exponent,
                "rescale": cartan.di(rec.node),
                "polynomial": str(rec.poly),
                "roots": roots,
                "crosscheck": rec.crosscheck_ok,
            }
        )
    return rows


def _sset_tables(cartan: CartanData, word, order: int):
    reports = [
        run_walk(cartan, word, i, order) for i in range(1, cartan.rank + 1)
    ]
    t_sets = compute_t_sets(reports)
    s_sets = compute_s_sets(t_sets, cartan)
    return reports, t_sets, s_sets


def _cmd_path(args) -> tuple[int, dict]:
    label, cartan, word, experimental = _load_algebra(args)
    if args.weight is not None and not 1 <= args.weight <= cartan.rank:
        raise CliInputError(f"weight {args.weight} out of range 1..{cartan.rank}")
    weights = (
        [args.weight] if args.weight is not None else list(range(1, cartan.rank + 1))
    )
    results = {
        "word": list(word),
        "paths": [
            {
                "weight": i,
                "exponents": list(path_exponents(cartan, word, i).exponents),
            }
            for i in weights
        ],
    }
    inputs = {"weight": args.weight}
    return EXIT_OK, _envelope(args, label, experimental, inputs, results)


def _cmd_walk(args) -> tuple[int, dict]:
    label, cartan, word, experimental = _load_algebra(args)
    if not 1 <= args.weight <= cartan.rank:
        raise CliInputError(f"weight {args.weight} out of range 1..{cartan.rank}")
    report = run_walk(cartan, word, args.weight, args.order)
    results = {
        "word": list(word),
        "weight": args.weight,
        "variable_note": "polynomials are in the rescaled variable u/d(node)",
        "rows": _walk_rows(report, cartan),
    }
    inputs = {"weight": args.weight}
    return EXIT_OK, _envelope(args, label, experimental, inputs, results)


def _cmd_tables(args) -> tuple[int, dict]:
    label, cartan, word, experimental = _load_algebra(args)
    try:
        _, t_sets, s_sets = _sset_tables(cartan, word, args.order)
    except SymbolicRootsUnavailable as exc:
        raise _NotCertified(f"symbolic roots unavailable: {exc}") from None
    results = {
        "word": list(word),
        "t_sets": [
            {
                "b": t.b,
                "c": t.c,
                "roots": [_intercept_str(r) for r in t.roots],
            }
            for t in t_sets
        ],
        "s_sets": [
            {"b": s.b, "c": s.c, "values": [str(v) for v in s.values]}
            for s in s_sets
        ],
    }
    return EXIT_OK, _envelope(args, label, experimental, {}, results)


def _cmd_cyclicity(args) -> tuple[int, dict]:
    label, cartan, word, experimental = _load_algebra(args)
    factors = parse_factors(args.factors, cartan.rank)
    try:
        _, _, s_sets = _sset_tables(cartan, word, args.order)
    except SymbolicRootsUnavailable as exc:
        raise _NotCertified(f"symbolic roots unavailable: {exc}") from None
    report = check_cyclicity(factors, s_sets, args.mode)
    results = {
        "mode": report.mode,
        "verdict": "certified" if report.certified else "not certified",
        "violations": [
            {
                "i": v.i,
                "j": v.j,
                "difference": str(v.difference),
                "s_value": str(v.s_value),
            }
            for v in report.violations
        ],
    }
    inputs = {
        "factors": [
            {"node": f.node, "param": str(f.param)} for f in factors
        ],
        "mode": args.mode,
    }
    code = EXIT_OK if report.certified else EXIT_NOT_CERTIFIED
    return code, _envelope(args, label, experimental, inputs, results)


def _cmd_weyl_module(args) -> tuple[int, dict]:
    label, cartan, word, experimental = _load_algebra(args)
    if cartan.rank != 2:
        raise CliInputError("weyl-module expects a rank-2 algebra")
    roots1 = _parse_root_list(args.pi1)
    roots2 = _parse_root_list(args.pi2)
    try:
        _, _, s_sets = _sset_tables(cartan, word, args.order)
    except SymbolicRootsUnavailable as exc:
        raise _NotCertified(f"symbolic roots unavailable: {exc}") from None
    spec = build_ordered_product(roots1, roots2, s_sets)
    dims = _fund_dims(args, cartan)
    dim_report = (
        dimension_bound(spec.weight, dims, cartan) if dims is not None else None
    )
    results = {
        "weight": list(spec.weight),
        "factors": [
            {"node": f.node, "param": str(f.param)} for f in spec.factors
        ],
        "verdict": "certified" if spec.report.certified else "not certified",
        "dimension_bound": dim_report.bound if dim_report else None,
        "fund_dims": list(dims) if dims else None,
        "reference_fund_dims": (
            list(dim_report.reference_fund_dims) if dim_report else None
        ),
    }
    inputs = {
        "pi1_roots": [str(r) for r in roots1],
        "pi2_roots": [str(r) for r in roots2],
    }
    code = EXIT_OK if spec.report.certified else EXIT_NOT_CERTIFIED
    return code, _envelope(args, label, experimental, inputs, results)


def _cmd_dim(args) -> tuple[int, dict]:
    label, cartan, word, experimental = _load_algebra(args)
    weight = _parse_int_list(args.weights, "weight")
    dims = _fund_dims(args, cartan)
    if dims is None:
        raise CliInputError("dim needs --fund-dims or a config with fund_dims")
    try:
        report = dimension_bound(weight, dims, cartan)
    except ValueError as exc:
        raise CliInputError(str(exc)) from None
    results = {
        "weight": list(report.weight),
        "fund_dims": list(report.fund_dims),
        "bound": report.bound,
        "reference_fund_dims": list(report.reference_fund_dims),
    }
    inputs = {"weights": args.weights}
    return EXIT_OK, _envelope(args, label, experimental, inputs, results)


def _cmd_verify(args) -> tuple[int, dict]:
    label, cartan, word, experimental = _load_algebra(args)
    try:
        checks = run_suite(args.suite)
    except KeyError as exc:
        raise CliInputError(str(exc)) from None
    results = {
        "suite": args.suite,
        "ok": all(c.ok for c in checks),
        "checks": [
            {"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks
        ],
    }
    code = EXIT_OK if results["ok"] else EXIT_INTERNAL
    return code, _envelope(args, label, experimental, {"suite": args.suite}, results)


_HANDLERS = {
    "path": _cmd_path,
    "walk": _cmd_walk,
    "tables": _cmd_tables,
    "cyclicity": _cmd_cyclicity,
    "weyl-module": _cmd_weyl_module,
    "dim": _cmd_dim,
    "verify": _cmd_verify,
}


def _render_text(env: dict) -> str:
    lines = [
        f"command: {env['command']}   algebra: {env['algebra']}   "
        f"order: {env['order']}   engine: {env['engine_version']}"
    ]
    if env["experimental"]:
        lines.append("note: experimental output (outside the certified cases)")
    results = env["results"]
    command = env["command"]
    if command == "path":
        lines.append("word: " + " ".join(str(r) for r in results["word"]))
        for entry in results["paths"]:
            exps = " ".join(str(m) for m in entry["exponents"])
            lines.append(f"weight {entry['weight']} exponents: {exps}")
    elif command == "walk":
        lines.append("word: " + " ".join(str(r) for r in results["word"]))
        lines.append(f"weight: {results['weight']}")
        lines.append(results["variable_note"])
        header = f"{'step':>4} {'node':>4} {'exp':>3} {'rescale':>7}  polynomial / roots"
        lines.append(header)
        for row in results["rows"]:
            roots = ", ".join(row["roots"]) if row["roots"] else "(unavailable)"
            check = "ok" if row["crosscheck"] else "FAILED"
            lines.append(
                f"{row['step']:>4} {row['node']:>4} {row['exponent']:>3} "
                f"{row['rescale']:>7}  {row['polynomial']}"
            )
            lines.append(f"{'':>26}roots: {roots}   crosscheck: {check}")
    elif command == "tables":
        lines.append("word: " + " ".join(str(r) for r in results["word"]))
        for t in results["t_sets"]:
            lines.append(f"T({t['b']},{t['c']}) = {{{', '.join(t['roots'])}}}")
        for s in results["s_sets"]:
            lines.append(f"S({s['b']},{s['c']}) = {{{', '.join(s['values'])}}}")
    elif command == "cyclicity":
        factors = ", ".join(
            f"{f['node']}:{f['param']}" for f in env["inputs"]["factors"]
        )
        lines.append(f"factors: {factors}")
        lines.append(f"mode: {results['mode']}")
        lines.append(f"verdict: {results['verdict']}")
        for v in results["violations"]:
            lines.append(
                f"violation: pair ({v['i']},{v['j']}) difference {v['difference']}"
                f" in S, value {v['s_value']}"
            )
    elif command == "weyl-module":
        lines.append(f"weight: {tuple(results['weight'])}")
        factors = ", ".join(
            f"{f['node']}:{f['param']}" for f in results["factors"]
        )
        lines.append(f"ordered factors: {factors}")
        lines.append(f"highest-weight verdict: {results['verdict']}")
        if results["dimension_bound"] is not None:
            lines.append(
                f"dimension bound: {results['dimension_bound']} "
                f"(fund dims {results['fund_dims']})"
            )
            lines.append(
                "reference simple-Lie fundamental dims: "
                f"{results['reference_fund_dims']}"
            )
        else:
            lines.append("dimension bound: not computed (no fund_dims supplied)")
    elif command == "dim":
        lines.append(f"weight: {tuple(results['weight'])}")
        lines.append(f"fund dims: {tuple(results['fund_dims'])}")
        lines.append(f"bound: {results['bound']}")
        lines.append(
            f"reference simple-Lie fundamental dims: {results['reference_fund_dims']}"
        )
    elif command == "verify":
        for check in results["checks"]:
            status = "PASS" if check["ok"] else "FAIL"
            detail = f"  ({check['detail']})" if check["detail"] else ""
            lines.append(f"{status} {check['name']}{detail}")
        passed = sum(1 for c in results["checks"] if c["ok"])
        lines.append(
            f"suite {results['suite']}: {passed}/{len(results['checks'])} passed"
        )
    return "\n".join(lines)


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--algebra",
        default="g2",
        help="builtin name (g2, a1, a2) or path to a declarative algebra file",
    )
    parser.add_argument(
        "--word",
        default=None,
        help="comma-separated reduced word of the longest element",
    )
    parser.add_argument(
        "--order",
        type=int,
        default=DEFAULT_ORDER,
        help="series truncation order (default 8)",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    parser.add_argument(
        "--config", default=None, help="JSON config file (fund_dims override)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ywalk",
        description="Exact engine for extremal-path associated polynomials, "
        "tensor-product cyclicity sets, and ordered Weyl-module products.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("path", help="reduced word and path exponents")
    p.add_argument("--weight", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("walk", help="per-step associated polynomials")
    p.add_argument("--weight", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("tables", help="T and S sets for all node pairs")
    _add_common(p)

    p = sub.add_parser("cyclicity", help="check an ordered tensor product")
    p.add_argument(
        "--factors", required=True, help='comma-separated node:param, e.g. "1:0,2:5/2"'
    )
    p.add_argument("--mode", choices=("hw", "irr"), default="hw")
    _add_common(p)

    p = sub.add_parser(
        "weyl-module", help="ordered product realizing two root multisets"
    )
    p.add_argument("--pi1", default="", help="comma-separated roots for node 1")
    p.add_argument("--pi2", default="", help="comma-separated roots for node 2")
    p.add_argument("--fund-dims", default=None, help="comma-separated dimensions")
    _add_common(p)

    p = sub.add_parser("dim", help="product dimension bound")
    p.add_argument("--weights", required=True, help="comma-separated m_1,..,m_l")
    p.add_argument("--fund-dims", default=None, help="comma-separated dimensions")
    _add_common(p)

    p = sub.add_parser("verify", help="run the self-check suites")
    p.add_argument("--suite", choices=("all", "sl2", "walk", "tables"), default="all")
    _add_common(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, env = _HANDLERS[args.command](args)
    except (CliInputError, InvalidCartanError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _NotCertified as exc:
        print(f"not certified: {exc}", file=sys.stderr)
        return EXIT_NOT_CERTIFIED
    except CrosscheckError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps(env, indent=2, sort_keys=True))
    else:
        print(_render_text(env))
    return code
