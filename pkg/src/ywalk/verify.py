"""Self-check suites surfaced through the ``verify`` CLI subcommand.

Three suites: ``sl2`` exercises the explicit rank-1 modules (defining
relations, symmetrized insertions, extremal series); ``walk`` replays the
rank-2 flagship walks with their per-step crosschecks and pins the
intermediate eigenvalues they must pass through; ``tables`` freezes the
expected root and difference sets.  ``all`` runs everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclicity import compute_s_sets, compute_t_sets, q_exponent_image
from .exact import ParamPoly, ParamSeries, series_exp, series_log, series_rescale
from .rootsystem import builtin_cartan, path_exponents, weyl_dim, weyl_longest
from .sl2 import (
    EvalModule,
    GeneratorLabel,
    check_relations,
    extremal_series_check,
    symmetrized_insertion_check,
)
from .walk import apply_step, extract_step_poly, init_walk, run_walk

__all__ = ["CheckResult", "SUITES", "run_suite"]

SAMPLE_A = (Fraction(0), Fraction(1), Fraction(-2), Fraction(5, 3))

G2_WORD = (1, 2, 1, 2, 1, 2)

EXPECTED_T = {
    (1, 1): ("1/3*a", "1/3*a + 1/3", "1/3*a + 2/3", "1/3*a + 1"),
    (1, 2): ("a - 1/2", "a + 1/2", "a + 3/2", "a + 5/2", "a + 7/2"),
    (2, 1): ("1/3*a + 1/2", "1/3*a + 7/6"),
    (2, 2): ("a", "a + 2", "a + 3", "a + 5"),
}
EXPECTED_S = {
    (1, 1): (Fraction(3), Fraction(4), Fraction(5), Fraction(6)),
    (1, 2): (
        Fraction(1, 2),
        Fraction(3, 2),
        Fraction(5, 2),
        Fraction(7, 2),
        Fraction(9, 2),
    ),
    (2, 1): (Fraction(9, 2), Fraction(13, 2)),
    (2, 2): (Fraction(1), Fraction(3), Fraction(4), Fraction(6)),
}
EXPECTED_Q_DIAGONAL = {
    (1, 1): (Fraction(6), Fraction(8), Fraction(10), Fraction(12)),
    (2, 2): (Fraction(2), Fraction(6), Fraction(8), Fraction(12)),
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _check(results: list[CheckResult], name: str, fn):
    try:
        fn()
        results.append(CheckResult(name, True))
    except AssertionError as exc:
        results.append(CheckResult(name, False, str(exc)))


def _suite_sl2() -> list[CheckResult]:
    results: list[CheckResult] = []
    for m in range(1, 5):
        for a in SAMPLE_A:
            name = f"relations m={m} a={a}"

            def run(m=m, a=a):
                report = check_relations(m, a, max_level=3)
                assert report.ok, "; ".join(report.failures[:3])

            _check(results, name, run)
    for m in range(1, 5):
        for a in SAMPLE_A:
            for k in range(5):
                name = f"symmetrized insertion m={m} a={a} k={k}"

                def run(m=m, a=a, k=k):
                    report = symmetrized_insertion_check(m, a, k)
                    assert report.ok, "; ".join(report.failures)

                _check(results, name, run)
    for m in range(1, 5):
        for a in SAMPLE_A:
            name = f"extremal series m={m} a={a}"

            def run(m=m, a=a):
                report = extremal_series_check(m, a, order=8)
                assert report.ok, "; ".join(report.failures)

            _check(results, name, run)
    return results


def _suite_walk() -> list[CheckResult]:
    results: list[CheckResult] = []
    g2 = builtin_cartan("g2")

    def crosschecked(weight):
        report = run_walk(g2, G2_WORD, weight, 8)
        assert all(r.crosscheck_ok for r in report.rows()), "crosscheck failed"
        assert len(report.rows()) == 5, "expected 5 table rows"

    _check(results, "walk weight 1 crosschecks", lambda: crosschecked(1))
    _check(results, "walk weight 2 crosschecks", lambda: crosschecked(2))

    def anchors():
        state = init_walk(g2, 1, 8)
        for node, m in ((2, 0), (1, 1), (2, 3)):
            _, sums = extract_step_poly(state, node, m)
            apply_step(state, node, m, sums)
        assert state.coefficient(1, 1) == ParamPoly((0, 6)), "H_{1,1} != 6a"
        assert state.coefficient(1, 2) == ParamPoly((6, 0, 6)), "H_{1,2} != 6a^2+6"
        rescaled = series_exp(series_rescale(state.series[0], 3))
        assert rescaled.coeff(2) == ParamPoly((2, Fraction(2, 3))), (
            "rescaled h_1 coefficient != 2a/3 + 2"
        )
        _, sums = extract_step_poly(state, 1, 2)
        apply_step(state, 1, 2, sums)
        h2 = series_exp(state.series[1])
        assert h2.coeff(2) == ParamPoly((Fraction(21, 2), 3)), (
            "h_{2,1} != 3a + 21/2"
        )

    _check(results, "intermediate eigenvalue anchors", anchors)

    def rank1_against_matrices():
        a1 = builtin_cartan("a1")

        def matrix_log_series(mod, s):
            coeffs = [Fraction(1)] + [
                mod.matrix(GeneratorLabel("h", k))[s][s] for k in range(8)
            ]
            return series_log(ParamSeries(coeffs, order=8))

        for a_val in SAMPLE_A:
            state = init_walk(a1, 1, 8)
            mod = EvalModule(1, a_val, max_level=8)
            assert state.series[0].evaluate_param(a_val) == matrix_log_series(
                mod, 1
            ), "top-vector series disagrees with the matrix module"
            _, sums = extract_step_poly(state, 1, 1)
            apply_step(state, 1, 1, sums)
            assert state.series[0].evaluate_param(a_val) == matrix_log_series(
                mod, 0
            ), "bottom-vector series disagrees with the matrix module"

    _check(results, "rank-1 walk matches matrix modules", rank1_against_matrices)
    return results


def _suite_tables() -> list[CheckResult]:
    results: list[CheckResult] = []
    g2 = builtin_cartan("g2")

    def tables():
        reports = [run_walk(g2, G2_WORD, i, 8) for i in (1, 2)]
        t_sets = compute_t_sets(reports)
        s_sets = compute_s_sets(t_sets, g2)
        for t in t_sets:
            shown = tuple(str(ParamPoly((beta, alpha))) for alpha, beta in t.roots)
            assert shown == EXPECTED_T[(t.b, t.c)], f"T({t.b},{t.c}) = {shown}"
        for s in s_sets:
            assert s.values == EXPECTED_S[(s.b, s.c)], f"S({s.b},{s.c}) = {s.values}"
            assert all(v > 0 for v in s.values), "S values must be positive"
        for s in s_sets:
            if s.b == s.c:
                assert q_exponent_image(s) == EXPECTED_Q_DIAGONAL[(s.b, s.c)], (
                    f"q image of S({s.b},{s.b}) unexpected"
                )

    _check(results, "flagship T/S tables and q-images", tables)

    def root_data():
        order, _, word = weyl_longest(g2)
        assert order == 12 and word == G2_WORD, "longest-element data changed"
        assert path_exponents(g2, G2_WORD, 1).exponents == (1, 3, 2, 3, 1, 0)
        assert path_exponents(g2, G2_WORD, 2).exponents == (0, 1, 1, 2, 1, 1)
        assert weyl_dim(g2, (1, 0)) == 14 and weyl_dim(g2, (0, 1)) == 7

    _check(results, "root-system fixtures", root_data)
    return results


SUITES = {
    "sl2": _suite_sl2,
    "walk": _suite_walk,
    "tables": _suite_tables,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        out: list[CheckResult] = []
        for key in ("sl2", "walk", "tables"):
            out.extend(SUITES[key]())
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name]()
