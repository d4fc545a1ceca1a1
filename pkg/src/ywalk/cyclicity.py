"""Root collections, tensor-product cyclicity verdicts, and ordered products.

From completed walks this layer collects, per (source weight b, acting
node c), the symbolic roots of every step polynomial: the T set.  Each
root is affine with slope 1/d_c, so the single condition "spectral
difference never lands one past a root" reduces to a finite set of
forbidden rational differences, the S set

    S(b, c) = { d_c * (1 + intercept) : a/d_c + intercept in T(b, c) }.

An ordered tensor product of fundamental modules is certified highest
weight when no ordered pair (i < j) of factors has difference
a_j - a_i in S(b_i, b_j), and certified irreducible when the same holds
for all ordered pairs.  These are sufficient conditions: a failed check
means "not certified", nothing stronger.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exact import GaussianRational, roots_affine_in_param
from .rootsystem import CartanData, weyl_dim
from .walk import WalkReport

__all__ = [
    "TSet",
    "SSet",
    "TensorFactor",
    "Violation",
    "CyclicityReport",
    "WeylModuleSpec",
    "DimensionReport",
    "compute_t_sets",
    "compute_s_sets",
    "check_cyclicity",
    "build_ordered_product",
    "dimension_bound",
    "q_exponent_image",
    "MODE_HIGHEST_WEIGHT",
    "MODE_IRREDUCIBLE",
]

MODE_HIGHEST_WEIGHT = "highest-weight"
MODE_IRREDUCIBLE = "irreducible"

_MODE_ALIASES = {
    "hw": MODE_HIGHEST_WEIGHT,
    "highest-weight": MODE_HIGHEST_WEIGHT,
    "irr": MODE_IRREDUCIBLE,
    "irreducible": MODE_IRREDUCIBLE,
}


@dataclass(frozen=True)
class TSet:
    """Symbolic roots gathered from the walk of omega_b at acting node c."""

    b: int
    c: int
    roots: tuple[tuple[Fraction, Fraction], ...]  # (slope, intercept), sorted


@dataclass(frozen=True)
class SSet:
    """Forbidden spectral differences for the factor pair (b, c)."""

    b: int
    c: int
    values: tuple[Fraction, ...]  # sorted, duplicates collapsed


@dataclass(frozen=True)
class TensorFactor:
    """One fundamental factor: node label and exact spectral parameter."""

    node: int
    param: GaussianRational


@dataclass(frozen=True)
class Violation:
    """One ordered pair whose difference hits a forbidden value."""

    i: int  # 1-based factor positions
    j: int
    difference: GaussianRational
    s_value: Fraction


@dataclass(frozen=True)
class CyclicityReport:
    mode: str
    certified: bool
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class WeylModuleSpec:
    """An ordered tensor product realizing a pair of root multisets."""

    pi1_roots: tuple[GaussianRational, ...]
    pi2_roots: tuple[GaussianRational, ...]
    factors: tuple[TensorFactor, ...]
    weight: tuple[int, int]
    report: CyclicityReport


@dataclass(frozen=True)
class DimensionReport:
    weight: tuple[int, ...]
    fund_dims: tuple[int, ...]
    bound: int
    reference_fund_dims: tuple[int, ...]


def compute_t_sets(reports: Iterable[WalkReport]) -> list[TSet]:
    """Collect, for every (source fundamental, acting node) pair, the union
    of step-polynomial roots across the walk, deduplicated.

    Every root must have slope 1/d_c; SymbolicRootsUnavailable propagates
    from the root extraction.
    """
    reports = list(reports)
    if not reports:
        return []
    cartan = reports[0].cartan
    out: list[TSet] = []
    for rep in reports:
        for c in range(1, cartan.rank + 1):
            collected: set[tuple[Fraction, Fraction]] = set()
            for rec in rep.rows():
                if rec.node != c:
                    continue
                for slope, intercept in roots_affine_in_param(rec.poly):
                    if slope != Fraction(1, cartan.di(c)):
                        raise ValueError(
                            f"root slope {slope} at node {c} differs from "
                            f"1/d_{c} = 1/{cartan.di(c)}"
                        )
                    collected.add((slope, intercept))
            out.append(TSet(b=rep.fundamental, c=c, roots=tuple(sorted(collected))))
    return out


def compute_s_sets(t_sets: Iterable[TSet], cartan: CartanData) -> list[SSet]:
    """Forbidden differences d_c*(1+intercept) per (b, c) pair."""
    out = []
    for t in t_sets:
        d = cartan.di(t.c)
        values = set()
        for slope, intercept in t.roots:
            if slope != Fraction(1, d):
                raise ValueError(
                    f"root slope {slope} at node {t.c} differs from 1/{d}"
                )
            values.add(d * (1 + intercept))
        out.append(SSet(b=t.b, c=t.c, values=tuple(sorted(values))))
    return out


def _as_sset_map(s_sets) -> Mapping[tuple[int, int], SSet]:
    if isinstance(s_sets, Mapping):
        return s_sets
    return {(s.b, s.c): s for s in s_sets}


def check_cyclicity(
    factors: Sequence[TensorFactor], s_sets, mode: str
) -> CyclicityReport:
    """Test the ordered product against the forbidden-difference sets.

    Highest-weight mode checks ordered pairs i < j; irreducible mode checks
    all ordered pairs i != j.  A difference with nonzero imaginary part
    never matches (the sets are rational).
    """
    canonical = _MODE_ALIASES.get(mode)
    if canonical is None:
        raise ValueError(f"unknown mode {mode!r}")
    smap = _as_sset_map(s_sets)
    violations: list[Violation] = []
    n = len(factors)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            if canonical == MODE_HIGHEST_WEIGHT and not i < j:
                continue
            fi, fj = factors[i - 1], factors[j - 1]
            key = (fi.node, fj.node)
            if key not in smap:
                raise ValueError(f"no S set for node pair {key}")
            diff = fj.param - fi.param
            if diff.is_real and diff.re in smap[key].values:
                violations.append(
                    Violation(i=i, j=j, difference=diff, s_value=diff.re)
                )
    return CyclicityReport(
        mode=canonical, certified=not violations, violations=tuple(violations)
    )


def build_ordered_product(
    roots1: Sequence[GaussianRational],
    roots2: Sequence[GaussianRational],
    s_sets,
) -> WeylModuleSpec:
    """Order the combined root multiset by non-increasing real part and
    record the highest-weight verdict of the resulting product.

    Ties break by imaginary part (descending), then node (ascending), then
    input position; the result is independent of input permutation.
    """
    factors = [TensorFactor(1, r) for r in roots1] + [
        TensorFactor(2, r) for r in roots2
    ]
    factors.sort(key=lambda f: (-f.param.re, -f.param.im, f.node))
    report = check_cyclicity(factors, s_sets, MODE_HIGHEST_WEIGHT)
    return WeylModuleSpec(
        pi1_roots=tuple(roots1),
        pi2_roots=tuple(roots2),
        factors=tuple(factors),
        weight=(len(roots1), len(roots2)),
        report=report,
    )


def dimension_bound(
    weight: Sequence[int], fund_dims: Sequence[int], cartan: CartanData
) -> DimensionReport:
    """Product bound prod_i D_i^{m_i} for the module with weight
    (m_1..m_l), with the classical Weyl-formula fundamental dimensions
    reported alongside for reference."""
    lam = tuple(int(x) for x in weight)
    dims = tuple(int(x) for x in fund_dims)
    if len(lam) != cartan.rank or len(dims) != cartan.rank:
        raise ValueError("weight and dimension tuples must match the rank")
    if any(x < 0 for x in lam):
        raise ValueError("weight must be dominant")
    if any(x <= 0 for x in dims):
        raise ValueError("fundamental dimensions must be positive")
    bound = 1
    for d, m in zip(dims, lam):
        bound *= d**m
    reference = tuple(
        weyl_dim(cartan, cartan.fundamental(i)) for i in range(1, cartan.rank + 1)
    )
    return DimensionReport(
        weight=lam, fund_dims=dims, bound=bound, reference_fund_dims=reference
    )


def q_exponent_image(s: SSet) -> tuple[Fraction, ...]:
    """Exponents of the multiplicative image s -> q^{2s} of an S set."""
    return tuple(sorted(2 * v for v in s.values))
