"""Exact symbolic arithmetic over the rationals with one formal parameter.

Scalars are :class:`fractions.Fraction`.  Polynomials in the formal
parameter ``a`` (:class:`ParamPoly`) serve as coefficients for polynomials
(:class:`UniPoly`) and truncated series (:class:`ParamSeries`) in a second
variable ``u``; series are expansions in powers of ``u^{-1}`` and every
operation is exact through the stated truncation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "ParamPoly",
    "UniPoly",
    "ParamSeries",
    "PowerSums",
    "SymbolicRootsUnavailable",
    "A",
    "series_from_poly_ratio",
    "series_log",
    "series_exp",
    "series_rescale",
    "power_sums_to_monic",
    "extend_power_sums",
    "roots_affine_in_param",
]


class SymbolicRootsUnavailable(Exception):
    """A root multiset affine in the parameter could not be recovered."""


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {value!r}")


def _frac_str(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __str__(self) -> str:
        if self.im == 0:
            return _frac_str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{_frac_str(self.re)}{sign}{_frac_str(abs(self.im))}i"


class ParamPoly:
    """Polynomial in the formal parameter ``a`` with Fraction coefficients.

    Coefficients are stored ascending in powers of ``a`` with no trailing
    zeros; the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, value) -> "ParamPoly":
        return cls((_frac(value),))

    @property
    def degree(self) -> int:
        # -1 is the zero-polynomial sentinel
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def evaluate(self, value) -> Fraction:
        x = _frac(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("ParamPoly", self.coeffs))

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "ParamPoly":
        other = _as_param_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ParamPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "ParamPoly":
        return self + (-_as_param_poly(other))

    def __rsub__(self, other) -> "ParamPoly":
        return _as_param_poly(other) + (-self)

    def __mul__(self, other) -> "ParamPoly":
        other = _as_param_poly(other)
        if not self.coeffs or not other.coeffs:
            return ParamPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return ParamPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "ParamPoly":
        s = _frac(scalar)
        return ParamPoly(c / s for c in self.coeffs)

    def __pow__(self, n: int) -> "ParamPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = ParamPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = _frac_str(mag)
            elif k == 1:
                body = "a" if mag == 1 else f"{_frac_str(mag)}*a"
            else:
                body = f"a^{k}" if mag == 1 else f"{_frac_str(mag)}*a^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"ParamPoly({self})"


def _as_param_poly(value) -> ParamPoly:
    if isinstance(value, ParamPoly):
        return value
    return ParamPoly.const(_frac(value))


#: The formal parameter itself, for building polynomials as expressions.
A = ParamPoly((0, 1))


class UniPoly:
    """Polynomial in ``u`` whose coefficients are :class:`ParamPoly` values."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_param_poly(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((ParamPoly.const(1),))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        """Monic product of ``u - r`` over the given roots."""
        out = cls.one()
        for r in roots:
            out = out * cls((-_as_param_poly(r), ParamPoly.const(1)))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ParamPoly.const(1)

    def coeff(self, k: int) -> ParamPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ParamPoly()

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [ParamPoly()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return UniPoly(out)

    def shift(self, delta) -> "UniPoly":
        """Substitute ``u -> u + delta`` for an exact rational ``delta``."""
        d = _frac(delta)
        n = self.degree
        out = [ParamPoly() for _ in range(n + 1)]
        for k, ck in enumerate(self.coeffs):
            if not ck:
                continue
            for j in range(k + 1):
                out[j] = out[j] + ck * (math.comb(k, j) * d ** (k - j))
        return UniPoly(out)

    def scale_var(self, d) -> "UniPoly":
        """Return the monic polynomial whose roots are this one's divided by d."""
        d = _frac(d)
        if d == 0:
            raise ValueError("scale factor must be nonzero")
        m = self.degree
        return UniPoly(self.coeff(k) * d ** (k - m) for k in range(m + 1))

    def specialize(self, value) -> tuple[Fraction, ...]:
        """Coefficients over the rationals after substituting the parameter."""
        return tuple(c.evaluate(value) for c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if not c:
                continue
            head = "" if k == self.degree and c == ParamPoly.const(1) else f"({c})"
            if k == 0:
                parts.append(head or "(1)")
            elif k == 1:
                parts.append(f"{head}*u" if head else "u")
            else:
                parts.append(f"{head}*u^{k}" if head else f"u^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


class ParamSeries:
    """Truncated series in ``u^{-1}`` with :class:`ParamPoly` coefficients.

    ``coeffs[k]`` multiplies ``u^{-k}``; the truncation order N is the
    largest retained index.  Binary operations on series of different
    orders truncate to the smaller order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_as_param_poly(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be non-negative")
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs.extend(ParamPoly() for _ in range(order + 1 - len(cs)))
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "ParamSeries":
        return cls((), order=order)

    @classmethod
    def one(cls, order: int) -> "ParamSeries":
        return cls((ParamPoly.const(1),), order=order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> ParamPoly:
        if not 0 <= k <= self.order:
            raise IndexError(f"series truncated at order {self.order}, asked for {k}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "ParamSeries":
        return ParamSeries(self.coeffs, order=order)

    def evaluate_param(self, value) -> "ParamSeries":
        return ParamSeries(
            (ParamPoly.const(c.evaluate(value)) for c in self.coeffs),
            order=self.order,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("ParamSeries", self.coeffs))

    def __neg__(self) -> "ParamSeries":
        return ParamSeries((-c for c in self.coeffs), order=self.order)

    def __add__(self, other: "ParamSeries") -> "ParamSeries":
        n = min(self.order, other.order)
        return ParamSeries(
            (self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), order=n
        )

    def __sub__(self, other: "ParamSeries") -> "ParamSeries":
        return self + (-other)

    def __mul__(self, other: "ParamSeries") -> "ParamSeries":
        n = min(self.order, other.order)
        out = [ParamPoly() for _ in range(n + 1)]
        for i in range(n + 1):
            ci = self.coeffs[i]
            if not ci:
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] = out[i + j] + ci * cj
        return ParamSeries(out, order=n)

    def scale(self, scalar) -> "ParamSeries":
        s = _frac(scalar)
        return ParamSeries((c * s for c in self.coeffs), order=self.order)

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            parts.append(f"({c})" if k == 0 else f"({c})*u^-{k}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"ParamSeries({self}; order={self.order})"


def _series_inverse(s: ParamSeries) -> ParamSeries:
    # requires constant term 1
    n = s.order
    out = [ParamPoly.const(1)] + [ParamPoly() for _ in range(n)]
    for k in range(1, n + 1):
        acc = ParamPoly()
        for j in range(1, k + 1):
            acc = acc + s.coeffs[j] * out[k - j]
        out[k] = -acc
    return ParamSeries(out, order=n)


def series_from_poly_ratio(num: UniPoly, den: UniPoly, order: int) -> ParamSeries:
    """Expansion of num/den in powers of ``u^{-1}``, exact through ``order``.

    Both polynomials must be monic of equal degree in ``u``, so the series
    has constant term 1.
    """
    if num.degree != den.degree:
        raise ValueError(
            f"degree mismatch: numerator {num.degree}, denominator {den.degree}"
        )
    if not (num.monic and den.monic):
        raise ValueError("both numerator and denominator must be monic in u")
    g = num.degree

    def tail(p: UniPoly) -> ParamSeries:
        # p(u)/u^g = 1 + sum_{j>=1} coeff(g-j) u^{-j}
        cs = [p.coeff(g - j) for j in range(0, g + 1)]
        return ParamSeries(cs, order=order)

    return tail(num) * _series_inverse(tail(den))


def series_log(s: ParamSeries) -> ParamSeries:
    """Formal logarithm of a series with constant term 1."""
    if s.coeffs[0] != ParamPoly.const(1):
        raise ValueError("series_log requires constant term 1")
    n = s.order
    x = s - ParamSeries.one(n)
    out = ParamSeries.zero(n)
    power = ParamSeries.one(n)
    for k in range(1, n + 1):
        power = power * x
        term = power.scale(Fraction((-1) ** (k + 1), k))
        out = out + term
    return out


def series_exp(s: ParamSeries) -> ParamSeries:
    """Formal exponential of a series with constant term 0."""
    if s.coeffs[0] != ParamPoly():
        raise ValueError("series_exp requires constant term 0")
    n = s.order
    out = ParamSeries.one(n)
    power = ParamSeries.one(n)
    fact = 1
    for k in range(1, n + 1):
        power = power * s
        fact *= k
        out = out + power.scale(Fraction(1, fact))
    return out


def series_rescale(s: ParamSeries, d) -> ParamSeries:
    """Substitute ``u -> d*u``: the ``u^{-k}`` coefficient picks up ``d^{-k}``."""
    d = _frac(d)
    if d == 0:
        raise ValueError("rescale factor must be nonzero")
    return ParamSeries(
        (c * Fraction(1) / d**k for k, c in enumerate(s.coeffs)), order=s.order
    )


@dataclass(frozen=True)
class PowerSums:
    """Power sums p_1..p_K of a degree-m root multiset.

    Entries beyond index m are determined by the first m through the Newton
    recurrence; construction validates that property.
    """

    degree: int
    values: tuple[ParamPoly, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "values", tuple(_as_param_poly(v) for v in self.values)
        )
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if len(self.values) < self.degree:
            raise ValueError(
                f"need p_1..p_{self.degree}, got only {len(self.values)} entries"
            )
        if len(self.values) > self.degree:
            expected = _newton_extend(
                self.degree, self.values[: self.degree], len(self.values)
            )
            if tuple(expected) != self.values:
                raise ValueError("tail entries violate the Newton recurrence")

    @property
    def top_index(self) -> int:
        return len(self.values)

    def p(self, k: int) -> ParamPoly:
        """p_k, with p_0 defined as the root count m."""
        if k == 0:
            return ParamPoly.const(self.degree)
        if not 1 <= k <= len(self.values):
            raise IndexError(f"p_{k} not available (have p_1..p_{len(self.values)})")
        return self.values[k - 1]

    @classmethod
    def of_roots(cls, roots: Sequence, top_index: int) -> "PowerSums":
        """Power sums of an explicit root multiset, up to the given index."""
        rs = [_as_param_poly(r) for r in roots]
        vals = []
        powers = list(rs)
        for _ in range(top_index):
            vals.append(sum(powers, ParamPoly()))
            powers = [p * r for p, r in zip(powers, rs)]
        return cls(len(rs), tuple(vals))


def _elementary_raw(m: int, values: Sequence[ParamPoly]) -> list[ParamPoly]:
    """e_1..e_m via Newton's identities, from p_1..p_m."""
    e: list[ParamPoly] = [ParamPoly.const(1)]
    for k in range(1, m + 1):
        acc = ParamPoly()
        for i in range(1, k + 1):
            term = values[i - 1] * e[k - i]
            acc = acc + (term if i % 2 == 1 else -term)
        e.append(acc / k)
    return e[1:]


def _newton_extend(
    m: int, values: Sequence[ParamPoly], top_index: int
) -> list[ParamPoly]:
    """p_1..p_top_index from p_1..p_m via the Newton recurrence."""
    if m == 0:
        return [ParamPoly() for _ in range(top_index)]
    e = _elementary_raw(m, values)
    vals = list(values[:m])
    while len(vals) < top_index:
        k = len(vals) + 1
        acc = ParamPoly()
        for i in range(1, m + 1):
            prev = ParamPoly.const(m) if k - i == 0 else vals[k - i - 1]
            term = e[i - 1] * prev
            acc = acc + (term if i % 2 == 1 else -term)
        vals.append(acc)
    return vals


def power_sums_to_monic(p: PowerSums) -> UniPoly:
    """Monic polynomial in ``u`` whose root multiset has the given power sums."""
    m = p.degree
    e = _elementary_raw(m, p.values)
    coeffs = [ParamPoly() for _ in range(m + 1)]
    coeffs[m] = ParamPoly.const(1)
    for k in range(1, m + 1):
        coeffs[m - k] = e[k - 1] if k % 2 == 0 else -e[k - 1]
    return UniPoly(coeffs)


def extend_power_sums(p: PowerSums, top_index: int) -> PowerSums:
    """Fill p_{m+1}..p_K using the recurrence induced by the elementary
    symmetric functions of the first m power sums."""
    if top_index < p.degree:
        raise ValueError("cannot extend below the root count")
    if top_index <= p.top_index:
        return PowerSums(p.degree, p.values[: max(top_index, p.degree)])
    return PowerSums(p.degree, tuple(_newton_extend(p.degree, p.values, top_index)))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction] | None:
    """All roots of a monic polynomial over the rationals, with multiplicity.

    Returns None when the polynomial does not split over the rationals.
    """
    cs = [Fraction(c) for c in coeffs]
    roots: list[Fraction] = []
    while len(cs) > 1:
        if cs[0] == 0:
            roots.append(Fraction(0))
            cs = cs[1:]
            continue
        scale = math.lcm(*(c.denominator for c in cs))
        ints = [int(c * scale) for c in cs]
        candidates: set[Fraction] = set()
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                candidates.add(Fraction(num, den))
                candidates.add(Fraction(-num, den))
        found = None
        for cand in sorted(candidates):
            acc = Fraction(0)
            for c in reversed(cs):
                acc = acc * cand + c
            if acc == 0:
                found = cand
                break
        if found is None:
            return None
        roots.append(found)
        # synthetic division by (u - found)
        quot = [Fraction(0)] * (len(cs) - 1)
        carry = Fraction(0)
        for k in range(len(cs) - 1, 0, -1):
            quot[k - 1] = cs[k] + carry
            carry = quot[k - 1] * found
        cs = quot
    return sorted(roots)


def roots_affine_in_param(q: UniPoly) -> list[tuple[Fraction, Fraction]]:
    """Split a monic polynomial into roots affine in the parameter.

    Specializes the parameter at deg(q)+1 integers, splits each
    specialization over the rationals, pairs roots across specializations
    by ascending order, interpolates an affine expression per root, and
    verifies by symbolic re-expansion.  Returns (slope, intercept) pairs
    sorted by (slope, intercept).

    Raises SymbolicRootsUnavailable when any specialization fails to split
    or the re-expansion does not reproduce the input.
    """
    if not q.monic:
        raise ValueError("roots_affine_in_param requires a monic polynomial")
    n = q.degree
    if n == 0:
        return []
    samples = [Fraction(t) for t in range(n + 1)]
    root_table: list[list[Fraction]] = []
    for a0 in samples:
        rs = _rational_roots(q.specialize(a0))
        if rs is None:
            raise SymbolicRootsUnavailable(
                f"specialization a={a0} does not split over the rationals"
            )
        root_table.append(rs)
    candidates: list[tuple[Fraction, Fraction]] = []
    for t in range(n):
        r0, r1 = root_table[0][t], root_table[1][t]
        slope = (r1 - r0) / (samples[1] - samples[0])
        intercept = r0 - slope * samples[0]
        candidates.append((slope, intercept))
    rebuilt = UniPoly.from_roots(
        ParamPoly((beta, alpha)) for alpha, beta in candidates
    )
    if rebuilt != q:
        raise SymbolicRootsUnavailable(
            "affine interpolation failed verification against the input polynomial"
        )
    return sorted(candidates)
