"""Cartan data, Weyl groups, longest-element reduced words, and path exponents.

Weights live in fundamental-weight coordinates throughout: the simple root
``alpha_j`` has coordinate vector equal to column j of the Cartan matrix,
and the simple reflection ``s_i`` sends a weight ``w`` to
``w - w[i] * alpha_i``.  Node indices are 1-based, matching the usual
Dynkin-diagram labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = [
    "CartanData",
    "InvalidCartanError",
    "PathExponents",
    "BUILTIN_ALGEBRAS",
    "validate_cartan",
    "builtin_cartan",
    "simple_reflection",
    "weyl_apply",
    "weyl_longest",
    "is_reduced_word_of_longest",
    "reduced_words_of_longest",
    "path_exponents",
    "positive_roots",
    "weyl_dim",
]

WeylElement = tuple[tuple[int, ...], ...]
Weight = tuple[int, ...]
ReducedWord = tuple[int, ...]

_GROUP_GUARD = 10**6


class InvalidCartanError(ValueError):
    """The supplied matrix/symmetrizer pair is not finite-type Cartan data."""


@dataclass(frozen=True)
class CartanData:
    """Validated Cartan matrix with symmetrizers d_1..d_l."""

    rank: int
    a: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    def aij(self, i: int, j: int) -> int:
        """Cartan matrix entry, 1-based."""
        return self.a[i - 1][j - 1]

    def di(self, i: int) -> int:
        """Symmetrizer entry, 1-based."""
        return self.d[i - 1]

    def fundamental(self, i: int) -> Weight:
        if not 1 <= i <= self.rank:
            raise ValueError(f"fundamental index {i} out of range 1..{self.rank}")
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))


def _det(m: list[list[int]]) -> int:
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j, head in enumerate(m[0]):
        if head == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * head * _det(minor)
    return total


def validate_cartan(a: Sequence[Sequence[int]], d: Sequence[int]) -> CartanData:
    """Check finite-type Cartan axioms and return validated data.

    Requires: a_ii = 2, off-diagonal entries non-positive with matching
    zeros, positive coprime symmetrizers, D*A symmetric and positive
    definite.
    """
    rows = tuple(tuple(int(x) for x in row) for row in a)
    l = len(rows)
    if l == 0 or any(len(row) != l for row in rows):
        raise InvalidCartanError("Cartan matrix must be square and non-empty")
    ds = tuple(int(x) for x in d)
    if len(ds) != l:
        raise InvalidCartanError("symmetrizer length must equal the rank")
    if any(x <= 0 for x in ds):
        raise InvalidCartanError("symmetrizers must be positive integers")
    if gcd(*ds) != 1:
        raise InvalidCartanError("symmetrizers must be coprime as a set")
    for i in range(l):
        if rows[i][i] != 2:
            raise InvalidCartanError("diagonal Cartan entries must equal 2")
        for j in range(l):
            if i != j:
                if rows[i][j] > 0:
                    raise InvalidCartanError("off-diagonal entries must be <= 0")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise InvalidCartanError("a_ij = 0 must imply a_ji = 0")
    sym = [[ds[i] * rows[i][j] for j in range(l)] for i in range(l)]
    for i in range(l):
        for j in range(l):
            if sym[i][j] != sym[j][i]:
                raise InvalidCartanError("D*A must be symmetric")
    for k in range(1, l + 1):
        minor = [row[:k] for row in sym[:k]]
        if _det(minor) <= 0:
            raise InvalidCartanError("D*A must be positive definite (finite type)")
    return CartanData(rank=l, a=rows, d=ds)


BUILTIN_ALGEBRAS: dict[str, tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]] = {
    "a1": (((2,),), (1,)),
    "a2": (((2, -1), (-1, 2)), (1, 1)),
    "g2": (((2, -1), (-3, 2)), (3, 1)),
}


def builtin_cartan(name: str) -> CartanData:
    key = name.lower()
    if key not in BUILTIN_ALGEBRAS:
        raise KeyError(f"unknown builtin algebra {name!r}")
    a, d = BUILTIN_ALGEBRAS[key]
    return validate_cartan(a, d)


def _identity(l: int) -> WeylElement:
    return tuple(tuple(1 if i == j else 0 for j in range(l)) for i in range(l))


def _matmul(x: WeylElement, y: WeylElement) -> WeylElement:
    l = len(x)
    return tuple(
        tuple(sum(x[r][k] * y[k][c] for k in range(l)) for c in range(l))
        for r in range(l)
    )


def simple_reflection(cartan: CartanData, i: int) -> WeylElement:
    """Matrix of s_i on fundamental-weight coordinates."""
    l = cartan.rank
    return tuple(
        tuple(
            (1 if r == c else 0) - (cartan.a[r][i - 1] if c == i - 1 else 0)
            for c in range(l)
        )
        for r in range(l)
    )


def weyl_apply(m: WeylElement, w: Weight) -> Weight:
    return tuple(sum(row[c] * w[c] for c in range(len(w))) for row in m)


def _enumerate_group(cartan: CartanData) -> dict[WeylElement, ReducedWord]:
    """Map each group element to its lexicographically least reduced word."""
    gens = [simple_reflection(cartan, i) for i in range(1, cartan.rank + 1)]
    words: dict[WeylElement, ReducedWord] = {_identity(cartan.rank): ()}
    frontier: list[WeylElement] = [_identity(cartan.rank)]
    while frontier:
        candidates: list[tuple[ReducedWord, WeylElement]] = []
        for m in frontier:
            base = words[m]
            for i, s in enumerate(gens, start=1):
                candidates.append((base + (i,), _matmul(m, s)))
        candidates.sort(key=lambda t: t[0])
        frontier = []
        for word, m in candidates:
            if m not in words:
                words[m] = word
                frontier.append(m)
        if len(words) > _GROUP_GUARD:
            raise InvalidCartanError("Weyl group enumeration exceeded the guard size")
    return words


def weyl_longest(cartan: CartanData) -> tuple[int, WeylElement, ReducedWord]:
    """Group order, longest element, and its lex-least reduced word.

    The longest element is recognized as the unique element sending every
    fundamental weight into the antidominant cone.
    """
    words = _enumerate_group(cartan)
    antidominant = [
        m for m in words if all(entry <= 0 for row in m for entry in row)
    ]
    if len(antidominant) != 1:
        raise InvalidCartanError("longest element is not unique; invalid input data")
    w0 = antidominant[0]
    word = words[w0]
    if len(word) != len(positive_roots(cartan)):
        raise InvalidCartanError("longest-word length does not match the root count")
    return len(words), w0, word


def is_reduced_word_of_longest(cartan: CartanData, word: Sequence[int]) -> bool:
    order, w0, w0_word = weyl_longest(cartan)
    if len(word) != len(w0_word):
        return False
    if any(not 1 <= r <= cartan.rank for r in word):
        return False
    m = _identity(cartan.rank)
    for r in word:
        m = _matmul(m, simple_reflection(cartan, r))
    return m == w0


def reduced_words_of_longest(cartan: CartanData) -> list[ReducedWord]:
    """All reduced words of the longest element (exhaustive DFS)."""
    words = _enumerate_group(cartan)
    lengths = {m: len(w) for m, w in words.items()}
    _, w0, w0_word = weyl_longest(cartan)
    target = len(w0_word)
    gens = [simple_reflection(cartan, i) for i in range(1, cartan.rank + 1)]
    out: list[ReducedWord] = []

    def grow(m: WeylElement, word: ReducedWord):
        if len(word) == target:
            if m == w0:
                out.append(word)
            return
        for i, s in enumerate(gens, start=1):
            nxt = _matmul(m, s)
            if lengths[nxt] == len(word) + 1:
                grow(nxt, word + (i,))

    grow(_identity(cartan.rank), ())
    return out


@dataclass(frozen=True)
class PathExponents:
    """Exponents m_1..m_p of the extremal path for one fundamental weight."""

    fundamental: int
    word: ReducedWord
    exponents: tuple[int, ...]


def path_exponents(
    cartan: CartanData, word: Sequence[int], fundamental: int
) -> PathExponents:
    """Exponent m_j = coordinate r_j of s_{r_{j+1}}..s_{r_p}(omega_i).

    The word must be a reduced word of the longest element.
    """
    if not is_reduced_word_of_longest(cartan, word):
        raise ValueError("word is not a reduced word of the longest element")
    current = cartan.fundamental(fundamental)
    exps = [0] * len(word)
    for j in range(len(word), 0, -1):
        r = word[j - 1]
        exps[j - 1] = current[r - 1]
        current = weyl_apply(simple_reflection(cartan, r), current)
    return PathExponents(fundamental, tuple(word), tuple(exps))


def positive_roots(cartan: CartanData) -> list[tuple[int, ...]]:
    """All positive roots, in simple-root coordinates."""
    l = cartan.rank

    def reflect(v: tuple[int, ...], i: int) -> tuple[int, ...]:
        pairing = sum(cartan.a[i][j] * v[j] for j in range(l))
        return tuple(v[j] - (pairing if j == i else 0) for j in range(l))

    roots = {tuple(1 if j == i else 0 for j in range(l)) for i in range(l)}
    frontier = list(roots)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(l):
                w = reflect(v, i)
                if w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt
        if len(roots) > _GROUP_GUARD:
            raise InvalidCartanError("root system enumeration exceeded the guard size")
    return sorted(v for v in roots if all(c >= 0 for c in v))


def weyl_dim(cartan: CartanData, weight: Sequence[int]) -> int:
    """Dimension of the irreducible highest-weight module, via the Weyl
    dimension formula evaluated exactly."""
    lam = tuple(int(x) for x in weight)
    if len(lam) != cartan.rank:
        raise ValueError("weight length must equal the rank")
    if any(x < 0 for x in lam):
        raise ValueError("weight must be dominant")
    total = Fraction(1)
    for root in positive_roots(cartan):
        num = sum(c * d * (m + 1) for c, d, m in zip(root, cartan.d, lam))
        den = sum(c * d for c, d in zip(root, cartan.d))
        total *= Fraction(num, den)
    assert total.denominator == 1
    return int(total)
