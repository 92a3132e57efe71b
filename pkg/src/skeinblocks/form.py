"""Diagonal of the Hermitian form in the colored-graph basis, and its signs.

The basis attached to the admissible colorings of a trivalent graph is
orthogonal. The diagonal entry of a coloring is, up to one global scalar
common to all entries, the product of the vertex weights divided by the
product of the edge weights. The global scalar is left out, so a signature is
only meaningful up to exchanging its two counts.

Every such entry is a signed product of quantum integers [m], with m below
the first zero of [m] (p for odd p, p/2 for even p), so no factor vanishes.
Weights are kept in that factored form: the exact cyclotomic value is built
on demand, and signs come from the signs of the individual [m], each decided
once per embedding.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .blocks import Coloring, enumerate_colorings
from .cyclo import (
    CycloNum,
    RootSelector,
    admissible_ells,
    cyclo_field,
    quantum_integer,
    sign_under_embedding,
)
from .errors import InvalidColor, TriviallyDefinite
from .graph import TrivalentGraph
from .level import LevelSpec, admissible_triple


@dataclass(frozen=True)
class QProduct:
    """sign * prod_m [m]^exps[m], with exps stored as sorted (m, e) pairs."""

    p: int
    sign: int
    exps: tuple[tuple[int, int], ...]

    @staticmethod
    def build(p: int, sign: int, counter: Counter) -> QProduct:
        return QProduct(p, sign, tuple(sorted((m, e) for m, e in counter.items() if e and m != 1)))

    def __mul__(self, other: QProduct) -> QProduct:
        c = Counter(dict(self.exps))
        c.update(dict(other.exps))
        return QProduct.build(self.p, self.sign * other.sign, c)

    def __truediv__(self, other: QProduct) -> QProduct:
        c = Counter(dict(self.exps))
        c.subtract(dict(other.exps))
        return QProduct.build(self.p, self.sign * other.sign, c)

    def value(self) -> CycloNum:
        out = cyclo_field(self.p).from_rational(self.sign)
        for m, e in self.exps:
            out = out * quantum_integer(self.p, m) ** e
        return out

    def sign_at(self, root: RootSelector) -> int:
        s = self.sign
        for m, e in self.exps:
            if e % 2:
                s *= _qint_sign(self.p, m, root.ell)
        return s


@lru_cache(maxsize=None)
def _qint_sign(p: int, m: int, ell: int) -> int:
    return sign_under_embedding(quantum_integer(p, m), RootSelector(p, ell))


def _factorial_counter(m: int, c: Counter, k: int = 1) -> None:
    for t in range(2, m + 1):
        c[t] += k


@lru_cache(maxsize=None)
def _edge_factors(level: LevelSpec, a: int) -> QProduct:
    level.check_color(a)
    return QProduct.build(level.p, -1 if a % 2 else 1, Counter({a + 1: 1}))


@lru_cache(maxsize=None)
def _vertex_factors(level: LevelSpec, a: int, b: int, c: int) -> QProduct:
    if not admissible_triple(level, a, b, c):
        raise InvalidColor(f"({a}, {b}, {c}) is not {level.p}-admissible")
    i, j, k = (a + b - c) // 2, (b + c - a) // 2, (c + a - b) // 2
    cnt = Counter()
    for m in (i + j + k + 1, i, j, k):
        _factorial_counter(m, cnt)
    for m in (a, b, c):
        _factorial_counter(m, cnt, -1)
    return QProduct.build(level.p, 1 if (i + j + k + 1) % 2 == 0 else -1, cnt)


def edge_weight(level: LevelSpec, a: int) -> CycloNum:
    """(-1)^a [a+1]."""
    return _edge_factors(level, a).value()


def vertex_weight(level: LevelSpec, a: int, b: int, c: int) -> CycloNum:
    """(-1)^(i+j+k+1) [i+j+k+1]! [i]! [j]! [k]! / ([a]! [b]! [c]!).

    Here i, j, k are the half-sums (a+b-c)/2, (b+c-a)/2, (c+a-b)/2. The value
    is symmetric in a, b, c, so the cyclic order at the vertex is not needed.
    """
    return _vertex_factors(level, a, b, c).value()


def coloring_factors(level: LevelSpec, G: TrivalentGraph, coloring: Coloring, *,
                     include_legs: bool = False) -> QProduct:
    """Diagonal entry of one basis coloring, factored, without the global scalar."""
    out = QProduct(level.p, 1, ())
    for slots in G.incidence:
        a, b, c = (coloring.edges[i] if kind == "edge" else coloring.boundary[i] for kind, i in slots)
        out = out * _vertex_factors(level, a, b, c)
    colors = coloring.edges + (coloring.boundary if include_legs else ())
    for color in colors:
        out = out / _edge_factors(level, color)
    return out


@dataclass(frozen=True)
class WeightVector:
    """Basis colorings with their diagonal entries, in enumeration order.

    ``factors`` holds each entry as a signed product of quantum integers;
    ``weights`` gives the exact cyclotomic values (computed on first use).
    """

    level: LevelSpec
    colorings: tuple[Coloring, ...]
    factors: tuple[QProduct, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[tuple[Coloring, CycloNum]]:
        return iter(zip(self.colorings, self.weights))

    @property
    def weights(self) -> tuple[CycloNum, ...]:
        if "w" not in self._cache:
            self._cache["w"] = tuple(f.value() for f in self.factors)
        return self._cache["w"]

    def signs(self, root: RootSelector) -> tuple[int, ...]:
        if root.p != self.level.p:
            raise ValueError(f"root for p={root.p} used at level p={self.level.p}")
        return tuple(f.sign_at(root) for f in self.factors)


def diagonal_weights(level: LevelSpec, G: TrivalentGraph, boundary=(), *,
                     include_legs: bool = False) -> WeightVector:
    """One weight per admissible coloring, same order as enumerate_colorings.

    Leg edges carry no edge weight by default. For a fixed boundary they
    contribute one common factor, which cannot change any sign pattern.
    """
    cols = tuple(enumerate_colorings(level, G, boundary))
    fs = tuple(coloring_factors(level, G, c, include_legs=include_legs) for c in cols)
    return WeightVector(level, cols, fs)


@dataclass(frozen=True)
class SignaturePair:
    """Counts of positive and negative entries, defined only up to swapping."""

    counts: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(sorted(self.counts, reverse=True)))

    @property
    def dim(self) -> int:
        return sum(self.counts)

    @property
    def definite(self) -> bool:
        return self.counts[1] == 0

    def __eq__(self, other):
        if isinstance(other, SignaturePair):
            return self.counts == other.counts
        if isinstance(other, (tuple, list)) and len(other) == 2:
            return self.counts == tuple(sorted(other, reverse=True))
        return NotImplemented

    def __hash__(self):
        return hash(self.counts)

    def __str__(self):
        return f"{{{self.counts[0]},{self.counts[1]}}}"


def signature_up_to_sign(level: LevelSpec, root: RootSelector, G: TrivalentGraph, boundary=(), *,
                         include_legs: bool = False) -> SignaturePair:
    """Unordered pair of sign counts of the diagonal under the embedding ``root``."""
    signs = diagonal_weights(level, G, boundary, include_legs=include_legs).signs(root)
    pos = sum(1 for s in signs if s > 0)
    return SignaturePair((pos, len(signs) - pos))


def is_indefinite_some_embedding(level: LevelSpec, G: TrivalentGraph, boundary=()) -> tuple[bool, int | None]:
    """Whether some primitive 2p-th root makes the form indefinite.

    Returns ``(True, ell)`` for the smallest witnessing ``ell`` and
    ``(False, None)`` when every embedding gives a definite form.
    """
    wv = diagonal_weights(level, G, boundary)
    if len(wv) < 2:
        raise TriviallyDefinite(f"block space has dimension {len(wv)}; a form on it is definite")
    for ell in admissible_ells(level.p):
        if len(set(wv.signs(RootSelector(level.p, ell)))) > 1:
            return True, ell
    return False, None
