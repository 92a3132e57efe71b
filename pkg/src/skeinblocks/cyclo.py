"""Exact arithmetic in Q(A), A a primitive 2p-th root of unity.

Elements are stored in the power basis 1, A, ..., A^(d-1) with
d = phi(2p), reduced modulo the 2p-th cyclotomic polynomial, so equality
is coefficient equality. Signs of real elements under a complex embedding
are found with interval arithmetic (mpmath) at doubling precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from mpmath.ctx_iv import MPIntervalContext

from .errors import InvalidLevel, NotReal, PrecisionExhausted
from .level import LevelSpec


# ---------------------------------------------------------------------------
# dense polynomials over Q, lowest degree first


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _poly_divmod(a, b):
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        shift = len(a) - len(b)
        factor = a[-1] / lead
        q[shift] = factor
        for i, y in enumerate(b):
            a[i + shift] -= factor * y
        a.pop()
        _trim(a)
    return _trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, r = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not r
    return tuple(int(c) for c in num)


# ---------------------------------------------------------------------------


class CycloField:
    """The field Q(A) for a fixed level p. Obtain via :func:`cyclo_field`."""

    def __init__(self, p: int):
        if p < 3:
            raise InvalidLevel(f"level must be >= 3, got {p}")
        self.p = p
        self.order = 2 * p
        self.modulus = cyclotomic_polynomial(self.order)
        self.degree = len(self.modulus) - 1
        # A^k reduced, for 0 <= k < 2p; also covers every product degree < 2d - 1
        d = self.degree
        table = []
        cur = [0] * d
        cur[0] = 1
        for _ in range(self.order):
            table.append(tuple(cur))
            # multiply by A: shift, then fold the x^d term using the monic modulus
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self.modulus[i]
        self._powers = table
        self.zero = CycloNum(self, (Fraction(0),) * d)
        self.one = self.from_rational(1)

    def __repr__(self):
        return f"CycloField(p={self.p})"

    def __reduce__(self):
        return (cyclo_field, (self.p,))

    def from_rational(self, r) -> CycloNum:
        c = [Fraction(0)] * self.degree
        c[0] = Fraction(r)
        return CycloNum(self, tuple(c))

    def power(self, k: int) -> CycloNum:
        """A**k for any integer k."""
        return CycloNum(self, tuple(Fraction(x) for x in self._powers[k % self.order]))

    @property
    def gen(self) -> CycloNum:
        return self.power(1)

    def reduce(self, coeffs) -> tuple[Fraction, ...]:
        d = self.degree
        out = [Fraction(x) for x in coeffs[:d]]
        out += [Fraction(0)] * (d - len(out))
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._powers[k % self.order]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def from_exponents(self, terms: dict[int, object]) -> CycloNum:
        """Sum of coeff * A**exp over a mapping exp -> coeff."""
        acc = [Fraction(0)] * self.degree
        for k, c in terms.items():
            row = self._powers[k % self.order]
            for i in range(self.degree):
                if row[i]:
                    acc[i] += Fraction(c) * row[i]
        return CycloNum(self, tuple(acc))


@lru_cache(maxsize=None)
def cyclo_field(p: int) -> CycloField:
    return CycloField(p)


class CycloNum:
    """Immutable element of Q(A) in canonical reduced form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    @property
    def p(self) -> int:
        return self.field.p

    def _coerce(self, other) -> CycloNum:
        if isinstance(other, CycloNum):
            if other.field.p != self.field.p:
                raise ValueError(f"mixing levels {self.p} and {other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.field, self.field.reduce(_poly_mul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        if self.is_zero():
            raise ZeroDivisionError(f"inverse of zero in Q(A), p={self.p}")
        # extended Euclid: s*self + t*modulus = g, g a nonzero constant
        r0, r1 = list(self.field.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element is a zero divisor")  # unreachable: modulus irreducible
        c = r1[0]
        return CycloNum(self.field, self.field.reduce([x / c for x in s1]))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc, base = self.field.one, self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def conjugate(self) -> CycloNum:
        """Image under the automorphism A -> A^{-1} (complex conjugation)."""
        n = self.field.order
        return self.field.from_exponents({(-k) % n: c for k, c in enumerate(self.coeffs) if c})

    def is_real(self) -> bool:
        return self.conjugate() == self

    def to_complex(self, ell: int) -> complex:
        """Floating-point value at A = exp(i pi ell / p); for display only."""
        import cmath

        a = cmath.exp(1j * cmath.pi * ell / self.p)
        return sum(complex(c) * a**k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("A" if k == 1 else f"A^{k}")
                if mono and c == 1:
                    terms.append(mono)
                elif mono and c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{c}{'*' + mono if mono else ''}")
        return f"CycloNum(p={self.p}: {' + '.join(terms) if terms else '0'})"


def _field(level) -> CycloField:
    p = level.p if isinstance(level, LevelSpec) else int(level)
    return cyclo_field(p)


@lru_cache(maxsize=None)
def _qint(p: int, m: int) -> CycloNum:
    F = cyclo_field(p)
    den = F.power(2) - F.power(-2)
    return (F.power(2 * m) - F.power(-2 * m)) / den


def quantum_integer(level, m: int) -> CycloNum:
    """[m] = (A^{2m} - A^{-2m}) / (A^2 - A^{-2}).

    The denominator vanishes only when A^4 = 1, which no level p >= 3 allows.
    """
    return _qint(_field(level).p, m)


@lru_cache(maxsize=None)
def _qfact(p: int, m: int) -> CycloNum:
    if m == 0:
        return cyclo_field(p).one
    return _qfact(p, m - 1) * _qint(p, m)


def quantum_factorial(level, m: int) -> CycloNum:
    if m < 0:
        raise ValueError(f"quantum factorial of negative integer {m}")
    p = _field(level).p
    for k in range(m + 1):  # fill the cache bottom-up, avoids deep recursion
        _qfact(p, k)
    return _qfact(p, m)


# ---------------------------------------------------------------------------
# embeddings and rigorous signs


@dataclass(frozen=True)
class RootSelector:
    """Embedding A -> exp(i pi ell / p), with gcd(ell, 2p) = 1."""

    p: int
    ell: int

    def __post_init__(self):
        if not 1 <= self.ell < 2 * self.p or gcd(self.ell, 2 * self.p) != 1:
            raise ValueError(f"ell={self.ell} does not select a primitive {2 * self.p}-th root")

    def conjugate(self) -> RootSelector:
        return RootSelector(self.p, 2 * self.p - self.ell)


def admissible_ells(p: int) -> list[int]:
    return [ell for ell in range(1, 2 * p) if gcd(ell, 2 * p) == 1]


def unitary_root(p: int) -> RootSelector:
    """Embedding on which the Hermitian form is definite.

    Odd p: A = (-1)^((p-1)/2) exp((p+1) pi i / 2p), i.e. ell = (p^2+1)/2 mod 2p.
    Even p: A^2 = exp(2 pi i / p), ell = 1.
    """
    if p % 2:
        return RootSelector(p, ((p * p + 1) // 2) % (2 * p))
    return RootSelector(p, 1)


START_PREC = 64
MAX_PREC = 1 << 14


def _real_part_interval(x: CycloNum, ell: int, prec: int):
    ctx = MPIntervalContext()
    ctx.prec = prec
    p = x.p
    total = ctx.mpf(0)
    for k, c in enumerate(x.coeffs):
        if c:
            angle = ctx.mpf(k * ell) * ctx.pi / p
            total += ctx.mpf(c.numerator) / c.denominator * ctx.cos(angle)
    return total


def sign_under_embedding(x: CycloNum, root: RootSelector, *, start_prec: int = START_PREC) -> int:
    """Sign (+1, -1 or 0) of the real number x(exp(i pi ell / p)).

    Zero is decided exactly first; otherwise the interval enclosure is refined
    until it excludes zero.
    """
    if root.p != x.p:
        raise ValueError(f"root for p={root.p} applied to element of p={x.p}")
    if x.is_zero():
        return 0
    if not x.is_real():
        raise NotReal(f"{x!r} is not fixed by A -> 1/A")
    prec = start_prec
    while prec <= MAX_PREC:
        iv = _real_part_interval(x, root.ell, prec)
        if iv.a > 0:
            return 1
        if iv.b < 0:
            return -1
        prec *= 2
    raise PrecisionExhausted(f"could not isolate the sign of {x!r} at {MAX_PREC} bits")
