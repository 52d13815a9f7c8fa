"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import IntegrityError


class IntPolynomial:
    """Immutable integer polynomial ``c[0] + c[1] x + ... + c[d] x^d``.

    Trailing zero coefficients are trimmed, so the zero polynomial has an
    empty coefficient tuple and degree -1. ``nominal_degree`` optionally
    records the degree context ``n`` a polynomial lives in; it is used as the
    default by :meth:`reverse` and ignored by equality.
    """

    __slots__ = ("coeffs", "nominal_degree")

    def __init__(self, coeffs: Iterable[int] = (), nominal_degree: int | None = None):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        if nominal_degree is not None and nominal_degree < len(cs) - 1:
            raise ValueError(
                f"nominal degree {nominal_degree} below actual degree {len(cs) - 1}")
        self.nominal_degree = nominal_degree

    # construction helpers

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def binomial_power(cls, m: int) -> "IntPolynomial":
        """``(1+x)^m``."""
        return cls(comb(m, i) for i in range(m + 1))

    @classmethod
    def geometric(cls, lo: int, hi: int) -> "IntPolynomial":
        """``x^lo + x^(lo+1) + ... + x^hi`` (zero if ``hi < lo``)."""
        if hi < lo:
            return cls()
        return cls([0] * lo + [1] * (hi - lo + 1))

    # basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def coefficient_list(self, length: int | None = None) -> list[int]:
        n = len(self.coeffs) if length is None else length
        return [self[i] for i in range(n)]

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                term = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append((" - " if c < 0 else " + ") + term)
        return "".join(parts)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``x^k``; negative ``k`` divides and requires exactness."""
        if k >= 0:
            return IntPolynomial([0] * k + list(self.coeffs))
        if any(self.coeffs[: -k]):
            raise IntegrityError(f"{self} is not divisible by x^{-k}")
        return IntPolynomial(self.coeffs[-k:])

    def reverse(self, n: int | None = None) -> "IntPolynomial":
        """``x^n p(1/x)``; ``n`` defaults to the nominal degree, then the degree."""
        if n is None:
            n = self.nominal_degree if self.nominal_degree is not None else self.degree
        if self.coeffs and n < self.degree:
            raise ValueError(f"cannot reverse degree-{self.degree} polynomial wrt {n}")
        if not self.coeffs:
            return IntPolynomial(nominal_degree=n)
        return IntPolynomial(
            [self[n - i] for i in range(n + 1)], nominal_degree=n)

    def with_nominal(self, n: int) -> "IntPolynomial":
        return IntPolynomial(self.coeffs, nominal_degree=n)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Exact sign of the value at a rational point."""
        num, den = x.numerator, x.denominator
        cs = self.coeffs
        if not cs:
            return 0
        acc = cs[-1]
        dpow = 1
        for c in reversed(cs[:-1]):
            dpow *= den
            acc = acc * num + c * dpow
        return (acc > 0) - (acc < 0)

    def divide_by_linear(self, root: int) -> "IntPolynomial":
        """Exact quotient by ``(x - root)``; raises if the remainder is nonzero."""
        if not self.coeffs:
            return IntPolynomial()
        out = []
        carry = 0
        for c in reversed(self.coeffs):
            carry = carry * root + c
            out.append(carry)
        rem = out.pop()
        if rem:
            raise IntegrityError(f"x - {root} does not divide {self}")
        return IntPolynomial(reversed(out))

    def exact_div_scalar(self, d: int) -> "IntPolynomial":
        q = []
        for c in self.coeffs:
            if c % d:
                raise IntegrityError(f"{d} does not divide coefficient {c}")
            q.append(c // d)
        return IntPolynomial(q)

    def is_symmetric(self, n: int | None = None) -> bool:
        if not self.coeffs:
            return True
        if n is None:
            n = self.degree
        if n < self.degree:
            return False
        return all(self[i] == self[n - i] for i in range(n + 1))

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)


def _coerce(other):
    if isinstance(other, IntPolynomial):
        return other
    if isinstance(other, int) and not isinstance(other, bool):
        return IntPolynomial([other])
    return NotImplemented


X = IntPolynomial([0, 1])
ONE = IntPolynomial([1])
ZERO = IntPolynomial()


def poly(coeffs: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(coeffs)


def expand_face_counts(counts: Sequence[int], n: int, shift: int = 0) -> IntPolynomial:
    """``sum_i counts[i] x^(i+shift) (1-x)^(n-i-shift)`` over ``i``."""
    one_minus = IntPolynomial([1, -1])
    total = IntPolynomial()
    for i, c in enumerate(counts):
        if c:
            k = i + shift
            if n - k < 0:
                raise ValueError("face size exceeds nominal dimension")
            total = total + (one_minus ** (n - k)).shift(k) * c
    return total.with_nominal(n)
