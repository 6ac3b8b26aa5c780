#!/usr/bin/env python3

"""
series.py

Truncated power series in the three formal variables (x, y, z) with exact
rational coefficients.

This module provides:
1. TruncatedSeries: an immutable dense coefficient tensor of shape
   (dx + 1, dy + 1, dz + 1), where (dx, dy, dz) are the per-variable degree caps.
   Every coefficient inside the caps is stored; arithmetic is exact modulo the
   ideal generated by x^(dx+1), y^(dy+1), z^(dz+1).
2. Ring operations (+, -, *, scalar scaling, integer powers) where the result
   takes the componentwise minimum of the operand caps.
3. exp(): the exponential of a series with zero constant term, computed with
   the degree-operator recurrence  D g = (D f) g  where D = x d/dx + y d/dy + z d/dz.
4. Helpers for building the generating-function exponents: variables,
   constants and exponentials of linear forms.

Coefficients are `fractions.Fraction` values held in a numpy object array;
no floating point value ever enters a coefficient.

Dependencies:
- numpy
- fractions
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Tuple, Union

import numpy as np

Caps = Tuple[int, int, int]
MultiDegree = Tuple[int, int, int]
Scalar = Union[int, Fraction]

VARIABLES = ("x", "y", "z")
ZERO = Fraction(0)
ONE = Fraction(1)


def _check_caps(caps: Iterable[int]) -> Caps:
    caps = tuple(int(c) for c in caps)
    if len(caps) != 3 or any(c < 0 for c in caps):
        raise ValueError(f"caps must be three non-negative integers, got {caps}")
    return caps


def _zeros(caps: Caps) -> np.ndarray:
    return np.full(tuple(c + 1 for c in caps), ZERO, dtype=object)


class TruncatedSeries:
    """Immutable three-variable power series truncated at per-variable caps."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: np.ndarray):
        if coeffs.ndim != 3:
            raise ValueError("coefficient tensor must be three-dimensional")
        coeffs = np.array(coeffs, dtype=object, copy=True)
        coeffs.flags.writeable = False
        self._coeffs = coeffs

    # ---------------------------
    # Construction
    # ---------------------------
    @classmethod
    def build(cls, terms: Iterable[Tuple[MultiDegree, Scalar]], caps: Iterable[int]) -> "TruncatedSeries":
        """Series with exactly the given coefficients; repeated degrees accumulate."""
        caps = _check_caps(caps)
        coeffs = _zeros(caps)
        for degree, value in terms:
            degree = tuple(int(d) for d in degree)
            if len(degree) != 3 or any(d < 0 or d > c for d, c in zip(degree, caps)):
                raise ValueError(f"degree {degree} exceeds caps {caps}")
            coeffs[degree] += Fraction(value)
        return cls(coeffs)

    @classmethod
    def zero(cls, caps: Iterable[int]) -> "TruncatedSeries":
        return cls.build([], caps)

    @classmethod
    def constant(cls, value: Scalar, caps: Iterable[int]) -> "TruncatedSeries":
        return cls.build([((0, 0, 0), value)], caps)

    @classmethod
    def variable(cls, name: str, caps: Iterable[int]) -> "TruncatedSeries":
        """The series x, y or z (zero when that variable's cap is 0)."""
        caps = _check_caps(caps)
        axis = VARIABLES.index(name)
        if caps[axis] == 0:
            return cls.zero(caps)
        degree = [0, 0, 0]
        degree[axis] = 1
        return cls.build([(tuple(degree), 1)], caps)

    @classmethod
    def exp_linear(cls, a: Scalar, b: Scalar, c: Scalar, caps: Iterable[int]) -> "TruncatedSeries":
        """exp(a*x + b*y + c*z), coefficient a^i b^j c^k / (i! j! k!)."""
        caps = _check_caps(caps)
        linear = (
            cls.variable("x", caps) * Fraction(a)
            + cls.variable("y", caps) * Fraction(b)
            + cls.variable("z", caps) * Fraction(c)
        )
        return linear.exp()

    # ---------------------------
    # Inspection
    # ---------------------------
    @property
    def caps(self) -> Caps:
        return tuple(s - 1 for s in self._coeffs.shape)

    def coeff(self, degree: MultiDegree) -> Fraction:
        degree = tuple(int(d) for d in degree)
        caps = self.caps
        if len(degree) != 3 or any(d < 0 or d > c for d, c in zip(degree, caps)):
            raise ValueError(f"degree {degree} exceeds caps {caps}")
        return self._coeffs[degree]

    def terms(self) -> Iterator[Tuple[MultiDegree, Fraction]]:
        """Non-zero coefficients in lexicographic degree order."""
        for index in zip(*np.nonzero(self._coeffs)):
            degree = tuple(int(i) for i in index)
            yield degree, self._coeffs[degree]

    def dense_terms(self) -> Iterator[Tuple[MultiDegree, Fraction]]:
        """Every coefficient within caps, zeros included, in lexicographic order."""
        for degree in np.ndindex(*self._coeffs.shape):
            yield degree, self._coeffs[degree]

    def truncate(self, caps: Iterable[int]) -> "TruncatedSeries":
        caps = _check_caps(caps)
        caps = tuple(min(c, own) for c, own in zip(caps, self.caps))
        coeffs = _zeros(caps)
        coeffs[...] = self._coeffs[: caps[0] + 1, : caps[1] + 1, : caps[2] + 1]
        return TruncatedSeries(coeffs)

    # ---------------------------
    # Ring operations
    # ---------------------------
    def _common(self, other: "TruncatedSeries") -> Tuple[np.ndarray, np.ndarray, Caps]:
        caps = tuple(min(a, b) for a, b in zip(self.caps, other.caps))
        window = tuple(slice(0, c + 1) for c in caps)
        return self._coeffs[window], other._coeffs[window], caps

    def __add__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            a, b, _ = self._common(other)
            return TruncatedSeries(a + b)
        coeffs = np.array(self._coeffs, dtype=object, copy=True)
        coeffs[0, 0, 0] += Fraction(other)
        return TruncatedSeries(coeffs)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return self.scale(-1)

    def __sub__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "TruncatedSeries":
        return (-self) + other

    def scale(self, factor: Scalar) -> "TruncatedSeries":
        return TruncatedSeries(self._coeffs * Fraction(factor))

    def __mul__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        a, b, caps = self._common(other)
        out = _zeros(caps)
        for index in zip(*np.nonzero(a)):
            i, j, k = (int(v) for v in index)
            out[i:, j:, k:] += a[i, j, k] * b[: caps[0] + 1 - i, : caps[1] + 1 - j, : caps[2] + 1 - k]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, divisor: Scalar) -> "TruncatedSeries":
        # Scalar division only; series division is not supported.
        return self.scale(ONE / Fraction(divisor))

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = TruncatedSeries.constant(1, self.caps)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.caps == other.caps and bool(np.all(self._coeffs == other._coeffs))

    __hash__ = None

    # ---------------------------
    # Calculus
    # ---------------------------
    def derivative(self, name: str) -> "TruncatedSeries":
        """Formal partial derivative; the cap of that variable drops by one."""
        axis = VARIABLES.index(name)
        caps = list(self.caps)
        if caps[axis] == 0:
            return TruncatedSeries.zero(caps)
        caps[axis] -= 1
        coeffs = _zeros(tuple(caps))
        for degree, value in self.terms():
            if degree[axis] == 0:
                continue
            lowered = list(degree)
            lowered[axis] -= 1
            coeffs[tuple(lowered)] = value * degree[axis]
        return TruncatedSeries(coeffs)

    def exp(self) -> "TruncatedSeries":
        """exp(f) for f with zero constant term.

        With D the total-degree operator, D exp(f) = D(f) exp(f); comparing the
        coefficients of a multi-degree a with |a| = d > 0 gives
            d * g[a] = sum over b <= a, b != 0 of |b| * f[b] * g[a - b].
        """
        if self._coeffs[0, 0, 0] != 0:
            raise ValueError(
                f"exp() needs a zero constant term, got {self._coeffs[0, 0, 0]}"
            )
        caps = self.caps
        weighted = [
            (degree, value * sum(degree)) for degree, value in self.terms()
        ]
        g = _zeros(caps)
        g[0, 0, 0] = ONE
        order = sorted(np.ndindex(*g.shape), key=sum)
        for alpha in order[1:]:
            total = ZERO
            for beta, value in weighted:
                if beta[0] <= alpha[0] and beta[1] <= alpha[1] and beta[2] <= alpha[2]:
                    total += value * g[alpha[0] - beta[0], alpha[1] - beta[1], alpha[2] - beta[2]]
            g[alpha] = total / sum(alpha)
        return TruncatedSeries(g)

    def __repr__(self) -> str:
        shown = ", ".join(f"{d}: {v}" for d, v in list(self.terms())[:6])
        return f"TruncatedSeries(caps={self.caps}, {{{shown}}})"


def format_coefficient(value: Fraction) -> str:
    """Render as num/den, always with an explicit denominator."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
