"""Truncated one-variable power series with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer-coefficient power series truncated at a fixed degree.

    `coeffs[k]` is the coefficient of t^k; the truncation degree is
    len(coeffs) - 1.  Arithmetic between two series requires equal truncation.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("series needs at least the degree-0 coefficient")
        if any(not isinstance(c, int) for c in self.coeffs):
            raise ValueError("series coefficients must be integers")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if k < 0:
            return 0
        if k > self.truncation:
            raise IndexError(f"degree {k} beyond truncation {self.truncation}")
        return self.coeffs[k]

    def _check(self, other: "TruncatedSeries") -> None:
        if self.truncation != other.truncation:
            raise ValueError("mismatched truncation degrees")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.truncation
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(c * a for a in self.coeffs))

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be +-1."""
        if self.coeffs[0] not in (1, -1):
            raise ValueError("series unit inverse needs constant term +-1")
        n = self.truncation
        inv = [0] * (n + 1)
        inv[0] = self.coeffs[0]
        for k in range(1, n + 1):
            acc = sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -acc * self.coeffs[0]
        return TruncatedSeries(tuple(inv))

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k, keeping the truncation degree."""
        if k < 0:
            raise ValueError("negative shift")
        n = self.truncation
        return TruncatedSeries((0,) * min(k, n + 1) + self.coeffs[: max(0, n + 1 - k)])

    def dilate(self, k: int) -> "TruncatedSeries":
        """Substitute t -> t^k, keeping the truncation degree."""
        if k < 1:
            raise ValueError("dilation factor must be >= 1")
        n = self.truncation
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if i * k > n:
                break
            out[i * k] = a
        return TruncatedSeries(tuple(out))

    def truncate(self, n: int) -> "TruncatedSeries":
        if n > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: n + 1])

    def __str__(self) -> str:
        return " + ".join(f"{c}*t^{k}" for k, c in enumerate(self.coeffs) if c) or "0"


def one(n: int) -> TruncatedSeries:
    return TruncatedSeries((1,) + (0,) * n)


def zero(n: int) -> TruncatedSeries:
    return TruncatedSeries((0,) * (n + 1))


def from_coeffs(coeffs: Iterable[int], n: int) -> TruncatedSeries:
    cs = list(coeffs)[: n + 1]
    return TruncatedSeries(tuple(cs) + (0,) * (n + 1 - len(cs)))


def geometric(d: int, n: int) -> TruncatedSeries:
    """1/(1 - t^d) truncated at degree n."""
    if d < 1:
        raise ValueError("generator degree must be >= 1")
    return TruncatedSeries(tuple(1 if k % d == 0 else 0 for k in range(n + 1)))


def product_free(degrees: Sequence[int], n: int) -> TruncatedSeries:
    """Product of 1/(1 - t^d) over the degree list, truncated at n."""
    out = [1] + [0] * n
    for d in degrees:
        if d < 1:
            raise ValueError("generator degree must be >= 1")
        for k in range(d, n + 1):
            out[k] += out[k - d]
    return TruncatedSeries(tuple(out))


def rational_inverse(coeffs: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    """Inverse of a rational power series (nonzero constant term) to degree n.

    Helper for Molien averaging, which works over Q before the integrality of
    the result is asserted.
    """
    c0 = Fraction(coeffs[0])
    if c0 == 0:
        raise ValueError("series is not invertible")
    cs = [Fraction(coeffs[k]) if k < len(coeffs) else Fraction(0) for k in range(n + 1)]
    inv = [Fraction(0)] * (n + 1)
    inv[0] = 1 / c0
    for k in range(1, n + 1):
        acc = sum(cs[j] * inv[k - j] for j in range(1, k + 1))
        inv[k] = -acc / c0
    return tuple(inv)
