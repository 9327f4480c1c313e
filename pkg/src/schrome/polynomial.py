"""Exact integer polynomials in one variable ``r`` and the falling-factorial basis."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import InvalidInput


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients, ``coeffs[i]`` of ``r**i``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (coeff,))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def falling_factorial(cls, i: int) -> IntPolynomial:
        """``[r]_i = r(r-1)...(r-i+1)``; ``[r]_0 = 1``."""
        return cls(_falling_coeffs(i))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def divide_by_r(self) -> IntPolynomial:
        """Exact division by ``r``; raises :class:`InvalidInput` if the constant term is nonzero."""
        if self.coeff(0) != 0:
            raise InvalidInput(f"{self} is not divisible by r")
        return IntPolynomial(self.coeffs[1:])

    def __call__(self, r: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    evaluate = __call__

    def to_falling(self) -> FallingFactorialForm:
        """Rewrite in the falling-factorial basis using ``r^n = sum_k S(n,k) [r]_k``."""
        out: dict[int, int] = {}
        for n, c in enumerate(self.coeffs):
            if c:
                for k in range(n + 1):
                    v = _stirling2(n, k)
                    if v:
                        out[k] = out.get(k, 0) + c * v
        return FallingFactorialForm({k: v for k, v in out.items() if v})

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({str(self)!r})"


def format_poly(coeffs: tuple[int, ...], var: str = "r") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def _falling_coeffs(i: int) -> tuple[int, ...]:
    coeffs = [1]
    for j in range(i):
        # multiply by (r - j)
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= j * c
        coeffs = nxt
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return _stirling2(n - 1, k - 1) + k * _stirling2(n - 1, k)


@dataclass(frozen=True)
class FallingFactorialForm:
    """``sum_i coefficients[i] * [r]_i``; zero coefficients are dropped."""

    coefficients: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(i): int(c) for i, c in self.coefficients.items() if c}
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    @property
    def min_index(self) -> int:
        return min(self.coefficients) if self.coefficients else 0

    @property
    def max_index(self) -> int:
        return max(self.coefficients) if self.coefficients else 0

    def support(self) -> list[int]:
        """Coefficients over ``min_index..max_index`` including any internal zeros."""
        return [self.coefficients.get(i, 0) for i in range(self.min_index, self.max_index + 1)]

    def to_power_basis(self) -> IntPolynomial:
        acc = IntPolynomial()
        for i, c in self.coefficients.items():
            acc = acc + IntPolynomial.falling_factorial(i) * c
        return acc

    def evaluate(self, r: int) -> int:
        total = 0
        for i, c in self.coefficients.items():
            ff = 1
            for j in range(i):
                ff *= r - j
            total += c * ff
        return total

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in self.coefficients.items():
            parts.append(f"[r]_{i}" if c == 1 else f"{c}[r]_{i}")
        return " + ".join(parts).replace("+ -", "- ")


def to_power_basis(ff: FallingFactorialForm) -> IntPolynomial:
    return ff.to_power_basis()


def evaluate(poly: IntPolynomial | FallingFactorialForm, r: int) -> int:
    return poly.evaluate(r)
