"""Sparse Laurent polynomials with integer coefficients.

``LaurentPolynomial`` is univariate in ``t``; ``BivariateLaurent`` carries
paired exponents ``(s, m)`` for monomials ``t^s q^m``.  Zero coefficients are
never stored, so equality of the coefficient maps is polynomial equality.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping


def _clean(terms: Mapping) -> dict:
    return {k: int(v) for k, v in terms.items() if v}


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def _join(monomials: list[tuple[int, str]]) -> str:
    if not monomials:
        return "0"
    out = []
    for i, (c, mono) in enumerate(monomials):
        mag = abs(c)
        body = mono if mag == 1 and mono else (f"{mag} {mono}" if mono else str(mag))
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


class LaurentPolynomial:
    """Integer Laurent polynomial in one variable.

    >>> f = LaurentPolynomial({1: 1, 0: -1, -1: 1})
    >>> str(f)
    't^-1 - 1 + t'
    >>> f(1)
    1
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms = _clean(terms or {})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def from_exponents(cls, exponents: Iterable[tuple[int, int]]) -> "LaurentPolynomial":
        """Sum of ``sign * t^exponent`` over ``(sign, exponent)`` pairs."""
        acc: Counter = Counter()
        for sign, e in exponents:
            acc[e] += sign
        return cls(acc)

    def is_zero(self) -> bool:
        return not self.terms

    def min_degree(self) -> int:
        return min(self.terms)

    def max_degree(self) -> int:
        return max(self.terms)

    def shift(self, c: int) -> "LaurentPolynomial":
        """Multiply by ``t^c``."""
        return LaurentPolynomial({e + c: v for e, v in self.terms.items()})

    def invert(self) -> "LaurentPolynomial":
        """Substitute ``t -> t^-1``."""
        return LaurentPolynomial({-e: v for e, v in self.terms.items()})

    def is_palindromic(self) -> bool:
        return self.is_zero() or self.symmetrized().invert() == self.symmetrized()

    def symmetrized(self) -> "LaurentPolynomial":
        """Shift so the exponent support is centered on 0 (when that is integral)."""
        if self.is_zero():
            return self
        lo, hi = self.min_degree(), self.max_degree()
        if (lo + hi) % 2:
            return self
        return self.shift(-(lo + hi) // 2)

    def __call__(self, t):
        # exact for integer and Fraction arguments, negative powers included
        if isinstance(t, (int, Fraction)):
            total = sum(v * Fraction(t) ** e for e, v in self.terms.items())
            return int(total) if total.denominator == 1 else total
        return sum(v * t**e for e, v in self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        acc = Counter(self.terms)
        acc.update(other.terms)
        return LaurentPolynomial(acc)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -v for e, v in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({e: v * other for e, v in self.terms.items()})
        acc: Counter = Counter()
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                acc[e1 + e2] += v1 * v2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def to_list(self) -> list[list[int]]:
        return [[e, self.terms[e]] for e in sorted(self.terms)]

    @classmethod
    def from_list(cls, pairs) -> "LaurentPolynomial":
        return cls({int(e): int(c) for e, c in pairs})

    def __str__(self) -> str:
        return _join([(self.terms[e], _power("t", e)) for e in sorted(self.terms)])

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.terms!r})"


class BivariateLaurent:
    """Integer Laurent polynomial in ``t`` and ``q``; keys are ``(s, m)`` for ``t^s q^m``.

    Printing lists monomials in ascending ``s``, then ascending ``m``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = _clean(terms or {})

    def is_zero(self) -> bool:
        return not self.terms

    def at_q(self, q: int) -> LaurentPolynomial:
        acc: Counter = Counter()
        for (s, m), c in self.terms.items():
            # q = -1 and q = 1 are the cases that matter; keep it exact for any int q
            if m >= 0:
                acc[s] += c * q**m
            else:
                if q not in (1, -1):
                    raise ValueError("negative q-powers only evaluate exactly at q = +-1")
                acc[s] += c * q ** (-m)
        return LaurentPolynomial(acc)

    def invert(self) -> "BivariateLaurent":
        """Substitute ``(t, q) -> (t^-1, q^-1)``."""
        return BivariateLaurent({(-s, -m): c for (s, m), c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateLaurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BivariateLaurent") -> "BivariateLaurent":
        acc = Counter(self.terms)
        acc.update(other.terms)
        return BivariateLaurent(acc)

    def to_list(self) -> list[list[int]]:
        return [[s, m, self.terms[(s, m)]] for s, m in sorted(self.terms)]

    @classmethod
    def from_list(cls, triples) -> "BivariateLaurent":
        return cls({(int(s), int(m)): int(c) for s, m, c in triples})

    def __str__(self) -> str:
        monos = []
        for s, m in sorted(self.terms):
            mono = " ".join(p for p in (_power("t", s), _power("q", m)) if p)
            monos.append((self.terms[(s, m)], mono))
        return _join(monos)

    def __repr__(self) -> str:
        return f"BivariateLaurent({self.terms!r})"


def laurent_equiv(f: LaurentPolynomial, g: LaurentPolynomial) -> bool:
    """True iff ``f = +-t^c g`` for some integer ``c``.

    Both zero counts as equivalent.

    >>> laurent_equiv(LaurentPolynomial({2: 1, 1: -1, 0: 1}), LaurentPolynomial({0: -1, -1: 1, -2: -1}))
    True
    """
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    c = f.min_degree() - g.min_degree()
    h = g.shift(c)
    return f == h or f == -h
