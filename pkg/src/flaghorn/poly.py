"""Sparse integer polynomials in the variables x1, x2, x3, ...

A polynomial is a dict from exponent tuples (trailing zeros trimmed) to
nonzero integer coefficients, so (2, 1) -> 3 stands for 3*x1^2*x2.  All
arithmetic is exact over the integers.

The term order used by leading_term compares exponent vectors from the
rightmost position: the monomial with the larger exponent at the last
differing position wins.  Under this order the leading monomial of a
Schubert polynomial is the code of its permutation, which is what the
basis-expansion algorithm in the oracle module relies on.
"""

from __future__ import annotations

from collections.abc import Mapping

Monomial = tuple[int, ...]

__all__ = ["Monomial", "SparsePolynomial", "divided_difference"]


def _trim(exponents: tuple[int, ...]) -> Monomial:
    m = len(exponents)
    while m > 0 and exponents[m - 1] == 0:
        m -= 1
    return tuple(exponents[:m])


def _order_key(mono: Monomial, width: int) -> tuple[int, ...]:
    return tuple(reversed(mono + (0,) * (width - len(mono))))


class SparsePolynomial:
    """Immutable-by-convention sparse polynomial.

    >>> p = SparsePolynomial.variable(1) + SparsePolynomial.variable(2)
    >>> str(p * p)
    'x2^2 + 2*x1*x2 + x1^2'
    >>> (p - p).is_zero()
    True
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None) -> None:
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono!r}")
                if coeff:
                    key = _trim(tuple(mono))
                    clean[key] = clean.get(key, 0) + coeff
                    if not clean[key]:
                        del clean[key]
        self.terms = clean

    @classmethod
    def zero(cls) -> "SparsePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "SparsePolynomial":
        return cls({(): 1})

    @classmethod
    def constant(cls, c: int) -> "SparsePolynomial":
        return cls({(): c})

    @classmethod
    def variable(cls, i: int) -> "SparsePolynomial":
        """The variable x_i (1-based)."""
        if i < 1:
            raise ValueError("variables are numbered from 1")
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exponents: tuple[int, ...], coeff: int = 1) -> "SparsePolynomial":
        return cls({tuple(exponents): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = SparsePolynomial.constant(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def coefficient(self, mono: tuple[int, ...]) -> int:
        return self.terms.get(_trim(tuple(mono)), 0)

    def total_degree(self) -> int:
        """Largest total degree among the terms (0 for the zero polynomial)."""
        return max((sum(m) for m in self.terms), default=0)

    def __add__(self, other: "SparsePolynomial | int") -> "SparsePolynomial":
        if isinstance(other, int):
            other = SparsePolynomial.constant(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) + coeff
            if not out[mono]:
                del out[mono]
        result = SparsePolynomial.__new__(SparsePolynomial)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        result = SparsePolynomial.__new__(SparsePolynomial)
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __sub__(self, other: "SparsePolynomial | int") -> "SparsePolynomial":
        if isinstance(other, int):
            other = SparsePolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "SparsePolynomial":
        return SparsePolynomial.constant(other) - self

    def __mul__(self, other: "SparsePolynomial | int") -> "SparsePolynomial":
        if isinstance(other, int):
            result = SparsePolynomial.__new__(SparsePolynomial)
            result.terms = {m: c * other for m, c in self.terms.items()} if other else {}
            return result
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if len(m1) < len(m2):
                    m1_, m2_ = m2, m1
                else:
                    m1_, m2_ = m1, m2
                mono = tuple(
                    e + (m2_[i] if i < len(m2_) else 0) for i, e in enumerate(m1_)
                )
                out[mono] = out.get(mono, 0) + c1 * c2
                if not out[mono]:
                    del out[mono]
        result = SparsePolynomial.__new__(SparsePolynomial)
        result.terms = out
        return result

    __rmul__ = __mul__

    def swap_variables(self, i: int, j: int) -> "SparsePolynomial":
        """Exchange x_i and x_j (1-based) in every term."""
        if i < 1 or j < 1:
            raise ValueError("variables are numbered from 1")
        if i == j:
            return self
        width = max(i, j)
        out: dict[Monomial, int] = {}
        for mono, coeff in self.terms.items():
            e = list(mono) + [0] * (width - len(mono))
            e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
            out[_trim(tuple(e))] = coeff
        result = SparsePolynomial.__new__(SparsePolynomial)
        result.terms = out
        return result

    def leading_term(self) -> tuple[Monomial, int]:
        """The maximal term under the rightmost-position order."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        width = max(len(m) for m in self.terms)
        mono = max(self.terms, key=lambda m: _order_key(m, width))
        return mono, self.terms[mono]

    def _sorted_terms(self) -> list[tuple[Monomial, int]]:
        width = max((len(m) for m in self.terms), default=0)
        return sorted(
            self.terms.items(), key=lambda mc: _order_key(mc[0], width), reverse=True
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self._sorted_terms():
            factors = [
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(mono, start=1)
                if e
            ]
            body = "*".join(factors)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, text))
        first_sign, first_text = parts[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"SparsePolynomial({self})"


def _shift_variable(terms: dict[Monomial, int], index: int) -> dict[Monomial, int]:
    """Multiply a raw term dict by the variable with 0-based tuple index."""
    out: dict[Monomial, int] = {}
    for mono, coeff in terms.items():
        e = list(mono) + [0] * (index + 1 - len(mono))
        e[index] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + coeff
    return out


def _add_terms(a: dict[Monomial, int], b: dict[Monomial, int]) -> dict[Monomial, int]:
    out = dict(a)
    for mono, coeff in b.items():
        out[mono] = out.get(mono, 0) + coeff
        if not out[mono]:
            del out[mono]
    return out


def divided_difference(p: SparsePolynomial, i: int) -> SparsePolynomial:
    """The i-th divided difference: (p - p with x_i, x_{i+1} swapped)
    divided exactly by (x_i - x_{i+1}).

    The division is performed by synthetic division in x_i at the root
    x_{i+1}; the remainder must vanish (the numerator is antisymmetric in
    the two variables), and a nonzero remainder raises RuntimeError since
    it would signal an arithmetic bug.

    >>> x1 = SparsePolynomial.variable(1)
    >>> x2 = SparsePolynomial.variable(2)
    >>> str(divided_difference(x1 * x1 * x2, 2))
    'x1^2'
    >>> str(divided_difference(x1 * x1, 1))
    'x2 + x1'
    """
    if i < 1:
        raise ValueError("divided difference index must be at least 1")
    numerator = p - p.swap_variables(i, i + 1)
    if not numerator:
        return SparsePolynomial.zero()
    xi = i - 1
    xj = i
    by_power: dict[int, dict[Monomial, int]] = {}
    for mono, coeff in numerator.terms.items():
        k = mono[xi] if xi < len(mono) else 0
        e = list(mono) + [0] * (xi + 1 - len(mono))
        e[xi] = 0
        rest = _trim(tuple(e))
        level = by_power.setdefault(k, {})
        level[rest] = level.get(rest, 0) + coeff
    top = max(by_power)
    quotient_levels: dict[int, dict[Monomial, int]] = {}
    carry: dict[Monomial, int] = {}
    for k in range(top, 0, -1):
        carry = _add_terms(by_power.get(k, {}), _shift_variable(carry, xj))
        quotient_levels[k - 1] = carry
    remainder = _add_terms(by_power.get(0, {}), _shift_variable(carry, xj))
    if any(remainder.values()):
        raise RuntimeError("divided difference left a nonzero remainder")
    out: dict[Monomial, int] = {}
    for k, level in quotient_levels.items():
        for mono, coeff in level.items():
            if not coeff:
                continue
            e = list(mono) + [0] * (xi + 1 - len(mono))
            e[xi] += k
            key = _trim(tuple(e))
            out[key] = out.get(key, 0) + coeff
    return SparsePolynomial(out)
