"""
Discriminants and semi-invariants of ``W = Z_ell wr S_n`` acting on
``h = C^n`` with coordinates ``x_1..x_n``.

Reflecting hyperplanes come in two classes: ``x_i = 0`` (order ``ell``,
present only when ``ell >= 2``) and ``x_i = w^k x_j`` (order 2, present only
when ``n >= 2``), where ``w = exp(2 pi i / ell)``.  The ``ell`` hyperplanes
over a fixed pair ``i < j`` multiply to the rational polynomial
``x_i^ell - x_j^ell``; ``grouped_reflection_factor`` checks that identity by
expanding over ``Q(w)`` so that all stored polynomials stay rational.

>>> print(delta_restricted(2, 2))
x1^6*x2^2 - 2*x1^4*x2^4 + x1^2*x2^6
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Optional, Union

from .arith import CyclotomicUnit, as_rational, cyc_from_angle, format_rational

Scalar = Union[int, Fraction]


class SparsePoly:
    """Polynomial with rational coefficients in ``nvars`` commuting variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[tuple[int, ...], Scalar]] = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars or any(v < 0 for v in e):
                raise ValueError(f"bad exponent vector {e}")
            c = as_rational(c)
            if c:
                clean[tuple(e)] = c
        self.terms: dict[tuple[int, ...], Fraction] = clean

    @classmethod
    def const(cls, c: Scalar, nvars: int) -> SparsePoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int, power: int = 1) -> SparsePoly:
        """``x_{i+1}^power`` (zero-based index)."""
        return cls(nvars, {tuple(power if j == i else 0 for j in range(nvars)): 1})

    def __add__(self, other: SparsePoly) -> SparsePoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.nvars, out)

    def __neg__(self) -> SparsePoly:
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return self + (-other)

    def __mul__(self, other: Union[SparsePoly, int, Fraction]) -> SparsePoly:
        if not isinstance(other, SparsePoly):
            return SparsePoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SparsePoly:
        out = SparsePoly.const(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePoly) and (self.nvars, self.terms) == (other.nvars, other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def substitute_powers(self, ell: int) -> SparsePoly:
        """Replace every ``x_i`` by ``x_i^ell``."""
        return SparsePoly(self.nvars, {tuple(ell * v for v in e): c for e, c in self.terms.items()})

    def permute(self, perm: tuple[int, ...]) -> SparsePoly:
        """Rename ``x_i`` to ``x_{perm[i]}``."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, v in enumerate(e):
                new[perm[i]] = v
            out[tuple(new)] = c
        return SparsePoly(self.nvars, out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def leading_coefficient(self) -> Fraction:
        return self.sorted_terms()[0][1]

    def proportional_to(self, other: SparsePoly) -> Optional[Fraction]:
        """The scalar ``s`` with ``self == s * other``, or ``None``."""
        if self.is_zero() or other.is_zero():
            return None
        s = self.leading_coefficient() / other.leading_coefficient()
        return s if self == other * s else None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i + 1}" + (f"^{v}" if v > 1 else "") for i, v in enumerate(e) if v)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            else:
                body = format_rational(mag)
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append((" + " if c > 0 else " - ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars}, {str(self)!r})"


def _monomial_product(n: int, power: int) -> SparsePoly:
    return SparsePoly(n, {(power,) * n: 1})


def _pair_difference(ell: int, n: int, i: int, j: int) -> SparsePoly:
    return SparsePoly.var(i, n, ell) - SparsePoly.var(j, n, ell)


def _grouped_reflection_product(ell: int, n: int) -> SparsePoly:
    out = SparsePoly.const(1, n)
    for i, j in itertools.combinations(range(n), 2):
        out = out * _pair_difference(ell, n, i, j) ** 2
    return out


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, cur = 0, start
        while cur not in seen:
            seen.add(cur)
            cur = perm[cur]
            length += 1
        sign *= -1 if length % 2 == 0 else 1
    return sign


def vandermonde(n: int) -> SparsePoly:
    """``det(x_i^(j-1))`` as a signed sum over permutations."""
    terms = {}
    for perm in itertools.permutations(range(n)):
        terms[perm] = _perm_sign(perm)
    return SparsePoly(n, terms)


def delta_restricted(ell: int, n: int) -> SparsePoly:
    """``(x_1...x_n)^ell * prod_{i<j} (x_i^ell - x_j^ell)^2``, via a squared Vandermonde in ``x^ell``."""
    if ell < 1 or n < 1:
        raise ValueError("ell and n must be positive")
    v = vandermonde(n).substitute_powers(ell)
    return _monomial_product(n, ell) * v * v


def delta_factorization_check(ell: int, n: int) -> bool:
    """``delta_i|_h = x_1...x_n`` for each of the ``ell`` vertices times ``delta_inf|_h`` gives ``delta|_h``."""
    product = SparsePoly.const(1, n)
    for _ in range(ell):
        product = product * _monomial_product(n, 1)
    product = product * _grouped_reflection_product(ell, n)
    return product == delta_restricted(ell, n)


# exact arithmetic in Q(w), w a primitive ell-th root of unity ----------------

def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Coefficient lists, lowest degree first."""
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        f = num[-1] / den[-1]
        q[shift] = f
        for k, c in enumerate(den):
            num[shift + k] -= f * c
        while num and num[-1] == 0:
            num.pop()
    return q, num


def cyclotomic_polynomial(m: int) -> list[Fraction]:
    """``Phi_m`` by dividing ``z^m - 1`` by ``Phi_d`` for the proper divisors ``d``."""
    poly = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    return poly


@dataclass(frozen=True)
class _CycField:
    modulus: tuple[Fraction, ...]

    def reduce(self, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
        _, rem = _poly_divmod(coeffs, list(self.modulus))
        rem = rem + [Fraction(0)] * (len(self.modulus) - 1 - len(rem))
        return tuple(rem)

    def mul(self, a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * (len(a) + len(b))
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return self.reduce(out)

    def power_of_generator(self, k: int) -> tuple[Fraction, ...]:
        return self.reduce([Fraction(0)] * k + [Fraction(1)])


def grouped_reflection_factor(ell: int) -> SparsePoly:
    """
    Expand ``prod_{k<ell} (y_1 - w^k y_2)`` over ``Q(w)`` and return it as a
    rational polynomial in two variables; raises if a coefficient is irrational.
    """
    field = _CycField(tuple(cyclotomic_polynomial(ell)))
    width = len(field.modulus) - 1
    one = field.reduce([Fraction(1)])
    zero = tuple([Fraction(0)] * width)
    # polynomial in y1, y2 stored as {(a, b): field element}
    poly: dict[tuple[int, int], tuple[Fraction, ...]] = {(0, 0): one}
    for k in range(ell):
        wk = field.power_of_generator(k)
        neg_wk = tuple(-c for c in wk)
        nxt: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for (a, b), c in poly.items():
            for (da, db), f in (((1, 0), one), ((0, 1), neg_wk)):
                key = (a + da, b + db)
                prod = field.mul(c, f)
                prev = nxt.get(key, zero)
                nxt[key] = tuple(p + q for p, q in zip(prev, prod))
        poly = nxt
    terms = {}
    for key, c in poly.items():
        if any(c[1:]):
            raise ArithmeticError("grouped hyperplane product has an irrational coefficient")
        terms[key] = c[0] if c else Fraction(0)
    return SparsePoly(2, terms)


def discriminant_h(ell: int, n: int) -> SparsePoly:
    """
    ``prod_H alpha_H^{ell_H}``: exponent ``ell`` on ``x_i = 0`` (a reflecting
    hyperplane only when ``ell >= 2``) and ``2`` on each ``x_i = w^k x_j``.
    """
    if ell < 1 or n < 1:
        raise ValueError("ell and n must be positive")
    out = SparsePoly.const(1, n)
    if ell >= 2:
        for i in range(n):
            out = out * SparsePoly.var(i, n, ell)
    pair = grouped_reflection_factor(ell)
    for i, j in itertools.combinations(range(n), 2):
        factor = SparsePoly(n, {})
        for (a, b), c in pair.terms.items():
            e = [0] * n
            e[i], e[j] = a, b
            factor = factor + SparsePoly(n, {tuple(e): c})
        out = out * factor ** 2
    return out


# semi-invariants ---------------------------------------------------------------

@dataclass(frozen=True)
class WreathCharacter:
    """
    Linear character of ``Z_ell wr S_n``: ``w^cyclic_power`` on the generator
    that multiplies ``x_1`` by ``w`` and ``sign`` on transpositions.
    """

    ell: int
    n: int
    cyclic_power: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.ell < 1 or self.n < 1:
            raise ValueError("ell and n must be positive")
        if not 0 <= self.cyclic_power < self.ell:
            raise ValueError(f"cyclic_power must lie in [0, {self.ell})")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.n == 1 and self.sign != 1:
            raise ValueError("there are no transpositions when n = 1")

    @classmethod
    def trivial(cls, ell: int, n: int) -> WreathCharacter:
        return cls(ell, n, 0, 1)

    @classmethod
    def inverse_determinant(cls, ell: int, n: int) -> WreathCharacter:
        """The character of ``prod_H alpha_H``."""
        return cls(ell, n, 1 if ell >= 2 else 0, -1 if n >= 2 else 1)

    def __mul__(self, other: WreathCharacter) -> WreathCharacter:
        if (self.ell, self.n) != (other.ell, other.n):
            raise ValueError("characters of different groups")
        return WreathCharacter(self.ell, self.n, (self.cyclic_power + other.cyclic_power) % self.ell,
                               self.sign * other.sign)


@dataclass(frozen=True)
class SemiInvariantData:
    coordinate_exponent: int            # on each x_i = 0
    reflection_exponent: Optional[int]  # on each x_i = w^k x_j; None when n = 1
    degree: int

    def as_map(self) -> dict[str, int]:
        out = {"coordinate": self.coordinate_exponent}
        if self.reflection_exponent is not None:
            out["reflection"] = self.reflection_exponent
        return out


def semiinvariant_exponents(chi: WreathCharacter) -> SemiInvariantData:
    c = chi.cyclic_power
    e = None if chi.n == 1 else (1 if chi.sign == -1 else 0)
    assert c <= chi.ell - 1 and (e is None or e <= 1)
    degree = chi.n * c + (chi.ell * comb(chi.n, 2) * e if e else 0)
    return SemiInvariantData(c, e, degree)


def semiinvariant_poly(chi: WreathCharacter) -> SparsePoly:
    data = semiinvariant_exponents(chi)
    out = _monomial_product(chi.n, data.coordinate_exponent)
    if data.reflection_exponent:
        for i, j in itertools.combinations(range(chi.n), 2):
            out = out * _pair_difference(chi.ell, chi.n, i, j)
    return out


def check_semiinvariant(h: SparsePoly, chi: WreathCharacter) -> bool:
    """``g . h = chi(g) h`` for the cyclic generator of the first slot and all adjacent transpositions."""
    if h.nvars != chi.n:
        raise ValueError("polynomial and character have different ranks")
    expected = cyc_from_angle(Fraction(chi.cyclic_power, chi.ell))
    # x_1 -> w x_1 scales each monomial by w^(x_1 exponent); monomials stay distinct
    for e in h.terms:
        if cyc_from_angle(Fraction(e[0], chi.ell)) != expected:
            return False
    for i in range(chi.n - 1):
        perm = list(range(chi.n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if h.permute(tuple(perm)) != h * chi.sign:
            return False
    return True


def verify_semiinvariance(chi: WreathCharacter, ell: Optional[int] = None,
                          n: Optional[int] = None) -> bool:
    if (ell is not None and ell != chi.ell) or (n is not None and n != chi.n):
        raise ValueError("character does not belong to this group")
    return check_semiinvariant(semiinvariant_poly(chi), chi)


def character_value_on_generator(chi: WreathCharacter) -> CyclotomicUnit:
    return cyc_from_angle(Fraction(chi.cyclic_power, chi.ell))
