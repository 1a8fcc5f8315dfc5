"""
Parameter dictionaries for the cyclic quiver ``Q_ell`` with dimension vector
``n*(1,...,1)``.

A twist ``varsigma = (s_0, ..., s_{ell-1}; s_inf)`` determines

* the character ``chi_i = s_{i-1} - s_i``,
* the Cherednik parameter of ``W = Z_ell wr S_n``: the coordinate-hyperplane
  block ``kappa_{1,i} = s_i + (ell - i)/ell - [i == 0]`` and the transposition
  block ``kappa_{0,0} = kappa_{0,1} = s_inf + 1/2``,
* the cyclotomic Hecke parameters
  ``u_j = omega^{-j} exp(-2 pi i kappa_{1,j})``, ``q_0 = exp(-2 pi i kappa_{0,0})``,
  ``q_1 = -exp(-2 pi i kappa_{0,1})``.

All index arithmetic is modulo ``ell`` with representatives ``0..ell-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import CyclotomicUnit, RationalLike, as_rational, cyc_from_angle

HALF = Fraction(1, 2)


def _rationals(values: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


@dataclass(frozen=True)
class VarsigmaQuiver:
    ell: int
    entries: tuple[Fraction, ...]
    infinity: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "entries", _rationals(self.entries))
        object.__setattr__(self, "infinity", as_rational(self.infinity))
        if self.ell < 1:
            raise ValueError("ell must be positive")
        if len(self.entries) != self.ell:
            raise ValueError(f"expected {self.ell} twist entries, got {len(self.entries)}")

    @classmethod
    def of(cls, entries: Sequence[RationalLike], infinity: RationalLike = 0) -> VarsigmaQuiver:
        return cls(len(entries), tuple(entries), infinity)

    @classmethod
    def zero(cls, ell: int) -> VarsigmaQuiver:
        return cls(ell, (0,) * ell)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i % self.ell]


@dataclass(frozen=True)
class ChiVector:
    ell: int
    entries: tuple[Fraction, ...]

    def dot_delta(self) -> Fraction:
        """Pairing with the imaginary root ``(1, ..., 1)``."""
        return sum(self.entries, Fraction(0))


@dataclass(frozen=True)
class KappaZl:
    """Parameter of ``H_kappa(Z_ell)``; indices are read cyclically."""

    ell: int
    kappa: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "kappa", _rationals(self.kappa))
        if self.ell < 1 or len(self.kappa) != self.ell:
            raise ValueError(f"expected {self.ell} kappa entries, got {len(self.kappa)}")

    @classmethod
    def of(cls, kappa: Sequence[RationalLike]) -> KappaZl:
        return cls(len(kappa), tuple(kappa))

    def __getitem__(self, i: int) -> Fraction:
        return self.kappa[i % self.ell]


@dataclass(frozen=True)
class KappaWreath:
    ell: int
    n: int
    kappa00: Fraction
    kappa01: Fraction
    kappa1: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "kappa00", as_rational(self.kappa00))
        object.__setattr__(self, "kappa01", as_rational(self.kappa01))
        object.__setattr__(self, "kappa1", _rationals(self.kappa1))
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.ell < 1 or len(self.kappa1) != self.ell:
            raise ValueError(f"expected {self.ell} entries in kappa1")

    def cyclic_part(self) -> KappaZl:
        return KappaZl(self.ell, self.kappa1)


@dataclass(frozen=True)
class HeckeParams:
    """Eigenvalue data of ``T_0`` (the ``u``) and of ``T_1..T_{n-1}`` (``q0``, ``q1``)."""

    ell: int
    n: int
    u: tuple[CyclotomicUnit, ...]
    q0: CyclotomicUnit
    q1: CyclotomicUnit

    def __post_init__(self):
        if len(self.u) != self.ell:
            raise ValueError(f"expected {self.ell} u-parameters")


def chi_from_varsigma(v: VarsigmaQuiver) -> ChiVector:
    return ChiVector(v.ell, tuple(v[i - 1] - v[i] for i in range(v.ell)))


def _kappa1_block(v: VarsigmaQuiver) -> tuple[Fraction, ...]:
    ell = v.ell
    return tuple(v[i] + Fraction(ell - i, ell) - (1 if i == 0 else 0) for i in range(ell))


def kappa_rank1(v: VarsigmaQuiver) -> KappaZl:
    """``n = 1`` dictionary; ``v.infinity`` plays no role."""
    return KappaZl(v.ell, _kappa1_block(v))


def kappa_wreath(v: VarsigmaQuiver, n: int) -> KappaWreath:
    k0 = v.infinity + HALF
    return KappaWreath(v.ell, n, k0, k0, _kappa1_block(v))


def kappa_weighted_line(n: int, s1: RationalLike, s2: RationalLike) -> KappaZl:
    """
    Parameter of ``A_kappa(Z_{n+1})`` for ``C^*`` acting on ``C^2`` with
    weights ``(n, -1)``, twists ``s1`` on the weight-``n`` coordinate and
    ``s2`` on the weight ``-1`` coordinate::

        kappa_i = (s1 - 1)/n + i/(n(n+1))   for 0 <= i < n
        kappa_n = s2

    With this assignment the simplicity test reproduces the explicit
    inequalities in ``6*s2 - 3*s1`` for ``n = 2`` (see the tests); placing
    ``s2`` in the first block instead makes both sample twists simple.
    """
    if n < 1:
        raise ValueError("n must be positive")
    s1, s2 = as_rational(s1), as_rational(s2)
    block = [(s1 - 1) / n + Fraction(i, n * (n + 1)) for i in range(n)]
    return KappaZl(n + 1, tuple(block) + (s2,))


def hecke_from_kappa(k: KappaWreath) -> HeckeParams:
    ell = k.ell
    u = tuple(cyc_from_angle(Fraction(-j, ell) - k.kappa1[j]) for j in range(ell))
    q0 = cyc_from_angle(-k.kappa00)
    q1 = cyc_from_angle(HALF - k.kappa01)
    return HeckeParams(ell, k.n, u, q0, q1)


def framed_example_varsigma(ell: int) -> VarsigmaQuiver:
    """Twist ``s_inf = -1/2``, ``s_i = (i - ell)/ell + [i == 0]``, for which every kappa vanishes."""
    entries = tuple(Fraction(i - ell, ell) + (1 if i == 0 else 0) for i in range(ell))
    return VarsigmaQuiver(ell, entries, Fraction(-1, 2))
