"""
Simplicity of ``H_kappa(Z_ell)``, of its spherical subalgebra
``A_kappa(Z_ell)`` and of ``A_kappa(Z_ell wr S_n)``.

Both closed-form tests quantify over infinitely many integers ``m`` (or
``j``), but the left-hand side ``ell*(kappa_p - kappa_{p+m})`` only depends
on ``m mod ell``.  For each residue ``r`` in ``1..ell`` the left side is a
single constant ``c``, and a violation at residue ``r`` exists iff ``c`` is an
integer with ``c == r (mod ell)`` that also clears the lower bound on ``m``;
the violating ``m`` is then ``c`` itself.  So each index needs at most
``ell`` checks.

``standard_module_oracle`` decides the same questions from the standard
modules ``M(tau_i) = C[x] (x) tau_i`` by scanning degrees directly, and is
used to cross-check the closed forms.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import PreconditionViolation
from .params import KappaWreath, KappaZl, VarsigmaQuiver, kappa_rank1, kappa_weighted_line


@dataclass(frozen=True)
class Witness:
    """A violated inequality: at index ``i`` the integer ``m`` is hit by ``value``."""

    i: int
    m: int
    value: Fraction


@dataclass
class Verdict:
    ok: bool
    witnesses: list[Witness] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class SimplicityVerdict:
    h_simple: bool
    a_simple: bool
    witnesses: dict[str, list[Witness]]


def _violations(k: KappaZl, shift: int, lower_bound) -> list[Witness]:
    ell = k.ell
    out = []
    for i in range(ell):
        p = (i + shift) % ell
        bound = lower_bound(i)
        for r in range(1, ell + 1):
            c = ell * (k[p] - k[p + r])
            if c.denominator == 1 and c >= bound and (c.numerator - r) % ell == 0:
                out.append(Witness(i, c.numerator, c))
    return out


def h_simple_cyclic(k: KappaZl) -> Verdict:
    """``H_kappa(Z_ell)`` is simple iff ``ell*(kappa_i - kappa_{i+m}) != m`` for all ``i`` and ``m >= 1``."""
    w = _violations(k, 0, lambda i: 1)
    return Verdict(not w, w)


def a_simple_cyclic(k: KappaZl) -> Verdict:
    """
    ``A_kappa(Z_ell)`` is simple iff ``ell*(kappa_{i+1} - kappa_{i+1+j}) != j``
    for every ``0 <= i < ell`` and every integer ``j >= ell - i``.
    """
    w = _violations(k, 1, lambda i: k.ell - i)
    return Verdict(not w, w)


def a_simple_varsigma(v: VarsigmaQuiver) -> Verdict:
    """No ordered pair of twist entries may differ by a positive integer."""
    w = []
    for i, si in enumerate(v.entries):
        for j, sj in enumerate(v.entries):
            d = si - sj
            if d.denominator == 1 and d >= 1:
                w.append(Witness(i, j, d))
    return Verdict(not w, w)


def a_simple_wreath(k: KappaWreath) -> Verdict:
    if k.kappa00 != k.kappa01:
        raise PreconditionViolation(
            f"tensor reduction needs kappa00 == kappa01, got {k.kappa00} != {k.kappa01}")
    return a_simple_cyclic(k.cyclic_part())


def simplicity_verdict(k: KappaZl) -> SimplicityVerdict:
    h, a = h_simple_cyclic(k), a_simple_cyclic(k)
    return SimplicityVerdict(h.ok, a.ok, {"h": h.witnesses, "a": a.witnesses})


@dataclass(frozen=True)
class StandardModuleReport:
    tau_index: int
    dim_L: Optional[int]        # None encodes an infinite-dimensional L(tau_i)
    e_nonzero: bool

    @property
    def finite(self) -> bool:
        return self.dim_L is not None


@dataclass
class OracleResult:
    reports: list[StandardModuleReport]
    h_simple: bool
    a_simple: bool


def y_coefficient(k: KappaZl, i: int, a: int) -> Fraction:
    """Scalar in ``y . (x^a (x) tau_i) = c * x^(a-1) (x) tau_i``."""
    return a + k.ell * (k[i + a] - k[i])


def standard_module_oracle(k: KappaZl) -> OracleResult:
    """
    Brute-force scan of the standard modules.

    A singular vector ``x^a (x) tau_i`` needs ``a = ell*(kappa_i - kappa_{i+a})``,
    so ``a`` never exceeds ``ell * (max kappa - min kappa)``; every degree up to
    that bound is tried.  ``e`` projects onto degrees ``d`` with
    ``d == -i (mod ell)``, and ``eL(tau_i) != 0`` iff such a degree lies below
    the first singular degree.
    """
    ell = k.ell
    spread = ell * (max(k.kappa) - min(k.kappa))
    top = math.floor(spread)
    scaled = [ell * x for x in k.kappa]
    reports = []
    for i in range(ell):
        dim = None
        base = scaled[i]
        for a in range(1, top + 1):
            # y_coefficient(k, i, a) == 0, inlined for the bulk sweeps
            if base - scaled[(i + a) % ell] == a:
                dim = a
                break
        e_nonzero = dim is not None and any((d + i) % ell == 0 for d in range(dim))
        reports.append(StandardModuleReport(i, dim, e_nonzero))
    h_simple = not any(r.finite for r in reports)
    a_simple = not any(r.finite and r.e_nonzero for r in reports)
    return OracleResult(reports, h_simple, a_simple)


def reproduce_weighted_line() -> tuple[bool, bool]:
    """Spherical simplicity at twists ``(-1/3, -1)`` and ``(1/3, 1)`` for weights ``(2, -1)``."""
    first = a_simple_cyclic(kappa_weighted_line(2, Fraction(-1, 3), Fraction(-1)))
    second = a_simple_cyclic(kappa_weighted_line(2, Fraction(1, 3), Fraction(1)))
    return first.ok, second.ok


def random_kappa(rng: random.Random, max_ell: int = 6, max_den: int = 12,
                 num_range: int = 24) -> KappaZl:
    ell = rng.randint(1, max_ell)
    # half the draws share one denominator so that integral differences, and
    # hence non-simple parameters, are common
    if rng.random() < 0.5:
        den = rng.randint(1, max_den)
        dens = [den] * ell
    else:
        dens = [rng.randint(1, max_den) for _ in range(ell)]
    return KappaZl(ell, tuple(Fraction(rng.randint(-num_range, num_range), d) for d in dens))


def oracle_sweep(count: int, seed: int = 0, max_ell: int = 6, max_den: int = 12) -> list[KappaZl]:
    """Return every sampled parameter on which closed forms and oracle disagree."""
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        k = random_kappa(rng, max_ell, max_den)
        o = standard_module_oracle(k)
        if (h_simple_cyclic(k).ok, a_simple_cyclic(k).ok) != (o.h_simple, o.a_simple):
            bad.append(k)
    return bad


def varsigma_form_agrees(v: VarsigmaQuiver) -> bool:
    return a_simple_varsigma(v).ok == a_simple_cyclic(kappa_rank1(v)).ok
