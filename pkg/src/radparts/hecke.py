"""
Cyclotomic (Ariki-Koike) Hecke algebras of ``Z_ell wr S_n`` and their
semisimplicity.

The quadratic relation ``(T_i - q0)(T_i - q1) = 0`` is rescaled with
``L = -q1^{-1} T_i`` to ``(L - q)(L + 1) = 0``, ``q = -q0/q1``; the ``T_0``
eigenvalues ``u_r`` are kept as they are.  Ariki's criterion then says the
algebra is semisimple iff

* ``[k]_q = 1 + q + ... + q^(k-1) != 0`` for ``2 <= k <= n``, and
* ``q^d u_i != u_j`` for all ``i != j`` and ``|d| < n``.

For a root of unity ``q``, ``[k]_q`` vanishes exactly when ``q != 1`` and
``q^k = 1``, so no numerics are involved.  The algebra itself is never built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .arith import MINUS_ONE, CyclotomicUnit
from .params import HeckeParams, VarsigmaQuiver, hecke_from_kappa, kappa_wreath


@dataclass(frozen=True)
class ArikiKoikePresentation:
    ell: int
    n: int
    u: tuple[CyclotomicUnit, ...]
    q0: CyclotomicUnit
    q1: CyclotomicUnit
    normalized_q: CyclotomicUnit


@dataclass
class SemisimplicityVerdict:
    semisimple: bool
    # ("q-integer", k) or ("u-collision", i, j, d)
    witnesses: list[tuple] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.semisimple


@dataclass(frozen=True)
class HeckeStructure:
    """Shape of ``(C[t]/(t^ell))^{(x) n} x| S_n``."""

    truncation_order: int
    tensor_factors: int
    symmetric_group_rank: int
    dimension: int


def presentation_from_hecke_params(h: HeckeParams) -> ArikiKoikePresentation:
    q = MINUS_ONE * h.q0 * h.q1.inverse()
    return ArikiKoikePresentation(h.ell, h.n, tuple(h.u), h.q0, h.q1, q)


def q_integer_vanishes(q: CyclotomicUnit, k: int) -> bool:
    return not q.is_one() and (q ** k).is_one()


def ariki_semisimple(n: int, u: Sequence[CyclotomicUnit], q: CyclotomicUnit) -> SemisimplicityVerdict:
    witnesses: list[tuple] = []
    for k in range(2, n + 1):
        if q_integer_vanishes(q, k):
            witnesses.append(("q-integer", k))
    for i, ui in enumerate(u):
        for j, uj in enumerate(u):
            if i == j:
                continue
            for d in range(-(n - 1), n):
                if (q ** d) * ui == uj:
                    witnesses.append(("u-collision", i, j, d))
    return SemisimplicityVerdict(not witnesses, witnesses)


def is_semisimple(p: ArikiKoikePresentation) -> SemisimplicityVerdict:
    return ariki_semisimple(p.n, p.u, p.normalized_q)


def varsigma_zero_structure(ell: int, n: int) -> HeckeStructure:
    return HeckeStructure(ell, n, n, ell ** n * factorial(n))


def generic_dimension(ell: int, n: int) -> int:
    """``|Z_ell wr S_n|``."""
    return ell ** n * factorial(n)


def presentation_for(v: VarsigmaQuiver, n: int) -> ArikiKoikePresentation:
    return presentation_from_hecke_params(hecke_from_kappa(kappa_wreath(v, n)))


def is_regular(v: VarsigmaQuiver, n: int) -> SemisimplicityVerdict:
    return is_semisimple(presentation_for(v, n))
