"""
Composition and decomposition combinatorics of the Harish-Chandra module
``G_0`` over the cyclic quiver at ``varsigma = 0``.

For ``n = 1`` the simple subquotients are labelled ``L(J)`` by proper subsets
``J`` of ``{0, ..., ell-1}``, each occurring ``ell - |J|`` times; ``L(J)`` is
``delta``-torsion exactly when ``J`` is nonempty.  Subsets are
enumerated by size.

>>> total_length(3)
12
>>> [s.multiplicity for s in decompose_G0(2, 3)]
[1, 2, 1]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Optional

from .errors import ProperSubsetRequired
from .hecke import SemisimplicityVerdict, is_regular
from .params import VarsigmaQuiver, chi_from_varsigma


@dataclass(frozen=True, slots=True)
class CompositionFactor:
    subset_J: tuple[int, ...]       # sorted, proper subset of 0..ell-1
    multiplicity: int
    is_torsion: bool

    @property
    def label(self) -> str:
        if not self.subset_J:
            return "L(∅)"
        return "L({" + ",".join(str(j) for j in self.subset_J) + "})"


@dataclass(frozen=True)
class SummandRecord:
    partition: tuple[int, ...]
    multiplicity: int
    endomorphism_order: int


@dataclass(frozen=True)
class SerialProfile:
    regular_locus_length: int
    socle: str
    top: str
    endomorphism_order: int


@dataclass(frozen=True)
class FramedVerdict:
    chi_dot_delta: object
    semisimple: bool
    regular_hecke: SemisimplicityVerdict


def composition_multiset(ell: int) -> list[CompositionFactor]:
    """One factor per proper subset, ordered by size and then lexicographically."""
    if ell < 1:
        raise ValueError("ell must be positive")
    out = []
    for size in range(ell):
        mult, torsion = ell - size, size > 0
        out.extend(CompositionFactor(J, mult, torsion) for J in itertools.combinations(range(ell), size))
    return out


def total_length(ell: int) -> int:
    return ell * 2 ** (ell - 1)


def torsion_count(ell: int) -> int:
    """Number of ``delta``-torsion subfactors, counted with multiplicity."""
    return ell * (2 ** (ell - 1) - 1)


def remark_torsion_count(ell: int) -> int:
    """The alternative count ``(ell-1) 2^(ell-1)``; equal to ``torsion_count`` only for ``ell <= 2``."""
    return (ell - 1) * 2 ** (ell - 1)


def torsion_counts_agree(ell: int) -> bool:
    return torsion_count(ell) == remark_torsion_count(ell)


def localized_length(ell: int, J: Iterable[int]) -> int:
    """Length of ``G`` localized to the stratum of ``J``: ``ell - |J|``."""
    J = frozenset(J)
    if any(j < 0 or j >= ell for j in J):
        raise ValueError(f"subset {sorted(J)} is not inside 0..{ell - 1}")
    if len(J) == ell:
        raise ProperSubsetRequired("J must be a proper subset")
    return ell - len(J)


def serial_profile(ell: int) -> SerialProfile:
    if ell < 1:
        raise ValueError("ell must be positive")
    return SerialProfile(ell, "L(∅)", "L(∅)", ell)


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse-lexicographic order: ``(n)`` first, ``(1^n)`` last."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def hook_length_dim(shape: tuple[int, ...]) -> int:
    """Dimension of the Specht module for ``shape``."""
    n = sum(shape)
    conj = [sum(1 for r in shape if r > c) for c in range(shape[0])] if shape else []
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def decompose_G0(ell: int, n: int) -> list[SummandRecord]:
    if ell < 1 or n < 1:
        raise ValueError("ell and n must be positive")
    return [SummandRecord(p, hook_length_dim(p), ell) for p in partitions(n)]


def framed_quiver_verdict(v: VarsigmaQuiver, n: int) -> FramedVerdict:
    """``chi . delta`` telescopes to zero for every twist, so ``G_0`` is never semisimple."""
    dot = chi_from_varsigma(v).dot_delta()
    assert dot == 0, "chi . delta must telescope to zero"
    return FramedVerdict(dot, False, is_regular(v, n))
