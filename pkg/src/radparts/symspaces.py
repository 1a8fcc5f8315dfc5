"""
Irreducible symmetric pairs: root multiplicities, the nice / integral /
robust classification and semisimplicity of the associated Hecke algebras.

The rows live in ``data/table1.tsv``.  Root multiplicities are data taken
from the standard classification tables of symmetric spaces; everything
else in a record is either read back from the table (``x``, ``y``,
``verdict``) or derived from the multiplicities.

Multiplicities are recorded per root-length class as ``(m_alpha, m_2alpha)``
and ``k_alpha = (m_alpha + m_2alpha) / 2``.  The Hecke parameter of a class
is ``exp(2 pi i k_alpha)``; ``x`` belongs to the long (or only) class and
``y`` to the short class.

For type ``A_m`` the Hecke algebra is that of ``S_{m+1}`` with ``q = x``.
For ``B_m`` and ``C_m`` it is the Ariki-Koike algebra with ``ell = 2`` and
``n = m``: the class of the type-A generators supplies ``q`` and the other
class supplies the ``T_0`` eigenvalues ``(u, -1)``.  In ``B_m`` the long roots
``e_i +- e_j`` carry the type-A generators, in ``C_m`` the short ones do.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .arith import MINUS_ONE, CyclotomicUnit, cyc_from_angle, parse_unit
from .errors import DataIntegrity
from .hecke import ariki_semisimple

COLUMNS = ["label", "pair", "weyl_type", "ranks", "multiplicities", "x", "y",
           "verdict", "verdict_source"]
COMPUTABLE_FAMILIES = ("A", "B", "C")
DIAGONAL = "diagonal"


@dataclass(frozen=True)
class RootClass:
    name: str               # "all", "long" or "short"
    m_alpha: int
    m_2alpha: int

    @property
    def k(self) -> Fraction:
        return Fraction(self.m_alpha + self.m_2alpha, 2)


@dataclass(frozen=True)
class SymPairRecord:
    label: str
    pair_description: str
    weyl_type: str
    ranks: tuple[int, ...]
    classes: tuple[RootClass, ...]
    table_x: CyclotomicUnit
    table_y: Optional[CyclotomicUnit]
    table_verdict: bool
    verdict_source: str
    multiplicity_source: str = "classification tables of symmetric spaces"

    @property
    def family(self) -> str:
        return self.weyl_type[0]

    @property
    def k_values(self) -> tuple[Fraction, ...]:
        return tuple(c.k for c in self.classes)


@dataclass(frozen=True)
class RobustnessClass:
    nice: bool
    integral: bool
    robust: bool


@dataclass(frozen=True)
class HeckeVerdict:
    semisimple: bool
    source: str             # "computed" or "table"


DIAGONAL_RECORD = SymPairRecord(
    label=DIAGONAL,
    pair_description="(G x G, G), adjoint action",
    weyl_type="any",
    ranks=(),
    classes=(RootClass("all", 2, 0),),
    table_x=cyc_from_angle(0),
    table_y=None,
    table_verdict=True,
    verdict_source="computed",
)


def _parse_ranks(text: str) -> tuple[int, ...]:
    lo, _, hi = text.partition("-")
    return tuple(range(int(lo), int(hi or lo) + 1))


def _format_ranks(ranks: tuple[int, ...]) -> str:
    if len(ranks) == 1:
        return str(ranks[0])
    return f"{ranks[0]}-{ranks[-1]}"


def _parse_classes(text: str) -> tuple[RootClass, ...]:
    out = []
    for part in text.split(";"):
        name, _, nums = part.partition(":")
        a, b = (int(v) for v in nums.split(","))
        out.append(RootClass(name, a, b))
    return tuple(out)


def _format_classes(classes: tuple[RootClass, ...]) -> str:
    return ";".join(f"{c.name}:{c.m_alpha},{c.m_2alpha}" for c in classes)


def _parse_row(row: dict[str, str], lineno: int) -> SymPairRecord:
    try:
        rec = SymPairRecord(
            label=row["label"],
            pair_description=row["pair"],
            weyl_type=row["weyl_type"],
            ranks=_parse_ranks(row["ranks"]),
            classes=_parse_classes(row["multiplicities"]),
            table_x=parse_unit(row["x"]),
            table_y=None if row["y"] == "-" else parse_unit(row["y"]),
            table_verdict={"Y": True, "N": False}[row["verdict"]],
            verdict_source=row["verdict_source"],
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise DataIntegrity(f"line {lineno}: malformed row ({exc})") from exc
    _check_record(rec, lineno)
    return rec


def _check_record(rec: SymPairRecord, lineno: int) -> None:
    x, y = xy_from_k(rec)
    if x != rec.table_x or y != rec.table_y:
        raise DataIntegrity(
            f"line {lineno} ({rec.label}): exp(2 pi i k) = ({x}, {y}) "
            f"but the table stores ({rec.table_x}, {rec.table_y})")
    computable = rec.family in COMPUTABLE_FAMILIES
    if rec.verdict_source != ("computed" if computable else "table"):
        raise DataIntegrity(f"line {lineno} ({rec.label}): verdict source "
                            f"{rec.verdict_source!r} does not fit type {rec.weyl_type}")
    if rec.family in ("B", "C") and len(rec.classes) != 2:
        raise DataIntegrity(f"line {lineno} ({rec.label}): B/C rows need long and short classes")


def default_table_path() -> Path:
    return Path(str(resources.files("radparts") / "data" / "table1.tsv"))


def load_table(path: Union[str, Path, None] = None) -> list[SymPairRecord]:
    text = Path(path or default_table_path()).read_text(encoding="utf-8")
    reader = csv.DictReader(io.StringIO(text), delimiter="\t")
    if reader.fieldnames != COLUMNS:
        raise DataIntegrity(f"unexpected header {reader.fieldnames}")
    return [_parse_row(row, i + 2) for i, row in enumerate(reader)]


def dump_table(records: list[SymPairRecord]) -> str:
    """Serialize records back to the TSV format; ``load_table`` reads it losslessly."""
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(COLUMNS)
    for r in records:
        w.writerow([r.label, r.pair_description, r.weyl_type, _format_ranks(r.ranks),
                    _format_classes(r.classes), str(r.table_x),
                    "-" if r.table_y is None else str(r.table_y),
                    "Y" if r.table_verdict else "N", r.verdict_source])
    return buf.getvalue()


def find(label: str, records: Optional[list[SymPairRecord]] = None) -> SymPairRecord:
    if label == DIAGONAL:
        return DIAGONAL_RECORD
    for r in records if records is not None else load_table():
        if r.label == label:
            return r
    raise KeyError(label)


def classify(rec: SymPairRecord) -> RobustnessClass:
    ks = rec.k_values
    nice = all(k <= 1 for k in ks)
    integral = all(k.denominator == 1 for k in ks)
    return RobustnessClass(nice, integral, nice or integral)


def xy_from_k(rec: SymPairRecord) -> tuple[CyclotomicUnit, Optional[CyclotomicUnit]]:
    units = [cyc_from_angle(c.k) for c in rec.classes]
    return units[0], (units[1] if len(units) > 1 else None)


def _rank_semisimple(family: str, rank: int, x: CyclotomicUnit,
                     y: Optional[CyclotomicUnit]) -> bool:
    if family == "A":
        return ariki_semisimple(rank + 1, [cyc_from_angle(0)], x).semisimple
    if family == "B":
        return ariki_semisimple(rank, [y, MINUS_ONE], x).semisimple
    if family == "C":
        return ariki_semisimple(rank, [x, MINUS_ONE], y).semisimple
    raise ValueError(f"no Hecke computation for family {family}")


def verdict(rec: SymPairRecord) -> HeckeVerdict:
    if rec.label == DIAGONAL:
        # every parameter is 1, so the Hecke algebra is the group algebra
        return HeckeVerdict(rec.table_x.is_one(), "computed")
    if rec.family not in COMPUTABLE_FAMILIES:
        return HeckeVerdict(rec.table_verdict, "table")
    ok = all(_rank_semisimple(rec.family, m, rec.table_x, rec.table_y) for m in rec.ranks)
    return HeckeVerdict(ok, "computed")


def hc_semisimple_list(records: Optional[list[SymPairRecord]] = None) -> list[str]:
    records = load_table() if records is None else records
    return [r.label for r in [DIAGONAL_RECORD, *records] if verdict(r).semisimple]
