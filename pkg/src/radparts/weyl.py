"""
Exact arithmetic in the Weyl algebra ``C<x_0..x_{k-1}, d_0..d_{k-1}>``.

Elements are sparse maps from normal-ordered monomials
``x^a d^b`` (all ``x`` to the left) to nonzero rationals.  Products are
normal-ordered with the Leibniz rule

    d_i^p x_i^q = sum_t C(p,t) C(q,t) t! x_i^(q-t) d_i^(p-t)

and different variables commute.

Left-ideal membership is decided only up to a Bernstein-degree bound: all
products ``m * g`` with ``m`` a monomial and ``deg(m) + deg(g) <= bound`` are
row-reduced exactly, and the target is either written as a combination of
them (``Member``, with a replayable certificate) or not found
(``Inconclusive``).  The search never claims non-membership.

>>> x0, d0 = WeylElement.x(0, 1), WeylElement.d(0, 1)
>>> print(d0 * x0)
x0*d0 + 1
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Mapping, Optional, Sequence, Union

from .arith import as_rational, format_rational
from .errors import BoundTooSmall, ParseError, VarCountMismatch
from .params import VarsigmaQuiver

Exps = tuple[int, ...]
MonoKey = tuple[Exps, Exps]
Scalar = Union[int, Fraction]

MEMBER = "Member"
INCONCLUSIVE = "Inconclusive"


@lru_cache(maxsize=None)
def _commute_powers(p: int, q: int) -> tuple[tuple[int, int], ...]:
    """``d^p x^q`` as ``((t, coeff), ...)`` meaning ``coeff * x^(q-t) d^(p-t)``."""
    return tuple((t, comb(p, t) * comb(q, t) * factorial(t)) for t in range(min(p, q) + 1))


@lru_cache(maxsize=200_000)
def _mono_product(a: MonoKey, b: MonoKey) -> tuple[tuple[MonoKey, int], ...]:
    (xa, da), (xb, db) = a, b
    per_var = [_commute_powers(p, q) for p, q in zip(da, xb)]
    out: dict[MonoKey, int] = {}
    for choice in itertools.product(*per_var):
        coeff = 1
        xs, ds = [], []
        for i, (t, c) in enumerate(choice):
            coeff *= c
            xs.append(xa[i] + xb[i] - t)
            ds.append(da[i] + db[i] - t)
        key = (tuple(xs), tuple(ds))
        out[key] = out.get(key, 0) + coeff
    return tuple(out.items())


def mono_degree(key: MonoKey) -> int:
    return sum(key[0]) + sum(key[1])


def grlex_key(key: MonoKey) -> tuple:
    """Graded lexicographic key on the concatenated ``(x, d)`` exponent vector."""
    return (mono_degree(key), key[0] + key[1])


class WeylElement:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[MonoKey, Scalar]] = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        clean: dict[MonoKey, Fraction] = {}
        for (xe, de), c in (terms or {}).items():
            if len(xe) != nvars or len(de) != nvars:
                raise ValueError("exponent vector length does not match nvars")
            if any(e < 0 for e in xe + de):
                raise ValueError("negative exponents are not allowed in the Weyl algebra")
            c = as_rational(c)
            if c:
                clean[(tuple(xe), tuple(de))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict[MonoKey, Fraction]) -> WeylElement:
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> WeylElement:
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c: Scalar, nvars: int) -> WeylElement:
        z = (0,) * nvars
        return cls(nvars, {(z, z): c})

    @classmethod
    def monomial(cls, xe: Sequence[int], de: Sequence[int], c: Scalar = 1) -> WeylElement:
        return cls(len(xe), {(tuple(xe), tuple(de)): c})

    @classmethod
    def x(cls, i: int, nvars: int) -> WeylElement:
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return cls.monomial(e, (0,) * nvars)

    @classmethod
    def d(cls, i: int, nvars: int) -> WeylElement:
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return cls.monomial((0,) * nvars, e)

    # arithmetic

    def _check(self, other: WeylElement):
        if other.nvars != self.nvars:
            raise VarCountMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> Optional[WeylElement]:
        if isinstance(other, WeylElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return WeylElement.const(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return WeylElement._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement._raw(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c: Scalar) -> WeylElement:
        c = as_rational(c)
        if not c:
            return WeylElement.zero(self.nvars)
        return WeylElement._raw(self.nvars, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        self._check(other)
        out: dict[MonoKey, Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                cab = ca * cb
                for key, c in _mono_product(ka, kb):
                    out[key] = out.get(key, 0) + cab * c
        return WeylElement._raw(self.nvars, {k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> WeylElement:
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = WeylElement.const(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    # comparison and inspection

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = WeylElement.const(other, self.nvars)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Bernstein degree; ``-1`` for zero."""
        return max((mono_degree(k) for k in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[MonoKey, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key, c in self.sorted_terms():
            body = _mono_str(key)
            mag = abs(c)
            if body and mag == 1:
                s = body
            elif body:
                s = f"{format_rational(mag)}*{body}"
            else:
                s = format_rational(mag)
            if not pieces:
                pieces.append(s if c > 0 else f"-{s}")
            else:
                pieces.append(f" + {s}" if c > 0 else f" - {s}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"WeylElement({self.nvars}, {str(self)!r})"


def _mono_str(key: MonoKey) -> str:
    xe, de = key
    parts = []
    for name, exps in (("x", xe), ("d", de)):
        for i, e in enumerate(exps):
            if e == 1:
                parts.append(f"{name}{i}")
            elif e > 1:
                parts.append(f"{name}{i}^{e}")
    return "*".join(parts)


def commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b - b * a


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b


# expression parsing ---------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([xd]\d)|(.))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif ident is not None:
            tokens.append(("var", ident))
        elif op in "+-*^()":
            tokens.append(("op", op))
        else:
            raise ParseError(f"unexpected character {op!r} in {text!r}")
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]], nvars: int):
        self.toks = tokens
        self.pos = 0
        self.nvars = nvars

    def peek(self) -> Optional[tuple[str, str]]:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def expr(self) -> WeylElement:
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> WeylElement:
        acc = self.unary()
        while self.peek() == ("op", "*"):
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self) -> WeylElement:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> WeylElement:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be a nonnegative integer")
            base = base ** int(val)
        return base

    def atom(self) -> WeylElement:
        kind, val = self.take()
        if kind == "num":
            num, _, den = val.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator")
            return WeylElement.const(Fraction(int(num), int(den) if den else 1), self.nvars)
        if kind == "var":
            i = int(val[1])
            if i >= self.nvars:
                raise ParseError(f"{val} is out of range for {self.nvars} variables")
            return WeylElement.x(i, self.nvars) if val[0] == "x" else WeylElement.d(i, self.nvars)
        if val == "(":
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError("unbalanced parentheses")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def infer_nvars(*texts: str) -> int:
    idx = [int(m) for t in texts for m in re.findall(r"[xd](\d)", t)]
    return max(idx, default=0) + 1


def parse_weyl(text: str, nvars: Optional[int] = None) -> WeylElement:
    """Parse ``x0..x9``, ``d0..d9``, integers, ``a/b``, ``+ - * ^`` and parentheses."""
    if nvars is None:
        nvars = infer_nvars(text)
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    p = _Parser(tokens, nvars)
    out = p.expr()
    if p.peek() is not None:
        raise ParseError(f"trailing input at token {p.peek()[1]!r}")
    return out


# bounded-degree left-ideal membership ----------------------------------------

def monomials_up_to(nvars: int, max_degree: int) -> Iterator[MonoKey]:
    """All ``x^a d^b`` in ``nvars`` variables with ``|a| + |b| <= max_degree``."""
    width = 2 * nvars

    def rec(prefix: list[int], remaining: int, slots: int):
        if slots == 0:
            yield tuple(prefix)
            return
        for e in range(remaining + 1):
            prefix.append(e)
            yield from rec(prefix, remaining - e, slots - 1)
            prefix.pop()

    if max_degree < 0:
        return
    for flat in rec([], max_degree, width):
        yield (flat[:nvars], flat[nvars:])


@dataclass
class MembershipCertificate:
    verdict: str
    bound_used: int
    target: WeylElement
    gens: list[WeylElement]
    combination: list[tuple[WeylElement, int]] = field(default_factory=list)

    @property
    def is_member(self) -> bool:
        return self.verdict == MEMBER

    def replay(self) -> WeylElement:
        total = WeylElement.zero(self.target.nvars)
        for mult, gi in self.combination:
            total = total + mult * self.gens[gi]
        return total

    def verify(self) -> bool:
        return self.is_member and self.replay() == self.target

    def to_text(self) -> str:
        lines = [
            f"# verdict: {self.verdict}",
            f"# bound: {self.bound_used}",
            f"# nvars: {self.target.nvars}",
            f"# target: {self.target}",
        ]
        lines += [f"# g{i}: {g}" for i, g in enumerate(self.gens)]
        lines += [f"{mult} ⊗ g{gi}" for mult, gi in self.combination]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> MembershipCertificate:
        header: dict[str, str] = {}
        gens: dict[int, str] = {}
        pairs: list[tuple[str, int]] = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, val = line[1:].partition(":")
                key, val = key.strip(), val.strip()
                if re.fullmatch(r"g\d+", key):
                    gens[int(key[1:])] = val
                else:
                    header[key] = val
            else:
                mult, _, gi = line.rpartition("⊗")
                pairs.append((mult.strip(), int(gi.strip()[1:])))
        k = int(header["nvars"])
        gen_list = [parse_weyl(gens[i], k) for i in sorted(gens)]
        return cls(header["verdict"], int(header["bound"]), parse_weyl(header["target"], k),
                   gen_list, [(parse_weyl(m, k), gi) for m, gi in pairs])


class _Echelon:
    """Incremental sparse row echelon form over Q, keyed by grlex leading monomial."""

    def __init__(self):
        self.pivots: dict[MonoKey, tuple[dict[MonoKey, Fraction], dict[int, Fraction]]] = {}

    @staticmethod
    def _lead(vec: dict[MonoKey, Fraction]) -> MonoKey:
        return max(vec, key=grlex_key)

    def reduce(self, vec: dict[MonoKey, Fraction], combo: dict[int, Fraction]):
        """Cancel leading terms against pivots; returns the residue and its combination."""
        vec, combo = dict(vec), dict(combo)
        while vec:
            lead = self._lead(vec)
            piv = self.pivots.get(lead)
            if piv is None:
                break
            pvec, pcombo = piv
            f = vec[lead] / pvec[lead]
            for k, c in pvec.items():
                s = vec.get(k, 0) - f * c
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
            for k, c in pcombo.items():
                s = combo.get(k, 0) - f * c
                if s:
                    combo[k] = s
                else:
                    combo.pop(k, None)
        return vec, combo

    def add(self, vec: dict[MonoKey, Fraction], tag: int) -> None:
        vec, combo = self.reduce(vec, {tag: Fraction(1)})
        if vec:
            self.pivots[self._lead(vec)] = (vec, combo)


def ideal_member(target: WeylElement, gens: Sequence[WeylElement],
                 bound: Optional[int] = None) -> MembershipCertificate:
    """Search for ``target`` in the left ideal ``sum D*g`` up to Bernstein degree ``bound``."""
    gens = list(gens)
    for g in gens:
        target._check(g)
    tdeg = max(target.degree(), 0)
    if bound is None:
        bound = tdeg + 4
    if bound < tdeg:
        raise BoundTooSmall(f"bound {bound} is below the target degree {tdeg}")
    if target.is_zero():
        return MembershipCertificate(MEMBER, bound, target, gens, [])

    k = target.nvars
    columns: list[tuple[int, MonoKey]] = []
    ech = _Echelon()
    for gi, g in enumerate(gens):
        if g.is_zero():
            continue
        room = bound - g.degree()
        # low-degree multipliers first keeps pivots sparse
        for key in sorted(monomials_up_to(k, room), key=grlex_key):
            prod = WeylElement._raw(k, {key: Fraction(1)}) * g
            columns.append((gi, key))
            ech.add(prod.terms, len(columns) - 1)

    residue, combo = ech.reduce({key: -c for key, c in target.terms.items()}, {})
    if residue:
        return MembershipCertificate(INCONCLUSIVE, bound, target, gens, [])
    # reduction keeps residue == -target + sum(combo * columns), so at zero
    # the combination itself expresses the target
    per_gen: dict[int, dict[MonoKey, Fraction]] = {}
    for col, c in combo.items():
        gi, key = columns[col]
        slot = per_gen.setdefault(gi, {})
        slot[key] = slot.get(key, 0) + c
    combination = [(WeylElement(k, per_gen[gi]), gi) for gi in sorted(per_gen)
                   if any(per_gen[gi].values())]
    cert = MembershipCertificate(MEMBER, bound, target, gens, combination)
    assert cert.replay() == target, "certificate failed to replay"
    return cert


# the two-variable example: G = C^* with weights (1, -1) ---------------------

def section2_generators() -> dict[str, WeylElement]:
    x0, x1 = WeylElement.x(0, 2), WeylElement.x(1, 2)
    d0, d1 = WeylElement.d(0, 2), WeylElement.d(1, 2)
    return {"x0": x0, "x1": x1, "d0": d0, "d1": d1,
            "nabla": x0 * d0 - x1 * d1, "Delta": d0 * d1}


def section2_ideals() -> dict[str, list[WeylElement]]:
    g = section2_generators()
    x0, x1, d0, d1 = g["x0"], g["x1"], g["d0"], g["d1"]
    return {
        "I": [g["nabla"], g["Delta"]],
        "J0": [x0 * d0, x1 * d1, d0 * d1],
        "J1": [d0, x1 * d1],
        "J2": [x0 * d0, d1],
        "Jinf": [d0, d1],
    }


@dataclass
class CheckLine:
    description: str
    target: WeylElement
    ideal: str
    certificate: MembershipCertificate

    @property
    def ok(self) -> bool:
        return self.certificate.verify()


@dataclass
class LatticeReport:
    bound: Optional[int]
    lines: list[CheckLine]

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def failures(self) -> list[CheckLine]:
        return [line for line in self.lines if not line.ok]


def verify_section2_lattice(bound: Optional[int] = None) -> LatticeReport:
    """
    Certify, by explicit membership, the chain ``I < J0 < J1, J2 < Jinf`` for
    ``I = (x0 d0 - x1 d1, d0 d1)`` and that the three maps onto the
    subquotients are well defined:

    * ``D/(d0, d1) -> J0/I``,   ``1 -> x0 d0``: ``d0 x0 d0`` and ``d1 x0 d0`` lie in ``I``;
    * ``D/(x0, d1) -> J1/J0``,  ``1 -> d0``:    ``x0 d0`` and ``d1 d0`` lie in ``J0``;
    * ``D/(x1, d0) -> J2/J0``,  ``1 -> d1``:    ``x1 d1`` and ``d0 d1`` lie in ``J0``.

    ``x1 d0`` is not in ``J2``, so ``d1`` (not ``d0``) is the generator of ``J2/J0``.
    """
    g = section2_generators()
    ideals = section2_ideals()
    x0, x1, d0, d1 = g["x0"], g["x1"], g["d0"], g["d1"]
    lines: list[CheckLine] = []

    def check(desc: str, target: WeylElement, ideal: str):
        b = None if bound is None else max(bound, max(target.degree(), 0))
        lines.append(CheckLine(desc, target, ideal, ideal_member(target, ideals[ideal], b)))

    for small, big in (("I", "J0"), ("J0", "J1"), ("J0", "J2"), ("J1", "Jinf"), ("J2", "Jinf")):
        for i, gen in enumerate(ideals[small]):
            check(f"{small}[{i}] in {big}", gen, big)

    check("d0*(x0*d0) in I", d0 * (x0 * d0), "I")
    check("d1*(x0*d0) in I", d1 * (x0 * d0), "I")
    check("x0*d0 in J0", x0 * d0, "J0")
    check("d1*d0 in J0", d1 * d0, "J0")
    check("x1*d1 in J0", x1 * d1, "J0")
    check("d0*d1 in J0", d0 * d1, "J0")
    check("x0*d0 - x1*d1 in I", x0 * d0 - x1 * d1, "I")
    return LatticeReport(bound, lines)


@dataclass
class CasimirReport:
    bound: int
    E: WeylElement
    F: WeylElement
    H: WeylElement
    omega: WeylElement
    he_relation: bool
    hf_relation: bool
    certificate: MembershipCertificate
    omega_alone: MembershipCertificate

    @property
    def ok(self) -> bool:
        return self.he_relation and self.hf_relation and self.certificate.verify()

    def __bool__(self) -> bool:
        return self.ok


def casimir_check(bound: Optional[int] = None, check_omega_alone: bool = True) -> CasimirReport:
    """
    With ``E = x0 x1``, ``F = -d0 d1``, ``H = [E, F]`` and
    ``Omega = H^2 + 2H + 4FE``: check the sl2 relations and certify
    ``Omega + 1`` in the left ideal generated by ``x0 d0 - x1 d1``.
    """
    g = section2_generators()
    E = g["x0"] * g["x1"]
    F = -g["Delta"]
    H = commutator(E, F)
    omega = H * H + 2 * H + 4 * (F * E)
    target = omega + 1
    b = bound if bound is not None else target.degree() + 4
    cert = ideal_member(target, [g["nabla"]], b)
    alone = (ideal_member(omega, [g["nabla"]], max(b, omega.degree()))
             if check_omega_alone else MembershipCertificate(INCONCLUSIVE, b, omega, [g["nabla"]]))
    return CasimirReport(b, E, F, H, omega,
                         commutator(H, E) == 2 * E, commutator(H, F) == -2 * F, cert, alone)


# action on twisted monomials x^e * delta^varsigma ---------------------------

@dataclass(frozen=True)
class TwistedMonomial:
    """``coefficient * x^exponents * delta^twist``; exponents may be negative."""

    exponents: tuple[int, ...]
    coefficient: Fraction
    twist: VarsigmaQuiver

    def __post_init__(self):
        object.__setattr__(self, "coefficient", as_rational(self.coefficient))
        if len(self.exponents) != self.twist.ell:
            raise ValueError("exponent vector and twist must have equal length")


def _falling(base: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for t in range(k):
        out *= base - t
    return out


def twisted_apply(op: WeylElement, m: TwistedMonomial) -> list[TwistedMonomial]:
    """
    Apply ``op`` to ``m``.  ``d_i`` acts on ``x^e delta^s`` as
    ``(e_i + s_i) x^(e - unit_i) delta^s``; ``x_i`` shifts exponents.
    Normal order means the derivatives act first.
    """
    if op.nvars != len(m.exponents):
        raise VarCountMismatch(f"{op.nvars} variables vs {len(m.exponents)} exponents")
    s = m.twist.entries
    acc: dict[tuple[int, ...], Fraction] = {}
    for (xe, de), c in op.terms.items():
        coeff = c * m.coefficient
        exps = []
        for i in range(op.nvars):
            coeff *= _falling(m.exponents[i] + s[i], de[i])
            exps.append(m.exponents[i] - de[i] + xe[i])
            if not coeff:
                break
        if coeff:
            key = tuple(exps)
            acc[key] = acc.get(key, 0) + coeff
    return [TwistedMonomial(k, c, m.twist) for k, c in sorted(acc.items()) if c]


def apply_to_laurent(op: WeylElement, poly: Mapping[tuple[int, ...], Fraction]) -> dict[tuple[int, ...], Fraction]:
    """Literal action on a Laurent polynomial given as ``{exponents: coefficient}``."""
    out: dict[tuple[int, ...], Fraction] = {}
    for (xe, de), c in op.terms.items():
        for exps, a in poly.items():
            coeff = c * a
            cur = list(exps)
            for i in range(op.nvars):
                for _ in range(de[i]):
                    coeff *= cur[i]
                    cur[i] -= 1
                cur[i] += xe[i]
            if coeff:
                key = tuple(cur)
                out[key] = out.get(key, 0) + coeff
    return {k: v for k, v in out.items() if v}


def delta_operator(ell: int) -> WeylElement:
    """``d_0 d_1 ... d_{ell-1}``."""
    return WeylElement.monomial((0,) * ell, (1,) * ell)


def radial_delta_coefficient(v: VarsigmaQuiver, j: int) -> Fraction:
    """Right-hand side ``(j + s_0)...(j + s_{ell-1})``."""
    out = Fraction(1)
    for s in v.entries:
        out *= j + s
    return out


def radial_delta_check(ell: int, v: VarsigmaQuiver, j: int) -> bool:
    """Check ``Delta(z^j delta^s) = prod(j + s_i) z^(j-1) delta^s`` with ``z = x_0...x_{ell-1}``."""
    if v.ell != ell:
        raise ValueError("twist length must equal ell")
    lhs = twisted_apply(delta_operator(ell), TwistedMonomial((j,) * ell, Fraction(1), v))
    rhs = radial_delta_coefficient(v, j)
    if rhs == 0:
        return lhs == []
    return lhs == [TwistedMonomial((j - 1,) * ell, rhs, v)]
