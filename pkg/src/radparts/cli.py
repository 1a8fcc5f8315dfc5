"""Command-line front end: ``radparts <command> ...`` or ``python3 -m radparts``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import fields, is_dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import hcstruct, hecke, invariants, params, simplicity, symspaces, weyl
from .arith import CyclotomicUnit, format_rational, parse_rational, parse_rational_list
from .errors import ParseError, RadpartsError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
MAX_HC_ELL = 20

# lets "-1/3" and "-1/2,0" through as values instead of option flags
_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?(,-?\d+(/\d+)?)*$")


class Inconclusive(Exception):
    """Raised by handlers after output has been produced, to set exit code 3."""


# argument types ------------------------------------------------------------------

def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str) -> list[Fraction]:
    try:
        return parse_rational_list(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


# serialization -----------------------------------------------------------------

def to_jsonable(obj: Any) -> Any:
    """Fractions become ``"num/den"`` strings (integers as ``"n"``); units print symbolically."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, CyclotomicUnit):
        return str(obj)
    if isinstance(obj, (weyl.WeylElement, invariants.SparsePoly)):
        return str(obj)
    if isinstance(obj, frozenset):
        return sorted(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def flatten(obj: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(obj, dict):
        out = []
        for k in sorted(obj):
            out += flatten(obj[k], f"{prefix}.{k}" if prefix else k)
        return out
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        out = []
        for i, v in enumerate(obj):
            out += flatten(v, f"{prefix}[{i}]")
        return out or [(prefix, "[]")]
    if isinstance(obj, list):
        return [(prefix, "[" + ", ".join(_scalar(v) for v in obj) + "]")]
    return [(prefix, _scalar(obj))]


def _scalar(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    return str(v)


def render(envelope: dict, as_json: bool) -> str:
    env = to_jsonable(envelope)
    if as_json:
        return json.dumps(env, sort_keys=True, ensure_ascii=False, indent=2)
    lines = [f"command = {env['command']}"]
    lines += [f"{k} = {v}" for k, v in flatten(env["result"])]
    lines += [f"warning: {w}" for w in env["warnings"]]
    return "\n".join(lines)


# handlers ------------------------------------------------------------------------

def _varsigma(args) -> params.VarsigmaQuiver:
    entries = args.varsigma
    ell = getattr(args, "ell", None)
    if ell is not None and ell != len(entries):
        raise ParseError(f"--ell {ell} does not match {len(entries)} twist entries")
    return params.VarsigmaQuiver.of(entries, getattr(args, "inf", None) or 0)


def _witness_list(ws) -> list[dict]:
    return [{"i": w.i, "m": w.m, "value": w.value} for w in ws]


def cmd_kappa(args, warnings):
    if args.weighted_line:
        n_text, s1, s2 = args.weighted_line
        n = _positive(n_text)
        k = params.kappa_weighted_line(n, _rational(s1), _rational(s2))
        return {"kappa": list(k.kappa), "ell": k.ell}
    if args.varsigma is None:
        raise ParseError("kappa needs --varsigma or --weighted-line")
    v = _varsigma(args)
    kw = params.kappa_wreath(v, args.n)
    return {"ell": v.ell, "n": args.n, "chi": list(params.chi_from_varsigma(v).entries),
            "kappa00": kw.kappa00, "kappa01": kw.kappa01, "kappa1": list(kw.kappa1)}


def cmd_hecke(args, warnings):
    v = _varsigma(args)
    p = hecke.presentation_for(v, args.n)
    ss = hecke.is_semisimple(p)
    return {"u": list(p.u), "q0": p.q0, "q1": p.q1, "normalized_q": p.normalized_q,
            "semisimple": ss.semisimple, "witnesses": [list(w) for w in ss.witnesses],
            "structure_at_zero": hecke.varsigma_zero_structure(v.ell, args.n)}


def cmd_simple(args, warnings):
    out: dict[str, Any] = {}
    if args.kappa is not None:
        k = params.KappaZl.of(args.kappa)
    else:
        v = _varsigma(args)
        k = params.kappa_rank1(v)
        vs = simplicity.a_simple_varsigma(v)
        out["a_simple_varsigma"] = vs.ok
    out["kappa"] = list(k.kappa)
    h, a = simplicity.h_simple_cyclic(k), simplicity.a_simple_cyclic(k)
    out.update(h_simple=h.ok, a_simple=a.ok, simple=a.ok,
               h_witnesses=_witness_list(h.witnesses), a_witnesses=_witness_list(a.witnesses))
    if args.wreath is not None:
        if args.varsigma is None:
            raise ParseError("--wreath needs --varsigma")
        out["wreath_a_simple"] = simplicity.a_simple_wreath(params.kappa_wreath(v, args.wreath)).ok
    if args.oracle:
        o = simplicity.standard_module_oracle(k)
        out["oracle"] = {"h_simple": o.h_simple, "a_simple": o.a_simple,
                         "reports": [{"tau": r.tau_index,
                                      "dim_L": "infinite" if r.dim_L is None else r.dim_L,
                                      "e_nonzero": r.e_nonzero} for r in o.reports]}
        if (o.h_simple, o.a_simple) != (h.ok, a.ok):
            warnings.append("closed form and standard-module oracle disagree")
    return out


def cmd_regular(args, warnings):
    r = hecke.is_regular(_varsigma(args), args.n)
    return {"regular": r.semisimple, "witnesses": [list(w) for w in r.witnesses]}


def _check_hc_ell(ell: int):
    if ell > MAX_HC_ELL:
        raise ParseError(f"--ell is capped at {MAX_HC_ELL}")


def cmd_hc(args, warnings):
    _check_hc_ell(args.ell)
    if args.hc_cmd == "series":
        ell = args.ell
        factors = hcstruct.composition_multiset(ell)
        intro, remark = hcstruct.torsion_count(ell), hcstruct.remark_torsion_count(ell)
        if intro != remark:
            warnings.append(f"torsion count {intro} from the multiset differs from the "
                            f"alternative formula (ell-1)*2^(ell-1) = {remark}")
        return {"factors": [{"J": sorted(f.subset_J), "label": f.label, "multiplicity": f.multiplicity,
                             "torsion": f.is_torsion} for f in factors],
                "length": hcstruct.total_length(ell),
                "multiset_sum": sum(f.multiplicity for f in factors),
                "torsion_count": intro, "torsion_count_alt": remark,
                "serial": hcstruct.serial_profile(ell)}
    if args.hc_cmd == "decompose":
        return {"summands": [{"partition": list(s.partition), "multiplicity": s.multiplicity,
                              "endomorphism_order": s.endomorphism_order}
                             for s in hcstruct.decompose_G0(args.ell, args.n)]}
    v = _varsigma(args)
    fv = hcstruct.framed_quiver_verdict(v, args.n)
    return {"chi_dot_delta": fv.chi_dot_delta, "semisimple": fv.semisimple,
            "regular_hecke": fv.regular_hecke.semisimple}


def _cert_dict(cert: weyl.MembershipCertificate) -> dict:
    return {"verdict": cert.verdict, "bound": cert.bound_used,
            "combination": [{"multiplier": m, "generator": gi} for m, gi in cert.combination],
            "replays": cert.verify() if cert.is_member else False}


def cmd_weyl(args, warnings):
    if args.weyl_cmd == "verify-section2":
        rep = weyl.verify_section2_lattice(args.bound)
        out = {"ok": rep.ok, "lines": [{"check": l.description, "ideal": l.ideal,
                                        **_cert_dict(l.certificate)} for l in rep.lines]}
        if not rep.ok:
            raise Inconclusive(out)
        return out
    if args.weyl_cmd == "casimir":
        rep = weyl.casimir_check(args.bound)
        out = {"ok": rep.ok, "H": rep.H, "omega": rep.omega,
               "HE_equals_2E": rep.he_relation, "HF_equals_minus_2F": rep.hf_relation,
               "omega_plus_1": _cert_dict(rep.certificate),
               "omega_alone": rep.omega_alone.verdict}
        if not rep.ok:
            raise Inconclusive(out)
        return out
    if args.weyl_cmd == "radial":
        v = _varsigma(args)
        return {"ok": weyl.radial_delta_check(v.ell, v, args.j),
                "coefficient": weyl.radial_delta_coefficient(v, args.j)}
    gens_text = [g for g in args.gens.split(";") if g.strip()]
    if not gens_text:
        raise ParseError("--gens needs at least one expression")
    k = args.nvars or weyl.infer_nvars(args.target, *gens_text)
    target = weyl.parse_weyl(args.target, k)
    gens = [weyl.parse_weyl(g, k) for g in gens_text]
    cert = weyl.ideal_member(target, gens, args.bound)
    out = {"target": target, "generators": gens, **_cert_dict(cert),
           "certificate": cert.to_text()}
    if not cert.is_member:
        raise Inconclusive(out)
    return out


def _record_dict(rec: symspaces.SymPairRecord) -> dict:
    cls = symspaces.classify(rec)
    v = symspaces.verdict(rec)
    return {"label": rec.label, "pair": rec.pair_description, "weyl_type": rec.weyl_type,
            "k": list(rec.k_values), "x": rec.table_x, "y": rec.table_y,
            "table_verdict": "Y" if rec.table_verdict else "N",
            "semisimple": v.semisimple, "source": v.source,
            "nice": cls.nice, "integral": cls.integral, "robust": cls.robust}


def cmd_symspace(args, warnings):
    table = symspaces.load_table(args.table)
    if args.sym_cmd == "list":
        return {"rows": [_record_dict(r) for r in table]}
    if args.sym_cmd == "check":
        try:
            rec = symspaces.find(args.label, table)
        except KeyError:
            raise ParseError(f"unknown label {args.label!r}") from None
        return _record_dict(rec)
    if args.sym_cmd == "dump":
        return {"tsv": symspaces.dump_table(table)}
    return {"labels": symspaces.hc_semisimple_list(table)}


def cmd_invariants(args, warnings):
    if args.inv_cmd == "delta":
        d = invariants.delta_restricted(args.ell, args.n)
        disc = invariants.discriminant_h(args.ell, args.n)
        scalar = disc.proportional_to(d)
        if scalar is None:
            warnings.append("discriminant of h is not proportional to delta|h "
                            "(x_i = 0 is not a reflecting hyperplane when ell = 1)")
        return {"delta": d, "degree": d.degree(), "discriminant": disc, "scalar": scalar}
    if args.inv_cmd == "factor-check":
        ells = [args.ell] if args.ell else range(1, 5)
        ns = [args.n] if args.n else range(1, 5)
        checks = [{"ell": l, "n": n, "ok": invariants.delta_factorization_check(l, n)}
                  for l in ells for n in ns]
        return {"ok": all(c["ok"] for c in checks), "checks": checks}
    try:
        chi = invariants.WreathCharacter(args.ell, args.n, args.c, args.sign)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    data = invariants.semiinvariant_exponents(chi)
    return {"exponents": data.as_map(), "degree": data.degree,
            "h_chi": invariants.semiinvariant_poly(chi),
            "semi_invariant": invariants.verify_semiinvariance(chi)}


HANDLERS = {"kappa": cmd_kappa, "hecke": cmd_hecke, "simple": cmd_simple,
            "regular": cmd_regular, "hc": cmd_hc, "weyl": cmd_weyl,
            "symspace": cmd_symspace, "invariants": cmd_invariants}


# parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a JSON envelope")
    common.add_argument("--table", default=argparse.SUPPRESS,
                        help="symmetric-pair data file (TSV)")

    p = argparse.ArgumentParser(prog="radparts", parents=[common],
                                description="Exact parameter, simplicity and D-module computations.")
    p._negative_number_matcher = _NEGATIVE_VALUE
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, parent=sub, **kw):
        sp = parent.add_parser(name, parents=[common], **kw)
        sp._negative_number_matcher = _NEGATIVE_VALUE
        return sp

    def twist(sp, required=True, with_ell=True, with_n=False):
        if with_ell:
            sp.add_argument("--ell", type=_positive)
        if with_n:
            sp.add_argument("--n", type=_positive, required=True)
        sp.add_argument("--varsigma", type=_rational_list, required=required)
        sp.add_argument("--inf", type=_rational, default=None)

    sp = add("kappa", help="parameter dictionary")
    twist(sp, required=False)
    sp.add_argument("--n", type=_positive, default=1)
    sp.add_argument("--weighted-line", nargs=3, metavar=("N", "S1", "S2"))

    sp = add("hecke", help="Hecke parameters and semisimplicity")
    twist(sp, with_n=True)

    sp = add("simple", help="simplicity of H and A")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--kappa", type=_rational_list)
    group.add_argument("--varsigma", type=_rational_list)
    sp.add_argument("--inf", type=_rational, default=None)
    sp.add_argument("--wreath", type=_positive, metavar="N")
    sp.add_argument("--oracle", action="store_true")

    sp = add("regular", help="is the Hecke algebra semisimple")
    twist(sp, with_n=True)

    hc = add("hc", help="Harish-Chandra module combinatorics")
    hsub = hc.add_subparsers(dest="hc_cmd", metavar="SUBCOMMAND")
    hsub.required = True
    s = add("series", hsub)
    s.add_argument("--ell", type=_positive, required=True)
    s = add("decompose", hsub)
    s.add_argument("--ell", type=_positive, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s = add("framed", hsub)
    s.add_argument("--ell", type=_positive, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--varsigma", type=_rational_list, required=True)
    s.add_argument("--inf", type=_rational, default=None)

    w = add("weyl", help="Weyl algebra verification")
    wsub = w.add_subparsers(dest="weyl_cmd", metavar="SUBCOMMAND")
    wsub.required = True
    s = add("verify-section2", wsub)
    s.add_argument("--bound", type=_nonneg, default=8)
    s = add("casimir", wsub)
    s.add_argument("--bound", type=_nonneg, default=None)
    s = add("radial", wsub)
    twist(s)
    s.add_argument("--j", type=int, required=True)
    s = add("member", wsub)
    s.add_argument("--target", required=True)
    s.add_argument("--gens", required=True, help="generators separated by ';'")
    s.add_argument("--bound", type=_nonneg, default=None, help="default: deg(target) + 4")
    s.add_argument("--nvars", type=_positive, default=None)

    sy = add("symspace", help="symmetric pairs")
    ssub = sy.add_subparsers(dest="sym_cmd", metavar="SUBCOMMAND")
    ssub.required = True
    add("list", ssub)
    s = add("check", ssub)
    s.add_argument("label")
    add("semisimple-list", ssub)
    add("dump", ssub)

    inv = add("invariants", help="discriminants and semi-invariants")
    isub = inv.add_subparsers(dest="inv_cmd", metavar="SUBCOMMAND")
    isub.required = True
    s = add("delta", isub)
    s.add_argument("--ell", type=_positive, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s = add("factor-check", isub)
    s.add_argument("--ell", type=_positive, default=None)
    s.add_argument("--n", type=_positive, default=None)
    s = add("semiinv", isub)
    s.add_argument("--ell", type=_positive, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--sign", type=int, choices=(1, -1), required=True)
    return p


def _inputs(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) 
            if k not in ("json", "table", "command") and not k.endswith("_cmd") and v is not None}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = getattr(args, "json", False)
    args.table = getattr(args, "table", None)
    warnings: list[str] = []
    code = EXIT_OK
    try:
        result = HANDLERS[args.command](args, warnings)
    except Inconclusive as exc:
        result, code = exc.args[0], EXIT_INCONCLUSIVE
    except (RadpartsError, ValueError) as exc:
        print(f"radparts: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    envelope = {"command": " ".join(c for c in (args.command, getattr(args, "hc_cmd", None),
                                                getattr(args, "weyl_cmd", None),
                                                getattr(args, "sym_cmd", None),
                                                getattr(args, "inv_cmd", None)) if c),
                "inputs": _inputs(args), "result": result, "warnings": warnings}
    print(render(envelope, as_json))
    return code


if __name__ == "__main__":
    sys.exit(main())
