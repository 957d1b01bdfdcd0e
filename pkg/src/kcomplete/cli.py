"""Command-line front end.

Exit codes: 0 success, 1 a mathematical check failed, 2 malformed input.
Element values are printed as canonical indices.
"""

import argparse
import contextlib
import csv
import io
import json
import sys
from dataclasses import dataclass

from .analysis import cycle_type, report_dict
from .errors import FieldArithmeticError, ParameterError
from .families import build, build_scaled, closed_eval, parse_descriptor
from .gf import make_field, parse_field_spec, prime_power
from .groups import (
    literal_inverse_report,
    verify_additive_group,
    verify_multiplicative_group,
    verify_relationship,
    verify_star_lemma,
)
from .poly import evaluate, value_table
from .verify import PaperSuite, to_json, to_text


@dataclass
class CommandResult:
    exit_code: int
    output: str = ""
    error: str = ""


class _Fail(Exception):
    """A check ran and came out false; carries the payload to print."""

    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


def _irr_list(text):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"modulus must be comma-separated integers, got {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--show-coeffs", action="store_true", help="print coefficient vectors next to indices")

    family = argparse.ArgumentParser(add_help=False, parents=[common])
    family.add_argument("descriptor", help="e.g. plus:p=5,s=1,n=2,c=2[,b=INDEX]")
    family.add_argument("--irr", type=_irr_list, help="big-field modulus a0,a1,...,am (constant first)")

    parser = argparse.ArgumentParser(prog="kcomplete", description="Higher-level complete permutation polynomials over GF(p^m).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", parents=[common], help="construct and describe a field")
    p.add_argument("spec", help="p^m or p^m:a0,...,am")

    sub.add_parser("gen", parents=[family], help="print the family polynomial")

    p = sub.add_parser("eval", parents=[family], help="evaluate at one element")
    p.add_argument("--at", type=int, required=True, help="element index")

    sub.add_parser("check", parents=[family], help="permutation and completeness report")
    sub.add_parser("cycles", parents=[family], help="cycle type of the permutation")
    sub.add_parser("table", parents=[family], help="full value table")

    p = sub.add_parser("group", parents=[common], help="composition-group checks")
    p.add_argument("law", choices=("additive", "multiplicative", "relationship", "star-lemma", "literal-inverse"))
    p.add_argument("target", help="field spec p^m[:irr] (or q for star-lemma)")
    p.add_argument("--base", type=int, default=1, help="degree s of the base subfield over GF(p)")

    p = sub.add_parser("verify-paper", parents=[common], help="run every acceptance criterion")
    p.add_argument("--max-q", type=int, default=None, help="largest field order in the sweeps")
    p.add_argument("--irr", action="append", default=[], metavar="FIELDSPEC", help="modulus override, e.g. 3^2:1,0,1 (repeatable)")
    p.add_argument("--only", default=None, help="comma-separated criterion numbers")
    p.add_argument("--timings", action="store_true", help="include timings in JSON output")
    return parser


def _elem(field, a, show):
    return f"{a} {field.coeffs(a)}" if show else str(a)


def _field_header(field):
    return f"field {field.spec}"


def _cmd_field(args):
    spec = parse_field_spec(args.spec)
    f = make_field(spec)
    data = {
        "field": str(f.spec),
        "p": f.p,
        "m": f.m,
        "order": f.order,
        "modulus": list(f.irr),
        "primitive_element": f.primitive_element(),
        "subfield_degrees": f.subfield_degrees(),
    }
    if args.format == "json":
        return json.dumps(data, indent=2)
    return "\n".join(f"{k} {v}" for k, v in data.items())


def _cmd_gen(args, params):
    member = build_scaled(params)
    poly = member.poly
    if args.format == "json":
        return json.dumps(
            {
                "descriptor": str(params),
                "field": str(params.field.spec),
                "terms": poly.to_text(),
                "degree": poly.degree,
                "hypothesis_met": member.hypothesis_met,
                "maximality_guaranteed": member.maximality_guaranteed,
            },
            indent=2,
        )
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["exponent", "coefficient_index"])
        w.writerows(poly.items())
        return buf.getvalue().rstrip("\n")
    return poly.to_text()


def _cmd_eval(args, params):
    f = params.field
    a = f.check(args.at)
    v = evaluate(build(params), a)
    if args.format == "json":
        return json.dumps({"field": str(f.spec), "input": a, "output": v, "closed_form": closed_eval(params, a)}, indent=2)
    return _elem(f, v, args.show_coeffs)


def _cmd_check(args, params):
    f = params.field
    poly = build(params)
    data = {"descriptor": str(params), "field": str(f.spec), "terms": poly.to_text()}
    data.update(report_dict(poly))
    if args.format == "json":
        return json.dumps(data, indent=2)
    lines = [_field_header(f), f"polynomial {poly}", f"permutation {'yes' if data['is_permutation'] else 'no'}"]
    if data["witnesses"]["collision"]:
        i, j = data["witnesses"]["collision"]
        lines.append(f"collision {_elem(f, i, args.show_coeffs)} and {_elem(f, j, args.show_coeffs)}")
    lines.append(f"level {data['level']} (maximum {f.p - 1})")
    lf = data["witnesses"]["level_failure"]
    if lf:
        i, j = lf["pair"]
        lines.append(f"first failing k {lf['k']}: {_elem(f, i, args.show_coeffs)} and {_elem(f, j, args.show_coeffs)} collide")
    if data["cycle_type"] is not None:
        lines.append("cycle type " + " ".join(f"{k}^{v}" for k, v in data["cycle_type"]))
        lines.append(f"order {data['order']}")
        lines.append(f"fixed points {data['fixed_points']}")
    return "\n".join(lines)


def _cmd_cycles(args, params):
    f = params.field
    ct = cycle_type(value_table(build(params)))
    if args.format == "json":
        return json.dumps(
            {"field": str(f.spec), "cycle_type": ct.as_pairs(), "order": ct.order, "fixed_points": ct.fixed_points},
            indent=2,
        )
    if args.format == "csv":
        return "\n".join(["length,count"] + [f"{k},{v}" for k, v in ct.as_pairs()])
    return "\n".join([_field_header(f), f"cycle type {ct}", f"order {ct.order}", f"fixed points {ct.fixed_points}"])


def _cmd_table(args, params):
    f = params.field
    table = value_table(build(params)).tolist()
    if args.format == "json":
        return json.dumps({"field": str(f.spec), "images": table})
    if args.format == "csv":
        return "\n".join(["input_index,output_index"] + [f"{i},{v}" for i, v in enumerate(table)])
    return "\n".join(f"{_elem(f, i, args.show_coeffs)} -> {_elem(f, v, args.show_coeffs)}" for i, v in enumerate(table))


def _cmd_group(args):
    if args.law == "star-lemma":
        try:
            q = int(args.target)
        except ValueError:
            raise ParameterError(f"star-lemma needs an integer field order, got {args.target!r}") from None
        prime_power(q)
        holds = verify_star_lemma(q)
        data = {"law": "star-lemma", "base_field": f"GF({q})", "pairs_checked": (q - 1) ** 2, "holds": holds, "counterexample": None}
    else:
        f = make_field(parse_field_spec(args.target))
        if args.law == "relationship":
            holds = verify_relationship(f, args.base)
            data = {"law": "relationship", "base_field": f"GF({f.p}^{args.base}) in {f}", "pairs_checked": f.p ** args.base, "holds": holds, "counterexample": None}
        else:
            fn = {
                "additive": verify_additive_group,
                "multiplicative": verify_multiplicative_group,
                "literal-inverse": literal_inverse_report,
            }[args.law]
            data = fn(f, args.base).to_dict()
    out = json.dumps(data, indent=2) if args.format == "json" else "\n".join(f"{k} {v}" for k, v in data.items())
    if not data["holds"]:
        raise _Fail(out)
    return out


def _cmd_verify(args):
    moduli = {}
    for text in args.irr:
        spec = parse_field_spec(text)
        if spec.irr is None:
            raise ParameterError(f"--irr needs an explicit modulus, got {text!r}")
        moduli[(spec.p, spec.m)] = spec.irr
    only = None
    if args.only:
        try:
            only = {int(v) for v in args.only.split(",")}
        except ValueError:
            raise ParameterError(f"--only expects criterion numbers, got {args.only!r}") from None
    suite = PaperSuite(args.max_q, moduli)
    results = suite.run(only=only)
    out = to_json(results, timings=args.timings) if args.format == "json" else to_text(results)
    if not all(r.passed for r in results):
        raise _Fail(out)
    return out


FAMILY_COMMANDS = {"gen": _cmd_gen, "eval": _cmd_eval, "check": _cmd_check, "cycles": _cmd_cycles, "table": _cmd_table}


def dispatch(argv):
    """Run one command and capture its output instead of printing it."""
    parser = build_parser()
    err = io.StringIO()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return CommandResult(int(e.code or 0), "", err.getvalue())
    try:
        if args.command in FAMILY_COMMANDS:
            params = parse_descriptor(args.descriptor, irr=args.irr)
            out = FAMILY_COMMANDS[args.command](args, params)
        elif args.command == "field":
            out = _cmd_field(args)
        elif args.command == "group":
            out = _cmd_group(args)
        else:
            out = _cmd_verify(args)
    except _Fail as e:
        return CommandResult(1, e.payload, "")
    except (ParameterError, FieldArithmeticError) as e:
        return CommandResult(2, "", f"kcomplete {args.command}: error: {e}\n{parser.format_usage()}")
    return CommandResult(0, out, "")


def main(argv=None):
    res = dispatch(sys.argv[1:] if argv is None else argv)
    if res.output:
        print(res.output)
    if res.error:
        sys.stderr.write(res.error)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
