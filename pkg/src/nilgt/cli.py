"""Command-line front end.

    nilgt present --m 5 "s0 s1 s2 s3 s2 s1"
    nilgt extmatrix --m 5 "asc(0,3) desc(2,1)" --format latex
    nilgt abacus --m 10 "s3 s1 s0 s4 s2 s8 s7 s5 s6 s2 s5 s1 s0"
    nilgt check-iso morphism.json

Exit status: 0 success, 1 a check failed, 2 usage or input error.
"""

import argparse
import json
import re
import sys

from . import nilalg
from .coxeter import load_realization, make_type_a_realization
from .errors import NilGTError, ParseError
from .morphism import MorphismSpec, gamma_determinant, is_isomorphism, is_morphism
from .nilalg import AlgebraElement, dimension, presentation_latex, presentation_lines, relations
from .rational import fraction_to_str
from .selftest import run_selftest
from .trimat import TriMatrix, extended_t_matrix, t_matrix
from .typeatilde import (
    ASCENDING,
    DESCENDING,
    Interval,
    abacus,
    abacus_intervals,
    assemble_t_matrix,
    blob_matrix,
    blob_modulus_report,
    blob_oracle,
    interval_expression,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

_LETTER = re.compile(r"s(-?\d+)$")
_INTERVAL = re.compile(r"(asc|desc)\((-?\d+),(-?\d+)\)(?:\^(-?\d+))?$")


def parse_expression(text, m=None, labels=None):
    """Parse ``s<int>`` letters and ``asc(a,b)[^h]`` / ``desc(a,b)[^h]`` intervals.

    With ``m`` residues are reduced modulo m; interval literals need ``m``.  With
    ``labels`` (a custom realization) every letter must be one of them.
    """
    # whitespace inside parentheses belongs to the interval literal
    text = re.sub(r"\(\s*([^)]*?)\s*\)", lambda mt: "(" + re.sub(r"\s+", "", mt.group(1)) + ")", text)
    letters = []
    for pos, token in enumerate(text.split(), 1):
        mt = _LETTER.match(token)
        if mt:
            x = int(mt.group(1))
            if m is not None:
                x %= m
            elif labels is not None and x not in labels:
                raise ParseError(f"generator s{x} is not in the realization's index set", pos)
            letters.append(x)
            continue
        mt = _INTERVAL.match(token)
        if mt:
            if m is None:
                raise ParseError(f"interval literal {token!r} needs a built-in type A realization (--m)", pos)
            reps = 1 if mt.group(4) is None else int(mt.group(4))
            if reps < 1:
                raise ParseError(f"repetition ^{reps} must be at least 1", pos)
            direction = ASCENDING if mt.group(1) == "asc" else DESCENDING
            iv = Interval(int(mt.group(2)) % m, int(mt.group(3)) % m, direction)
            letters.extend(interval_expression(m, iv) * reps)
            continue
        raise ParseError(f"malformed token {token!r}", pos)
    return tuple(letters)


def _realization(args):
    if args.m is not None and args.realization is not None:
        raise ParseError("give exactly one of --m and --realization")
    if args.m is not None:
        return make_type_a_realization(args.m)
    if args.realization is not None:
        return load_realization(args.realization)
    raise ParseError("a realization is required: --m <int> or --realization <file>")


def _expression(args, real):
    if args.expression is None:
        raise ParseError("an expression is required")
    return parse_expression(args.expression, m=args.m, labels=real.index_set)


def _dump(doc):
    return json.dumps(doc, indent=2)


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _cmd_present(args):
    real = _realization(args)
    u = _expression(args, real)
    t = t_matrix(real, u)
    name = args.names or "J"
    if args.format == "json":
        doc = {
            "generators": name,
            "relations": [
                {"r": r, "terms": [{"j": j, "coeff": fraction_to_str(c)} for j, c in rhs]}
                for r, rhs in relations(t)
            ],
            "matrix": t.to_dict(),
        }
        return EXIT_OK, _dump(doc)
    if args.format == "latex":
        return EXIT_OK, presentation_latex(t, name=name)
    return EXIT_OK, "\n".join(presentation_lines(t, name=name))


def _matrix_for(args):
    real = _realization(args)
    u = _expression(args, real)
    if args.assemble:
        if args.m is None:
            raise ParseError("--assemble needs a type A realization (--m)")
        return assemble_t_matrix(args.m, u)
    return t_matrix(real, u)


def _cmd_matrix(args):
    t = _matrix_for(args)
    if args.format == "json":
        return EXIT_OK, _dump(t.to_dict())
    if args.format == "latex":
        return EXIT_OK, t.to_latex()
    return EXIT_OK, t.to_text()


def _cmd_extmatrix(args):
    real = _realization(args)
    e = extended_t_matrix(real, _expression(args, real))
    if args.format == "json":
        return EXIT_OK, _dump(e.to_dict())
    if args.format == "latex":
        return EXIT_OK, e.to_latex()
    return EXIT_OK, e.to_text()


def _cmd_abacus(args):
    if args.m is None:
        raise ParseError("abacus needs --m")
    real = _realization(args)
    u = _expression(args, real)
    xi, u_prime = abacus(args.m, u)
    factors = [str(iv) for iv in abacus_intervals(args.m, u)]
    if args.format == "json":
        doc = xi.to_dict()
        doc["u_prime"] = list(u_prime)
        doc["intervals"] = factors
        return EXIT_OK, _dump(doc)
    word = " ".join(f"s{c}" for c in u_prime)
    if args.format == "latex":
        rows = " \\\\\n".join("  " + " & ".join(str(c) for c in letters) for letters, _ in xi.lines)
        width = max((len(letters) for letters, _ in xi.lines), default=1)
        return EXIT_OK, (
            "\\Xi = \\left\\{\\begin{array}{" + "c" * width + "}\n" + rows + "\n\\end{array}\\right."
        )
    return EXIT_OK, xi.to_text() + "\nu' = " + word + "\nintervals: " + " ".join(factors)


def _cmd_dim(args):
    real = _realization(args)
    t = t_matrix(real, _expression(args, real))
    d = dimension(t)
    if args.format == "json":
        return EXIT_OK, _dump({"n": t.n, "dimension": d})
    return EXIT_OK, str(d)


def _cmd_mul(args):
    if args.matrix is not None:
        t = TriMatrix.from_dict(_load_json(args.matrix))
    else:
        real = _realization(args)
        t = t_matrix(real, _expression(args, real))
    x = AlgebraElement.from_dict(_load_json(args.left), t)
    y = AlgebraElement.from_dict(_load_json(args.right), t)
    z = nilalg.multiply(x, y)
    name = args.names or "X"
    if args.format == "json":
        return EXIT_OK, _dump(z.to_dict())
    if args.format == "latex":
        return EXIT_OK, z.to_latex(name=name)
    return EXIT_OK, z.to_text(name=name)


def _cmd_check(args, iso):
    spec = MorphismSpec.from_dict(_load_json(args.spec))
    ok_morphism = is_morphism(spec)
    doc = {"morphism": ok_morphism}
    ok = ok_morphism
    if iso:
        ok = is_isomorphism(spec)
        doc["isomorphism"] = ok
        if spec.source.n == spec.target.n:
            doc["determinant"] = fraction_to_str(gamma_determinant(spec))
    status = EXIT_OK if ok else EXIT_CHECK_FAILED
    if args.format == "json":
        return status, _dump(doc)
    return status, "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in doc.items())


def _cmd_blob(args):
    if args.m is None:
        raise ParseError("blob-compare needs --m")
    closed = blob_matrix(args.m, args.h)
    oracle = blob_oracle(args.m, args.h, args.a)
    diff = [
        {"k": k, "j": j, "closed_form": fraction_to_str(closed.t(k, j)), "t_matrix": fraction_to_str(oracle.t(k, j))}
        for k in range(1, closed.n + 1)
        for j in range(1, k)
        if closed.t(k, j) != oracle.t(k, j)
    ]
    verdict = blob_modulus_report(ms=(args.m,), hs=(args.h,))
    status = EXIT_OK if not diff else EXIT_CHECK_FAILED
    if args.format == "json":
        return status, _dump({
            "m": args.m, "h": args.h, "a": args.a, "equal": not diff, "differences": diff,
            "modulus": verdict, "blob_matrix": closed.to_dict(), "t_matrix": oracle.to_dict(),
        })
    if args.format == "latex":
        return status, closed.to_latex()
    lines = [
        f"blob_matrix(m={args.m}, h={args.h}) vs t_matrix(asc({args.a},{(args.a - 1) % args.m})^{args.h})",
        f"equal: {str(not diff).lower()}",
        f"-2 period m-1 confirmed: {str(verdict['m-1']).lower()}; period m confirmed: {str(verdict['m']).lower()}",
    ]
    lines += [f"  ({d['k']},{d['j']}): {d['closed_form']} vs {d['t_matrix']}" for d in diff]
    lines.append(closed.to_text())
    return status, "\n".join(lines)


def _cmd_selftest(args):
    results = run_selftest()
    ok = all(passed for _, passed in results)
    if args.format == "json":
        text = _dump({"passed": ok, "checks": [{"name": n, "passed": p} for n, p in results]})
    else:
        text = "\n".join(f"{'PASS' if p else 'FAIL'}  {n}" for n, p in results)
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser():
    parser = _Parser(prog="nilgt", description="Nil graded algebras of Coxeter expressions.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p, expression=True):
        p.add_argument("--m", type=int, help="built-in affine A_{m-1} realization")
        p.add_argument("--realization", help="JSON realization file")
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        p.add_argument("--names", help="generator display name")
        if expression:
            p.add_argument("expression", nargs="?", help='e.g. "s0 s1 s2" or "asc(0,3) desc(2,1)"')
        return p

    common(sub.add_parser("present", help="relations of the nil graded algebra"))
    p = common(sub.add_parser("matrix", help="strictly lower triangular matrix T_u"))
    p.add_argument("--assemble", action="store_true", help="build T_{u'} from abacus intervals")
    common(sub.add_parser("extmatrix", help="extended matrix [Q_u, T_u]"))
    common(sub.add_parser("abacus", help="abacus of letters and u'"))
    common(sub.add_parser("dim", help="dimension 2^length"))
    p = common(sub.add_parser("mul", help="multiply two AlgebraElement JSON files"))
    p.add_argument("--matrix", help="TriMatrix JSON file defining the algebra")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    for verb in ("check-morphism", "check-iso"):
        p = common(sub.add_parser(verb, help="check a MorphismSpec JSON file"), expression=False)
        p.add_argument("spec")
    p = common(sub.add_parser("blob-compare", help="closed-form blob matrix vs t_matrix"), expression=False)
    p.add_argument("--h", type=int, default=2)
    p.add_argument("--a", type=int, default=0)
    common(sub.add_parser("selftest", help="reproduce the worked examples"), expression=False)
    return parser


_HANDLERS = {
    "present": _cmd_present,
    "matrix": _cmd_matrix,
    "extmatrix": _cmd_extmatrix,
    "abacus": _cmd_abacus,
    "dim": _cmd_dim,
    "mul": _cmd_mul,
    "check-morphism": lambda a: _cmd_check(a, iso=False),
    "check-iso": lambda a: _cmd_check(a, iso=True),
    "blob-compare": _cmd_blob,
    "selftest": _cmd_selftest,
}


def run(argv):
    """Execute one command; returns (exit status, emitted document)."""
    try:
        args = build_parser().parse_args(argv)
        return _HANDLERS[args.verb](args)
    except (NilGTError, OSError, json.JSONDecodeError) as exc:
        return EXIT_USAGE, f"error: {exc}"


def main(argv=None):
    status, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status != EXIT_USAGE else sys.stderr
    print(text, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
