"""Command-line front end: ``rathom <subcommand> ...``.

Exit codes: 0 success, 1 bad input or violated precondition, 2 usage error,
3 inconclusive (filtration did not stabilize within ``--dmax``).
Errors go to stderr, as JSON when ``--json`` is given.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .cdga import CdgaPresentation, check_differential, is_minimal_simply_connected
from .exactalg import as_fraction
from .freelie import hall_basis, parse_lie
from .groupwords import lcs_weight, log_coordinates, parse_word
from .malcev import BCH_NAMES, MalcevElement, bch_table, mul, rational_power
from .simplicial import FiniteSimplicialSet, cohomology, homology, validate
from .sullivan import (
    AplAlgebra,
    InconclusiveError,
    is_realization_point,
    minimal_model,
)
from .sullivan.minimal import _simply_connected_check

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, kind: str, message: str, location: str | None = None, code: int = EXIT_ERROR):
        super().__init__(message)
        self.kind, self.message, self.location, self.code = kind, message, location, code

    def payload(self) -> dict:
        out = {"type": self.kind, "message": self.message}
        if self.location is not None:
            out["location"] = self.location
        return {"error": out}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("usage", message, self.prog, EXIT_USAGE)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"bound must be >= 1, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a value >= 0, got {v}")
    return v


def _names(args) -> list[str] | None:
    return args.names.split(",") if args.names else None


def _load_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError("io", exc.strerror or str(exc), path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError("parse", exc.msg, f"{path}:{exc.lineno}:{exc.colno}")


def _load_simplicial(path: str) -> FiniteSimplicialSet:
    data = _load_json(path)
    try:
        X = FiniteSimplicialSet.from_json(data)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise CliError("parse", f"bad simplicial set: {exc}", path)
    v = validate(X)
    if v is not None:
        raise CliError("precondition", f"simplicial identity violated: {v}", path)
    return X


def _load_cdga(path: str, data=None) -> CdgaPresentation:
    data = _load_json(path) if data is None else data
    try:
        A = CdgaPresentation.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError("parse", f"bad cdga: {exc}", path)
    bad = check_differential(A)
    if bad is not None:
        raise CliError("precondition", str(bad), path)
    return A


def _load_model_input(path: str, dmax: int | None):
    """Either a cdga or a simplicial set (modelled by A_PL)."""
    data = _load_json(path)
    if isinstance(data, dict) and "dimension_bound" in data:
        X = _load_simplicial(path)
        try:
            _simply_connected_check(X)
        except ValueError as exc:
            raise CliError("precondition", str(exc), path)
        if dmax is None:
            raise CliError("usage", "--dmax is required for simplicial input", path, EXIT_USAGE)
        return AplAlgebra(X, d_max=dmax)
    return _load_cdga(path, data)


def _lie(text: str, n: int, names, where: str):
    try:
        return parse_lie(text, n, names)
    except ValueError as exc:
        raise CliError("parse", str(exc), where)


def _word(text: str, names, where: str):
    try:
        return parse_word(text, names)
    except ValueError as exc:
        raise CliError("parse", str(exc), where)


# -- subcommands: each returns (text, json-able object, exit code) ------------

def cmd_hall(args):
    basis = hall_basis(args.k, args.n)
    names = _names(args)
    lines = [f"weight {i + 1} ({len(ws)}): " + " ".join(w.format(names) for w in ws)
             for i, ws in enumerate(basis)]
    obj = {
        "generators": args.k,
        "class_bound": args.n,
        "dims": [len(ws) for ws in basis],
        "basis": {str(i + 1): [w.format(names) for w in ws] for i, ws in enumerate(basis)},
    }
    return "\n".join(lines), obj


def cmd_bch(args):
    table = bch_table(args.n)
    obj = {"class_bound": args.n, "names": list(BCH_NAMES), "terms": table.series.to_json(BCH_NAMES)}
    return table.format(), obj


def _element_output(g: MalcevElement, names):
    return g.value.format(names), {"class_bound": g.value.class_bound, "coordinates": g.value.to_json(names)}


def cmd_mul(args):
    names = _names(args)
    a = _lie(args.a, args.n, names, "argument A")
    b = _lie(args.b, args.n, names, "argument B")
    return _element_output(mul(a, b), names)


def cmd_power(args):
    names = _names(args)
    a = _lie(args.a, args.n, names, "argument A")
    try:
        q = as_fraction(Fraction(args.q))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError("parse", str(exc), "argument Q")
    return _element_output(rational_power(a, q), names)


def cmd_log_word(args):
    names = _names(args)
    w = _word(args.word, names, "argument WORD")
    return _element_output(log_coordinates(w, args.n), names)


def cmd_lcs_weight(args):
    w = _word(args.word, _names(args), "argument WORD")
    k = lcs_weight(w, args.n)
    return (str(k) if k is not None else f">{args.n}"), {"class_bound": args.n, "weight": k}


def _betti(args, fn):
    table = fn(_load_simplicial(args.path))
    return table.format(), {"cohomological": table.cohomological, "betti": list(table.betti)}


def cmd_homology(args):
    return _betti(args, homology)


def cmd_cohomology(args):
    return _betti(args, cohomology)


def cmd_apl_cohomology(args):
    X = _load_simplicial(args.path)
    r = AplAlgebra(X, d_max=args.dmax).stable_cohomology(args.degree)
    obj = {
        "degree": r.degree,
        "status": r.status,
        "value": r.value,
        "stabilized_at": r.stabilized_at,
        "sequence": [[D, h] for D, h in r.sequence],
        "simplicial": r.simplicial,
        "agrees": r.agrees,
    }
    return r.format(), obj, (EXIT_OK if r.status == "stable" else EXIT_INCONCLUSIVE)


def _model(args):
    A = _load_model_input(args.path, args.dmax)
    try:
        return minimal_model(A, args.up_to)
    except ValueError as exc:
        raise CliError("precondition", str(exc), args.path)


def cmd_minimal_model(args):
    res = _model(args)
    M = res.M
    lines = ["generators: " + (", ".join(f"{n} ({d})" for n, d in M.generators) or "none")]
    lines += [f"d({n}) = {M.differential_of(n).format()}" for n in M.names if M.differential_of(n)]
    lines.append("counts: " + " ".join(f"{n}:{c}" for n, c in res.generator_counts()))
    obj = {
        "model": M.to_json(),
        "built_up_to": res.built_up_to,
        "generator_counts": [[n, c] for n, c in res.generator_counts()],
    }
    if isinstance(res.f.target, CdgaPresentation):
        obj["map"] = res.f.to_json()
    return "\n".join(lines), obj


def cmd_pi_rational(args):
    counts = _model(args).generator_counts()
    text = "\n".join(f"pi_{n} (x) Q: {c}" for n, c in counts)
    return text, {"dims": [[n, c] for n, c in counts]}


def cmd_check_minimal(args):
    A = _load_cdga(args.path)
    try:
        ok = is_minimal_simply_connected(A)
    except ValueError as exc:
        raise CliError("precondition", str(exc), args.path)
    return ("minimal" if ok else "not minimal"), {"minimal": ok}


def cmd_check_realization(args):
    A = _load_cdga(args.path)
    assignment = {}
    for item in args.assign or []:
        name, sep, form = item.partition("=")
        if not sep:
            raise CliError("parse", f"expected NAME=FORM, got {item!r}", "--assign")
        assignment[name.strip()] = form
    try:
        ok = is_realization_point(A, assignment, args.n)
    except ValueError as exc:
        raise CliError("precondition", str(exc), "--assign")
    return ("point" if ok else "not a point"), {"simplex_dim": args.n, "point": ok}


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    p = _Parser(prog="rathom", description="Exact rational homotopy computations.", parents=[common])
    p.add_argument("--version", action="version", version=f"rathom {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        s = sub.add_parser(name, help=help_, parents=[common])
        s.set_defaults(func=fn)
        return s

    def names_opt(s):
        s.add_argument("--names", help="comma-separated generator names (default x1,x2,...)")

    s = add("hall", cmd_hall, "Hall (Lyndon) basis of the free Lie algebra")
    s.add_argument("k", type=_positive, help="number of generators")
    s.add_argument("n", type=_positive, help="class bound")
    names_opt(s)

    s = add("bch", cmd_bch, "universal BCH polynomial in a, b")
    s.add_argument("n", type=_positive, help="class bound")

    s = add("mul", cmd_mul, "BCH product of two Lie elements")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-n", type=_positive, required=True, help="class bound")
    names_opt(s)

    s = add("power", cmd_power, "rational power of a Malcev element")
    s.add_argument("a")
    s.add_argument("q", help="rational exponent, e.g. 1/2")
    s.add_argument("-n", type=_positive, required=True, help="class bound")
    names_opt(s)

    s = add("log-word", cmd_log_word, "Malcev coordinates of a free-group word")
    s.add_argument("word")
    s.add_argument("-n", type=_positive, required=True, help="class bound")
    names_opt(s)

    s = add("lcs-weight", cmd_lcs_weight, "rational lower central series weight of a word")
    s.add_argument("word")
    s.add_argument("-n", type=_positive, required=True, help="class bound")
    names_opt(s)

    for name, fn in (("homology", cmd_homology), ("cohomology", cmd_cohomology)):
        s = add(name, fn, f"rational {name} of a simplicial set (JSON)")
        s.add_argument("path")

    s = add("apl-cohomology", cmd_apl_cohomology, "H^n of A_PL(X) by filtration stabilization")
    s.add_argument("path")
    s.add_argument("--degree", type=_nonneg, required=True)
    s.add_argument("--dmax", type=_positive, required=True)

    for name, fn in (("minimal-model", cmd_minimal_model), ("pi-rational", cmd_pi_rational)):
        s = add(name, fn, "minimal model of a cdga or simplicial set (JSON)"
                if name == "minimal-model" else "ranks of rational homotopy groups")
        s.add_argument("path")
        s.add_argument("--up-to", type=_positive, required=True, dest="up_to")
        s.add_argument("--dmax", type=_positive, help="filtration bound, required for simplicial input")

    s = add("check-minimal", cmd_check_minimal, "is a cdga minimal (simply connected case)")
    s.add_argument("path")

    s = add("check-realization", cmd_check_realization, "is an assignment a cdga map A -> nabla_n")
    s.add_argument("path")
    s.add_argument("-n", type=_nonneg, required=True, help="simplex dimension")
    s.add_argument("--assign", action="append", metavar="NAME=FORM")
    return p


def _emit(obj, as_json: bool, stream) -> None:
    if as_json:
        stream.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")
    else:
        stream.write(obj + "\n")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    as_json = "--json" in (sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        as_json = getattr(args, "json", False)
        out = args.func(args)
        text, obj = out[0], out[1]
        code = out[2] if len(out) > 2 else EXIT_OK
    except CliError as exc:
        _emit(exc.payload() if as_json else f"error ({exc.kind}): "
              + (f"{exc.location}: " if exc.location else "") + exc.message, as_json, stderr)
        return exc.code
    except InconclusiveError as exc:
        err = CliError("inconclusive", str(exc), None, EXIT_INCONCLUSIVE)
        _emit(err.payload() if as_json else f"error (inconclusive): {exc}", as_json, stderr)
        return EXIT_INCONCLUSIVE
    except ValueError as exc:
        _emit({"error": {"type": "precondition", "message": str(exc)}} if as_json
              else f"error (precondition): {exc}", as_json, stderr)
        return EXIT_ERROR
    _emit(obj if as_json else text, as_json, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
