"""Command-line front end.

Ideal files look like::

    n=4;
    J = x1*x2, x1*x3;
    I = x1*x2*x3;

``I`` is optional (an ideal).  Use ``J = 1`` for a cyclic module S/I.
Whitespace is ignored.  Every command prints one JSON report; the exit code
is 0 on success, 1 on bad input and 2 when a size budget refuses the work.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
import warnings
from importlib import resources

from . import constructions, transforms
from .decomposition import StanleyDecomposition, from_json, measure, to_json, verify
from .errors import SizeBudgetExceeded, SlengthError
from .linquot import decomposition_from_order, find_linear_order
from .monomials import (MonomialIdeal, QuotientModule, parse_monomial, render_monomial,
                        scale)
from .oracle import oracle_slength
from .solver import (FACE_BUDGET, POINT_BUDGET, best_witness, conjecture_experiment,
                     constrained_min_length, exact_slength_squarefree, grid_partition,
                     sdepth_squarefree, slength_report)


class ParseError(SlengthError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class RedundantGeneratorsWarning(UserWarning):
    pass


# -- ideal files ------------------------------------------------------------

class _Reader:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, msg, pos=None):
        raise ParseError(msg, *self.where(pos))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}, found {self.peek() or 'end of input'!r}")
        self.pos += 1

    def number(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a number")
        return int(self.text[start:self.pos]), start

    def name(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos], start


def _monomial(r: _Reader, n: int):
    exps = [0] * n
    if r.peek() == "1":
        r.pos += 1
        return tuple(exps)
    while True:
        if r.peek() != "x":
            r.fail("expected a variable x<index> or 1")
        r.pos += 1
        idx, at = r.number()
        if not 1 <= idx <= n:
            r.fail(f"variable x{idx} out of range for n={n}", at)
        e = 1
        if r.peek() == "^":
            r.pos += 1
            e, _ = r.number()
        exps[idx - 1] += e
        if r.peek() != "*":
            return tuple(exps)
        r.pos += 1


def _generators(r: _Reader, n: int):
    gens = [_monomial(r, n)]
    while r.peek() == ",":
        r.pos += 1
        gens.append(_monomial(r, n))
    return gens


def parse_ideal(text: str) -> QuotientModule:
    r = _Reader(text)
    key, at = r.name()
    if key != "n":
        r.fail("file must start with n=<int>;", at)
    r.expect("=")
    n, at = r.number()
    if n < 1:
        r.fail("n must be positive", at)
    r.expect(";")
    parts = {}
    while r.peek():
        key, at = r.name()
        if key not in ("J", "I") or key in parts:
            r.fail(f"expected 'J =' or 'I =', found {key or r.peek()!r}", at)
        if key == "I" and "J" not in parts:
            r.fail("J must come before I", at)
        r.expect("=")
        gens = _generators(r, n)
        if r.peek():  # the final semicolon is optional
            r.expect(";")
        ideal = MonomialIdeal(n, tuple(gens))
        if len(ideal.gens) < len(set(gens)):
            warnings.warn(f"{key}: redundant generators removed, using {ideal}",
                          RedundantGeneratorsWarning, stacklevel=2)
        parts[key] = ideal
    if "J" not in parts:
        r.fail("missing 'J = ...;'")
    J = parts["J"]
    I = parts.get("I", MonomialIdeal(n, ()))
    try:
        return QuotientModule(J, I)
    except SlengthError as e:
        raise ParseError(str(e)) from None


def render(Q: QuotientModule) -> str:
    def gens(I):
        return ", ".join(render_monomial(u) for u in I.gens)

    out = f"n={Q.n};\nJ = {gens(Q.J)};\n"
    if not Q.I.is_zero:
        out += f"I = {gens(Q.I)};\n"
    return out


def input_hash(Q: QuotientModule) -> str:
    return hashlib.sha256(render(Q).encode()).hexdigest()[:16]


# -- reports ----------------------------------------------------------------

def _bound(b):
    return None if b is None else {"value": b.value, "method": b.method}


def _witness_fields(D):
    if D is None:
        return {"witness": None, "sdepth_of_witness": None}
    return {"witness": to_json(D), "sdepth_of_witness": measure(D)[1]}


def _report_fields(rep):
    out = {"lower": _bound(rep.lower), "upper": _bound(rep.upper), "exact": rep.exact}
    out.update(_witness_fields(rep.witness))
    if rep.skipped:
        out["skipped"] = rep.skipped
    return out


def _budgets(args):
    b = args.budget
    return (b or FACE_BUDGET), (b or POINT_BUDGET)


def cmd_slength(args, Q):
    faces, points = _budgets(args)
    if args.min_sdepth is not None:
        rep = constrained_min_length(Q, args.min_sdepth, faces)
        out = _report_fields(rep)
        out["feasible"] = rep.feasible
        out["min_sdepth"] = args.min_sdepth
        return out
    return _report_fields(slength_report(Q, faces, points))


def cmd_bounds(args, Q):
    faces, points = _budgets(args)
    rep = slength_report(Q, faces, points)
    out = _report_fields(rep)
    out["sources"] = [{"side": side, "value": b.value, "method": b.method}
                      for side, b in rep.sources]
    return out


def cmd_sdepth(args, Q):
    faces, _ = _budgets(args)
    s, D = sdepth_squarefree(Q, faces)
    out = {"sdepth": s}
    out.update(_witness_fields(D))
    return out


def _decompose(method, Q, args) -> StanleyDecomposition:
    faces, points = _budgets(args)
    if method == "auto":
        rep = slength_report(Q, faces, points)
        if rep.witness is None:
            raise SizeBudgetExceeded("no decomposition within budget")
        return rep.witness
    if method == "squarefree":
        return exact_slength_squarefree(Q, faces).witness
    if method == "grid":
        return grid_partition(Q, points)
    if method == "best":
        return best_witness(Q)
    if method == "principal":
        if not (Q.is_cyclic and Q.I.is_principal):
            raise SlengthError("principal needs a module S/(u): J = 1; I = u;")
        return constructions.principal_quotient(Q.I.gens[0])
    if not Q.is_ideal:
        raise SlengthError(f"method {method} applies to ideals only")
    I = Q.J
    if method == "janet":
        return constructions.janet(I)
    if method == "ci":
        return constructions.ci_decomposition(I)
    if method == "ci3":
        return constructions.ci3_decomposition(I)
    if method == "prime":
        return constructions.prime_decomposition(I)
    if method == "n2":
        return constructions.formula_n2(I)[1]
    if method == "m2":
        return constructions.formula_m2(I)[1]
    if method == "linquot":
        order = find_linear_order(I)
        if order is None:
            raise SlengthError("the ideal has no linear quotients")
        return decomposition_from_order(I, order)
    raise SlengthError(f"unknown method {method!r}")


def cmd_decompose(args, Q):
    D = _decompose(args.method, Q, args)
    out = {"method": args.method, "length": len(D),
           "decomposition": str(D), "verified": bool(verify(D))}
    out.update(_witness_fields(D))
    return out


def _load_witness(path, Q):
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data["witness"]
    return from_json(Q, data)


def cmd_verify(args, Q):
    D = _load_witness(args.witness, Q)
    res = verify(D)
    out = {"verified": res.ok, "length": len(D)}
    if not res.ok:
        out["counterexample"] = list(res.counterexample)
        out["failure"] = res.kind
    out.update(_witness_fields(D))
    return out


def cmd_transform(args, Q):
    n = Q.n
    D = _load_witness(args.witness, Q) if args.witness else None
    by = parse_monomial(args.by, n) if args.by else None
    if args.op in ("colon", "scale") and by is None:
        raise SlengthError(f"--by is required for {args.op}")
    if args.op == "polarize":
        target, pmap = transforms.polarize(Q)
        D = D and transforms.polarize_decomposition_full(D)[0]
        extra = {"variables": pmap.variable_names()}
    elif args.op == "radical":
        target = transforms.radical_module(Q)
        D = D and transforms.radical_decomposition(D)
        extra = {}
    elif args.op == "colon":
        target = transforms.colon_module(Q, by)
        D = D and transforms.colon_transform(D, by)
        extra = {}
    elif args.op == "scale":
        target = QuotientModule(scale(Q.J, by), scale(Q.I, by))
        D = D and transforms.scale_decomposition(D, by)
        extra = {}
    elif args.op == "extend":
        target = QuotientModule(transforms._pad(Q.J), transforms._pad(Q.I))
        D = D and transforms.extend_variable(D)
        extra = {}
    else:
        raise SlengthError(f"unknown transform {args.op!r}")
    out = {"op": args.op, "result": render(target), "result_hash": input_hash(target)}
    out.update(extra)
    if D is not None:
        out.update(_witness_fields(D))
        out["verified"] = bool(verify(D))
    return out


def cmd_linquot(args, Q):
    if not Q.is_ideal:
        raise SlengthError("linquot applies to ideals only")
    faces, points = _budgets(args)
    order = find_linear_order(Q.J)
    rep = slength_report(Q, faces, points)
    out = _report_fields(rep)
    out["linear_quotients"] = order is not None
    out["order"] = None if order is None else [render_monomial(u) for u in order]
    out["slength"] = rep.value
    return out


def cmd_oracle(args, Q):
    value = oracle_slength(Q, args.mode)
    b = {"value": value, "method": f"oracle-{args.mode}"}
    return {"mode": args.mode, "value": value, "lower": b, "upper": b, "exact": True}


def cmd_conjecture(args):
    res = conjecture_experiment(args.d1, args.d2, args.d3, args.n,
                                args.budget or FACE_BUDGET)
    D = res.pop("witness")
    res["slength"] = res.pop("exact")
    b = {"value": res["slength"], "method": "squarefree-exact"}
    res.update({"lower": b, "upper": b, "exact": True})
    res.update(_witness_fields(D))
    return res


COMMANDS = {
    "slength": cmd_slength, "sdepth": cmd_sdepth, "decompose": cmd_decompose,
    "verify": cmd_verify, "transform": cmd_transform, "linquot": cmd_linquot,
    "bounds": cmd_bounds, "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="override the solver size budgets (faces / grid points)")
    common.add_argument("--deterministic", action="store_true",
                        help="sequential search (always the case in this implementation)")
    common.add_argument("--threads", type=int, default=None,
                        help="parallelism limit; overrides SLENGTH_THREADS")
    common.add_argument("--indent", type=int, default=None)

    p = argparse.ArgumentParser(prog="slength", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("file")
        return sp

    sp = with_file("slength", "certified Stanley length")
    sp.add_argument("--min-sdepth", type=int, default=None)
    with_file("sdepth", "Stanley depth of a squarefree module")
    sp = with_file("decompose", "print a Stanley decomposition")
    sp.add_argument("--method", default="auto",
                    choices=["auto", "best", "squarefree", "grid", "janet", "ci", "ci3",
                             "principal", "prime", "n2", "m2", "linquot"])
    sp = with_file("verify", "check a witness decomposition")
    sp.add_argument("witness")
    sp = with_file("transform", "apply a module transform")
    sp.add_argument("--op", required=True,
                    choices=["polarize", "radical", "colon", "scale", "extend"])
    sp.add_argument("--by", default=None, help="monomial for colon / scale")
    sp.add_argument("--witness", default=None, help="decomposition to carry along")
    with_file("linquot", "linear quotients")
    with_file("bounds", "every bound source")
    sp = with_file("oracle", "brute-force slength (tiny inputs)")
    sp.add_argument("--mode", default="squarefree", choices=["squarefree", "grid"])
    sp = sub.add_parser("conjecture", parents=[common],
                        help="three-generator complete intersection experiment")
    sp.add_argument("d1", type=int)
    sp.add_argument("d2", type=int)
    sp.add_argument("d3", type=int)
    sp.add_argument("n", type=int, nargs="?", default=None)
    return p


def thread_limit(flag) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("SLENGTH_THREADS")
    return int(env) if env else 1


def run(argv=None):
    """Run one command; returns ``(report dict, exit code)``."""
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    out = {"command": args.command}
    try:
        if args.command == "conjecture":
            out["input_hash"] = hashlib.sha256(
                f"{args.d1},{args.d2},{args.d3},{args.n}".encode()).hexdigest()[:16]
            out.update(cmd_conjecture(args))
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", RedundantGeneratorsWarning)
                Q = parse_ideal(text)
            notes = [str(w.message) for w in caught]
            for msg in notes:
                print(f"warning: {msg}", file=sys.stderr)
            if notes:
                out["warnings"] = notes
            out["input_hash"] = input_hash(Q)
            out.update(COMMANDS[args.command](args, Q))
        code = 0
    except SizeBudgetExceeded as e:
        out.update({"error": str(e), "error_kind": "size"})
        code = 2
    except (SlengthError, OSError, ValueError, KeyError) as e:
        out.update({"error": str(e), "error_kind": "input"})
        code = 1
    out.setdefault("input_hash", None)
    out["threads"] = thread_limit(args.threads)
    out["timings_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return out, code, args


def load_schema() -> dict:
    return json.loads(resources.files("slength").joinpath("report_schema.json").read_text())


def main(argv=None) -> int:
    out, code, args = run(argv)
    print(json.dumps(out, indent=args.indent))
    return code


if __name__ == "__main__":
    sys.exit(main())
