"""Command line entry point: ``bizeta eval | verify | list``.

Exit codes: 0 success, 1 identity failure, 2 domain error, 64 usage error.
"""
import argparse
import cmath
import csv
import json
import sys

from .barnes import (BarnesRequest, EvalResult, barnes_zeta, barnes_zeta_asymptotic,
                     barnes_zeta_direct, barnes_zeta_fourier, log_multiple_gamma)
from .bernoulli import multiple_bernoulli
from .bilateral import BilateralRequest, f_minus, f_plus, g_function, xi
from .dcx import DirectedComplex
from .errors import BizetaError, UnknownSuiteError
from .qprod import QData, dedekind_eta, log_qpoch_multi, qpoch_tilde
from .verify import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# literals


def _scan_real(text, i, allow_sign=True):
    """Longest real number starting at i; returns (value, end) or (None, i)."""
    j = i
    if allow_sign and j < len(text) and text[j] in "+-":
        j += 1
    digits = j
    while j < len(text) and text[j].isdigit():
        j += 1
    if j < len(text) and text[j] == ".":
        j += 1
        while j < len(text) and text[j].isdigit():
            j += 1
    if j == digits or text[digits:j] == ".":
        return None, i
    if j < len(text) and text[j] in "eE":
        k = j + 1
        if k < len(text) and text[k] in "+-":
            k += 1
        if k < len(text) and text[k].isdigit():
            while k < len(text) and text[k].isdigit():
                k += 1
            j = k
    return float(text[i:j]), j


def _imag_tail(text, i):
    """Parses [sign][number]i starting at i; returns (value, end)."""
    sign = 1.0
    j = i
    if j < len(text) and text[j] in "+-":
        sign = -1.0 if text[j] == "-" else 1.0
        j += 1
    mag, k = _scan_real(text, j, allow_sign=False)
    if mag is None:
        mag, k = 1.0, j
    if k < len(text) and text[k] in "ij":
        return sign * mag, k + 1
    raise UsageError("bad complex literal %r at position %d" % (text, k))


def parse_complex(text):
    """'a', 'a+bi', 'a-bi', 'bi', 'i' or 'modulus@argument'."""
    raw = text
    text = text.strip()
    if not text:
        raise UsageError("empty complex literal")
    if "@" in text:
        left, _, right = text.partition("@")
        mod, e1 = _scan_real(left, 0)
        arg, e2 = _scan_real(right, 0)
        if mod is None or e1 != len(left):
            raise UsageError("bad modulus in %r at position %d" % (raw, e1))
        if arg is None or e2 != len(right):
            raise UsageError("bad argument in %r at position %d" % (raw, len(left) + 1 + e2))
        try:
            return DirectedComplex(mod, arg)
        except BizetaError as exc:
            raise UsageError("%s in %r" % (exc, raw)) from exc
    re_part, end = _scan_real(text, 0)
    if re_part is None:
        im, end = _imag_tail(text, 0)
        re_part = 0.0
    elif end == len(text):
        return complex(re_part, 0.0)
    elif text[end] in "ij":
        im, end = re_part, end + 1
        re_part = 0.0
    else:
        if text[end] not in "+-":
            raise UsageError("bad complex literal %r at position %d" % (raw, end))
        im, end = _imag_tail(text, end)
    if end != len(text):
        raise UsageError("bad complex literal %r at position %d" % (raw, end))
    return complex(re_part, im)


def parse_vector(text):
    text = text.strip()
    if text in ("", "()", "[]"):
        return []
    return [parse_complex(part) for part in text.split(",")]


def parse_int(text):
    try:
        return int(text)
    except ValueError:
        raise UsageError("expected an integer, got %r" % text) from None


# ---------------------------------------------------------------------------
# eval


def _plain(v):
    return v.value if isinstance(v, DirectedComplex) else v


def _eval_barnes(p, tol):
    req = BarnesRequest(p["s"], p["z"], p["omega"])
    method = p.get("method", "auto")
    routes = {"auto": barnes_zeta, "direct": barnes_zeta_direct,
              "fourier": barnes_zeta_fourier, "asymptotic": barnes_zeta_asymptotic}
    if method not in routes:
        raise UsageError("method must be one of %s" % ", ".join(routes))
    return routes[method](req, tol)


def _eval_xi(p, tol):
    return xi(BilateralRequest(p["s"], p["z"], p["omega0"], p.get("omega", [])), tol)


def _eval_bernoulli(p, tol):
    om = p["omega"]
    v = multiple_bernoulli(p["r"], p["n"], _plain(p["z"]), om)
    return EvalResult(v, 0.0, p["n"] + 1, "closed-form")


def _eval_gamma(p, tol):
    log_value, err = log_multiple_gamma(p["z"], p["omega"], tol=tol)
    v = cmath.exp(log_value)
    return EvalResult(v, abs(v) * err, 0, "finite-difference")


def _product_result(d, tol):
    if d.r == 0:
        return EvalResult(1 - d.x, 0.0, 1, "product")
    log_value, bound, used = log_qpoch_multi(d, tol)
    v = cmath.exp(log_value)
    return EvalResult(v, abs(v) * bound, used, "product")


def _eval_eta(p, tol):
    v = dedekind_eta(_plain(p["tau"]), tol)
    return EvalResult(v, abs(v) * tol, 0, "product")


def _eval_qpoch(p, tol):
    return _product_result(QData(_plain(p["x"]), [_plain(q) for q in p.get("q", [])]), tol)


def _eval_qpoch_tilde(p, tol):
    l = p.get("l")
    v = qpoch_tilde(QData(_plain(p["x"]), [_plain(q) for q in p.get("q", [])], l), tol)
    return EvalResult(v, abs(v) * tol, 0, "product")


def _eval_f(fn):
    def run(p, tol):
        return fn(p["s"], _plain(p["z"]), p["omega"], tol)
    return run


def _eval_g(p, tol):
    return g_function(p["s"], _plain(p["tau"]), tol)


# name -> (runner, required, optional); kinds: c complex, v vector, i int, t text
FUNCTIONS = {
    "barnes": (_eval_barnes, {"s": "c", "z": "c", "omega": "v"}, {"method": "t"}),
    "xi": (_eval_xi, {"s": "c", "z": "c", "omega0": "c"}, {"omega": "v"}),
    "bernoulli": (_eval_bernoulli, {"r": "i", "n": "i", "z": "c", "omega": "v"}, {}),
    "gamma_multiple": (_eval_gamma, {"z": "c", "omega": "v"}, {}),
    "eta": (_eval_eta, {"tau": "c"}, {}),
    "qpoch": (_eval_qpoch, {"x": "c"}, {"q": "v"}),
    "qpoch_tilde": (_eval_qpoch_tilde, {"x": "c"}, {"q": "v", "l": "i"}),
    "f_plus": (_eval_f(f_plus), {"s": "c", "z": "c", "omega": "v"}, {}),
    "f_minus": (_eval_f(f_minus), {"s": "c", "z": "c", "omega": "v"}, {}),
    "g": (_eval_g, {"s": "c", "tau": "c"}, {}),
}

_PARSERS = {"c": parse_complex, "v": parse_vector, "i": parse_int, "t": str}


def parse_params(function, tokens):
    if function not in FUNCTIONS:
        raise UsageError("unknown function %r" % function)
    _, required, optional = FUNCTIONS[function]
    kinds = dict(required, **optional)
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep:
            raise UsageError("parameter %r is not key=value" % tok)
        if key not in kinds:
            raise UsageError("%s takes no parameter %r" % (function, key))
        out[key] = _PARSERS[kinds[key]](value)
    missing = [k for k in required if k not in out]
    if missing:
        raise UsageError("%s needs %s" % (function, ", ".join(missing)))
    for key in ("s",):
        if isinstance(out.get(key), DirectedComplex):
            out[key] = out[key].value
    return out


def cmd_eval(args, out):
    params = parse_params(args.function, args.params)
    try:
        res = FUNCTIONS[args.function][0](params, args.tol)
    except BizetaError as exc:
        out.write(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        out.write("\n")
        return EXIT_DOMAIN
    if args.format == "text":
        v = res.value
        out.write("%s %.17g%+.17gi err=%.3g terms=%d method=%s\n"
                  % (args.function, v.real, v.imag, res.err_estimate, res.terms_used,
                     res.method))
    else:
        out.write(json.dumps(res.as_dict()) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / list

CSV_FIELDS = ("name", "abs_residual", "rel_residual", "tol", "pass", "elapsed_ms")


def cmd_verify(args, out):
    suites = [s for s in (args.suites or "").split(",") if s]
    try:
        reports = run_suite(args.seed, args.tol, suites, timing=args.timing)
    except UnknownSuiteError as exc:
        raise UsageError(str(exc)) from exc
    except BizetaError as exc:
        out.write(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        out.write("\n")
        return EXIT_DOMAIN
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for rep in reports:
            w.writerow([rep.name, repr(rep.abs_residual), repr(rep.rel_residual),
                        repr(rep.tol), "true" if rep.passed else "false",
                        repr(rep.elapsed_ms)])
    elif args.format == "text":
        for rep in reports:
            out.write("%s %-40s rel=%.2e abs=%.2e tol=%.0e\n"
                      % ("PASS" if rep.passed else "FAIL", rep.name, rep.rel_residual,
                         rep.abs_residual, rep.tol))
    else:
        for rep in reports:
            out.write(json.dumps(rep.as_dict()) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_list(args, out):
    if args.format == "json":
        funcs = {name: {"required": list(req), "optional": list(opt)}
                 for name, (_, req, opt) in FUNCTIONS.items()}
        out.write(json.dumps({"functions": funcs, "suites": list(SUITE_NAMES)}) + "\n")
        return EXIT_OK
    out.write("functions:\n")
    for name, (_, req, opt) in FUNCTIONS.items():
        extra = " [%s]" % " ".join("%s=" % k for k in opt) if opt else ""
        out.write("  %-15s %s%s\n" % (name, " ".join("%s=" % k for k in req), extra))
    out.write("suites:\n")
    for name in SUITE_NAMES:
        out.write("  %s\n" % name)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="bizeta", description="Barnes and bilateral zeta functions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate one function")
    e.add_argument("--function", required=True, choices=list(FUNCTIONS))
    e.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    e.add_argument("--tol", type=float, default=1e-10)
    e.add_argument("--format", choices=("json", "text"), default="json")

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--suites", default="", help="comma separated, default all")
    v.add_argument("--tol", type=float, default=1e-10)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--format", choices=("json", "csv", "text"), default="json")
    v.add_argument("--timing", action="store_true",
                   help="record wall-clock times (output no longer reproducible)")

    ls = sub.add_parser("list", help="show functions and suites")
    ls.add_argument("--format", choices=("json", "text"), default="text")
    return p


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "list": cmd_list}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "tol", 1.0) <= 0:
            raise UsageError("--tol must be positive")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write("usage error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
