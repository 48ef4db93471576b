"""Command-line front end.

    powersym legendre --a 2 --p 7
    powersym redei --p1 13 --p2 17 --p3 53 --json
    powersym cubic-symbol --p1 17 --p2 53 --p3 71 --json
    powersym batch records.jsonl

Exit status: 0 on success, 1 on domain errors (a JSON error object is
written to stdout), 2 on usage errors.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .arith import DEFAULT_TERNARY_BOUND, legendre_symbol
from .cubic import (DEFAULT_ALPHA_BOUND, build_theta_certificate,
                    triple_cubic_symbol)
from .eisenstein import EisInt, cubic_character, normalize_prime
from .errors import ParseError, SymbolError
from .magnus import GroupWord, expand, magnus_coefficient
from .milnor import LinkPresentation, milnor_invariant, tuple_symbol
from .redei import construct_alpha, redei_symbol
from .symbol import SymbolValue

DEFAULT_MAGNUS_DEGREE = 6
BOUND_ENV = "MS_DEFAULT_BOUND"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so batch records can fail one at a time."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _prime_arg(text):
    text = text.strip()
    try:
        gen = int(text)
    except ValueError:
        gen = EisInt.parse(text)
    return gen


def _index_arg(text):
    text = text.replace(",", " ").split()
    if len(text) == 1 and text[0].isdigit() and len(text[0]) > 1:
        text = list(text[0])
    try:
        return tuple(int(t) for t in text)
    except ValueError:
        raise ParseError(f"bad multi-index {text!r}") from None


def _env_bound():
    raw = os.environ.get(BOUND_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BOUND_ENV} must be an integer, got {raw!r}") from None


def _bound(args, default):
    if args.bound is not None:
        return args.bound
    env = _env_bound()
    return env if env is not None else default


def _symbol_out(value, meta=None):
    out = value.to_json()
    if meta:
        out["meta"] = meta
    return out


# --- verbs ---------------------------------------------------------------

def cmd_legendre(args):
    v = legendre_symbol(args.a, args.p)
    return {"symbol": str(v), "value": v, "a": args.a, "p": args.p}, str(v)


def cmd_redei(args):
    bound = _bound(args, DEFAULT_TERNARY_BOUND)
    cert = construct_alpha(args.p1, args.p2, bound)
    value = redei_symbol(args.p1, args.p2, args.p3, bound, cert=cert)
    out = _symbol_out(value, {"ternary_bound": bound})
    if args.emit_certificate:
        out["certificate"] = cert.to_json()
    return out, str(value)


def cmd_cubic_symbol(args):
    bound = _bound(args, DEFAULT_ALPHA_BOUND)
    P1, P2, P3 = (normalize_prime(_prime_arg(v)) for v in (args.p1, args.p2, args.p3))
    cert = build_theta_certificate(P1, P2, bound)
    value = triple_cubic_symbol(P1, P2, P3, bound, cert=cert)
    out = _symbol_out(value, {"alpha_bound": bound,
                              "primes": [str(P.pi) for P in (P1, P2, P3)]})
    if args.emit_certificate:
        out["certificate"] = cert.to_json()
    return out, str(value)


def cmd_normalize(args):
    P = normalize_prime(_prime_arg(args.pi), require_nine=not args.allow_non_nine)
    return P.to_json(), str(P.pi)


def cmd_character(args):
    P = normalize_prime(_prime_arg(args.pi), require_nine=False)
    u = EisInt.parse(args.u)
    value = SymbolValue(3, cubic_character(u, P))
    out = _symbol_out(value)
    out["prime"] = str(P.pi)
    return out, str(value)


def cmd_magnus(args):
    word = GroupWord.parse(args.word)
    degree = args.degree if args.degree is not None else DEFAULT_MAGNUS_DEGREE
    meta = {"magnus_degree": degree}
    if args.I is not None:
        I = _index_arg(args.I)
        c = magnus_coefficient(word, I, args.m)
        return ({"word": str(word), "I": list(I), "m": args.m,
                 "coefficient": c, "meta": meta}, str(c))
    series = expand(word, args.m, degree)
    terms = {",".join(map(str, k)): v for k, v in
             sorted(series.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))}
    text = "\n".join(f"({k or '1'}) {v}" for k, v in terms.items())
    return {"word": str(word), "m": args.m, "expansion": terms, "meta": meta}, text


def cmd_milnor(args):
    try:
        with open(args.presentation) as fh:
            pres = LinkPresentation.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, SymbolError):
            raise
        raise ParseError(f"cannot read presentation: {exc}") from None
    I = _index_arg(args.I) if args.I else tuple(pres.S)
    res = milnor_invariant(pres, I)
    out = res.to_json()
    text = f"mu({''.join(map(str, I))}) = {res.value}, Delta = ({res.delta}), reduced {res.reduced}"
    if args.symbol:
        sym = tuple_symbol(pres, I)
        out["symbol"] = sym.to_json()
        text += f"\nsymbol {sym}"
    return out, text


REFERENCE_CUBIC = ((71, 2), (89, 1), (107, 2), (179, 1), (197, 1))
REFERENCE_MAGNUS = (("[x1,x2]", 1), ("[x2,x1]", 2))


def reference_checks():
    """(label, expected, got) for the built-in example values."""
    rows = []
    for p3, exp in REFERENCE_CUBIC:
        got = triple_cubic_symbol(17, 53, p3).exponent
        rows.append((f"[17, 53, {p3}]_3", str(SymbolValue(3, exp)), str(SymbolValue(3, got))))
    for word, exp in REFERENCE_MAGNUS:
        got = magnus_coefficient(GroupWord.parse(word), (1, 2), 3)
        rows.append((f"mu_3(12; {word})", str(exp), str(got)))
    return rows


def cmd_verify_reference(args):
    rows = reference_checks()
    items = [{"item": label, "expected": e, "got": g, "pass": e == g}
             for label, e, g in rows]
    text = "\n".join(f"{'PASS' if it['pass'] else 'FAIL'} {it['item']}: "
                     f"expected {it['expected']}, got {it['got']}" for it in items)
    out = {"items": items, "pass": all(it["pass"] for it in items)}
    return out, text


VERBS = {
    "legendre": cmd_legendre,
    "redei": cmd_redei,
    "cubic-symbol": cmd_cubic_symbol,
    "normalize": cmd_normalize,
    "character": cmd_character,
    "magnus": cmd_magnus,
    "milnor": cmd_milnor,
    "verify-paper": cmd_verify_reference,
}


def build_parser():
    parser = _Parser(prog="powersym", description="Multiple power residue symbols.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = add("legendre", "Legendre symbol (a/p)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    for name, help_ in (("redei", "Redei triple symbol [p1, p2, p3]"),
                        ("cubic-symbol", "triple cubic residue symbol over Q(zeta_3)")):
        p = add(name, help_)
        conv = int if name == "redei" else str
        for flag in ("--p1", "--p2", "--p3"):
            p.add_argument(flag, type=conv, required=True)
        p.add_argument("--bound", type=int)
        p.add_argument("--emit-certificate", action="store_true")

    p = add("normalize", "normalized generator of a prime of Z[w]")
    p.add_argument("--pi", required=True, help="rational prime or a+b*w")
    p.add_argument("--allow-non-nine", action="store_true")

    p = add("character", "cubic residue character (u/pi)_3")
    p.add_argument("--u", required=True)
    p.add_argument("--pi", required=True)

    p = add("magnus", "Magnus coefficients of a group word")
    p.add_argument("--word", required=True, help='e.g. "[x1,x2]" or "x1^2*x2^-1"')
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--I", help="multi-index, e.g. 12 or 1,2")
    p.add_argument("--degree", type=int)

    p = add("milnor", "Milnor invariant of a link-type presentation")
    p.add_argument("--presentation", required=True, help="JSON file")
    p.add_argument("--I")
    p.add_argument("--symbol", action="store_true", help="also the n-tuple symbol")

    add("verify-paper", "check the built-in example values")

    p = sub.add_parser("batch", help="JSON-lines records, one command per line")
    p.add_argument("file")
    p.add_argument("--workers", type=int, default=4)
    return parser


def execute(argv):
    """Run one command; returns (exit code, json object, text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb == "batch":
            raise UsageError("batch records cannot nest")
        out, text = VERBS[args.verb](args)
    except UsageError as exc:
        return 2, {"error": "UsageError", "message": str(exc)}, str(exc)
    except SymbolError as exc:
        return 1, exc.to_dict(), f"{exc.code}: {exc}"
    code = 1 if args.verb == "verify-paper" and not out["pass"] else 0
    return code, out, text


def record_to_argv(record):
    if not isinstance(record, dict) or not isinstance(record.get("verb"), str):
        raise UsageError("record must be an object with a 'verb' string")
    argv = [record["verb"]]
    for key, value in record.items():
        if key == "verb":
            continue
        flag = "--" + key.replace("_", "-")
        if value is True:
            argv.append(flag)
        elif value is False or value is None:
            continue
        else:
            argv += [flag, str(value)]
    return argv


def _run_record(line):
    try:
        record = json.loads(line)
        argv = record_to_argv(record)
    except (ValueError, UsageError) as exc:
        return 1, {"error": "ParseError", "message": f"bad record: {exc}"}
    code, out, _ = execute(argv)
    return code, out


def run_batch(lines, workers=4):
    """Order-preserving evaluation of JSON-lines records."""
    lines = [ln for ln in lines if ln.strip()]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        return list(pool.map(_run_record, lines))


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "batch":
        try:
            args = build_parser().parse_args(argv)
            with open(args.file) as fh:
                lines = fh.readlines()
        except UsageError as exc:
            print(exc, file=sys.stderr)
            return 2
        except OSError as exc:
            print(json.dumps({"error": "ParseError", "message": str(exc)}), file=stdout)
            return 1
        results = run_batch(lines, args.workers)
        for _, out in results:
            print(json.dumps(out, sort_keys=True), file=stdout)
        return 1 if any(code for code, _ in results) else 0

    code, out, text = execute(argv)
    if code == 2:
        print(text, file=sys.stderr)
        return 2
    as_json = "--json" in argv or (code == 1 and argv[0] != "verify-paper")
    print(json.dumps(out, sort_keys=True) if as_json else text, file=stdout)
    return code


def main():
    sys.exit(run())
