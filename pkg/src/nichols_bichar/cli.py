"""Command-line interface: ``nichols-bichar <command> SPEC [options]``.

SPEC is a JSON file ``{"n": 2, "conductor": 8, "exponents": [[4, 2], [2, 4]]}``
with p_ij = zeta_N^(exponents[i][j]); optional keys ``cap`` and ``labels``.

Exit codes: 0 success or verified, 1 refuted with a witness, 2 evidence only,
64 usage error, 65 malformed spec or expression, 66 unreadable spec file,
68 degree cap refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from . import checkers
from .bichar import DEFAULT_CAP, BraidingSpec, CapExceeded, is_connected, is_quantum_linear_space, is_symmetric
from .expr import ExprError, parse_element
from .free_algebra import canonical_kind, format_word
from .lie_closure import dims, equality_probe, generate
from .lyndon import is_lyndon, root_system
from .nichols import degree_basis, nichols_dims, normal_form
from .scalars import mult_order

EXIT_OK, EXIT_REFUTED, EXIT_EVIDENCE = 0, 1, 2
EXIT_USAGE, EXIT_DATAERR, EXIT_NOINPUT, EXIT_CAP = 64, 65, 66, 68

_STATUS_EXIT = {checkers.VERIFIED: EXIT_OK, checkers.REFUTED: EXIT_REFUTED, checkers.EVIDENCE: EXIT_EVIDENCE}


class SpecError(ValueError):
    pass


class UsageError(Exception):
    pass


# -- spec loading -----------------------------------------------------------------


def _line_col(text: str, offset: int) -> tuple:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _locate(text: str, key: str, row: int | None = None, entry: int | None = None) -> int:
    """Best-effort character offset of doc[key][row][entry] in the raw JSON text."""
    start = text.find(f'"{key}"')
    if start < 0:
        return 0
    i = text.find(":", start) + 1
    if row is None:
        while i < len(text) and text[i].isspace():
            i += 1
        return i
    depth, r, e = 0, -1, 0
    while i < len(text):
        ch = text[i]
        if ch == "[":
            depth += 1
            if depth == 2:
                r += 1
                e = 0
                if r == row and entry is None:
                    return i
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
        elif ch == "," and depth == 2:
            e += 1
        elif depth == 2 and r == row and e == entry and not ch.isspace():
            return i
        i += 1
    return i


def spec_from_text(text: str, source: str = "<spec>") -> BraidingSpec:
    def fail(msg, offset=0):
        line, col = _line_col(text, offset)
        raise SpecError(f"{source}:{line}:{col}: {msg}")

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        fail("expected a JSON object")
    for key in ("n", "conductor", "exponents"):
        if key not in doc:
            fail(f"missing field: {key}")
    n, N, rows = doc["n"], doc["conductor"], doc["exponents"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        fail("n must be a positive integer", _locate(text, "n"))
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        fail("conductor must be a positive integer", _locate(text, "conductor"))
    if not isinstance(rows, list) or len(rows) != n:
        fail(f"exponents must be a list of {n} rows", _locate(text, "exponents"))
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            fail(f"exponents row {r + 1} must have {n} entries", _locate(text, "exponents", r))
        for e, k in enumerate(row):
            if not isinstance(k, int) or isinstance(k, bool):
                fail(f"exponents[{r + 1}][{e + 1}] must be an integer", _locate(text, "exponents", r, e))
    cap = doc.get("cap", DEFAULT_CAP)
    if not isinstance(cap, int) or isinstance(cap, bool) or cap < 1:
        fail("cap must be a positive integer", _locate(text, "cap"))
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
            fail(f"labels must be a list of {n} strings", _locate(text, "labels"))
        labels = tuple(labels)
    return BraidingSpec(n, N, tuple(tuple(r) for r in rows), cap, labels)


def load_spec(path: str) -> BraidingSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FileNotFoundError(f"{path}: {exc.strerror}") from None
    return spec_from_text(text, path)


# -- commands ---------------------------------------------------------------------


def _words(ws) -> list:
    return [format_word(w) for w in ws]


def cmd_info(spec, args):
    n = spec.n
    p = [[_s(spec, spec.p(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)]
    orders = [[mult_order(spec.p(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)]
    payload = {
        "spec": spec.to_dict(),
        "fingerprint": spec.fingerprint,
        "cap": spec.cap,
        "braiding": p,
        "orders": orders,
        "symmetric": is_symmetric(spec),
        "connected": is_connected(spec),
        "quantum_linear_space": is_quantum_linear_space(spec),
    }
    lines = [
        f"rank {n}, conductor {spec.conductor}, degree cap {spec.cap}, fingerprint {spec.fingerprint}",
        *(f"p_{i + 1}{j + 1} = {p[i][j]}  (order {orders[i][j]})" for i in range(n) for j in range(n)),
        f"symmetric: {payload['symmetric']}",
        f"connected: {payload['connected']}",
        f"quantum linear space: {payload['quantum_linear_space']}",
    ]
    return payload, lines, EXIT_OK


def _s(spec, c) -> str:
    return str(c.in_field(spec.conductor)) if spec.conductor % c.conductor == 0 else str(c)


def cmd_nichols_dims(spec, args):
    D = args.max_degree
    bd = nichols_dims(spec, D)
    exhausted = 0 in bd[1:]
    payload = {"max_degree": D, "dims": bd, "total": sum(bd), "exhausted": exhausted}
    lines = [f"dims 0..{D}: {bd}", f"total through degree {D}: {sum(bd)}" + ("" if exhausted else " (not exhausted)")]
    return payload, lines, EXIT_OK


def cmd_standard_words(spec, args):
    m = args.degree
    ws = list(degree_basis(spec, m).basis_words)
    payload = {"degree": m, "words": _words(ws), "lyndon": [format_word(w) for w in ws if is_lyndon(w)], "dim": len(ws)}
    lines = [f"{len(ws)} standard words of degree {m}:"] + [
        f"  {format_word(w)}" + ("  (Lyndon)" if is_lyndon(w) else "") for w in ws
    ]
    return payload, lines, EXIT_OK


def cmd_roots(spec, args):
    report = root_system(spec, args.max_degree)
    payload = report.to_dict()
    payload["hard_superletters"] = {
        ",".join(map(str, r)): _words(ws) for r, ws in sorted(report.words.items())
    }
    lines = [f"positive roots found up to degree {args.max_degree}:"]
    for r in report.positive_roots:
        lines.append(f"  {list(r)}  multiplicity {report.multiplicities[r]}  {', '.join(_words(report.words[r]))}")
    lines.append(f"saturated: {report.saturated} (evidence only)")
    return payload, lines, EXIT_OK


def cmd_lie(spec, args):
    kind = canonical_kind(args.bracket)
    gs = generate(spec, kind, args.max_degree)
    per, total = dims(gs)
    per = per[: args.max_degree]
    payload = {
        "bracket": kind,
        "max_degree": args.max_degree,
        "dims": per,
        "total": total,
        "stabilized": gs.stabilized,
        "stabilized_at": gs.stabilized_at,
        "nichols_exhausted": gs.nichols_exhausted,
    }
    lines = [f"{kind} closure, per-degree dims 1..{args.max_degree}: {per}, total {total}"]
    lines.append(f"stabilized: {gs.stabilized}" + (f" at degree {gs.stabilized_at}" if gs.stabilized else ""))
    if args.basis:
        basis = {str(d): [u.to_string(spec.conductor) for u in gs.basis(d)] for d in range(1, args.max_degree + 1)}
        payload["basis"] = basis
        for d, us in basis.items():
            for u in us:
                lines.append(f"  [{d}] {u}")
    return payload, lines, EXIT_OK


def cmd_eval(spec, args):
    u = parse_element(args.expr, spec)
    text = u.to_string(spec.conductor)
    payload = {"expr": args.expr, "element": text}
    lines = [text]
    if args.normal_form:
        nf = normal_form(spec, u)
        payload["normal_form"] = nf.to_string(spec.conductor)
        payload["zero_in_nichols"] = not nf
        lines.append(f"normal form in B(V): {payload['normal_form']}")
    return payload, lines, EXIT_OK


def _parse_words(text: str, n: int) -> list:
    out = []
    for chunk in text.split(";"):
        letters = chunk.replace(",", " ").split()
        if not letters:
            raise UsageError(f"empty word in --words {text!r}")
        try:
            w = tuple(int(a) for a in letters)
        except ValueError:
            raise UsageError(f"--words expects letter indices, got {chunk!r}") from None
        if any(not 1 <= a <= n for a in w):
            raise UsageError(f"letter index out of range 1..{n} in --words")
        out.append(w)
    return out


CLAIMS = {
    "prop5.1": lambda s, a: checkers.check_braided_equals_R_closure(s, a.max_degree or 3),
    "prop5.2": lambda s, a: checkers.check_braided_equals_L_closure(s, a.max_degree or 3),
    "prop5.3": lambda s, a: checkers.check_R_complement_decomposition(s, a.max_degree),
    "prop5.4": lambda s, a: checkers.check_L_complement_decomposition(s, a.max_degree),
    "thm4.3": lambda s, a: checkers.check_rank_two_R_basis(s),
    "thm4.5": lambda s, a: checkers.check_rank_two_L_basis(s),
    "lemma3.3": lambda s, a: checkers.verify_nested_R_product_formula(s, _claim_words(s, a)),
    "lemma3.8": lambda s, a: checkers.verify_nested_L_product_formula(s, _claim_words(s, a)),
    "lemma6.5": lambda s, a: checkers.verify_ad_power_identities(s, a.i, a.j, a.m, "expansions"),
    "lemma6.6": lambda s, a: checkers.verify_ad_power_identities(s, a.i, a.j, a.m, "R"),
    "lemma6.7": lambda s, a: checkers.verify_ad_power_identities(s, a.i, a.j, a.m, "L"),
    "prop6.10": lambda s, a: checkers.check_vanishing_thresholds(s, a.i, a.j),
    "thm6.15": lambda s, a: checkers.finiteness_report(s, a.max_degree),
}


def _claim_words(spec, args):
    if args.words:
        return _parse_words(args.words, spec.n)
    return [(i,) for i in range(1, spec.n + 1)]


def cmd_check(spec, args):
    for name in ("i", "j"):
        if not 1 <= getattr(args, name) <= spec.n:
            raise UsageError(f"--{name} must lie in 1..{spec.n}")
    if args.claim in ("lemma6.5", "lemma6.6", "lemma6.7", "prop6.10") and args.i == args.j:
        raise UsageError("--i and --j must differ")
    verdict = CLAIMS[args.claim](spec, args)
    payload = verdict.to_dict()
    lines = [f"{verdict.claim}: {verdict.status}"]
    if verdict.witness:
        lines.append(f"witness: {verdict.witness}")
    for k, v in sorted(verdict.details.items()):
        lines.append(f"  {k}: {v}")
    return payload, lines, _STATUS_EXIT[verdict.status]


def cmd_probe(spec, args):
    kinds = [k.strip() for k in args.equality.split(",")]
    if len(kinds) != 2:
        raise UsageError("--equality expects two bracket kinds, e.g. L,R")
    try:
        kinds = [canonical_kind(k) for k in kinds]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = equality_probe(spec, kinds[0], kinds[1], args.max_degree)
    lines = [f"{kinds[0]} vs {kinds[1]} closures (evidence only):"]
    for row in payload["per_degree"]:
        lines.append(f"  degree {row['degree']}: {'equal' if row['equal'] else 'differ'}  dims {row['dims']}")
    return payload, lines, EXIT_OK


# -- parser -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("spec", help="braiding spec JSON file")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--cap", type=_nonnegative, help="override the degree cap set in the braiding file")

    parser = _Parser(prog="nichols-bichar", description="Nichols algebras of diagonal type and their bicharacter Lie closures.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", parents=[common], help="braiding summary")
    p.set_defaults(run=cmd_info)

    p = sub.add_parser("nichols-dims", parents=[common], help="dim B(V) per degree")
    p.add_argument("--max-degree", type=_nonnegative, required=True)
    p.set_defaults(run=cmd_nichols_dims)

    p = sub.add_parser("standard-words", parents=[common], help="standard words of one degree")
    p.add_argument("--degree", type=_nonnegative, required=True)
    p.set_defaults(run=cmd_standard_words)

    p = sub.add_parser("roots", parents=[common], help="degrees of hard super-letters")
    p.add_argument("--max-degree", type=_nonnegative, required=True)
    p.set_defaults(run=cmd_roots)

    p = sub.add_parser("lie", parents=[common], help="closure of V under a bracket")
    p.add_argument("--bracket", choices=["L", "R", "c", "minus"], required=True)
    p.add_argument("--max-degree", type=_nonnegative, required=True)
    p.add_argument("--basis", action="store_true")
    p.set_defaults(run=cmd_lie)

    p = sub.add_parser("eval", parents=[common], help="evaluate an element expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--normal-form", action="store_true")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("check", parents=[common], help="run a claim checker")
    p.add_argument("--claim", choices=sorted(CLAIMS), required=True)
    p.add_argument("--i", type=_nonnegative, default=1)
    p.add_argument("--j", type=_nonnegative, default=2)
    p.add_argument("--m", type=_nonnegative, default=3)
    p.add_argument("--words", help="input words for nested-bracket claims, e.g. '1;2;3'")
    p.add_argument("--max-degree", type=_nonnegative)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("probe", parents=[common], help="compare two closures degree by degree")
    p.add_argument("--equality", required=True, help="two kinds, e.g. L,R or L,minus")
    p.add_argument("--max-degree", type=_nonnegative, required=True)
    p.set_defaults(run=cmd_probe)
    return parser


def render_json(payload: dict) -> str:
    """Envelope with the deterministic payload first and a timestamped metadata block."""
    body = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    meta = json.dumps({"timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds")}, separators=(",", ":"))
    return '{"payload":' + body + ',"meta":' + meta + "}"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"nichols-bichar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        spec = load_spec(args.spec)
        if args.cap is not None:
            spec = spec.with_cap(args.cap)
        payload, lines, code = args.run(spec, args)
    except UsageError as exc:
        print(f"nichols-bichar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"nichols-bichar: error: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except CapExceeded as exc:
        print(f"nichols-bichar: refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SpecError, ExprError, ValueError, ZeroDivisionError) as exc:
        print(f"nichols-bichar: error: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    if args.json:
        print(render_json(payload))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
