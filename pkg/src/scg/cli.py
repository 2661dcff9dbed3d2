"""Command-line interface: ``scg <subcommand> [options]``.

Exit codes: 0 the computation succeeded and the property holds, 1 it
succeeded and the property fails (C'(lambda) violated, word nontrivial, sets
not related), 2 usage or parse error, 3 exponent budget or step limit hit.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import dehn, quotients, related
from .errors import BudgetExceeded, SCGError, StepLimitExceeded
from .families import (
    DEFAULT_TOP,
    FAMILY_KINDS,
    Presentation,
    SetSpec,
    build_b_power,
    build_bowditch,
    build_wise_chong,
    load_presentation,
    wise_chong_presentation,
)
from .pieces import max_piece, verify_c_prime
from .words import parse_word, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class Output:
    def __init__(self, fmt, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, payload, text):
        if self.fmt == "json":
            self.stream.write(json.dumps(payload, indent=2) + "\n")
        else:
            self.stream.write(text.rstrip("\n") + "\n")


def _set(text):
    return SetSpec.parse(text)


def _presentation(args):
    if args.presentation:
        p = load_presentation(args.presentation)
    elif args.set is not None:
        p = wise_chong_presentation(args.set, top=args.top)
    else:
        raise SCGError("give --presentation FILE or --set SETSPEC")
    if getattr(args, "lam", None) is not None:
        p = Presentation(p.generators, p.relators, args.lam)
    return p


def _lambda(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from None
    return value


def cmd_build(args, out):
    if args.kind == "wise-chong":
        cw = build_wise_chong(args.n, args.top)
    elif args.kind == "b-power":
        cw = build_b_power(args.n)
    else:
        cw = build_bowditch(args.n, torsion_free=args.kind == "bowditch-tf")
    payload = {"kind": args.kind, "n": args.n, "word": render(cw),
               "length": str(cw.length), "syllables": len(cw.syllables)}
    if args.kind == "wise-chong":
        payload["top"] = args.top
    out.emit(payload, f"{render(cw)}\nlength {cw.length}")
    return EXIT_OK


def cmd_verify(args, out):
    p = _presentation(args)
    rep = verify_c_prime(p, args.max_length, workers=args.workers)
    lines = [f"C'({p.lam}): {'holds' if rep.c_prime else 'fails'}",
             f"max ratio {rep.max_ratio} over {rep.relator_count} relators"]
    if rep.witness is not None:
        lines.append(f"witness piece {render(rep.witness.piece)} (length {rep.witness.length})")
    if not rep.complete:
        lines.append(f"checked up to relator length {rep.checked_up_to_length}; relators beyond "
                     "the bound are not covered (family ratios only shrink once the checked prefix passes)")
    out.emit(rep.to_json(), "\n".join(lines))
    return EXIT_OK if rep.c_prime else EXIT_FAIL


def cmd_pieces(args, out):
    p = _presentation(args)
    rels = p.enumerate_relators(args.max_length)
    rows, lines = [], []
    for i in range(len(rels)):
        for j in range(i, len(rels)):
            rep = max_piece(rels[i], rels[j], same_relator=(i == j), indices=(i, j))
            rows.append({"i": i, "j": j, "report": None if rep is None else rep.to_json()})
            desc = "none" if rep is None else f"{render(rep.piece)}  length {rep.length}  ratio {rep.ratio}"
            lines.append(f"{i} {j}: {desc}")
    out.emit({"relator_lengths": [str(r.length) for r in rels], "pairs": rows}, "\n".join(lines))
    return EXIT_OK


def _c_prime_flag(p, u):
    rels = p.enumerate_relators(2 * u.length - 1) if u.length else []
    if not rels:
        return True
    return verify_c_prime(p, 2 * u.length - 1).c_prime


def _trace_text(trace):
    lines = [f"{render(s.before)}  ->  {render(s.after)}" for s in trace.steps]
    lines.append(("trivial" if trace.trivial else "nontrivial") + f"  witness {render(trace.result)}")
    return "\n".join(lines)


def cmd_solve(args, out):
    p = _presentation(args)
    u = parse_word(args.word, alphabet=set(p.generators))
    trace = dehn.dehn_reduce(u, p, args.step_limit)
    payload = trace.to_json()
    payload["c_prime_verified"] = _c_prime_flag(p, u)
    out.emit(payload, _trace_text(trace))
    return EXIT_OK if trace.trivial else EXIT_FAIL


def cmd_quotient(args, out):
    spec = quotients.QuotientSpec(args.k, args.set, args.top)
    u = parse_word(args.word, alphabet={"a", "b"})
    projected = quotients.project(u, args.k)
    trivial, trace = quotients.is_trivial_in_Gk(u, spec, args.step_limit)
    payload = {"k": args.k, "E_k": str(spec.modulus), "projected": render(projected)}
    payload.update(trace.to_json())
    out.emit(payload, f"image in G_{args.k}: {render(projected)}\n{_trace_text(trace)}")
    return EXIT_OK if trivial else EXIT_FAIL


def cmd_rf_witness(args, out):
    u = parse_word(args.word, alphabet={"a", "b"})
    try:
        w = quotients.rf_witness(u, args.set, args.top)
    except SCGError as exc:
        if not hasattr(exc, "occurrence"):
            raise
        occ = exc.occurrence
        payload = {"word": render(u), "verdict": "not_majority_reduced",
                   "relator_index": occ.relator_index, "sign": occ.sign, "v_len": str(occ.v_len)}
        out.emit(payload, f"{render(u)} is not majority-reduced (relator {occ.relator_index})")
        return EXIT_FAIL
    out.emit(w.to_json(), f"{render(u)} survives in G_{w.k} (E_k = {w.modulus})")
    return EXIT_OK


def _values(spec, mode, depth, top):
    if mode == "raw":
        return related.raw_spectrum(spec, depth)
    if mode == "spectrum":
        return related.length_spectrum(spec, top, depth)
    if not spec.is_finite and depth is None:
        raise SCGError(f"set {spec} is infinite; give --depth")
    return related.NatSet(spec.truncate(depth))


def cmd_relate(args, out):
    L = _values(args.left, args.mode, args.depth, args.top)
    Lp = _values(args.right, args.mode, args.depth, args.top)
    if args.min_k or args.k is None:
        k = related.min_witness_k(L, Lp)
        out.emit({"left": [str(x) for x in L], "right": [str(x) for x in Lp], "min_k": str(k)}, str(k))
        return EXIT_OK
    res = related.related_via_k(L, Lp, args.k)
    payload = {"left": [str(x) for x in L], "right": [str(x) for x in Lp], "k": str(args.k),
               "related": bool(res)}
    if res:
        payload["forward"] = [[str(m), None if p is None else str(p)] for m, p in res.forward]
        payload["backward"] = [[str(m), None if p is None else str(p)] for m, p in res.backward]
        text = f"related via k={args.k}"
    else:
        payload["failure"] = {"element": str(res.element), "direction": res.direction}
        text = str(res)
    out.emit(payload, text)
    return EXIT_OK if res else EXIT_FAIL


def cmd_spectrum(args, out):
    vals = related.length_spectrum(args.set, args.top, args.depth)
    out.emit({"spectrum": [str(v) for v in vals]}, " ".join(str(v) for v in vals))
    return EXIT_OK


def cmd_profile(args, out):
    rows = related.divergence_profile(args.left, args.right, args.depth, args.mode, args.top)
    out.emit([r.to_json() for r in rows], related.format_profile(rows))
    return EXIT_OK


def cmd_sym_diff(args, out):
    vals = related.sym_diff(args.left, args.right, args.depth)
    out.emit({"sym_diff": list(vals)}, " ".join(str(v) for v in vals))
    return EXIT_OK


def cmd_bowditch(args, out):
    rows = quotients.bowditch_quotient_check(args.n, args.indices)
    lines = []
    for row in rows:
        killed = ", ".join(f"m={m}: {'dies' if v else 'survives'}" for m, v in sorted(row.killed.items()))
        images = ", ".join(f"m={m}: {render(w)}" for m, w in sorted(row.torsion_free_images.items()))
        lines.append(f"n={row.n}  E_n={row.modulus}")
        lines.append(f"  (a^E b^E)^7 -> {killed}")
        lines.append(f"  a(a^E b^E)^12 -> {images}")
        lines.append(f"  quotient C'(1/6): {row.verification.c_prime} (max ratio {row.verification.max_ratio})")
    out.emit([r.to_json() for r in rows], "\n".join(lines))
    ok = all(all(r.killed.values()) and r.verification.c_prime for r in rows)
    return EXIT_OK if ok else EXIT_FAIL


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(prog="scg", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def presentation_opts(sp):
        src = sp.add_mutually_exclusive_group()
        src.add_argument("--presentation", help="presentation JSON file")
        src.add_argument("--set", type=_set, help="SetSpec S for G(S)")
        sp.add_argument("--top", type=int, default=DEFAULT_TOP)
        sp.add_argument("--max-length", type=int, default=None)

    sp = sub.add_parser("build", help="build a family relator")
    sp.add_argument("--kind", choices=FAMILY_KINDS, required=True)
    sp.add_argument("--n", "--k", dest="n", type=int, required=True)
    sp.add_argument("--top", type=int, default=DEFAULT_TOP)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("verify", help="check the C'(lambda) condition")
    presentation_opts(sp)
    sp.add_argument("--lambda", dest="lam", type=_lambda, default=None)
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("pieces", help="longest piece for every relator pair")
    presentation_opts(sp)
    sp.set_defaults(func=cmd_pieces)

    sp = sub.add_parser("solve", help="word problem by majority reduction")
    presentation_opts(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--step-limit", type=int, default=dehn.DEFAULT_STEP_LIMIT)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("quotient", help="image and word problem in G_k")
    sp.add_argument("--set", type=_set, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--top", type=int, default=DEFAULT_TOP)
    sp.add_argument("--word", required=True)
    sp.add_argument("--step-limit", type=int, default=dehn.DEFAULT_STEP_LIMIT)
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("rf-witness", help="least G_k in which a reduced word survives")
    sp.add_argument("--set", type=_set, required=True)
    sp.add_argument("--top", type=int, default=DEFAULT_TOP)
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=cmd_rf_witness)

    sp = sub.add_parser("relate", help="k-relatedness of two integer sets")
    sp.add_argument("--left", type=_set, required=True)
    sp.add_argument("--right", type=_set, required=True)
    kgroup = sp.add_mutually_exclusive_group()
    kgroup.add_argument("--k", type=int)
    kgroup.add_argument("--min-k", action="store_true")
    sp.add_argument("--mode", choices=("values", "raw", "spectrum"), default="values")
    sp.add_argument("--depth", type=int, default=None)
    sp.add_argument("--top", type=int, default=DEFAULT_TOP)
    sp.set_defaults(func=cmd_relate)

    sp = sub.add_parser("spectrum", help="relator length spectrum of G(S)")
    sp.add_argument("--set", type=_set, required=True)
    sp.add_argument("--top", type=int, default=DEFAULT_TOP)
    sp.add_argument("--depth", type=int, default=None)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("profile", help="min_k over growing truncations")
    sp.add_argument("--left", type=_set, required=True)
    sp.add_argument("--right", type=_set, required=True)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--mode", choices=("raw", "spectrum"), default="raw")
    sp.add_argument("--top", type=int, default=DEFAULT_TOP)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("sym-diff", help="symmetric difference of two index sets")
    sp.add_argument("--left", type=_set, required=True)
    sp.add_argument("--right", type=_set, required=True)
    sp.add_argument("--depth", type=int, default=None)
    sp.set_defaults(func=cmd_sym_diff)

    sp = sub.add_parser("bowditch", help="bowditch family relators in <a,b | a^E_n, b^E_n>")
    sp.add_argument("--n", type=_int_list, required=True, help="comma-separated n values")
    sp.add_argument("--indices", type=_int_list, default=None, help="the index set S")
    sp.set_defaults(func=cmd_bowditch)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Output(args.format, stdout)
    try:
        return args.func(args, out)
    except (BudgetExceeded, StepLimitExceeded) as exc:
        stderr.write(f"scg: {exc}\n")
        return EXIT_LIMIT
    except (SCGError, ValueError, OSError) as exc:
        stderr.write(f"scg: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
