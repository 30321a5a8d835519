"""Command line interface.

Exit codes: 0 success, 1 failed check, 2 unparseable input, 3 input that
violates a mathematical precondition.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from typing import Any, Sequence

from .errors import DomainError, InputError
from .kennedy import METHODS, compare_methods, kennedy_link
from .linking import linking_number, oracle_link
from .psl2 import mat_of_word, parse_matrix, word_of_matrix
from .qform import cf_expand, parse_form, river_word
from .words import LorenzWord, canonical, inverse_word, lorenz_words

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3

_WORD_RE = re.compile(r"^[LR]{2,}$")

TABLE3_WORDS = {"A": "LLR", "B": "LLLLRLR", "C": "LLRRLRR", "D": "LLLLLLLLLRRR"}
# published magnitudes: |link(X,Y)|, |link(X,Y^-1)|, |symmetrized|
TABLE3_REFERENCE = {
    ("A", "B"): (4, 2, 12),
    ("A", "C"): (3, 4, 14),
    ("A", "D"): (3, 3, 12),
    ("B", "C"): (6, 8, 28),
    ("B", "D"): (7, 5, 24),
    ("C", "D"): (7, 7, 28),
}


def parse_token(text: str) -> LorenzWord:
    """Word or matrix token, turned into a Lorenz word.

    Matrices must be primitive hyperbolic.
    """
    text = text.strip()
    if _WORD_RE.match(text):
        return LorenzWord(text)
    if ";" in text:
        w, k = word_of_matrix(parse_matrix(text))
        if k != 1:
            raise DomainError(f"matrix {text!r} is not primitive: it is mat({w})^{k}")
        return w
    raise InputError(f"cannot parse {text!r} as a word or a matrix")


def table3_rows() -> list[dict[str, Any]]:
    rows = []
    for (x, y), ref in TABLE3_REFERENCE.items():
        wx, wy = LorenzWord(TABLE3_WORDS[x]), LorenzWord(TABLE3_WORDS[y])
        link = linking_number(wx, wy)
        link_inv = linking_number(wx, inverse_word(wy))
        ix, iy = inverse_word(wx), inverse_word(wy)
        sym = link + link_inv + linking_number(ix, wy) + linking_number(ix, iy)
        computed = (link, link_inv, sym)
        rows.append({
            "pair": f"{x},{y}",
            "computed": list(computed),
            "reference": list(ref),
            "match": [abs(c) == r for c, r in zip(computed, ref)],
        })
    return rows


def fuzz_summary(max_len: int, with_kennedy: bool = False) -> dict[str, Any]:
    """Run rs against the oracle on every ordered pair of canonical words.

    Checks equality, symmetry and nonvanishing; optionally tallies Kennedy's
    formula against the rs value.
    """
    words = lorenz_words(max_len)
    cache: dict[tuple[str, str], int] = {}
    mismatches, asymmetric, vanishing = [], [], []
    agree = 0
    disagreements = []
    for wa, wb in itertools.permutations(words, 2):
        rs = linking_number(wa, wb)
        cache[wa.letters, wb.letters] = rs
        if rs != oracle_link(wa, wb):
            mismatches.append([wa.letters, wb.letters])
        if rs > -1:
            vanishing.append([wa.letters, wb.letters])
        if with_kennedy:
            kv = kennedy_link(wa, wb)
            if kv == rs:
                agree += 1
            else:
                disagreements.append({
                    "word_a": wa.letters, "word_b": wb.letters, "rs_link": rs,
                    "kennedy_num": kv.numerator, "kennedy_den": kv.denominator,
                })
    for (a, b), v in cache.items():
        if cache[b, a] != v and a < b:
            asymmetric.append([a, b])
    out: dict[str, Any] = {
        "max_len": max_len,
        "words": len(words),
        "pairs": len(cache),
        "rs_oracle_mismatches": mismatches,
        "asymmetric": asymmetric,
        "nonnegative": vanishing,
        "ok": not (mismatches or asymmetric or vanishing),
    }
    if with_kennedy:
        out["kennedy"] = {"agree": agree, "disagree": len(disagreements),
                          "disagreements": disagreements}
    return out


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def _cmd_word(args: argparse.Namespace) -> int:
    w, k = word_of_matrix(parse_matrix(args.matrix))
    _emit(args, {"matrix": args.matrix, "word": w.letters, "k": k}, f"{w} k={k}")
    return EXIT_OK


def _cmd_river(args: argparse.Namespace) -> int:
    q = parse_form(args.form)
    w = river_word(q)
    cf = cf_expand(q)
    payload = {
        "form": [q.a, q.b, q.c],
        "discriminant": q.discriminant,
        "river_word": w.letters,
        "canonical": canonical(w).letters,
        "cf": {"preperiod": list(cf.preperiod), "period": list(cf.period)},
    }
    _emit(args, payload, f"{w} (canonical {canonical(w)}) cf {cf}")
    return EXIT_OK


def _format_report(d: dict[str, Any]) -> str:
    lines = [f"{d['word_a']} vs {d['word_b']}"]
    if d["rs_link"] is not None:
        lines.append(f"  rs        {d['rs_link']}")
        lines.append("  triples   " + " ".join(f"({t['i']},{t['j']},{t['x']})" for t in d["triples"]))
    if d["oracle_link"] is not None:
        lines.append(f"  oracle    {d['oracle_link']}")
    if d["kennedy"] is not None:
        k = d["kennedy"]
        val = str(k["value_num"]) if k["value_den"] == 1 else f"{k['value_num']}/{k['value_den']}"
        lines.append(f"  kennedy   {val}  (C1={k['c1']} C2={k['c2']} C3={k['c3']})")
    if d["symmetrized"] is not None:
        lines.append(f"  symmetrized {d['symmetrized']}")
    return "\n".join(lines)


def _link_one(a: str, b: str, methods: Sequence[str]) -> dict[str, Any]:
    return compare_methods(parse_token(a), parse_token(b), methods).to_dict()


def _cmd_link(args: argparse.Namespace) -> int:
    methods = METHODS if args.method == "all" else (args.method,)
    if args.batch:
        with open(args.batch) as fh:
            pairs = [line.split() for line in fh if line.strip()]
        bad = [p for p in pairs if len(p) != 2]
        if bad:
            raise InputError(f"batch line {' '.join(bad[0])!r} does not hold two tokens")
    elif args.a is None or args.b is None:
        raise InputError("link needs two inputs or --batch FILE")
    else:
        pairs = [[args.a, args.b]]
    reports = [_link_one(a, b, methods) for a, b in pairs]
    if args.json:
        print(json.dumps(reports if args.batch else reports[0]))
    else:
        print("\n".join(_format_report(r) for r in reports))
    return EXIT_OK


def _cmd_table3(args: argparse.Namespace) -> int:
    rows = table3_rows()
    if args.json:
        print(json.dumps(rows))
    else:
        print(f"{'pair':5} {'link':>6} {'link^-1':>8} {'sym':>6}   {'paper':>12}  match")
        for r in rows:
            c, ref = r["computed"], r["reference"]
            print(f"{r['pair']:5} {c[0]:>6} {c[1]:>8} {c[2]:>6}   "
                  f"{' '.join(map(str, ref)):>12}  {'yes' if all(r['match']) else 'NO'}")
    return EXIT_OK if all(all(r["match"]) for r in rows) else EXIT_FAIL


def _cmd_fuzz(args: argparse.Namespace) -> int:
    if args.max_len < 2:
        raise InputError("--max-len must be at least 2")
    s = fuzz_summary(args.max_len, args.kennedy)
    if args.json:
        print(json.dumps(s))
    else:
        print(f"words {s['words']}  ordered pairs {s['pairs']}")
        print(f"rs/oracle mismatches {len(s['rs_oracle_mismatches'])}  "
              f"asymmetric {len(s['asymmetric'])}  nonnegative {len(s['nonnegative'])}")
        if args.kennedy:
            k = s["kennedy"]
            print(f"kennedy agree {k['agree']}  disagree {k['disagree']}")
            for d in k["disagreements"]:
                val = f"{d['kennedy_num']}/{d['kennedy_den']}" if d["kennedy_den"] != 1 else str(d["kennedy_num"])
                print(f"  {d['word_a']} {d['word_b']}: rs {d['rs_link']} kennedy {val}")
    return EXIT_OK if s["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modknot", description="Linking numbers of modular knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        return p

    p = add("word", "Lorenz word and power of a hyperbolic matrix")
    p.add_argument("matrix", help="'a,b;c,d'")
    p.set_defaults(func=_cmd_word)

    p = add("river", "river word of an indefinite form")
    p.add_argument("form", help="'a,b,c'")
    p.set_defaults(func=_cmd_river)

    p = add("link", "linking number of two words or matrices")
    p.add_argument("a", nargs="?")
    p.add_argument("b", nargs="?")
    p.add_argument("--method", choices=[*METHODS, "all"], default="all")
    p.add_argument("--batch", metavar="FILE", help="one pair of tokens per line")
    p.set_defaults(func=_cmd_link)

    p = add("table3", "recompute the reciprocity comparison table")
    p.set_defaults(func=_cmd_table3)

    p = add("fuzz", "compare methods on all pairs of short words")
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--kennedy", action="store_true")
    p.set_defaults(func=_cmd_fuzz)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
