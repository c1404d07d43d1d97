"""Command line: ``loop-schubert`` (also installed as ``schubert``).

Exit codes: 0 ok, 1 a requested check failed, 2 bad input, 3 a mathematical
precondition does not hold (the report says which).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence

from . import affine, affschubert, alcove, demazure, golden
from .polyring import Polynomial, from_json_obj, to_json_obj, to_text
from .weyl import parse_permutation

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class PreconditionFailed(Exception):
    """Raised by a command when its mathematical hypotheses fail."""


def _q(x):
    """Integers stay integers; other rationals render as "num/den" (never floats)."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _emit(obj, as_json: bool, text: str):
    if as_json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# Table records


@dataclass
class TableRecord:
    n: int
    lam: list
    lambda_hat: list
    m_word: list[int]
    sigma_power: int
    length: int
    schubert_h: dict
    tilde_xy: dict | None = None
    tilde_x: dict | None = None

    def to_json_obj(self) -> dict:
        out = asdict(self)
        out["lambda"] = out.pop("lam")
        if self.tilde_xy is None:
            out.pop("tilde_xy")
        if self.tilde_x is None:
            out.pop("tilde_x")
        return out

    @classmethod
    def from_json_obj(cls, obj: dict) -> TableRecord:
        obj = dict(obj)
        obj["lam"] = obj.pop("lambda")
        return cls(**obj)

    def coweight(self) -> affine.Coweight:
        return affine.Coweight(self.n, tuple(self.lam))

    def polynomial(self) -> Polynomial:
        return from_json_obj(self.schubert_h)


def make_record(lam: affine.Coweight, full: bool = False) -> TableRecord:
    rec = affschubert.run_pipeline(lam, full=full)
    return TableRecord(
        n=lam.n,
        lam=list(lam.coeffs),
        lambda_hat=[_q(a) for a in rec.lam_hat.alpha_coords()],
        m_word=list(rec.word),
        sigma_power=rec.sigma_power,
        length=rec.length,
        schubert_h=to_json_obj(rec.schubert_h),
        tilde_xy=to_json_obj(rec.tilde_xy) if full and rec.tilde_xy is not None else None,
        tilde_x=to_json_obj(rec.tilde_x) if full else None,
    )


def build_table(n: int, max_length: int, full: bool = False) -> list[TableRecord]:
    lams = affine.coweights_up_to_length(n, max_length)
    records = [make_record(lam, full) for lam in lams]
    records.sort(key=lambda r: (r.length, r.lam))
    return records


def dump_table(records: Sequence[TableRecord]) -> str:
    return json.dumps([r.to_json_obj() for r in records], indent=1, sort_keys=True) + "\n"


def load_table(text: str) -> list[TableRecord]:
    return [TableRecord.from_json_obj(o) for o in json.loads(text)]


# Commands


def cmd_affine(args) -> int:
    lam = affine.parse_coweight(args.lam, args.n)
    v = affine.min_coset_rep(lam)
    k, hat = affine.sigma_decompose(v)
    word = None
    if args.word:
        given = affine.parse_affine(args.word, args.n)
        # a leading sigma power is allowed but must match
        if "sigma" in args.word and given != v:
            raise PreconditionFailed(f"{args.word!r} is not m^lambda = {v}")
        word = [int(t[1:]) for t in args.word.split() if re.fullmatch(r"s\d+", t)]
        if affine.AffineElement.from_word(args.n, word) != hat:
            raise PreconditionFailed(f"{args.word!r} is not a word for the charge-zero part of m^lambda")
        if len(word) != hat.length():
            raise PreconditionFailed(f"{args.word!r} is not reduced")
    rec = affschubert.run_pipeline(lam, word, full=args.full)
    obj = {
        "n": args.n,
        "lambda": list(lam.coeffs),
        "lambda_hat": [_q(a) for a in rec.lam_hat.alpha_coords()],
        "m_word": affine.format_affine_word(rec.sigma_power, rec.word),
        "length": rec.length,
        "schubert_h": to_json_obj(rec.schubert_h),
    }
    lines = [
        f"lambda      {lam}",
        f"m^lambda    {affine.format_affine_word(rec.sigma_power, rec.word)}",
        f"length      {rec.length}",
    ]
    if args.full:
        obj["tilde_x"] = to_json_obj(rec.tilde_x)
        lines.append(f"S~(x)       {to_text(rec.tilde_x)}")
        if rec.tilde_xy is not None:
            obj["tilde_xy"] = to_json_obj(rec.tilde_xy)
            lines.append(f"S~(x,y)     {to_text(rec.tilde_xy)}")
    lines.append(f"S^          {to_text(rec.schubert_h)}")
    _emit(obj, args.json, "\n".join(lines))
    return EXIT_OK


def _flag_poly(args, which: str) -> Polynomial:
    w = parse_permutation(args.w, args.n)
    if which == "double":
        return demazure.double_schubert(w)
    if which == "single":
        return demazure.single_schubert(w)
    return demazure.fixed_point_class(w)


def cmd_double(args) -> int:
    p = _flag_poly(args, args.command)
    _emit(to_json_obj(p), args.json, to_text(p))
    return EXIT_OK


def cmd_theorem_a(args) -> int:
    lam = affine.parse_coweight(args.lam, args.n)
    mu = affine.parse_coweight(args.mu, args.n)
    rep = affschubert.verify_theorem_A(lam, mu)
    obj = {
        "lambda": list(lam.coeffs),
        "mu": list(mu.coeffs),
        "nu": list(rep.nu.coeffs) if rep.nu is not None else None,
        "preconditions_hold": rep.preconditions_hold,
        "identity_holds": rep.identity_holds,
        "reason": rep.reason,
    }
    if not rep.preconditions_hold:
        text = f"precondition failed: {rep.reason}"
    else:
        verdict = "holds" if rep.identity_holds else "FAILS"
        text = f"S^[{lam}] * S^[{mu}] = S^[{rep.nu}]  {verdict}"
    _emit(obj, args.json, text)
    if not rep.preconditions_hold:
        return EXIT_PRECONDITION
    return EXIT_OK if rep.identity_holds else EXIT_FAIL


def cmd_table(args) -> int:
    records = build_table(args.n, args.max_length, full=args.full)
    text = dump_table(records)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {len(records)} records to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _transform_obj(t: alcove.AffineTransform) -> dict:
    return {
        "linear": [[_q(v) for v in row] for row in t.linear],
        "translate": [_q(v) for v in t.translate],
    }


def cmd_factorize(args) -> int:
    rs = alcove.root_system(args.type)
    word = alcove.parse_affine_word(args.word)
    if any(i > rs.rank for i in word):
        raise ValueError(f"letter out of range for rank {rs.rank}")
    x = alcove.word_to_transform(word, rs)
    try:
        f = alcove.max_antidominant_factor(x, rs)
    except alcove.PreconditionError as exc:
        raise PreconditionFailed(str(exc)) from exc
    ywords, rest = alcove.reduced_word_transform(f.cofactor, rs)
    trivial_rest = rest == alcove.AffineTransform.identity(rs.rank)
    parts = [f"s{i}" for i in ywords] + ([] if trivial_rest else ["z"])
    ytext = " ".join(parts) or "id"
    obj = {
        "type": args.type,
        "word": word,
        "lambda": list(f.lam),
        "cofactor": _transform_obj(f.cofactor),
        "cofactor_word": ywords,
        "cofactor_length_zero_part": _transform_obj(rest),
        "length_x": f.length_x,
        "length_y": f.length_y,
        "length_t": f.length_t,
    }
    lines = [
        f"x = {args.word} = y * t_(-lambda)",
        f"lambda (fundamental coweights)  {list(f.lam)}",
        f"y                               {ytext}",
        f"lengths                         {f.length_x} = {f.length_y} + {f.length_t}",
    ]
    if not trivial_rest:
        lines.append(f"z (length zero)                 {_transform_obj(rest)}")
    _emit(obj, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_verify_golden(args) -> int:
    results = golden.run_golden_checks()
    width = max(len(r.name) for r in results)
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        print(f"{r.name:<{width}}  {mark}  {r.detail if args.verbose or not r.passed else ''}".rstrip())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} passed")
    return EXIT_OK if not failed else EXIT_FAIL


# Parser


def build_parser(prog: str = "loop-schubert") -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=prog, description="Affine Schubert polynomials and alcove factorizations.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("affine", help="S^ for a coweight, via the point-class pipeline")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--lambda", dest="lam", required=True, help='"w:0,1" or "a:1,0"')
    a.add_argument("--word", help="reduced word for the charge-zero part of m^lambda")
    a.add_argument("--full", action="store_true", help="also print S~(x,y) and S~(x)")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_affine)

    for name, helptext in [
        ("double", "double Schubert polynomial"),
        ("single", "single Schubert polynomial"),
        ("fixed-point", "equivariant class of a fixed point"),
    ]:
        d = sub.add_parser(name, help=helptext)
        d.add_argument("--n", type=int, required=True)
        d.add_argument("--w", required=True, help='window "3 1 2" or word "s2 s1"')
        d.add_argument("--json", action="store_true")
        d.set_defaults(func=cmd_double)

    t = sub.add_parser("theorem-a", help="check S^_lambda S^_mu = S^_nu")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--lambda", dest="lam", required=True)
    t.add_argument("--mu", required=True)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_theorem_a)

    tb = sub.add_parser("table", help="JSON table of S^ up to a length")
    tb.add_argument("--n", type=int, required=True)
    tb.add_argument("--max-length", type=int, required=True)
    tb.add_argument("--out")
    tb.add_argument("--full", action="store_true")
    tb.set_defaults(func=cmd_table)

    f = sub.add_parser("factorize", help="largest anti-dominant translation on the right")
    f.add_argument("--type", required=True, help="A3, C2, G2, ... or a Cartan matrix as JSON")
    f.add_argument("--word", required=True)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_factorize)

    g = sub.add_parser("verify-golden", aliases=["verify-paper"], help="replay the reference tables")
    g.add_argument("--verbose", "-v", action="store_true")
    g.set_defaults(func=cmd_verify_golden)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionFailed as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except affschubert.PipelineTooLarge as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
