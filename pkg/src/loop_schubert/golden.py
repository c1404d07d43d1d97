"""Reference values for the small-rank tables, and a harness that replays them.

Labels for the SL3 flag tables are the permutations in window notation, so
there is no ambiguity about how a word such as "s1 s2" is read.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import affine, affschubert, alcove, demazure
from .polyring import Polynomial, from_text, h_vars, normal_form, preset, ring_env, x_vars
from .weyl import Permutation

# SL3 double and single Schubert polynomials, keyed by window
SL3_DOUBLE = {
    (3, 2, 1): "(x1 - y1) * (x1 - y2) * (x2 - y1)",
    (3, 1, 2): "(x1 - y1) * (x1 - y2)",
    (2, 3, 1): "(x1 - y1) * (x2 - y1)",
    (2, 1, 3): "x1 - y1",
    (1, 3, 2): "x1 + x2 - y1 - y2",
    (1, 2, 3): "1",
}
SL3_SINGLE = {
    (3, 2, 1): "x1^2 * x2",
    (3, 1, 2): "x1^2",
    (2, 3, 1): "x1 * x2",
    (2, 1, 3): "x1",
    (1, 3, 2): "x1 + x2",
    (1, 2, 3): "1",
}

# SL3 affine table: coweight -> (word of the charge-0 part, S~(x,y), S~(x), S^(h))
SL3_AFFINE = {
    (1, 1): (
        "s0",
        "(x1 - y1) * (x1 - y2) * (x3 - y2) * (x2 - y3) * (x2 - y1)",
        "x1^2 * x2^2 * x3",
        "h1",
    ),
    (-1, 0): (
        "s2 s0",
        "(x1 - y1) * (x2 - y1) * (x1 * x2 - x1 * x3 + x2 * x3 - x2 * y2 - x2 * y3 + y2 * y3)",
        "x1^2 * x2^2 - x1^2 * x2 * x3 + x1 * x2^2 * x3",
        "h2",
    ),
    (0, -1): (
        "s1 s0",
        "-(x2 - x3) * (x2 - y3) * (x1 - y1) * (x1 - y2)",
        "x1^2 * x2 * x3 - x1^2 * x2^2",
        "h1^2 - h2",
    ),
    (0, -2): (
        "s0 s2 s1 s0",
        None,
        "-(x1^2 * x2^2 * x3) * (x3 - x4) * (x5 - x6) * (x4 - x5)",
        "(h1^2 - h2)^2",
    ),
}
SL3_SIGMA = {(1, 1): 0, (-1, 0): 2, (0, -1): 1, (0, -2): 2}

# SL4 prime classes: affine word (with sigma prefix) -> S^(h)
SL4_AFFINE = [
    ("sigma^3 s2 s3 s0", (-1, 0, 0), "h3"),
    ("sigma^2 s0 s3 s1 s0", (0, -1, 0), "h2^2 - h1 * h3"),
    ("sigma s2 s1 s0", (0, 0, -1), "h1^3 - 2 * h1 * h2 + h3"),
    ("sigma^2 s2 s1 s3 s0", (1, 1, 1), "h2 * (h1^2 - h2)"),
    ("sigma^2 s1 s3 s0", None, "h1 * h2 - h3"),
    ("sigma^2 s3 s0", None, "h2"),
    ("sigma^2 s1 s0", None, "h1^2 - h2"),
    ("sigma^2 s0", None, "h1"),
]

# lambda_hat(-varpi_i) at n = 6 in simple-coroot coordinates
SL6_LAMBDA_HAT = {
    1: (1, 0, 0, 0, 0),
    2: (1, 2, 1, 0, 0),
    3: (1, 2, 3, 2, 1),
    4: (0, 0, 1, 2, 1),
    5: (0, 0, 0, 0, 1),
}

# alcove examples: (type, word, x^{-1}(p) as a function of p, lambda)
ALCOVE_EXAMPLES = [
    ("A2", "s1 s0", lambda e1, e2: (1 - e1 - e2, 1 + e1), (0, 1)),
    ("C2", "s0 s1 s0", lambda e1, e2: (e1, 2 - 2 * e1 - e2), (0, 1)),
]


def parse_expr(text: str, env) -> Polynomial:
    """Evaluate a product/sum/power expression of polynomials written in the text format."""
    names = {v: Polynomial.var(env, v) for v in env}
    tree = compile(text.replace("^", "**"), "<poly>", "eval")
    for name in tree.co_names:
        if name not in names:
            raise ValueError(f"unknown symbol {name!r} in {text!r}")
    value = eval(tree, {"__builtins__": {}}, names)
    if isinstance(value, int):
        value = Polynomial.constant(env, value)
    return value


def h_poly(text: str, n: int) -> Polynomial:
    return parse_expr(text, h_vars(n))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    try:
        ok, detail = fn()
    except Exception as exc:  # report, never crash the harness
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, ok, detail)


def check_sl3_flag() -> list[CheckResult]:
    env = ring_env(3, 3)
    out = []
    for window, text in SL3_DOUBLE.items():
        w = Permutation(window)

        def run(w=w, text=text):
            got = demazure.double_schubert(w)
            return got == parse_expr(text, env), str(got)

        out.append(_check(f"double {list(window)}", run))
    for window, text in SL3_SINGLE.items():
        w = Permutation(window)

        def run(w=w, text=text):
            got = demazure.single_schubert(w)
            return got == parse_expr(text, env), str(got)

        out.append(_check(f"single {list(window)}", run))
    return out


def check_sl3_affine() -> list[CheckResult]:
    out = []
    for coeffs, (word, txy, tx, th) in SL3_AFFINE.items():
        lam = affine.Coweight(3, coeffs)

        def run(lam=lam, word=word, txy=txy, tx=tx, th=th, coeffs=coeffs):
            v = affine.min_coset_rep(lam)
            k, hat = affine.sigma_decompose(v)
            if k != SL3_SIGMA[coeffs] or hat != affine.parse_affine(word, 3):
                return False, f"m^lam = {affine.format_affine_word(*affine.reduced_word_affine(v))}"
            rec = affschubert.run_pipeline(lam, affine.reduced_word_affine(v)[1], full=txy is not None)
            m = len(rec.tilde_x.env)
            if txy is not None:
                env = ring_env(3, m)
                q = preset("JpiMulti", 3, m)
                want = parse_expr(txy, env)
                if normal_form(rec.tilde_xy, q) != normal_form(want, q):
                    return False, f"S~(x,y) = {rec.tilde_xy}"
                literal = affschubert.build_tilde(affschubert.blocks_for(v), 3, reduce=False)
                if literal != want:
                    return False, f"unreduced S~(x,y) = {literal}"
            if rec.tilde_x != parse_expr(tx, x_vars(m)):
                return False, f"S~(x) = {rec.tilde_x}"
            if rec.schubert_h != h_poly(th, 3):
                return False, f"S^ = {rec.schubert_h}"
            return True, str(rec.schubert_h)

        out.append(_check(f"SL3 lambda={list(coeffs)}", run))
    return out


def check_sl4_affine() -> list[CheckResult]:
    out = []
    for word, coeffs, th in SL4_AFFINE:

        def run(word=word, coeffs=coeffs, th=th):
            v = affine.parse_affine(word, 4)
            if not v.is_right_minimal():
                return False, "word does not give a minimal coset representative"
            if coeffs is not None and affine.coweight_of(v) != affine.Coweight(4, coeffs):
                return False, f"coweight {affine.coweight_of(v)}"
            letters = [int(t[1:]) for t in word.split() if not t.startswith("sigma")]
            got = affschubert.affine_schubert_element(v, letters)
            return got == h_poly(th, 4), str(got)

        out.append(_check(f"SL4 {word}", run))
    return out


def check_lambda_hat() -> list[CheckResult]:
    out = []
    for i, alpha in SL6_LAMBDA_HAT.items():

        def run(i=i, alpha=alpha):
            got = affine.lambda_hat(-affine.Coweight.fundamental(6, i))
            closed = affine.closed_form_lambda_hat(6, i)
            want = affine.Coweight.from_alpha(6, alpha)
            return got == want == closed, str(tuple(got.alpha_coords()))

        out.append(_check(f"SL6 lambda_hat(-w{i})", run))
    return out


def check_alcove_examples() -> list[CheckResult]:
    from fractions import Fraction

    out = []
    for kind, word, image, lam in ALCOVE_EXAMPLES:

        def run(kind=kind, word=word, image=image, lam=lam):
            rs = alcove.root_system(kind)
            x = alcove.word_to_transform(alcove.parse_affine_word(word), rs)
            # the image of a generic interior point, checked at two points
            for p in (alcove.alcove_barycenter(rs), (Fraction(1, 97), Fraction(1, 89))):
                if x.inverse()(p) != tuple(image(*p)):
                    return False, f"x^-1({p}) = {x.inverse()(p)}"
            f = alcove.max_antidominant_factor(x, rs)
            return f.lam == lam, f"lambda = {f.lam}"

        out.append(_check(f"{kind} {word}", run))
    return out


def run_golden_checks() -> list[CheckResult]:
    return (
        check_sl3_flag()
        + check_sl3_affine()
        + check_sl4_affine()
        + check_lambda_hat()
        + check_alcove_examples()
    )
