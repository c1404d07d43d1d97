"""Divided differences, double and single Schubert polynomials, fixed-point classes, pi_*."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .polyring import (
    Polynomial,
    QuotientPreset,
    normal_form,
    preset,
    ring_env,
    x_vars,
    y_vars,
)
from .weyl import Permutation, longest, longest_parabolic, reduced_word, u_cycle


@dataclass(frozen=True)
class DividedDiffSpec:
    """The operator (f - r f) / (v_i - v_j) on axis v in {x, y}, times -1 when signed."""

    axis: str
    root: tuple[int, int]
    signed: bool = False

    def __post_init__(self):
        if self.axis not in ("x", "y"):
            raise ValueError(f"axis must be 'x' or 'y', got {self.axis!r}")
        i, j = self.root
        if i == j:
            raise ValueError(f"degenerate root ({i}, {j})")

    @classmethod
    def simple(cls, axis: str, i: int, signed: bool = False) -> DividedDiffSpec:
        return cls(axis, (i, i + 1), signed)


def _dd_terms(terms: dict, a: int, b: int) -> dict:
    """Termwise exact (f - swap_ab f) / (v_a - v_b) on exponent dictionaries."""
    out: dict = {}
    for e, c in terms.items():
        p, q = e[a], e[b]
        if p == q:
            continue
        sign = 1
        if p < q:
            p, q, sign = q, p, -1
        # v_a^p v_b^q - v_a^q v_b^p = v_a^q v_b^q (v_a^{p-q} - v_b^{p-q})
        d = p - q
        for k in range(d):
            ne = list(e)
            if sign == 1:
                ne[a], ne[b] = q + k, q + d - 1 - k
            else:
                # exponents p, q sit at b, a respectively; result is -(...)
                ne[b], ne[a] = q + k, q + d - 1 - k
            ne = tuple(ne)
            v = out.get(ne, 0) + sign * c
            if v:
                out[ne] = v
            else:
                out.pop(ne)
    return out


def divided_diff(f: Polynomial, spec: DividedDiffSpec) -> Polynomial:
    i, j = spec.root
    a = f.env.index(f"{spec.axis}{i}")
    b = f.env.index(f"{spec.axis}{j}")
    out = _dd_terms(f.terms, a, b)
    if spec.signed:
        out = {e: -c for e, c in out.items()}
    return Polynomial(f.env, out, _trusted=True)


def demazure_word(f: Polynomial, word: Sequence[int], axis: str, signed: bool = False) -> Polynomial:
    """d_{i1} ... d_{ip} f: the last letter acts first."""
    for i in reversed(list(word)):
        f = divided_diff(f, DividedDiffSpec.simple(axis, i, signed))
    return f


def demazure_perm(f: Polynomial, w: Permutation, axis: str, signed: bool = False) -> Polynomial:
    return demazure_word(f, reduced_word(w), axis, signed)


def schubert_env(n: int) -> tuple[str, ...]:
    return ring_env(n, n)


def top_double_schubert(n: int, env: Sequence[str] | None = None) -> Polynomial:
    """prod_{i+j<=n} (x_i - y_j)."""
    env = tuple(env) if env is not None else schubert_env(n)
    out = Polynomial.constant(env, 1)
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            out = out * (Polynomial.var(env, f"x{i}") - Polynomial.var(env, f"y{j}"))
    return out


@lru_cache(maxsize=None)
def double_schubert(w: Permutation) -> Polynomial:
    """Right recurrence from the top class along a reduced word of w^{-1} w0."""
    n = w.n
    top = top_double_schubert(n)
    rest = w.inverse() * longest(n)
    return demazure_word(top, reduced_word(rest), "x")


def double_schubert_left(w: Permutation) -> Polynomial:
    """Signed left recurrence from the top class: w w0 = s_{a1} ... s_{ap} gives S_w = dL_{a1} ... dL_{ap} S_{w0}."""
    n = w.n
    top = top_double_schubert(n)
    return demazure_word(top, reduced_word(w * longest(n)), "y", signed=True)


def single_schubert(w: Permutation) -> Polynomial:
    n = w.n
    return double_schubert(w).substitute_zero(y_vars(n))


def swap_xy(f: Polynomial) -> Polynomial:
    """f(y, x): exchange x_i and y_i (same number of each)."""
    n = sum(1 for v in f.env if v[0] == "y")
    rename = {f"x{i}": f"y{i}" for i in range(1, n + 1)}
    rename.update({f"y{i}": f"x{i}" for i in range(1, n + 1)})
    return f.reenv(f.env, rename)


def fixed_point_class(w: Permutation) -> Polynomial:
    """[w]_T = S_{w0}(x, w*(y)), substituting y_j -> y_{w*(j)}."""
    n = w.n
    star = longest(n) * w * longest(n)
    return top_double_schubert(n).permute_vars(star, "y")


def fixed_point_class_alt(w: Permutation) -> Polynomial:
    """(-1)^{l(w)} S_{w0}(w^{-1}(x), y), substituting x_i -> x_{w^{-1}(i)}."""
    top = top_double_schubert(w.n).permute_vars(w.inverse(), "x")
    return -top if w.length() % 2 else top


def projective_env(n: int) -> tuple[str, ...]:
    """y1..yn and a single x1 standing for x-tilde."""
    return ring_env(n, 1)


def point_class_projective(n: int, i: int) -> Polynomial:
    """[u_i in P^{n-1}]_T = prod_{j != n-i} (x~ - y_j)."""
    env = projective_env(n)
    x = Polynomial.var(env, "x1")
    out = Polynomial.constant(env, 1)
    for j in range(1, n + 1):
        if j != n - i:
            out = out * (x - Polynomial.var(env, f"y{j}"))
    return out


def gysin_pi_star(f: Polynomial) -> Polynomial:
    """pi_* by coefficient extraction: normal form mod J(n), coefficient of x2^{n-2} ... x_{n-1}."""
    n = sum(1 for v in f.env if v[0] == "y")
    J = preset("J", n)
    nf = normal_form(f, J)
    target = tuple(range(n - 2, -1, -1))  # exponents of x2..xn
    coeff = {}
    for e, c in nf.terms.items():
        if e[n + 1:] == target:
            coeff[e[: n + 1]] = c
    out = Polynomial(projective_env(n), coeff)
    return normal_form(out, preset("Jpi", n))


def gysin_pi_star_demazure(f: Polynomial) -> Polynomial:
    """pi_* as the right Demazure operator of the longest element of S_1 x S_{n-1}."""
    n = sum(1 for v in f.env if v[0] == "y")
    g = demazure_perm(f, longest_parabolic(n, 1), "x")
    g = normal_form(g, preset("J", n))
    if g.variables_used() & set(x_vars(n)[1:]):
        raise ArithmeticError("pi_* image still depends on x2..xn")
    return normal_form(g.reenv(projective_env(n)), preset("Jpi", n))


def u_fixed_point(n: int, i: int) -> Polynomial:
    return fixed_point_class(u_cycle(n, i))
