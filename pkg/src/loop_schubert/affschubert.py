"""Affine Schubert polynomials in Q[h_1, ..., h_{n-1}] and the product rule for Schubert classes.

The pipeline for a coweight lam:

1. replace lam by lam_hat, so that m = m^{lam_hat} lies in the non-extended group;
2. factor m = w_1 s0 w_2 s0 ... w_r s0 and work in Q[x~_1..x~_m, y_1..y_n], m = n r;
3. for j = r, ..., 1 multiply by the point classes of block j, apply the y-divided
   difference for theta = y_1 - y_n, multiply by P^{(jn-n+1)}_n, apply d^y_{w_j};
4. fix the sign (-1)^{sum l(w_j)};
5. set y = 0 and kill x~_k^n;
6. map x~_1^{i_1} ... x~_m^{i_m} to h_{n-1-i_1} ... h_{n-1-i_m}.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .affine import (
    AffineElement,
    Coweight,
    coweight_of,
    group_blocks,
    lambda_hat,
    length,
    min_coset_rep,
    reduced_word_affine,
    reduced_words,
    sigma_decompose,
    translation,
)
from .demazure import DividedDiffSpec, divided_diff
from .polyring import MultiReducer, Polynomial, exact_divide, h_vars, ring_env, x_vars, y_vars
from .weyl import Permutation, reduced_word

DEFAULT_MAX_DEGREE = 24


class PipelineTooLarge(ValueError):
    pass


def max_degree() -> int:
    return int(os.environ.get("LOOP_SCHUBERT_MAX_DEGREE", DEFAULT_MAX_DEGREE))


def point_class(k: int, i: int, n: int, m: int) -> Polynomial:
    """P^{(k)}_i = prod_{j != i} (x~_k - y_j) in the pipeline environment."""
    if not 1 <= k <= m or not 1 <= i <= n:
        raise ValueError(f"point class index out of range: k={k}, i={i}, n={n}, m={m}")
    env = ring_env(n, m)
    x = Polynomial.var(env, f"x{k}")
    out = Polynomial.constant(env, 1)
    for j in range(1, n + 1):
        if j != i:
            out = out * (x - Polynomial.var(env, f"y{j}"))
    return out


def interval_class(a: int, n: int, m: int) -> Polynomial:
    """P^{[a+1, a+n-1]} = prod_{t=1}^{n-1} P^{(a+t)}_{n-t}."""
    out = Polynomial.constant(ring_env(n, m), 1)
    for t in range(1, n):
        out = out * point_class(a + t, n - t, n, m)
    return out


@dataclass
class PipelineState:
    n: int
    blocks: tuple[Permutation, ...]
    reduce: bool = True
    y_free_only: bool = False
    current: Polynomial = field(init=False)

    def __post_init__(self):
        self.r = len(self.blocks)
        self.m = self.n * self.r
        self.env = ring_env(self.n, self.m)
        self.current = Polynomial.constant(self.env, 1)
        self._reducer = MultiReducer(self.n, self.m) if self.reduce else None
        self._remaining = sum(1 + w.length() for w in self.blocks)

    def _tidy(self):
        f = self.current
        if self._reducer is not None:
            f = self._reducer.reduce(f)
        if self.y_free_only:
            # each divided difference lowers the y-degree of a term by exactly one
            n, left = self.n, self._remaining
            f = Polynomial(
                f.env, {e: c for e, c in f.terms.items() if sum(e[:n]) <= left}, _trusted=True
            )
        self.current = f

    def multiply(self, p: Polynomial):
        if self.y_free_only:
            self.current = self.current.mul_truncated(p, self.n, self._remaining)
        else:
            self.current = self.current * p
        self._tidy()

    def differentiate(self, spec: DividedDiffSpec):
        self.current = divided_diff(self.current, spec)
        self._remaining -= 1
        self._tidy()

    def run(self) -> Polynomial:
        n, m = self.n, self.m
        theta = DividedDiffSpec("y", (1, n))
        for j in range(self.r, 0, -1):
            base = (j - 1) * n
            for t in range(1, n):
                self.multiply(point_class(base + 1 + t, n - t, n, m))
            self.differentiate(theta)
            self.multiply(point_class(base + 1, n, n, m))
            for i in reversed(reduced_word(self.blocks[j - 1])):
                self.differentiate(DividedDiffSpec.simple("y", i))
        if sum(w.length() for w in self.blocks) % 2:
            self.current = -self.current
        return self.current


def build_tilde(blocks: Sequence[Permutation], n: int, reduce: bool = True) -> Polynomial:
    """S~(x~, y) for the block factorisation w_1 s0 ... w_r s0."""
    _check_size(n, len(blocks))
    return PipelineState(n, tuple(blocks), reduce=reduce).run()


def build_tilde_x(blocks: Sequence[Permutation], n: int) -> Polynomial:
    """S~(x~) directly, discarding terms whose y-degree can no longer reach 0.

    No x~-power ever reaches n here and the multiples of e_1(y) vanish at y = 0,
    so the normal-form step is skipped on this path.
    """
    _check_size(n, len(blocks))
    f = PipelineState(n, tuple(blocks), reduce=False, y_free_only=True).run()
    return specialize_y0(f, n)


def _check_size(n: int, r: int):
    cap = max_degree()
    if n * r > cap:
        raise PipelineTooLarge(
            f"pipeline needs {n * r} x-variables, above the cap {cap} (LOOP_SCHUBERT_MAX_DEGREE)"
        )


def specialize_y0(f: Polynomial, n: int) -> Polynomial:
    """Set y = 0 and reduce modulo every x~_k^n; result lives in the x-only environment."""
    m = len(f.env) - n
    env = x_vars(m)
    out = {}
    for e, c in f.terms.items():
        if any(e[:n]):
            continue
        xe = e[n:]
        if any(a >= n for a in xe):
            continue
        out[xe] = c
    return Polynomial(env, out)


def sym_map(f: Polynomial, n: int) -> Polynomial:
    """x~^{i_1} ... x~^{i_m} -> h_{n-1-i_1} ... h_{n-1-i_m} with h_0 = 1."""
    env = h_vars(n)
    out: dict = {}
    for e, c in f.terms.items():
        he = [0] * (n - 1)
        for a in e:
            if a >= n:
                raise ValueError(f"exponent {a} >= n={n}: input is not reduced")
            d = n - 1 - a
            if d:
                he[d - 1] += 1
        he = tuple(he)
        out[he] = out.get(he, 0) + c
    return Polynomial(env, {e: c for e, c in out.items() if c})


def blocks_for(v: AffineElement, word: Sequence[int] | None = None) -> tuple[Permutation, ...]:
    """Blocks of the charge-0 part of v, from ``word`` or the canonical reduced word."""
    _, hat = sigma_decompose(v)
    if word is None:
        _, word = reduced_word_affine(hat)
    elif AffineElement.from_word(v.n, word) != hat:
        raise ValueError(f"word {list(word)} does not spell the charge-0 part {hat}")
    return tuple(group_blocks(v.n, word))


@lru_cache(maxsize=None)
def _schubert_of_blocks(n: int, blocks: tuple[Permutation, ...]) -> Polynomial:
    if not blocks:
        return Polynomial.constant(h_vars(n), 1)
    return sym_map(build_tilde_x(blocks, n), n)


def affine_schubert_element(v: AffineElement, word: Sequence[int] | None = None) -> Polynomial:
    """Schubert polynomial of a right-minimal element (its sigma-part is ignored)."""
    if not v.is_right_minimal():
        raise ValueError(f"{v} is not minimal in its coset")
    return _schubert_of_blocks(v.n, blocks_for(v, word))


def affine_schubert(lam: Coweight, word: Sequence[int] | None = None) -> Polynomial:
    return affine_schubert_element(min_coset_rep(lam), word)


@dataclass(frozen=True)
class PipelineRecord:
    lam: Coweight
    lam_hat: Coweight
    sigma_power: int
    word: tuple[int, ...]
    length: int
    tilde_xy: Polynomial | None
    tilde_x: Polynomial
    schubert_h: Polynomial


def run_pipeline(lam: Coweight, word: Sequence[int] | None = None, full: bool = True) -> PipelineRecord:
    """All intermediate stages; ``full`` also computes S~(x~, y)."""
    v = min_coset_rep(lam)
    k, hat = sigma_decompose(v)
    if word is None:
        _, word = reduced_word_affine(hat)
    blocks = blocks_for(v, word)
    n = lam.n
    tilde_xy = build_tilde(blocks, n) if full and blocks else None
    if blocks:
        tilde_x = specialize_y0(tilde_xy, n) if tilde_xy is not None else build_tilde_x(blocks, n)
    else:
        tilde_x = Polynomial.constant((), 1)
    return PipelineRecord(
        lam=lam,
        lam_hat=coweight_of(hat),
        sigma_power=k,
        word=tuple(word),
        length=length(v),
        tilde_xy=tilde_xy,
        tilde_x=tilde_x,
        schubert_h=sym_map(tilde_x, n) if blocks else Polynomial.constant(h_vars(n), 1),
    )


def pontryagin_product(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.env != q.env:
        raise ValueError("factors live in different rings")
    return p * q


@dataclass(frozen=True)
class TheoremAReport:
    lam: Coweight
    mu: Coweight
    nu: Coweight | None
    preconditions_hold: bool
    identity_holds: bool | None
    reason: str = ""


def theorem_a_target(lam: Coweight, mu: Coweight) -> tuple[bool, Coweight | None, str]:
    """Check the hypotheses and return nu with m^nu = m^lam t^mu."""
    if not mu.is_antidominant():
        return False, None, "mu is not anti-dominant"
    m_lam = min_coset_rep(lam)
    t_mu = translation(mu)
    prod = m_lam * t_mu
    nu = coweight_of(prod)
    if length(m_lam) + length(t_mu) != length(prod):
        return False, nu, "lengths do not add"
    if not prod.is_right_minimal():
        return False, nu, "product is not minimal in its coset"
    return True, nu, ""


def verify_theorem_A(lam: Coweight, mu: Coweight) -> TheoremAReport:
    ok, nu, reason = theorem_a_target(lam, mu)
    if not ok:
        return TheoremAReport(lam, mu, nu, False, None, reason)
    lhs = pontryagin_product(affine_schubert(lam), affine_schubert(mu))
    rhs = affine_schubert(nu)
    return TheoremAReport(lam, mu, nu, True, lhs == rhs, "" if lhs == rhs else "product mismatch")


def theorem_a_pairs(n: int, max_length: int) -> list[tuple[Coweight, Coweight, Coweight]]:
    """All (lam, mu, nu) with mu anti-dominant, lengths adding and l(m^nu) <= max_length."""
    from .affine import coweights_up_to_length

    lams = coweights_up_to_length(n, max_length)
    mus = [mu for mu in lams if mu.is_antidominant() and length(translation(mu)) <= max_length]
    out = []
    for lam in lams:
        base = length(min_coset_rep(lam))
        for mu in mus:
            if base + length(translation(mu)) > max_length:
                continue
            ok, nu, _ = theorem_a_target(lam, mu)
            if ok:
                out.append((lam, mu, nu))
    return out


def word_independence_check(lam: Coweight, cap: int = 50) -> bool:
    v = min_coset_rep(lam)
    results = set()
    for word in reduced_words(v, cap):
        results.add(affine_schubert_element(v, word))
        if len(results) > 1:
            return False
    return True


# fundamental box


def iota(n: int) -> AffineElement:
    return AffineElement.sigma(n, n // 2 if n % 2 == 0 else 0)


def box_top(n: int) -> AffineElement:
    """m_hat, where m^rho = iota m_hat; its right factors index the box classes."""
    m_rho = min_coset_rep(Coweight.rho(n))
    hat = iota(n).inverse() * m_rho
    if not hat.is_affine():
        raise ArithmeticError("m^rho does not decompose with iota")
    return hat


def left_interval(top: AffineElement) -> list[AffineElement]:
    """All right factors w of top (top = u w with l(top) = l(u) + l(w)), by stripping left descents."""
    seen = {top}
    frontier = [top]
    while frontier:
        nxt = []
        for v in frontier:
            for i in v.left_descents():
                u = AffineElement.simple(v.n, i) * v
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen, key=lambda e: (length(e), e.window))


@dataclass(frozen=True)
class BoxClass:
    element: AffineElement
    lam: Coweight
    schubert_h: Polynomial
    divisors: tuple[AffineElement, ...]
    factorization: tuple[AffineElement, AffineElement] | None


def box_classes(n: int, extra: Iterable[AffineElement] = ()) -> list[BoxClass]:
    """Classes of the fundamental box with detected factorizations into other classes.

    The comparison pool is the box itself plus ``extra`` (defaults to the m^{-varpi_i}).
    """
    elems = left_interval(box_top(n))
    pool = list(elems)
    extra = list(extra) or [sigma_decompose(min_coset_rep(-Coweight.fundamental(n, i)))[1] for i in range(1, n)]
    for e in extra:
        if e not in pool:
            pool.append(e)
    values = {e: affine_schubert_element(e) for e in pool}
    by_value = {}
    for e, p in values.items():
        by_value.setdefault(p, e)
    out = []
    for e in elems:
        p = values[e]
        divisors, fact = [], None
        for d in pool:
            if d == e or length(d) == 0 or length(d) >= length(e):
                continue
            q = exact_divide(p, values[d])
            if q is None:
                continue
            divisors.append(d)
            if fact is None and q in by_value and length(by_value[q]) > 0:
                fact = (d, by_value[q])
        out.append(BoxClass(e, coweight_of(e), p, tuple(divisors), fact))
    return out
