"""Sparse multivariate polynomials over Q with a pure lex order, and the preset ideals.

A polynomial lives in an environment: a tuple of variable names listed from the
smallest to the largest variable.  For the equivariant rings that is
``("y1", ..., "yn", "x1", ..., "xm")``, so y1 < ... < yn < x1 < ... < xm.
Exponent vectors follow the environment; comparing reversed vectors gives lex.

Coefficients are Python ints while integral and Fractions otherwise.
"""

from __future__ import annotations

import heapq
import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

Exp = tuple  # exponent vector
Coeff = "int | Fraction"


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def y_vars(n: int) -> tuple[str, ...]:
    return tuple(f"y{i}" for i in range(1, n + 1))


def x_vars(m: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, m + 1))


def h_vars(n: int) -> tuple[str, ...]:
    return tuple(f"h{i}" for i in range(1, n))


def ring_env(n: int, m: int) -> tuple[str, ...]:
    """y1..yn then x1..xm, in increasing lex order."""
    return y_vars(n) + x_vars(m)


def lex_key(exp: Exp) -> tuple:
    return exp[::-1]


class Polynomial:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("env", "terms", "_hash")

    def __init__(self, env: Sequence[str], terms: Mapping[Exp, object] | None = None, _trusted=False):
        self.env = tuple(env)
        if _trusted:
            self.terms = terms
        else:
            k = len(self.env)
            clean = {}
            for e, c in (terms or {}).items():
                e = tuple(e)
                if len(e) != k:
                    raise ValueError(f"exponent {e} does not match environment of size {k}")
                if c:
                    clean[e] = _norm(c)
            self.terms = clean
        self._hash = None

    # construction

    @classmethod
    def zero(cls, env) -> Polynomial:
        return cls(env, {}, _trusted=True)

    @classmethod
    def constant(cls, env, c=1) -> Polynomial:
        env = tuple(env)
        return cls(env, {(0,) * len(env): c})

    @classmethod
    def var(cls, env, name: str) -> Polynomial:
        env = tuple(env)
        if name not in env:
            raise ValueError(f"variable {name} not in {env}")
        e = [0] * len(env)
        e[env.index(name)] = 1
        return cls(env, {tuple(e): 1}, _trusted=True)

    @classmethod
    def monomial(cls, env, exp: Exp, c=1) -> Polynomial:
        return cls(env, {tuple(exp): c})

    # basic protocol

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.env == other.env and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.env, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.env, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({to_text(self)!r}, env={self.env})"

    def __str__(self) -> str:
        return to_text(self)

    def _check(self, other: Polynomial):
        if self.env != other.env:
            raise ValueError(f"environment mismatch: {self.env} vs {other.env}")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.env, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    # arithmetic

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return Polynomial(self.env, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.env, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.env, {e: _norm(c) for e, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def mul_truncated(self, other: Polynomial, prefix: int, bound: int) -> Polynomial:
        """Product keeping only terms whose first ``prefix`` exponents sum to at most ``bound``."""
        self._check(other)
        buckets: dict[int, list] = {}
        for e, c in other.terms.items():
            buckets.setdefault(sum(e[:prefix]), []).append((e, c))
        out: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1[:prefix])
            for d2, items in buckets.items():
                if d1 + d2 > bound:
                    continue
                for e2, c2 in items:
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.env, {e: _norm(c) for e, c in out.items() if c}, _trusted=True)

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.env, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> Polynomial:
        if not c:
            return Polynomial.zero(self.env)
        return Polynomial(self.env, {e: _norm(v * c) for e, v in self.terms.items()}, _trusted=True)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def leading(self) -> tuple[Exp, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=lex_key)
        return e, self.terms[e]

    def sorted_terms(self) -> list[tuple[Exp, object]]:
        """Terms in decreasing lex order."""
        return sorted(self.terms.items(), key=lambda t: lex_key(t[0]), reverse=True)

    def weights(self) -> tuple[int, ...]:
        """Half-dimension of each variable: 1 for x/y, i for h_i."""
        out = []
        for name in self.env:
            out.append(int(name[1:]) if name[0] == "h" else 1)
        return tuple(out)

    def dims(self) -> set[int]:
        w = self.weights()
        return {2 * sum(a * b for a, b in zip(e, w)) for e in self.terms}

    def dim(self) -> int:
        """Real dimension of a homogeneous polynomial (0 for the zero polynomial)."""
        d = self.dims()
        if len(d) > 1:
            raise ValueError(f"polynomial is not homogeneous: dims {sorted(d)}")
        return d.pop() if d else 0

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def variables_used(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(v for v, a in zip(self.env, e) if a)
        return used

    def coefficient(self, exp: Exp):
        return self.terms.get(tuple(exp), 0)

    # variable manipulation

    def substitute_zero(self, names: Iterable[str]) -> Polynomial:
        idx = [self.env.index(v) for v in names]
        out = {e: c for e, c in self.terms.items() if not any(e[i] for i in idx)}
        return Polynomial(self.env, out, _trusted=True)

    def permute_vars(self, perm: Callable[[int], int] | Sequence[int], axis: str) -> Polynomial:
        """Send axis_i to axis_{perm(i)} (1-based) and leave the other block alone."""
        if not callable(perm):
            table = list(perm)
            perm = lambda i: table[i - 1]
        pos = {}
        for j, name in enumerate(self.env):
            if name[0] == axis and name[1:].isdigit():
                pos[int(name[1:])] = j
        target = {pos[i]: pos[perm(i)] for i in pos}
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            for src, dst in target.items():
                ne[dst] = e[src]
            out[tuple(ne)] = c
        return Polynomial(self.env, out, _trusted=True)

    def swap(self, a: str, b: str) -> Polynomial:
        i, j = self.env.index(a), self.env.index(b)
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[i], ne[j] = e[j], e[i]
            out[tuple(ne)] = c
        return Polynomial(self.env, out, _trusted=True)

    def reenv(self, env: Sequence[str], rename: Mapping[str, str] | None = None) -> Polynomial:
        """Move to another environment; variables used must exist there (after renaming)."""
        env = tuple(env)
        rename = rename or {}
        index = []
        for j, name in enumerate(self.env):
            tgt = rename.get(name, name)
            index.append(env.index(tgt) if tgt in env else None)
        out = {}
        k = len(env)
        for e, c in self.terms.items():
            ne = [0] * k
            for j, a in enumerate(e):
                if a:
                    if index[j] is None:
                        raise ValueError(f"variable {self.env[j]} has no place in {env}")
                    ne[index[j]] += a
            ne = tuple(ne)
            v = out.get(ne, 0) + c
            out[ne] = v
        return Polynomial(env, {e: c for e, c in out.items() if c})

    def substitute(self, mapping: Mapping[str, Polynomial], env: Sequence[str]) -> Polynomial:
        """Replace each variable by a polynomial in ``env``; unmapped variables must be in ``env``."""
        env = tuple(env)
        images = []
        for name in self.env:
            if name in mapping:
                img = mapping[name]
                if img.env != env:
                    img = img.reenv(env)
            else:
                img = Polynomial.var(env, name) if name in env else None
            images.append(img)
        powers: dict = {}

        def power(j, a):
            key = (j, a)
            if key not in powers:
                if images[j] is None:
                    raise ValueError(f"variable {self.env[j]} has no image")
                powers[key] = images[j] ** a
            return powers[key]

        out = Polynomial.zero(env)
        for e, c in self.terms.items():
            t = Polynomial.constant(env, c)
            for j, a in enumerate(e):
                if a:
                    t = t * power(j, a)
            out = out + t
        return out


# symmetric functions


def elementary(env, names: Sequence[str], d: int) -> Polynomial:
    env = tuple(env)
    if d < 0 or d > len(names):
        return Polynomial.zero(env)
    idx = [env.index(v) for v in names]
    out = {}
    for combo in itertools.combinations(idx, d):
        e = [0] * len(env)
        for i in combo:
            e[i] = 1
        out[tuple(e)] = 1
    return Polynomial(env, out, _trusted=True)


def complete(env, names: Sequence[str], d: int) -> Polynomial:
    env = tuple(env)
    if d < 0:
        return Polynomial.zero(env)
    idx = [env.index(v) for v in names]
    out = {}
    for combo in itertools.combinations_with_replacement(idx, d):
        e = [0] * len(env)
        for i in combo:
            e[i] += 1
        out[tuple(e)] = 1
    return Polynomial(env, out, _trusted=True)


def linear(env, name_a: str, name_b: str) -> Polynomial:
    """The linear form a - b."""
    return Polynomial.var(env, name_a) - Polynomial.var(env, name_b)


# text and JSON formats


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def to_text(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        factors = []
        for name, a in zip(p.env, e):
            if a == 1:
                factors.append(name)
            elif a:
                factors.append(f"{name}^{a}")
        mag = -c if c < 0 else c
        if not factors:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = " * ".join(factors)
        else:
            body = " * ".join([_fmt_coeff(mag)] + factors)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^([A-Za-z]\w*?)(?:\^(\d+))?$")


def from_text(text: str, env: Sequence[str]) -> Polynomial:
    """Inverse of :func:`to_text`; accepts ``*`` separated factors and rational coefficients."""
    env = tuple(env)
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    pieces = _TERM_SPLIT.split(text)
    # pieces alternates: [first, sign, term, sign, term, ...]
    signed = []
    if pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    for sign, body in zip(pieces[0::2], pieces[1::2]):
        signed.append((-1 if sign == "-" else 1, body))
    out = Polynomial.zero(env)
    for sign, body in signed:
        coeff = Fraction(sign)
        e = [0] * len(env)
        for tok in body.split("*"):
            tok = tok.strip()
            if not tok:
                raise ValueError(f"empty factor in {body!r}")
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coeff *= Fraction(tok)
                continue
            m = _FACTOR.match(tok)
            if m is None or m.group(1) not in env:
                raise ValueError(f"bad factor {tok!r} for environment {env}")
            e[env.index(m.group(1))] += int(m.group(2) or 1)
        out = out + Polynomial.monomial(env, tuple(e), coeff)
    return out


def to_json_obj(p: Polynomial) -> dict:
    terms = []
    for e, c in p.sorted_terms():
        c = Fraction(c)
        terms.append({"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)})
    return {"vars": list(p.env), "terms": terms}


def from_json_obj(obj: Mapping) -> Polynomial:
    env = tuple(obj["vars"])
    terms = {}
    for t in obj["terms"]:
        e = tuple(int(a) for a in t["exp"])
        if e in terms:
            raise ValueError(f"duplicate exponent {e}")
        terms[e] = Fraction(int(t["num"]), int(t["den"]))
    return Polynomial(env, terms)


def to_json(p: Polynomial) -> str:
    return json.dumps(to_json_obj(p), sort_keys=True)


def from_json(text: str) -> Polynomial:
    return from_json_obj(json.loads(text))


# preset ideals


@dataclass(frozen=True)
class QuotientPreset:
    name: str
    n: int
    m: int
    env: tuple[str, ...]
    generators: tuple[Polynomial, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def leading_exponents(self) -> list[Exp]:
        return [g.leading()[0] for g in self.generators]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)


def _J(n: int) -> QuotientPreset:
    env = ring_env(n, n)
    ys = y_vars(n)
    xs = x_vars(n)
    gens = [complete(env, xs, 1), elementary(env, ys, 1)]
    for d in range(1, n + 1):
        xsub = xs[: n + 1 - d]
        g = Polynomial.zero(env)
        for i in range(d + 1):
            term = complete(env, xsub, d - i) * elementary(env, ys, i)
            g = g + (term if i % 2 == 0 else -term)
        gens.append(g)
    return QuotientPreset("J", n, n, env, tuple(gens))


def _J0(n: int) -> QuotientPreset:
    env = x_vars(n)
    gens = [complete(env, env[: n + 1 - k], k) for k in range(1, n + 1)]
    return QuotientPreset("J0", n, n, env, tuple(gens))


def _JpiMulti(n: int, m: int, name: str) -> QuotientPreset:
    env = ring_env(n, m)
    ys = y_vars(n)
    gens = [elementary(env, ys, 1)]
    for k in range(1, m + 1):
        xk = Polynomial.var(env, f"x{k}")
        g = Polynomial.zero(env)
        for j in range(n + 1):
            term = xk ** j * elementary(env, ys, n - j)
            g = g + (term if (n - j) % 2 == 0 else -term)
        gens.append(g)
    return QuotientPreset(name, n, m, env, tuple(gens))


def _Jpi0Multi(n: int, m: int, name: str) -> QuotientPreset:
    env = x_vars(m)
    gens = [Polynomial.var(env, f"x{k}") ** n for k in range(1, m + 1)]
    return QuotientPreset(name, n, m, env, tuple(gens))


@lru_cache(maxsize=None)
def preset(name: str, n: int, m: int | None = None) -> QuotientPreset:
    """Reduced Groebner bases in the lex order y1 < ... < yn < x1 < ... < xm.

    For the single projective-space presets the variable x1 plays the role of x-tilde.
    """
    if n < 2:
        raise ValueError(f"presets need n >= 2, got {n}")
    if name == "J":
        return _J(n)
    if name == "J0":
        return _J0(n)
    if name == "Jpi":
        return _JpiMulti(n, 1, "Jpi")
    if name == "Jpi0":
        return _Jpi0Multi(n, 1, "Jpi0")
    if m is None or m < 1:
        raise ValueError(f"preset {name} needs m >= 1")
    if name == "JpiMulti":
        return _JpiMulti(n, m, "JpiMulti")
    if name == "Jpi0Multi":
        return _Jpi0Multi(n, m, "Jpi0Multi")
    raise ValueError(f"unknown preset {name!r}")


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _reduce_monomial(exp: Exp, q: QuotientPreset) -> dict:
    """Division remainder of a single monomial, by explicit heap (largest term first)."""
    gens = sorted(
        ((g.leading(), g) for g in q.generators), key=lambda t: lex_key(t[0][0])
    )
    tails = [(lt, lc, [(e, c) for e, c in g.terms.items() if e != lt]) for (lt, lc), g in gens]
    pending = {exp: 1}
    heap = [tuple(-a for a in lex_key(exp))]
    rem = {}
    while heap:
        key = heapq.heappop(heap)
        e = tuple(-a for a in key)[::-1]
        c = pending.pop(e, 0)
        if not c:
            continue
        cached = q._cache.get(e) if e != exp else None
        if cached is not None:
            for re_, rc in cached.items():
                v = rem.get(re_, 0) + c * rc
                if v:
                    rem[re_] = v
                else:
                    rem.pop(re_, None)
            continue
        for lt, lc, tail in tails:
            if _divides(lt, e):
                quot = tuple(a - b for a, b in zip(e, lt))
                f = Fraction(c) / lc
                for te, tc in tail:
                    ne = tuple(a + b for a, b in zip(quot, te))
                    if ne not in pending:
                        heapq.heappush(heap, tuple(-a for a in lex_key(ne)))
                        pending[ne] = 0
                    pending[ne] = pending[ne] - f * tc
                break
        else:
            v = rem.get(e, 0) + c
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    return {e: _norm(c) for e, c in rem.items() if c}


def monomial_normal_form(exp: Exp, q: QuotientPreset) -> dict:
    exp = tuple(exp)
    out = q._cache.get(exp)
    if out is None:
        out = _reduce_monomial(exp, q)
        q._cache[exp] = out
    return out


def normal_form(f: Polynomial, q: QuotientPreset) -> Polynomial:
    """Multivariate division remainder of f by the preset's generators."""
    if f.env != q.env:
        raise ValueError(f"polynomial environment {f.env} is not the preset's {q.env}")
    out: dict = {}
    for e, c in f.terms.items():
        for re_, rc in monomial_normal_form(e, q).items():
            v = out.get(re_, 0) + c * rc
            if v:
                out[re_] = v
            else:
                out.pop(re_, None)
    return Polynomial(q.env, {e: _norm(c) for e, c in out.items() if c}, _trusted=True)


def is_reduced(f: Polynomial, q: QuotientPreset) -> bool:
    lts = q.leading_exponents()
    return not any(_divides(lt, e) for e in f.terms for lt in lts)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    (ef, cf), (eg, cg) = f.leading(), g.leading()
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = Polynomial.monomial(f.env, tuple(a - b for a, b in zip(lcm, ef)), Fraction(1) / cf)
    mg = Polynomial.monomial(g.env, tuple(a - b for a, b in zip(lcm, eg)), Fraction(1) / cg)
    return mf * f - mg * g


def buchberger_check(q: QuotientPreset) -> list[tuple[int, int]]:
    """Pairs (i, j) whose S-polynomial does not reduce to zero; empty iff the basis is Groebner."""
    bad = []
    gens = q.generators
    for i, j in itertools.combinations(range(len(gens)), 2):
        ei, ej = gens[i].leading()[0], gens[j].leading()[0]
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue  # coprime leading terms
        if normal_form(s_polynomial(gens[i], gens[j]), q):
            bad.append((i, j))
    return bad


# fast reduction for the multi-projective quotient


class MultiReducer:
    """Normal form modulo JpiMulti(n, m) without the generic division loop.

    Every generator other than e1(y) has leading term x_k^n and is the product
    prod_j (x_k - y_j), so powers x_k^a with a >= n are rewritten through a
    cached expansion, and y_n is eliminated through y_n = -(y_1 + ... + y_{n-1}).
    """

    def __init__(self, n: int, m: int):
        self.n, self.m = n, m
        self.env = ring_env(n, m)
        self._ypow: dict[int, dict] = {}
        self._xpow: dict[int, dict] = {}

    def _yn_power(self, a: int) -> dict:
        """(-(y1+...+y_{n-1}))^a as {y-exponent (length n-1): coeff}."""
        if a not in self._ypow:
            n = self.n
            if a == 0:
                self._ypow[a] = {(0,) * (n - 1): 1}
            else:
                prev = self._yn_power(a - 1)
                out: dict = {}
                for e, c in prev.items():
                    for i in range(n - 1):
                        ne = list(e)
                        ne[i] += 1
                        ne = tuple(ne)
                        out[ne] = out.get(ne, 0) - c
                self._ypow[a] = {e: c for e, c in out.items() if c}
        return self._ypow[a]

    def _x_power(self, a: int) -> dict:
        """x^a reduced mod prod_j (x - y_j), as {(x-exponent, y-exponent of length n)}: coeff}."""
        if a not in self._xpow:
            n = self.n
            if a < n:
                self._xpow[a] = {(a, (0,) * n): 1}
            else:
                # x^n = -sum_{j<n} (-1)^{n-j} e_{n-j}(y) x^j
                prev = self._x_power(a - 1)
                out: dict = {}
                for (xa, ye), c in prev.items():
                    if xa + 1 < n:
                        key = (xa + 1, ye)
                        out[key] = out.get(key, 0) + c
                        continue
                    for j in range(n):
                        d = n - j
                        sign = -1 if d % 2 == 0 else 1
                        for combo in itertools.combinations(range(n), d):
                            ne = list(ye)
                            for i in combo:
                                ne[i] += 1
                            key = (j, tuple(ne))
                            out[key] = out.get(key, 0) + sign * c
                self._xpow[a] = {k: v for k, v in out.items() if v}
        return self._xpow[a]

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.env != self.env:
            raise ValueError("environment mismatch")
        n, m = self.n, self.m
        terms = f.terms
        # x-powers first (they may introduce y_n)
        if any(a >= n for e in terms for a in e[n:]):
            stage: dict = {}
            for e, c in terms.items():
                partial = {e: c}
                for k in range(m):
                    a = e[n + k]
                    if a < n:
                        continue
                    nxt: dict = {}
                    for pe, pc in partial.items():
                        for (xa, ye), xc in self._x_power(a).items():
                            ne = list(pe)
                            ne[n + k] = xa
                            for i in range(n):
                                ne[i] += ye[i]
                            ne = tuple(ne)
                            nxt[ne] = nxt.get(ne, 0) + pc * xc
                    partial = nxt
                for pe, pc in partial.items():
                    stage[pe] = stage.get(pe, 0) + pc
            terms = {e: c for e, c in stage.items() if c}
        out: dict = {}
        for e, c in terms.items():
            b = e[n - 1]
            if b == 0:
                out[e] = out.get(e, 0) + c
                continue
            for ye, yc in self._yn_power(b).items():
                ne = tuple(e[i] + ye[i] for i in range(n - 1)) + (0,) + e[n:]
                out[ne] = out.get(ne, 0) + c * yc
        return Polynomial(self.env, {e: _norm(c) for e, c in out.items() if c}, _trusted=True)


# linear algebra over Q


def rank(rows: list[list]) -> int:
    """Exact rank by fraction-free-ish Gaussian elimination over Q."""
    mat = [[Fraction(v) for v in row] for row in rows if any(row)]
    if not mat:
        return 0
    r = 0
    ncols = len(mat[0])
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][col]
        for i in range(r + 1, len(mat)):
            if mat[i][col]:
                f = mat[i][col] / pv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Return q with f = q * g, or None if g does not divide f (multivariate division, lex)."""
    f._check(g)
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    eg, cg = g.leading()
    q = Polynomial.zero(f.env)
    r = f
    while r:
        er, cr = r.leading()
        if not _divides(eg, er):
            return None
        t = Polynomial.monomial(f.env, tuple(a - b for a, b in zip(er, eg)), Fraction(cr) / cg)
        q = q + t
        r = r - t * g
    return q
