"""Alcove geometry for an arbitrary finite irreducible root system.

Points of the coweight space are written in fundamental-coweight coordinates,
so <alpha_i, mu> is simply mu_i.  The Cartan matrix follows a[i][j] = <alpha_i^vee, alpha_j>,
hence alpha_i^vee has coordinates given by row i and s_i(mu) = mu - mu_i * row_i.

An affine element is stored as (linear, translate) acting by mu -> linear(mu + translate).
"""

from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

Matrix = tuple  # tuple of row tuples
Vector = tuple


class PreconditionError(ValueError):
    pass


# Cartan matrices


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(kind: str) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix for a type label such as ``A3``, ``C2``, ``E6``, or a JSON matrix."""
    text = kind.strip()
    if text.startswith("["):
        a = json.loads(text)
        return tuple(tuple(int(v) for v in row) for row in a)
    m = re.fullmatch(r"([A-Ga-g])_?(\d+)", text)
    if m is None:
        raise ValueError(f"unrecognised Cartan type {kind!r}")
    letter, n = m.group(1).upper(), int(m.group(2))
    if letter == "A" and n >= 1:
        a = _chain(n)
    elif letter == "B" and n >= 2:
        a = _chain(n)
        a[n - 1][n - 2] = -2  # alpha_n short
    elif letter == "C" and n >= 2:
        a = _chain(n)
        a[n - 2][n - 1] = -2  # alpha_n long
    elif letter == "D" and n >= 4:
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif letter == "E" and n in (6, 7, 8):
        # Bourbaki labels: 1-3-4-5-6-(7-8), with 2 attached to 4
        a = [[0] * n for _ in range(n)]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] + [(6, 7), (7, 8)][: n - 6]
        for i in range(n):
            a[i][i] = 2
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif letter == "F" and n == 4:
        a = _chain(4)
        a[1][2] = -2  # alpha_1, alpha_2 long
    elif letter == "G" and n == 2:
        a = [[2, -3], [-1, 2]]  # alpha_1 short
    else:
        raise ValueError(f"no finite root system of type {letter}{n}")
    return tuple(tuple(row) for row in a)


# root systems


@dataclass(frozen=True)
class RootSystem:
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]  # simple-root coefficients
    coroots: tuple[tuple[int, ...], ...]  # matching coroots in coweight coordinates
    theta: tuple[int, ...]
    theta_coroot: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def pair(self, root: Sequence[int], mu: Sequence) -> object:
        """<root, mu> for a root in simple-root coordinates and mu in coweight coordinates."""
        return sum(c * v for c, v in zip(root, mu))

    def coroot_of(self, root: Sequence[int]) -> tuple[int, ...]:
        return self.coroots[self.positive_roots.index(tuple(root))]

    def weyl_order(self) -> int:
        return sum(1 for _ in finite_weyl_group(self))

    def index_connection(self) -> int:
        """[P^vee : Q^vee] = |det A|."""
        return abs(_det(self.cartan))


def _det(a) -> int:
    m = [[Fraction(v) for v in row] for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return int(det)


def _reflect_root(a, i: int, beta: Sequence[int]) -> tuple[int, ...]:
    k = sum(c * a[i][j] for j, c in enumerate(beta))  # <beta, alpha_i^vee>
    out = list(beta)
    out[i] -= k
    return tuple(out)


def _reflect_coweight(a, i: int, mu: Sequence) -> tuple:
    return tuple(v - mu[i] * a[i][j] for j, v in enumerate(mu))


@lru_cache(maxsize=None)
def build_root_system(cartan, max_roots: int = 500) -> RootSystem:
    """Positive roots by reflection closure from the simple roots."""
    a = tuple(tuple(int(v) for v in row) for row in cartan)
    n = len(a)
    if any(len(row) != n for row in a) or any(a[i][i] != 2 for i in range(n)):
        raise ValueError("not a Cartan matrix")
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    pairs = {s: a[i] for i, s in enumerate(simple)}
    frontier = list(pairs)
    while frontier:
        nxt = []
        for beta in frontier:
            cor = pairs[beta]
            for i in range(n):
                gamma = _reflect_root(a, i, beta)
                if all(c >= 0 for c in gamma) and any(gamma) and gamma not in pairs:
                    pairs[gamma] = _reflect_coweight(a, i, cor)
                    nxt.append(gamma)
        frontier = nxt
        if len(pairs) > max_roots:
            raise ValueError("root closure does not terminate: Cartan matrix is not of finite type")
    roots = sorted(pairs, key=lambda r: (sum(r), r))
    top = [r for r in roots if sum(r) == sum(roots[-1])]
    if len(top) != 1:
        raise ValueError("no unique highest root: Cartan matrix is not irreducible")
    theta = top[0]
    return RootSystem(
        cartan=a,
        positive_roots=tuple(roots),
        coroots=tuple(tuple(pairs[r]) for r in roots),
        theta=theta,
        theta_coroot=tuple(pairs[theta]),
    )


def root_system(kind: str) -> RootSystem:
    return build_root_system(cartan_matrix(kind))


# affine transforms


def _matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))) for i in range(len(a)))


def _matvec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def _identity(n: int):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matinv(a):
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c])
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [v / piv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    out = []
    for row in m:
        vals = row[n:]
        out.append(tuple(int(v) if v.denominator == 1 else v for v in vals))
    return tuple(out)


def _vec(v) -> tuple:
    return tuple(int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in v)


@dataclass(frozen=True)
class AffineTransform:
    linear: Matrix
    translate: Vector

    @classmethod
    def identity(cls, rank: int) -> AffineTransform:
        return cls(_identity(rank), (0,) * rank)

    @classmethod
    def translation(cls, lam: Sequence) -> AffineTransform:
        return cls(_identity(len(lam)), _vec(lam))

    @classmethod
    def from_offset(cls, m: Matrix, b: Vector) -> AffineTransform:
        """mu -> m mu + b."""
        return cls(m, _vec(_matvec(_matinv(m), b)))

    @property
    def rank(self) -> int:
        return len(self.linear)

    def offset(self) -> Vector:
        return _matvec(self.linear, self.translate)

    def __call__(self, mu: Sequence) -> tuple:
        return _vec(_matvec(self.linear, [a + b for a, b in zip(mu, self.translate)]))

    def __mul__(self, other: AffineTransform) -> AffineTransform:
        m = _matmul(self.linear, other.linear)
        b = [x + y for x, y in zip(_matvec(self.linear, other.offset()), self.offset())]
        return AffineTransform.from_offset(m, b)

    def inverse(self) -> AffineTransform:
        return AffineTransform(_matinv(self.linear), _vec(-x for x in self.offset()))

    def is_translation(self) -> bool:
        return self.linear == _identity(self.rank)

    def is_finite(self) -> bool:
        return not any(self.translate)


def simple_reflection(rs: RootSystem, i: int) -> AffineTransform:
    """s_i for 1 <= i <= rank, and s_0 = t_{theta^vee} r_theta."""
    n = rs.rank
    if i == 0:
        r = reflection_matrix(rs, rs.theta, rs.theta_coroot)
        return AffineTransform(r, _vec(-c for c in rs.theta_coroot))
    if not 1 <= i <= n:
        raise ValueError(f"simple reflection s{i} does not exist in rank {n}")
    return AffineTransform(reflection_matrix(rs, rs.positive_roots[rs.positive_roots.index(_unit(n, i - 1))], rs.cartan[i - 1]), (0,) * n)


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(n))


def reflection_matrix(rs: RootSystem, root: Sequence[int], coroot: Sequence[int]) -> Matrix:
    """Matrix of mu -> mu - <root, mu> coroot on coweight coordinates."""
    n = rs.rank
    return tuple(tuple(int(i == j) - coroot[i] * root[j] for j in range(n)) for i in range(n))


def word_to_transform(word: Sequence[int], rs: RootSystem) -> AffineTransform:
    out = AffineTransform.identity(rs.rank)
    for i in word:
        out = out * simple_reflection(rs, i)
    return out


def reduced_word_transform(x: AffineTransform, rs: RootSystem) -> tuple[list[int], AffineTransform]:
    """x = s_{i1} ... s_{ik} z with k = l(x) and z of length zero, peeling the smallest left descent."""
    gens = [simple_reflection(rs, i) for i in range(rs.rank + 1)]
    word = []
    ell = length_by_separation(x, rs)
    while ell:
        for i, g in enumerate(gens):
            y = g * x
            if length_by_separation(y, rs) < ell:
                word.append(i)
                x, ell = y, ell - 1
                break
        else:
            raise ArithmeticError("no descent found for an element of positive length")
    return word, x


def parse_affine_word(text: str) -> list[int]:
    word = []
    for tok in re.split(r"[\s*,]+", text.strip()):
        if not tok:
            continue
        m = re.fullmatch(r"s(\d+)", tok)
        if m is None:
            raise ValueError(f"bad letter {tok!r} in {text!r}")
        word.append(int(m.group(1)))
    return word


# alcoves and boxes


def alcove_barycenter(rs: RootSystem) -> tuple[Fraction, ...]:
    n = rs.rank
    return tuple(Fraction(1, (n + 1) * c) for c in rs.theta)


def is_interior_fundamental(rs: RootSystem, p: Sequence) -> bool:
    return all(v > 0 for v in p) and rs.pair(rs.theta, p) < 1


def floor_coweight(p: Sequence) -> tuple[int, ...]:
    return tuple(math.floor(Fraction(v)) for v in p)


def length_by_separation(x: AffineTransform, rs: RootSystem) -> int:
    """Number of hyperplanes H_{alpha,k} separating x(A_0) from A_0."""
    q = x(alcove_barycenter(rs))
    return sum(abs(math.floor(rs.pair(alpha, q))) for alpha in rs.positive_roots)


def translation_length(lam: Sequence[int], rs: RootSystem) -> int:
    return sum(abs(rs.pair(alpha, lam)) for alpha in rs.positive_roots)


def box_membership(y: AffineTransform, rs: RootSystem) -> tuple[int, ...]:
    """The lam with y(A_0) inside B_lam = t_lam B_0."""
    return floor_coweight(y(alcove_barycenter(rs)))


def is_dominant(lam: Sequence) -> bool:
    return all(v >= 0 for v in lam)


def is_min_in_coset(x: AffineTransform, rs: RootSystem) -> bool:
    """x minimal in x W, i.e. x^{-1}(A_0) lies in the dominant chamber."""
    return all(v > 0 for v in x.inverse()(alcove_barycenter(rs)))


@dataclass(frozen=True)
class Factorization:
    lam: tuple[int, ...]
    cofactor: AffineTransform
    length_x: int
    length_y: int
    length_t: int


def max_antidominant_factor(x: AffineTransform, rs: RootSystem) -> Factorization:
    """Largest dominant lam with x = y t_{-lam} and l(x) = l(y) + l(t_{-lam})."""
    q = x.inverse()(alcove_barycenter(rs))
    if not all(v > 0 for v in q):
        raise PreconditionError("x is not minimal in its coset xW")
    lam = floor_coweight(q)
    y = x * AffineTransform.translation(lam)
    lx, ly = length_by_separation(x, rs), length_by_separation(y, rs)
    lt = translation_length(lam, rs)
    if lx != ly + lt:
        raise ArithmeticError(f"lengths do not add: {lx} != {ly} + {lt}")
    return Factorization(lam, y, lx, ly, lt)


def closed_form_lambda(w: AffineTransform, mu: Sequence[int], rs: RootSystem) -> tuple[int, ...]:
    """For x = w t_{-mu}: mu minus the fundamental coweights of {i : w(alpha_i) < 0}."""
    desc = right_descents_finite(w, rs)
    return tuple(m - int(i + 1 in desc) for i, m in enumerate(mu))


def right_descents_finite(w: AffineTransform, rs: RootSystem) -> set[int]:
    """{i : w(alpha_i) < 0}, read off from <alpha_i, w^{-1}(rho^vee)>."""
    rho = (1,) * rs.rank
    q = w.inverse()(rho)
    return {i + 1 for i in range(rs.rank) if q[i] < 0}


def inversion_set(w: AffineTransform, rs: RootSystem) -> set[tuple[int, ...]]:
    """Positive roots alpha with w(alpha) < 0."""
    q = w.inverse()((1,) * rs.rank)
    return {alpha for alpha in rs.positive_roots if rs.pair(alpha, q) < 0}


# enumeration


def finite_weyl_group(rs: RootSystem) -> Iterator[AffineTransform]:
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    seen = {AffineTransform.identity(rs.rank)}
    frontier = list(seen)
    yield from frontier
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                v = w * g
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
                    yield v
        frontier = nxt


def alcoves_by_length(rs: RootSystem, max_length: int) -> list[tuple[AffineTransform, tuple[int, ...]]]:
    """(element, reduced word) of the affine Weyl group with length <= max_length."""
    gens = [simple_reflection(rs, i) for i in range(rs.rank + 1)]
    level = [(AffineTransform.identity(rs.rank), ())]
    seen = {level[0][0]}
    out = list(level)
    for ell in range(1, max_length + 1):
        nxt = []
        for x, word in level:
            for i, g in enumerate(gens):
                y = x * g
                if y in seen or length_by_separation(y, rs) != ell:
                    continue
                seen.add(y)
                nxt.append((y, word + (i,)))
        out.extend(nxt)
        level = nxt
    return out


def dominant_coweights_up_to(rs: RootSystem, max_length: int) -> list[tuple[int, ...]]:
    """Dominant lam with l(t_lam) <= max_length."""
    out = []
    bound = max_length
    for lam in itertools.product(range(bound + 1), repeat=rs.rank):
        if translation_length(lam, rs) <= max_length:
            out.append(lam)
    return out


def brute_force_max_factor(x: AffineTransform, rs: RootSystem) -> list[tuple[int, ...]]:
    """All P-maximal dominant mu with l(x) = l(x t_mu) + l(t_{-mu})."""
    lx = length_by_separation(x, rs)
    good = []
    for mu in dominant_coweights_up_to(rs, lx):
        y = x * AffineTransform.translation(mu)
        if length_by_separation(y, rs) + translation_length(mu, rs) == lx:
            good.append(mu)
    return [m for m in good if not any(o != m and all(a >= b for a, b in zip(o, m)) for o in good)]


def right_weak_leq(x: AffineTransform, y: AffineTransform, rs: RootSystem) -> bool:
    """x <=_R y: y = x z with lengths adding (sigma-parts are ignored by the length)."""
    return length_by_separation(x, rs) + length_by_separation(x.inverse() * y, rs) == length_by_separation(y, rs)


def alcoves_per_box(rs: RootSystem) -> int:
    return rs.weyl_order() // rs.index_connection()
