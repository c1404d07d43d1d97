"""Affine and extended affine Weyl groups of type A_{n-1} as periodic permutations.

An element is a bijection pi of the integers with pi(i + n) = pi(i) + n, stored
by its window (pi(1), ..., pi(n)).  The charge sum(window) - n(n+1)/2 is a
multiple of n; elements of the non-extended group have charge 0.  The shift
i -> i + n is the translation by (1, ..., 1), which is trivial on the coweight
space, so windows are normalised to 0 <= charge/n < n.  With that choice
charge/n is the power of the length-zero rotation sigma: i -> i + 1.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .weyl import Permutation


@dataclass(frozen=True)
class AffineElement:
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        window = tuple(int(v) for v in self.window)
        if len(window) != n:
            raise ValueError(f"window {window} does not have length {n}")
        if sorted(v % n for v in window) != list(range(n)):
            raise ValueError(f"window {window} does not define a periodic permutation")
        charge = sum(window) - n * (n + 1) // 2
        if charge % n:
            raise ValueError(f"window {window} has charge {charge} not divisible by {n}")
        shift = (charge // n) // n
        if shift:
            window = tuple(v - shift * n for v in window)
        object.__setattr__(self, "window", window)

    # construction

    @classmethod
    def identity(cls, n: int) -> AffineElement:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> AffineElement:
        if not 0 <= i < n:
            raise ValueError(f"affine simple reflection s{i} does not exist for n={n}")
        w = list(range(1, n + 1))
        if i == 0:
            w[0], w[-1] = 0, n + 1
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return cls(n, tuple(w))

    @classmethod
    def sigma(cls, n: int, power: int = 1) -> AffineElement:
        power %= n
        return cls(n, tuple(range(1 + power, n + 1 + power)))

    @classmethod
    def from_word(cls, n: int, word: Iterable[int], sigma_power: int = 0) -> AffineElement:
        v = cls.sigma(n, sigma_power)
        for i in word:
            v = v * cls.simple(n, i)
        return v

    @classmethod
    def from_permutation(cls, w: Permutation) -> AffineElement:
        return cls(w.n, w.window)

    # group structure

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: AffineElement) -> AffineElement:
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return AffineElement(self.n, tuple(self(v) for v in other.window))

    def inverse(self) -> AffineElement:
        n = self.n
        inv = [0] * n
        for i, v in enumerate(self.window, start=1):
            q, r = divmod(v - 1, n)
            inv[r] = i - q * n
        return AffineElement(n, tuple(inv))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"

    @property
    def charge(self) -> int:
        return sum(self.window) - self.n * (self.n + 1) // 2

    @property
    def sigma_power(self) -> int:
        return self.charge // self.n

    def is_affine(self) -> bool:
        """True for elements of the non-extended affine Weyl group."""
        return self.charge == 0

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def length(self) -> int:
        return length(self)

    def right_descents(self) -> set[int]:
        n, w = self.n, self.window
        out = {i for i in range(1, n) if w[i - 1] > w[i]}
        if w[-1] - n > w[0]:
            out.add(0)
        return out

    def left_descents(self) -> set[int]:
        return self.inverse().right_descents()

    def is_right_minimal(self) -> bool:
        """No finite right descent, i.e. minimal in its coset v W."""
        return all(a < b for a, b in zip(self.window, self.window[1:]))

    def translation_lift(self) -> tuple[int, ...]:
        """Integer vector lam with self in t^lam W (entries indexed by residue)."""
        n = self.n
        lam = [0] * n
        for v in self.window:
            q, r = divmod(v - 1, n)
            lam[r] = q
        return tuple(lam)

    def finite_part(self) -> Permutation:
        """The w in self = t^lam w."""
        n = self.n
        return Permutation(tuple((v - 1) % n + 1 for v in self.window))


def length(v: AffineElement) -> int:
    """Periodic inversion count; independent of the sigma-component."""
    n, w = v.n, v.window
    return sum(abs((w[j] - w[i]) // n) for i, j in itertools.combinations(range(n), 2))


# Coweights


@dataclass(frozen=True)
class Coweight:
    """Element of P-check in fundamental-coweight coordinates (length n-1)."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.n - 1:
            raise ValueError(f"coweight for n={self.n} needs {self.n - 1} coordinates, got {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, n: int) -> Coweight:
        return cls(n, (0,) * (n - 1))

    @classmethod
    def fundamental(cls, n: int, i: int) -> Coweight:
        if not 1 <= i < n:
            raise ValueError(f"fundamental coweight index {i} out of range for n={n}")
        return cls(n, tuple(int(j == i) for j in range(1, n)))

    @classmethod
    def rho(cls, n: int) -> Coweight:
        return cls(n, (1,) * (n - 1))

    @classmethod
    def from_lift(cls, n: int, vec: Sequence[int]) -> Coweight:
        if len(vec) != n:
            raise ValueError(f"lift {vec} does not have length {n}")
        return cls(n, tuple(vec[i] - vec[i + 1] for i in range(n - 1)))

    @classmethod
    def from_alpha(cls, n: int, a: Sequence[int]) -> Coweight:
        """From simple-coroot coordinates."""
        if len(a) != n - 1:
            raise ValueError(f"coroot coordinates {a} do not have length {n - 1}")
        full = [0, *a, 0]
        return cls(n, tuple(2 * full[i] - full[i - 1] - full[i + 1] for i in range(1, n)))

    def lift(self) -> tuple[int, ...]:
        """Integer representative in Z^n with last entry 0."""
        out = [0] * self.n
        acc = 0
        for j in range(self.n - 2, -1, -1):
            acc += self.coeffs[j]
            out[j] = acc
        return tuple(out)

    def alpha_coords(self) -> tuple[Fraction, ...]:
        lam = self.lift()
        total = Fraction(sum(lam), self.n)
        partial = list(itertools.accumulate(lam))
        return tuple(partial[i] - (i + 1) * total for i in range(self.n - 1))

    def in_coroot_lattice(self) -> bool:
        return sum(self.lift()) % self.n == 0

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_antidominant(self) -> bool:
        return all(c <= 0 for c in self.coeffs)

    def __add__(self, other: Coweight) -> Coweight:
        return Coweight(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Coweight) -> Coweight:
        return Coweight(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Coweight:
        return Coweight(self.n, tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> Coweight:
        return Coweight(self.n, tuple(k * a for a in self.coeffs))

    def pairing(self, i: int, j: int) -> int:
        """<e_i - e_j, lam> for the root x_i - x_j."""
        lam = self.lift()
        return lam[i - 1] - lam[j - 1]

    def __str__(self) -> str:
        return "w:" + ",".join(map(str, self.coeffs))


def parse_coweight(text: str, n: int) -> Coweight:
    """``"w:0,1"`` in fundamental-coweight coordinates, ``"a:1,0"`` in coroot coordinates."""
    text = text.strip()
    kind, _, body = text.partition(":")
    if not body:
        kind, body = "w", text
    values = [int(v) for v in re.split(r"[\s,]+", body.strip()) if v]
    if kind == "w":
        return Coweight(n, tuple(values))
    if kind == "a":
        return Coweight.from_alpha(n, values)
    raise ValueError(f"unknown coweight prefix {kind!r} in {text!r}")


def parse_affine(text: str, n: int) -> AffineElement:
    """Window ``"[4,2,0]"`` or word ``"sigma^2 s0 s2 s1 s0"``."""
    text = text.strip()
    if text in ("id", "e"):
        return AffineElement.identity(n)
    if text.startswith("[") or re.fullmatch(r"[-\d\s,]+", text):
        return AffineElement(n, tuple(int(v) for v in re.split(r"[\s,\[\]]+", text) if v))
    power, word = 0, []
    for tok in re.split(r"[\s*]+", text):
        if not tok:
            continue
        m = re.fullmatch(r"sigma(?:\^(-?\d+))?", tok)
        if m:
            if word:
                raise ValueError("sigma must lead the word")
            power += int(m.group(1) or 1)
            continue
        m = re.fullmatch(r"s(\d+)", tok)
        if not m:
            raise ValueError(f"bad letter {tok!r} in {text!r}")
        word.append(int(m.group(1)))
    return AffineElement.from_word(n, word, power)


def format_affine_word(sigma_power: int, word: Sequence[int]) -> str:
    parts = []
    if sigma_power:
        parts.append("sigma" if sigma_power == 1 else f"sigma^{sigma_power}")
    parts.extend(f"s{i}" for i in word)
    return " ".join(parts) if parts else "id"


# Translations and coset representatives


def translation(lam: Coweight) -> AffineElement:
    n = lam.n
    vec = lam.lift()
    return AffineElement(n, tuple(i + n * vec[i - 1] for i in range(1, n + 1)))


def coweight_of(v: AffineElement) -> Coweight:
    """The lam with v in t^lam W."""
    return Coweight.from_lift(v.n, v.translation_lift())


def min_coset_rep(lam: Coweight) -> AffineElement:
    """m^lam: the shortest element of t^lam W.

    Right multiplication by W permutes window positions and each finite right
    descent is an out-of-order adjacent pair, so stripping descents greedily
    ends at the sorted window.
    """
    t = translation(lam)
    return AffineElement(t.n, tuple(sorted(t.window)))


def sigma_decompose(v: AffineElement) -> tuple[int, AffineElement]:
    """Return (k, hat) with v = sigma^k * hat and hat of charge 0."""
    k = v.sigma_power
    return k, AffineElement(v.n, tuple(x - k for x in v.window))


def left_hat(v: AffineElement) -> AffineElement:
    """The hat part of v = hat * sigma^k."""
    k = v.sigma_power
    return v * AffineElement.sigma(v.n, -k)


def lambda_hat(lam: Coweight) -> Coweight:
    _, hat = sigma_decompose(min_coset_rep(lam))
    return coweight_of(hat)


def closed_form_lambda_hat(n: int, i: int) -> Coweight:
    """Closed form for lambda_hat(-varpi_i) in coroot coordinates."""
    if not 1 <= i < n:
        raise ValueError(f"index {i} out of range for n={n}")
    k = min(i, n - i)
    a = [0] * (n - 1)
    a[i - 1] += k
    for j in range(1, k):
        a[i - j - 1] += k - j
        a[i + j - 1] += k - j
    return Coweight.from_alpha(n, a)


# Words


def reduced_word_affine(v: AffineElement) -> tuple[int, list[int]]:
    """(sigma power, reduced word of the charge-0 part), smallest left descent first."""
    k, hat = sigma_decompose(v)
    word = []
    n = v.n
    while not hat.is_identity():
        i = min(hat.left_descents())
        word.append(i)
        hat = AffineElement.simple(n, i) * hat
    return k, word


def reduced_words(v: AffineElement, cap: int | None = None) -> Iterator[list[int]]:
    """All reduced words of the charge-0 part of v, by backtracking over left descents."""
    _, hat = sigma_decompose(v)
    n = v.n
    count = 0

    def rec(u: AffineElement, prefix: list[int]):
        nonlocal count
        if cap is not None and count >= cap:
            return
        if u.is_identity():
            count += 1
            yield list(prefix)
            return
        for i in sorted(u.left_descents()):
            prefix.append(i)
            yield from rec(AffineElement.simple(n, i) * u, prefix)
            prefix.pop()
            if cap is not None and count >= cap:
                return

    yield from rec(hat, [])


def group_blocks(n: int, word: Sequence[int]) -> list[Permutation]:
    """Split a reduced word w_1 s0 w_2 s0 ... w_r s0 into the finite pieces w_j."""
    word = list(word)
    if not word:
        return []
    if word[-1] != 0:
        raise ValueError(f"word {word} does not end in s0")
    v = AffineElement.from_word(n, word)
    if length(v) != len(word):
        raise ValueError(f"word {word} is not reduced")
    blocks, current = [], []
    for i in word:
        if i == 0:
            blocks.append(Permutation.from_word(n, current))
            current = []
        else:
            current.append(i)
    return blocks


# Weak order


def weak_order_leq(x: AffineElement, y: AffineElement, side: str = "right") -> bool:
    """Right: y = x * z with lengths adding.  Left: y = z * x with lengths adding."""
    if side == "right":
        rest = x.inverse() * y
    elif side == "left":
        rest = y * x.inverse()
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return length(x) + length(rest) == length(y)


# Enumeration


def affine_grassmannian(n: int, max_length: int) -> list[AffineElement]:
    """Right-minimal charge-0 elements of length <= max_length, by length then window."""
    level = [AffineElement.identity(n)]
    out = list(level)
    for ell in range(1, max_length + 1):
        nxt = set()
        for u in level:
            for i in range(n):
                v = AffineElement.simple(n, i) * u
                if v.is_right_minimal() and length(v) == ell:
                    nxt.add(v)
        level = sorted(nxt, key=lambda e: e.window)
        out.extend(level)
    return out


def coweights_up_to_length(n: int, max_length: int, coroot_only: bool = False) -> list[Coweight]:
    """All lam in P-check (or Q-check) with l(m^lam) <= max_length."""
    out = []
    powers = [0] if coroot_only else range(n)
    for u in affine_grassmannian(n, max_length):
        for k in powers:
            out.append(coweight_of(AffineElement.sigma(n, k) * u))
    return out


def dominant_coweights(n: int, bound: int) -> Iterator[Coweight]:
    for c in itertools.product(range(bound + 1), repeat=n - 1):
        yield Coweight(n, c)
