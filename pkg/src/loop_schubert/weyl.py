"""The symmetric group S_n as the finite Weyl group of type A.

Permutations are stored in one-line (window) notation: ``window[i-1] == w(i)``.
Products are composition of maps, ``(a * b)(i) == a(b(i))``, so the word
``s1 s2`` denotes ``s1 * s2``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Permutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f"{window} is not a permutation of 1..{len(window)}")
        object.__setattr__(self, "window", window)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> Permutation:
        """The simple transposition s_i = (i, i+1)."""
        if not 1 <= i < n:
            raise ValueError(f"simple reflection s{i} does not exist in S{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def from_word(cls, n: int, word: Iterable[int]) -> Permutation:
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(n, i)
        return w

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return " ".join(map(str, self.window))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.window, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        w = self.window
        return sum(1 for i, j in itertools.combinations(range(self.n), 2) if w[i] > w[j])

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def reduced_word(self) -> list[int]:
        return reduced_word(self)

    def descents(self, side: str = "right") -> set[int]:
        return descent_set(self, side)


def compose(a: Permutation, b: Permutation) -> Permutation:
    if a.n != b.n:
        raise ValueError(f"cannot compose permutations of sizes {a.n} and {b.n}")
    return Permutation(tuple(a.window[v - 1] for v in b.window))


def descent_set(w: Permutation, side: str = "right") -> set[int]:
    """Simple indices i with l(w s_i) < l(w) (right) or l(s_i w) < l(w) (left)."""
    if side == "left":
        w = w.inverse()
    elif side != "right":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return {i for i in range(1, w.n) if w(i) > w(i + 1)}


def reduced_word(w: Permutation) -> list[int]:
    """Reduced word built by repeatedly stripping the smallest left descent."""
    word = []
    while not w.is_identity():
        i = min(descent_set(w, "left"))
        word.append(i)
        w = Permutation.simple(w.n, i) * w
    return word


def inversion_set(w: Permutation) -> set[tuple[int, int]]:
    """Positive roots e_i - e_j (as pairs i < j) sent to negative roots by w."""
    return {(i, j) for i, j in itertools.combinations(range(1, w.n + 1), 2) if w(i) > w(j)}


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def longest_parabolic(n: int, i: int) -> Permutation:
    """Longest element of the parabolic subgroup S_i x S_{n-i} fixing the i-th fundamental coweight."""
    if not 1 <= i < n:
        raise ValueError(f"parabolic index {i} out of range for S{n}")
    return Permutation(tuple(range(i, 0, -1)) + tuple(range(n, i, -1)))


def u_cycle(n: int, i: int) -> Permutation:
    """u_i = s_i s_{i-1} ... s_1, the (i+1)-cycle with u_i(1) = i+1."""
    if not 0 <= i < n:
        raise ValueError(f"u-cycle index {i} out of range for S{n}")
    return Permutation.from_word(n, range(i, 0, -1))


def star_dual(w: Permutation) -> Permutation:
    w0 = longest(w.n)
    return w0 * w * w0


def distinguished(n: int, kind: str, arg=None) -> Permutation:
    if kind == "longest":
        return longest(n)
    if kind == "longest_parabolic":
        return longest_parabolic(n, arg)
    if kind == "u_cycle":
        return u_cycle(n, arg)
    if kind == "star_dual":
        return star_dual(arg)
    raise ValueError(f"unknown distinguished element {kind!r}")


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


_WORD_TOKEN = re.compile(r"^s(\d+)$")


def parse_word(text: str) -> list[int]:
    """Parse ``"s2 s1"`` (also ``"s2*s1"``, ``"2 1"`` is rejected) into ``[2, 1]``."""
    word = []
    for tok in re.split(r"[\s*,]+", text.strip()):
        if not tok:
            continue
        m = _WORD_TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad letter {tok!r} in word {text!r}")
        word.append(int(m.group(1)))
    return word


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Accept window notation ``"3 1 2"`` / ``"[3,1,2]"`` or word notation ``"s2 s1"``."""
    stripped = text.strip()
    if stripped in ("", "id", "e", "1") and n is not None:
        return Permutation.identity(n)
    if "s" in stripped:
        if n is None:
            raise ValueError("word notation needs the rank n")
        return Permutation.from_word(n, parse_word(stripped))
    values = [int(v) for v in re.split(r"[\s,\[\]]+", stripped) if v]
    w = Permutation(tuple(values))
    if n is not None and w.n != n:
        raise ValueError(f"window {values} has size {w.n}, expected {n}")
    return w


def word_product(n: int, word: Sequence[int]) -> Permutation:
    return Permutation.from_word(n, word)
