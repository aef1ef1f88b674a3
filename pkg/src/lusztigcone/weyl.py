"""Reduced words for the longest element ``w0``.

Weyl group elements are handled through their action on ``rho``: ``w`` is
stored as the weight ``w(rho)``, and ``i`` is a left descent of ``w``
exactly when the ``i``-th coordinate of ``w(rho)`` is negative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .cartan import (
    CartanError,
    CartanSpec,
    Vec,
    apply_word,
    positive_roots,
    reflect_weight,
)


class NotReducedError(ValueError):
    pass


@dataclass(frozen=True)
class ReducedWord:
    """A reduced expression ``(i_1, ..., i_N)`` for ``w0``; letters are 1-based."""

    cartan: CartanSpec
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_reduced_w0(self.cartan, self.letters):
            raise NotReducedError(
                f"{format_word(self.letters)} is not a reduced expression for w0"
            )

    @classmethod
    def of(cls, cartan: CartanSpec, letters: Sequence[int]) -> ReducedWord:
        return cls(cartan, tuple(int(i) for i in letters))

    @classmethod
    def _trusted(cls, cartan: CartanSpec, letters: tuple[int, ...]) -> ReducedWord:
        # skips validation; only for words that are reduced by construction
        word = object.__new__(cls)
        object.__setattr__(word, "cartan", cartan)
        object.__setattr__(word, "letters", letters)
        return word

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, k: int) -> int:
        """Letter at 1-based position ``k``."""
        if not 1 <= k <= len(self.letters):
            raise IndexError(f"position {k} out of range 1..{len(self.letters)}")
        return self.letters[k - 1]

    def __str__(self) -> str:
        return format_word(self.letters)


def format_word(letters: Sequence[int]) -> str:
    return ",".join(str(i) for i in letters)


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}") from None


def _betas(cartan: CartanSpec, letters: Sequence[int]) -> list[Vec]:
    # beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}
    out = []
    for k, i in enumerate(letters):
        out.append(apply_word(cartan, letters[:k], cartan.unit(i), kind="root"))
    return out


def is_reduced_w0(cartan: CartanSpec, letters: Sequence[int]) -> bool:
    for i in letters:
        cartan.check_letter(i)
    if len(letters) != len(positive_roots(cartan)):
        return False
    betas = _betas(cartan, letters)
    if any(min(b) < 0 for b in betas):
        return False
    return len(set(betas)) == len(betas)


def beta_roots(word: ReducedWord) -> list[Vec]:
    """The convex ordering ``beta_1 < ... < beta_N`` of the positive roots."""
    return _betas(word.cartan, word.letters)


def k1_successor(word: ReducedWord, k: int) -> int:
    """``k(1)``: next position after ``k`` carrying the same letter, else ``N + 1``."""
    n = len(word)
    if not 1 <= k <= n:
        raise IndexError(f"position {k} out of range 1..{n}")
    letter = word.letters[k - 1]
    for j in range(k + 1, n + 1):
        if word.letters[j - 1] == letter:
            return j
    return n + 1


def successors(word: ReducedWord) -> list[int]:
    """``[k(1) for k in 1..N]``, computed in one right-to-left scan."""
    n = len(word)
    nxt: dict[int, int] = {}
    out = [0] * n
    for k in range(n, 0, -1):
        letter = word.letters[k - 1]
        out[k - 1] = nxt.get(letter, n + 1)
        nxt[letter] = k
    return out


def longest_word(cartan: CartanSpec) -> tuple[int, ...]:
    """Lexicographically smallest reduced word for ``w0``."""
    mu = tuple(-x for x in cartan.rho())
    letters = []
    while any(x < 0 for x in mu):
        i = next(k for k, x in enumerate(mu, 1) if x < 0)
        letters.append(i)
        mu = reflect_weight(cartan, i, mu)
    return tuple(letters)


def weight_star(cartan: CartanSpec, weight: Sequence[int]) -> Vec:
    """``lambda* = -w0(lambda)``."""
    w = apply_word(cartan, longest_word(cartan), weight, kind="weight")
    return tuple(-x for x in w)


def _w0_rho(cartan: CartanSpec) -> Vec:
    return tuple(-x for x in weight_star(cartan, cartan.rho()))


def _count_table(cartan: CartanSpec):
    @lru_cache(maxsize=None)
    def count(mu: Vec) -> int:
        descents = [i for i, x in enumerate(mu, 1) if x < 0]
        if not descents:
            return 1
        return sum(count(reflect_weight(cartan, i, mu)) for i in descents)

    return count


def count_reduced_words(cartan: CartanSpec) -> int:
    return _count_table(cartan)(_w0_rho(cartan))


def enumerate_reduced_words(cartan: CartanSpec, limit: int | None = None) -> Iterator[ReducedWord]:
    """Every reduced word for ``w0`` in lexicographic order (at most ``limit``)."""
    if limit is not None and limit <= 0:
        return
    emitted = 0

    def rec(mu: Vec, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        descents = [i for i, x in enumerate(mu, 1) if x < 0]
        if not descents:
            yield tuple(prefix)
            return
        for i in descents:
            prefix.append(i)
            yield from rec(reflect_weight(cartan, i, mu), prefix)
            prefix.pop()

    for letters in rec(_w0_rho(cartan), []):
        yield ReducedWord._trusted(cartan, letters)
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def random_reduced_word(cartan: CartanSpec, rng: random.Random) -> ReducedWord:
    """Uniformly random reduced word for ``w0``."""
    count = _count_table(cartan)
    mu = _w0_rho(cartan)
    letters = []
    while True:
        descents = [i for i, x in enumerate(mu, 1) if x < 0]
        if not descents:
            break
        weights = [count(reflect_weight(cartan, i, mu)) for i in descents]
        i = rng.choices(descents, weights=weights)[0]
        letters.append(i)
        mu = reflect_weight(cartan, i, mu)
    return ReducedWord._trusted(cartan, tuple(letters))


def sample_reduced_words(cartan: CartanSpec, count: int, seed: int) -> list[ReducedWord]:
    """``count`` distinct uniformly sampled words, sorted lexicographically."""
    total = count_reduced_words(cartan)
    if count >= total:
        return list(enumerate_reduced_words(cartan))
    rng = random.Random(seed)
    seen: dict[tuple[int, ...], ReducedWord] = {}
    while len(seen) < count:
        w = random_reduced_word(cartan, rng)
        seen.setdefault(w.letters, w)
    return [seen[k] for k in sorted(seen)]


# -- braid moves (used to check closure of the enumeration) ----------------

def coxeter_m(cartan: CartanSpec, i: int, j: int) -> int:
    prod = cartan.a(i, j) * cartan.a(j, i)
    try:
        return {0: 2, 1: 3, 2: 4, 3: 6}[prod]
    except KeyError:
        raise CartanError(f"letters {i},{j} generate an infinite dihedral group") from None


def braid_neighbours(cartan: CartanSpec, letters: Sequence[int]) -> set[tuple[int, ...]]:
    """All words obtained by one braid move."""
    out = set()
    n = cartan.rank
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            m = coxeter_m(cartan, i, j)
            lhs = tuple(i if t % 2 == 0 else j for t in range(m))
            rhs = tuple(j if t % 2 == 0 else i for t in range(m))
            for p in range(len(letters) - m + 1):
                if tuple(letters[p:p + m]) == lhs:
                    out.add(tuple(letters[:p]) + rhs + tuple(letters[p + m:]))
    return out

