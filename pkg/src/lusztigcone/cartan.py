"""Cartan matrices and exact reflection arithmetic.

Convention: ``a[i][j] = <alpha_j, alpha_i^vee>`` (0-based storage, 1-based
letters in the public API).  Coordinates:

* weights in the fundamental-weight basis,
* roots in the simple-root basis,
* coroots in the simple-coroot basis.

With this convention ``<varpi_l, alpha_r^vee> = delta_{lr}`` and the simple
root ``alpha_i`` has weight coordinates ``(a[0][i], ..., a[n-1][i])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Vec = tuple[int, ...]


class CartanError(ValueError):
    """Invalid Cartan data, letter or vector."""


class NonFiniteTypeError(CartanError):
    pass


@dataclass(frozen=True)
class CartanSpec:
    entries: tuple[tuple[int, ...], ...]
    label: str | None = None

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise CartanError("Cartan matrix must have positive rank")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise CartanError(f"row {i + 1} has length {len(row)}, expected {n}")
            if row[i] != 2:
                raise CartanError(f"diagonal entry a[{i + 1}][{i + 1}] = {row[i]} is not 2")
            for j, x in enumerate(row):
                if i == j:
                    continue
                if x > 0:
                    raise CartanError(f"off-diagonal entry a[{i + 1}][{j + 1}] = {x} is positive")
                if (x == 0) != (self.entries[j][i] == 0):
                    raise CartanError(
                        f"a[{i + 1}][{j + 1}] and a[{j + 1}][{i + 1}] must vanish together"
                    )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], label: str | None = None) -> CartanSpec:
        return cls(tuple(tuple(int(x) for x in row) for row in rows), label)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def a(self, i: int, j: int) -> int:
        """Entry ``a_{ij}`` for 1-based letters."""
        return self.entries[i - 1][j - 1]

    @property
    def is_symmetric(self) -> bool:
        n = self.rank
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(n))

    def transpose(self) -> CartanSpec:
        n = self.rank
        label = f"{self.label}^T" if self.label else None
        return CartanSpec(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)), label)

    def describe(self) -> str:
        if self.label:
            return self.label
        return ";".join(",".join(str(x) for x in row) for row in self.entries)

    # -- basis vectors ------------------------------------------------------

    def unit(self, i: int) -> Vec:
        self.check_letter(i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def zero(self) -> Vec:
        return (0,) * self.rank

    def simple_root_as_weight(self, i: int) -> Vec:
        self.check_letter(i)
        return tuple(self.entries[j][i - 1] for j in range(self.rank))

    def root_to_weight(self, r: Sequence[int]) -> Vec:
        self._check_vec(r)
        n = self.rank
        return tuple(sum(self.entries[j][i] * r[i] for i in range(n)) for j in range(n))

    def rho(self) -> Vec:
        return (1,) * self.rank

    def check_letter(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise CartanError(f"letter {i!r} out of range 1..{self.rank}")

    def _check_vec(self, v: Sequence[int]) -> None:
        if len(v) != self.rank:
            raise CartanError(f"vector of length {len(v)} does not match rank {self.rank}")


_FINITE_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


def cartan_from_type(family: str, rank: int) -> CartanSpec:
    """Cartan matrix of the finite type ``family``/``rank`` (Bourbaki numbering)."""
    fam = family.upper()
    ok = (
        (fam in _FINITE_MIN_RANK and rank >= _FINITE_MIN_RANK[fam])
        or (fam == "E" and rank in (6, 7, 8))
        or (fam == "F" and rank == 4)
        or (fam == "G" and rank == 2)
    )
    if not ok:
        raise CartanError(f"no finite Cartan type ({family}, {rank})")
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if fam == "E":
        # 1-3-4-5-6(-7-8), 2 attached to 4
        link(0, 2)
        link(2, 3)
        link(1, 3)
        for i in range(3, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -1, -2)  # alpha_2 long, alpha_3 short
        link(2, 3)
    elif fam == "G":
        link(0, 1, -3, -1)  # alpha_1 short
    else:
        for i in range(n - 2):
            link(i, i + 1)
        if fam == "A" and n >= 2:
            link(n - 2, n - 1)
        elif fam == "B":
            link(n - 2, n - 1, -1, -2)  # alpha_n short
        elif fam == "C":
            link(n - 2, n - 1, -2, -1)  # alpha_n long
        elif fam == "D":
            link(n - 3, n - 2)
            link(n - 3, n - 1)
    return CartanSpec.from_rows(a, f"{fam}{rank}")


def parse_type_label(label: str) -> CartanSpec:
    """``"A3"`` -> Cartan matrix of type A3."""
    s = label.strip()
    if len(s) < 2 or not s[0].isalpha() or not s[1:].isdigit():
        raise CartanError(f"cannot parse Cartan type label {label!r}")
    return cartan_from_type(s[0], int(s[1:]))


def parse_cartan_matrix(text: str) -> CartanSpec:
    """``"2,-1;-1,2"`` -> explicit Cartan matrix (semicolon-separated rows)."""
    try:
        rows = [[int(x) for x in row.split(",")] for row in text.strip().split(";")]
    except ValueError as exc:
        raise CartanError(f"cannot parse Cartan matrix {text!r}: {exc}") from None
    return CartanSpec.from_rows(rows)


# -- pairing and reflections -------------------------------------------------

def pairing(weight: Sequence[int], coroot: Sequence[int]) -> int:
    """``<lambda, c>`` for a weight in the varpi-basis and a coroot in the alpha^vee basis."""
    if len(weight) != len(coroot):
        raise CartanError(f"rank mismatch: {len(weight)} vs {len(coroot)}")
    return sum(x * y for x, y in zip(weight, coroot))


def root_coroot_pairing(cartan: CartanSpec, root: Sequence[int], coroot: Sequence[int]) -> int:
    """``<beta, c>`` for a root in the alpha-basis."""
    return pairing(cartan.root_to_weight(root), coroot)


def reflect_weight(cartan: CartanSpec, i: int, weight: Sequence[int]) -> Vec:
    cartan.check_letter(i)
    cartan._check_vec(weight)
    c = weight[i - 1]
    if c == 0:
        return tuple(weight)
    col = i - 1
    return tuple(w - c * cartan.entries[j][col] for j, w in enumerate(weight))


def reflect_root(cartan: CartanSpec, i: int, root: Sequence[int]) -> Vec:
    cartan.check_letter(i)
    cartan._check_vec(root)
    row = cartan.entries[i - 1]
    c = sum(row[j] * root[j] for j in range(cartan.rank))
    out = list(root)
    out[i - 1] -= c
    return tuple(out)


def reflect_coroot(cartan: CartanSpec, i: int, coroot: Sequence[int]) -> Vec:
    cartan.check_letter(i)
    cartan._check_vec(coroot)
    col = i - 1
    c = sum(coroot[l] * cartan.entries[l][col] for l in range(cartan.rank))
    out = list(coroot)
    out[col] -= c
    return tuple(out)


_REFLECTORS = {"weight": reflect_weight, "root": reflect_root, "coroot": reflect_coroot}


def apply_word(
    cartan: CartanSpec,
    word: Sequence[int],
    x: Sequence[int],
    kind: str = "weight",
    order: str = "rightmost-first",
) -> Vec:
    """Apply ``s_{w_1} ... s_{w_m}`` to ``x``.

    ``order="rightmost-first"`` is the usual composition (the last letter acts
    first); ``"leftmost-first"`` applies the letters in reading order.
    """
    try:
        reflect = _REFLECTORS[kind]
    except KeyError:
        raise CartanError(f"unknown vector kind {kind!r}") from None
    if order == "rightmost-first":
        letters = reversed(word)
    elif order == "leftmost-first":
        letters = iter(word)
    else:
        raise CartanError(f"unknown order {order!r}")
    v = tuple(x)
    cartan._check_vec(v)
    for i in letters:
        v = reflect(cartan, i, v)
    return v


def default_cap(cartan: CartanSpec) -> int:
    return 10 * cartan.rank**2


def positive_roots(cartan: CartanSpec, cap: int | None = None) -> list[Vec]:
    """Positive roots (simple-root coordinates), sorted lexicographically.

    Built by closing the simple roots under height-raising reflections; each
    round is one BFS layer.  More than ``cap`` rounds means the root system
    is (very likely) infinite.
    """
    if cap is None:
        cap = default_cap(cartan)
    n = cartan.rank
    found = {cartan.unit(i) for i in range(1, n + 1)}
    frontier = set(found)
    rounds = 0
    while frontier:
        rounds += 1
        if rounds > cap:
            raise NonFiniteTypeError(
                f"root closure exceeded {cap} rounds: possibly non-finite type"
            )
        new = set()
        for r in frontier:
            for i in range(1, n + 1):
                s = reflect_root(cartan, i, r)
                if s not in found and all(x >= 0 for x in s):
                    new.add(s)
        found |= new
        frontier = new
    return sorted(found)
