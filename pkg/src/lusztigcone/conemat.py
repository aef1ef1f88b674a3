"""The matrix calculus attached to a reduced word for ``w0``.

All matrices are ``N x N`` with 1-based row/column positions matching word
positions.  Notation: ``k(1)`` is the next occurrence of the letter ``i_k``
to the right of ``k`` (``N + 1`` if none), ``beta_k`` the convex ordering of
positive roots, ``varpi_i`` fundamental weights, ``alpha_i^vee`` simple
coroots.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from typing import Sequence

from .cartan import CartanSpec, Vec, apply_word, reflect_weight
from .intmatrix import IntMatrix
from .weyl import ReducedWord, beta_roots, successors


class ConeError(ValueError):
    pass


def _build(n: int, f) -> IntMatrix:
    return IntMatrix(tuple(tuple(f(j, k) for k in range(1, n + 1)) for j in range(1, n + 1)))


def _coroot_coord(cartan: CartanSpec, root: Sequence[int], i: int) -> int:
    """``<root, alpha_i^vee>`` for a root in simple-root coordinates."""
    row = cartan.entries[i - 1]
    return sum(row[m] * root[m] for m in range(cartan.rank))


# -- V, W, S, T ---------------------------------------------------------------

def matrix_V(word: ReducedWord) -> IntMatrix:
    """``V_{jk} = 1`` iff ``j <= k`` and ``i_j = i_k``."""
    w = word.letters
    return _build(len(w), lambda j, k: int(j <= k and w[j - 1] == w[k - 1]))


def matrix_W(word: ReducedWord) -> IntMatrix:
    """Unit diagonal, ``-1`` at ``(j, j(1))``."""
    nxt = successors(word)
    return _build(len(word), lambda j, k: 1 if j == k else (-1 if k == nxt[j - 1] else 0))


def matrix_S(word: ReducedWord) -> IntMatrix:
    """Matrix of the tropicalised monomial lift: ``-1`` diagonal, ``-a_{i_j,i_k}`` above."""
    w, a = word.letters, word.cartan.a

    def f(j: int, k: int) -> int:
        if j == k:
            return -1
        return -a(w[j - 1], w[k - 1]) if j < k else 0

    return _build(len(w), f)


def matrix_T(word: ReducedWord) -> IntMatrix:
    """``T_{jk} = <s_{i_{j+1}} ... s_{i_{k-1}} alpha_{i_k}, alpha_{i_j}^vee>`` for ``j < k``."""
    cartan, w = word.cartan, word.letters

    def f(j: int, k: int) -> int:
        if j == k:
            return -1
        if j > k:
            return 0
        root = apply_word(cartan, w[j:k - 1], cartan.unit(w[k - 1]), kind="root")
        return _coroot_coord(cartan, root, w[j - 1])

    return _build(len(w), f)


# -- C, weights, strings ------------------------------------------------------

def matrix_C(word: ReducedWord) -> IntMatrix:
    """``C_{jk} = <s_{i_{j+1}} ... s_{i_k} varpi_{i_k}, alpha_{i_j}^vee>`` for ``j <= k``."""
    cartan, w = word.cartan, word.letters

    def f(j: int, k: int) -> int:
        if j > k:
            return 0
        lam = apply_word(cartan, w[j:k], cartan.unit(w[k - 1]), kind="weight")
        return lam[w[j - 1] - 1]

    return _build(len(w), f)


def _check_position(word: ReducedWord, k: int) -> None:
    if not 1 <= k <= len(word):
        raise IndexError(f"position {k} out of range 1..{len(word)}")


def epsilon_values(word: ReducedWord, k: int) -> Vec:
    """``eps_l = max(0, -<s_{i_1} ... s_{i_k} varpi_{i_k}, alpha_l^vee>)``."""
    _check_position(word, k)
    cartan, w = word.cartan, word.letters
    lam = apply_word(cartan, w[:k], cartan.unit(w[k - 1]), kind="weight")
    return tuple(max(0, -x) for x in lam)


def mu_weight(word: ReducedWord, k: int) -> Vec:
    """``mu_k = sum_l eps_l varpi_l`` (fundamental-weight coordinates)."""
    return epsilon_values(word, k)


def is_dominant(weight: Sequence[int]) -> bool:
    return all(x >= 0 for x in weight)


def lowest_string(word: ReducedWord, weight: Sequence[int]) -> tuple[int, ...]:
    """String of the lowest weight vector: ``v_k = <s_{i_{k-1}} ... s_{i_1} lambda, alpha_{i_k}^vee>``."""
    if len(weight) != word.cartan.rank:
        raise ConeError(f"weight of length {len(weight)} does not match rank {word.cartan.rank}")
    if not is_dominant(weight):
        raise ConeError(f"weight {tuple(weight)} is not dominant")
    return _string_unchecked(word, weight)


def _string_unchecked(word: ReducedWord, weight: Sequence[int]) -> tuple[int, ...]:
    cur = tuple(weight)
    out = []
    for i in word.letters:
        out.append(cur[i - 1])
        cur = reflect_weight(word.cartan, i, cur)
    return tuple(out)


def matrix_P(word: ReducedWord) -> IntMatrix:
    """Column ``k`` is ``lowest_string(mu_k)``."""
    cols = [lowest_string(word, mu_weight(word, k)) for k in range(1, len(word) + 1)]
    return IntMatrix.from_columns(cols)


def matrix_X(word: ReducedWord) -> IntMatrix:
    """Spanning vectors of the Lusztig cone (as columns).

    Column ``k`` is ``lowest_string(varpi_{i_k})`` when ``k(1) = N + 1`` and
    ``-C_k + P_k`` otherwise.
    """
    n = len(word)
    nxt = successors(word)
    C, P = matrix_C(word), matrix_P(word)
    cols = []
    for k in range(1, n + 1):
        if nxt[k - 1] == n + 1:
            cols.append(lowest_string(word, word.cartan.unit(word[k])))
        else:
            cols.append(tuple(p - c for p, c in zip(P.column(k), C.column(k))))
    return IntMatrix.from_columns(cols)


# -- L~ and L -----------------------------------------------------------------

def matrix_Ltilde(word: ReducedWord) -> IntMatrix:
    """``-1`` at ``k = j`` and ``k = j(1)``; ``-a_{i_j,i_k}`` strictly between."""
    w, a = word.letters, word.cartan.a
    nxt = successors(word)

    def f(j: int, k: int) -> int:
        if k == j or k == nxt[j - 1]:
            return -1
        if j < k < nxt[j - 1]:
            return -a(w[j - 1], w[k - 1])
        return 0

    return _build(len(w), f)


def matrix_L(word: ReducedWord) -> IntMatrix:
    """Rows with ``j(1) <= N`` copy ``L~``; a row with ``j(1) = N + 1`` is
    ``e_l`` for the position ``l`` with ``beta_l = alpha_{i_j}``."""
    n = len(word)
    nxt = successors(word)
    lt = matrix_Ltilde(word)
    betas = beta_roots(word)
    rows = []
    for j in range(1, n + 1):
        if nxt[j - 1] <= n:
            rows.append(lt.row(j))
            continue
        simple = word.cartan.unit(word[j])
        try:
            l = betas.index(simple) + 1
        except ValueError:
            raise ConeError(
                f"row {j}: no position l with beta_l = alpha_{word[j]} in word {word}"
            ) from None
        rows.append(tuple(int(k == l) for k in range(1, n + 1)))
    return IntMatrix.from_rows(rows)


def all_matrices(word: ReducedWord) -> dict[str, IntMatrix]:
    return {
        "V": matrix_V(word),
        "W": matrix_W(word),
        "S": matrix_S(word),
        "T": matrix_T(word),
        "C": matrix_C(word),
        "P": matrix_P(word),
        "X": matrix_X(word),
        "Ltilde": matrix_Ltilde(word),
        "L": matrix_L(word),
    }


MATRIX_NAMES = ("V", "W", "S", "T", "C", "P", "X", "Ltilde", "L")

_BUILDERS = {
    "V": matrix_V, "W": matrix_W, "S": matrix_S, "T": matrix_T, "C": matrix_C,
    "P": matrix_P, "X": matrix_X, "Ltilde": matrix_Ltilde, "L": matrix_L,
}


def build_matrix(word: ReducedWord, name: str) -> IntMatrix:
    try:
        return _BUILDERS[name](word)
    except KeyError:
        raise ConeError(f"unknown matrix {name!r}; choose from {', '.join(MATRIX_NAMES)}") from None


# -- cone membership ----------------------------------------------------------

def lusztig_inequalities(word: ReducedWord) -> list[tuple[int, int, tuple[int, ...]]]:
    """Defining inequalities ``g . c <= 0`` of the Lusztig cone.

    One entry ``(p, p', g)`` per pair of consecutive occurrences ``p < p'`` of
    a letter ``i``, with ``g = e_p + e_p' + sum_{p<q<p'} a_{i,i_q} e_q``.
    """
    w, a = word.letters, word.cartan.a
    n = len(w)
    last: dict[int, int] = {}
    out = []
    for q, i in enumerate(w, 1):
        p = last.get(i)
        if p is not None:
            g = [0] * n
            g[p - 1] = 1
            g[q - 1] = 1
            for r in range(p + 1, q):
                g[r - 1] = a(i, w[r - 1])
            out.append((p, q, tuple(g)))
        last[i] = q
    return out


def _check_length(word: ReducedWord, c: Sequence[int]) -> None:
    if len(c) != len(word):
        raise ConeError(f"point of length {len(c)} does not match word length {len(word)}")


def in_lusztig_cone_def(word: ReducedWord, c: Sequence[int]) -> bool:
    """Membership straight from the definition (nonnegativity + pair inequalities)."""
    _check_length(word, c)
    if any(x < 0 for x in c):
        return False
    return all(sum(gi * ci for gi, ci in zip(g, c)) <= 0 for _, _, g in lusztig_inequalities(word))


def lusztig_coefficients(word: ReducedWord, c: Sequence[int], L: IntMatrix | None = None) -> tuple[int, ...]:
    """``L c``: the coordinates of ``c`` in the basis of columns of ``X``."""
    _check_length(word, c)
    return (L or matrix_L(word)).apply(c)


def in_lusztig_cone_L(word: ReducedWord, c: Sequence[int], L: IntMatrix | None = None) -> bool:
    return all(x >= 0 for x in lusztig_coefficients(word, c, L))
