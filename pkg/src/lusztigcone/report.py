"""Per-word verification harness.

``verify_word`` recomputes every matrix for one reduced word and records the
outcome of each identity as a named check.  Checks never raise; a failing
check carries a witness (positions, vectors) in its payload.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from . import conemat, tropical
from .cartan import CartanSpec
from .intmatrix import IntMatrix
from .weyl import ReducedWord, beta_roots, successors, weight_star

CHECK_NAMES = (
    "triangularity",
    "WV_identity",
    "ST_identity",
    "ST_convention",
    "VinvS_Ltilde",
    "SinvV_negC",
    "C_nonnegative",
    "P_nonnegative",
    "X_nonnegative",
    "LX_identity",
    "last_occurrence_columns",
    "simple_coroot_entries",
    "string_equalities",
    "trop_zeta_S",
    "trop_zeta_inverse_T",
    "zeta_composition",
    "affine_translation",
    "cone_agreement",
)


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"pass": self.passed, **self.detail}


@dataclass
class ConeReport:
    word: ReducedWord
    matrices: dict[str, IntMatrix]
    checks: dict[str, CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]

    def to_json(self, include_matrices: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "cartan": self.word.cartan.describe(),
            "word": list(self.word.letters),
        }
        if include_matrices:
            out["matrices"] = {k: m.to_lists() for k, m in self.matrices.items()}
        out["checks"] = {k: c.to_json() for k, c in self.checks.items()}
        out["pass"] = self.passed
        return out


# -- helpers --------------------------------------------------------------------

def _equal(got: IntMatrix, expected: IntMatrix) -> CheckResult:
    pos = got.first_difference(expected)
    if pos is None:
        return CheckResult(True)
    j, k = pos
    return CheckResult(False, {"witness": {"j": j, "k": k, "got": got.entry(j, k),
                                           "expected": expected.entry(j, k)}})


def _nonnegative(m: IntMatrix) -> CheckResult:
    for j, row in enumerate(m.rows, 1):
        for k, x in enumerate(row, 1):
            if x < 0:
                return CheckResult(False, {"witness": {"j": j, "k": k, "value": x}})
    return CheckResult(True)


def default_box(n: int) -> tuple[int, int] | None:
    """Default exhaustive box ``[-r, r + 2]``; None means sample instead."""
    if n <= 6:
        return (-3, 5)
    if n <= 10:
        return (-2, 4)
    return None


def box_radius_bounds(radius: int) -> tuple[int, int]:
    return (-radius, radius + 2)


def _box_points(n: int, lo: int, hi: int) -> np.ndarray:
    axes = [np.arange(lo, hi + 1, dtype=np.int64)] * n
    return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)


def _sample_points(word: ReducedWord, X: IntMatrix, lo: int, hi: int, count: int, seed: int) -> np.ndarray:
    # uniform box points rarely land in the cone, so half the sample is built
    # from cone members and their unit perturbations
    n = len(word)
    gen = np.random.default_rng(seed)
    uniform = gen.integers(lo, hi + 1, size=(count // 2, n), dtype=np.int64)
    Xa = np.array(X.rows, dtype=np.int64)
    m = count - count // 2
    coeffs = gen.integers(0, 4, size=(m, n), dtype=np.int64)
    inside = coeffs @ Xa.T
    bump = np.zeros_like(inside)
    half = m // 2
    bump[np.arange(half), gen.integers(0, n, size=half)] = -1
    return np.concatenate([uniform, inside + bump])


MAX_EXHAUSTIVE_POINTS = 2_000_000


def cone_agreement(
    word: ReducedWord,
    lo: int | None = None,
    hi: int | None = None,
    *,
    samples: int = 100_000,
    seed: int = 0,
    L: IntMatrix | None = None,
    X: IntMatrix | None = None,
) -> CheckResult:
    """Compare definition-based and ``L``-based membership on a box of points.

    Exhaustive over ``[lo, hi]^N`` when that has at most
    ``MAX_EXHAUSTIVE_POINTS`` points, seeded sampling otherwise.  Also checks
    ``X (L c) = c`` for every member and that ``L c >= 0`` forces ``c >= 0``.
    """
    n = len(word)
    if lo is None or hi is None:
        box = default_box(n)
        lo, hi = box if box is not None else (-2, 4)
    L = L or conemat.matrix_L(word)
    X = X or conemat.matrix_X(word)
    exhaustive = (hi - lo + 1) ** n <= MAX_EXHAUSTIVE_POINTS
    pts = _box_points(n, lo, hi) if exhaustive else _sample_points(word, X, lo, hi, samples, seed)

    ineqs = conemat.lusztig_inequalities(word)
    by_def = (pts >= 0).all(axis=1)
    if ineqs:
        G = np.array([g for _, _, g in ineqs], dtype=np.int64)
        by_def &= (pts @ G.T <= 0).all(axis=1)
    La = np.array(L.rows, dtype=np.int64)
    coeffs = pts @ La.T
    by_L = (coeffs >= 0).all(axis=1)

    detail: dict[str, Any] = {
        "box": [lo, hi],
        "mode": "exhaustive" if exhaustive else "sampled",
        "points": int(len(pts)),
        "members": int(by_L.sum()),
    }
    ok = True
    diff = np.nonzero(by_def != by_L)[0]
    detail["disagreements"] = int(len(diff))
    if len(diff):
        ok = False
        c = pts[diff[0]]
        detail["witness"] = {"point": c.tolist(), "definition": bool(by_def[diff[0]]),
                             "L": bool(by_L[diff[0]])}
    Xa = np.array(X.rows, dtype=np.int64)
    members = pts[by_L]
    bad = np.nonzero((coeffs[by_L] @ Xa.T != members).any(axis=1))[0]
    detail["reconstruction_failures"] = int(len(bad))
    if len(bad):
        ok = False
        detail.setdefault("witness", {"point": members[bad[0]].tolist(), "reconstruction": False})
    negative = np.nonzero((members < 0).any(axis=1))[0]
    detail["redundancy_failures"] = int(len(negative))
    if len(negative):
        ok = False
        detail.setdefault("witness", {"point": members[negative[0]].tolist(), "negative_member": True})
    return CheckResult(ok, detail)


def random_dominant_weights(cartan: CartanSpec, count: int, seed: int, top: int = 3) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    return [tuple(rng.randint(0, top) for _ in range(cartan.rank)) for _ in range(count)]


# -- individual check groups ------------------------------------------------------

def _st_convention(word: ReducedWord, S: IntMatrix) -> CheckResult:
    primary = (S @ conemat.matrix_T(word)).is_identity()
    if word.cartan.is_symmetric:
        return CheckResult(primary, {"primary": primary, "transposed_cartan": None,
                                     "passing": ["primary"] if primary else []})
    dual_word = ReducedWord._trusted(word.cartan.transpose(), word.letters)
    transposed = (S @ conemat.matrix_T(dual_word)).is_identity()
    passing = [name for name, ok in (("primary", primary), ("transposed_cartan", transposed)) if ok]
    return CheckResult(len(passing) == 1, {"primary": primary, "transposed_cartan": transposed,
                                          "passing": passing})


def _last_occurrence(word: ReducedWord, m: dict[str, IntMatrix]) -> CheckResult:
    n = len(word)
    nxt = successors(word)
    for k in range(1, n + 1):
        if nxt[k - 1] != n + 1:
            continue
        if m["P"].column(k) != m["C"].column(k):
            return CheckResult(False, {"witness": {"k": k, "P": list(m["P"].column(k)),
                                                   "C": list(m["C"].column(k))}})
        ls = conemat.lowest_string(word, word.cartan.unit(word[k]))
        if m["X"].column(k) != ls:
            return CheckResult(False, {"witness": {"k": k, "X": list(m["X"].column(k)),
                                                   "lowest_string": list(ls)}})
        mu, star = conemat.mu_weight(word, k), weight_star(word.cartan, word.cartan.unit(word[k]))
        if mu != star:
            return CheckResult(False, {"witness": {"k": k, "mu": list(mu), "w0_star": list(star)}})
    return CheckResult(True)


def _simple_coroot_entries(word: ReducedWord, m: dict[str, IntMatrix]) -> CheckResult:
    n = len(word)
    rows = [j for j, b in enumerate(beta_roots(word), 1) if sum(b) == 1]
    for j in rows:
        for k in range(1, n + 1):
            if m["P"].entry(j, k) != m["C"].entry(j, k):
                return CheckResult(False, {"witness": {"j": j, "k": k, "P": m["P"].entry(j, k),
                                                       "C": m["C"].entry(j, k)}})
    return CheckResult(True, {"rows": rows})


def _string_equalities(word: ReducedWord, L: IntMatrix, weights: Iterable[Sequence[int]]) -> CheckResult:
    n = len(word)
    nxt = successors(word)
    rows = [j for j in range(1, n + 1) if nxt[j - 1] <= n]
    tested = 0
    for lam in weights:
        v = conemat.lowest_string(word, lam)
        for j in rows:
            val = sum(x * y for x, y in zip(L.row(j), v))
            if val != 0:
                return CheckResult(False, {"witness": {"j": j, "weight": list(lam), "value": val}})
        tested += 1
    return CheckResult(True, {"weights": tested, "rows": rows})


def _trop_matches(exprs, target: IntMatrix) -> CheckResult:
    got = IntMatrix.from_rows(tropical.stacked_exponents(exprs))
    return _equal(got, target)


def _zeta_composition(word: ReducedWord) -> CheckResult:
    n = len(word)
    for dual in (True, False):
        comp = tropical.compose_monomial_maps(tropical.zeta_inverse_monomials(word, dual),
                                              tropical.zeta_monomials(word, dual))
        for k, e in enumerate(comp, 1):
            if e != tuple(int(m == k) for m in range(1, n + 1)):
                return CheckResult(False, {"witness": {"dual": dual, "k": k, "exponents": list(e)}})
    return CheckResult(True)


def _affine_translation(word: ReducedWord, m: dict[str, IntMatrix]) -> CheckResult:
    n = len(word)
    nxt = successors(word)
    zero = (0,) * n
    for k in range(1, n + 1):
        if nxt[k - 1] > n:
            continue
        mu = conemat.mu_weight(word, k)
        got = tropical.string_to_lusztig_affine(word, mu, m["X"].column(k))
        if got != m["V"].column(k):
            return CheckResult(False, {"witness": {"k": k, "got": list(got), "expected": list(m["V"].column(k))}})
        got = tropical.string_to_lusztig_affine(word, mu, conemat.lowest_string(word, mu))
        if got != zero:
            return CheckResult(False, {"witness": {"k": k, "lowest_string_image": list(got)}})
    return CheckResult(True)


# -- entry points -----------------------------------------------------------------

def verify_word(
    word: ReducedWord,
    box: tuple[int, int] | None = None,
    *,
    seed: int = 0,
    weights: int = 20,
    samples: int = 100_000,
    skip: Sequence[str] = (),
) -> ConeReport:
    """Run every check on ``word``; ``box`` is ``(lo, hi)`` for cone agreement."""
    m = conemat.all_matrices(word)
    n = len(word)
    ident = IntMatrix.identity(n)
    checks: dict[str, CheckResult] = {}

    def run(name: str, fn) -> None:
        if name in skip:
            return
        try:
            checks[name] = fn()
        except (ArithmeticError, ValueError) as exc:
            checks[name] = CheckResult(False, {"error": f"{type(exc).__name__}: {exc}"})

    def triangularity() -> CheckResult:
        expected = {"V": 1, "W": 1, "S": -1, "T": -1, "C": 1}
        for name, d in expected.items():
            mat = m[name]
            if not mat.is_upper_triangular() or set(mat.diagonal()) != {d}:
                return CheckResult(False, {"witness": {"matrix": name}})
        return CheckResult(True)

    def vinv_s() -> CheckResult:
        return _equal(m["V"].inverse() @ m["S"], m["Ltilde"])

    def sinv_v() -> CheckResult:
        return _equal(m["S"].inverse() @ m["V"], -m["C"])

    run("triangularity", triangularity)
    run("WV_identity", lambda: _equal(m["W"] @ m["V"], ident))
    run("ST_identity", lambda: _equal(m["S"] @ m["T"], ident))
    run("ST_convention", lambda: _st_convention(word, m["S"]))
    run("VinvS_Ltilde", vinv_s)
    run("SinvV_negC", sinv_v)
    run("C_nonnegative", lambda: _nonnegative(m["C"]))
    run("P_nonnegative", lambda: _nonnegative(m["P"]))
    run("X_nonnegative", lambda: _nonnegative(m["X"]))
    run("LX_identity", lambda: _equal(m["L"] @ m["X"], ident))
    run("last_occurrence_columns", lambda: _last_occurrence(word, m))
    run("simple_coroot_entries", lambda: _simple_coroot_entries(word, m))
    run("string_equalities", lambda: _string_equalities(
        word, m["L"], random_dominant_weights(word.cartan, weights, seed)))
    run("trop_zeta_S", lambda: _trop_matches(tropical.zeta_monomials(word), m["S"]))
    run("trop_zeta_inverse_T", lambda: _trop_matches(tropical.zeta_inverse_monomials(word), m["T"]))
    run("zeta_composition", lambda: _zeta_composition(word))
    run("affine_translation", lambda: _affine_translation(word, m))
    lo, hi = box if box is not None else (None, None)
    run("cone_agreement", lambda: cone_agreement(word, lo, hi, samples=samples, seed=seed,
                                                 L=m["L"], X=m["X"]))
    return ConeReport(word, m, checks)


def _verify_task(args) -> ConeReport:
    word, box, seed, samples, skip = args
    return verify_word(word, box, seed=seed, samples=samples, skip=skip)


def verify_words(
    words: Iterable[ReducedWord],
    box: tuple[int, int] | None = None,
    *,
    seed: int = 0,
    samples: int = 100_000,
    skip: Sequence[str] = (),
    jobs: int = 1,
) -> list[ConeReport]:
    """Verify many words; the result is in lexicographic word order."""
    ordered = sorted(words, key=lambda w: w.letters)
    tasks = [(w, box, seed, samples, tuple(skip)) for w in ordered]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_verify_task(t) for t in tasks]
