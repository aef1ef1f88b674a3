"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (with timing) that is printed in a
summary block at the end of the pytest run.  Running this file directly with
``python3 tests/test_acceptance.py`` prints the same lines.
"""

from __future__ import annotations

import itertools
import random
import time
from functools import lru_cache

import pytest

from lusztigcone.cartan import apply_word, parse_type_label
from lusztigcone.conemat import (
    all_matrices,
    lowest_string,
    matrix_S,
    matrix_T,
    mu_weight,
)
from lusztigcone.intmatrix import IntMatrix
from lusztigcone.report import CHECK_NAMES, cone_agreement, verify_word
from lusztigcone.tropical import (
    parse_expr,
    stacked_exponents,
    string_to_lusztig_affine,
    trop_eval,
    tropicalize,
    zeta_inverse_monomials,
    zeta_monomials,
)
from lusztigcone.weyl import ReducedWord, enumerate_reduced_words, sample_reduced_words, successors

from conftest import read_golden

RESULTS: list[str] = []

FULL_TYPES = ["A1", "A2", "A3", "B2", "G2", "B3", "C3"]
SAMPLED_TYPES = {"A4": 200, "D4": 200}
WORD_SEED = 20240611
WEIGHT_SEED = 7


def record(number: int, title: str, ok: bool, seconds: float, limit: float | None, note: str = "") -> None:
    timing = f"{seconds:.2f}s" + (f" (limit {limit:g}s)" if limit is not None else "")
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} | {timing}"
    RESULTS.append(line + (f" | {note}" if note else ""))


@lru_cache(maxsize=None)
def word_set() -> tuple[ReducedWord, ...]:
    words: list[ReducedWord] = []
    for label in FULL_TYPES:
        words.extend(enumerate_reduced_words(parse_type_label(label)))
    for label, count in SAMPLED_TYPES.items():
        words.extend(sample_reduced_words(parse_type_label(label), count, WORD_SEED))
    return tuple(words)


@lru_cache(maxsize=None)
def matrices(w: ReducedWord) -> dict[str, IntMatrix]:
    return all_matrices(w)


# 1 -------------------------------------------------------------------------------

def test_criterion_1_a3_example_matrices():
    t0 = time.perf_counter()
    w = ReducedWord.of(parse_type_label("A3"), (2, 3, 2, 1, 2, 3))
    m = all_matrices(w)
    golden = read_golden("a3_232123.txt")
    wrong = [name for name in ("V", "T", "C", "P", "X", "L") if m[name].to_lists() != golden[name]]
    dt = time.perf_counter() - t0
    ok = not wrong and dt < 1.0
    record(1, "A3 word 2,3,2,1,2,3 gives the printed V,T,C,P,X,L", ok, dt, 1.0,
           f"mismatched: {wrong}" if wrong else "6/6 matrices exact")
    assert not wrong
    assert dt < 1.0


# 2 -------------------------------------------------------------------------------

def test_criterion_2_tropical_example_grid():
    t0 = time.perf_counter()
    form = tropicalize(parse_expr("(x^3+y^3)/(x+y)", ["x", "y"]))
    bad = [(m, n) for m, n in itertools.product(range(-5, 6), repeat=2)
           if trop_eval(form, (m, n)) != min(2 * m, 2 * n)]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 1.0
    record(2, "trop((x^3+y^3)/(x+y)) = min(2m,2n) on {-5..5}^2", ok, dt, 1.0,
           f"{121 - len(bad)}/121 points")
    assert not bad
    assert dt < 1.0


# 3 -------------------------------------------------------------------------------

def test_criterion_3_lx_identity():
    t0 = time.perf_counter()
    words = word_set()
    failures = [w for w in words if not (matrices(w)["L"] @ matrices(w)["X"]).is_identity()]
    dt = time.perf_counter() - t0
    ok = not failures and dt < 120.0
    record(3, "L X = I on all words of A1,A2,A3,B2,G2,B3,C3 and 200 seeded words each of A4,D4",
           ok, dt, 120.0, f"{len(words) - len(failures)}/{len(words)} words")
    assert not failures, [str(w) for w in failures[:5]]
    assert dt < 120.0


# 4 -------------------------------------------------------------------------------

def test_criterion_4_cone_equality_on_box():
    t0 = time.perf_counter()
    total = points = disagreements = reconstruction = 0
    bad = []
    for label in ["A2", "A3", "B2", "G2"]:
        for w in enumerate_reduced_words(parse_type_label(label)):
            res = cone_agreement(w, -2, 5)
            total += 1
            points += res.detail["points"]
            disagreements += res.detail["disagreements"]
            reconstruction += res.detail["reconstruction_failures"]
            if not res.passed or res.detail["mode"] != "exhaustive":
                bad.append((label, str(w), res.detail))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 300.0
    record(4, "definition vs L c >= 0 on the box {-2..5}^N for every word of A2,A3,B2,G2, with X(Lc)=c",
           ok, dt, 300.0,
           f"{total} words, {points} points, {disagreements} disagreements, "
           f"{reconstruction} reconstruction failures")
    assert not bad, bad[:3]
    assert dt < 300.0


# 5 -------------------------------------------------------------------------------

def _simple_coroot_rows(w: ReducedWord) -> list[int]:
    # rows j where s_{i_1} ... s_{i_{j-1}} alpha_{i_j}^vee is a simple coroot
    c = w.cartan
    rows = []
    for j in range(1, len(w) + 1):
        v = apply_word(c, w.letters[: j - 1], c.unit(w[j]), kind="coroot")
        if sorted(v) == [0] * (c.rank - 1) + [1]:
            rows.append(j)
    return rows


def _identity_failures(w: ReducedWord) -> list[str]:
    m = matrices(w)
    n = len(w)
    out = []
    if not (m["W"] @ m["V"]).is_identity():
        out.append("WV")
    if m["V"].inverse() @ m["S"] != m["Ltilde"]:
        out.append("VinvS")
    if m["S"].inverse() @ m["V"] != -m["C"]:
        out.append("SinvV")
    if m["C"].min_entry() < 0:
        out.append("C>=0")
    if m["X"].min_entry() < 0:
        out.append("X>=0")
    for k, nxt in enumerate(successors(w), 1):
        if nxt == n + 1 and m["P"].column(k) != m["C"].column(k):
            out.append(f"lastoccurrence k={k}")
    for j in _simple_coroot_rows(w):
        if m["P"].row(j) != m["C"].row(j):
            out.append(f"simplepc j={j}")
    return out


def test_criterion_5_identity_suite():
    t0 = time.perf_counter()
    words = word_set()
    failures = {str(w): f for w in words if (f := _identity_failures(w))}
    dt = time.perf_counter() - t0
    record(5, "WV=I, V^-1 S=Ltilde, S^-1 V=-C, C>=0, X>=0, last-occurrence and simple-coroot columns of P",
           not failures, dt, None, f"{len(words) - len(failures)}/{len(words)} words")
    assert not failures, list(failures.items())[:3]


# 6 -------------------------------------------------------------------------------

def test_criterion_6_kernel_rows():
    t0 = time.perf_counter()
    words = word_set()
    bad = []
    checked = 0
    for w in words:
        rng = random.Random(WEIGHT_SEED)
        weights = [tuple(rng.randint(0, 3) for _ in range(w.cartan.rank)) for _ in range(20)]
        L = matrices(w)["L"]
        rows = [j for j, nxt in enumerate(successors(w), 1) if nxt <= len(w)]
        for lam in weights:
            v = lowest_string(w, lam)
            for j in rows:
                checked += 1
                if sum(x * y for x, y in zip(L.row(j), v)):
                    bad.append((str(w), lam, j))
    dt = time.perf_counter() - t0
    record(6, "rows of L with j(1) <= N annihilate lowest_string(lambda) for 20 seeded weights",
           not bad, dt, None, f"{checked} row/weight pairs, {len(bad)} nonzero")
    assert not bad, bad[:3]


# 7 -------------------------------------------------------------------------------

def test_criterion_7_affine_consistency():
    t0 = time.perf_counter()
    words = word_set()
    bad = []
    checked = 0
    for w in words:
        m = matrices(w)
        n = len(w)
        for k, nxt in enumerate(successors(w), 1):
            if nxt > n:
                continue
            mu = mu_weight(w, k)
            checked += 1
            if string_to_lusztig_affine(w, mu, m["X"].column(k)) != m["V"].column(k):
                bad.append((str(w), k, "X column"))
            if string_to_lusztig_affine(w, mu, lowest_string(w, mu)) != (0,) * n:
                bad.append((str(w), k, "lowest string"))
    dt = time.perf_counter() - t0
    record(7, "affine map with lambda=mu_k sends X col k to V col k and lowest_string(mu_k) to 0",
           not bad, dt, None, f"{checked} (word, k) pairs, {len(bad)} failures")
    assert not bad, bad[:3]


# 8 -------------------------------------------------------------------------------

def test_criterion_8_tropical_matrix_coherence():
    t0 = time.perf_counter()
    bad = []
    count = 0
    for label in ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"]:
        for w in enumerate_reduced_words(parse_type_label(label)):
            count += 1
            if stacked_exponents(zeta_monomials(w)) != matrix_S(w).to_lists():
                bad.append((label, str(w), "S"))
            if stacked_exponents(zeta_inverse_monomials(w)) != matrix_T(w).to_lists():
                bad.append((label, str(w), "T"))
    conventions = {}
    for label in ["B2", "G2"]:
        for w in enumerate_reduced_words(parse_type_label(label)):
            chk = verify_word(w, skip=[c for c in CHECK_NAMES if c != "ST_convention"]).checks["ST_convention"]
            conventions[f"{label} {w}"] = chk.detail["passing"]
            if len(chk.detail["passing"]) != 1:
                bad.append((label, str(w), f"conventions {chk.detail}"))
    dt = time.perf_counter() - t0
    summary = "; ".join(f"{k}: {','.join(v) or 'none'}" for k, v in conventions.items())
    record(8, "stacked tropical lifts equal S and T for all rank <= 3 words; one S T = I convention on B2,G2",
           not bad, dt, None, f"{count} words; passing convention per word: {summary}")
    assert not bad, bad[:3]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
