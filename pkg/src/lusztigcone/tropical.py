"""Subtraction-free rational expressions and their min-plus tropicalisation.

Grammar (whitespace ignored)::

    expr    := term ('+' term)*
    term    := factor (('*' | '/') factor)*
    factor  := atom ('^' exponent)?
    exponent:= ['-'] INT | '(' ['-'] INT ')'
    atom    := INT | IDENT | '(' expr ')'

A ``-`` is accepted only as the sign of an exponent; anywhere else the
expression is rejected as not subtraction-free.  Zero literals are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .cartan import CartanSpec, apply_word
from .conemat import lowest_string
from .weyl import ReducedWord

Exponent = tuple[int, ...]


class ExprError(ValueError):
    """Parse or evaluation error; ``pos`` is the 0-based offset when known."""

    def __init__(self, message: str, pos: int | None = None):
        super().__init__(message if pos is None else f"{message} at position {pos}")
        self.pos = pos


class NotSubtractionFreeError(ExprError):
    pass


# -- positive Laurent polynomials ----------------------------------------------

@dataclass(frozen=True)
class PositiveLaurentPoly:
    variables: tuple[str, ...]
    terms: tuple[tuple[Exponent, Fraction], ...]  # sorted by exponent

    def __post_init__(self) -> None:
        if not self.terms:
            raise ExprError("a positive Laurent polynomial needs at least one term")
        for e, c in self.terms:
            if len(e) != len(self.variables):
                raise ExprError(f"exponent {e} does not match variables {self.variables}")
            if c <= 0:
                raise ExprError(f"coefficient {c} is not positive")

    @classmethod
    def from_dict(cls, variables: Sequence[str], terms: Mapping[Exponent, Fraction]) -> PositiveLaurentPoly:
        return cls(tuple(variables), tuple(sorted((tuple(e), Fraction(c)) for e, c in terms.items())))

    @classmethod
    def constant(cls, variables: Sequence[str], value: Fraction | int = 1) -> PositiveLaurentPoly:
        return cls.from_dict(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exponent: Sequence[int], coeff: Fraction | int = 1) -> PositiveLaurentPoly:
        return cls.from_dict(variables, {tuple(exponent): Fraction(coeff)})

    def as_dict(self) -> dict[Exponent, Fraction]:
        return dict(self.terms)

    @property
    def support(self) -> frozenset[Exponent]:
        return frozenset(e for e, _ in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __add__(self, other: PositiveLaurentPoly) -> PositiveLaurentPoly:
        self._compatible(other)
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return PositiveLaurentPoly.from_dict(self.variables, out)

    def __mul__(self, other: PositiveLaurentPoly) -> PositiveLaurentPoly:
        self._compatible(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return PositiveLaurentPoly.from_dict(self.variables, out)

    def __pow__(self, k: int) -> PositiveLaurentPoly:
        if k < 0:
            if not self.is_monomial():
                raise ExprError("negative power of a non-monomial polynomial")
            (e, c), = self.terms
            return PositiveLaurentPoly.monomial(self.variables, [-x for x in e], 1 / c)
        out = PositiveLaurentPoly.constant(self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def evaluate(self, point: Mapping[str, Fraction] | Sequence[Fraction]) -> Fraction:
        vals = [point[v] for v in self.variables] if isinstance(point, Mapping) else list(point)
        total = Fraction(0)
        for e, c in self.terms:
            term = Fraction(c)
            for x, k in zip(vals, e):
                term *= Fraction(x) ** k
            total += term
        return total

    def _compatible(self, other: PositiveLaurentPoly) -> None:
        if self.variables != other.variables:
            raise ExprError(f"variable mismatch: {self.variables} vs {other.variables}")

    def to_text(self) -> str:
        # highest exponents first, so x^3 + y^3 rather than y^3 + x^3
        return " + ".join(_format_term(self.variables, e, c) for e, c in reversed(self.terms))


def _format_term(variables: Sequence[str], e: Exponent, c: Fraction) -> str:
    factors = []
    if c != 1 or not any(e):
        factors.append(str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
    for v, k in zip(variables, e):
        if k == 1:
            factors.append(v)
        elif k:
            factors.append(f"{v}^{k}")
    return "*".join(factors)


# -- subtraction-free expressions -------------------------------------------------

@dataclass(frozen=True)
class SubtractionFreeExpr:
    num: PositiveLaurentPoly
    den: PositiveLaurentPoly

    @property
    def variables(self) -> tuple[str, ...]:
        return self.num.variables

    @classmethod
    def make(cls, num: PositiveLaurentPoly, den: PositiveLaurentPoly) -> SubtractionFreeExpr:
        # a monomial denominator is folded into the (Laurent) numerator
        if den.is_monomial():
            return cls(num * den ** -1, PositiveLaurentPoly.constant(num.variables))
        return cls(num, den)

    @classmethod
    def monomial(cls, variables: Sequence[str], exponent: Sequence[int], coeff: Fraction | int = 1) -> SubtractionFreeExpr:
        return cls.make(PositiveLaurentPoly.monomial(variables, exponent, coeff),
                        PositiveLaurentPoly.constant(variables))

    def __add__(self, other: SubtractionFreeExpr) -> SubtractionFreeExpr:
        if self.den == other.den:
            return SubtractionFreeExpr.make(self.num + other.num, self.den)
        return SubtractionFreeExpr.make(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: SubtractionFreeExpr) -> SubtractionFreeExpr:
        return SubtractionFreeExpr.make(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: SubtractionFreeExpr) -> SubtractionFreeExpr:
        return SubtractionFreeExpr.make(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int) -> SubtractionFreeExpr:
        if k >= 0:
            return SubtractionFreeExpr.make(self.num ** k, self.den ** k)
        return SubtractionFreeExpr.make(self.den ** -k, self.num ** -k)

    def is_monomial(self) -> bool:
        return self.num.is_monomial() and self.den.is_monomial()

    def monomial_exponent(self) -> Exponent:
        if not self.is_monomial():
            raise ExprError("expression is not a monomial")
        (e1, _), = self.num.terms
        (e2, _), = self.den.terms
        return tuple(x - y for x, y in zip(e1, e2))

    def evaluate(self, point: Mapping[str, Fraction] | Sequence[Fraction]) -> Fraction:
        return self.num.evaluate(point) / self.den.evaluate(point)

    def to_text(self) -> str:
        num = self.num.to_text()
        if self.den == PositiveLaurentPoly.constant(self.variables):
            return num
        return f"({num})/({self.den.to_text()})"

    def __str__(self) -> str:
        return self.to_text()


# -- parser ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+*/^()-":
                raise ExprError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = tuple(variables)
        self._index = {v: k for k, v in enumerate(self.variables)}

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op: str) -> None:
        kind, val, pos = self.take()
        if (kind, val) != ("op", op):
            self._unexpected(kind, val, pos, f"expected {op!r}")

    def _unexpected(self, kind: str, val: str, pos: int, what: str) -> None:
        if (kind, val) == ("op", "-"):
            raise NotSubtractionFreeError("not subtraction-free: '-' outside an exponent", pos)
        found = "end of input" if kind == "end" else repr(val)
        raise ExprError(f"{what}, found {found}", pos)

    def parse(self) -> SubtractionFreeExpr:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            self._unexpected(kind, val, pos, "unexpected token")
        return e

    def expr(self) -> SubtractionFreeExpr:
        e = self.term()
        while self.peek()[:2] == ("op", "+"):
            self.take()
            e = e + self.term()
        return e

    def term(self) -> SubtractionFreeExpr:
        e = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            rhs = self.factor()
            e = e * rhs if op == "*" else e / rhs
        return e

    def factor(self) -> SubtractionFreeExpr:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            base = base ** self.exponent()
        return base

    def exponent(self) -> int:
        paren = self.peek()[:2] == ("op", "(")
        if paren:
            self.take()
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        kind, val, pos = self.take()
        if kind != "int":
            self._unexpected(kind, val, pos, "expected integer exponent")
        if paren:
            self.expect(")")
        return sign * int(val)

    def atom(self) -> SubtractionFreeExpr:
        kind, val, pos = self.take()
        if kind == "int":
            if int(val) == 0:
                raise ExprError("zero literal is not allowed", pos)
            return SubtractionFreeExpr.monomial(self.variables, (0,) * len(self.variables), int(val))
        if kind == "ident":
            if val not in self._index:
                raise ExprError(f"unknown identifier {val!r}", pos)
            e = [0] * len(self.variables)
            e[self._index[val]] = 1
            return SubtractionFreeExpr.monomial(self.variables, e)
        if (kind, val) == ("op", "("):
            e = self.expr()
            self.expect(")")
            return e
        self._unexpected(kind, val, pos, "expected a number, variable or '('")
        raise AssertionError  # unreachable


def parse_expr(text: str, variables: Sequence[str]) -> SubtractionFreeExpr:
    if len(set(variables)) != len(variables):
        raise ExprError(f"duplicate variable names in {list(variables)}")
    return _Parser(text, variables).parse()


# -- tropicalisation ------------------------------------------------------------

@dataclass(frozen=True)
class TropicalForm:
    """``point -> min_{e in num} e.point - min_{e in den} e.point``."""

    num_exponents: frozenset[Exponent]
    den_exponents: frozenset[Exponent]

    @property
    def dimension(self) -> int:
        return len(next(iter(self.num_exponents)))

    def __call__(self, point: Sequence[int]) -> int:
        return trop_eval(self, point)

    def to_json(self) -> dict[str, list[list[int]]]:
        return {
            "num": [list(e) for e in sorted(self.num_exponents)],
            "den": [list(e) for e in sorted(self.den_exponents)],
        }


def tropicalize(expr: SubtractionFreeExpr) -> TropicalForm:
    return TropicalForm(expr.num.support, expr.den.support)


def trop_eval(form: TropicalForm, point: Sequence[int]) -> int:
    if len(point) != form.dimension:
        raise ExprError(f"point of length {len(point)} does not match dimension {form.dimension}")

    def low(exps: frozenset[Exponent]) -> int:
        return min(sum(a * b for a, b in zip(e, point)) for e in exps)

    return low(form.num_exponents) - low(form.den_exponents)


# -- the monomial lifts of the twist map and its inverse ----------------------------

def _var_names(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{k}" for k in range(1, n + 1))


def _raw_forward_exponent(cartan: CartanSpec, letters: Sequence[int], k: int, j: int) -> int:
    # exponent of t_j in t'_k, j > k:  -a_{i_j, i_k}
    return -cartan.a(letters[j - 1], letters[k - 1])


def _raw_inverse_exponent(cartan: CartanSpec, letters: Sequence[int], k: int, j: int) -> int:
    # exponent of u_j in t_k, j > k:  <s_{i_{j-1}} ... s_{i_{k+1}} alpha_{i_k}, alpha_{i_j}^vee>
    root = apply_word(cartan, tuple(reversed(letters[k:j - 1])), cartan.unit(letters[k - 1]), kind="root")
    row = cartan.entries[letters[j - 1] - 1]
    return sum(row[m] * root[m] for m in range(cartan.rank))


def _monomial_family(word: ReducedWord, prefix: str, exponent, dual: bool) -> list[SubtractionFreeExpr]:
    # the Langlands-dual formula is the same formula for the transposed Cartan matrix
    cartan = word.cartan.transpose() if dual else word.cartan
    n = len(word)
    names = _var_names(prefix, n)
    out = []
    for k in range(1, n + 1):
        e = [0] * n
        e[k - 1] = -1
        for j in range(k + 1, n + 1):
            e[j - 1] = exponent(cartan, word.letters, k, j)
        out.append(SubtractionFreeExpr.monomial(names, e))
    return out


def zeta_monomials(word: ReducedWord, dual: bool = True) -> list[SubtractionFreeExpr]:
    """Components ``t'_k = t_k^{-1} prod_{j>k} t_j^{-a_{i_j,i_k}}`` of the twist map.

    With ``dual=True`` (default) the formula is taken in the Langlands dual,
    i.e. with the Cartan matrix transposed, which is the orientation whose
    tropicalisation is ``matrix_S``.  For symmetric Cartan matrices both
    coincide.
    """
    return _monomial_family(word, "t", _raw_forward_exponent, dual)


def zeta_inverse_monomials(word: ReducedWord, dual: bool = True) -> list[SubtractionFreeExpr]:
    """Components ``t_k = u_k^{-1} prod_{j>k} u_j^{<s_{i_{j-1}}...s_{i_{k+1}} alpha_{i_k}, alpha_{i_j}^vee>}``.

    ``dual`` as in :func:`zeta_monomials`; the dual orientation tropicalises
    to ``matrix_T``.
    """
    return _monomial_family(word, "u", _raw_inverse_exponent, dual)


def stacked_exponents(exprs: Sequence[SubtractionFreeExpr]) -> list[list[int]]:
    """Row ``k`` is the (linear) tropicalisation of the ``k``-th monomial."""
    return [list(e.monomial_exponent()) for e in exprs]


def compose_monomial_maps(outer: Sequence[SubtractionFreeExpr], inner: Sequence[SubtractionFreeExpr]) -> list[Exponent]:
    """Exponent vectors of ``outer`` after substituting ``inner`` for its variables."""
    inner_exps = [e.monomial_exponent() for e in inner]
    out = []
    for comp in outer:
        acc = [0] * len(inner_exps[0])
        for power, sub in zip(comp.monomial_exponent(), inner_exps):
            for m, x in enumerate(sub):
                acc[m] += power * x
        out.append(tuple(acc))
    return out


# -- affine string -> Lusztig map ------------------------------------------------

def _affine_constant(word: ReducedWord, weight: Sequence[int]) -> list[int]:
    # l = -S v where v = lowest_string(weight); written out with the Cartan entries
    v = lowest_string(word, weight)
    a, w, n = word.cartan.a, word.letters, len(word)
    return [v[k] + sum(a(w[k], w[j]) * v[j] for j in range(k + 1, n)) for k in range(n)]


def string_to_lusztig_affine(word: ReducedWord, weight: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """``t'_k = l_k - t_k - sum_{j>k} a_{i_k,i_j} t_j``.

    ``weight`` is the highest weight of the component on the Lusztig side, so
    the string of the lowest weight vector, ``lowest_string(word, weight)``,
    is sent to 0.  The constant is ``l = -S . lowest_string(word, weight)``.
    """
    n = len(word)
    if len(t) != n:
        raise ExprError(f"vector of length {len(t)} does not match word length {n}")
    l = _affine_constant(word, weight)
    a, w = word.cartan.a, word.letters
    return tuple(
        l[k] - t[k] - sum(a(w[k], w[j]) * t[j] for j in range(k + 1, n)) for k in range(n)
    )


def lusztig_to_string_affine(word: ReducedWord, weight: Sequence[int], tp: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`string_to_lusztig_affine` by back substitution."""
    n = len(word)
    if len(tp) != n:
        raise ExprError(f"vector of length {len(tp)} does not match word length {n}")
    l = _affine_constant(word, weight)
    a, w = word.cartan.a, word.letters
    t = [0] * n
    for k in range(n - 1, -1, -1):
        t[k] = l[k] - tp[k] - sum(a(w[k], w[j]) * t[j] for j in range(k + 1, n))
    return tuple(t)
