"""
Quantum integers.

``qint`` realizes the balanced quantum integer [n]_{q^l} as a Laurent
polynomial. The symbolic side (``SymExponent``, ``QFactor``, ``SymTerm``,
``SymExpr``) represents rational expressions in brackets whose arguments are
linear forms ca*a + cb*b + c0 in two generic integers a, b. Such expressions
are realized in Z[A^{+-1}, B^{+-1}, q^{+-1}] by reading q^a as A and q^b as B.
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from claspkit.errors import ClaspKitError, DivisionByZero
from claspkit.exact_arith import LaurentPoly, RationalFunction, VARIABLES

Scalar = Union[int, Fraction]


@lru_cache(maxsize=4096)
def qint(n: int, level: int = 1) -> LaurentPoly:
    """[n]_{q^level} = q^{l(n-1)} + q^{l(n-3)} + ... + q^{-l(n-1)}"""
    if level < 1:
        raise ClaspKitError(f"Quantum integer level must be positive, got {level}")
    if n == 0:
        return LaurentPoly.zero()
    if n < 0:
        return -qint(-n, level)
    return LaurentPoly({(level * (n - 1 - 2 * i), 0, 0): 1 for i in range(n)})


def qdenominator(level: int = 1) -> LaurentPoly:
    """q^l - q^-l"""
    return LaurentPoly({(level, 0, 0): 1, (-level, 0, 0): -1})


@dataclass(frozen=True)
class QInt:
    """Concrete quantum integer [n]_{q^level}"""
    n: int
    level: int = 1

    def realize(self) -> LaurentPoly:
        return qint(self.n, self.level)


@dataclass(frozen=True, order=True)
class SymExponent:
    """The linear form ca*a + cb*b + c0"""
    ca: int = 0
    cb: int = 0
    c0: int = 0

    def evaluate(self, a: int, b: int) -> int:
        return self.ca * a + self.cb * b + self.c0

    def shift(self, da: int, db: int) -> "SymExponent":
        """Same form with a -> a + da, b -> b + db"""
        return SymExponent(self.ca, self.cb, self.c0 + self.ca * da + self.cb * db)

    def is_constant(self) -> bool:
        return self.ca == 0 and self.cb == 0

    def is_zero(self) -> bool:
        return self.is_constant() and self.c0 == 0

    def __neg__(self) -> "SymExponent":
        return SymExponent(-self.ca, -self.cb, -self.c0)

    def normalized(self) -> Tuple[int, "SymExponent"]:
        """(sign, form) with the first nonzero coefficient of form positive"""
        for c in (self.ca, self.cb, self.c0):
            if c != 0:
                return (1, self) if c > 0 else (-1, -self)
        return 1, self

    def monomial(self, level: int = 1) -> LaurentPoly:
        """A^{l ca} B^{l cb} q^{l c0}"""
        return LaurentPoly({(level * self.c0, level * self.ca, level * self.cb): 1}, VARIABLES)

    def __str__(self) -> str:
        parts: List[str] = []
        for coeff, name in ((self.ca, "a"), (self.cb, "b"), (self.c0, "")):
            if coeff == 0:
                continue
            magnitude = abs(coeff)
            body = str(magnitude) if not name else (name if magnitude == 1 else f"{magnitude}{name}")
            if parts:
                parts.append(("-" if coeff < 0 else "+") + body)
            else:
                parts.append(("-" if coeff < 0 else "") + body)
        return "".join(parts) or "0"


@dataclass(frozen=True, order=True)
class QFactor:
    """Bracket [exponent]_{q^level}"""
    exponent: SymExponent
    level: int = 1

    def realize_numerator(self) -> LaurentPoly:
        """Numerator of the bracket over q - q^-1 style denominators"""
        mono = self.exponent.monomial(self.level)
        return mono - mono.bar()

    def evaluate(self, a: int, b: int) -> LaurentPoly:
        return qint(self.exponent.evaluate(a, b), self.level)

    def shift(self, da: int, db: int) -> "QFactor":
        return QFactor(self.exponent.shift(da, db), self.level)

    def __str__(self) -> str:
        inner = f"[{self.exponent}]"
        return inner if self.level == 1 else f"{inner}_{{q^{self.level}}}"


@dataclass(frozen=True)
class SymTerm:
    """coeff * prod(num) / prod(den) with num, den sorted and disjoint"""
    coeff: Fraction
    num: Tuple[QFactor, ...] = ()
    den: Tuple[QFactor, ...] = ()

    @property
    def shape(self) -> Tuple[Tuple[QFactor, ...], Tuple[QFactor, ...]]:
        return self.num, self.den

    def __str__(self) -> str:
        top = "".join(str(f) for f in self.num)
        bottom = "".join(str(f) for f in self.den)
        sign = "-" if self.coeff < 0 else ""
        magnitude = abs(self.coeff)
        scale = "" if magnitude == 1 and top else str(magnitude)
        if scale and top:
            scale += "*"
        text = f"{sign}{scale}{top}"
        return f"{text}/({bottom})" if bottom else text


def make_term(coeff: Scalar, num: Iterable[QFactor] = (), den: Iterable[QFactor] = ()) -> Optional[SymTerm]:
    """Normalize signs, cancel common brackets; None for a zero term"""
    coeff = Fraction(coeff)
    tops: Counter = Counter()
    bottoms: Counter = Counter()
    for factor, bucket in [(f, tops) for f in num] + [(f, bottoms) for f in den]:
        if factor.exponent.is_zero():
            if bucket is bottoms:
                raise DivisionByZero(f"Bracket {factor} in a denominator is identically zero")
            return None
        sign, exponent = factor.exponent.normalized()
        coeff *= sign
        bucket[QFactor(exponent, factor.level)] += 1
    if coeff == 0:
        return None
    common = tops & bottoms
    tops -= common
    bottoms -= common
    return SymTerm(coeff, tuple(sorted(tops.elements())), tuple(sorted(bottoms.elements())))


class SymExpr:
    """Finite sum of SymTerms with like shapes merged"""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Optional[SymTerm]] = ()):
        merged: Dict[Tuple, Fraction] = {}
        for term in terms:
            if term is None:
                continue
            merged[term.shape] = merged.get(term.shape, Fraction(0)) + term.coeff
        self.terms: Tuple[SymTerm, ...] = tuple(
            SymTerm(c, num, den) for (num, den), c in sorted(merged.items()) if c != 0
        )

    @classmethod
    def constant(cls, value: Scalar) -> "SymExpr":
        return cls([make_term(value)])

    @classmethod
    def bracket(cls, ca: int = 0, cb: int = 0, c0: int = 0, level: int = 1) -> "SymExpr":
        return cls([make_term(1, [QFactor(SymExponent(ca, cb, c0), level)])])

    @classmethod
    def fraction(cls, coeff: Scalar, num: Sequence[QFactor], den: Sequence[QFactor] = ()) -> "SymExpr":
        return cls([make_term(coeff, num, den)])

    @staticmethod
    def _coerce(other) -> "SymExpr":
        if isinstance(other, SymExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return SymExpr.constant(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SymExpr(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "SymExpr":
        return SymExpr(SymTerm(-t.coeff, t.num, t.den) for t in self.terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SymExpr(
            make_term(s.coeff * t.coeff, s.num + t.num, s.den + t.den)
            for s in self.terms for t in other.terms
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "SymExpr":
        if not self.terms:
            raise DivisionByZero("Cannot invert the zero expression")
        if len(self.terms) > 1:
            raise ClaspKitError(f"Only single-term expressions can be inverted, got {self}")
        (term,) = self.terms
        return SymExpr([make_term(1 / term.coeff, term.den, term.num)])

    def shift(self, da: int, db: int) -> "SymExpr":
        """Substitute a -> a + da, b -> b + db"""
        return SymExpr(
            make_term(t.coeff, [f.shift(da, db) for f in t.num], [f.shift(da, db) for f in t.den])
            for t in self.terms
        )

    def evaluate(self, a: int, b: int) -> RationalFunction:
        """Concrete value at integers a, b"""
        total = RationalFunction(0)
        for term in self.terms:
            num = LaurentPoly.constant(term.coeff)
            for factor in term.num:
                num = num * factor.evaluate(a, b)
            den = LaurentPoly.one()
            for factor in term.den:
                value = factor.evaluate(a, b)
                if value.is_zero():
                    raise DivisionByZero(f"{factor} vanishes at (a, b) = ({a}, {b})")
                den = den * value
            total = total + RationalFunction(num, den)
        return total

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"SymExpr({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        text = str(self.terms[0])
        for term in self.terms[1:]:
            body = str(term)
            text += f" - {body[1:]}" if body.startswith("-") else f" + {body}"
        return text


# ---- clearing denominators ----------------------------------------------


def _symbolic_levels(factors: Iterable[QFactor]) -> Counter:
    return Counter(f.level for f in factors if not f.exponent.is_constant())


def _product(factors: Iterable[QFactor]) -> LaurentPoly:
    """Product of bracket numerators; constant brackets are realized exactly"""
    result = LaurentPoly.constant(1, VARIABLES)
    for factor in factors:
        if factor.exponent.is_constant():
            result = result * qint(factor.exponent.c0, factor.level)
        else:
            result = result * factor.realize_numerator()
    return result


def clear_denominators(exprs: Sequence[SymExpr]) -> Tuple[List[LaurentPoly], LaurentPoly]:
    """Write every expression over one common denominator.

    Returns (numerators, denominator) in Z[A^{+-1}, B^{+-1}, q^{+-1}] with
    exprs[i] == numerators[i] / denominator. The bracket part of the
    denominator is the least common multiple of all term denominators; every
    symbolic bracket contributes its numerator and a power of q^l - q^-l.
    """
    lcm: Counter = Counter()
    for expr in exprs:
        for term in expr.terms:
            lcm |= Counter(term.den)

    # brackets each term keeps after multiplying through by the lcm
    kept: List[List[Tuple[SymTerm, List[QFactor]]]] = []
    for expr in exprs:
        rows = []
        for term in expr.terms:
            rest = lcm - Counter(term.den)
            rows.append((term, list(term.num) + list(rest.elements())))
        kept.append(rows)

    lcm_levels = _symbolic_levels(lcm.elements())
    power: Counter = Counter(lcm_levels)
    for rows in kept:
        for _, factors in rows:
            power |= _symbolic_levels(factors)

    numerators: List[LaurentPoly] = []
    for rows in kept:
        total = LaurentPoly({}, VARIABLES)
        for term, factors in rows:
            levels = _symbolic_levels(factors)
            piece = _product(factors) * LaurentPoly.constant(term.coeff, VARIABLES)
            for level, count in power.items():
                piece = piece * qdenominator(level) ** (count - levels[level])
            total = total + piece
        numerators.append(total)

    denominator = _product(sorted(lcm.elements()))
    for level, count in power.items():
        denominator = denominator * qdenominator(level) ** (count - lcm_levels[level])
    return numerators, denominator


def sym_qfraction(x: Union[SymExpr, SymExponent, QFactor], level: int = 1) -> Tuple[LaurentPoly, LaurentPoly]:
    """Unreduced (numerator, denominator) of a symbolic bracket expression"""
    if isinstance(x, SymExponent):
        x = QFactor(x, level)
    if isinstance(x, QFactor):
        return x.realize_numerator(), qdenominator(x.level)
    (num,), den = clear_denominators([x])
    return num, den


def fractions_equal(x: Tuple[LaurentPoly, LaurentPoly], y: Tuple[LaurentPoly, LaurentPoly]) -> bool:
    """Cross-multiplication test n1*d2 == n2*d1"""
    return x[0] * y[1] == y[0] * x[1]
