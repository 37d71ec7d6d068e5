"""
Exact arithmetic for the clasp computations.

Three value types live here:

* ``LaurentPoly``: multivariate Laurent polynomial in (a subset of) the
  variables q, A, B with rational coefficients.
* ``RationalFunction``: quotient of two Laurent polynomials in q, kept in a
  reduced canonical form. Every local intersection form is one of these.
* ``CyclotomicNumber``: residue modulo the n-th cyclotomic polynomial, i.e. an
  element of Q(zeta) for a fixed primitive n-th root of unity zeta.

All values are immutable. Univariate gcd and division run on sympy ring
elements of Q[q].
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ, divisors
from sympy.polys.rings import PolyElement, ring

from claspkit.errors import ClaspKitError, DivisionByZero

VARIABLES: Tuple[str, ...] = ("q", "A", "B")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}

Exponent = Tuple[int, int, int]
Scalar = Union[int, Fraction]


class LaurentPoly:
    """Laurent polynomial over Q in the variables q, A, B.

    Terms are stored as a map from exponent triples ``(e_q, e_A, e_B)`` to
    nonzero ``Fraction`` coefficients. ``variables`` is the ordered set of
    variables the polynomial is declared over; it only affects serialization.
    """

    __slots__ = ("_terms", "_variables", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, Scalar]] = None,
                 variables: Iterable[str] = ("q",)):
        cleaned: Dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != 3:
                raise ClaspKitError(f"Exponent vector {exps!r} must have three entries (q, A, B)")
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[tuple(int(e) for e in exps)] = coeff
        declared = set(variables)
        unknown = declared - set(VARIABLES)
        if unknown:
            raise ClaspKitError(f"Unknown variables {sorted(unknown)}")
        for exps in cleaned:
            declared.update(VARIABLES[i] for i in range(3) if exps[i] != 0)
        self._terms = cleaned
        self._variables = tuple(v for v in VARIABLES if v in declared)
        self._hash: Optional[int] = None

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str] = ("q",)) -> "LaurentPoly":
        return cls({(0, 0, 0): value}, variables)

    @classmethod
    def monomial(cls, coeff: Scalar = 1, q: int = 0, A: int = 0, B: int = 0) -> "LaurentPoly":
        return cls({(q, A, B): coeff})

    @classmethod
    def q_power(cls, k: int) -> "LaurentPoly":
        return cls.monomial(1, q=k)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar], low: int = 0) -> "LaurentPoly":
        """Univariate polynomial sum(coeffs[i] * q**(low + i))"""
        return cls({(low + i, 0, 0): c for i, c in enumerate(coeffs)})

    # ---- introspection ------------------------------------------------

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    def items(self) -> List[Tuple[Exponent, Fraction]]:
        """Terms in serialization order: ascending lexicographic on (q, A, B)"""
        return sorted(self._terms.items())

    def coefficient(self, q: int = 0, A: int = 0, B: int = 0) -> Fraction:
        return self._terms.get((q, A, B), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(exps == (0, 0, 0) for exps in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0, 0), Fraction(0))

    def is_univariate(self) -> bool:
        return all(exps[1] == 0 and exps[2] == 0 for exps in self._terms)

    def q_range(self) -> Tuple[int, int]:
        if not self._terms:
            raise ClaspKitError("The zero polynomial has no degree")
        qs = [exps[0] for exps in self._terms]
        return min(qs), max(qs)

    def univariate_coeffs(self) -> Tuple[int, List[Fraction]]:
        """Return (low, coeffs) with self == sum(coeffs[i] q**(low+i))"""
        self._require_univariate()
        if not self._terms:
            return 0, []
        low, high = self.q_range()
        return low, [self._terms.get((e, 0, 0), Fraction(0)) for e in range(low, high + 1)]

    def coefficient_sum(self) -> Fraction:
        """Value at q = A = B = 1"""
        return sum(self._terms.values(), Fraction(0))

    def _require_univariate(self) -> None:
        if not self.is_univariate():
            raise ClaspKitError(f"Expected a polynomial in q only, got variables {self._variables}")

    # ---- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return NotImplemented

    def _union(self, other: "LaurentPoly") -> Tuple[str, ...]:
        return tuple(v for v in VARIABLES if v in self._variables or v in other._variables)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return LaurentPoly(terms, self._union(other))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({exps: -c for exps, c in self._terms.items()}, self._variables)

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
        terms: Dict[Exponent, Fraction] = {}
        for (q1, a1, b1), c1 in self._terms.items():
            for (q2, a2, b2), c2 in other._terms.items():
                key = (q1 + q2, a1 + a2, b1 + b2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return LaurentPoly(terms, self._union(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) == 1:
                ((exps, coeff),) = self._terms.items()
                return LaurentPoly({tuple(-e * -n for e in exps): 1 / coeff ** -n}, self._variables)
            raise ClaspKitError("Only monomials can be raised to negative powers")
        result = LaurentPoly.constant(1, self._variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ---- transformations ----------------------------------------------

    def shift_q(self, k: int) -> "LaurentPoly":
        return LaurentPoly({(e[0] + k, e[1], e[2]): c for e, c in self._terms.items()}, self._variables)

    def bar(self) -> "LaurentPoly":
        """Bar involution q -> q^-1, A -> A^-1, B -> B^-1"""
        return LaurentPoly({(-e[0], -e[1], -e[2]): c for e, c in self._terms.items()}, self._variables)

    def substitute(self, var: str, power: int) -> "LaurentPoly":
        """Replace var**k by q**(power*k); var is removed from the variable set"""
        if var not in ("A", "B"):
            raise ClaspKitError(f"Can only substitute A or B, not {var!r}")
        if var not in self._variables:
            raise ClaspKitError(f"Variable {var} does not occur in {self._variables}")
        idx = _INDEX[var]
        terms: Dict[Exponent, Fraction] = {}
        for exps, coeff in self._terms.items():
            new = list(exps)
            new[0] += power * exps[idx]
            new[idx] = 0
            key = tuple(new)
            terms[key] = terms.get(key, 0) + coeff
        return LaurentPoly(terms, tuple(v for v in self._variables if v != var))

    # ---- display ------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for exps, coeff in reversed(self.items()):
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VARIABLES, exps) if e != 0
            )
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            sign = "-" if coeff < 0 else "+"
            parts.append(f"{sign} {body}" if parts else ("-" + body if coeff < 0 else body))
        return " ".join(parts)


# ---- univariate bridge to sympy ---------------------------------------

# Q[q] in sympy's sparse representation; RationalFunction and the cyclotomic
# code work on these elements and convert to LaurentPoly only at the edges
QRing, _Q = ring("q", QQ)


def _to_ring(x: LaurentPoly) -> Tuple[int, PolyElement]:
    """(low, p) with x == q**low * p and p(0) != 0 unless x is zero"""
    x._require_univariate()
    if x.is_zero():
        return 0, QRing.zero
    low = x.q_range()[0]
    return low, QRing({(e[0] - low,): QQ(c.numerator, c.denominator) for e, c in x._terms.items()})


def _from_ring(p: PolyElement, low: int = 0) -> LaurentPoly:
    return LaurentPoly({(m[0] + low, 0, 0): Fraction(int(c.numerator), int(c.denominator)) for m, c in p.items()})


def _strip_q(p: PolyElement) -> Tuple[int, PolyElement]:
    """(k, r) with p == q**k * r and r(0) != 0"""
    k = min(m[0] for m in p)
    if k == 0:
        return 0, p
    return k, QRing({(m[0] - k,): c for m, c in p.items()})


def _times_q(p: PolyElement, k: int) -> PolyElement:
    return p * _Q ** k if k else p


class RationalFunction:
    """Element of Q(q) in canonical form q**shift * num / den.

    ``num`` and ``den`` are ordinary polynomials with nonzero constant terms,
    coprime, ``den`` monic. Equality of canonical forms is equality of
    functions. The ``num``/``den`` properties give the same value as Laurent
    polynomials: the numerator carries the power of q.
    """

    __slots__ = ("_shift", "_num", "_den", "_laurent")

    def __init__(self, num: Union[LaurentPoly, Scalar], den: Union[LaurentPoly, Scalar] = 1):
        num = LaurentPoly._coerce(num)
        den = LaurentPoly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise ClaspKitError("RationalFunction needs LaurentPoly or rational arguments")
        num._require_univariate()
        den._require_univariate()
        if den.is_zero():
            raise DivisionByZero("Denominator is the zero polynomial")
        n_low, n_poly = _to_ring(num)
        d_low, d_poly = _to_ring(den)
        self._set(n_low - d_low, n_poly, d_poly)

    @classmethod
    def _build(cls, shift: int, num: PolyElement, den: PolyElement) -> "RationalFunction":
        x = cls.__new__(cls)
        x._set(shift, num, den)
        return x

    def _set(self, shift: int, num: PolyElement, den: PolyElement) -> None:
        self._laurent = None
        if not num:
            self._shift, self._num, self._den = 0, QRing.zero, QRing.one
            return
        k_num, num = _strip_q(num)
        k_den, den = _strip_q(den)
        shift += k_num - k_den
        if den.is_ground:
            num, den = num.quo_ground(den.LC), QRing.one
        else:
            _, num, den = num.cofactors(den)
            lead = den.LC
            num, den = num.quo_ground(lead), den.quo_ground(lead)
        self._shift, self._num, self._den = shift, num, den

    @classmethod
    def _coerce(cls, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return cls(other)
        return NotImplemented

    def _parts(self) -> Tuple[LaurentPoly, LaurentPoly]:
        if self._laurent is None:
            self._laurent = (_from_ring(self._num, self._shift), _from_ring(self._den))
        return self._laurent

    @property
    def num(self) -> LaurentPoly:
        return self._parts()[0]

    @property
    def den(self) -> LaurentPoly:
        return self._parts()[1]

    def is_zero(self) -> bool:
        return not self._num

    def is_laurent(self) -> bool:
        return self._den == QRing.one

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ClaspKitError(f"{self} is not a Laurent polynomial")
        return self.num

    def bar(self) -> "RationalFunction":
        return RationalFunction(self.num.bar(), self.den.bar())

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        low = min(self._shift, other._shift)
        left = _times_q(self._num, self._shift - low)
        right = _times_q(other._num, other._shift - low)
        if self._den == other._den:
            return RationalFunction._build(low, left + right, self._den)
        return RationalFunction._build(low, left * other._den + right * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        x = RationalFunction.__new__(RationalFunction)
        x._shift, x._num, x._den, x._laurent = self._shift, -self._num, self._den, None
        return x

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
        if self.is_zero() or other.is_zero():
            return RationalFunction(0)
        return RationalFunction._build(self._shift + other._shift, self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZero("Cannot invert the zero rational function")
        # already coprime; only the leading coefficient moves
        lead = self._num.LC
        x = RationalFunction.__new__(RationalFunction)
        x._shift, x._num, x._den, x._laurent = -self._shift, self._den.quo_ground(lead), self._num.quo_ground(lead), None
        return x

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._shift == other._shift and self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._shift, frozenset(self._num.items()), frozenset(self._den.items())))

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


# ---- operation front ends ----------------------------------------------

_LP_OPS: Dict[str, Callable[[LaurentPoly, LaurentPoly], LaurentPoly]] = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "neg": lambda x, y: -x,
}

_RF_OPS: Dict[str, Callable[[RationalFunction, RationalFunction], RationalFunction]] = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
    "inv": lambda x, y: x.inverse(),
}


def lp_arith(op: str, x: LaurentPoly, y: Optional[LaurentPoly] = None) -> LaurentPoly:
    if op not in _LP_OPS:
        raise ClaspKitError(f"Unknown Laurent polynomial operation '{op}'")
    return _LP_OPS[op](x, y if y is not None else LaurentPoly.zero())


def lp_substitute(x: LaurentPoly, var: str, power: int) -> LaurentPoly:
    return x.substitute(var, power)


def rf_arith(op: str, x: RationalFunction, y: Optional[RationalFunction] = None) -> RationalFunction:
    if op not in _RF_OPS:
        raise ClaspKitError(f"Unknown rational function operation '{op}'")
    return _RF_OPS[op](x, y if y is not None else RationalFunction(1))


# ---- cyclotomic polynomials and numbers ---------------------------------


@lru_cache(maxsize=None)
def _cyclotomic_ring(n: int) -> PolyElement:
    if n < 1:
        raise ClaspKitError(f"Cyclotomic index must be positive, got {n}")
    poly = _Q ** n - 1
    for d in divisors(n)[:-1]:
        poly = poly.exquo(_cyclotomic_ring(d))
    return poly


def cyclotomic_poly(n: int) -> LaurentPoly:
    """Phi_n in the variable q: (q^n - 1) divided by Phi_d for every proper divisor d"""
    return _from_ring(_cyclotomic_ring(n))


def peel_cyclotomic(x: LaurentPoly, n: int) -> Tuple[int, LaurentPoly]:
    """(k, y) with x == Phi_n**k * y and Phi_n not dividing y"""
    if x.is_zero():
        raise ClaspKitError("The zero polynomial has no cyclotomic factorization")
    low, poly = _to_ring(x)
    modulus = _cyclotomic_ring(n)
    count = 0
    while poly.degree() >= modulus.degree():
        quotient, remainder = poly.div(modulus)
        if remainder:
            break
        poly = quotient
        count += 1
    return count, _from_ring(poly, low)


@dataclass(frozen=True)
class CyclotomicNumber:
    """Residue of a polynomial modulo Phi_order, i.e. an element of Q(zeta_order).

    ``coeffs`` has exactly deg Phi_order entries, ascending in zeta.
    """
    order: int
    coeffs: Tuple[Fraction, ...]

    @classmethod
    def from_exponents(cls, order: int, terms: Mapping[int, Scalar]) -> "CyclotomicNumber":
        """Reduce sum(c * zeta**e) using zeta**order == 1 and Phi_order(zeta) == 0"""
        dense: Dict[int, Fraction] = {}
        for e, c in terms.items():
            dense[e % order] = dense.get(e % order, Fraction(0)) + Fraction(c)
        poly = QRing({(e,): QQ(c.numerator, c.denominator) for e, c in dense.items() if c != 0})
        return cls._reduced(order, poly)

    @classmethod
    def _reduced(cls, order: int, poly: PolyElement) -> "CyclotomicNumber":
        modulus = _cyclotomic_ring(order)
        remainder = poly.rem(modulus)
        return cls(order, tuple(
            Fraction(int(c.numerator), int(c.denominator))
            for c in (remainder.get((i,), QQ.zero) for i in range(modulus.degree()))
        ))

    def _poly(self) -> PolyElement:
        return QRing({(i,): QQ(c.numerator, c.denominator) for i, c in enumerate(self.coeffs) if c != 0})

    def _check(self, other: "CyclotomicNumber") -> None:
        if self.order != other.order:
            raise ClaspKitError(f"Cannot combine elements of orders {self.order} and {other.order}")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        self._check(other)
        return CyclotomicNumber(self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        return self + (-other)

    def __mul__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        self._check(other)
        return CyclotomicNumber._reduced(self.order, self._poly() * other._poly())

    def __str__(self) -> str:
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(terms) if terms else "0"


def cyc_eval(x: LaurentPoly, ell: int) -> CyclotomicNumber:
    """Image of x under q -> zeta, zeta a primitive 2*ell-th root of unity"""
    if ell < 1:
        raise ClaspKitError(f"ell must be positive, got {ell}")
    x._require_univariate()
    return CyclotomicNumber.from_exponents(2 * ell, {e[0]: c for e, c in x.items()})


def cyc_eval_rf(x: RationalFunction, ell: int) -> Tuple[CyclotomicNumber, CyclotomicNumber]:
    """Numerator and denominator of a canonical rational function at zeta"""
    return cyc_eval(x.num, ell), cyc_eval(x.den, ell)
