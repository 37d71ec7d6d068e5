"""
Local intersection forms kappa_{lambda, mu} and clasp expansions.

Each non-dominant weight mu of a fundamental representation has a closed
form (``CLOSED_FORMS``) and a recursion (``RECURSIONS``). A recursion is
written once against a small context interface so the same code runs on
concrete rational functions (``ConcreteContext``) and on symbolic bracket
expressions in generic (a, b) (``SymbolicContext``).
"""
import logging
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple, Union

from claspkit.errors import BadPath, ClaspKitError, CycleDetected, NotDominant, OutOfDomain, UnknownWeight
from claspkit.exact_arith import RationalFunction, cyc_eval, cyc_eval_rf
from claspkit.qnum import QFactor, SymExponent, SymExpr, qint
from claspkit.rep_combinatorics import FundRep, quantum_dim, s_set
from claspkit.root_data import (
    ALL_FUND_WEIGHTS, EXTREMAL_WEIGHTS, RHO, VARPI_1, VARPI_2, ZERO,
    Weight, fund_index, pairing, phi_set,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Factor = Tuple[int, int, int]


@dataclass(frozen=True, order=True)
class KappaKey:
    lam: Weight
    mu: Weight

    def __post_init__(self):
        fund_index(self.mu)

    @property
    def index(self) -> int:
        return fund_index(self.mu)

    def __str__(self) -> str:
        return f"kappa[{self.lam},{self.mu}]"


def in_domain(lam: Weight, mu: Weight) -> bool:
    """True iff mu lies in S_{lam, a}; outside it kappa^-1 is zero by convention"""
    return lam.is_dominant() and mu in s_set(lam, fund_index(mu))


def is_highest(mu: Weight) -> bool:
    return mu in (VARPI_1, VARPI_2)


# ---- closed forms -----------------------------------------------------------

# mu -> (sign, numerator brackets, denominator brackets); a bracket (ca, cb, c0)
# stands for [ca*a + cb*b + c0]
CLOSED_FORMS: Dict[Pair, Tuple[int, Tuple[Factor, ...], Tuple[Factor, ...]]] = {
    (-1, 1): (-1, ((1, 0, 1),), ((1, 0, 0),)),
    (2, -1): (-1, ((0, 2, 2),), ((0, 2, 0),)),
    (0, 0): (1, ((1, 0, 2), (1, 2, 4)), ((0, 0, 2), (1, 0, 0), (1, 2, 2))),
    (1, -1): (1, ((1, 2, 3), (0, 2, 2)), ((1, 2, 2), (0, 2, 0))),
    (-2, 1): (-1, ((1, 0, 1), (2, 2, 4)), ((1, 0, -1), (2, 2, 2))),
    (-1, 0): (-1, ((2, 2, 4), (1, 2, 3), (1, 0, 1)), ((2, 2, 2), (1, 2, 2), (1, 0, 0))),
    (0, -1): (1, ((2, 2, 4), (1, 2, 3), (0, 2, 2)), ((2, 2, 2), (1, 2, 1), (0, 2, 0))),
}


def _brackets(factors: Sequence[Factor]) -> List[QFactor]:
    return [QFactor(SymExponent(*f)) for f in factors]


@lru_cache(maxsize=None)
def closed_form_expr(mu: Weight) -> SymExpr:
    """kappa_{(a,b), mu} as a bracket expression in generic a, b"""
    if is_highest(mu):
        return SymExpr.constant(1)
    fund_index(mu)
    sign, num, den = CLOSED_FORMS[(mu.a, mu.b)]
    return SymExpr.fraction(sign, _brackets(num), _brackets(den))


@lru_cache(maxsize=None)
def kappa_closed(lam: Weight, mu: Weight) -> RationalFunction:
    if not in_domain(lam, mu):
        raise OutOfDomain(f"{mu} is not in S for {lam}; kappa is undefined there")
    return closed_form_expr(mu).evaluate(lam.a, lam.b)


# ---- recursions -------------------------------------------------------------

def _bracket(n: int) -> QFactor:
    return QFactor(SymExponent(0, 0, n))


# constants of the defining relations; looked up at call time
RECURSION_CONSTANTS: Dict[str, SymExpr] = {
    "two": SymExpr.fraction(1, [_bracket(2)]),
    "four_over_two": SymExpr.fraction(1, [_bracket(4)], [_bracket(2)]),
    "five_over_two": SymExpr.fraction(1, [_bracket(5)], [_bracket(2)]),
    "inv_two_squared": SymExpr.fraction(1, [], [_bracket(2), _bracket(2)]),
    "six_two_over_three": SymExpr.fraction(1, [_bracket(6), _bracket(2)], [_bracket(3)]),
    "six_five_over_three_two": SymExpr.fraction(1, [_bracket(6), _bracket(5)], [_bracket(3), _bracket(2)]),
}


def rr_minus_one_one(c):
    return -c.const("two") - c.kinv(-1, 0, (-1, 1))


def rr_two_minus_one(c):
    return -c.const("four_over_two") - c.kinv(0, -1, (2, -1))


def rr_zero_zero(c):
    return (c.const("five_over_two")
            - c.kinv_times(-1, 0, (-1, 1), lambda: c.kappa(-2, 1, (2, -1)))
            - c.kinv(-1, 0, (1, -1)))


def rr_one_minus_one(c):
    return (c.const("five_over_two")
            - c.kinv_times(0, -1, (2, -1), lambda: c.kappa(2, -2, (-1, 1)))
            - c.const("inv_two_squared") * c.kinv(0, -1, (0, 0)))


def rr_minus_one_zero(c):
    return (-c.const("six_two_over_three")
            - c.kinv(-1, 0, (-1, 0))
            - c.kinv_times(-1, 0, (-1, 1), lambda: c.kappa(-2, 1, (1, -1)))
            - c.kinv_times(-1, 0, (1, -1), lambda: c.kappa(0, -1, (-1, 1))))


def rr_minus_two_one(c):
    return (c.const("five_over_two") * c.kappa(-1, 0, (-1, 1))
            - (-c.const("two") - c.kinv(-2, 0, (-1, 1)))
            * c.kinv_times(-1, 0, (-1, 0), lambda: c.kappa(-1, 0, (-1, 1)))
            - c.kinv_times(-2, 0, (-1, 1), lambda: c.kinv(-2, 0, (-1, 1))
                           * c.kinv(-1, 0, (-1, 1)) * c.kappa(-2, 1, (0, 0))))


def rr_zero_minus_one(c):
    return (c.const("six_five_over_three_two")
            - c.kinv(0, -1, (0, -1))
            - c.kinv_times(0, -1, (2, -1), lambda: c.kappa(2, -2, (-2, 1)))
            - c.kinv_times(0, -1, (0, 0), lambda: c.kappa(0, -1, (0, 0)))
            - c.kinv_times(0, -1, (-2, 1), lambda: c.kappa(-2, 0, (2, -1))))


# recursion order; note that (-1,0) is solved before (-2,1)
RECURSIONS: Dict[Pair, Callable] = {
    (-1, 1): rr_minus_one_one,
    (2, -1): rr_two_minus_one,
    (0, 0): rr_zero_zero,
    (1, -1): rr_one_minus_one,
    (-1, 0): rr_minus_one_zero,
    (-2, 1): rr_minus_two_one,
    (0, -1): rr_zero_minus_one,
}
RR_ORDER: Tuple[Weight, ...] = tuple(Weight(*mu) for mu in RECURSIONS)


def recursion_for(which: int) -> Tuple[Weight, Callable]:
    if not 1 <= which <= len(RR_ORDER):
        raise ClaspKitError(f"Recursion number must be between 1 and {len(RR_ORDER)}, got {which}")
    mu = RR_ORDER[which - 1]
    return mu, RECURSIONS[(mu.a, mu.b)]


@lru_cache(maxsize=64)
def _constant_value(expr: SymExpr) -> RationalFunction:
    return expr.evaluate(0, 0)


class SymbolicContext:
    """Evaluates a recursion on closed forms in generic (a, b), all kappa^-1 nonzero"""

    def kappa(self, da: int, db: int, mu: Pair) -> SymExpr:
        return closed_form_expr(Weight(*mu)).shift(da, db)

    def kinv(self, da: int, db: int, mu: Pair) -> SymExpr:
        return self.kappa(da, db, mu).reciprocal()

    def kinv_times(self, da: int, db: int, mu: Pair, thunk: Callable[[], SymExpr]) -> SymExpr:
        return self.kinv(da, db, mu) * thunk()

    def const(self, name: str) -> SymExpr:
        return RECURSION_CONSTANTS[name]


class ConcreteContext:
    """Evaluates a recursion at a fixed dominant weight against a KappaTable"""

    def __init__(self, table: "KappaTable", lam: Weight):
        self.table = table
        self.lam = lam

    def _at(self, da: int, db: int) -> Weight:
        return Weight(self.lam.a + da, self.lam.b + db)

    def kappa(self, da: int, db: int, mu: Pair) -> RationalFunction:
        return self.table.kappa(self._at(da, db), Weight(*mu))

    def kinv(self, da: int, db: int, mu: Pair) -> RationalFunction:
        return self.table.kappa_inv(self._at(da, db), Weight(*mu))

    def kinv_times(self, da: int, db: int, mu: Pair, thunk: Callable[[], RationalFunction]) -> RationalFunction:
        # the thunk may name weights outside the dominant chamber when kappa^-1 is zero
        inverse = self.kinv(da, db, mu)
        if inverse.is_zero():
            return inverse
        return inverse * thunk()

    def const(self, name: str) -> RationalFunction:
        return _constant_value(RECURSION_CONSTANTS[name])


class KappaTable:
    """Memoized kappa values, filled either by recursion or from the closed forms"""

    MODES = ("recursive", "closed")

    def __init__(self, mode: str = "recursive"):
        if mode not in self.MODES:
            raise ClaspKitError(f"Unknown kappa mode '{mode}', expected one of {self.MODES}")
        self.mode = mode
        self.memo: Dict[KappaKey, RationalFunction] = {}
        self._lock = threading.RLock()
        self._in_progress: Set[KappaKey] = set()

    def __len__(self) -> int:
        return len(self.memo)

    def __contains__(self, key: KappaKey) -> bool:
        return key in self.memo

    def items(self) -> List[Tuple[KappaKey, RationalFunction]]:
        with self._lock:
            return sorted(self.memo.items())

    def store(self, key: KappaKey, value: RationalFunction) -> None:
        if not in_domain(key.lam, key.mu):
            raise OutOfDomain(f"Refusing to store {key}: {key.mu} is not in S for {key.lam}")
        with self._lock:
            self.memo[key] = value

    def discard(self, keys: Optional[Sequence[KappaKey]] = None) -> None:
        with self._lock:
            if keys is None:
                self.memo.clear()
            else:
                for key in keys:
                    self.memo.pop(key, None)

    def kappa(self, lam: Weight, mu: Weight) -> RationalFunction:
        key = KappaKey(lam, mu)
        if not in_domain(lam, mu):
            raise OutOfDomain(f"{mu} is not in S for {lam}; kappa is undefined there")
        with self._lock:
            if key in self.memo:
                return self.memo[key]
            if is_highest(mu):
                value = RationalFunction(1)
            elif self.mode == "closed":
                value = kappa_closed(lam, mu)
            else:
                if key in self._in_progress:
                    raise CycleDetected(f"{key} depends on itself")
                self._in_progress.add(key)
                try:
                    value = RECURSIONS[(mu.a, mu.b)](ConcreteContext(self, lam))
                finally:
                    self._in_progress.discard(key)
            self.memo[key] = value
            return value

    def kappa_inv(self, lam: Weight, mu: Weight) -> RationalFunction:
        """Total: zero whenever mu is not in S for lam"""
        if not in_domain(lam, mu):
            return RationalFunction(0)
        return self.kappa(lam, mu).inverse()


def kappa_recursive(key: KappaKey, table: Optional[KappaTable] = None) -> RationalFunction:
    return (table or KappaTable("recursive")).kappa(key.lam, key.mu)


def kappa_inv(key: KappaKey, table: Optional[KappaTable] = None) -> RationalFunction:
    return (table or KappaTable("closed")).kappa_inv(key.lam, key.mu)


def domain_keys(lam: Weight) -> List[KappaKey]:
    """Every in-domain key at lam, in fundamental weight order"""
    return [KappaKey(lam, mu) for index in (1, 2) for mu in s_set(lam, index)]


# ---- product formula ----------------------------------------------------------

# frozen from a comparison with the closed forms at (a, b) = (3, 3)
COROLLARY_SIGNS: Dict[Pair, int] = {
    (1, 0): 1, (0, 1): 1,
    (-1, 1): -1, (2, -1): -1, (-2, 1): -1, (-1, 0): -1,
    (1, -1): 1, (0, -1): 1,
}


def _require_extremal(varpi: Weight) -> None:
    if varpi not in EXTREMAL_WEIGHTS:
        raise UnknownWeight(f"{varpi} is not an extremal weight of a fundamental representation")


def corollary_product(lam: Weight, varpi: Weight) -> Tuple[int, RationalFunction]:
    """(sign, product) with sign * product == kappa_{lam, varpi}"""
    _require_extremal(varpi)
    if not lam.is_dominant():
        raise NotDominant(f"{lam} is not dominant")
    if not (lam + varpi).is_dominant():
        raise OutOfDomain(f"{lam} + {varpi} is not dominant")
    num = RationalFunction(1)
    for alpha in sorted(phi_set(varpi), key=lambda r: r.coords):
        top = pairing(alpha, lam + RHO)
        bottom = pairing(alpha, lam + varpi + RHO)
        if bottom <= 0:
            raise OutOfDomain(f"Pairing of {alpha} with {lam + varpi} + rho is {bottom}")
        num = num * RationalFunction(qint(top, alpha.level), qint(bottom, alpha.level))
    return COROLLARY_SIGNS[(varpi.a, varpi.b)], num


def corollary_expr(varpi: Weight) -> SymExpr:
    """Unsigned product formula as a bracket expression in generic (a, b)"""
    _require_extremal(varpi)
    num, den = [], []
    for alpha in sorted(phi_set(varpi), key=lambda r: r.coords):
        cx, cy = alpha.coroot
        # (alpha^vee, (a,b) + rho) with (a,b) + rho at (a+b+2, b+1)
        form = SymExponent(cx, cx + cy, 2 * cx + cy)
        num.append(QFactor(form, alpha.level))
        den.append(QFactor(form.shift(varpi.a, varpi.b), alpha.level))
    return SymExpr.fraction(1, num, den)


def derive_corollary_signs(point: Weight = Weight(3, 3)) -> Dict[Pair, int]:
    signs = {}
    for varpi in EXTREMAL_WEIGHTS:
        _, product = corollary_product(point, varpi)
        closed = kappa_closed(point, varpi)
        if closed == product:
            signs[(varpi.a, varpi.b)] = 1
        elif closed == -product:
            signs[(varpi.a, varpi.b)] = -1
        else:
            raise ClaspKitError(f"Product formula for {varpi} disagrees with kappa beyond sign at {point}")
    return signs


# ---- clasp expansions -----------------------------------------------------------

@dataclass(frozen=True)
class Correction:
    """One correction term of a triple clasp step"""
    mu: Weight
    kappa: RationalFunction
    kappa_inv: RationalFunction
    child: Weight


@dataclass(frozen=True)
class ExpansionStep:
    weight: Weight
    letter: int
    corrections: Tuple[Correction, ...]

    @property
    def result(self) -> Weight:
        return self.weight + FundRep(self.letter).highest_weight


@dataclass(frozen=True)
class ClaspExpansionCertificate:
    target: Weight
    path: Tuple[int, ...]
    steps: Tuple[ExpansionStep, ...]


@dataclass(frozen=True)
class ExistenceReport:
    target: Weight
    ell: int
    path: Tuple[int, ...]
    exists: bool
    failing_key: Optional[KappaKey] = None
    vanishing: Optional[str] = None
    negligible_steps: Tuple[Weight, ...] = field(default_factory=tuple)


def default_path(target: Weight) -> Tuple[int, ...]:
    return (1,) * target.a + (2,) * target.b


def _check_path(target: Weight, path: Optional[Sequence[int]]) -> Tuple[int, ...]:
    if not target.is_dominant():
        raise NotDominant(f"{target} is not dominant")
    if path is None:
        return default_path(target)
    path = tuple(path)
    if any(letter not in (1, 2) for letter in path):
        raise BadPath(f"Path letters must be 1 or 2, got {list(path)}")
    reached = Weight(path.count(1), path.count(2))
    if reached != target:
        raise BadPath(f"Path {''.join(map(str, path))} reaches {reached}, not {target}")
    return path


def expansion_certificate(target: Weight, path: Optional[Sequence[int]] = None,
                          table: Optional[KappaTable] = None) -> ClaspExpansionCertificate:
    """Every correction of the triple clasp recursion along a path of fundamental weights"""
    path = _check_path(target, path)
    table = table or KappaTable("closed")
    steps = []
    current = ZERO
    for letter in path:
        top = FundRep(letter).highest_weight
        corrections = []
        for mu in s_set(current, letter):
            if mu == top:
                continue
            value = table.kappa(current, mu)
            corrections.append(Correction(mu, value, value.inverse(), current + mu))
        steps.append(ExpansionStep(current, letter, tuple(corrections)))
        current = current + top
    logger.debug("Expansion of %s along %s has %d corrections", target, path,
                 sum(len(s.corrections) for s in steps))
    return ClaspExpansionCertificate(target, path, tuple(steps))


def clasp_exists_at(target: Weight, ell: int, path: Optional[Sequence[int]] = None,
                    table: Optional[KappaTable] = None) -> ExistenceReport:
    """Whether every kappa along the expansion is invertible at q = exp(i pi / ell)"""
    if ell < 1:
        raise ClaspKitError(f"ell must be positive, got {ell}")
    certificate = expansion_certificate(target, path, table)
    failing, vanishing = None, None
    for step in certificate.steps:
        for correction in step.corrections:
            num, den = cyc_eval_rf(correction.kappa, ell)
            if num.is_zero() or den.is_zero():
                failing = KappaKey(step.weight, correction.mu)
                vanishing = "numerator" if num.is_zero() else "denominator"
                break
        if failing:
            break
    visited = [step.result for step in certificate.steps]
    negligible = tuple(w for w in visited if cyc_eval(quantum_dim(w).as_laurent(), ell).is_zero())
    if failing:
        logger.info("Clasp %s does not exist at ell=%d: %s has vanishing %s", target, ell, failing, vanishing)
    return ExistenceReport(target, ell, certificate.path, failing is None, failing, vanishing, negligible)
