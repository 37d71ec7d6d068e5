"""
Verification of the kappa formulas.

Symbolic checks clear denominators and compare polynomials in
Z[A^{+-1}, B^{+-1}, q^{+-1}]; numeric checks compare canonical rational
functions on a grid of dominant weights. The symbolic checks cover the
generic stratum where every kappa^-1 involved is nonzero. The grid covers
the small a, b where some of them vanish.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from claspkit.clasp_engine import (
    COROLLARY_SIGNS, RR_ORDER, KappaTable, SymbolicContext, closed_form_expr,
    corollary_expr, corollary_product, domain_keys, kappa_closed, recursion_for,
)
from claspkit.errors import IdentityFailed
from claspkit.exact_arith import LaurentPoly, RationalFunction
from claspkit.qnum import SymExpr, clear_denominators, qint
from claspkit.root_data import EXTREMAL_WEIGHTS, Weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityCertificate:
    """A cleared polynomial identity lhs == rhs and its outcome"""
    name: str
    mu: Weight
    stratum: str
    lhs: LaurentPoly
    rhs: LaurentPoly
    difference: LaurentPoly
    lhs_expr: str
    rhs_expr: str
    recursion_id: Optional[int] = None

    @property
    def status(self) -> str:
        return "verified" if self.difference.is_zero() else "failed"

    @property
    def ok(self) -> bool:
        return self.difference.is_zero()


def certify(name: str, mu: Weight, lhs: SymExpr, rhs: SymExpr,
            recursion_id: Optional[int] = None) -> IdentityCertificate:
    (left, right), _ = clear_denominators([lhs, rhs])
    return IdentityCertificate(
        name=name, mu=mu, stratum="generic",
        lhs=left, rhs=right, difference=left - right,
        lhs_expr=str(lhs), rhs_expr=str(rhs), recursion_id=recursion_id,
    )


def certify_recursion(which: int) -> IdentityCertificate:
    """Closed form of recursion `which` substituted into both sides"""
    mu, recursion = recursion_for(which)
    rhs = recursion(SymbolicContext())
    return certify(f"rr{which}", mu, closed_form_expr(mu), rhs, recursion_id=which)


def verify_recursion_symbolic(which: int) -> IdentityCertificate:
    certificate = certify_recursion(which)
    if not certificate.ok:
        logger.warning("Recursion %d for %s failed: difference %s", which, certificate.mu, certificate.difference)
        raise IdentityFailed(
            f"Recursion {which} is not solved by the closed form for {certificate.mu}",
            certificate=certificate, difference=certificate.difference,
        )
    return certificate


def certify_all_recursions() -> List[IdentityCertificate]:
    return [certify_recursion(which) for which in range(1, len(RR_ORDER) + 1)]


# ---- grid comparison -------------------------------------------------------

@dataclass(frozen=True)
class KappaMismatch:
    lam: Weight
    mu: Weight
    recursive: RationalFunction
    closed: RationalFunction


@dataclass
class GridReport:
    a_max: int
    b_max: int
    compared: int = 0
    skipped: int = 0
    mismatches: List[KappaMismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def grid_weights(a_max: int, b_max: int) -> List[Weight]:
    """Dominant weights of the box, smallest a + b first so memo fills bottom up"""
    weights = [Weight(a, b) for a in range(a_max + 1) for b in range(b_max + 1)]
    return sorted(weights, key=lambda w: (w.a + w.b, w.a, w.b))


def verify_recursion_numeric(a_max: int, b_max: int, table: Optional[KappaTable] = None) -> GridReport:
    """Recursive against closed kappa for every in-domain key with a <= a_max, b <= b_max"""
    table = table or KappaTable("recursive")
    report = GridReport(a_max, b_max)
    for lam in grid_weights(a_max, b_max):
        keys = domain_keys(lam)
        report.skipped += 9 - len(keys)
        for key in keys:
            recursive = table.kappa(key.lam, key.mu)
            closed = kappa_closed(key.lam, key.mu)
            report.compared += 1
            if recursive != closed:
                report.mismatches.append(KappaMismatch(key.lam, key.mu, recursive, closed))
    logger.info("Compared %d kappa values on a %dx%d grid, %d mismatches",
                report.compared, a_max + 1, b_max + 1, len(report.mismatches))
    return report


# ---- product formula -------------------------------------------------------

@dataclass
class CorollaryCheck:
    varpi: Weight
    sign: int
    checked: int = 0
    mismatches: List[Weight] = field(default_factory=list)
    certificate: Optional[IdentityCertificate] = None

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.certificate is not None and self.certificate.ok


def certify_corollary(varpi: Weight) -> IdentityCertificate:
    sign = COROLLARY_SIGNS[(varpi.a, varpi.b)]
    return certify(f"corollary{varpi}", varpi, closed_form_expr(varpi), corollary_expr(varpi) * sign)


def verify_corollary(a_max: int, b_max: int) -> List[CorollaryCheck]:
    """Signed product formula against the closed forms, on the grid and symbolically"""
    checks = []
    for varpi in EXTREMAL_WEIGHTS:
        check = CorollaryCheck(varpi, COROLLARY_SIGNS[(varpi.a, varpi.b)])
        for lam in grid_weights(a_max, b_max):
            if not (lam + varpi).is_dominant():
                continue
            sign, product = corollary_product(lam, varpi)
            check.checked += 1
            if product * sign != kappa_closed(lam, varpi):
                check.mismatches.append(lam)
        check.certificate = certify_corollary(varpi)
        checks.append(check)
    return checks


def bracket_identity_failures(n_max: int = 20) -> List[int]:
    """n in 1..n_max with [2n] != [2][n]_{q^2}"""
    return [n for n in range(1, n_max + 1) if qint(2 * n) != qint(2) * qint(n, 2)]
