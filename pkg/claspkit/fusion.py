"""
Specialization at q = exp(i pi / ell): negligible tilting modules and the
lowest alcove.
"""
import logging
from dataclasses import dataclass
from typing import List

from claspkit.errors import EllTooSmall, NotDominant
from claspkit.exact_arith import CyclotomicNumber, RationalFunction, cyc_eval
from claspkit.qnum import qint
from claspkit.rep_combinatorics import quantum_dim
from claspkit.root_data import Weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FusionContext:
    """A primitive 2*ell-th root of unity zeta"""
    ell: int

    def __post_init__(self):
        if self.ell <= 4:
            raise EllTooSmall(f"ell must be greater than 4, got {self.ell}")

    @property
    def order(self) -> int:
        return 2 * self.ell

    @property
    def parity(self) -> str:
        return "odd" if self.ell % 2 else "even"

    def evaluate(self, x: RationalFunction) -> CyclotomicNumber:
        """Value of a Laurent polynomial at zeta"""
        return cyc_eval(x.as_laurent(), self.ell)


def quantum_dim_at(lam: Weight, ctx: FusionContext) -> CyclotomicNumber:
    return ctx.evaluate(quantum_dim(lam))


def is_negligible(lam: Weight, ctx: FusionContext) -> bool:
    if not lam.is_dominant():
        raise NotDominant(f"{lam} is not dominant")
    return quantum_dim_at(lam, ctx).is_zero()


def in_lowest_alcove(lam: Weight, ctx: FusionContext) -> bool:
    """Strictly below the wall where quantum dimensions first vanish"""
    if not lam.is_dominant():
        return False
    if ctx.parity == "odd":
        return lam.a + 2 * lam.b + 3 < ctx.ell
    return 2 * (lam.a + lam.b + 2) < ctx.ell


def upper_closure_weights(ctx: FusionContext) -> List[Weight]:
    """Generators of the ideal of negligible objects"""
    if ctx.parity == "odd":
        top = (ctx.ell - 3) // 2
        return [Weight(2 * k, top - k) for k in range(top + 1)]
    top = (ctx.ell - 4) // 2
    return [Weight(k, top - k) for k in range(top + 1)]


def lowest_alcove_interior(ctx: FusionContext) -> List[Weight]:
    """Highest weights of the simple objects of the semisimple quotient"""
    weights = [Weight(a, b) for a in range(ctx.ell - 2) for b in range((ctx.ell - 2) // 2)
               if in_lowest_alcove(Weight(a, b), ctx)]
    return sorted(weights, key=lambda w: (w.a + w.b, w.b))


def check_ell8_identity(ell: int = 8) -> bool:
    """-[6][2]/[3] == -[2]_{q^2} at a primitive 2*ell-th root of unity"""
    circle = RationalFunction(-(qint(6) * qint(2)), qint(3)).as_laurent()
    other = -qint(2, 2)
    holds = cyc_eval(circle, ell) == cyc_eval(other, ell)
    logger.debug("ell=%d circle identity %s", ell, "holds" if holds else "fails")
    return holds
