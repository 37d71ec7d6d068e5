"""
Text rendering of Laurent polynomials and rational functions.
"""
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from sympy import divisors, totient

from claspkit.exact_arith import LaurentPoly, RationalFunction, peel_cyclotomic
from claspkit.qnum import qint


def format_lp(x: LaurentPoly) -> str:
    return str(x)


@lru_cache(maxsize=None)
def _candidates(degree: int) -> Tuple[int, ...]:
    """Every d with deg Phi_d = totient(d) <= degree; totient(d) >= sqrt(d/2)"""
    return tuple(d for d in range(1, 2 * degree * degree + 3) if totient(d) <= degree)


def _multiplicities(x: LaurentPoly, candidates: Tuple[int, ...]) -> Tuple[Counter, LaurentPoly]:
    counts: Counter = Counter()
    rest = x
    for d in candidates:
        k, rest = peel_cyclotomic(rest, d)
        if k:
            counts[d] = k
    return counts, rest


def bracket_factorization(x: RationalFunction) -> Optional[Tuple[Fraction, List[int], List[int]]]:
    """(c, top, bottom) with x == c * prod [top] / prod [bottom], or None"""
    if x.is_zero():
        return None
    low, high = x.num.q_range()
    num_counts, num_rest = _multiplicities(x.num, _candidates(high - low))
    den_counts, den_rest = _multiplicities(x.den, _candidates(x.den.q_range()[1]))
    if len(num_rest.items()) != 1 or not den_rest.is_constant():
        return None
    net = Counter(num_counts)
    net.subtract(den_counts)

    top: List[int] = []
    bottom: List[int] = []
    for d in range(max(net, default=0), 2, -1):
        power = net[d]
        if power == 0:
            continue
        if d % 2:
            return None
        n = d // 2
        (top if power > 0 else bottom).extend([n] * abs(power))
        # [n] is the product of Phi_e over e | 2n, e >= 3
        for e in divisors(d):
            if e >= 3:
                net[e] -= power
    if net[1] or net[2]:
        return None

    candidate = LaurentPoly.one()
    for n in top:
        candidate = candidate * qint(n)
    divisor = LaurentPoly.one()
    for n in bottom:
        divisor = divisor * qint(n)
    ratio = x / RationalFunction(candidate, divisor)
    if not ratio.is_laurent() or not ratio.num.is_constant():
        return None
    return ratio.num.constant_term(), sorted(top, reverse=True), sorted(bottom, reverse=True)


def _product_text(factors: List[int]) -> str:
    return "".join(f"[{n}]" for n in factors)


def format_rf(x: RationalFunction) -> str:
    """Quantum integer form such as -[2] or [6][5]/([3][2]) when one exists"""
    if x.is_zero():
        return "0"
    found = bracket_factorization(x)
    if found is None:
        return str(x)
    scale, top, bottom = found
    prefix = {1: "", -1: "-"}.get(scale, f"{scale}*")
    if top:
        text = prefix + _product_text(top)
    elif scale in (1, -1):
        text = prefix + "1"
    else:
        text = str(scale)
    if bottom:
        below = _product_text(bottom)
        text += f"/({below})" if len(bottom) > 1 else f"/{below}"
    return text
