"""
Tensor product combinatorics for the fundamental representations of C2.
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from claspkit.errors import ClaspKitError, NotDominant
from claspkit.exact_arith import LaurentPoly, RationalFunction
from claspkit.qnum import qint
from claspkit.root_data import FUND_WEIGHTS, POSITIVE_ROOTS, RHO, ZERO, Weight, pairing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FundRep:
    """Fundamental representation V(w_index) with its weights"""
    index: int

    def __post_init__(self):
        if self.index not in FUND_WEIGHTS:
            raise ClaspKitError(f"Fundamental representation index must be 1 or 2, got {self.index}")

    @property
    def weights(self) -> Tuple[Weight, ...]:
        return FUND_WEIGHTS[self.index]

    @property
    def highest_weight(self) -> Weight:
        return self.weights[0]


@dataclass(frozen=True)
class WeightWord:
    """Object of the web category: a word in the letters 1 and 2"""
    letters: Tuple[int, ...]

    def __post_init__(self):
        bad = [x for x in self.letters if x not in (1, 2)]
        if bad:
            raise ClaspKitError(f"Word letters must be 1 or 2, got {bad}")

    @classmethod
    def parse(cls, text: str) -> "WeightWord":
        if not text or any(ch not in "12" for ch in text):
            raise ClaspKitError(f"Word '{text}' must be a nonempty string over '1' and '2'")
        return cls(tuple(int(ch) for ch in text))

    @property
    def weight(self) -> Weight:
        return Weight(self.letters.count(1), self.letters.count(2))

    def __str__(self) -> str:
        return "".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class DominantSubsequence:
    entries: Tuple[Weight, ...]

    def partial_sums(self) -> List[Weight]:
        sums, current = [], ZERO
        for mu in self.entries:
            current = current + mu
            sums.append(current)
        return sums

    @property
    def total(self) -> Weight:
        return self.partial_sums()[-1] if self.entries else ZERO


def _require_dominant(lam: Weight) -> None:
    if not lam.is_dominant():
        raise NotDominant(f"{lam} is not dominant")


@lru_cache(maxsize=None)
def s_set(lam: Weight, a: int) -> Tuple[Weight, ...]:
    """Weights mu of V(w_a) with V(lam + mu) a summand of V(lam) x V(w_a)"""
    _require_dominant(lam)
    weights = FundRep(a).weights
    if a == 1:
        return tuple(mu for mu in weights if (lam + mu).is_dominant())
    return tuple(
        mu for mu in weights
        if (mu.is_zero() and lam.a >= 1) or (not mu.is_zero() and (lam + mu).is_dominant())
    )


def weyl_dim(lam: Weight) -> int:
    """(a+1)(b+1)(a+b+2)(a+2b+3)/6"""
    _require_dominant(lam)
    a, b = lam.a, lam.b
    return (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) // 6


@lru_cache(maxsize=None)
def quantum_dim(lam: Weight) -> RationalFunction:
    """Product over positive roots of [(alpha^vee, lam+rho)]_{q^l} / [(alpha^vee, rho)]_{q^l}"""
    _require_dominant(lam)
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for alpha in POSITIVE_ROOTS:
        num = num * qint(pairing(alpha, lam + RHO), alpha.level)
        den = den * qint(pairing(alpha, RHO), alpha.level)
    return RationalFunction(num, den)


def categorical_dim(lam: Weight) -> RationalFunction:
    """Value of the lam-colored circle: (-1)^a times the quantum dimension"""
    dim = quantum_dim(lam)
    return -dim if lam.a % 2 else dim


def tensor_expand(lam: Weight, a: int) -> List[Weight]:
    """Highest weights of the summands of V(lam) x V(w_a), each with multiplicity one"""
    return [lam + mu for mu in s_set(lam, a)]


def hom_multiplicity(mu: Weight, lam: Weight, a: int) -> int:
    """[V(lam) x V(w_a) : V(mu)]"""
    return 1 if mu in tensor_expand(lam, a) else 0


def _walk(word: WeightWord) -> Iterator[Tuple[Weight, ...]]:
    stack: List[Tuple[int, Weight, Tuple[Weight, ...]]] = [(0, ZERO, ())]
    while stack:
        depth, current, entries = stack.pop()
        if depth == len(word.letters):
            yield entries
            continue
        # reversed so that pops come out in ladder order
        for mu in reversed(s_set(current, word.letters[depth])):
            stack.append((depth + 1, current + mu, entries + (mu,)))


def enumerate_E(word: WeightWord, lam: Weight) -> List[DominantSubsequence]:
    """Dominant weight subsequences of word with total weight lam"""
    return [DominantSubsequence(entries) for entries in _walk(word)
            if sum(entries, ZERO) == lam]


def decompose(word: WeightWord) -> Dict[Weight, int]:
    """lam -> [V(word) : V(lam)], sorted by weight"""
    counts = Counter(sum(entries, ZERO) for entries in _walk(word))
    logger.debug("Decomposed %s into %d highest weights", word, len(counts))
    return dict(sorted(counts.items()))


def dim_hom(w: WeightWord, x: WeightWord) -> int:
    left = decompose(w)
    right = decompose(x)
    return sum(count * right.get(lam, 0) for lam, count in left.items())


def all_words(max_length: int) -> Iterator[WeightWord]:
    for length in range(1, max_length + 1):
        for letters in itertools.product((1, 2), repeat=length):
            yield WeightWord(letters)
