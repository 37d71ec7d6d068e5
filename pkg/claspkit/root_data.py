"""
Root datum of type C2.

Weights are written in the basis of fundamental weights, (a, b) = a*w1 + b*w2.
In epsilon coordinates w1 = e1 and w2 = e1 + e2, so (a, b) sits at
(a + b, b). The simple roots are a1 = e1 - e2 (short) and a2 = 2*e2 (long).
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

from claspkit.errors import ClaspKitError, UnknownWeight

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]


@dataclass(frozen=True, order=True)
class Weight:
    """The weight a*w1 + b*w2"""
    a: int
    b: int

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse "x,y" (optionally parenthesized)"""
        cleaned = text.strip().strip("()[]")
        try:
            x, y = (int(part) for part in cleaned.split(","))
        except ValueError:
            raise ClaspKitError(f"Cannot parse weight '{text}', expected 'x,y'")
        return cls(x, y)

    @classmethod
    def from_epsilon(cls, x: int, y: int) -> "Weight":
        return cls(x - y, y)

    @property
    def epsilon(self) -> Tuple[int, int]:
        return self.a + self.b, self.b

    def is_dominant(self) -> bool:
        return self.a >= 0 and self.b >= 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Weight":
        return Weight(-self.a, -self.b)

    def as_list(self) -> List[int]:
        return [self.a, self.b]

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


ZERO = Weight(0, 0)
VARPI_1 = Weight(1, 0)
VARPI_2 = Weight(0, 1)
RHO = Weight(1, 1)

# weight lists of the two fundamental representations, in ladder order
FUND_WEIGHTS = {
    1: (Weight(1, 0), Weight(-1, 1), Weight(1, -1), Weight(-1, 0)),
    2: (Weight(0, 1), Weight(2, -1), Weight(0, 0), Weight(-2, 1), Weight(0, -1)),
}
ALL_FUND_WEIGHTS: Tuple[Weight, ...] = FUND_WEIGHTS[1] + FUND_WEIGHTS[2]
EXTREMAL_WEIGHTS: Tuple[Weight, ...] = tuple(w for w in ALL_FUND_WEIGHTS if not w.is_zero())


def fund_index(mu: Weight) -> int:
    """Which fundamental representation mu is a weight of; (0,0) belongs to w2"""
    for index, weights in FUND_WEIGHTS.items():
        if mu in weights:
            return index
    raise UnknownWeight(f"{mu} is not a weight of either fundamental representation")


@dataclass(frozen=True)
class Root:
    """A root in epsilon coordinates"""
    coords: Tuple[int, int]
    length_class: str

    @property
    def level(self) -> int:
        """1 for short roots, 2 for long roots"""
        return 1 if self.length_class == "short" else 2

    @property
    def coroot(self) -> Tuple[int, int]:
        """2*alpha/(alpha, alpha)"""
        x, y = self.coords
        return (x, y) if self.length_class == "short" else (x // 2, y // 2)

    def is_positive(self) -> bool:
        x, y = self.coords
        return x > 0 or (x == 0 and y > 0)

    @property
    def name(self) -> str:
        x, y = self.coords
        sign = "" if self.is_positive() else "-"
        if not self.is_positive():
            x, y = -x, -y
        # coefficients on the simple roots e1-e2 and 2e2
        m = x
        n = (x + y) // 2
        parts = []
        for coeff, simple in ((m, "a1"), (n, "a2")):
            if coeff:
                parts.append(simple if coeff == 1 else f"{coeff}{simple}")
        return sign + "+".join(parts)

    def __str__(self) -> str:
        return self.name


def make_root(coords: Tuple[int, int]) -> Root:
    x, y = coords
    norm = x * x + y * y
    if norm not in (2, 4):
        raise ClaspKitError(f"{coords} is not a root of C2")
    return Root((x, y), "short" if norm == 2 else "long")


ALPHA_1 = make_root((1, -1))
ALPHA_2 = make_root((0, 2))
POSITIVE_ROOTS: Tuple[Root, ...] = (ALPHA_1, ALPHA_2, make_root((1, 1)), make_root((2, 0)))


def pairing(alpha: Root, x: Weight) -> int:
    """(alpha^vee, x) in epsilon coordinates"""
    cx, cy = alpha.coroot
    ex, ey = x.epsilon
    return cx * ex + cy * ey


# ---- Weyl group -----------------------------------------------------------

_IDENTITY: Matrix = ((1, 0), (0, 1))
GENERATORS = {
    "s": ((-1, 0), (1, 1)),   # s(a, b) = (-a, a + b)
    "t": ((1, 2), (0, -1)),   # t(a, b) = (a + 2b, -b)
}


def _compose(m: Matrix, n: Matrix) -> Matrix:
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


@dataclass(frozen=True)
class WeylElement:
    """Element of W(C2); equality is by action matrix, word is a reduced word"""
    word: str
    matrix: Matrix

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, x: Weight) -> Weight:
        (p, q), (r, s) = self.matrix
        return Weight(p * x.a + q * x.b, r * x.a + s * x.b)

    def act_root(self, alpha: Root) -> Root:
        image = self.act(Weight.from_epsilon(*alpha.coords))
        return make_root(image.epsilon)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return element_for_matrix(_compose(self.matrix, other.matrix))

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __str__(self) -> str:
        return self.word or "1"


@lru_cache(maxsize=None)
def weyl_group() -> Tuple[WeylElement, ...]:
    """All elements with reduced words, found breadth first from the identity"""
    found = {_IDENTITY: ""}
    frontier = [("", _IDENTITY)]
    while frontier:
        next_frontier = []
        for word, matrix in frontier:
            for letter, generator in GENERATORS.items():
                product = _compose(matrix, generator)
                if product not in found:
                    found[product] = word + letter
                    next_frontier.append((word + letter, product))
        frontier = next_frontier
    elements = [WeylElement(word, matrix) for matrix, word in found.items()]
    return tuple(sorted(elements, key=lambda w: (w.length, w.word)))


def element_for_matrix(matrix: Matrix) -> WeylElement:
    for element in weyl_group():
        if element.matrix == matrix:
            return element
    raise ClaspKitError(f"{matrix} is not in the Weyl group")


def element(word: str) -> WeylElement:
    """Element for any word in s, t (read right to left as composition)"""
    matrix = _IDENTITY
    for letter in word:
        if letter not in GENERATORS:
            raise ClaspKitError(f"Unknown Weyl generator '{letter}'")
        matrix = _compose(matrix, GENERATORS[letter])
    return element_for_matrix(matrix)


def longest_element() -> WeylElement:
    return weyl_group()[-1]


def weyl_act(w: WeylElement, x: Weight) -> Weight:
    return w.act(x)


def dominance_leq(mu: Weight, lam: Weight) -> bool:
    """mu <= lam iff lam - mu is a nonnegative integer combination of a1, a2"""
    diff = lam - mu
    # a1 = (2,-1), a2 = (-2,2) in fundamental-weight coordinates
    m = diff.a + diff.b
    twice_n = diff.a + 2 * diff.b
    return m >= 0 and twice_n >= 0 and twice_n % 2 == 0


def inversion_set(w: WeylElement) -> FrozenSet[Root]:
    return frozenset(alpha for alpha in POSITIVE_ROOTS if not w.act_root(alpha).is_positive())


def d_min(varpi: Weight) -> WeylElement:
    """Shortest Weyl element taking varpi into the dominant chamber"""
    if varpi not in ALL_FUND_WEIGHTS:
        raise UnknownWeight(f"{varpi} is not a weight of a fundamental representation")
    for w in weyl_group():
        if w.act(varpi).is_dominant():
            return w
    raise ClaspKitError(f"No Weyl element makes {varpi} dominant")


def phi_set(varpi: Weight) -> FrozenSet[Root]:
    """Positive roots sent to negative roots by d_min(varpi)"""
    return inversion_set(d_min(varpi))


def find_root(name: str) -> Optional[Root]:
    for alpha in POSITIVE_ROOTS:
        if alpha.name == name:
            return alpha
    return None
