"""Exact lattice arithmetic for the rank-2 Cartan matrices H(a, b).

H(a, b) is the generalized Cartan matrix ((2, -b), (-a, 2)) with a >= b >= 1.
The product ab decides everything: ab < 4 is finite (out of scope here),
ab = 4 is affine, ab >= 5 is hyperbolic.  Root-lattice vectors are plain
integer pairs (x, y) meaning x*alpha1 + y*alpha2, and all arithmetic uses
Python's unbounded integers, so nothing overflows however far out in the
root system a computation reaches.

The symmetrized bilinear form B = ((2a/b, -a), (-a, 2)) is fractional, so
it is stored scaled by b as P = b*B = ((2a, -ab), (-ab, 2b)), which is
integral for every parameter pair.  The integral norm N(v) = P(v, v)/2
takes the value a exactly on the long orbit (the one through alpha1) and
b exactly on the short orbit (through alpha2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidIndex, InvalidParams, NotRealMirror

Vec = tuple[int, int]


@dataclass(frozen=True)
class System:
    """Parameters (a, b) of the Cartan matrix ((2, -b), (-a, 2)).

    Requires a >= b >= 1 and a*b >= 4.  Products below 4 give finite
    systems and are rejected; a < b is rejected rather than silently
    swapped because swapping permutes the simple-root basis.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise InvalidParams(f"parameters must be integers, got ({self.a!r}, {self.b!r})")
        if self.b < 1 or self.a < self.b:
            raise InvalidParams(f"need a >= b >= 1, got (a, b) = ({self.a}, {self.b})")
        if self.a * self.b < 4:
            raise InvalidParams(
                f"a*b = {self.a * self.b} < 4 gives a finite root system, which is out of scope"
            )

    @property
    def product(self) -> int:
        return self.a * self.b

    @property
    def is_affine(self) -> bool:
        return self.product == 4

    @property
    def is_hyperbolic(self) -> bool:
        return self.product > 4

    @property
    def is_symmetric(self) -> bool:
        return self.a == self.b

    def cartan_matrix(self) -> tuple[Vec, Vec]:
        return ((2, -self.b), (-self.a, 2))

    def gram_matrix(self) -> tuple[Vec, Vec]:
        """Scaled form P = b*B; divide entries by b for the textbook form."""
        ab = self.product
        return ((2 * self.a, -ab), (-ab, 2 * self.b))

    def gram_det(self) -> int:
        """det P = 4ab - (ab)^2: positive never, zero iff affine, negative iff hyperbolic."""
        ab = self.product
        return 4 * ab - ab * ab


def integral_norm(sys: System, v: Vec) -> int:
    """N(v) = a*x^2 - ab*x*y + b*y^2, i.e. (b/2)*||v||^2."""
    x, y = v
    return sys.a * x * x - sys.a * sys.b * x * y + sys.b * y * y


def scaled_pairing(sys: System, u: Vec, v: Vec) -> int:
    """P(u, v) = b*(u, v).  Symmetric, bilinear, P(v, v) = 2*N(v)."""
    ab = sys.a * sys.b
    return 2 * sys.a * u[0] * v[0] - ab * (u[0] * v[1] + v[0] * u[1]) + 2 * sys.b * u[1] * v[1]


def is_positive(v: Vec) -> bool:
    return v != (0, 0) and v[0] >= 0 and v[1] >= 0


def is_negative(v: Vec) -> bool:
    return v != (0, 0) and v[0] <= 0 and v[1] <= 0


def height(v: Vec) -> int:
    return v[0] + v[1]


def simple_reflection(sys: System, i: int, v: Vec) -> Vec:
    """Reflection in the i-th simple root: w1(x,y) = (-x+by, y), w2(x,y) = (x, ax-y)."""
    x, y = v
    if i == 1:
        return (-x + sys.b * y, y)
    if i == 2:
        return (x, sys.a * x - y)
    raise InvalidIndex(f"simple reflection index must be 1 or 2, got {i}")


def general_reflection(sys: System, mirror: Vec, v: Vec) -> Vec:
    """Reflect v in the hyperplane of a real mirror: v - (2P(m,v)/P(m,m)) * m.

    The mirror must satisfy N(mirror) in {a, b}.  For genuine real roots the
    coefficient 2P(m,v)/P(m,m) = P(m,v)/N(m) is an exact integer; a conic
    point that is not a Weyl image of a simple root fails the divisibility
    check and is rejected the same way.
    """
    n = integral_norm(sys, mirror)
    if n != sys.a and n != sys.b:
        raise NotRealMirror(f"mirror {mirror} has norm {n}, not in {{{sys.a}, {sys.b}}}")
    p = scaled_pairing(sys, mirror, v)
    if p % n:
        raise NotRealMirror(f"mirror {mirror} lies on the conic but is not a real root")
    c = p // n
    return (v[0] - c * mirror[0], v[1] - c * mirror[1])
