"""Canonical forms for real roots and exact recognition of arbitrary vectors.

Every real root lies on one of four index lines ("families"), two per Weyl
orbit, distinguished by which branch of the norm conic it sits on:

    LL_j = (eta_j,        a*gamma_j)      long,  lower branch
    LU_j = (eta_j,        a*gamma_{j+1})  long,  upper branch
    SU_j = (b*gamma_j,    eta_j)          short, upper branch
    SL_j = (b*gamma_{j+1}, eta_j)         short, lower branch

A root is positive exactly when its index is >= 0, and negation swaps the
two branches of an orbit: -LL_j = LU_{-j-1}, -SU_j = SL_{-j-1}.

`classify` inverts these coordinate forms: it decides Zero / Imaginary /
NotRoot / Real for any lattice vector and, in the Real case, returns the
canonical (family, index) form.  `reflect` composes roots entirely on
indices, using the closed-form action of any real reflection:

    w(LL_k) LL_j = -LL_{2k-j}        w(LL_k) SU_j = -SU_{-2k-j-1}
    w(SU_k) SU_j = -SU_{2k-j}        w(SU_k) LL_j = -LL_{-2k-j-1}

together with the mirror identifications w(LU_m) = w(LL_{-m-1}) and
w(SL_m) = w(SU_{-m-1}).
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import InvalidIndex, LiteralSyntaxError, NotRealRoot
from .lattice import System, Vec, height, integral_norm
from .sequences import eta, gamma

FAMILIES = ("LL", "LU", "SU", "SL")
_NEGATE = {"LL": "LU", "LU": "LL", "SU": "SL", "SL": "SU"}


class RealRoot(NamedTuple):
    family: str
    index: int


class RootClass(NamedTuple):
    """Verdict of classify/sum_classify: kind plus canonical form when real."""

    kind: str  # "zero" | "imaginary" | "not_root" | "real"
    root: RealRoot | None


ZERO = RootClass("zero", None)
IMAGINARY = RootClass("imaginary", None)
NOT_ROOT = RootClass("not_root", None)


def coords(sys: System, r: RealRoot) -> Vec:
    j = r.index
    if r.family == "LL":
        return (eta(sys, j), sys.a * gamma(sys, j))
    if r.family == "LU":
        return (eta(sys, j), sys.a * gamma(sys, j + 1))
    if r.family == "SU":
        return (sys.b * gamma(sys, j), eta(sys, j))
    if r.family == "SL":
        return (sys.b * gamma(sys, j + 1), eta(sys, j))
    raise InvalidIndex(f"unknown family {r.family!r}")


def negate(r: RealRoot) -> RealRoot:
    return RealRoot(_NEGATE[r.family], -r.index - 1)


def length_class(sys: System, r: RealRoot) -> str:
    """"long" or "short"; when a == b both orbits have equal length."""
    if r.family in ("LL", "LU") or sys.a == sys.b:
        return "long"
    return "short"


def is_positive_root(r: RealRoot) -> bool:
    return r.index >= 0


def _eta_index(sys: System, value: int) -> int | None:
    """The unique j >= 0 with eta_j == value, if any (eta increases strictly)."""
    if value < 1:
        return None
    j = 0
    while True:
        e = eta(sys, j)
        if e == value:
            return j
        if e > value:
            return None
        j += 1


def _invert_long(sys: System, u: Vec) -> RealRoot | None:
    j = _eta_index(sys, u[0])
    if j is None:
        return None
    if u[1] == sys.a * gamma(sys, j):
        return RealRoot("LL", j)
    if u[1] == sys.a * gamma(sys, j + 1):
        return RealRoot("LU", j)
    return None


def _invert_short(sys: System, u: Vec) -> RealRoot | None:
    j = _eta_index(sys, u[1])
    if j is None:
        return None
    if u[0] == sys.b * gamma(sys, j):
        return RealRoot("SU", j)
    if u[0] == sys.b * gamma(sys, j + 1):
        return RealRoot("SL", j)
    return None


def classify(sys: System, v: Vec) -> RootClass:
    """Total classification of a lattice vector.

    Zero for the origin; Imaginary iff v != 0 and N(v) <= 0; otherwise the
    canonical real form if one exists, else NotRoot.  Mixed-sign vectors and
    conic points that fail coordinate inversion are NotRoot: lying on
    N(v) = a or b is necessary but not sufficient (e.g. (0, 2) in H(4, 1)).
    """
    if v == (0, 0):
        return ZERO
    n = integral_norm(sys, v)
    if n <= 0:
        return IMAGINARY
    x, y = v
    if x >= 0 and y >= 0:
        u, negated = v, False
    elif x <= 0 and y <= 0:
        u, negated = (-x, -y), True
    else:
        return NOT_ROOT
    root = None
    if n == sys.a:
        root = _invert_long(sys, u)
    if root is None and n == sys.b:
        root = _invert_short(sys, u)
    if root is None:
        return NOT_ROOT
    return RootClass("real", negate(root) if negated else root)


def _mirror_line(r: RealRoot) -> tuple[bool, int]:
    """(is_long, k) such that r's reflection equals the one through LL_k / SU_k."""
    if r.family == "LL":
        return True, r.index
    if r.family == "LU":
        return True, -r.index - 1
    if r.family == "SU":
        return False, r.index
    return False, -r.index - 1


def reflect(sys: System, mirror: RealRoot, target: RealRoot) -> RealRoot:
    """Image of target under the reflection fixing mirror's hyperplane.

    Pure index arithmetic; agrees with general_reflection on coordinates.
    """
    long_m, k = _mirror_line(mirror)
    if target.family in ("LL", "LU"):
        long_t = True
        j, neg = (target.index, False) if target.family == "LL" else (-target.index - 1, True)
    else:
        long_t = False
        j, neg = (target.index, False) if target.family == "SU" else (-target.index - 1, True)
    idx = (j - 2 * k - 1) if long_m == long_t else (2 * k + j)
    res = RealRoot("LU" if long_t else "SL", idx)
    return negate(res) if neg else res


def enumerate_real(sys: System, max_index: int) -> list[RealRoot]:
    """All positive real roots with family index <= max_index, by height."""
    if max_index < 0:
        raise InvalidIndex(f"max_index must be >= 0, got {max_index}")
    seen: set[Vec] = set()
    out: list[tuple[int, int, int, RealRoot]] = []
    for fam in FAMILIES:
        for j in range(max_index + 1):
            r = RealRoot(fam, j)
            c = coords(sys, r)
            if c in seen:  # families are distinct for ab >= 4; guard anyway
                continue
            seen.add(c)
            out.append((height(c), FAMILIES.index(fam), j, r))
    out.sort(key=lambda t: t[:3])
    return [t[3] for t in out]


def enumerate_imaginary(
    sys: System, height_bound: int, include_negatives: bool = False
) -> list[Vec]:
    """Positive imaginary roots of height <= height_bound (negatives on request)."""
    if height_bound < 1:
        raise InvalidIndex(f"height bound must be >= 1, got {height_bound}")
    pos = []
    for h in range(1, height_bound + 1):
        for x in range(h + 1):
            v = (x, h - x)
            if integral_norm(sys, v) <= 0:
                pos.append(v)
    if include_negatives:
        return pos + [(-x, -y) for (x, y) in pos]
    return pos


def index_window(bound: int) -> list[RealRoot]:
    """All real roots with |index| <= bound, in a fixed deterministic order."""
    if bound < 0:
        raise InvalidIndex(f"window bound must be >= 0, got {bound}")
    return [RealRoot(f, j) for f in FAMILIES for j in range(-bound, bound + 1)]


# -- root literals (shared between the CLI and any other text surface) ------


def root_literal(r: RealRoot) -> str:
    return f"{r.family}:{r.index}"


def parse_root_literal(sys: System, text: str) -> RealRoot:
    """Parse "FAMILY:INT" or "X,Y" into a canonical real root.

    Coordinate literals are classified and rejected (NotRealRoot) unless they
    denote a real root; malformed text raises LiteralSyntaxError.
    """
    t = text.strip()
    if ":" in t:
        fam, _, idx = t.partition(":")
        fam = fam.strip()
        if fam not in FAMILIES:
            raise LiteralSyntaxError(f"unknown family {fam!r} in literal {text!r}")
        try:
            return RealRoot(fam, int(idx.strip()))
        except ValueError:
            raise LiteralSyntaxError(f"bad index in literal {text!r}") from None
    if "," in t:
        parts = t.split(",")
        if len(parts) != 2:
            raise LiteralSyntaxError(f"coordinate literal needs exactly two entries: {text!r}")
        try:
            v = (int(parts[0].strip()), int(parts[1].strip()))
        except ValueError:
            raise LiteralSyntaxError(f"bad coordinates in literal {text!r}") from None
        cls = classify(sys, v)
        if cls.kind != "real":
            raise NotRealRoot(f"{v} is not a real root of H({sys.a}, {sys.b}) ({cls.kind})")
        return cls.root  # type: ignore[return-value]
    raise LiteralSyntaxError(f"literal {text!r} matches neither FAMILY:INT nor X,Y")
