"""Root subsystems generated by sets of real roots.

Each real root lives on a "mirror line": LL_j and LU_{-j-1} = -LL_j share
the long line j, while SU_j and SL_{-j-1} = -SU_j share the short line j.
Reflections act on line indices by pure shifts, so the reflection closure
(the Phi-subsystem) of any generating set is an arithmetic progression of
lines in each orbit, computable in one shot from gcds:

  - one orbit only: modulus d = gcd of the pairwise index differences;
  - both orbits: modulus g = gcd of the differences together with the
    cross terms 2j + 2k + 1, necessarily odd, with the two residues tied
    by 2 r_L + 2 r_S + 1 == 0 (mod g).

`phi_classify` names the resulting configuration (I_L, I_S, II_L, II_S,
II_LS) and attaches its base pair, Cartan matrix, and inner-product matrix
in closed form.  `delta_re_subsystem` computes the real roots of the
lattice-span subsystem Delta, which coincides with Phi except for two
explicit families of short-generated sets when b = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import EmptyGenerators, PreconditionFailed
from .lattice import System, Vec
from .roots import RealRoot, classify, coords
from .sequences import delta, epsilon


class Progression(NamedTuple):
    """Line-index set r + d*Z (the singleton {r} when d == 0)."""

    r: int
    d: int

    def contains(self, j: int) -> bool:
        if self.d == 0:
            return j == self.r
        return (j - self.r) % self.d == 0


class IndexSets(NamedTuple):
    long: Progression | None
    short: Progression | None


@dataclass(frozen=True)
class PhiType:
    """Classified reflection subsystem: kind, parameters, and matrices.

    kind is one of "I_L", "I_S", "II_L", "II_S", "II_LS".  For the II_LS
    kind, d holds the centering radius D with line modulus 2*D + 1 and
    r is the centered long residue in [-D, D]; for II_L / II_S, d is the
    modulus and r the residue in [0, d); for I kinds d is None and r the
    single line.
    """

    kind: str
    r: int
    d: int | None
    base: tuple[RealRoot, ...]
    cartan: tuple[tuple[int, ...], ...]
    inner: tuple[tuple[Fraction, ...], ...]


class SubsystemClass(NamedTuple):
    kind: str  # "finite_A1" | "affine_A1_tilde" | "affine_A2_tilde2" | "hyperbolic"
    p: int | None
    q: int | None


_LINE_ORBIT = {"LL": "L", "LU": "L", "SU": "S", "SL": "S"}


def mirror_line(r: RealRoot) -> tuple[str, int]:
    """("L"|"S", k): the mirror line of r, shared with its negative."""
    orbit = _LINE_ORBIT[r.family]
    k = r.index if r.family in ("LL", "SU") else -r.index - 1
    return orbit, k


def line_roots(orbit: str, k: int) -> tuple[RealRoot, RealRoot]:
    """The two roots on a mirror line, positive-first when possible."""
    if orbit == "L":
        pair = (RealRoot("LL", k), RealRoot("LU", -k - 1))
    else:
        pair = (RealRoot("SU", k), RealRoot("SL", -k - 1))
    return pair if k >= 0 else (pair[1], pair[0])


def generator_indices(gens: Iterable[RealRoot]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Distinct (long, short) mirror line indices of gens, each sorted."""
    longs: set[int] = set()
    shorts: set[int] = set()
    for g in gens:
        orbit, k = mirror_line(g)
        (longs if orbit == "L" else shorts).add(k)
    if not longs and not shorts:
        raise EmptyGenerators("at least one generating root is required")
    return tuple(sorted(longs)), tuple(sorted(shorts))


def _center(x: int, g: int) -> int:
    """Residue of x mod g shifted into [-(g-1)/2, (g-1)/2] (g odd)."""
    h = (g - 1) // 2
    return (x + h) % g - h


def phi_closure(gens: Iterable[RealRoot]) -> IndexSets:
    """Line-index sets of the reflection closure of gens.

    System independent: reflections move lines by j -> 2k - j within an
    orbit and j -> -j - 2k - 1 across orbits, regardless of (a, b).
    """
    longs, shorts = generator_indices(gens)
    if longs and shorts:
        vals = [x - longs[0] for x in longs] + [x - shorts[0] for x in shorts]
        vals += [2 * j + 2 * k + 1 for j in longs for k in shorts]
        g = math.gcd(*vals)
        return IndexSets(
            Progression(_center(longs[0], g), g),
            Progression(_center(shorts[0], g), g),
        )
    ls = longs or shorts
    d = math.gcd(*[x - ls[0] for x in ls])
    r = ls[0] % d if d > 0 else ls[0]
    p = Progression(r, d)
    return IndexSets(p, None) if longs else IndexSets(None, p)


def phi_membership(ix: IndexSets, r: RealRoot) -> bool:
    orbit, k = mirror_line(r)
    p = ix.long if orbit == "L" else ix.short
    return p is not None and p.contains(k)


def _pair_matrices(
    sys: System, diag: tuple[int, int], off: int
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[Fraction, ...], ...]]:
    """Cartan and inner matrices for a base pair.

    diag gives the scaled norms P(b_i, b_i) / 2 and off = P(b_1, b_2).
    """
    n1, n2 = diag
    cartan = ((2, off // n1), (off // n2, 2))
    inner = (
        (Fraction(2 * n1, sys.b), Fraction(off, sys.b)),
        (Fraction(off, sys.b), Fraction(2 * n2, sys.b)),
    )
    return cartan, inner


def phi_classify(sys: System, ix: IndexSets) -> PhiType:
    """Name a closure configuration and attach base, Cartan, inner matrices."""
    a, b = sys.a, sys.b
    if ix.long is not None and ix.short is not None:
        if ix.long.d != ix.short.d or ix.long.d < 1 or ix.long.d % 2 == 0:
            raise PreconditionFailed("mixed index sets must share one odd modulus")
        g = ix.long.d
        if (2 * ix.long.r + 2 * ix.short.r + 1) % g != 0:
            raise PreconditionFailed("mixed index sets violate the residue relation")
        big_d = (g - 1) // 2
        r = ix.long.r
        base = (RealRoot("LL", r), RealRoot("SU", big_d - r))
        eps = epsilon(sys, big_d)
        cartan, inner = _pair_matrices(sys, (a, b), -a * b * eps)
        return PhiType("II_LS", r, big_d, base, cartan, inner)
    if ix.long is not None:
        p, kind, fam_lo, fam_hi, norm = ix.long, "L", "LL", "LU", a
    elif ix.short is not None:
        p, kind, fam_lo, fam_hi, norm = ix.short, "S", "SU", "SL", b
    else:
        raise PreconditionFailed("index sets are empty")
    if p.d == 0:
        base_root = line_roots(kind, p.r)[0]
        return PhiType(
            "I_" + kind,
            p.r,
            None,
            (base_root,),
            ((2,),),
            ((Fraction(2 * norm, b),),),
        )
    base = (RealRoot(fam_lo, p.r), RealRoot(fam_hi, p.d - p.r - 1))
    dlt = delta(sys, p.d)
    cartan, inner = _pair_matrices(sys, (norm, norm), -norm * dlt)
    return PhiType("II_" + kind, p.r, p.d, base, cartan, inner)


def subsystem_class(pt: PhiType) -> SubsystemClass:
    """Isomorphism class of the subsystem named by pt."""
    if pt.kind in ("I_L", "I_S"):
        return SubsystemClass("finite_A1", None, None)
    p = -pt.cartan[1][0]
    q = -pt.cartan[0][1]
    if p * q == 4:
        return SubsystemClass("affine_A1_tilde" if p == q else "affine_A2_tilde2", p, q)
    return SubsystemClass("hyperbolic", p, q)


# -- lattice spans and the Delta subsystem ----------------------------------


def sublattice_basis(vectors: Iterable[Vec]) -> tuple[Vec, ...]:
    """Row-style echelon basis of the integer span of vectors.

    Returns () for the zero span, ((p, q),) for a rank-1 span (p > 0, or
    p == 0 and q > 0), and ((p, q), (0, s)) with p, s > 0 and 0 <= q < s
    for a rank-2 span.
    """
    row1: Vec | None = None
    s = 0
    for x, y in vectors:
        if x == 0:
            s = math.gcd(s, y)
            continue
        if row1 is None:
            row1 = (x, y) if x > 0 else (-x, -y)
            continue
        p, q = row1
        g = math.gcd(p, x)
        u = p // g
        w = x // g
        # extended gcd coefficients: c1*p + c2*x == g
        c1, c2 = _bezout(p, x)
        row1 = (g, c1 * q + c2 * y)
        s = math.gcd(s, w * q - u * y)
    if row1 is None:
        return ((0, s),) if s else ()
    if s == 0:
        return (row1,)
    s = abs(s)
    return ((row1[0], row1[1] % s), (0, s))


def _bezout(p: int, x: int) -> tuple[int, int]:
    old_r, r = p, x
    old_s, s_ = 1, 0
    old_t, t_ = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s_ = s_, old_s - qt * s_
        old_t, t_ = t_, old_t - qt * t_
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def span_contains(basis: tuple[Vec, ...], v: Vec) -> bool:
    """Whether v lies in the integer span described by a folded basis."""
    x, y = v
    if not basis:
        return v == (0, 0)
    if len(basis) == 1:
        p, q = basis[0]
        if p == 0:
            return x == 0 and y % q == 0
        if x % p != 0:
            return False
        t = x // p
        return y == t * q
    (p, q), (_, s) = basis
    if x % p != 0:
        return False
    t = x // p
    return (y - t * q) % s == 0


def delta_re_subsystem(
    sys: System, gens: Iterable[RealRoot]
) -> tuple[IndexSets, bool]:
    """Real roots of the lattice-span subsystem Delta, as line-index sets.

    Returns (index_sets, same_as_phi).  Delta_re equals the reflection
    closure Phi except for short-generated sets over b = 1: a II_S set with
    modulus 1 spans the whole lattice (Delta_re is everything), and over
    a = 4 a II_S set with odd modulus d = 2e + 1 picks up the long lines
    e - r + d*Z.
    """
    ix = phi_closure(gens)
    if sys.b == 1 and ix.long is None and ix.short is not None:
        d = ix.short.d
        r = ix.short.r
        if d == 1:
            return IndexSets(Progression(0, 1), Progression(0, 1)), False
        if sys.a == 4 and d % 2 == 1:
            e = (d - 1) // 2
            return (
                IndexSets(
                    Progression(_center(e - r, d), d),
                    Progression(_center(r, d), d),
                ),
                False,
            )
    return ix, True


def delta_membership(sys: System, gens: list[RealRoot], v: Vec) -> bool:
    """Whether v is a root (real or imaginary) lying in the span of gens."""
    if not gens:
        raise EmptyGenerators("at least one generating root is required")
    basis = sublattice_basis([coords(sys, g) for g in gens])
    if not span_contains(basis, v):
        return False
    return classify(sys, v).kind in ("real", "imaginary")
