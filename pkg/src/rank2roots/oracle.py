"""Independent brute-force oracles.

Everything here recomputes answers from first principles so the closed-form
modules can be cross-checked against it:

  - coordinates come from Weyl-orbit walks (repeated simple reflections),
    not from the gamma / eta sequences;
  - recognition uses height descent by simple reflections, not coordinate
    inversion;
  - reflection closures iterate the eight index-shift rules to a fixpoint
    over a bounded index window, with the four family windows packed into
    big-integer bitmasks so a pass is a handful of shifts and ors;
  - lattice membership uses gcds of 2x2 determinants against the span's
    index, not an echelon basis.

All oracles are windowed: they see only roots whose family index lies in
[-index_bound, index_bound].
"""

from __future__ import annotations

import threading
from typing import Iterable, NamedTuple

from .errors import EmptyGenerators, InvalidIndex
from .lattice import System, Vec, height, integral_norm, simple_reflection
from .roots import (
    FAMILIES,
    IMAGINARY,
    NOT_ROOT,
    ZERO,
    RealRoot,
    RootClass,
    index_window,
    negate,
)

import math


class BoundedRootSet(NamedTuple):
    system: System
    index_bound: int
    roots: frozenset[RealRoot]


# -- orbit walks -------------------------------------------------------------

_WALKS: dict[tuple[int, int], dict[str, list[Vec]]] = {}
_WALKS_LOCK = threading.Lock()


def _walk(sys: System, orbit: str, pos: int) -> Vec:
    """pos-th vector of the alternating reflection walk along one orbit.

    The long walk starts at (1, 0) and applies s2, s1, s2, ...; the short
    walk starts at (0, 1) and applies s1, s2, s1, ...  Walk position 2j is
    LL_j / SU_j and position 2j + 1 is LU_j / SL_j.
    """
    key = (sys.a, sys.b)
    with _WALKS_LOCK:
        walks = _WALKS.setdefault(key, {"L": [(1, 0)], "S": [(0, 1)]})
        seq = walks[orbit]
        first = 2 if orbit == "L" else 1
        while len(seq) <= pos:
            i = first if len(seq) % 2 == 1 else (3 - first)
            seq.append(simple_reflection(sys, i, seq[-1]))
        return seq[pos]


def walk_coords(sys: System, r: RealRoot) -> Vec:
    """Coordinates of r computed by walking the Weyl orbit."""
    if r.index < 0:
        x, y = walk_coords(sys, negate(r))
        return (-x, -y)
    orbit = "L" if r.family in ("LL", "LU") else "S"
    pos = 2 * r.index + (0 if r.family in ("LL", "SU") else 1)
    return _walk(sys, orbit, pos)


# -- recognition by height descent -------------------------------------------


def _descend(sys: System, u: Vec) -> RootClass:
    """Descend a nonnegative conic vector to a simple root, or fail."""
    w = u
    steps = 0
    while w not in ((1, 0), (0, 1)):
        h = height(w)
        nxt = None
        for i in (1, 2):
            c = simple_reflection(sys, i, w)
            if c[0] >= 0 and c[1] >= 0 and height(c) < h:
                nxt = c
                break
        if nxt is None:
            return NOT_ROOT
        w = nxt
        steps += 1
    half, odd = divmod(steps, 2)
    if w == (1, 0):
        fam = "LU" if odd else "LL"
    else:
        fam = "SL" if odd else "SU"
    return RootClass("real", RealRoot(fam, half))


def brute_classify(sys: System, v: Vec) -> RootClass:
    """Classify v by simple-reflection descent (independent of classify)."""
    if v == (0, 0):
        return ZERO
    n = integral_norm(sys, v)
    if n <= 0:
        return IMAGINARY
    x, y = v
    if n != sys.a and n != sys.b:  # real roots lie on the two norm conics
        return NOT_ROOT
    if x >= 0 and y >= 0:
        return _descend(sys, v)
    if x <= 0 and y <= 0:
        cls = _descend(sys, (-x, -y))
        if cls.kind != "real":
            return cls
        return RootClass("real", negate(cls.root))
    return NOT_ROOT


def brute_root_scan(sys: System, coord_bound: int) -> list[tuple[Vec, RootClass]]:
    """Classify every vector with |x|, |y| <= coord_bound, in (x, y) order."""
    if coord_bound < 0:
        raise InvalidIndex(f"coordinate bound must be >= 0, got {coord_bound}")
    out = []
    for x in range(-coord_bound, coord_bound + 1):
        for y in range(-coord_bound, coord_bound + 1):
            out.append(((x, y), brute_classify(sys, (x, y))))
    return out


# -- windowed reflection closure ----------------------------------------------


def _rev(mask: int, width: int) -> int:
    if mask == 0:
        return 0
    return int(format(mask, f"0{width}b")[::-1], 2)


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def brute_phi_closure(
    sys: System, gens: Iterable[RealRoot], index_bound: int
) -> BoundedRootSet:
    """Fixpoint of negation and all real reflections inside the index window.

    Family windows are bitmasks with bit (index + index_bound); negation is
    a bit reversal and every reflection rule is a plain shift, so each pass
    is a constant number of big-integer operations per known mirror line.
    """
    gens = list(gens)
    if not gens:
        raise EmptyGenerators("at least one generating root is required")
    bnd = index_bound
    width = 2 * bnd + 1
    full = (1 << width) - 1
    mask = {f: 0 for f in FAMILIES}
    for g in gens:
        if -bnd <= g.index <= bnd:
            mask[g.family] |= 1 << (g.index + bnd)

    def shift(m: int, s: int) -> int:
        return ((m << s) if s >= 0 else (m >> -s)) & full

    while True:
        before = dict(mask)
        # negation: -LL_j = LU_{-j-1} reverses and shifts the window
        mask["LU"] |= shift(_rev(mask["LL"], width), -1)
        mask["LL"] |= shift(_rev(mask["LU"], width), -1)
        mask["SL"] |= shift(_rev(mask["SU"], width), -1)
        mask["SU"] |= shift(_rev(mask["SL"], width), -1)
        long_mirrors = {o - bnd for o in _bits(mask["LL"])}
        long_mirrors |= {bnd - 1 - o for o in _bits(mask["LU"])}
        short_mirrors = {o - bnd for o in _bits(mask["SU"])}
        short_mirrors |= {bnd - 1 - o for o in _bits(mask["SL"])}
        for k in long_mirrors:
            mask["LU"] |= shift(mask["LL"], -2 * k - 1)
            mask["LL"] |= shift(mask["LU"], 2 * k + 1)
            mask["SL"] |= shift(mask["SU"], 2 * k)
            mask["SU"] |= shift(mask["SL"], -2 * k)
        for k in short_mirrors:
            mask["SL"] |= shift(mask["SU"], -2 * k - 1)
            mask["SU"] |= shift(mask["SL"], 2 * k + 1)
            mask["LU"] |= shift(mask["LL"], 2 * k)
            mask["LL"] |= shift(mask["LU"], -2 * k)
        if mask == before:
            break
    roots = frozenset(
        RealRoot(f, o - bnd) for f in FAMILIES for o in _bits(mask[f])
    )
    return BoundedRootSet(sys, bnd, roots)


# -- windowed lattice-span subsystem -------------------------------------------


def _det(u: Vec, v: Vec) -> int:
    return u[0] * v[1] - u[1] * v[0]


def brute_delta_re(
    sys: System, gens: Iterable[RealRoot], index_bound: int
) -> BoundedRootSet:
    """Real roots in the window whose coordinates lie in the span of gens.

    Rank-2 spans use the classical index criterion: v belongs to the span
    iff every det(g, v) is divisible by the span's index, the gcd of all
    pairwise generator determinants.  Rank-1 spans reduce to divisibility
    along the primitive direction.
    """
    gens = list(gens)
    if not gens:
        raise EmptyGenerators("at least one generating root is required")
    gv = [walk_coords(sys, g) for g in gens]
    idx = 0
    for i in range(len(gv)):
        for j in range(i + 1, len(gv)):
            idx = math.gcd(idx, _det(gv[i], gv[j]))

    if idx > 0:
        def member(v: Vec) -> bool:
            return all(_det(g, v) % idx == 0 for g in gv)
    else:
        g0 = gv[0]
        c = math.gcd(g0[0], g0[1])
        prim = (g0[0] // c, g0[1] // c)
        ts = []
        for g in gv:
            ts.append(g[0] // prim[0] if prim[0] else g[1] // prim[1])
        t_gcd = math.gcd(*ts)

        def member(v: Vec) -> bool:
            if _det(prim, v) != 0:
                return False
            t = v[0] // prim[0] if prim[0] else v[1] // prim[1]
            return (prim[0] * t, prim[1] * t) == v and t % t_gcd == 0

    roots = frozenset(
        r for r in index_window(index_bound) if member(walk_coords(sys, r))
    )
    return BoundedRootSet(sys, index_bound, roots)


# -- windowed sum table ---------------------------------------------------------


def brute_sum_table(
    sys: System, index_bound: int
) -> list[tuple[RealRoot, RealRoot, RealRoot]]:
    """All unordered real-sum pairs in the window, found by descent.

    Mirrors the window and ordering of real_sum_pairs but shares none of
    its machinery: walk coordinates plus brute_classify.
    """
    window = index_window(index_bound)
    cvec = [walk_coords(sys, r) for r in window]
    out = []
    for i in range(len(window)):
        xi, yi = cvec[i]
        for j in range(i, len(window)):
            s = (xi + cvec[j][0], yi + cvec[j][1])
            if s == (0, 0):
                continue
            cls = brute_classify(sys, s)
            if cls.kind == "real":
                out.append((window[i], window[j], cls.root))
    return out


def brute_simple_sum_neighbors(sys: System, i: int, sign: int, index_bound: int) -> list[RealRoot]:
    """Positive window roots gamma with sign*alpha_i + gamma real, by descent."""
    if i not in (1, 2):
        raise InvalidIndex(f"simple root index must be 1 or 2, got {i}")
    if sign not in (1, -1):
        raise InvalidIndex(f"sign must be +1 or -1, got {sign}")
    base = (1, 0) if i == 1 else (0, 1)
    base = (sign * base[0], sign * base[1])
    out = []
    for r in index_window(index_bound):
        if r.index < 0:
            continue
        c = walk_coords(sys, r)
        s = (base[0] + c[0], base[1] + c[1])
        if s == (0, 0):
            continue
        if brute_classify(sys, s).kind == "real":
            out.append(r)
    return out
