"""Decision procedures for sums of two real roots.

The central dichotomy: for a >= b > 1 the sum of two real roots is never a
real root, while for b = 1 (a >= 4) the real sums are exactly the ones built
from the simple roots and a short list of neighbors.  `real_sum_pairs`
enumerates every unordered real-sum pair inside an index window, and the
rule-checkers encode the two structural facts that hold whenever alpha + beta
is real: the length of the sum is forced by the lengths of the summands, and
its norm is pinned by their norms.
"""

from __future__ import annotations

from .errors import DegenerateSum, InvalidIndex, PreconditionFailed
from .lattice import System, Vec, integral_norm
from .roots import (
    RealRoot,
    RootClass,
    classify,
    coords,
    index_window,
    length_class,
)


def sum_classify(sys: System, alpha: RealRoot, beta: RealRoot) -> RootClass:
    """Classification of coords(alpha) + coords(beta)."""
    u = coords(sys, alpha)
    v = coords(sys, beta)
    return classify(sys, (u[0] + v[0], u[1] + v[1]))


def simple_sum_neighbors(sys: System, i: int, sign: int) -> list[RealRoot]:
    """Positive real roots gamma with sign * alpha_i + gamma real.

    Empty for a >= b > 1.  For b = 1 the four answer sets are hard-coded:
        alpha_1 + SU_0,  -alpha_1 + SL_0,
        alpha_2 + {LL_0, SU_1},  -alpha_2 + {SL_0, LU_0}.
    These are complete only when a > 4.  In the affine system H(4, 1) the
    true sets are infinite (the gamma gaps are identically 1 there, so for
    instance SL_j - SU_j = alpha_1 for every j) and no finite list can
    represent them; the sums verification suite reports that discrepancy
    against the brute-force scan instead of hiding it.
    """
    if i not in (1, 2):
        raise InvalidIndex(f"simple root index must be 1 or 2, got {i}")
    if sign not in (1, -1):
        raise InvalidIndex(f"sign must be +1 or -1, got {sign}")
    if sys.b > 1:
        return []
    if i == 1:
        return [RealRoot("SU", 0)] if sign == 1 else [RealRoot("SL", 0)]
    if sign == 1:
        return [RealRoot("LL", 0), RealRoot("SU", 1)]
    return [RealRoot("SL", 0), RealRoot("LU", 0)]


def real_sum_pairs(
    sys: System, index_bound: int
) -> list[tuple[RealRoot, RealRoot, RealRoot]]:
    """All unordered pairs within |index| <= index_bound whose sum is real.

    Each entry is (alpha, beta, alpha + beta) with alpha <= beta in the
    deterministic window order.
    """
    window = index_window(index_bound)
    cvec = [coords(sys, r) for r in window]
    out = []
    for i in range(len(window)):
        xi, yi = cvec[i]
        for j in range(i, len(window)):
            s = (xi + cvec[j][0], yi + cvec[j][1])
            if s == (0, 0):
                continue
            cls = classify(sys, s)
            if cls.kind == "real":
                out.append((window[i], window[j], cls.root))
    return out


def sum_length_rule(sys: System, alpha: RealRoot, beta: RealRoot) -> str:
    """Forced length of alpha + beta when it is real.

    short + short -> "long", mixed -> "short", long + long -> "not-real"
    (two long roots never sum to a real root).  Raises DegenerateSum when
    beta = -alpha, since the zero vector has no length.
    """
    u = coords(sys, alpha)
    v = coords(sys, beta)
    if (u[0] + v[0], u[1] + v[1]) == (0, 0):
        raise DegenerateSum(f"{alpha} + {beta} = 0 has no length class")
    la = length_class(sys, alpha)
    lb = length_class(sys, beta)
    if la == "long" and lb == "long":
        return "not-real"
    if la == "short" and lb == "short":
        return "long"
    return "short"


def norm_of_sum_check(sys: System, alpha: RealRoot, beta: RealRoot) -> bool:
    """Verify the norm constraint on a real sum.

    Requires alpha + beta to be a real root (PreconditionFailed otherwise).
    Equal-norm summands: N(alpha + beta) must be a positive integer multiple
    of the common norm.  Unequal: N(alpha + beta) = min of the two norms.
    """
    u = coords(sys, alpha)
    v = coords(sys, beta)
    s = (u[0] + v[0], u[1] + v[1])
    if classify(sys, s).kind != "real":
        raise PreconditionFailed(f"{alpha} + {beta} is not a real root")
    na = integral_norm(sys, u)
    nb = integral_norm(sys, v)
    ns = integral_norm(sys, s)
    if na == nb:
        return ns % na == 0 and ns // na >= 1
    return ns == min(na, nb)


def positive_combinations(
    sys: System, alpha: RealRoot, beta: RealRoot, bound: int
) -> list[tuple[int, int, RealRoot]]:
    """All (m, n) with 1 <= m, n <= bound and m*alpha + n*beta a real root.

    Returned sorted by (m, n) with the canonical form of the combination.
    """
    if bound < 1:
        raise InvalidIndex(f"bound must be >= 1, got {bound}")
    u = coords(sys, alpha)
    v = coords(sys, beta)
    out = []
    for m in range(1, bound + 1):
        for n in range(1, bound + 1):
            w: Vec = (m * u[0] + n * v[0], m * u[1] + n * v[1])
            cls = classify(sys, w)
            if cls.kind == "real":
                out.append((m, n, cls.root))
    return out
