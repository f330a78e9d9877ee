"""Cross-verification suites pairing the closed-form modules with oracles.

Each suite runs a batch of independent checks for one system H(a, b) and
reports how many checks ran, whether all passed, and the first
counterexample if any failed.  The point is redundancy: sequence facts are
checked against raw recurrences, recognition against reflection descent,
closures against the bitmask fixpoint, span subsystems against determinant
membership, and printed matrices against freshly computed pairings.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .lattice import System, scaled_pairing
from .oracle import (
    brute_delta_re,
    brute_phi_closure,
    brute_simple_sum_neighbors,
    brute_sum_table,
)
from .roots import FAMILIES, RealRoot, RootClass, coords, length_class
from .sequences import (
    delta,
    div_eta_eta,
    div_eta_gamma,
    div_gamma_eta,
    div_gamma_gamma,
    divrec_identity_check,
    epsilon,
    eta,
    gamma,
)
from .subsystems import (
    IndexSets,
    PhiType,
    Progression,
    delta_re_subsystem,
    phi_classify,
    phi_closure,
    phi_membership,
    sublattice_basis,
    subsystem_class,
)
from .sums import (
    norm_of_sum_check,
    real_sum_pairs,
    simple_sum_neighbors,
    sum_classify,
    sum_length_rule,
)

SUITES = ("staircase", "sums", "divisibility", "subsystems")

FULL_SETS = IndexSets(Progression(0, 1), Progression(0, 1))


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    a: int
    b: int
    checks: int
    ok: bool
    counterexample: str | None


class _Acc:
    """Check counter that keeps the first failing description."""

    def __init__(self) -> None:
        self.checks = 0
        self.fail: str | None = None

    def check(self, cond: bool, msg: str) -> None:
        self.checks += 1
        if not cond and self.fail is None:
            self.fail = msg

    def report(self, suite: str, sys: System) -> SuiteReport:
        return SuiteReport(suite, sys.a, sys.b, self.checks, self.fail is None, self.fail)


def expand_window(ix: IndexSets, index_bound: int) -> frozenset[RealRoot]:
    """All real roots within the index window whose mirror line is in ix."""
    out = set()
    for prog, lo_fam, hi_fam in ((ix.long, "LL", "LU"), (ix.short, "SU", "SL")):
        if prog is None:
            continue
        for j in range(-index_bound - 1, index_bound + 1):
            if not prog.contains(j):
                continue
            if -index_bound <= j <= index_bound:
                out.add(RealRoot(lo_fam, j))
            m = -j - 1
            if -index_bound <= m <= index_bound:
                out.add(RealRoot(hi_fam, m))
    return frozenset(out)


def staircase_suite(sys: System, bound: int) -> SuiteReport:
    """Sequence facts: recurrences, congruences, interleaving, gap growth."""
    acc = _Acc()
    t = sys.product
    for j in range(-bound + 1, bound):
        acc.check(
            gamma(sys, j + 1) == (t - 2) * gamma(sys, j) - gamma(sys, j - 1),
            f"gamma recurrence fails at j={j}",
        )
        acc.check(
            eta(sys, j + 1) == (t - 2) * eta(sys, j) - eta(sys, j - 1),
            f"eta recurrence fails at j={j}",
        )
    for j in range(-bound, bound + 1):
        acc.check(gamma(sys, -j) == -gamma(sys, j), f"gamma negation fails at j={j}")
        acc.check(eta(sys, -j) == -eta(sys, j - 1), f"eta negation fails at j={j}")
        sign = 1 if j % 2 == 0 else -1
        acc.check((eta(sys, j) - sign) % t == 0, f"eta({j}) != (-1)^{j} mod ab")
    for j in range(bound + 1):
        e = eta(sys, j)
        acc.check(math.gcd(sys.a, e) == 1, f"gcd(a, eta({j})) != 1")
        acc.check(math.gcd(sys.b, e) == 1, f"gcd(b, eta({j})) != 1")
        if j:
            acc.check(gamma(sys, j) > gamma(sys, j - 1), f"gamma not increasing at {j}")
            acc.check(eta(sys, j) > eta(sys, j - 1), f"eta not increasing at {j}")
    if sys.b > 1:
        for j in range(bound + 1):
            for c in (sys.a, sys.b):
                acc.check(
                    c * gamma(sys, j) < eta(sys, j) < c * gamma(sys, j + 1),
                    f"interleave {c}*gamma around eta fails at j={j}",
                )
        for j in range(bound):
            acc.check(
                gamma(sys, j + 2) - gamma(sys, j + 1) >= gamma(sys, j + 1) - gamma(sys, j),
                f"gamma gaps decrease at j={j}",
            )
            acc.check(
                eta(sys, j + 2) - eta(sys, j + 1) >= eta(sys, j + 1) - eta(sys, j),
                f"eta gaps decrease at j={j}",
            )
    if sys.b == 1 and sys.a > 4:
        acc.check(eta(sys, 0) == gamma(sys, 1), "eta_0 != gamma_1 with b = 1")
        for j in range(1, bound + 1):
            acc.check(
                gamma(sys, j + 1) < eta(sys, j) < gamma(sys, j + 2),
                f"gamma interleave fails at j={j}",
            )
            acc.check(
                sys.a * gamma(sys, j - 1) < eta(sys, j) < sys.a * gamma(sys, j),
                f"a*gamma interleave fails at j={j}",
            )
    for d in range(1, bound + 1):
        acc.check(delta(sys, d) == eta(sys, d) - eta(sys, d - 1), f"delta({d}) mismatch")
        acc.check(
            epsilon(sys, d) == gamma(sys, d + 1) - gamma(sys, d), f"epsilon({d}) mismatch"
        )
        if d >= 2:
            if t > 4:
                acc.check(delta(sys, d) > delta(sys, d - 1), f"delta not increasing at {d}")
                acc.check(
                    epsilon(sys, d) > epsilon(sys, d - 1), f"epsilon not increasing at {d}"
                )
            else:
                acc.check(delta(sys, d) == 2, f"delta({d}) != 2 in affine case")
                acc.check(epsilon(sys, d) == 1, f"epsilon({d}) != 1 in affine case")
    return acc.report("staircase", sys)


def sums_suite(sys: System, bound: int) -> SuiteReport:
    """Real-sum pairs against the descent oracle, plus length/norm rules."""
    acc = _Acc()
    table = real_sum_pairs(sys, bound)
    brute = brute_sum_table(sys, bound)
    acc.check(
        table == brute,
        f"real_sum_pairs disagrees with oracle ({len(table)} vs {len(brute)} rows)",
    )
    acc.check(
        (len(table) == 0) == (sys.b > 1),
        f"expected {'no' if sys.b > 1 else 'some'} real sums, found {len(table)}",
    )
    for alpha, beta, total in table:
        acc.check(
            sum_classify(sys, alpha, beta) == RootClass("real", total),
            f"sum_classify mismatch at {alpha}+{beta}",
        )
        acc.check(
            sum_length_rule(sys, alpha, beta) == length_class(sys, total),
            f"length rule mismatch at {alpha}+{beta}",
        )
        acc.check(norm_of_sum_check(sys, alpha, beta), f"norm rule fails at {alpha}+{beta}")
    for i in (1, 2):
        for sign in (1, -1):
            ours = set(simple_sum_neighbors(sys, i, sign))
            brute_n = set(brute_simple_sum_neighbors(sys, i, sign, bound))
            acc.check(ours == brute_n, f"neighbor set mismatch for sign={sign} alpha_{i}")
    return acc.report("sums", sys)


def divisibility_suite(sys: System, bound: int) -> SuiteReport:
    """Divisibility predicates against direct big-integer division."""
    acc = _Acc()

    def divides(x: int, y: int) -> bool:
        return y == 0 if x == 0 else y % x == 0

    for d in range(0, 13):
        for j in range(-bound, bound + 1):
            acc.check(
                div_gamma_gamma(sys, d, j) == divides(gamma(sys, d), gamma(sys, j)),
                f"div_gamma_gamma({d}, {j}) wrong",
            )
            acc.check(
                div_eta_gamma(sys, d, j) == divides(eta(sys, d), gamma(sys, j)),
                f"div_eta_gamma({d}, {j}) wrong",
            )
            acc.check(
                div_eta_eta(sys, d, j) == divides(eta(sys, d), eta(sys, j)),
                f"div_eta_eta({d}, {j}) wrong",
            )
            acc.check(
                div_gamma_eta(sys, d, j) == divides(gamma(sys, d), eta(sys, j)),
                f"div_gamma_eta({d}, {j}) wrong",
            )
    for which in (1, 2, 3, 4):
        for d in range(1, 11):
            for j in range(-20, 21):
                acc.check(
                    divrec_identity_check(sys, which, d, j),
                    f"product identity {which} fails at d={d}, j={j}",
                )
    return acc.report("divisibility", sys)


def _random_generators(rng: random.Random, max_gens: int = 4, max_index: int = 12):
    n = rng.randint(1, max_gens)
    return [
        RealRoot(rng.choice(FAMILIES), rng.randint(-max_index, max_index))
        for _ in range(n)
    ]


def _matrices_match_pairings(sys: System, pt: PhiType) -> bool:
    cs = [coords(sys, r) for r in pt.base]
    for i, ci in enumerate(cs):
        for j, cj in enumerate(cs):
            p = scaled_pairing(sys, ci, cj)
            nii = scaled_pairing(sys, ci, ci)
            if 2 * p % nii != 0 or pt.cartan[i][j] != 2 * p // nii:
                return False
            if pt.inner[i][j] != Fraction(p, sys.b):
                return False
    return True


def subsystems_suite(sys: System, bound: int, seed: int, sets: int) -> SuiteReport:
    """Random generating sets: closures, classifications, spans vs oracles."""
    acc = _Acc()
    rng = random.Random(f"{seed}:{sys.a}:{sys.b}")
    # generators must stay inside the comparison window or the brute
    # closure would silently drop their seeds
    max_index = min(12, bound)
    for _ in range(sets):
        gens = _random_generators(rng, max_index=max_index)
        ix = phi_closure(gens)
        ours = expand_window(ix, bound)
        brute = brute_phi_closure(sys, gens, bound).roots
        acc.check(ours == brute, f"phi closure mismatch for gens={gens}")
        for g in gens:
            acc.check(phi_membership(ix, g), f"generator {g} escapes its closure")
        pt = phi_classify(sys, ix)
        acc.check(
            _matrices_match_pairings(sys, pt),
            f"closed-form matrices disagree with pairings for gens={gens}",
        )
        if pt.kind == "II_LS":
            g_mod = ix.long.d
            acc.check(
                (2 * ix.long.r + 2 * ix.short.r + 1) % g_mod == 0,
                f"residue relation fails for gens={gens}",
            )
        dix, same = delta_re_subsystem(sys, gens)
        dours = expand_window(dix, bound)
        dbrute = brute_delta_re(sys, gens, bound).roots
        acc.check(dours == dbrute, f"delta_re mismatch for gens={gens}")
        acc.check(same == (dix == ix), f"same_as_phi flag wrong for gens={gens}")
        basis = sublattice_basis([coords(sys, g) for g in gens])
        if basis == ((1, 0), (0, 1)):
            acc.check(dix == FULL_SETS, f"full span but delta_re not full for gens={gens}")
            all_short = sys.b == 1 and ix == IndexSets(None, Progression(0, 1))
            acc.check(
                ix == FULL_SETS or all_short,
                f"full span but phi neither full nor all-short for gens={gens}",
            )
        cls = subsystem_class(pt)
        if pt.kind.startswith("I_"):
            acc.check(cls.kind == "finite_A1", f"I-type class wrong for gens={gens}")
        else:
            p, q = -pt.cartan[1][0], -pt.cartan[0][1]
            want = (
                "hyperbolic"
                if p * q > 4
                else ("affine_A1_tilde" if p == q else "affine_A2_tilde2")
            )
            acc.check(cls == (want, p, q), f"subsystem class wrong for gens={gens}")
    return acc.report("subsystems", sys)


def grid_systems(ab_max: int, min_b: int = 1) -> list[System]:
    """All systems with b >= min_b and 4 <= a*b <= ab_max, ordered."""
    out = []
    for b in range(min_b, ab_max + 1):
        for a in range(b, ab_max + 1):
            if 4 <= a * b <= ab_max:
                out.append(System(a, b))
    out.sort(key=lambda s: (s.product, s.a))
    return out


def _run_one(task: tuple[str, int, int, int, int, int]) -> SuiteReport:
    suite, a, b, bound, seed, sets = task
    sys = System(a, b)
    if suite == "staircase":
        return staircase_suite(sys, bound)
    if suite == "sums":
        return sums_suite(sys, bound)
    if suite == "divisibility":
        return divisibility_suite(sys, bound)
    if suite == "subsystems":
        return subsystems_suite(sys, bound, seed, sets)
    raise ValueError(f"unknown suite {suite!r}")


def run(
    suites: list[str],
    systems: list[System],
    bound: int,
    seed: int,
    sets: int = 100,
    threads: int = 1,
) -> list[SuiteReport]:
    """Run the requested suites over the systems, optionally in parallel."""
    tasks = [(su, s.a, s.b, bound, seed, sets) for s in systems for su in suites]
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(_run_one, tasks))
    return [_run_one(t) for t in tasks]
