from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rank2roots import (
    EmptyGenerators,
    IndexSets,
    PreconditionFailed,
    Progression,
    RealRoot,
    System,
    coords,
    delta_membership,
    delta_re_subsystem,
    generator_indices,
    line_roots,
    mirror_line,
    negate,
    phi_classify,
    phi_closure,
    phi_membership,
    scaled_pairing,
    span_contains,
    sublattice_basis,
    subsystem_class,
)

from helpers import GRID6

systems = st.sampled_from([System(a, b) for a, b in GRID6])
roots = st.builds(RealRoot, st.sampled_from(["LL", "LU", "SU", "SL"]), st.integers(-12, 12))
gen_sets = st.lists(roots, min_size=1, max_size=4)


class TestMirrorLines:
    def test_line_assignment(self):
        assert mirror_line(RealRoot("LL", 2)) == ("L", 2)
        assert mirror_line(RealRoot("LU", 2)) == ("L", -3)
        assert mirror_line(RealRoot("SU", 0)) == ("S", 0)
        assert mirror_line(RealRoot("SL", 0)) == ("S", -1)

    @given(roots)
    def test_negation_preserves_line(self, r):
        assert mirror_line(r) == mirror_line(negate(r))

    def test_line_roots_positive_first(self):
        assert line_roots("L", 0) == (RealRoot("LL", 0), RealRoot("LU", -1))
        assert line_roots("L", -1) == (RealRoot("LU", 0), RealRoot("LL", -1))
        assert line_roots("S", 2) == (RealRoot("SU", 2), RealRoot("SL", -3))

    def test_generator_indices(self):
        assert generator_indices([RealRoot("LL", 0), RealRoot("LU", 2)]) == ((-3, 0), ())
        assert generator_indices([RealRoot("SU", 1)]) == ((), (1,))
        with pytest.raises(EmptyGenerators):
            generator_indices([])


class TestPhiClosure:
    def test_single_line(self):
        assert phi_closure([RealRoot("LL", 0)]) == IndexSets(Progression(0, 0), None)

    def test_single_orbit(self):
        assert phi_closure([RealRoot("LL", 0), RealRoot("LL", 3)]) == IndexSets(
            Progression(0, 3), None
        )
        assert phi_closure([RealRoot("SU", 1), RealRoot("SU", 5)]) == IndexSets(
            None, Progression(1, 4)
        )

    def test_mixed_orbits(self):
        ix = phi_closure([RealRoot("LL", 1), RealRoot("SU", 0)])
        assert ix == IndexSets(Progression(1, 3), Progression(0, 3))

    def test_full_closure(self):
        ix = phi_closure([RealRoot("LL", 0), RealRoot("SU", 0)])
        assert ix == IndexSets(Progression(0, 1), Progression(0, 1))

    @given(gen_sets)
    def test_generators_are_members(self, gens):
        ix = phi_closure(gens)
        for g in gens:
            assert phi_membership(ix, g)

    def test_progression_membership(self):
        p = Progression(1, 3)
        assert p.contains(1) and p.contains(-2) and p.contains(7)
        assert not p.contains(0)
        single = Progression(4, 0)
        assert single.contains(4) and not single.contains(0)


class TestPhiClassify:
    def test_single_line_type(self, h32):
        pt = phi_classify(h32, phi_closure([RealRoot("LL", 0)]))
        assert pt.kind == "I_L" and pt.r == 0 and pt.d is None
        assert pt.base == (RealRoot("LL", 0),)
        assert pt.cartan == ((2,),)
        assert pt.inner == ((Fraction(3),),)
        assert subsystem_class(pt) == ("finite_A1", None, None)

    def test_long_pair_type(self, h51):
        pt = phi_classify(h51, IndexSets(Progression(0, 2), None))
        assert pt.kind == "II_L" and (pt.r, pt.d) == (0, 2)
        assert pt.base == (RealRoot("LL", 0), RealRoot("LU", 1))
        assert pt.cartan == ((2, -7), (-7, 2))
        assert subsystem_class(pt) == ("hyperbolic", 7, 7)

    def test_short_pair_type(self, h51):
        pt = phi_classify(h51, IndexSets(None, Progression(0, 1)))
        assert pt.kind == "II_S" and (pt.r, pt.d) == (0, 1)
        assert pt.base == (RealRoot("SU", 0), RealRoot("SL", 0))
        assert pt.cartan == ((2, -3), (-3, 2))
        assert subsystem_class(pt) == ("hyperbolic", 3, 3)

    def test_mixed_type(self, h51):
        pt = phi_classify(h51, IndexSets(Progression(1, 3), Progression(0, 3)))
        assert pt.kind == "II_LS" and (pt.r, pt.d) == (1, 1)
        assert pt.base == (RealRoot("LL", 1), RealRoot("SU", 0))
        assert pt.cartan == ((2, -2), (-10, 2))
        assert pt.inner == ((Fraction(10), Fraction(-10)), (Fraction(-10), Fraction(2)))
        assert subsystem_class(pt) == ("hyperbolic", 10, 2)

    def test_affine_classes(self, h22, h41):
        full = IndexSets(Progression(0, 1), Progression(0, 1))
        assert subsystem_class(phi_classify(h22, full)) == ("affine_A1_tilde", 2, 2)
        assert subsystem_class(phi_classify(h41, full)) == ("affine_A2_tilde2", 4, 1)

    def test_rejects_inconsistent_mixed_sets(self, h51):
        with pytest.raises(PreconditionFailed):
            phi_classify(h51, IndexSets(Progression(0, 2), Progression(0, 2)))
        with pytest.raises(PreconditionFailed):
            phi_classify(h51, IndexSets(Progression(1, 3), Progression(1, 3)))
        with pytest.raises(PreconditionFailed):
            phi_classify(h51, IndexSets(None, None))

    @given(systems, gen_sets)
    def test_cartan_matches_pairings(self, s, gens):
        pt = phi_classify(s, phi_closure(gens))
        vecs = [coords(s, r) for r in pt.base]
        for i in range(len(vecs)):
            for j in range(len(vecs)):
                num = 2 * scaled_pairing(s, vecs[i], vecs[j])
                den = scaled_pairing(s, vecs[i], vecs[i])
                assert num % den == 0
                assert pt.cartan[i][j] == num // den
                assert pt.inner[i][j] == Fraction(scaled_pairing(s, vecs[i], vecs[j]), s.b)

    @given(systems, gen_sets)
    def test_base_roots_generate_the_same_closure(self, s, gens):
        pt = phi_classify(s, phi_closure(gens))
        assert phi_closure(pt.base) == phi_closure(gens)


class TestSublattice:
    def test_rank_two_examples(self):
        assert sublattice_basis([(4, 5), (0, 1)]) == ((4, 0), (0, 1))
        assert sublattice_basis([(0, 1), (1, 1)]) == ((1, 0), (0, 1))

    def test_lower_ranks(self):
        assert sublattice_basis([]) == ()
        assert sublattice_basis([(0, 0)]) == ()
        assert sublattice_basis([(2, 4)]) == ((2, 4),)
        assert sublattice_basis([(-2, -4)]) == ((2, 4),)
        assert sublattice_basis([(2, 4), (1, 2)]) == ((1, 2),)
        assert sublattice_basis([(0, -3)]) == ((0, 3),)

    def test_span_contains(self):
        rank1 = sublattice_basis([(1, 2)])
        assert span_contains(rank1, (3, 6))
        assert span_contains(rank1, (0, 0))
        assert not span_contains(rank1, (1, 1))
        vertical = sublattice_basis([(0, 3)])
        assert span_contains(vertical, (0, 6))
        assert not span_contains(vertical, (0, 4))
        assert not span_contains(vertical, (1, 3))
        assert span_contains((), (0, 0))
        assert not span_contains((), (1, 0))

    @given(st.lists(st.tuples(st.integers(-30, 30), st.integers(-30, 30)), max_size=5))
    def test_generators_lie_in_their_span(self, vecs):
        basis = sublattice_basis(vecs)
        for v in vecs:
            assert span_contains(basis, v)
        for u in vecs:
            for v in vecs:
                assert span_contains(basis, (u[0] + v[0], u[1] + v[1]))
                assert span_contains(basis, (u[0] - v[0], u[1] - v[1]))

    @given(st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), max_size=4))
    def test_basis_rows_span_the_same_set(self, vecs):
        basis = sublattice_basis(vecs)
        again = sublattice_basis(list(basis))
        assert again == basis


class TestDeltaRe:
    def test_agrees_with_phi_generically(self, h32):
        gens = [RealRoot("LL", 0), RealRoot("SU", 2)]
        ix, same = delta_re_subsystem(h32, gens)
        assert same is True
        assert ix == phi_closure(gens)

    def test_short_modulus_one_spans_everything(self, h51):
        ix, same = delta_re_subsystem(h51, [RealRoot("SU", 0), RealRoot("SL", 0)])
        assert same is False
        assert ix == IndexSets(Progression(0, 1), Progression(0, 1))

    def test_affine_short_odd_modulus(self, h41):
        ix, same = delta_re_subsystem(h41, [RealRoot("SU", 0), RealRoot("SU", 3)])
        assert same is False
        assert ix == IndexSets(Progression(1, 3), Progression(0, 3))

    def test_affine_short_even_modulus_unchanged(self, h41):
        gens = [RealRoot("SU", 0), RealRoot("SU", 4)]
        ix, same = delta_re_subsystem(h41, gens)
        assert same is True
        assert ix == IndexSets(None, Progression(0, 4))

    def test_hyperbolic_short_modulus_above_one(self, h51):
        gens = [RealRoot("SU", 0), RealRoot("SU", 2)]
        ix, same = delta_re_subsystem(h51, gens)
        assert same is True
        assert ix == IndexSets(None, Progression(0, 2))


class TestDeltaMembership:
    def test_full_span_membership(self, h51):
        gens = [RealRoot("SU", 0), RealRoot("SU", 1)]
        assert delta_membership(h51, gens, (1, 0)) is True
        assert delta_membership(h51, gens, (1, 2)) is True
        assert delta_membership(h51, gens, (2, 0)) is False

    def test_restricted_span(self, h51):
        gens = [RealRoot("LL", 0), RealRoot("LU", 1)]
        assert delta_membership(h51, gens, (1, 5)) is False
        assert delta_membership(h51, gens, (11, 15)) is True

    def test_empty_generators(self, h51):
        with pytest.raises(EmptyGenerators):
            delta_membership(h51, [], (1, 0))
