import pytest
from hypothesis import given, settings, strategies as st

from rank2roots import (
    FAMILIES,
    InvalidIndex,
    LiteralSyntaxError,
    NotRealRoot,
    RealRoot,
    System,
    classify,
    coords,
    enumerate_imaginary,
    enumerate_real,
    general_reflection,
    index_window,
    integral_norm,
    is_positive_root,
    length_class,
    negate,
    parse_root_literal,
    reflect,
    root_literal,
)

from helpers import GRID6

systems = st.sampled_from([System(a, b) for a, b in GRID6])
families = st.sampled_from(FAMILIES)
roots = st.builds(RealRoot, families, st.integers(-40, 40))


class TestCoords:
    def test_family_coordinates(self, h51, h32):
        assert coords(h51, RealRoot("LL", 0)) == (1, 0)
        assert coords(h51, RealRoot("SU", 0)) == (0, 1)
        assert coords(h51, RealRoot("LU", 0)) == (1, 5)
        assert coords(h51, RealRoot("SL", 0)) == (1, 1)
        assert coords(h51, RealRoot("LL", 1)) == (4, 5)
        assert coords(h51, RealRoot("LU", 1)) == (4, 15)
        assert coords(h51, RealRoot("SU", 1)) == (1, 4)
        assert coords(h51, RealRoot("SL", 1)) == (3, 4)
        assert coords(h32, RealRoot("LL", 1)) == (5, 3)
        assert coords(h32, RealRoot("SU", 1)) == (2, 5)
        assert coords(h32, RealRoot("SL", 0)) == (2, 1)
        assert coords(h32, RealRoot("LU", 0)) == (1, 3)

    def test_unknown_family(self, h51):
        with pytest.raises(InvalidIndex):
            coords(h51, RealRoot("XX", 0))

    @given(systems, roots)
    def test_norm_is_constant_on_families(self, s, r):
        expect = s.a if r.family in ("LL", "LU") else s.b
        assert integral_norm(s, coords(s, r)) == expect

    @given(systems, roots)
    def test_negation(self, s, r):
        n = negate(r)
        c = coords(s, r)
        assert coords(s, n) == (-c[0], -c[1])
        assert negate(n) == r

    def test_negate_example(self):
        assert negate(RealRoot("SU", 2)) == RealRoot("SL", -3)

    @given(systems, roots)
    def test_positivity_is_index_sign(self, s, r):
        c = coords(s, r)
        assert is_positive_root(r) == (c[0] >= 0 and c[1] >= 0)
        assert is_positive_root(r) == (r.index >= 0)

    def test_length_class(self, h51):
        assert length_class(h51, RealRoot("LL", 3)) == "long"
        assert length_class(h51, RealRoot("SL", 3)) == "short"
        sym = System(5, 5)
        assert length_class(sym, RealRoot("SU", 0)) == "long"


class TestClassify:
    def test_frozen_verdicts(self, h51, h32, h41):
        assert classify(h51, (0, 0)).kind == "zero"
        assert classify(h51, (1, 2)).kind == "imaginary"
        assert classify(h51, (2, 0)).kind == "not_root"
        assert classify(h51, (1, -1)).kind == "not_root"
        assert classify(h51, (1, 4)) == ("real", RealRoot("SU", 1))
        assert classify(h32, (-2, -1)) == ("real", RealRoot("SU", -1))
        assert classify(h41, (0, 2)).kind == "not_root"

    @pytest.mark.parametrize("a,b", GRID6)
    def test_round_trip_window(self, a, b):
        s = System(a, b)
        for fam in FAMILIES:
            for j in range(-40, 41):
                r = RealRoot(fam, j)
                assert classify(s, coords(s, r)) == ("real", r)

    @settings(max_examples=150)
    @given(st.sampled_from(FAMILIES), st.integers(-300, 300))
    def test_round_trip_deep(self, fam, j):
        s = System(5, 1)
        r = RealRoot(fam, j)
        assert classify(s, coords(s, r)) == ("real", r)

    @given(systems, st.integers(-60, 60), st.integers(-60, 60))
    def test_real_verdicts_lie_on_conics(self, s, x, y):
        cls = classify(s, (x, y))
        if cls.kind == "real":
            assert integral_norm(s, (x, y)) in (s.a, s.b)
            assert coords(s, cls.root) == (x, y)


class TestReflect:
    def test_frozen_images(self, h51):
        assert reflect(h51, RealRoot("SU", 0), RealRoot("LL", 0)) == RealRoot("LU", 0)
        assert reflect(h51, RealRoot("LL", 1), RealRoot("LL", 0)) == RealRoot("LU", -3)

    @given(systems, roots, roots)
    def test_matches_coordinate_reflection(self, s, m, r):
        image = reflect(s, m, r)
        assert coords(s, image) == general_reflection(s, coords(s, m), coords(s, r))

    @given(systems, roots, roots)
    def test_involution(self, s, m, r):
        assert reflect(s, m, reflect(s, m, r)) == r

    @given(systems, roots)
    def test_mirror_maps_to_own_negative(self, s, m):
        assert reflect(s, m, m) == negate(m)

    @given(systems, roots, roots)
    def test_negated_mirror_acts_identically(self, s, m, r):
        assert reflect(s, negate(m), r) == reflect(s, m, r)


class TestEnumeration:
    def test_enumerate_real_affine(self, h22):
        rs = enumerate_real(h22, 0)
        assert rs == [
            RealRoot("LL", 0),
            RealRoot("SU", 0),
            RealRoot("LU", 0),
            RealRoot("SL", 0),
        ]
        assert [coords(h22, r) for r in rs] == [(1, 0), (0, 1), (1, 2), (2, 1)]

    def test_enumerate_real_sorted_by_height(self, h51):
        rs = enumerate_real(h51, 5)
        hs = [sum(coords(h51, r)) for r in rs]
        assert hs == sorted(hs)
        assert len(rs) == 24

    def test_enumerate_real_bad_bound(self, h51):
        with pytest.raises(InvalidIndex):
            enumerate_real(h51, -1)

    def test_enumerate_imaginary(self, h51, h22):
        assert enumerate_imaginary(h51, 3) == [(1, 2)]
        assert enumerate_imaginary(h22, 2) == [(1, 1)]
        assert enumerate_imaginary(h22, 2, include_negatives=True) == [(1, 1), (-1, -1)]
        with pytest.raises(InvalidIndex):
            enumerate_imaginary(h51, 0)

    def test_index_window(self):
        w = index_window(1)
        assert len(w) == 12
        assert w[0] == RealRoot("LL", -1)
        assert len(set(w)) == 12
        with pytest.raises(InvalidIndex):
            index_window(-1)


class TestLiterals:
    def test_parse_family_form(self, h51):
        assert parse_root_literal(h51, "LL:3") == RealRoot("LL", 3)
        assert parse_root_literal(h51, " SU : -2 ") == RealRoot("SU", -2)

    def test_parse_coordinate_form(self, h51):
        assert parse_root_literal(h51, "4,15") == RealRoot("LU", 1)
        assert parse_root_literal(h51, "-1,-1") == RealRoot("SU", -1)

    def test_rejects_non_roots(self, h51):
        with pytest.raises(NotRealRoot):
            parse_root_literal(h51, "1,2")
        with pytest.raises(NotRealRoot):
            parse_root_literal(h51, "0,0")

    def test_rejects_malformed(self, h51):
        for text in ["XX:1", "LL:x", "1,2,3", "7", "LL", ",", ""]:
            with pytest.raises(LiteralSyntaxError):
                parse_root_literal(h51, text)

    @given(roots)
    def test_literal_round_trip(self, r):
        s = System(5, 1)
        assert parse_root_literal(s, root_literal(r)) == r
