import random
from fractions import Fraction

import pytest
from hypothesis import given

from elimcycle.boundary import (
    PRINTED_W1,
    W1,
    W2,
    ZERO_VEC,
    boundary_class,
    d1_check,
    d1_image,
    permutation_sign,
    verify_w_diagram,
)
from elimcycle.chern import ChClass, ch_class
from elimcycle.decompose import decompose
from elimcycle.eliminate import build_L
from elimcycle.errors import ScopeError, ShapeError
from elimcycle.koszul import CycleElement, koszul_pair
from elimcycle.local import EpsElement, LocalFraction
from elimcycle.ring import Poly, X, Y, Z, parse_poly
from elimcycle.sampling import random_poly, random_setup_polys, random_unit
from elimcycle.setup import validate_setup

from strategies import polys, units

P = parse_poly
ONE = Poly.constant(1)


def vec(*xs):
    return tuple(Fraction(x) for x in xs)


def mu_y1(s, coeff):
    return koszul_pair(EpsElement([s.f, coeff]), EpsElement.const(s.g, 1), s.fg)


class TestPermutationSign:
    def test_values(self):
        assert permutation_sign(("f", "g", "h")) == 1
        assert permutation_sign(("h", "g", "f")) == -1
        assert permutation_sign(("g", "h", "f")) == 1
        assert permutation_sign(("g", "f", "h")) == -1


class TestBoundaryClass:
    def test_alpha(self, xyz):
        ch = ChClass("FG", (X, Y), ((LocalFraction(ONE, Z, xyz.fg), Y),))
        bc = boundary_class(ch, xyz)
        assert bc.vectors == (vec(0, 1, 0),)
        assert bc.sign == 1 and bc.ordering == ("f", "g", "h")

    def test_beta(self, xyz):
        ch = ChClass("HG", (Z, Y), ((LocalFraction(ONE, X, xyz.hg), Y),))
        bc = boundary_class(ch, xyz)
        assert bc.vectors == (vec(0, -1, 0),)
        assert bc.sign == -1 and bc.ordering == ("h", "g", "f")

    def test_unit_denominator_dies(self, xyz):
        f1 = LocalFraction(P("y + z^2"), P("1 + x"), xyz.fg)
        bc = boundary_class(ChClass("FG", (X, Y), ((f1, Y),)), xyz)
        assert bc.vectors == (ZERO_VEC,)
        assert "z" in bc.cleared[0]

    def test_residual_unit_scales(self, xyz):
        f1 = LocalFraction(P("3 + x"), P("2*z + z*y"), xyz.fg)
        bc = boundary_class(ChClass("FG", (X, Y), ((f1, Y),)), xyz)
        assert bc.vectors == (vec(0, Fraction(3, 2), 0),)

    def test_nonlinear_g(self, curved):
        f, g, h = curved.sequence()
        g2 = validate_setup(f, P("y + x*z + z"), h)
        ch = ch_class(mu_y1(g2, LocalFraction(ONE, h, g2.fg)))
        assert boundary_class(ch, g2).vectors == (vec(0, 1, 1),)

    def test_higher_power_needs_flag(self, xyz):
        ch = ChClass("FG", (X, Y), ((LocalFraction(ONE, Z ** 2, xyz.fg), Y),))
        with pytest.raises(ScopeError):
            boundary_class(ch, xyz)
        bc = boundary_class(ch, xyz, allow_higher_power=True)
        assert bc.experimental
        # the numerator picks up z, so the class vanishes at the origin
        assert bc.vectors == (ZERO_VEC,)

    def test_bad_denominator(self, xyz):
        ch = ChClass("FG", (X, Y), ((LocalFraction(ONE, Z + Y * Y * Z + X, xyz.fg), Y),))
        with pytest.raises(ScopeError):
            boundary_class(ch, xyz)

    def test_pair_outside_sequence(self, xyz):
        with pytest.raises(ShapeError):
            boundary_class(ChClass("FG", (X + Y, Y), ()), xyz)

    @given(polys, units)
    def test_antisymmetry(self, a, u):
        s = validate_setup(X, Y, Z)
        swapped = validate_setup(Y, X, Z)
        # the same form at the same prime, read against (g, f, h): one transposition
        coeff = LocalFraction(a, u * Z, s.fg)
        v1 = boundary_class(ChClass("FG", (X, Y), ((coeff, Y),)), s).vectors
        v2 = boundary_class(ChClass("FG", (X, Y), ((coeff.relocalize(swapped.fg), Y),)), swapped).vectors
        assert v2 == tuple(tuple(-c for c in v) for v in v1)


class TestD1:
    def test_L1_cancels(self, xyz):
        parts = decompose(build_L(1, ONE, None, xyz), xyz)
        assert d1_image(parts, xyz) == [ZERO_VEC]
        assert d1_check(parts, xyz)

    def test_standalone_muY1(self, xyz):
        cyc = CycleElement.of(mu_y1(xyz, LocalFraction(ONE, Z, xyz.fg)))
        assert d1_image(cyc, xyz) == [vec(0, 1, 0)]
        assert not d1_check(cyc, xyz)

    def test_order_zero_empty(self, xyz):
        assert d1_image(decompose(koszul_pair(X * Z, Y), xyz), xyz) == []

    def test_L2(self, xyz):
        parts = decompose(build_L(2, P("1 + x"), P("2 - y"), xyz), xyz)
        assert d1_image(parts, xyz) == [ZERO_VEC, ZERO_VEC]

    def test_linearity(self, xyz):
        a = mu_y1(xyz, LocalFraction(P("2"), Z, xyz.fg))
        b = koszul_pair(EpsElement([Z, LocalFraction(P("5"), X, xyz.hg)]), EpsElement.const(Y, 1), xyz.hg)
        total = d1_image(CycleElement.of(a, b), xyz)
        parts = [d1_image(CycleElement.of(c), xyz)[0] for c in (a, b)]
        assert total == [tuple(p + q for p, q in zip(*parts))]

    def test_cancellation_random_setups(self):
        rng = random.Random(7)
        for _ in range(6):
            s = validate_setup(*random_setup_polys(rng))
            w1, w2 = random_poly(rng), random_poly(rng)
            assert d1_check(decompose(build_L(1, w1, None, s), s), s)
            assert d1_check(decompose(build_L(2, w1, w2, s), s), s)

    def test_unit_denominator_random(self, xyz):
        rng = random.Random(8)
        for _ in range(10):
            f1 = LocalFraction(random_poly(rng), random_unit(rng), xyz.fg)
            assert d1_check(CycleElement.of(mu_y1(xyz, f1)), xyz)


class TestLadder:
    def test_xyz(self, xyz):
        assert verify_w_diagram(xyz)

    def test_curved(self, curved):
        assert verify_w_diagram(curved)

    def test_identity_w2_fails(self, xyz):
        assert not verify_w_diagram(xyz, w2=((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def test_printed_w1_does_not_commute(self, xyz):
        assert PRINTED_W1 != W1
        assert not verify_w_diagram(xyz, w1=PRINTED_W1, w2=W2)

    def test_random_setups(self):
        rng = random.Random(9)
        for _ in range(5):
            assert verify_w_diagram(validate_setup(*random_setup_polys(rng)))
