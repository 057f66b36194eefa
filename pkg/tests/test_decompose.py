import random

import pytest
from hypothesis import given

from elimcycle.decompose import decompose, divide_by_unit, recompose_check
from elimcycle.eliminate import build_L
from elimcycle.errors import LocalizationError, ShapeError
from elimcycle.koszul import (
    CycleElement,
    complexes_equal,
    koszul_pair,
    truncate,
    verify_complex,
)
from elimcycle.local import FG, HG, EpsElement, LocalFraction
from elimcycle.ring import Poly, X, Y, Z, parse_poly
from elimcycle.sampling import random_poly, random_setup_polys
from elimcycle.setup import validate_setup

from strategies import polys

P = parse_poly


class TestDecompose:
    def test_order_zero(self, xyz):
        L = koszul_pair(X * Z, Y)
        parts = decompose(L, xyz)
        assert complexes_equal(parts[FG], koszul_pair(X, Y, xyz.fg))
        assert complexes_equal(parts[HG], koszul_pair(Z, Y, xyz.hg))
        assert recompose_check(parts, L, xyz)

    def test_first_order_components(self, xyz):
        a1 = P("1 + y^2")
        parts = decompose(build_L(1, a1, None, xyz), xyz)
        want_y = koszul_pair(EpsElement([X, LocalFraction(a1, Z, xyz.fg)]), EpsElement.const(Y, 1), xyz.fg)
        want_z = koszul_pair(EpsElement([Z, LocalFraction(a1, X, xyz.hg)]), EpsElement.const(Y, 1), xyz.hg)
        assert complexes_equal(parts[FG], want_y)
        assert complexes_equal(parts[HG], want_z)

    def test_second_order_components(self, curved):
        a1, a2 = P("x - 2"), P("y*z + 1")
        f, g, h = curved.sequence()
        parts = decompose(build_L(2, a1, a2, curved), curved)
        y_gen = parts[FG].gens[0]
        z_gen = parts[HG].gens[0]
        assert y_gen.coeffs[2] == LocalFraction(a2, h, curved.fg)
        assert z_gen.coeffs[2] == LocalFraction(a2, f, curved.hg)
        assert y_gen.coeffs[0] == f and z_gen.coeffs[0] == h

    def test_recompose_simple(self, xyz):
        L = koszul_pair(EpsElement([X * Z, Poly.constant(1)]), EpsElement.const(Y, 1))
        assert recompose_check(decompose(L, xyz), L, xyz)

    def test_recompose_detects_perturbation(self, xyz):
        L = build_L(1, Poly.constant(1), None, xyz)
        parts = decompose(L, xyz)
        one = EpsElement([Poly(), Poly.constant(1)]).localize(xyz.fg)
        bad_y = koszul_pair(parts[FG].gens[0] + one, parts[FG].gens[1], xyz.fg)
        bad = CycleElement.of(bad_y, parts[HG])
        assert not recompose_check(bad, L, xyz)

    def test_rejects_wrong_shape(self, xyz):
        with pytest.raises(ShapeError):
            decompose(koszul_pair(X * Y, Z), xyz)
        with pytest.raises(ShapeError):
            decompose(koszul_pair(EpsElement([X * Z, Poly()]), EpsElement([Y, X])), xyz)

    def test_divide_by_unit(self, xyz):
        q = EpsElement([X * Z, P("1 + y")])
        out = divide_by_unit(q, Z, xyz.fg)
        assert out.coeffs[0].den == Poly.constant(1)
        assert out == EpsElement([X, LocalFraction(P("1 + y"), Z, xyz.fg)])
        with pytest.raises(LocalizationError):
            divide_by_unit(q, X, xyz.fg)

    @given(polys, polys)
    def test_recompose_random(self, w1, w2):
        s = validate_setup(P("x + y^2"), Y, P("z + x^2"))
        for L in (build_L(1, w1, None, s), build_L(2, w1, w2, s)):
            parts = decompose(L, s)
            assert recompose_check(parts, L, s)
            assert verify_complex(parts[FG]) and verify_complex(parts[HG])

    @given(polys, polys)
    def test_commutes_with_truncate(self, w1, w2):
        s = validate_setup(X, Y, Z)
        L2 = build_L(2, w1, w2, s)
        direct = decompose(truncate(L2, 1), s)
        via = decompose(L2, s).truncate(1)
        for tag in (FG, HG):
            assert complexes_equal(direct[tag], via[tag])

    def test_random_setups(self):
        rng = random.Random(3)
        for _ in range(5):
            s = validate_setup(*random_setup_polys(rng))
            L = build_L(2, random_poly(rng), random_poly(rng), s)
            assert recompose_check(decompose(L, s), L, s)
