import pytest
from hypothesis import given
from hypothesis import strategies as st

from elimcycle.errors import OrderMismatchError, SetupError, ShapeError
from elimcycle.koszul import (
    PAIR,
    TRIPLE,
    CycleElement,
    complexes_equal,
    koszul_pair,
    koszul_triple,
    matmul,
    truncate,
    verify_complex,
)
from elimcycle.local import FG, GLOBAL, HG, EpsElement, LocalFraction
from elimcycle.ring import Poly, X, Y, Z, parse_poly

from strategies import polys

P = parse_poly


def eps(*coeffs):
    return EpsElement([P(c) if isinstance(c, str) else c for c in coeffs])


def entries(m):
    return [[str(e) for e in row] for row in m]


class TestPair:
    def test_order_zero(self, xyz):
        c = koszul_pair(X, Y, xyz.fg)
        assert c.shape == PAIR and c.prime_tag == FG and c.ring_order == 0
        d2, d1 = c.diffs
        assert entries(d2) == [["y"], ["-x"]]
        assert entries(d1) == [["x", "y"]]
        assert verify_complex(c)

    def test_deformed_component(self, xyz):
        a1 = P("1 + y")
        c = koszul_pair(EpsElement([X, LocalFraction(a1, Z, xyz.fg)]), EpsElement.const(Y, 1), xyz.fg)
        assert c.ring_order == 1
        assert str(c) == "K(x + ((y + 1)/(z))*eps, y)@FG"
        assert verify_complex(c)

    def test_global_L1(self):
        c = koszul_pair(eps("x*z", "1"), eps("y", "0"), GLOBAL)
        assert c.prime_tag == GLOBAL
        assert verify_complex(c)

    def test_incompatible_orders(self):
        with pytest.raises(OrderMismatchError):
            koszul_pair(eps("x", "1"), eps("y"))

    def test_wrong_tag(self, xyz):
        with pytest.raises(ShapeError):
            koszul_pair(EpsElement([X, LocalFraction(Poly.constant(1), Z, xyz.fg)]), eps("y", "0"), HG)

    def test_tampered(self):
        c = koszul_pair(X, Y)
        one = EpsElement.const(Poly.constant(1), 0)
        (d2, d1) = c.diffs
        bad = c.with_diffs((d2, ((d1[0][0], d1[0][1] + one),)))
        assert not verify_complex(bad)

    @given(polys, polys, polys, polys, polys, polys, st.integers(0, 2))
    def test_always_complex(self, a, b, c, d, e, f, j):
        u = EpsElement([a, b, c][: j + 1])
        v = EpsElement([d, e, f][: j + 1])
        assert verify_complex(koszul_pair(u, v))


class TestTriple:
    def test_layout(self):
        c = koszul_triple(X, Y, Z)
        m1, m2, m3 = c.diffs
        assert c.shape == TRIPLE
        assert entries(m1) == [["x"], ["-y"], ["z"]]
        assert entries(m2) == [["0", "-z", "-y"], ["-z", "0", "x"], ["y", "x", "0"]]
        assert entries(m3) == [["x", "y", "z"]]

    def test_compositions_vanish(self):
        m1, m2, m3 = koszul_triple(X, Y, Z).diffs
        assert all(e.is_zero() for row in matmul(m3, m2) for e in row)
        assert all(e.is_zero() for row in matmul(m2, m1) for e in row)

    def test_setup_validated(self):
        with pytest.raises(SetupError):
            koszul_triple(X ** 2, Y, Z)

    def test_curved_setup(self, curved):
        assert verify_complex(koszul_triple(*curved.sequence()))


class TestTruncate:
    def test_L2_to_L1_to_L(self):
        L2 = koszul_pair(eps("x*z", "1 + y", "x"), eps("y", "0", "0"))
        L1 = koszul_pair(eps("x*z", "1 + y"), eps("y", "0"))
        L = koszul_pair(eps("x*z"), eps("y"))
        assert complexes_equal(truncate(L2, 1), L1)
        assert complexes_equal(truncate(L1, 0), L)

    def test_zero_eps_unchanged(self):
        c = koszul_pair(eps("x", "0", "0"), eps("y", "0", "0"))
        t = truncate(c, 1)
        assert [g.coeffs for g in t.gens] == [(X, Poly()), (Y, Poly())]

    def test_bad_target(self):
        c = koszul_pair(eps("x", "1"), eps("y", "0"))
        with pytest.raises(OrderMismatchError):
            truncate(c, 1)
        with pytest.raises(OrderMismatchError):
            truncate(c, -1)

    @given(polys, polys, polys, polys)
    def test_functorial(self, a, b, c, d):
        k = koszul_pair(EpsElement([a, b, c]), EpsElement([d, a, b]))
        assert complexes_equal(truncate(truncate(k, 1), 0), truncate(k, 0))

    @given(polys, polys, polys, polys)
    def test_commutes_with_construction(self, a, b, c, d):
        u, v = EpsElement([a, b, c]), EpsElement([d, c, a])
        assert complexes_equal(truncate(koszul_pair(u, v), 1),
                               koszul_pair(u.truncate(1), v.truncate(1)))


class TestEqual:
    def test_reflexive(self):
        c = koszul_pair(eps("x*z", "1"), eps("y", "0"))
        assert complexes_equal(c, c)

    def test_cross_multiplied(self, xyz):
        w1 = P("1 + x*y")
        fg = xyz.fg
        a = koszul_pair(EpsElement([LocalFraction(X * Z, Z, fg), LocalFraction(w1, Z, fg)]),
                        EpsElement.const(Y, 1), fg)
        b = koszul_pair(EpsElement([X, LocalFraction(w1, Z, fg)]), EpsElement.const(Y, 1), fg)
        assert complexes_equal(a, b)

    def test_different(self):
        a = koszul_pair(eps("x", "1"), eps("y", "0"))
        b = koszul_pair(eps("x", "2"), eps("y", "0"))
        assert not complexes_equal(a, b)

    def test_shape_mismatch(self, xyz):
        with pytest.raises(ShapeError):
            complexes_equal(koszul_pair(X, Y), koszul_pair(X, Y, xyz.fg))
        with pytest.raises(ShapeError):
            complexes_equal(koszul_pair(X, Y), koszul_pair(eps("x", "0"), eps("y", "0")))


class TestCycleElement:
    def test_one_per_prime(self, xyz):
        c = koszul_pair(X, Y, xyz.fg)
        with pytest.raises(ShapeError):
            CycleElement.of(c, c)

    def test_shared_order(self, xyz):
        a = koszul_pair(X, Y, xyz.fg)
        b = koszul_pair(eps("z", "0"), eps("y", "0"), xyz.hg)
        with pytest.raises(OrderMismatchError):
            CycleElement.of(a, b)

    def test_lookup_and_truncate(self, xyz):
        a = koszul_pair(eps("x", "1"), eps("y", "0"), xyz.fg)
        b = koszul_pair(eps("z", "1"), eps("y", "0"), xyz.hg)
        cyc = CycleElement.of(a, b)
        assert cyc[HG] is b
        assert cyc.truncate(0).ring_order == 0
        with pytest.raises(KeyError):
            cyc[GLOBAL]
