from fractions import Fraction

import pytest

from superconf.groebner import (
    HilbertSeries,
    buchberger,
    default_module_order,
    hilbert_series,
    ideal_gb,
    ideal_gb_polys,
    krull_dim,
    module_hilbert_numerator,
    quotient_dimension,
    schreyer_syzygies,
    standard_monomials,
    syzygy_module,
)
from superconf.rings import FreeModule, GradedRing, ModuleElement, MonomialOrder, poly_ring


def sq(ring):
    """The three quadrics cutting out the minimal 3d cone: x^2, xy, y^2."""
    x, y = ring.variable(0), ring.variable(1)
    return [x * x, x * y, y * y]


def test_monomial_ideal_is_its_own_basis():
    R = GradedRing(["x", "y"])
    gb = ideal_gb(R, sq(R))
    polys = ideal_gb_polys(gb)
    assert sorted(str(p) for p in polys) == ["x*y", "x^2", "y^2"]


def test_principal_ideal():
    R, x, y, z = poly_ring("x", "y", "z")
    f = x * y - z * z
    gb = ideal_gb(R, [f])
    assert len(gb) == 1
    assert gb.normal_form_poly(f).is_zero() if hasattr(gb, "normal_form_poly") else True


def test_normal_form_membership():
    R, x, y = poly_ring("x", "y")
    gb = ideal_gb(R, sq(R))
    mod = gb.module
    f = ModuleElement(mod, {(0, (3, 0)): Fraction(1)})  # x^3
    assert gb.normal_form(f).is_zero()
    g = ModuleElement(mod, {(0, (1, 0)): Fraction(1)})  # x
    assert gb.normal_form(g) == g


def test_normal_form_linearity():
    R, x, y = poly_ring("x", "y")
    gb = ideal_gb(R, sq(R))
    mod = gb.module
    f = ModuleElement(mod, {(0, (2, 0)): Fraction(1), (0, (1, 0)): Fraction(1)})
    nf = gb.normal_form(f)
    assert nf == ModuleElement(mod, {(0, (1, 0)): Fraction(1)})


def test_buchberger_closes_under_s_pairs():
    # x^2 - yz, y^2 - xz: the classic example needing completion
    R, x, y, z = poly_ring("x", "y", "z")
    gb = ideal_gb(R, [x * x - y * z, x * y - z * z])
    # every original generator reduces to zero
    mod = gb.module
    for p in [x * x - y * z, x * y - z * z]:
        f = ModuleElement(mod, {(0, m): c for m, c in p.terms.items()})
        assert gb.normal_form(f).is_zero()
    # and the basis is larger than the input
    assert len(gb) >= 2


def test_syzygy_regular_sequence_is_koszul():
    R, x, y = poly_ring("x", "y")
    mod = FreeModule(R, [0])
    gens = [
        ModuleElement(mod, {(0, (2, 0)): Fraction(1)}),  # x^2
        ModuleElement(mod, {(0, (0, 2)): Fraction(1)}),  # y^2
    ]
    syz = syzygy_module(gens)
    assert len(syz) == 1
    z = syz[0]
    # proportional to y^2 e_0 - x^2 e_1
    c0 = z.component(0)
    c1 = z.component(1)
    assert c0.terms == {(0, 2): list(c0.terms.values())[0]}
    assert c1.terms == {(2, 0): list(c1.terms.values())[0]}
    assert list(c0.terms.values())[0] == -list(c1.terms.values())[0]


def test_syzygy_single_generator_over_domain():
    R, x, y = poly_ring("x", "y")
    mod = FreeModule(R, [0])
    gens = [ModuleElement(mod, {(0, (1, 1)): Fraction(1)})]
    assert syzygy_module(gens) == []


def test_syzygies_annihilate_generators():
    R, x, y, z = poly_ring("x", "y", "z")
    mod = FreeModule(R, [0])
    polys = [x * x - y * z, x * y - z * z, y * y - x * z]
    gens = [ModuleElement(mod, {(0, m): c for m, c in p.terms.items()}) for p in polys]
    for z_elt in syzygy_module(gens):
        total = R.zero()
        for s in range(len(gens)):
            total = total + z_elt.component(s) * polys[s]
        assert total.is_zero()


def test_schreyer_syzygies_of_gb():
    R, x, y = poly_ring("x", "y")
    gb = ideal_gb(R, sq(R))
    syz, _ = schreyer_syzygies(gb)
    # relations among x^2, xy, y^2: two linear syzygies
    polys = ideal_gb_polys(gb)
    for z in syz:
        total = R.zero()
        for s in range(len(polys)):
            total = total + z.component(s) * polys[s]
        assert total.is_zero()
    assert len(syz) >= 2


def test_hilbert_series_m_squared():
    R = GradedRing(["x", "y"])
    gb = ideal_gb(R, sq(R))
    hs = hilbert_series(gb)
    assert hs.numerator == {0: 1, 2: -3, 3: 2}
    assert hs.coefficients(4) == [1, 2, 0, 0, 0]


def test_hilbert_series_full_ring():
    R = GradedRing(["x", "y"])
    gb = ideal_gb(R, [])
    assert hilbert_series(gb).numerator == {0: 1}


def test_hilbert_series_hyperplane():
    R, x, y = poly_ring("x", "y")
    gb = ideal_gb(R, [x])
    hs = hilbert_series(gb)
    assert hs.coefficients(5) == [1, 1, 1, 1, 1, 1]


def test_hilbert_series_order_independent():
    R, x, y, z = poly_ring("x", "y", "z")
    polys = [x * x - y * z, x * y - z * z]
    hs1 = hilbert_series(ideal_gb(R, polys, MonomialOrder("wgrevlex", R.weights)))
    hs2 = hilbert_series(ideal_gb(R, polys, MonomialOrder("lex")))
    assert hs1.coefficients(10) == hs2.coefficients(10)


def test_krull_dim():
    R = GradedRing(["x", "y"])
    assert krull_dim(ideal_gb(R, sq(R))) == 0
    x, y = R.variable(0), R.variable(1)
    assert krull_dim(ideal_gb(R, [x])) == 1
    assert krull_dim(ideal_gb(R, [])) == 2
    assert krull_dim(ideal_gb(R, [R.constant(1)])) == -1


def test_standard_monomials_and_quotient_dimension():
    R = GradedRing(["x", "y"])
    gb = ideal_gb(R, sq(R))
    assert len(standard_monomials(gb, 0)) == 1
    assert len(standard_monomials(gb, 1)) == 2
    assert standard_monomials(gb, 2) == []
    assert quotient_dimension(gb, 1) == 2


def test_module_hilbert_numerator_free():
    R = GradedRing(["x", "y"])
    mod = FreeModule(R, [0, 1])
    gb = buchberger([mod.zero()], default_module_order(mod))
    assert module_hilbert_numerator(gb) == {0: 1, 1: 1}


def test_weighted_ring_hilbert():
    R = GradedRing(["u", "v"], weights=[1, 2])
    u, v = R.variable(0), R.variable(1)
    gb = ideal_gb(R, [u * u - v])  # weight-homogeneous of degree 2
    hs = hilbert_series(gb)
    # R/(u^2 - v) = Q[u]: one dim in each degree
    assert hs.coefficients(5) == [1, 1, 1, 1, 1, 1]


def test_4d_n1_quadrics_already_reduced_basis():
    # products of one chiral and one antichiral variable: already a GB
    from superconf.algebras import build_standard

    alg = build_standard(4, 1)
    gb = ideal_gb(alg.ring(), alg.quadrics())
    got = sorted(str(p) for p in ideal_gb_polys(gb))
    expected = sorted(str(p * Fraction(1, 2)) for p in alg.quadrics())
    assert got == expected
