"""Unit tests for reciprocal zeta polynomials and the free-energy limit."""

from math import log, pi

import pytest
import sympy

from cubezeta.algebra import IntPoly
from cubezeta.core.errors import DomainError, InvariantViolation
from cubezeta.core.models import ZetaMethod
from cubezeta.lattice import LatticeSpec
from cubezeta.zeta import (
    Prefactor,
    ZetaInverse,
    apply_prefactors,
    free_energy_check,
    free_energy_limit,
    integrand_vanishes,
    mahler_limit_integral,
    skeleton_constants,
    zeta_codim1,
    zeta_general_d,
    zeta_inverse,
    zeta_top,
    zeta_top_direct,
)

FOUR_CATALAN_OVER_PI = 4 * float(sympy.Catalan.evalf(30)) / pi


class TestSkeletonConstants:
    """Test alpha, beta, gamma and kappa."""

    def test_square_lattice_edges(self):
        """Test the 1-skeleton of the square lattice."""
        c = skeleton_constants(2, 1)
        assert (c.alpha, c.beta, c.gamma, c.kappa) == (3, 1, 1, 1)

    def test_cubic_lattice_faces(self):
        """Test the 2-skeleton of the cubic lattice."""
        c = skeleton_constants(3, 2)
        assert (c.alpha, c.beta, c.gamma, c.kappa) == (3, 3, 0, 6)

    @pytest.mark.parametrize("q,d", [(2, 0), (2, 3), (0, 1)])
    def test_range(self, q, d):
        """Test d outside [1, q] raises DomainError."""
        with pytest.raises(DomainError):
            skeleton_constants(q, d)


class TestPrefactors:
    """Test prefactor arithmetic."""

    def test_positive_and_negative_powers(self):
        """Test positive powers multiply and negative powers divide."""
        core = IntPoly([1, 4, 3])
        result = apply_prefactors(
            core, (Prefactor.one_minus_u(2), Prefactor.one_plus_bu(3, -1))
        )
        assert result == IntPoly([1, 1]) * IntPoly([1, -1]) ** 2

    def test_inexact_division(self):
        """Test a negative power that does not divide."""
        with pytest.raises(InvariantViolation):
            apply_prefactors(IntPoly([1, 1]), (Prefactor.one_plus_bu(3, -1),))

    def test_constant_term_checked(self):
        """Test 1/zeta must start with 1."""
        with pytest.raises(InvariantViolation):
            ZetaInverse(
                spec=LatticeSpec.of(3),
                d=1,
                method="top",
                poly=IntPoly([2, 1]),
                core=IntPoly([2, 1]),
            )


class TestTopSkeleton:
    """Test the divisor-tuple factorization."""

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 12])
    def test_cycle(self, n):
        """Test 1/zeta of an n-cycle is (1 - u^n)^2."""
        expected = IntPoly([1] + [0] * (n - 1) + [-1]) ** 2
        assert zeta_top(LatticeSpec.of(n)).poly == expected

    def test_five_cycle_coefficients(self):
        """Test the coefficient list of the 5-cycle."""
        result = zeta_inverse(LatticeSpec.of(5), d=1)
        assert result.poly.to_list() == [1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1]

    def test_two_by_two_factors(self):
        """Test the divisor tuples of (2, 2) and their multiplicities."""
        result = zeta_top(LatticeSpec.of(2, 2))
        assert [f.dvec for f in result.factors] == [(1, 1), (1, 2), (2, 1), (2, 2)]
        assert [f.exponent for f in result.factors] == [1, 1, 1, 1]

    def test_two_by_two_value(self):
        """Test (2, 2) against the product over its four characters."""
        expected = (
            IntPoly([1, -4, 3])
            * IntPoly([1, 0, 3]) ** 2
            * IntPoly([1, 4, 3])
            * IntPoly([1, 0, -1]) ** 4
        )
        assert zeta_top(LatticeSpec.of(2, 2)).poly == expected

    def test_factor_count(self):
        """Test (4, 6) has twelve divisor tuples."""
        assert len(zeta_top(LatticeSpec.of(4, 6)).factors) == 12

    def test_fold_multiplicity(self):
        """Test eps(d) doubles for every entry >= 3."""
        factors = {f.dvec: f.exponent for f in zeta_top(LatticeSpec.of(4, 6)).factors}
        assert factors[(1, 2)] == 1
        assert factors[(4, 2)] == 2
        assert factors[(4, 3)] == 4

    @pytest.mark.parametrize(
        "sides", [(5,), (6,), (8,), (2, 3), (4, 4), (3, 5), (4, 6), (2, 2, 3)]
    )
    def test_direct_route_agrees(self, sides):
        """Test the divisor factorization equals the product over characters."""
        spec = LatticeSpec(sides)
        top = zeta_top(spec)
        assert top.poly == zeta_top_direct(spec).poly
        assert top.expand() == top.poly

    def test_degree(self):
        """Test deg 1/zeta_Y = 2q|n| for the top skeleton."""
        spec = LatticeSpec.of(3, 4)
        assert zeta_top(spec).degree == 2 * spec.q * spec.volume

    def test_report(self):
        """Test the report carries factors and prefactors."""
        report = zeta_top(LatticeSpec.of(3, 3)).to_report()
        assert report.n == [3, 3]
        assert report.method == "top"
        assert report.prefactors == {"(1-u^2)": 9}
        assert len(report.factors) == 4


class TestGeneralSkeleton:
    """Test the determinant form for every skeleton."""

    @pytest.mark.parametrize("sides", [(5,), (3, 4), (2, 2, 3)])
    def test_top_dimension_agrees(self, sides):
        """Test the determinant form at d = q equals the top factorization."""
        spec = LatticeSpec(sides)
        assert zeta_general_d(spec, spec.q).poly == zeta_top(spec).poly

    @pytest.mark.parametrize("sides", [(3, 3), (2, 4), (2, 2, 2), (2, 2, 3)])
    def test_skeleton_symmetry(self, sides):
        """Test the d-skeleton and the (q-d+1)-skeleton have the same zeta."""
        spec = LatticeSpec(sides)
        for d in range(1, spec.q + 1):
            assert zeta_general_d(spec, d).poly == zeta_general_d(spec, spec.q - d + 1).poly

    def test_prefactors(self):
        """Test the up-form prefactors of the square-lattice edges."""
        result = zeta_general_d(LatticeSpec.of(3, 3), 1)
        assert result.prefactor_dict() == {"(1-u)": 9, "(1+bu)": [1, 9]}
        assert result.expand() == result.poly

    def test_down_form(self):
        """Test gamma < 0 switches to the down-form."""
        result = zeta_general_d(LatticeSpec.of(2, 2, 2), 3)
        assert result.prefactor_dict()["(1+bu)"] == [1, 16]

    def test_degree(self):
        """Test a 4-regular graph on 9 vertices has degree 2|E| = 36."""
        spec = LatticeSpec.of(3, 3)
        assert zeta_general_d(spec, 1).degree == 2 * 18


class TestCodimensionOne:
    """Test the closed form of the (q-1)-skeleton."""

    @pytest.mark.parametrize("sides", [(3, 3), (2, 5), (2, 2, 2), (2, 3, 3), (2, 2, 2, 2)])
    def test_matches_general(self, sides):
        """Test the closed form against the determinant form."""
        spec = LatticeSpec(sides)
        assert zeta_codim1(spec).poly == zeta_general_d(spec, spec.q - 1).poly

    def test_needs_two_dimensions(self):
        """Test q = 1 is refused."""
        with pytest.raises(DomainError):
            zeta_codim1(LatticeSpec.of(5))


class TestDispatch:
    """Test zeta_inverse route selection."""

    def test_auto(self):
        """Test auto picks top at d = q and general otherwise."""
        spec = LatticeSpec.of(3, 3)
        assert zeta_inverse(spec).method == ZetaMethod.TOP.value
        assert zeta_inverse(spec, 1).method == ZetaMethod.GENERAL.value

    def test_methods_agree(self):
        """Test every applicable route gives the same polynomial."""
        spec = LatticeSpec.of(2, 3, 3)
        assert zeta_inverse(spec, 3, ZetaMethod.TOP).poly == zeta_inverse(spec, 3, ZetaMethod.GENERAL).poly
        assert zeta_inverse(spec, 2, "codim1").poly == zeta_inverse(spec, 2, "general").poly

    @pytest.mark.parametrize(
        "d,method",
        [(0, ZetaMethod.AUTO), (3, ZetaMethod.AUTO), (1, ZetaMethod.TOP), (1, ZetaMethod.TOP_DIRECT),
         (2, ZetaMethod.CODIM1), (2, ZetaMethod.BASS)],
    )
    def test_inapplicable(self, d, method):
        """Test routes refuse dimensions they do not compute."""
        with pytest.raises(DomainError):
            zeta_inverse(LatticeSpec.of(3, 3), d, method)


class TestFreeEnergy:
    """Test the Mahler-measure limit and its finite-lattice counterpart."""

    def test_spanning_tree_constant(self):
        """Test the square lattice at u = 1 gives 4G/pi."""
        assert abs(mahler_limit_integral(2, 1.0) - FOUR_CATALAN_OVER_PI) < 1e-3

    def test_zero(self):
        """Test u = 0 gives zero."""
        assert mahler_limit_integral(3, 0.0) == 0.0
        assert free_energy_check(LatticeSpec.of(3, 3), 0.0) == 0.0

    def test_cycle_has_zero_measure(self):
        """Test q = 1 factors as (1 - uz)(1 - u/z) with roots outside the disc."""
        assert abs(mahler_limit_integral(1, 0.5)) < 1e-10
        assert abs(free_energy_limit(1, -0.5)) < 1e-10

    def test_vanishing_threshold(self):
        """Test the integrand has zeros exactly from u = 1/(2q-1) on."""
        assert not integrand_vanishes(2, 0.3)
        assert integrand_vanishes(2, 1 / 3)
        assert integrand_vanishes(3, 0.5)

    @pytest.mark.parametrize("u", [-1.0, 1.5])
    def test_domain(self, u):
        """Test the integral is taken on [0, 1]."""
        with pytest.raises(DomainError):
            mahler_limit_integral(2, u)
        with pytest.raises(DomainError):
            free_energy_check(LatticeSpec.of(3, 3), u)

    def test_finite_lattice_matches_polynomial(self):
        """Test the floating sum equals log(1/zeta) / |n|."""
        spec = LatticeSpec.of(3, 4)
        u = 0.3
        expected = log(zeta_top(spec).poly(u)) / spec.volume
        assert abs(free_energy_check(spec, u) - expected) < 1e-10

    @pytest.mark.parametrize("q,u", [(2, 0.1), (2, -0.2), (3, 0.1)])
    def test_finite_lattice_converges(self, q, u):
        """Test large tori approach the limit when the integrand is zero-free."""
        spec = LatticeSpec((40,) * q)
        assert abs(free_energy_check(spec, u) - free_energy_limit(q, u)) < 1e-8
