"""Unit tests for elementary number theory."""

from math import gcd

import pytest
import sympy

from cubezeta.core.errors import DomainError
from cubezeta.numtheory import (
    divisors,
    euler_phi,
    factorize,
    fold_residue,
    j_set,
    lcm_all,
    mobius,
    phi_tilde,
    primitive_root,
    unit_group,
    unit_group_generators,
)


def _generated_subgroup(gens, N):
    group = {1 % N}
    frontier = list(group)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = (x * g) % N
            if y not in group:
                group.add(y)
                frontier.append(y)
    return group


class TestArithmeticFunctions:
    """Test totients, Moebius and divisors against sympy."""

    @pytest.mark.parametrize("n", range(1, 200))
    def test_euler_phi_matches_sympy(self, n):
        """Test euler_phi agrees with sympy.totient."""
        assert euler_phi(n) == sympy.totient(n)

    @pytest.mark.parametrize("n", range(1, 200))
    def test_mobius_matches_sympy(self, n):
        """Test mobius agrees with sympy.mobius."""
        assert mobius(n) == sympy.mobius(n)

    def test_factorize(self):
        """Test factorization of a composite."""
        assert factorize(1) == ()
        assert factorize(360) == ((2, 3), (3, 2), (5, 1))
        assert factorize(97) == ((97, 1),)

    def test_divisors(self):
        """Test divisors are complete and sorted."""
        assert divisors(12) == (1, 2, 3, 4, 6, 12)
        assert divisors(1) == (1,)

    def test_lcm_all(self):
        """Test lcm over a collection."""
        assert lcm_all([4, 6, 10]) == 60
        assert lcm_all([]) == 1

    def test_rejects_non_positive(self):
        """Test zero and negatives are outside the domain."""
        with pytest.raises(DomainError):
            factorize(0)
        with pytest.raises(DomainError):
            phi_tilde(-3)


class TestPhiTildeAndJSet:
    """Test the halved totient and the index sets J_d."""

    def test_small_values(self):
        """Test phi~ on the small sides."""
        assert [phi_tilde(d) for d in range(1, 13)] == [1, 1, 1, 1, 2, 1, 3, 2, 3, 2, 5, 2]

    @pytest.mark.parametrize("d", range(1, 120))
    def test_j_set_size(self, d):
        """Test |J_d| = phi~(d)."""
        assert len(j_set(d)) == phi_tilde(d)

    def test_j_set_members(self):
        """Test explicit members."""
        assert j_set(1).members == (1,)
        assert j_set(2).members == (1,)
        assert j_set(12).members == (1, 5)
        assert j_set(9).members == (1, 2, 4)

    def test_fold_residue(self):
        """Test folding identifies k with d - k."""
        assert fold_residue(11, 12) == 1
        assert fold_residue(7, 12) == 5
        assert fold_residue(-2, 9) == 2
        assert fold_residue(5, 2) == 1

    @pytest.mark.parametrize("d", [5, 8, 9, 12, 15, 30])
    def test_fold_lands_in_j_set(self, d):
        """Test every unit folds into J_d."""
        for k in range(1, d):
            if gcd(k, d) == 1:
                assert fold_residue(k, d) in j_set(d)


class TestUnitGroup:
    """Test the unit groups of Z/NZ."""

    @pytest.mark.parametrize("N", range(1, 100))
    def test_order(self, N):
        """Test |(Z/NZ)^x| = phi(N)."""
        assert len(unit_group(N)) == euler_phi(N)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 23, 41])
    def test_primitive_root_matches_sympy(self, p):
        """Test the smallest primitive root agrees with sympy."""
        assert primitive_root(p) == sympy.primitive_root(p)

    @pytest.mark.parametrize("N", [2, 4, 8, 9, 12, 15, 16, 24, 45, 60, 63, 80, 98])
    def test_generators_generate(self, N):
        """Test the generating set spans the whole group."""
        gens = unit_group_generators(N)
        assert _generated_subgroup(gens, N) == {g % N for g in unit_group(N).elements}

    def test_membership(self):
        """Test membership reduces modulo N."""
        group = unit_group(10)
        assert 3 in group
        assert 13 in group
        assert 5 not in group
