"""Unit tests for the cubical lattice, its twisted operators and their spectra."""

from math import comb

import numpy as np
import pytest

from cubezeta.core.errors import DomainError, ResourceLimitError
from cubezeta.core.models import Direction, ResourceLimits
from cubezeta.lattice import (
    Character,
    LatticeSpec,
    assembled_adjacency_spectrum,
    assembled_coboundary,
    assembled_incidence,
    boundary_sign,
    charpoly_aup1_closed,
    coboundary_kernels,
    coboundary_square_norm,
    cube_count,
    cube_faces,
    cubes,
    down_up_defect,
    exact_adjacency,
    expand_spectrum,
    group_eigenvalues,
    hodge_defect,
    laplacian_spectrum,
    simplices,
    spectra_match,
    spectrum_adown_q,
    twisted_adjacency,
    twisted_coboundary,
    twisted_incidence,
    twisted_laplacian,
    twisted_union_spectrum,
)


@pytest.fixture
def spec33():
    return LatticeSpec.of(3, 3)


class TestLatticeSpec:
    """Test lattice specifications and characters."""

    def test_parse(self):
        """Test parsing side lengths."""
        spec = LatticeSpec.parse("3,4")
        assert spec.sides == (3, 4)
        assert spec.q == 2
        assert spec.volume == 12
        assert spec.n_prime == 12
        assert str(spec) == "(3,4)"

    @pytest.mark.parametrize("bad", ["", "1,3", "3,x", "0"])
    def test_rejects_malformed(self, bad):
        """Test sides must be integers >= 2."""
        with pytest.raises(DomainError):
            LatticeSpec.parse(bad)

    def test_characters(self):
        """Test characters enumerate lexicographically."""
        ks = [chi.k for chi in LatticeSpec.of(2, 3).characters()]
        assert ks == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]

    def test_character_values(self):
        """Test z, w and the cosine sum."""
        chi = Character((4,), (1,))
        assert np.allclose(chi.z(), [1j])
        assert np.allclose(chi.w(), [2.0])
        assert abs(chi.two_cos_sum()) < 1e-12
        assert not chi.is_trivial()

    def test_character_validation(self):
        """Test components must lie in [0, n_j)."""
        with pytest.raises(DomainError):
            Character((4,), (4,))
        with pytest.raises(DomainError):
            Character((4, 4), (1,))

    def test_exact_z(self):
        """Test exact character components."""
        z, zinv = Character((4, 6), (1, 2)).exact_z()
        assert abs(z[0].to_complex() - 1j) < 1e-12
        assert (z[1] * zinv[1]) == 1


class TestCubes:
    """Test cubes, simplices and faces."""

    def test_simplices(self):
        """Test d-subsets in lexicographic order."""
        assert simplices(3, 2) == ((0, 1), (0, 2), (1, 2))
        assert simplices(3, 0) == ((),)
        assert simplices(3, 4) == ()

    def test_boundary_sign(self):
        """Test the alternating sign of the missing vertex."""
        assert boundary_sign((0, 1, 2), (1, 2)) == 1
        assert boundary_sign((0, 1, 2), (0, 2)) == -1
        assert boundary_sign((0, 1, 2), (0, 1)) == 1
        with pytest.raises(DomainError):
            boundary_sign((0, 1), (0, 1))

    def test_cube_count(self, spec33):
        """Test |Y_d| = C(q, d) |n|."""
        assert [cube_count(spec33, d) for d in range(3)] == [9, 18, 9]
        assert len(cubes(spec33, 1)) == 18
        with pytest.raises(DomainError):
            cube_count(spec33, 3)

    def test_cube_faces(self):
        """Test faces of a square wrap around the torus."""
        spec = LatticeSpec.of(3, 4)
        faces = cube_faces(spec, ((0, 1), (2, 3)))
        assert faces == [
            ((1,), (2, 3)),
            ((1,), (0, 3)),
            ((0,), (2, 3)),
            ((0,), (2, 0)),
        ]


class TestTwistedOperators:
    """Test the character blocks."""

    @pytest.mark.parametrize("d", [0, 1, 2])
    def test_adjacency_hermitian(self, d):
        """Test adjacency blocks are Hermitian."""
        spec = LatticeSpec.of(3, 4, 5)
        chi = Character(spec.sides, (1, 3, 2))
        assert twisted_adjacency(spec, d, chi, Direction.UP).is_hermitian()
        assert twisted_adjacency(spec, d + 1, chi, Direction.DOWN).is_hermitian()

    def test_adjacency_range(self, spec33):
        """Test out-of-range dimensions raise DomainError."""
        chi = Character(spec33.sides, (0, 1))
        with pytest.raises(DomainError):
            twisted_adjacency(spec33, 2, chi, Direction.UP)
        with pytest.raises(DomainError):
            twisted_adjacency(spec33, 0, chi, Direction.DOWN)

    def test_character_must_match(self, spec33):
        """Test a character of another lattice is refused."""
        with pytest.raises(DomainError):
            twisted_laplacian(spec33, 0, Character((3, 4), (0, 1)), Direction.UP)

    @pytest.mark.parametrize("k", [(0, 0, 0), (1, 0, 2), (2, 3, 4)])
    def test_coboundary_squares_to_zero(self, k):
        """Test delta_(d+1) delta_d = 0 in every block."""
        spec = LatticeSpec.of(3, 4, 5)
        chi = Character(spec.sides, k)
        for d in range(-1, 3):
            assert coboundary_square_norm(spec, d, chi) < 1e-12

    @pytest.mark.parametrize("k", [(0, 0, 0), (1, 0, 2), (2, 3, 4)])
    def test_hodge_identity(self, k):
        """Test L^up_d + L^down_d is scalar in every block."""
        spec = LatticeSpec.of(3, 4, 5)
        chi = Character(spec.sides, k)
        for d in range(4):
            assert hodge_defect(spec, d, chi) < 1e-12

    def test_kernels(self, spec33):
        """Test coboundary kernels for trivial and nontrivial characters."""
        assert coboundary_kernels(spec33, 1, Character(spec33.sides, (0, 0))) == (2, 2)
        assert coboundary_kernels(spec33, 1, Character(spec33.sides, (1, 0))) == (1, 1)

    def test_down_up(self):
        """Test Spec A^down_d equals Spec A^up_(d-1) padded with zeros."""
        spec = LatticeSpec.of(3, 3, 3)
        for chi in spec.characters():
            assert down_up_defect(spec, 1, chi) < 1e-9
            assert down_up_defect(spec, 2, chi) < 1e-9

    def test_charpoly_closed_form(self):
        """Test det(t - u A^up_1(z)) against its closed form."""
        spec = LatticeSpec.of(3, 4, 5)
        for chi in spec.characters():
            assert charpoly_aup1_closed(3, chi, 0.37) < 1e-9

    def test_exact_adjacency_matches_numeric(self):
        """Test exact and numeric blocks agree entrywise."""
        spec = LatticeSpec.of(4, 6)
        chi = Character(spec.sides, (1, 5))
        exact = exact_adjacency(spec, 1, chi, Direction.DOWN)
        numeric = twisted_adjacency(spec, 1, chi, Direction.DOWN).data
        values = np.array([[e.to_complex() for e in row] for row in exact])
        assert np.allclose(values, numeric)

    def test_incidence_entries(self, spec33):
        """Test M_0(z) has entries 1 + z_j and its adjoint builds A^up_0."""
        chi = Character(spec33.sides, (1, 0))
        z0 = np.exp(2j * np.pi / 3)
        m = twisted_incidence(spec33, 0, chi)
        assert m.size == (2, 1)
        assert np.allclose(m.data, [[1 + z0], [2]])
        dual = twisted_incidence(spec33, 0, chi, dual=True)
        assert np.allclose(dual.data, m.data.conj().T)
        up = twisted_adjacency(spec33, 0, chi, Direction.UP).data
        assert np.allclose(up, dual.data @ m.data)
        with pytest.raises(DomainError):
            twisted_incidence(spec33, 2, chi)

    def test_coboundary_entries(self, spec33):
        """Test the entries sgn * (z_j - 1)."""
        chi = Character(spec33.sides, (1, 0))
        data = twisted_coboundary(spec33, 1, chi).data
        z0 = np.exp(2j * np.pi / 3)
        assert np.allclose(data, [[0, z0 - 1]])


class TestAssembled:
    """Test untwisted operators on the whole lattice."""

    def test_incidence_degrees(self, spec33):
        """Test every edge has two vertices and every vertex four edges."""
        b = assembled_incidence(spec33, 0)
        assert b.shape == (18, 9)
        assert set(b.sum(axis=1)) == {2}
        assert set(b.sum(axis=0)) == {4}

    def test_coboundary_squares_to_zero(self):
        """Test the assembled coboundary is a complex."""
        spec = LatticeSpec.of(2, 3, 2)
        assert not np.any(assembled_coboundary(spec, 1) @ assembled_coboundary(spec, 0))

    @pytest.mark.parametrize("sides", [(4,), (3, 3), (2, 4), (2, 2, 3)])
    def test_union_of_blocks(self, sides):
        """Test the assembled spectrum is the union of the block spectra."""
        spec = LatticeSpec(sides)
        for d in range(spec.q):
            assert spectra_match(
                assembled_adjacency_spectrum(spec, d, Direction.UP),
                twisted_union_spectrum(spec, d, "adjacency", Direction.UP),
            )
            assert spectra_match(
                assembled_adjacency_spectrum(spec, d + 1, Direction.DOWN),
                twisted_union_spectrum(spec, d + 1, "adjacency", Direction.DOWN),
            )

    def test_size_limit(self):
        """Test the bound on assembled operators."""
        with pytest.raises(ResourceLimitError):
            assembled_incidence(LatticeSpec.of(10, 10), 0, ResourceLimits(max_bipartite_size=100))

    def test_range(self, spec33):
        """Test d must lie in [0, q-1]."""
        with pytest.raises(DomainError):
            assembled_incidence(spec33, 2)


class TestSpectra:
    """Test the closed-form spectra."""

    def test_group_eigenvalues(self):
        """Test values within tolerance merge."""
        assert group_eigenvalues([3.0, 1e-12, 3.0 + 1e-11, -1e-13]) == [(0.0, 2), (3.0, 2)]

    def test_expand(self):
        """Test the flat expansion."""
        assert list(expand_spectrum([(0.0, 1), (3.0, 2)])) == [0.0, 3.0, 3.0]

    def test_cycle_laplacian(self):
        """Test L^up_0 of the 3-cycle."""
        spectrum = laplacian_spectrum(LatticeSpec.of(3), 0)
        assert [m for _, m in spectrum] == [1, 2]
        assert spectrum[0][0] == 0.0
        assert abs(spectrum[1][0] - 3.0) < 1e-12

    @pytest.mark.parametrize("sides", [(5,), (3, 4), (2, 2, 3)])
    def test_laplacian_closed_form(self, sides):
        """Test the closed form against the block union for every d."""
        spec = LatticeSpec(sides)
        for d in range(spec.q + 1):
            closed = expand_spectrum(laplacian_spectrum(spec, d))
            assert len(closed) == comb(spec.q, d) * spec.volume
            assert spectra_match(closed, twisted_union_spectrum(spec, d, "laplacian"))

    def test_adown_top(self):
        """Test Spec A^down_q of the 2 x 2 torus."""
        assert np.allclose(spectrum_adown_q(LatticeSpec.of(2, 2)), [0.0, 4.0, 4.0, 8.0])

    def test_adown_top_matches_blocks(self):
        """Test the closed form against the blocks."""
        spec = LatticeSpec.of(3, 4)
        assert spectra_match(
            spectrum_adown_q(spec), twisted_union_spectrum(spec, 2, "adjacency", Direction.DOWN)
        )
