#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fent/complex_matrix.hpp"
#include "fent/linalg.hpp"

namespace fent {

struct ReducedDensityMatrix {
  int n;
  ComplexMatrix matrix;  // n x n, Hermitian, unit trace
};

/// Validated N-fermion density matrix in the full n^N product basis.
/// Construction enforces hermiticity, unit trace, positivity and support
/// on the antisymmetric sector.
class DensityMatrix {
public:
  DensityMatrix(int n, int N, ComplexMatrix matrix);

  int single_particle_dim() const noexcept { return n_; }
  int particle_count() const noexcept { return particles_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  /// Compression onto the antisymmetric-sector basis (d x d, d = C(n, N)).
  /// Carries the full spectral content of the state.
  const ComplexMatrix& sector_matrix() const noexcept { return sector_matrix_; }

  /// Eigenvalues of the state (zeros outside the sector omitted).
  const Spectrum& global_spectrum() const noexcept { return spectrum_; }

  /// Eigenvalues of the single-particle reduced state, computed on demand.
  const Spectrum& reduced_spectrum() const;

private:
  int n_;
  int particles_;
  ComplexMatrix matrix_;
  ComplexMatrix sector_matrix_;
  Spectrum spectrum_;
  mutable std::optional<Spectrum> reduced_spectrum_;
};

/// Orthonormal basis of the antisymmetric sector as matrix columns
/// (n^N x C(n,N)), one Slater determinant per N-combination of levels in
/// lexicographic order. Memoized; safe for concurrent reads.
const ComplexMatrix& antisymmetric_sector_basis(int n, int N);

/// Projector onto the antisymmetric sector, n^N x n^N. Memoized.
const ComplexMatrix& antisymmetrizer(int n, int N);

/// (|phi1>|phi2> - |phi2>|phi1>) / sqrt(2) for orthonormal phi1, phi2.
ComplexMatrix slater2(const ComplexMatrix& phi1, const ComplexMatrix& phi2);

/// Normalized N-particle Slater determinant of distinct basis levels
/// (1-based indices into the single-particle basis).
ComplexMatrix slater_n(int n, const std::vector<int>& indices);

ReducedDensityMatrix partial_trace_single(const DensityMatrix& rho);

DensityMatrix pure_state(int n, int N, const ComplexMatrix& psi);

// Parametrized families (n = 4, N = 2 unless stated otherwise).
DensityMatrix werner_state(double p);
DensityMatrix theta_state(double theta);
DensityMatrix gisin_state(double p);

/// Families on n = 6: which in {1, 2, 3}.
DensityMatrix dim6_state(int which, double p);

/// Generalized Werner family of N fermions, n = k*N.
DensityMatrix general_werner(int N, int k, double p);

/// Seeded random mixture of Slater determinants (N = 2, Haar pairs,
/// Dirichlet-uniform weights). Separable by construction.
DensityMatrix random_separable(int n, int terms, std::uint64_t seed);

// JSON import/export. Schema: {"n": int, "N": int, "matrix": [[[re, im], ...], ...]}.
std::string density_matrix_to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(const std::string& text);

} // namespace fent
