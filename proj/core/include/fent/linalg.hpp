#pragma once

#include <vector>

#include "fent/complex_matrix.hpp"

namespace fent {

/// Descending list of eigenvalues clamped to the probability simplex.
class Spectrum {
public:
  /// Sorts descending and clamps each value to [0, 1]. When
  /// `require_unit_sum` is set (the density-matrix path) the pre-clamp sum
  /// must be within 1e-9 of one.
  static Spectrum from_eigenvalues(std::vector<double> values, bool require_unit_sum = false);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double max() const { return values_.front(); }
  double sum() const;

private:
  std::vector<double> values_;
};

struct EigResult {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns, same order
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations. Input is
/// symmetrized when within the 1e-9 hermiticity tolerance.
EigResult hermitian_eig(const ComplexMatrix& m);

/// Hermitian PSD square root: S with S*S = m. Eigenvalues in [-1e-10, 0)
/// are clamped to zero, anything lower is an error.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// lambda_i = sqrt(eig_i(rho * rho_tilde)), descending. Evaluated through
/// the Hermitian matrix sqrt(rho) * rho_tilde * sqrt(rho).
std::vector<double> product_sqrt_eigvals(const ComplexMatrix& rho, const ComplexMatrix& rho_tilde);

} // namespace fent
