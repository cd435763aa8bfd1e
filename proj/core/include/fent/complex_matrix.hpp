#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fent {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage. Carrier for density matrices,
/// operators and (as single-column matrices) state vectors.
class ComplexMatrix {
public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix column(std::vector<cplx> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_column() const noexcept { return cols_ == 1; }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<cplx>& entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;

  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix scaled(cplx factor) const;

  ComplexMatrix col(std::size_t j) const;

  cplx trace() const;
  double norm() const;           // Frobenius
  double max_abs() const;        // max-norm over entries
  double hermiticity_error() const;  // max |m - m^dagger|
  double max_abs_diff(const ComplexMatrix& other) const;

  /// All entries finite (no NaN/Inf).
  bool is_finite() const;

  /// (m + m^dagger)/2
  ComplexMatrix symmetrized() const;

  /// Inner product <this|other> for column vectors.
  cplx dot(const ComplexMatrix& other) const;

  /// Outer product v * v^dagger for a column vector.
  ComplexMatrix outer() const;

private:
  std::size_t rows_, cols_;
  std::vector<cplx> entries_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace fent
