#include "fent/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fent/errors.hpp"

namespace fent {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  if (entries_.size() != rows * cols)
    throw DimensionMismatch("entry count does not match rows x cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::column(std::vector<cplx> entries) {
  const std::size_t n = entries.size();
  return ComplexMatrix(n, 1, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = std::conj(entries_[k]);
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product dimension mismatch");
  ComplexMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx a = (*this)(i, k);
      if (a == cplx(0.0, 0.0)) continue;
      const cplx* brow = &other.entries_[k * other.cols_];
      cplx* orow = &out.entries_[i * other.cols_];
      for (std::size_t j = 0; j < other.cols_; ++j) orow[j] += a * brow[j];
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix sum dimension mismatch");
  ComplexMatrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += other.entries_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix difference dimension mismatch");
  ComplexMatrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= other.entries_[k];
  return out;
}

ComplexMatrix ComplexMatrix::scaled(cplx factor) const {
  ComplexMatrix out = *this;
  for (auto& e : out.entries_) e *= factor;
  return out;
}

ComplexMatrix ComplexMatrix::col(std::size_t j) const {
  ComplexMatrix out(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw NotSquare("trace of non-square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::hermiticity_error() const {
  if (!is_square()) throw NotSquare("hermiticity check on non-square matrix");
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("max_abs_diff dimension mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m = std::max(m, std::abs(entries_[k] - other.entries_[k]));
  return m;
}

bool ComplexMatrix::is_finite() const {
  for (const auto& e : entries_)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

ComplexMatrix ComplexMatrix::symmetrized() const {
  if (!is_square()) throw NotSquare("symmetrization of non-square matrix");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return out;
}

cplx ComplexMatrix::dot(const ComplexMatrix& other) const {
  if (!is_column() || !other.is_column() || rows_ != other.rows_)
    throw DimensionMismatch("dot product requires equal-length column vectors");
  cplx s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += std::conj(entries_[i]) * other.entries_[i];
  return s;
}

ComplexMatrix ComplexMatrix::outer() const {
  if (!is_column()) throw DimensionMismatch("outer product requires a column vector");
  ComplexMatrix out(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j)
      out(i, j) = entries_[i] * std::conj(entries_[j]);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx f = a(i, j);
      if (f == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f * b(k, l);
    }
  return out;
}

} // namespace fent
