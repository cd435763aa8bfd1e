// Shared test helpers: random generators and an independent dense complex
// eigensolver used as an oracle against the library's Hermitian route.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fent/complex_matrix.hpp"
#include "fent/states.hpp"

namespace fent::testing {

inline ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx(gauss(rng), gauss(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  return (g + g.adjoint()).scaled(0.5);
}

// Random PSD matrix with unit trace.
inline ComplexMatrix random_mixed(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  ComplexMatrix w = g * g.adjoint();
  return w.scaled(1.0 / w.trace().real());
}

// Haar-ish random unitary via Gram-Schmidt on Gaussian columns.
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix g = random_gaussian(n, n, rng);
  ComplexMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix v = g.col(j);
    for (std::size_t k = 0; k < j; ++k) {
      const ComplexMatrix u = q.col(k);
      v = v - u.scaled(u.dot(v));
    }
    v = v.scaled(1.0 / v.norm());
    for (std::size_t i = 0; i < n; ++i) q(i, j) = v(i, 0);
  }
  return q;
}

// Random normalized pure state supported on the antisymmetric sector.
inline ComplexMatrix random_antisymmetric_pure(int n, int N, std::mt19937_64& rng) {
  const ComplexMatrix& basis = antisymmetric_sector_basis(n, N);
  ComplexMatrix coeff = random_gaussian(basis.cols(), 1, rng);
  coeff = coeff.scaled(1.0 / coeff.norm());
  return basis * coeff;
}

// Random mixed density matrix supported on the antisymmetric sector.
inline DensityMatrix random_antisymmetric_mixed(int n, int N, std::mt19937_64& rng) {
  const ComplexMatrix& basis = antisymmetric_sector_basis(n, N);
  const ComplexMatrix w = random_mixed(basis.cols(), rng);
  return DensityMatrix(n, N, basis * w * basis.adjoint());
}

// Random probability vector (flat Dirichlet), descending.
inline std::vector<double> random_simplex(std::size_t d, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> v(d);
  double s = 0.0;
  for (auto& x : v) {
    x = expo(rng);
    s += x;
  }
  for (auto& x : v) x /= s;
  return v;
}

// ---------------------------------------------------------------------------
// Brute-force eigenvalues of a general complex matrix: Householder
// reduction to Hessenberg form followed by shifted QR with deflation.
// Independent of the library's Jacobi path.
// ---------------------------------------------------------------------------
inline std::vector<cplx> general_eigenvalues(ComplexMatrix a) {
  const std::size_t n = a.rows();
  const double eps = 1e-15;

  // Householder reduction to upper Hessenberg.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) scale += std::norm(a(i, k));
    if (std::sqrt(scale) < 1e-300) continue;
    std::vector<cplx> v(n, cplx(0.0));
    const cplx x0 = a(k + 1, k);
    const double alpha = std::sqrt(scale);
    const cplx phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cplx(1.0);
    v[k + 1] = x0 + phase * alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 < 1e-300) continue;
    // A <- (I - 2 v v*/|v|^2) A (I - 2 v v*/|v|^2)
    for (std::size_t j = 0; j < n; ++j) {
      cplx dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * a(i, j);
      dot *= 2.0 / vnorm2;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= dot * v[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      cplx dot = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) dot += a(i, j) * v[j];
      dot *= 2.0 / vnorm2;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= dot * std::conj(v[j]);
    }
  }

  std::vector<cplx> eig;
  std::size_t hi = n;  // active window is rows/cols [0, hi)
  int guard = 0;
  while (hi > 0) {
    if (++guard > 10000) throw std::runtime_error("oracle QR failed to converge");
    // deflate tiny subdiagonals
    for (std::size_t i = 1; i < hi; ++i)
      if (std::abs(a(i, i - 1)) <= eps * (std::abs(a(i - 1, i - 1)) + std::abs(a(i, i))))
        a(i, i - 1) = 0.0;
    if (hi == 1 || a(hi - 1, hi - 2) == cplx(0.0)) {
      eig.push_back(a(hi - 1, hi - 1));
      --hi;
      continue;
    }
    std::size_t lo = hi - 1;
    while (lo > 0 && a(lo, lo - 1) != cplx(0.0)) --lo;

    // Wilkinson shift: eigenvalue of the trailing 2x2 closest to the corner.
    const cplx t11 = a(hi - 2, hi - 2), t12 = a(hi - 2, hi - 1);
    const cplx t21 = a(hi - 1, hi - 2), t22 = a(hi - 1, hi - 1);
    const cplx tr = t11 + t22;
    const cplx det = t11 * t22 - t12 * t21;
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    const cplx l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
    const cplx mu = (std::abs(l1 - t22) < std::abs(l2 - t22)) ? l1 : l2;

    // explicit single-shift QR step on the active block
    for (std::size_t i = lo; i < hi; ++i) a(i, i) -= mu;
    std::vector<cplx> cs(hi), sn(hi);
    for (std::size_t i = lo; i + 1 < hi; ++i) {
      const cplx x = a(i, i), y = a(i + 1, i);
      const double r = std::sqrt(std::norm(x) + std::norm(y));
      const cplx c = (r > 0.0) ? x / r : cplx(1.0);
      const cplx s = (r > 0.0) ? y / r : cplx(0.0);
      cs[i] = c;
      sn[i] = s;
      for (std::size_t j = i; j < hi; ++j) {
        const cplx ai = a(i, j), aj = a(i + 1, j);
        a(i, j) = std::conj(c) * ai + std::conj(s) * aj;
        a(i + 1, j) = -s * ai + c * aj;
      }
    }
    for (std::size_t i = lo; i + 1 < hi; ++i) {
      const cplx c = cs[i], s = sn[i];
      for (std::size_t j = lo; j < hi; ++j) {
        const cplx ci = a(j, i), cj = a(j, i + 1);
        a(j, i) = c * ci + s * cj;
        a(j, i + 1) = -std::conj(s) * ci + std::conj(c) * cj;
      }
    }
    for (std::size_t i = lo; i < hi; ++i) a(i, i) += mu;
  }
  return eig;
}

} // namespace fent::testing
