#include "fent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fent/errors.hpp"

namespace fent {

namespace {

constexpr double kHermTol = 1e-9;
constexpr double kOffDiagTarget = 1e-12;
constexpr int kMaxSweeps = 100;
constexpr double kEigClamp = -1e-10;

double offdiag_norm(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

} // namespace

Spectrum Spectrum::from_eigenvalues(std::vector<double> values, bool require_unit_sum) {
  if (require_unit_sum) {
    const double s = std::accumulate(values.begin(), values.end(), 0.0);
    if (std::abs(s - 1.0) > 1e-9)
      throw InvalidState("spectrum sum deviates from 1 beyond tolerance");
  }
  for (auto& v : values) v = std::clamp(v, 0.0, 1.0);
  std::sort(values.begin(), values.end(), std::greater<double>());
  Spectrum out;
  out.values_ = std::move(values);
  return out;
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

EigResult hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square()) throw NotSquare("hermitian_eig requires a square matrix");
  if (m.hermiticity_error() > kHermTol)
    throw NotHermitian("hermitian_eig: symmetry tolerance exceeded");

  const std::size_t n = m.rows();
  ComplexMatrix a = m.symmetrized();
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Cyclic Jacobi with complex (phase-carrying) rotations.
  int sweep = 0;
  while (offdiag_norm(a) >= kOffDiagTarget) {
    if (++sweep > kMaxSweeps)
      throw ConvergenceFailure("hermitian_eig: Jacobi sweep cap reached");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const cplx phase = apq / mag;  // apq = |apq| e^{i beta}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- J^dagger A J with J[p,p]=c, J[p,q]=s*phase,
        // J[q,p]=-s*conj(phase), J[q,q]=c.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);

        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigResult out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  if (!m.is_square()) throw NotSquare("psd_sqrt requires a square matrix");
  if (m.hermiticity_error() > kHermTol)
    throw NotHermitian("psd_sqrt: symmetry tolerance exceeded");
  EigResult eig = hermitian_eig(m);
  const std::size_t n = m.rows();
  for (auto& w : eig.eigenvalues) {
    if (w < kEigClamp) throw NegativeEigenvalue("psd_sqrt: eigenvalue below -1e-10");
    if (w < 0.0) w = 0.0;
  }
  // V sqrt(Lambda) V^dagger
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double r = std::sqrt(eig.eigenvalues[k]);
    if (r == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = eig.eigenvectors(i, k) * r;
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += vik * std::conj(eig.eigenvectors(j, k));
    }
  }
  return out;
}

std::vector<double> product_sqrt_eigvals(const ComplexMatrix& rho, const ComplexMatrix& rho_tilde) {
  if (!rho.is_square() || !rho_tilde.is_square() || rho.rows() != rho_tilde.rows())
    throw DimensionMismatch("product_sqrt_eigvals: matrices must be square and equal-sized");
  const ComplexMatrix s = psd_sqrt(rho);
  const ComplexMatrix prod = s * rho_tilde * s;
  EigResult eig = hermitian_eig(prod.symmetrized());
  std::vector<double> out;
  out.reserve(eig.eigenvalues.size());
  for (double w : eig.eigenvalues) {
    if (w < kEigClamp)
      throw NegativeProductEigenvalue("product_sqrt_eigvals: eigenvalue below -1e-10");
    out.push_back(std::sqrt(std::max(0.0, w)));
  }
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

} // namespace fent
