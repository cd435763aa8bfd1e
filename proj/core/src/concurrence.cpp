#include "fent/concurrence.hpp"

#include <algorithm>
#include <cmath>

#include "fent/angular.hpp"
#include "fent/errors.hpp"
#include "fent/linalg.hpp"

namespace fent {

const ComplexMatrix& concurrence_basis() {
  static const ComplexMatrix basis = [] {
    const SpinLabel s{3};
    ComplexMatrix b(16, 6);
    const int js[6] = {2, 2, 2, 2, 2, 0};
    const int ms[6] = {2, 1, 0, -1, -2, 0};
    for (int col = 0; col < 6; ++col) {
      ComplexMatrix v = coupled_state(s, js[col], ms[col]);
      if (col == 5) v = v.scaled(cplx(0.0, 1.0));  // the listed i|0,0>
      for (std::size_t i = 0; i < 16; ++i) b(i, static_cast<std::size_t>(col)) = v(i, 0);
    }
    return b;
  }();
  return basis;
}

const ComplexMatrix& d_conjugation_matrix() {
  static const ComplexMatrix m = [] {
    // Transcribed entry by entry; the two -1 signs are load-bearing.
    const double rows[6][6] = {
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, -1, 0, 0},
        {0, 0, 1, 0, 0, 0},
        {0, -1, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1},
    };
    ComplexMatrix out(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) out(i, j) = rows[i][j];
    return out;
  }();
  return m;
}

ComplexMatrix to_concurrence_basis(const DensityMatrix& rho) {
  if (rho.single_particle_dim() != 4 || rho.particle_count() != 2)
    throw WrongDimension("concurrence requires n = 4, N = 2");
  const ComplexMatrix& b = concurrence_basis();
  ComplexMatrix rho6 = b.adjoint() * rho.matrix() * b;
  if (rho6.trace().real() < 1.0 - 1e-9)
    throw SupportLeak("state has support outside the antisymmetric sector");
  return rho6;
}

ComplexMatrix d_conjugate(const ComplexMatrix& rho6) {
  if (rho6.rows() != 6 || rho6.cols() != 6)
    throw WrongDimension("d_conjugate expects a 6x6 matrix");
  const ComplexMatrix& m = d_conjugation_matrix();
  return m * rho6.conjugate() * m.transpose();
}

double esbl_concurrence(const DensityMatrix& rho) {
  const ComplexMatrix rho6 = to_concurrence_basis(rho);
  const ComplexMatrix rho_tilde = d_conjugate(rho6);
  const std::vector<double> lambda = product_sqrt_eigvals(rho6.symmetrized(), rho_tilde);
  double c = lambda[0];
  for (std::size_t i = 1; i < lambda.size(); ++i) c -= lambda[i];
  return std::clamp(c, 0.0, 1.0);
}

} // namespace fent
