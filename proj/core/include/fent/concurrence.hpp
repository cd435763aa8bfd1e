#pragma once

#include "fent/states.hpp"

namespace fent {

/// Columns of the ordered basis used by the two-fermion (n = 4) concurrence:
/// |2,2>, |2,1>, |2,0>, |2,-1>, |2,-2>, i|0,0>, expressed in the 16-dim
/// product basis (16 x 6).
const ComplexMatrix& concurrence_basis();

/// The fixed real orthogonal matrix of the antiunitary conjugation
/// (composed with complex conjugation), in the ordered basis above.
const ComplexMatrix& d_conjugation_matrix();

/// rho expressed in the ordered concurrence basis (6 x 6).
ComplexMatrix to_concurrence_basis(const DensityMatrix& rho);

/// rho_tilde = M conj(rho6) M^T.
ComplexMatrix d_conjugate(const ComplexMatrix& rho6);

/// Exact two-fermion concurrence for n = 4:
/// max(0, lambda_1 - lambda_2 - ... - lambda_6).
double esbl_concurrence(const DensityMatrix& rho);

} // namespace fent
