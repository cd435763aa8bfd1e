#pragma once

#include <vector>

#include "fent/complex_matrix.hpp"

namespace fent {

/// Spin quantum number carried as a doubled integer, s = two_s / 2.
/// Fermion-compatible single-particle spaces have even dimension
/// n = two_s + 1, i.e. odd two_s.
struct SpinLabel {
  int two_s;

  int dimension() const noexcept { return two_s + 1; }
};

struct CoupledState {
  int j;
  int m;
  ComplexMatrix vector;  // column of length n^2, product basis
};

/// Ordered orthonormal basis of the antisymmetric two-particle sector:
/// all even-j multiplets, descending j then descending m.
struct CoupledBasis {
  SpinLabel s;
  std::vector<CoupledState> states;
};

/// Condon-Shortley Clebsch-Gordan coefficient <j1 m1; j2 m2 | j m>.
/// All arguments are doubled quantum numbers. Zero when m1+m2 != m or the
/// triangle inequality fails; throws on parity mismatch or |m| > j.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_j, int two_m);

/// |j,m> for two spin-s particles in the n^2-dim product basis
/// (index 0 = m_s = s, descending).
ComplexMatrix coupled_state(SpinLabel s, int j, int m);

CoupledBasis antisymmetric_basis(SpinLabel s);

} // namespace fent
