#include "fent/states.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#include <json.hpp>

#include "fent/angular.hpp"
#include "fent/errors.hpp"

namespace fent {

namespace {

constexpr double kTol = 1e-9;
constexpr std::size_t kDimGuard = 1000000;

std::size_t pow_checked(int n, int N) {
  std::size_t d = 1;
  for (int i = 0; i < N; ++i) {
    d *= static_cast<std::size_t>(n);
    if (d > kDimGuard) throw DimensionTooLarge("product dimension exceeds 10^6");
  }
  return d;
}

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
  return r;
}

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

} // namespace

ComplexMatrix slater2(const ComplexMatrix& phi1, const ComplexMatrix& phi2) {
  if (!phi1.is_column() || !phi2.is_column() || phi1.rows() != phi2.rows())
    throw DimensionMismatch("slater2: arguments must be equal-length column vectors");
  if (std::abs(phi1.norm() - 1.0) > kTol || std::abs(phi2.norm() - 1.0) > kTol ||
      std::abs(phi1.dot(phi2)) > kTol)
    throw NotOrthonormal("slater2: inputs must be orthonormal");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return (kron(phi1, phi2) - kron(phi2, phi1)).scaled(inv_sqrt2);
}

ComplexMatrix slater_n(int n, const std::vector<int>& indices) {
  const int N = static_cast<int>(indices.size());
  if (N < 2 || N > n) throw DimensionMismatch("slater_n: need 2 <= N <= n");
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i + 1 < N; ++i)
    if (sorted[i] == sorted[i + 1]) throw RepeatedIndex("slater_n: indices must be distinct");
  for (int idx : sorted)
    if (idx < 1 || idx > n) throw DimensionMismatch("slater_n: index outside [1, n]");

  const std::size_t dim = pow_checked(n, N);
  ComplexMatrix v(dim, 1);
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  const double norm = 1.0 / std::sqrt(std::tgamma(static_cast<double>(N) + 1.0));
  do {
    std::size_t flat = 0;
    for (int p = 0; p < N; ++p) flat = flat * n + static_cast<std::size_t>(indices[perm[p]] - 1);
    v(flat, 0) += permutation_sign(perm) * norm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return v;
}

const ComplexMatrix& antisymmetric_sector_basis(int n, int N) {
  static std::map<std::pair<int, int>, ComplexMatrix> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, N});
  if (it != cache.end()) return it->second;

  const std::size_t dim = pow_checked(n, N);
  const std::size_t d = binomial(n, N);
  ComplexMatrix basis(dim, d);
  std::vector<int> combo(N);
  std::iota(combo.begin(), combo.end(), 1);
  std::size_t col = 0;
  while (true) {
    const ComplexMatrix v = slater_n(n, combo);
    for (std::size_t i = 0; i < dim; ++i) basis(i, col) = v(i, 0);
    ++col;
    // next lexicographic combination
    int i = N - 1;
    while (i >= 0 && combo[i] == n - (N - 1 - i)) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < N; ++j) combo[j] = combo[j - 1] + 1;
  }
  return cache.emplace(std::make_pair(n, N), std::move(basis)).first->second;
}

const ComplexMatrix& antisymmetrizer(int n, int N) {
  static std::map<std::pair<int, int>, ComplexMatrix> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, N});
    if (it != cache.end()) return it->second;
  }
  const ComplexMatrix& b = antisymmetric_sector_basis(n, N);
  ComplexMatrix p = b * b.adjoint();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(n, N), std::move(p)).first->second;
}

DensityMatrix::DensityMatrix(int n, int N, ComplexMatrix matrix)
    : n_(n), particles_(N), matrix_(std::move(matrix)),
      sector_matrix_(1, 1) {
  if (n_ < 2 || particles_ < 2 || particles_ > n_)
    throw InvalidState("DensityMatrix: need 2 <= N <= n");
  const std::size_t dim = pow_checked(n_, particles_);
  if (matrix_.rows() != dim || matrix_.cols() != dim)
    throw DimensionMismatch("DensityMatrix: matrix must be n^N x n^N");
  if (!matrix_.is_finite()) throw InvalidState("density matrix has non-finite entries");
  if (matrix_.hermiticity_error() > kTol)
    throw NotHermitian("density matrix hermiticity tolerance exceeded");
  matrix_ = matrix_.symmetrized();
  if (std::abs(matrix_.trace() - cplx(1.0, 0.0)) > kTol)
    throw InvalidState("density matrix trace deviates from 1");

  const ComplexMatrix& b = antisymmetric_sector_basis(n_, particles_);
  sector_matrix_ = b.adjoint() * matrix_ * b;
  if (std::abs(sector_matrix_.trace() - cplx(1.0, 0.0)) > kTol)
    throw SupportLeak("density matrix has support outside the antisymmetric sector");
  if ((b * sector_matrix_ * b.adjoint()).max_abs_diff(matrix_) > kTol)
    throw SupportLeak("P rho P differs from rho");

  EigResult eig = hermitian_eig(sector_matrix_);
  for (double w : eig.eigenvalues)
    if (w < -1e-10) throw NegativeEigenvalue("density matrix is not positive semidefinite");
  spectrum_ = Spectrum::from_eigenvalues(std::move(eig.eigenvalues), true);
}

const Spectrum& DensityMatrix::reduced_spectrum() const {
  if (!reduced_spectrum_) {
    const ReducedDensityMatrix r = partial_trace_single(*this);
    EigResult eig = hermitian_eig(r.matrix);
    reduced_spectrum_ = Spectrum::from_eigenvalues(std::move(eig.eigenvalues), true);
  }
  return *reduced_spectrum_;
}

ReducedDensityMatrix partial_trace_single(const DensityMatrix& rho) {
  const int n = rho.single_particle_dim();
  const std::size_t rest = pow_checked(n, rho.particle_count() - 1);
  ComplexMatrix out(n, n);
  const ComplexMatrix& m = rho.matrix();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < rest; ++r)
        s += m(static_cast<std::size_t>(a) * rest + r, static_cast<std::size_t>(b) * rest + r);
      out(a, b) = s;
    }
  return ReducedDensityMatrix{n, std::move(out)};
}

DensityMatrix pure_state(int n, int N, const ComplexMatrix& psi) {
  if (!psi.is_column()) throw DimensionMismatch("pure_state: psi must be a column vector");
  return DensityMatrix(n, N, psi.outer());
}

namespace {

// p * |psi><psi| + (1-p)/d * P_anti on the full product space.
DensityMatrix sector_mixture(int n, int N, const ComplexMatrix& psi, double p) {
  if (p < 0.0 || p > 1.0) throw ParameterOutOfRange("mixing parameter must lie in [0, 1]");
  const ComplexMatrix& proj = antisymmetrizer(n, N);
  const double d = static_cast<double>(binomial(n, N));
  const ComplexMatrix m = psi.outer().scaled(p) + proj.scaled((1.0 - p) / d);
  return DensityMatrix(n, N, m);
}

} // namespace

DensityMatrix werner_state(double p) {
  if (p < 0.0 || p > 1.0) throw ParameterOutOfRange("werner_state: p must lie in [0, 1]");
  const ComplexMatrix singlet = coupled_state(SpinLabel{3}, 0, 0);
  return sector_mixture(4, 2, singlet, p);
}

DensityMatrix theta_state(double theta) {
  // Product-basis levels for s = 3/2: index 0 = 3/2, 1 = 1/2, 2 = -1/2, 3 = -3/2.
  auto level = [](int i) {
    std::vector<cplx> e(4, 0.0);
    e[static_cast<std::size_t>(i)] = 1.0;
    return ComplexMatrix::column(e);
  };
  const double st = std::sin(theta), ct = std::cos(theta);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const ComplexMatrix psi =
      (kron(level(3), level(0)) - kron(level(0), level(3))).scaled(st * inv_sqrt2) +
      (kron(level(2), level(1)) - kron(level(1), level(2))).scaled(ct * inv_sqrt2);
  return pure_state(4, 2, psi);
}

DensityMatrix gisin_state(double p) {
  if (p < 0.0 || p > 1.0) throw ParameterOutOfRange("gisin_state: p must lie in [0, 1]");
  const SpinLabel s{3};
  const ComplexMatrix m =
      coupled_state(s, 0, 0).outer().scaled(p) +
      (coupled_state(s, 2, -2).outer() + coupled_state(s, 2, 2).outer()).scaled((1.0 - p) / 2.0);
  return DensityMatrix(4, 2, m);
}

DensityMatrix dim6_state(int which, double p) {
  if (p < 0.0 || p > 1.0) throw ParameterOutOfRange("dim6_state: p must lie in [0, 1]");
  // Levels 1..6 are m = 5/2, 3/2, 1/2, -1/2, -3/2, -5/2.
  const ComplexMatrix top = slater_n(6, {1, 2});     // |5/2 3/2|
  const ComplexMatrix mid = slater_n(6, {3, 4});     // |1/2 -1/2|
  const ComplexMatrix bot = slater_n(6, {5, 6});     // |-3/2 -5/2|
  ComplexMatrix psi(36, 1);
  switch (which) {
    case 1:
      psi = (top + mid - bot).scaled(1.0 / std::sqrt(3.0));
      break;
    case 2:
      psi = top.scaled(-2.0 / 3.0) + mid.scaled(-2.0 / 3.0) + bot.scaled(1.0 / 3.0);
      break;
    case 3:
      psi = (top + mid).scaled(1.0 / std::sqrt(2.0));
      break;
    default:
      throw UnknownFamily("dim6_state: which must be 1, 2 or 3");
  }
  return sector_mixture(6, 2, psi, p);
}

DensityMatrix general_werner(int N, int k, double p) {
  if (N < 2 || k < 2) throw ParameterOutOfRange("general_werner: need N >= 2 and k >= 2");
  if (p < 0.0 || p > 1.0) throw ParameterOutOfRange("general_werner: p must lie in [0, 1]");
  const int n = k * N;
  const std::size_t dim = pow_checked(n, N);
  ComplexMatrix phi(dim, 1);
  for (int block = 0; block < k; ++block) {
    std::vector<int> idx(N);
    std::iota(idx.begin(), idx.end(), block * N + 1);
    phi = phi + slater_n(n, idx);
  }
  phi = phi.scaled(1.0 / std::sqrt(static_cast<double>(k)));
  return sector_mixture(n, N, phi, p);
}

DensityMatrix random_separable(int n, int terms, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) throw ParameterOutOfRange("random_separable: n must be even, >= 2");
  if (terms < 1) throw ParameterOutOfRange("random_separable: terms must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  auto random_vector = [&] {
    std::vector<cplx> e(static_cast<std::size_t>(n));
    for (auto& x : e) x = cplx(gauss(rng), gauss(rng));
    return ComplexMatrix::column(e);
  };

  // Dirichlet(1,...,1) weights from normalized exponential draws.
  std::vector<double> weights(static_cast<std::size_t>(terms));
  double wsum = 0.0;
  for (auto& w : weights) {
    w = expo(rng);
    wsum += w;
  }
  for (auto& w : weights) w /= wsum;

  ComplexMatrix m(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n);
  for (int t = 0; t < terms; ++t) {
    // Gram-Schmidt on two complex Gaussian vectors -> Haar orthonormal pair.
    ComplexMatrix u = random_vector();
    u = u.scaled(1.0 / u.norm());
    ComplexMatrix v = random_vector();
    v = v - u.scaled(u.dot(v));
    v = v.scaled(1.0 / v.norm());
    m = m + slater2(u, v).outer().scaled(weights[static_cast<std::size_t>(t)]);
  }
  return DensityMatrix(n, 2, m);
}

std::string density_matrix_to_json(const DensityMatrix& rho) {
  nlohmann::json j;
  j["n"] = rho.single_particle_dim();
  j["N"] = rho.particle_count();
  const ComplexMatrix& m = rho.matrix();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j.dump();
}

DensityMatrix density_matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("N") || !j.contains("matrix"))
    throw ParseError("missing required field (n, N, matrix)");
  int n, N;
  std::vector<cplx> entries;
  std::size_t dim;
  try {
    n = j.at("n").get<int>();
    N = j.at("N").get<int>();
    const auto& rows = j.at("matrix");
    dim = rows.size();
    entries.reserve(dim * dim);
    for (const auto& row : rows) {
      if (row.size() != dim) throw ParseError("matrix is not square");
      for (const auto& entry : row) {
        if (!entry.is_array() || entry.size() != 2)
          throw ParseError("matrix entries must be [re, im] pairs");
        entries.emplace_back(entry[0].get<double>(), entry[1].get<double>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed density matrix JSON: ") + e.what());
  }
  return DensityMatrix(n, N, ComplexMatrix(dim, dim, std::move(entries)));
}

} // namespace fent
