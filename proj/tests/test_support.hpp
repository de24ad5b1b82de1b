#pragma once

// Shared fixtures for the test suites: deterministic random generators for
// densities and MDS coefficient tensors, spectra comparison helpers, and the
// reference matrices frozen from the worked examples.

#include "sepscope/bases.hpp"
#include "sepscope/hs.hpp"
#include "sepscope/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace sepscope::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Matrix random_complex(int rows, int cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Cplx(normal(gen), normal(gen));
  return m;
}

// Ginibre construction: G G^dagger / tr.
inline DensityMatrix random_density(const SystemShape& shape, std::mt19937_64& gen) {
  const int d = shape.total_dim();
  const Matrix g = random_complex(d, d, gen);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  rho = (rho + Matrix(rho.adjoint())) / 2.0;
  return validate_density(rho, shape, 1e-9);
}

inline Matrix random_unitary(int d, std::mt19937_64& gen) {
  const Matrix g = random_complex(d, d, gen);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  return q;
}

// Random full-weight coefficient tensor rescaled below the PSD boundary.
inline DensityMatrix random_mds(const SystemShape& shape, std::mt19937_64& gen,
                                double margin = 0.05) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int d = shape.total_dim();

  std::map<MultiIndex, double> coeffs;
  Matrix correlation = Matrix::Zero(d, d);
  std::vector<int> idx(static_cast<std::size_t>(shape.sites()), 1);
  // Odometer over non-identity indices only (1 .. d_i^2 - 1 per site).
  while (true) {
    const double c = uni(gen);
    coeffs[idx] = c;
    correlation += c * basis_element(shape, idx);
    int s = shape.sites() - 1;
    for (; s >= 0; --s) {
      auto& v = idx[static_cast<std::size_t>(s)];
      if (++v < shape.dim(s) * shape.dim(s)) break;
      v = 1;
    }
    if (s < 0) break;
  }

  const Spectrum correlation_spec = eig_hermitian(correlation, 1e-8);
  const double spectral =
      std::max(correlation_spec.back(), std::abs(correlation_spec.front()));
  const double scale = spectral > 0 ? 1.0 / (spectral * (1.0 + margin)) : 0.0;
  for (auto& [key, value] : coeffs) value *= scale;

  Matrix rho = (Matrix::Identity(d, d) + scale * correlation) / d;
  return validate_density(rho, shape, 1e-10);
}

inline bool spectra_match(Spectrum a, Spectrum b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// 8 rho of the GHZ state: corners 4.
inline Matrix ghz8_reference() {
  Matrix m = Matrix::Zero(8, 8);
  m(0, 0) = m(0, 7) = m(7, 0) = m(7, 7) = 4.0;
  return m;
}

// 8 rho(GHZ; PTU; A): anti-corner -4, middle diagonal 4s.
inline Matrix ghz_ptu8_reference() {
  Matrix m = Matrix::Zero(8, 8);
  m(0, 7) = m(7, 0) = -4.0;
  m(3, 3) = m(4, 4) = 4.0;
  return m;
}

// 8 rho of the B1 braid state.
inline Matrix b1_8_reference() {
  Matrix m = Matrix::Zero(8, 8);
  const int support[4] = {0, 3, 5, 6};
  const double sign[4] = {1.0, -1.0, -1.0, -1.0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(support[i], support[j]) = 2.0 * sign[i] * sign[j];
  return m;
}

// 8 rho(B1; PTU; A), Hermitian completion of the printed form.
inline Matrix b1_ptu8_reference() {
  Matrix m = Matrix::Zero(8, 8);
  m(0, 5) = m(0, 6) = 2.0;
  m(1, 1) = m(1, 2) = m(2, 2) = 2.0;
  m(3, 5) = m(3, 6) = -2.0;
  m(4, 4) = 2.0;
  m(4, 7) = -2.0;
  m(7, 7) = 2.0;
  return Matrix(m.selfadjointView<Eigen::Upper>());
}

// 3 * 8 rho of the W state: 8s on the one-excitation block.
inline Matrix w24_reference() {
  Matrix m = Matrix::Zero(8, 8);
  const int support[3] = {1, 2, 4};
  for (int i : support)
    for (int j : support) m(i, j) = 8.0;
  return m;
}

// 3 * 8 rho(W; PT; A).
inline Matrix w_pt24_reference() {
  Matrix m = Matrix::Zero(8, 8);
  m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = 8.0;
  m(4, 4) = 8.0;
  m(0, 5) = m(0, 6) = m(5, 0) = m(6, 0) = 8.0;
  return m;
}

}  // namespace sepscope::testing
