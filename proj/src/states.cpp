#include "sepscope/states.hpp"

#include "sepscope/bases.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sepscope {

namespace {

constexpr double kFactoryTol = 1e-12;

SystemShape qubits(int n) { return SystemShape(std::vector<int>(static_cast<std::size_t>(n), 2)); }

DensityMatrix pure_state(const Vector& psi, const SystemShape& shape) {
  Matrix rho = psi * psi.adjoint();
  return validate_density(rho, shape, kFactoryTol);
}

}  // namespace

DensityMatrix ghz_state(int variant) {
  if (variant < 1 || variant > 8) throw ShapeError("ghz_state: variant out of range");
  // Basis pairs per variant pair (1,2)..(7,8); odd variant takes +, even -.
  static constexpr int kPairs[4][2] = {{0, 7}, {1, 6}, {2, 5}, {4, 3}};
  const int pair = (variant - 1) / 2;
  const double sign = (variant % 2 == 1) ? 1.0 : -1.0;

  Vector psi = Vector::Zero(8);
  const double amp = 1.0 / std::sqrt(2.0);
  psi(kPairs[pair][0]) = amp;
  psi(kPairs[pair][1]) = sign * amp;
  return pure_state(psi, qubits(3));
}

DensityMatrix w_state() {
  Vector psi = Vector::Zero(8);
  const double amp = 1.0 / std::sqrt(3.0);
  psi(1) = amp;  // |001>
  psi(2) = amp;  // |010>
  psi(4) = amp;  // |100>
  return pure_state(psi, qubits(3));
}

Matrix braid_r_gate() {
  Matrix r(4, 4);
  r << 1, 0, 0, 1,
       0, 1, -1, 0,
       0, 1, 1, 0,
       -1, 0, 0, 1;
  return r / std::sqrt(2.0);
}

Matrix braid_generator(int n, int i) {
  if (n < 2) throw ShapeError("braid_generator: need at least 2 qubits");
  if (i < 1 || i > n - 1) throw ShapeError("braid_generator: index out of range");
  std::vector<Matrix> factors;
  if (i > 1) factors.push_back(identity(1 << (i - 1)));
  factors.push_back(braid_r_gate());
  if (i < n - 1) factors.push_back(identity(1 << (n - i - 1)));
  return kron(factors);
}

DensityMatrix braid_state(int n, int comp_index) {
  if (n < 2) throw ShapeError("braid_state: need at least 2 qubits");
  const int dim = 1 << n;
  if (comp_index < 1 || comp_index > dim) throw ShapeError("braid_state: index out of range");

  Vector psi = Vector::Zero(dim);
  psi(comp_index - 1) = 1.0;
  // g_{n-1} acts first, g_1 last.
  for (int i = n - 1; i >= 1; --i) psi = braid_generator(n, i) * psi;
  return pure_state(psi, qubits(n));
}

GhzDiagParams::GhzDiagParams(const std::array<double, 8>& p) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= -1e-12)) throw PreconditionError("GhzDiagParams: negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw PreconditionError("GhzDiagParams: probabilities must sum to 1");

  std::iota(perm_.begin(), perm_.end(), 0);
  std::stable_sort(perm_.begin(), perm_.end(),
                   [&p](int a, int b) { return p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)]; });
  double clamped_sum = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    sorted_[k] = std::max(0.0, p[static_cast<std::size_t>(perm_[k])]);
    clamped_sum += sorted_[k];
  }
  for (double& v : sorted_) v /= clamped_sum;
}

DensityMatrix ghz_diagonal(const GhzDiagParams& params) {
  Matrix rho = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i)
    rho += params.probabilities()[static_cast<std::size_t>(i)] * ghz_state(i + 1).matrix();
  return validate_density(rho, qubits(3), kFactoryTol);
}

MixtureParams::MixtureParams(double signal_weight) : p(signal_weight) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("MixtureParams: p outside [0, 1]");
}

DensityMatrix mix_white_noise(const DensityMatrix& rho, const MixtureParams& params) {
  const int d = rho.dim();
  Matrix m = params.p * rho.matrix() + (1.0 - params.p) * Matrix::Identity(d, d) / d;
  // Mixing cannot be cleaner than its input, so use the standard tolerance.
  return validate_density(m, rho.shape(), kDefaultTol);
}

DensityMatrix four_qubit_xyz() {
  const SystemShape shape = qubits(4);
  Matrix m = Matrix::Identity(16, 16);
  for (int a = 1; a <= 3; ++a) m += basis_element(shape, {a, a, a, a});
  return validate_density(m / 16.0, shape, kFactoryTol);
}

DensityMatrix two_param_state(double r1, double r3) {
  if (r1 * r1 + r3 * r3 > 1.0 + 1e-12)
    throw PreconditionError("two_param_state: R1^2 + R3^2 > 1 (matrix not PSD)");
  const SystemShape shape = qubits(3);
  Matrix m = Matrix::Identity(8, 8);
  m += r1 * basis_element(shape, {1, 1, 1});
  m += r3 * basis_element(shape, {0, 0, 3});
  return validate_density(m / 8.0, shape, kFactoryTol);
}

DensityMatrix named_example(const std::string& name) {
  if (name == "four_qubit_xyz") return four_qubit_xyz();
  if (name.rfind("two_param:", 0) == 0) {
    std::istringstream in(name.substr(10));
    double r1 = 0.0, r3 = 0.0;
    char comma = 0;
    if (!(in >> r1 >> comma >> r3) || comma != ',')
      throw PreconditionError("named_example: expected two_param:<r1>,<r3>");
    return two_param_state(r1, r3);
  }
  throw PreconditionError("named_example: unknown name '" + name + "'");
}

bool is_mds(const DensityMatrix& rho, double tol) {
  const SystemShape& shape = rho.shape();
  for (int site = 0; site < shape.sites(); ++site) {
    const Matrix reduced = partial_trace(rho.matrix(), shape, site);
    const int d = static_cast<int>(reduced.rows());
    const Matrix expect = Matrix::Identity(d, d) / d;
    if ((reduced - expect).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace sepscope
