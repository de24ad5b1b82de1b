#pragma once

// Dense complex-matrix primitives shared by every other module: Kronecker
// products, Hermitian eigendecomposition, real SVD, density-matrix
// validation and partial traces. Everything here is a pure function on
// small (<= 16x16) matrices.

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepscope {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;

// Eigenvalues sorted ascending, multiset semantics.
using Spectrum = std::vector<double>;

inline constexpr double kDefaultTol = 1e-9;       // density validation
inline constexpr double kNegativityFloor = 1e-9;  // |lambda| below this is "zero"
inline constexpr double kMdsTol = 1e-10;          // MDS pattern detection

// ---------------------------------------------------------------------------
// Errors

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::runtime_error {
  double offending;
  ValidationError(const std::string& what, double value)
      : std::runtime_error(what), offending(value) {}
};

struct TraceError : ValidationError {
  using ValidationError::ValidationError;
};

struct HermiticityError : ValidationError {
  using ValidationError::ValidationError;
};

struct NegativityError : ValidationError {
  using ValidationError::ValidationError;
};

// Preconditions of certificate builders and criteria (e.g. l1 sum > 1).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// SystemShape: ordered local dimensions, site 0 outermost (most significant)

class SystemShape {
 public:
  explicit SystemShape(std::vector<int> dims);

  int sites() const { return static_cast<int>(dims_.size()); }
  int dim(int site) const;
  int total_dim() const { return total_; }
  bool is_qubit(int site) const { return dim(site) == 2; }
  bool all_qubits() const;
  const std::vector<int>& dims() const { return dims_; }

  // Row/column index <-> per-site digits, site 0 most significant.
  std::vector<int> digits(int flat) const;
  int flat(const std::vector<int>& digits) const;

  bool operator==(const SystemShape& other) const { return dims_ == other.dims_; }
  bool operator!=(const SystemShape& other) const { return !(*this == other); }

 private:
  std::vector<int> dims_;
  int total_ = 1;
};

// ---------------------------------------------------------------------------
// DensityMatrix: certified Hermitian, unit-trace, PSD-within-tolerance matrix

class DensityMatrix {
 public:
  const Matrix& matrix() const { return m_; }
  const SystemShape& shape() const { return shape_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  friend DensityMatrix validate_density(const Matrix&, const SystemShape&, double);
  DensityMatrix(Matrix m, SystemShape shape) : m_(std::move(m)), shape_(std::move(shape)) {}

  Matrix m_;
  SystemShape shape_;
};

// Throws TraceError / HermiticityError / NegativityError with the offending
// quantity, or ShapeError on dimension mismatch.
DensityMatrix validate_density(const Matrix& m, const SystemShape& shape,
                               double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Kernel operations

double hermiticity_defect(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<Matrix>& factors);  // first factor outermost

Spectrum eig_hermitian(const Matrix& m, double tol = kDefaultTol);

struct EigPairs {
  Spectrum values;   // ascending
  Matrix vectors;    // columns matching values
};
EigPairs eig_hermitian_vectors(const Matrix& m, double tol = kDefaultTol);

struct Svd {
  RealMatrix u;                          // thin
  std::vector<double> singular_values;   // descending, nonnegative
  RealMatrix v;                          // thin; m = u * diag(s) * v^T
};
Svd svd_real(const RealMatrix& m);

// Trace out one site; result lives on the remaining sites in order.
Matrix partial_trace(const Matrix& m, const SystemShape& shape, int site);

Matrix identity(int dim);

}  // namespace sepscope
