#include "sepscope/kernel.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>

namespace sepscope {

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ShapeError("SystemShape: no sites");
  for (int d : dims_) {
    if (d < 2) throw ShapeError("SystemShape: local dimension < 2");
    total_ *= d;
  }
}

int SystemShape::dim(int site) const {
  if (site < 0 || site >= sites()) throw ShapeError("SystemShape: site out of range");
  return dims_[static_cast<std::size_t>(site)];
}

bool SystemShape::all_qubits() const {
  for (int d : dims_)
    if (d != 2) return false;
  return true;
}

std::vector<int> SystemShape::digits(int flat) const {
  if (flat < 0 || flat >= total_) throw ShapeError("SystemShape: flat index out of range");
  std::vector<int> out(dims_.size());
  for (int i = sites() - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = flat % dims_[static_cast<std::size_t>(i)];
    flat /= dims_[static_cast<std::size_t>(i)];
  }
  return out;
}

int SystemShape::flat(const std::vector<int>& digits) const {
  if (digits.size() != dims_.size()) throw ShapeError("SystemShape: digit count mismatch");
  int out = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims_[i])
      throw ShapeError("SystemShape: digit out of range");
    out = out * dims_[i] + digits[i];
  }
  return out;
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!a.allFinite() || !b.allFinite()) throw ShapeError("kron: non-finite entries");
  return Eigen::kroneckerProduct(a, b);
}

Matrix kron(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw ShapeError("kron: empty factor list");
  Matrix out = factors.front();
  if (!out.allFinite()) throw ShapeError("kron: non-finite entries");
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

Spectrum eig_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw ShapeError("eig_hermitian: matrix not square");
  if (!m.allFinite()) throw ShapeError("eig_hermitian: non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > tol) throw HermiticityError("eig_hermitian: Hermiticity defect", defect);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return Spectrum(ev.data(), ev.data() + ev.size());
}

EigPairs eig_hermitian_vectors(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw ShapeError("eig_hermitian: matrix not square");
  const double defect = hermiticity_defect(m);
  if (defect > tol) throw HermiticityError("eig_hermitian: Hermiticity defect", defect);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  const auto& ev = solver.eigenvalues();
  return EigPairs{Spectrum(ev.data(), ev.data() + ev.size()), solver.eigenvectors()};
}

Svd svd_real(const RealMatrix& m) {
  if (!m.allFinite()) throw ShapeError("svd_real: non-finite entries");
  Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  return Svd{svd.matrixU(), std::vector<double>(s.data(), s.data() + s.size()),
             svd.matrixV()};
}

DensityMatrix validate_density(const Matrix& m, const SystemShape& shape, double tol) {
  if (m.rows() != m.cols()) throw ShapeError("validate_density: matrix not square");
  if (m.rows() != shape.total_dim())
    throw ShapeError("validate_density: dimension does not match shape");
  if (!m.allFinite()) throw ShapeError("validate_density: non-finite entries");

  const double defect = hermiticity_defect(m);
  if (defect > tol) throw HermiticityError("validate_density: Hermiticity defect", defect);

  const Cplx tr = m.trace();
  const double trace_err = std::abs(tr - Cplx(1.0, 0.0));
  if (trace_err > tol) throw TraceError("validate_density: trace differs from 1", trace_err);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol)
    throw NegativityError("validate_density: negative eigenvalue", min_eig);

  return DensityMatrix(m, shape);
}

Matrix partial_trace(const Matrix& m, const SystemShape& shape, int site) {
  if (m.rows() != m.cols() || m.rows() != shape.total_dim())
    throw ShapeError("partial_trace: dimension mismatch");
  if (site < 0 || site >= shape.sites()) throw ShapeError("partial_trace: bad site");

  const int d_site = shape.dim(site);
  const int d_out = shape.total_dim() / d_site;
  Matrix out = Matrix::Zero(d_out, d_out);

  // Strides of the kept sites, skipping `site`.
  std::vector<int> kept;
  for (int s = 0; s < shape.sites(); ++s)
    if (s != site) kept.push_back(s);

  for (int r = 0; r < d_out; ++r) {
    for (int c = 0; c < d_out; ++c) {
      // Expand reduced indices into full digit vectors.
      std::vector<int> rdig(shape.sites(), 0), cdig(shape.sites(), 0);
      int rr = r, cc = c;
      for (int i = static_cast<int>(kept.size()) - 1; i >= 0; --i) {
        const int s = kept[static_cast<std::size_t>(i)];
        rdig[static_cast<std::size_t>(s)] = rr % shape.dim(s);
        rr /= shape.dim(s);
        cdig[static_cast<std::size_t>(s)] = cc % shape.dim(s);
        cc /= shape.dim(s);
      }
      Cplx sum = 0.0;
      for (int k = 0; k < d_site; ++k) {
        rdig[static_cast<std::size_t>(site)] = k;
        cdig[static_cast<std::size_t>(site)] = k;
        sum += m(shape.flat(rdig), shape.flat(cdig));
      }
      out(r, c) = sum;
    }
  }
  return out;
}

}  // namespace sepscope
