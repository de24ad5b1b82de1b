#include "sepscope/hs.hpp"

#include <cmath>

namespace sepscope {

namespace {

constexpr double kDropTol = 1e-14;

// Odometer over per-site basis ranges d_i^2.
bool next_index(MultiIndex& idx, const SystemShape& shape) {
  for (int s = shape.sites() - 1; s >= 0; --s) {
    const int limit = shape.dim(s) * shape.dim(s);
    auto& v = idx[static_cast<std::size_t>(s)];
    if (++v < limit) return true;
    v = 0;
  }
  return false;
}

bool is_identity_index(const MultiIndex& idx) {
  for (int v : idx)
    if (v != 0) return false;
  return true;
}

}  // namespace

HSDecomposition HSDecomposition::from_coeffs(SystemShape shape,
                                             std::map<MultiIndex, double> coeffs) {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    const auto& [idx, c] = *it;
    if (static_cast<int>(idx.size()) != shape.sites())
      throw ShapeError("HSDecomposition: index length mismatch");
    for (int s = 0; s < shape.sites(); ++s) {
      const int limit = shape.dim(s) * shape.dim(s);
      if (idx[static_cast<std::size_t>(s)] < 0 || idx[static_cast<std::size_t>(s)] >= limit)
        throw ShapeError("HSDecomposition: basis index out of range");
    }
    if (!std::isfinite(c)) throw ShapeError("HSDecomposition: non-finite coefficient");
    if (is_identity_index(idx)) {
      if (std::abs(c - 1.0) > 1e-12)
        throw ShapeError("HSDecomposition: identity coefficient must be 1");
      it = coeffs.erase(it);
    } else {
      ++it;
    }
  }
  return HSDecomposition(std::move(shape), std::move(coeffs));
}

double HSDecomposition::coeff(const MultiIndex& idx) const {
  if (is_identity_index(idx)) return 1.0;
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? 0.0 : it->second;
}

HSDecomposition decompose(const DensityMatrix& rho) {
  const SystemShape& shape = rho.shape();
  const double total = shape.total_dim();
  std::map<MultiIndex, double> coeffs;

  MultiIndex idx(static_cast<std::size_t>(shape.sites()), 0);
  while (next_index(idx, shape)) {
    const Matrix element = basis_element(shape, idx);
    const Cplx raw = (rho.matrix() * element).trace();
    const double c = total * raw.real() / basis_norm_sq(shape, idx);
    if (std::abs(c) > kDropTol) coeffs[idx] = c;
  }
  return HSDecomposition::from_coeffs(shape, std::move(coeffs));
}

Matrix reconstruct(const HSDecomposition& hs) {
  const SystemShape& shape = hs.shape();
  const double total = shape.total_dim();
  Matrix m = Matrix::Identity(shape.total_dim(), shape.total_dim());
  for (const auto& [idx, c] : hs.terms()) m += c * basis_element(shape, idx);
  return m / total;
}

double l1_offidentity(const HSDecomposition& hs) {
  double sum = 0.0;
  for (const auto& [idx, c] : hs.terms()) sum += std::abs(c);
  return sum;
}

GSSplit gs_split(const HSDecomposition& hs, int pivot) {
  if (pivot < 0 || pivot >= hs.shape().sites())
    throw ShapeError("gs_split: pivot out of range");
  if (!hs.shape().is_qubit(pivot)) throw ShapeError("gs_split: pivot is not a qubit");
  GSSplit out;
  for (const auto& [idx, c] : hs.terms()) {
    if (idx[static_cast<std::size_t>(pivot)] == 0)
      out.g_part[idx] = c;
    else
      out.s_part[idx] = c;
  }
  return out;
}

double SVDReduction::sum_abs() const {
  double sum = 0.0;
  for (const auto& slice : singular_values)
    for (double s : slice) sum += std::abs(s);
  return sum;
}

SVDReduction svd_reduce_qubit_qudit(const HSDecomposition& hs, double tol) {
  const SystemShape& shape = hs.shape();
  if (shape.sites() != 2 || shape.dim(0) != 2)
    throw PreconditionError("svd_reduce_qubit_qudit: shape must be [2, d]");
  for (int site = 0; site < 2; ++site) {
    if (!no_identity_terms_at(hs, site, tol))
      throw PreconditionError(
          "svd_reduce_qubit_qudit: single-site coefficients present (not MDS)");
  }

  const int d = shape.dim(1);
  RealMatrix t = RealMatrix::Zero(3, d * d - 1);
  for (const auto& [idx, c] : hs.terms()) t(idx[0] - 1, idx[1] - 1) = c;

  Svd svd = svd_real(t);
  SVDReduction out;
  out.singular_values.push_back(svd.singular_values);
  out.rotations_u.push_back(svd.u);
  out.rotations_v.push_back(svd.v);
  return out;
}

SVDReduction svd_reduce_3q_slices(const HSDecomposition& hs, int pivot) {
  const SystemShape& shape = hs.shape();
  if (shape.sites() != 3 || !shape.all_qubits())
    throw PreconditionError("svd_reduce_3q_slices: shape must be [2,2,2]");
  if (pivot < 0 || pivot > 2) throw ShapeError("svd_reduce_3q_slices: bad pivot");

  std::vector<int> rest;
  for (int s = 0; s < 3; ++s)
    if (s != pivot) rest.push_back(s);

  SVDReduction out;
  out.pivot = pivot;
  for (int l = 1; l <= 3; ++l) {
    RealMatrix slice = RealMatrix::Zero(3, 3);
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        MultiIndex idx(3, 0);
        idx[static_cast<std::size_t>(pivot)] = l;
        idx[static_cast<std::size_t>(rest[0])] = m;
        idx[static_cast<std::size_t>(rest[1])] = n;
        slice(m - 1, n - 1) = hs.coeff(idx);
      }
    }
    Svd svd = svd_real(slice);
    out.singular_values.push_back(svd.singular_values);
    out.rotations_u.push_back(svd.u);
    out.rotations_v.push_back(svd.v);
  }
  return out;
}

bool no_identity_terms_at(const HSDecomposition& hs, int site, double tol) {
  if (site < 0 || site >= hs.shape().sites())
    throw ShapeError("no_identity_terms_at: bad site");
  for (const auto& [idx, c] : hs.terms()) {
    if (idx[static_cast<std::size_t>(site)] == 0 && std::abs(c) > tol) return false;
  }
  return true;
}

bool is_mds_pattern(const HSDecomposition& hs, double tol) {
  for (int s = 0; s < hs.shape().sites(); ++s)
    if (!no_identity_terms_at(hs, s, tol)) return false;
  return true;
}

}  // namespace sepscope
