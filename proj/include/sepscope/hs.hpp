#pragma once

// Hilbert-Schmidt coefficient transforms: forward extraction from a density
// matrix, inverse reconstruction, l1 accounting over the non-identity terms,
// the G/S split under a chosen pivot qubit, and the SVD reductions that
// rotate coefficient tensors into fewer parameters with smaller l1 norm.

#include "sepscope/bases.hpp"
#include "sepscope/kernel.hpp"

#include <map>

namespace sepscope {

using MultiIndex = std::vector<int>;

// Sparse real coefficient tensor over multi-site basis elements. The
// identity multi-index (0,...,0) is fixed to 1 by normalization and is not
// stored; `terms()` holds the non-identity coefficients only.
class HSDecomposition {
 public:
  static HSDecomposition from_coeffs(SystemShape shape,
                                     std::map<MultiIndex, double> coeffs);

  const SystemShape& shape() const { return shape_; }
  const std::map<MultiIndex, double>& terms() const { return coeffs_; }
  double coeff(const MultiIndex& idx) const;

 private:
  HSDecomposition(SystemShape shape, std::map<MultiIndex, double> coeffs)
      : shape_(std::move(shape)), coeffs_(std::move(coeffs)) {}

  SystemShape shape_;
  std::map<MultiIndex, double> coeffs_;
};

// coeff(idx) = D * tr(rho * E_idx) / tr(E_idx^2), D = total dimension, so
// that rho = (1/D) * sum coeff(idx) * E_idx. Coefficients below 1e-14 are
// dropped from the sparse map.
HSDecomposition decompose(const DensityMatrix& rho);

// Hermitian, unit trace; need not be positive (used to probe candidate
// coefficient tensors).
Matrix reconstruct(const HSDecomposition& hs);

// Sum of |coeff| over all non-identity multi-indices.
double l1_offidentity(const HSDecomposition& hs);

struct GSSplit {
  // Non-identity terms with identity at the pivot qubit (the part invariant
  // under the pivot's PTU), and the complement that changes sign.
  std::map<MultiIndex, double> g_part;
  std::map<MultiIndex, double> s_part;
};
GSSplit gs_split(const HSDecomposition& hs, int pivot);

struct SVDReduction {
  std::optional<int> pivot;                          // slice site, or none
  std::vector<std::vector<double>> singular_values;  // one list per slice
  std::vector<RealMatrix> rotations_u;               // per slice
  std::vector<RealMatrix> rotations_v;

  double sum_abs() const;
};

// SVD of the 3 x (d^2-1) coefficient matrix t_{l,mu} of a qubit (x) qudit
// state whose single-site coefficients all vanish.
SVDReduction svd_reduce_qubit_qudit(const HSDecomposition& hs, double tol = kMdsTol);

// Per-pivot-value SVD of the 3x3 slices of the triple-index tensor R_{lmn}
// of a 3-qubit state; pair and single coefficients are ignored.
SVDReduction svd_reduce_3q_slices(const HSDecomposition& hs, int pivot);

// True iff every stored term with identity at `site` is below tol.
bool no_identity_terms_at(const HSDecomposition& hs, int site, double tol = kMdsTol);

// True iff only full-weight correlation terms survive (the coefficient-level
// MDS check).
bool is_mds_pattern(const HSDecomposition& hs, double tol = kMdsTol);

}  // namespace sepscope
