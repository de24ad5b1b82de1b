#pragma once

// Explicit separable decompositions and their verification. Certificates
// store concrete local density matrices per term, so verification is a pure
// numeric check independent of how a certificate was constructed.

#include "sepscope/hs.hpp"
#include "sepscope/kernel.hpp"
#include "sepscope/states.hpp"

#include <string>

namespace sepscope {

struct ProductTerm {
  double weight = 0.0;
  std::vector<Matrix> factors;  // one local density matrix per site
};

struct SeparableDecomposition {
  SystemShape shape;
  std::vector<ProductTerm> terms;
};

struct VerifyResult {
  bool ok = false;
  double max_entry_deviation = 0.0;
  double weight_sum = 0.0;
  int first_bad_term = -1;
  std::string detail;
  explicit operator bool() const { return ok; }
};

// True iff sum_j weight_j * kron(factors_j) equals rho entrywise within tol,
// all weights are >= -1e-12 summing to 1 within 1e-10, and every factor is a
// valid local density matrix. Throws ShapeError on shape mismatch.
VerifyResult verify_certificate(const DensityMatrix& rho,
                                const SeparableDecomposition& cert,
                                double tol = 1e-10);

// The four-term decomposition of the two-parameter state
// 8 rho = III + R1 XXX + R3 IIZ, valid on the whole unit disk.
SeparableDecomposition certify_two_param(double r1, double r3);

// Generic construction for an all-qubit decomposition with l1 <= 1: each
// non-identity term of coefficient c expands into 2^(k-1) sign-parity
// product terms of weight |c|/2^(k-1), plus a white-noise remainder.
SeparableDecomposition certify_l1(const HSDecomposition& hs);

// SVD-rotated construction for a qubit (x) qudit state with vanishing
// single-site coefficients and sum |s_i| <= 1: two product terms per
// singular direction at weight |s_i|/2 plus the mixed remainder.
SeparableDecomposition certify_qubit_qudit_mds(const HSDecomposition& hs,
                                               const SVDReduction& reduction);

// 3-qubit MDS construction from the per-slice SVD relative to a pivot:
// the l1 expansion applied to the rotated tensor.
SeparableDecomposition certify_3q_mds_svd(const HSDecomposition& hs,
                                          const SVDReduction& reduction);

// White-noise-mixed braid state B1 at p <= 1/5 (sharp).
SeparableDecomposition certify_braid_mixed(double p);

// White-noise-mixed W state at p <= 1/9.
SeparableDecomposition certify_w_mixed(double p);

// GHZ-diagonal construction: the four full-weight terms expand via the sign
// parity rule; the common nonnegative part of the three z-pair coefficients
// collapses into two product terms. Sharp on the t33 = o33 = p33 line.
SeparableDecomposition certify_ghz_diagonal(const GhzDiagParams& params);

}  // namespace sepscope
