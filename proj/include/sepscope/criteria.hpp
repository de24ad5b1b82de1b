#pragma once

// Entanglement and separability criteria: per-site PPT spectral tests, the
// l1 and SVD sufficient-separability tests with certificates, MDS eigenvalue
// bounds, the necessary inequality on 3-qubit matrix entries, GHZ-diagonal
// closed forms, and white-noise threshold bisection.

#include "sepscope/certificates.hpp"
#include "sepscope/hs.hpp"
#include "sepscope/kernel.hpp"
#include "sepscope/states.hpp"
#include "sepscope/transforms.hpp"

#include <optional>
#include <string>
#include <utility>

namespace sepscope {

// Eigenvalues above -kEntanglementTol count as nonnegative; strict
// inequalities in the criteria justify treating the boundary as undecided.
inline constexpr double kEntanglementTol = 1e-9;

enum class Outcome { Entangled, SeparableCertified, Inconclusive };

std::string to_string(Outcome o);

struct Witness {
  std::string kind;    // "negative_eigenvalue", "eigenvalue_bound", "inequality"
  int site = -1;       // offending site where applicable
  double value = 0.0;  // the negative eigenvalue / violating quantity
  double bound = 0.0;  // the bound it crossed
};

struct CriterionVerdict {
  std::string criterion;
  Outcome outcome = Outcome::Inconclusive;
  std::optional<Witness> witness;
  std::optional<SeparableDecomposition> certificate;
  std::vector<std::pair<std::string, double>> diagnostics;
};

// Peres-Horodecki over every site. Entangled with the most negative
// (site, eigenvalue) witness, otherwise Inconclusive; never certifies.
CriterionVerdict ppt_verdict(const DensityMatrix& rho, double tol = kEntanglementTol);

// l1 over the non-identity coefficients; <= 1 certifies separability.
CriterionVerdict l1_sufficient(const HSDecomposition& hs);

// SVD-sharpened test: qubit (x) qudit MDS uses the 3 x (d^2-1) reduction,
// 3-qubit MDS takes the best pivot of the slice reductions.
CriterionVerdict svd_sufficient(const HSDecomposition& hs);

// Max-eigenvalue bound for MDS states: 1/2^(n-1) for n qubits, 1/d for a
// qubit (x) qudit whose qubit marginal terms vanish.
CriterionVerdict mds_eigen_bound(const DensityMatrix& rho, double tol = kEntanglementTol);

// |rho_{1,8}| <= (rho_22 rho_33 rho_44 rho_55 rho_66 rho_77)^(1/6),
// necessary for full separability of 3 qubits.
CriterionVerdict guhne_necessary(const DensityMatrix& rho, double tol = kEntanglementTol);

struct GhzDiagReport {
  std::array<double, 8> p{};  // sorted descending
  double r111 = 0, r122 = 0, r212 = 0, r221 = 0, t33 = 0, o33 = 0, p33 = 0;
  // All on the 8 rho scale. `principal` holds the first-block closed forms
  // 4[p7+p8-(p1-p2)], 4[p5+p6-(p1-p2)], 4[p3+p4-(p1-p2)]; `closed` is the
  // minimum over all four analytic 2x2 blocks and equals the numeric value.
  std::array<double, 3> lambda_min_principal{};
  std::array<double, 3> lambda_min_closed{};
  std::array<double, 3> lambda_min_numeric{};
  bool p1_bound_ok = false;   // p1 <= 1/4
  bool special_case = false;  // t33 = o33 = p33
  int special_entangled = -1; // -1 n/a, 0 separable, 1 entangled (sharp line)
  double certificate_budget = 0.0;
  CriterionVerdict verdict;
};

GhzDiagReport ghz_diag_analysis(const GhzDiagParams& params,
                                double tol = kEntanglementTol);

enum class Detector { Ppt, Guhne };

std::string to_string(Detector d);
std::optional<Detector> detector_from_string(const std::string& name);

struct ScanRow {
  double p = 0.0;
  std::vector<double> per_site;  // min PT eigenvalue per site (PPT detector)
  double margin = 0.0;           // negative iff the detector fires
};

struct ThresholdResult {
  std::optional<double> threshold;  // empty: detector never fires on [0, 1]
  Detector detector = Detector::Ppt;
  double tol_p = 1e-6;
  std::vector<ScanRow> scan;
};

// Infimum p* with the detector firing for all p > p*, found by bisection
// after a 64-point monotonicity scan of the margin.
ThresholdResult noise_threshold(const DensityMatrix& rho, Detector detector,
                                double tol_p = 1e-6);

// Recognize the GHZ-diagonal sparsity pattern (diagonal plus anti-diagonal
// with paired entries) and recover the probabilities.
std::optional<GhzDiagParams> match_ghz_diagonal(const DensityMatrix& rho,
                                                double tol = 1e-10);

}  // namespace sepscope
