#include "sepscope/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sepscope {

namespace {

std::string site_key(const std::string& prefix, int site) {
  std::ostringstream out;
  out << prefix << "_site" << site;
  return out.str();
}

// Closed-form eigenvalue minima (8 rho scale) of the four 2x2 blocks of the
// GHZ-diagonal PTU matrices, one row per pivot A, B, C.
std::array<std::array<double, 4>, 3> ghz_diag_block_minima(const std::array<double, 8>& p) {
  const double d12 = p[0] - p[1], d34 = p[2] - p[3], d56 = p[4] - p[5], d78 = p[6] - p[7];
  const double s12 = p[0] + p[1], s34 = p[2] + p[3], s56 = p[4] + p[5], s78 = p[6] + p[7];
  return {{
      {4 * (s78 - d12), 4 * (s56 - d34), 4 * (s34 - d56), 4 * (s12 - d78)},  // PTU;A
      {4 * (s56 - d12), 4 * (s78 - d34), 4 * (s12 - d56), 4 * (s34 - d78)},  // PTU;B
      {4 * (s34 - d12), 4 * (s12 - d34), 4 * (s78 - d56), 4 * (s56 - d78)},  // PTU;C
  }};
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Entangled:
      return "entangled";
    case Outcome::SeparableCertified:
      return "separable_certified";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(Detector d) {
  return d == Detector::Ppt ? "ppt" : "guhne";
}

std::optional<Detector> detector_from_string(const std::string& name) {
  if (name == "ppt") return Detector::Ppt;
  if (name == "guhne") return Detector::Guhne;
  return std::nullopt;
}

CriterionVerdict ppt_verdict(const DensityMatrix& rho, double tol) {
  CriterionVerdict verdict;
  verdict.criterion = "ppt";

  double worst = 0.0;
  int worst_site = -1;
  for (int site = 0; site < rho.shape().sites(); ++site) {
    const Spectrum spec = eig_hermitian(partial_transpose(rho, site).matrix, 1e-8);
    const double min_eig = spec.front();
    verdict.diagnostics.emplace_back(site_key("min_pt_eigenvalue", site), min_eig);
    if (min_eig < worst) {
      worst = min_eig;
      worst_site = site;
    }
  }

  if (worst < -tol) {
    verdict.outcome = Outcome::Entangled;
    verdict.witness = Witness{"negative_eigenvalue", worst_site, worst, 0.0};
  }
  return verdict;
}

CriterionVerdict l1_sufficient(const HSDecomposition& hs) {
  if (!hs.shape().all_qubits())
    throw PreconditionError("l1_sufficient: all-qubit shape required");

  CriterionVerdict verdict;
  verdict.criterion = "l1_sufficient";
  const double l1 = l1_offidentity(hs);
  verdict.diagnostics.emplace_back("l1_offidentity", l1);
  if (l1 <= 1.0) {
    verdict.outcome = Outcome::SeparableCertified;
    verdict.certificate = certify_l1(hs);
  }
  return verdict;
}

CriterionVerdict svd_sufficient(const HSDecomposition& hs) {
  const SystemShape& shape = hs.shape();
  CriterionVerdict verdict;
  verdict.criterion = "svd_sufficient";

  if (shape.sites() == 2 && shape.dim(0) == 2) {
    const SVDReduction reduction = svd_reduce_qubit_qudit(hs);
    const double sum = reduction.sum_abs();
    verdict.diagnostics.emplace_back("singular_value_sum", sum);
    if (sum <= 1.0) {
      verdict.outcome = Outcome::SeparableCertified;
      verdict.certificate = certify_qubit_qudit_mds(hs, reduction);
    }
    return verdict;
  }

  if (shape.sites() == 3 && shape.all_qubits()) {
    if (!is_mds_pattern(hs))
      throw PreconditionError("svd_sufficient: 3-qubit input is not MDS");
    double best = 0.0;
    int best_pivot = -1;
    std::vector<SVDReduction> reductions;
    for (int pivot = 0; pivot < 3; ++pivot) {
      reductions.push_back(svd_reduce_3q_slices(hs, pivot));
      const double sum = reductions.back().sum_abs();
      verdict.diagnostics.emplace_back(site_key("singular_value_sum", pivot), sum);
      if (best_pivot < 0 || sum < best) {
        best = sum;
        best_pivot = pivot;
      }
    }
    verdict.diagnostics.emplace_back("best_pivot", best_pivot);
    if (best <= 1.0) {
      verdict.outcome = Outcome::SeparableCertified;
      verdict.certificate =
          certify_3q_mds_svd(hs, reductions[static_cast<std::size_t>(best_pivot)]);
    }
    return verdict;
  }

  throw PreconditionError("svd_sufficient: shape not an MDS form this test supports");
}

CriterionVerdict mds_eigen_bound(const DensityMatrix& rho, double tol) {
  const SystemShape& shape = rho.shape();
  CriterionVerdict verdict;
  verdict.criterion = "mds_eigen_bound";

  double bound = 0.0;
  if (shape.all_qubits()) {
    if (!is_mds(rho)) throw PreconditionError("mds_eigen_bound: state is not MDS");
    bound = 2.0 / shape.total_dim();  // 1 / 2^(n-1)
  } else if (shape.sites() == 2 && shape.dim(0) == 2) {
    // Qubit marginal terms must vanish (the sigma_l (x) f_mu + sigma_l (x) I form).
    if (!no_identity_terms_at(decompose(rho), 0))
      throw PreconditionError("mds_eigen_bound: qubit-site identity terms present");
    bound = 1.0 / shape.dim(1);
  } else {
    throw PreconditionError("mds_eigen_bound: unsupported shape");
  }

  const Spectrum spec = eig_hermitian(rho.matrix(), 1e-8);
  const double max_eig = spec.back();
  verdict.diagnostics.emplace_back("max_eigenvalue", max_eig);
  verdict.diagnostics.emplace_back("bound", bound);
  if (max_eig > bound + tol) {
    verdict.outcome = Outcome::Entangled;
    verdict.witness = Witness{"eigenvalue_bound", -1, max_eig, bound};
  }
  return verdict;
}

CriterionVerdict guhne_necessary(const DensityMatrix& rho, double tol) {
  const SystemShape& shape = rho.shape();
  if (shape.sites() != 3 || !shape.all_qubits())
    throw PreconditionError("guhne_necessary: 3-qubit shape required");

  CriterionVerdict verdict;
  verdict.criterion = "guhne_necessary";

  const Matrix& m = rho.matrix();
  const double lhs = std::abs(m(0, 7));
  double product = 1.0;
  for (int k = 1; k <= 6; ++k) product *= std::max(0.0, m(k, k).real());
  const double rhs = std::pow(product, 1.0 / 6.0);

  verdict.diagnostics.emplace_back("corner_magnitude", lhs);
  verdict.diagnostics.emplace_back("diagonal_geometric_mean", rhs);
  if (lhs - rhs > tol) {
    verdict.outcome = Outcome::Entangled;
    verdict.witness = Witness{"inequality", -1, lhs, rhs};
  }
  return verdict;
}

GhzDiagReport ghz_diag_analysis(const GhzDiagParams& params, double tol) {
  GhzDiagReport report;
  report.p = params.probabilities();
  const auto& p = report.p;

  report.r111 = p[0] + p[2] + p[4] + p[6] - p[1] - p[3] - p[5] - p[7];
  report.r122 = p[1] + p[2] + p[4] + p[7] - p[0] - p[3] - p[5] - p[6];
  report.r212 = p[1] + p[2] + p[5] + p[6] - p[0] - p[3] - p[4] - p[7];
  report.r221 = p[1] + p[3] + p[4] + p[6] - p[0] - p[2] - p[5] - p[7];
  report.t33 = 2.0 * (p[0] + p[1] + p[6] + p[7]) - 1.0;
  report.o33 = 2.0 * (p[0] + p[1] + p[4] + p[5]) - 1.0;
  report.p33 = 2.0 * (p[0] + p[1] + p[2] + p[3]) - 1.0;

  const auto blocks = ghz_diag_block_minima(p);
  report.lambda_min_principal = {blocks[0][0], blocks[1][0], blocks[2][0]};
  for (int pivot = 0; pivot < 3; ++pivot)
    report.lambda_min_closed[static_cast<std::size_t>(pivot)] =
        *std::min_element(blocks[static_cast<std::size_t>(pivot)].begin(),
                          blocks[static_cast<std::size_t>(pivot)].end());

  // Numeric cross-check; disagreement indicates a transcription bug.
  const DensityMatrix rho = ghz_diagonal(params);
  for (int pivot = 0; pivot < 3; ++pivot) {
    const Spectrum spec = eig_hermitian(ptu_qubit(rho, pivot).matrix, 1e-8);
    report.lambda_min_numeric[static_cast<std::size_t>(pivot)] = 8.0 * spec.front();
    if (std::abs(report.lambda_min_numeric[static_cast<std::size_t>(pivot)] -
                 report.lambda_min_closed[static_cast<std::size_t>(pivot)]) > 1e-8)
      throw std::logic_error("ghz_diag_analysis: closed form disagrees with numerics");
  }

  report.p1_bound_ok = p[0] <= 0.25;
  report.special_case = std::abs(report.t33 - report.o33) <= 1e-10 &&
                        std::abs(report.o33 - report.p33) <= 1e-10;
  if (report.special_case)
    report.special_entangled = (p[0] - p[1] / 2.0 > 0.25) ? 1 : 0;

  const double common =
      std::max(0.0, std::min({report.t33, report.o33, report.p33}));
  report.certificate_budget = std::abs(report.r111) + std::abs(report.r122) +
                              std::abs(report.r212) + std::abs(report.r221) +
                              std::abs(report.t33 - common) + std::abs(report.o33 - common) +
                              std::abs(report.p33 - common) + common;

  CriterionVerdict verdict;
  verdict.criterion = "ghz_diagonal_closed_form";
  for (int pivot = 0; pivot < 3; ++pivot)
    verdict.diagnostics.emplace_back(
        site_key("lambda_min_8rho", pivot),
        report.lambda_min_closed[static_cast<std::size_t>(pivot)]);
  verdict.diagnostics.emplace_back("p1", p[0]);
  verdict.diagnostics.emplace_back("certificate_budget", report.certificate_budget);

  double worst = 0.0;
  int worst_pivot = -1;
  for (int pivot = 0; pivot < 3; ++pivot) {
    const double lam = report.lambda_min_closed[static_cast<std::size_t>(pivot)] / 8.0;
    if (lam < worst) {
      worst = lam;
      worst_pivot = pivot;
    }
  }
  if (worst < -tol) {
    verdict.outcome = Outcome::Entangled;
    verdict.witness = Witness{"negative_eigenvalue", worst_pivot, worst, 0.0};
  } else if (report.certificate_budget <= 1.0 + 1e-12) {
    verdict.outcome = Outcome::SeparableCertified;
    verdict.certificate = certify_ghz_diagonal(params);
  }
  report.verdict = std::move(verdict);
  return report;
}

ThresholdResult noise_threshold(const DensityMatrix& rho, Detector detector,
                                double tol_p) {
  if (detector == Detector::Guhne &&
      (rho.shape().sites() != 3 || !rho.shape().all_qubits()))
    throw PreconditionError("noise_threshold: guhne detector needs 3 qubits");

  const auto evaluate = [&](double p) {
    ScanRow row;
    row.p = p;
    const DensityMatrix mixed = mix_white_noise(rho, MixtureParams(p));
    if (detector == Detector::Ppt) {
      double worst = std::numeric_limits<double>::infinity();
      for (int site = 0; site < rho.shape().sites(); ++site) {
        const Spectrum spec = eig_hermitian(partial_transpose(mixed, site).matrix, 1e-8);
        row.per_site.push_back(spec.front());
        worst = std::min(worst, spec.front());
      }
      row.margin = worst;
    } else {
      const Matrix& m = mixed.matrix();
      double product = 1.0;
      for (int k = 1; k <= 6; ++k) product *= std::max(0.0, m(k, k).real());
      row.margin = std::pow(product, 1.0 / 6.0) - std::abs(m(0, 7));
    }
    return row;
  };

  ThresholdResult result;
  result.detector = detector;
  result.tol_p = tol_p;

  constexpr int kScanPoints = 64;
  for (int k = 0; k < kScanPoints; ++k)
    result.scan.push_back(evaluate(static_cast<double>(k) / (kScanPoints - 1)));

  int sign_changes = 0;
  for (int k = 0; k + 1 < kScanPoints; ++k) {
    if (result.scan[static_cast<std::size_t>(k)].margin <
        result.scan[static_cast<std::size_t>(k) + 1].margin - 1e-10)
      throw PreconditionError("noise_threshold: margin is not monotone in p");
    if (result.scan[static_cast<std::size_t>(k)].margin >= 0.0 &&
        result.scan[static_cast<std::size_t>(k) + 1].margin < 0.0)
      ++sign_changes;
  }
  if (sign_changes > 1)
    throw PreconditionError("noise_threshold: multiple sign changes in scan");

  if (result.scan.back().margin >= 0.0) return result;  // never fires on [0, 1]

  double lo = 0.0, hi = 1.0;
  if (result.scan.front().margin < 0.0) {
    result.threshold = 0.0;
    return result;
  }
  while (hi - lo > tol_p) {
    const double mid = 0.5 * (lo + hi);
    (evaluate(mid).margin < 0.0 ? hi : lo) = mid;
  }
  result.threshold = 0.5 * (lo + hi);
  return result;
}

std::optional<GhzDiagParams> match_ghz_diagonal(const DensityMatrix& rho, double tol) {
  const SystemShape& shape = rho.shape();
  if (shape.sites() != 3 || !shape.all_qubits()) return std::nullopt;

  const Matrix& m = rho.matrix();
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if (r != c && r + c != 7 && std::abs(m(r, c)) > tol) return std::nullopt;
      if (std::abs(m(r, c).imag()) > tol) return std::nullopt;
    }
    if (std::abs(m(r, r) - m(7 - r, 7 - r)) > tol) return std::nullopt;
  }

  std::array<double, 8> p{};
  static constexpr int kRows[4] = {0, 1, 2, 3};
  for (int k = 0; k < 4; ++k) {
    const int r = kRows[k];
    p[static_cast<std::size_t>(2 * k)] = m(r, r).real() + m(r, 7 - r).real();
    p[static_cast<std::size_t>(2 * k + 1)] = m(r, r).real() - m(r, 7 - r).real();
  }
  try {
    return GhzDiagParams(p);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

}  // namespace sepscope
