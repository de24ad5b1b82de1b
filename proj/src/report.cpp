#include "sepscope/report.hpp"

#include <chrono>

namespace sepscope {

AnalysisReport run_analysis(const DensityMatrix& rho, const std::string& descriptor,
                            double tol) {
  const auto start = std::chrono::steady_clock::now();
  const SystemShape& shape = rho.shape();

  AnalysisReport report{descriptor, shape, {}, 0.0, {}, {}, {}, Outcome::Inconclusive, 0.0};
  report.spectrum = eig_hermitian(rho.matrix(), 1e-8);

  const HSDecomposition hs = decompose(rho);
  report.l1 = l1_offidentity(hs);
  for (const auto& [idx, c] : hs.terms()) report.hs_terms.emplace_back(idx, c);

  report.verdicts.push_back(ppt_verdict(rho, tol));

  const bool three_qubits = shape.sites() == 3 && shape.all_qubits();
  if (three_qubits) report.verdicts.push_back(guhne_necessary(rho, tol));

  const bool qubit_qudit = shape.sites() == 2 && shape.dim(0) == 2;
  if ((shape.all_qubits() && is_mds(rho)) ||
      (qubit_qudit && no_identity_terms_at(hs, 0)))
    report.verdicts.push_back(mds_eigen_bound(rho, tol));

  if (shape.all_qubits()) report.verdicts.push_back(l1_sufficient(hs));

  if ((qubit_qudit || three_qubits) && is_mds_pattern(hs))
    report.verdicts.push_back(svd_sufficient(hs));

  if (three_qubits) {
    if (auto params = match_ghz_diagonal(rho)) {
      report.ghz_diag = ghz_diag_analysis(*params, tol);
      report.verdicts.push_back(report.ghz_diag->verdict);
    }
  }

  bool any_entangled = false, any_certified = false;
  for (const auto& v : report.verdicts) {
    any_entangled |= v.outcome == Outcome::Entangled;
    any_certified |= v.outcome == Outcome::SeparableCertified;
  }
  if (any_entangled && any_certified)
    throw std::logic_error("run_analysis: criteria disagree (entangled and certified)");
  report.overall = any_entangled      ? Outcome::Entangled
                   : any_certified    ? Outcome::SeparableCertified
                                      : Outcome::Inconclusive;

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace sepscope
