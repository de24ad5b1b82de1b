#pragma once

// The combined analysis pipeline: validation, spectrum, HS summary, then
// every applicable criterion in fixed order (PPT, necessary inequality, MDS
// bound, l1, SVD, GHZ-diagonal closed forms).

#include "sepscope/criteria.hpp"

namespace sepscope {

struct AnalysisReport {
  std::string input;
  SystemShape shape;
  Spectrum spectrum;
  double l1 = 0.0;
  std::vector<std::pair<MultiIndex, double>> hs_terms;
  std::vector<CriterionVerdict> verdicts;
  std::optional<GhzDiagReport> ghz_diag;
  Outcome overall = Outcome::Inconclusive;
  double elapsed_ms = 0.0;
};

AnalysisReport run_analysis(const DensityMatrix& rho, const std::string& descriptor,
                            double tol = kEntanglementTol);

}  // namespace sepscope
