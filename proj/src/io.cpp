#include "sepscope/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sepscope {

namespace {

Json complex_entry(const Cplx& z) { return Json::array({z.real(), z.imag()}); }

Json matrix_entries(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(complex_entry(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix entries_to_matrix(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix: expected rows");
  const auto n_rows = rows.size();
  const auto n_cols = rows[0].size();
  Matrix m(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(n_cols));
  for (std::size_t r = 0; r < n_rows; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n_cols)
      throw ParseError("matrix: ragged rows");
    for (std::size_t c = 0; c < n_cols; ++c) {
      const Json& e = rows[r][c];
      if (!e.is_array() || e.size() != 2)
        throw ParseError("matrix: entries must be [re, im]");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

SystemShape shape_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("shape: expected dimension list");
  std::vector<int> dims;
  for (const auto& d : j) dims.push_back(d.get<int>());
  return SystemShape(dims);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

void dump_value(const Json& j, std::ostringstream& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * (static_cast<std::size_t>(depth) + 1), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * static_cast<std::size_t>(depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(key).dump() << ": ";
        dump_value(value, out, indent, depth + 1);
      }
      out << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Flat arrays of numbers stay on one line; nested structures indent.
      bool scalar_only = true;
      for (const auto& v : j)
        if (v.is_structured()) scalar_only = false;
      if (scalar_only) {
        out << "[";
        bool first = true;
        for (const auto& v : j) {
          if (!first) out << ", ";
          first = false;
          dump_value(v, out, indent, depth);
        }
        out << "]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        dump_value(v, out, indent, depth + 1);
      }
      out << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float:
      out << format_double(j.get<double>());
      return;
    default:
      out << j.dump();
      return;
  }
}

}  // namespace

Json matrix_to_json(const Matrix& m, const SystemShape& shape) {
  Json j;
  j["shape"] = shape.dims();
  j["matrix"] = matrix_entries(m);
  return j;
}

std::pair<Matrix, SystemShape> matrix_from_json(const Json& j) {
  if (!j.contains("shape") || !j.contains("matrix"))
    throw ParseError("matrix file: missing 'shape' or 'matrix'");
  SystemShape shape = shape_from_json(j["shape"]);
  Matrix m = entries_to_matrix(j["matrix"]);
  return {std::move(m), std::move(shape)};
}

Json certificate_to_json(const SeparableDecomposition& cert) {
  Json j;
  j["shape"] = cert.shape.dims();
  Json terms = Json::array();
  for (const auto& term : cert.terms) {
    Json t;
    t["weight"] = term.weight;
    Json factors = Json::array();
    for (const auto& f : term.factors) factors.push_back(matrix_entries(f));
    t["factors"] = std::move(factors);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SeparableDecomposition certificate_from_json(const Json& j) {
  if (!j.contains("shape") || !j.contains("terms"))
    throw ParseError("certificate file: missing 'shape' or 'terms'");
  SeparableDecomposition cert{shape_from_json(j["shape"]), {}};
  for (const auto& t : j["terms"]) {
    if (!t.contains("weight") || !t.contains("factors"))
      throw ParseError("certificate term: missing 'weight' or 'factors'");
    ProductTerm term;
    term.weight = t["weight"].get<double>();
    for (const auto& f : t["factors"]) term.factors.push_back(entries_to_matrix(f));
    cert.terms.push_back(std::move(term));
  }
  return cert;
}

Json verdict_to_json(const CriterionVerdict& verdict) {
  Json j;
  j["criterion"] = verdict.criterion;
  j["outcome"] = to_string(verdict.outcome);
  if (verdict.witness) {
    Json w;
    w["kind"] = verdict.witness->kind;
    if (verdict.witness->site >= 0) w["site"] = verdict.witness->site;
    w["value"] = verdict.witness->value;
    w["bound"] = verdict.witness->bound;
    j["witness"] = std::move(w);
  }
  Json diag;
  for (const auto& [key, value] : verdict.diagnostics) diag[key] = value;
  j["diagnostics"] = std::move(diag);
  if (verdict.certificate) {
    j["certificate_terms"] = verdict.certificate->terms.size();
    j["certificate"] = certificate_to_json(*verdict.certificate);
  }
  return j;
}

Json report_to_json(const AnalysisReport& report, bool include_timing) {
  Json j;
  j["input"] = report.input;
  j["shape"] = report.shape.dims();
  j["spectrum"] = report.spectrum;

  Json hs;
  hs["term_count"] = report.hs_terms.size();
  hs["l1_offidentity"] = report.l1;
  Json terms = Json::array();
  for (const auto& [idx, c] : report.hs_terms) {
    Json t;
    t["index"] = idx;
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  hs["terms"] = std::move(terms);
  j["hs"] = std::move(hs);

  Json criteria = Json::array();
  for (const auto& v : report.verdicts) criteria.push_back(verdict_to_json(v));
  j["criteria"] = std::move(criteria);

  if (report.ghz_diag) {
    const GhzDiagReport& g = *report.ghz_diag;
    Json gj;
    gj["probabilities"] = g.p;
    Json coeffs;
    coeffs["r111"] = g.r111;
    coeffs["r122"] = g.r122;
    coeffs["r212"] = g.r212;
    coeffs["r221"] = g.r221;
    coeffs["t33"] = g.t33;
    coeffs["o33"] = g.o33;
    coeffs["p33"] = g.p33;
    gj["coefficients"] = std::move(coeffs);
    gj["lambda_min_principal_8rho"] = g.lambda_min_principal;
    gj["lambda_min_closed_8rho"] = g.lambda_min_closed;
    gj["lambda_min_numeric_8rho"] = g.lambda_min_numeric;
    gj["p1_bound_ok"] = g.p1_bound_ok;
    gj["special_case"] = g.special_case;
    if (g.special_entangled >= 0) gj["special_case_entangled"] = g.special_entangled == 1;
    gj["certificate_budget"] = g.certificate_budget;
    j["ghz_diagonal"] = std::move(gj);
  }

  j["overall"] = to_string(report.overall);
  if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

Json threshold_to_json(const ThresholdResult& result, const std::string& state) {
  Json j;
  j["state"] = state;
  j["detector"] = to_string(result.detector);
  j["tolerance"] = result.tol_p;
  if (result.threshold)
    j["threshold"] = *result.threshold;
  else
    j["threshold"] = nullptr;
  Json scan = Json::array();
  for (const auto& row : result.scan) {
    Json r;
    r["p"] = row.p;
    if (!row.per_site.empty()) r["min_ptu_eigenvalue_per_site"] = row.per_site;
    r["margin"] = row.margin;
    scan.push_back(std::move(r));
  }
  j["scan"] = std::move(scan);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

std::string dump_json(const Json& j, int indent) {
  std::ostringstream out;
  dump_value(j, out, indent, 0);
  out << "\n";
  return out.str();
}

}  // namespace sepscope
