#include "sepscope/cli.hpp"

#include "sepscope/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace sepscope::cli {

namespace {

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw ParseError("expected a number, got '" + token + "'");
    }
    if (used != token.size()) throw ParseError("trailing characters in '" + token + "'");
    out.push_back(v);
  }
  return out;
}

int parse_int(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer " + what + ", got '" + token + "'");
  }
}

char site_letter(int site) { return static_cast<char>('A' + site); }

double env_tolerance() {
  const char* raw = std::getenv("SEPSCOPE_TOL");
  if (raw == nullptr) return kEntanglementTol;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0))
    throw ParseError("SEPSCOPE_TOL must be a positive number");
  return v;
}

std::string index_symbols(const MultiIndex& idx, const SystemShape& shape) {
  static constexpr const char* kPauli[] = {"I", "x", "y", "z"};
  std::ostringstream out;
  out << "(";
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (s > 0) out << ",";
    if (shape.dim(static_cast<int>(s)) == 2)
      out << kPauli[idx[s]];
    else
      out << idx[s];
  }
  out << ")";
  return out.str();
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw ParseError("cannot write file: " + out_path);
  file << text;
}

void print_report_table(const AnalysisReport& report, std::ostream& out) {
  out << "input:    " << report.input << "\n";
  out << "shape:    [";
  for (int s = 0; s < report.shape.sites(); ++s)
    out << (s ? ", " : "") << report.shape.dim(s);
  out << "]\n";
  out << "spectrum:";
  for (double v : report.spectrum) out << " " << std::setprecision(12) << v;
  out << "\n";
  out << "hs terms: " << report.hs_terms.size()
      << "  l1(off-identity) = " << std::setprecision(12) << report.l1 << "\n";
  for (const auto& [idx, c] : report.hs_terms)
    out << "  " << index_symbols(idx, report.shape) << " = " << c << "\n";

  out << "criteria:\n";
  for (const auto& v : report.verdicts) {
    out << "  " << std::left << std::setw(26) << v.criterion << std::right
        << to_string(v.outcome);
    if (v.witness) {
      out << "  [" << v.witness->kind;
      if (v.witness->site >= 0) out << " at " << site_letter(v.witness->site);
      out << ": " << v.witness->value;
      if (v.witness->kind != "negative_eigenvalue") out << " vs bound " << v.witness->bound;
      out << "]";
    }
    if (v.certificate) out << "  [certificate: " << v.certificate->terms.size() << " terms]";
    out << "\n";
  }

  if (report.ghz_diag) {
    const auto& g = *report.ghz_diag;
    out << "ghz-diagonal closed forms (8rho scale): lambda_min per pivot =";
    for (double v : g.lambda_min_closed) out << " " << v;
    out << "\n  p1 = " << g.p[0] << (g.p1_bound_ok ? " (<= 1/4)" : " (> 1/4)")
        << ", special case: " << (g.special_case ? "yes" : "no") << "\n";
  }
  out << "overall:  " << to_string(report.overall) << "\n";
}

void print_report_csv(const AnalysisReport& report, std::ostream& out) {
  out << "criterion,outcome,witness_kind,witness_site,witness_value,witness_bound\n";
  for (const auto& v : report.verdicts) {
    out << v.criterion << "," << to_string(v.outcome) << ",";
    if (v.witness) {
      out << v.witness->kind << ",";
      if (v.witness->site >= 0) out << site_letter(v.witness->site);
      out << "," << std::setprecision(15) << v.witness->value << "," << v.witness->bound;
    } else {
      out << ",,,";
    }
    out << "\n";
  }
}

struct InputSpec {
  std::string state_expr;
  std::string file_path;
  double noise = -1.0;  // <0: no mixing

  std::string describe() const {
    std::ostringstream out;
    if (!file_path.empty())
      out << "file:" << file_path;
    else
      out << state_expr;
    if (noise >= 0.0) out << " +noise:" << noise;
    return out.str();
  }
};

DensityMatrix build_input(const InputSpec& spec, double tol) {
  if (!spec.file_path.empty() && !spec.state_expr.empty())
    throw ParseError("give either --state or --file, not both");
  if (spec.file_path.empty() && spec.state_expr.empty())
    throw ParseError("an input is required: --state or --file");

  DensityMatrix rho = [&] {
    if (!spec.file_path.empty()) {
      auto [m, shape] = matrix_from_json(load_json_file(spec.file_path));
      return validate_density(m, shape, tol);
    }
    return parse_state(spec.state_expr);
  }();
  if (spec.noise >= 0.0) rho = mix_white_noise(rho, MixtureParams(spec.noise));
  return rho;
}

int cmd_analyze(const InputSpec& input, const std::string& certificate_path,
                const std::string& against, const std::string& format,
                const std::string& out_path, bool timing, std::ostream& out) {
  const double tol = env_tolerance();

  if (!certificate_path.empty()) {
    // Re-verification mode: check a stored certificate against a target.
    InputSpec target_spec = input;
    if (!against.empty()) target_spec.state_expr = against;
    const DensityMatrix target = build_input(target_spec, tol);
    const SeparableDecomposition cert =
        certificate_from_json(load_json_file(certificate_path));
    const VerifyResult result = verify_certificate(target, cert);

    Json j;
    j["certificate"] = certificate_path;
    j["against"] = target_spec.describe();
    j["verified"] = result.ok;
    j["max_entry_deviation"] = result.max_entry_deviation;
    j["weight_sum"] = result.weight_sum;
    if (!result.ok) j["detail"] = result.detail;
    if (format == "json") {
      write_output(dump_json(j), out_path, out);
    } else {
      std::ostringstream text;
      text << "certificate " << certificate_path << " vs " << target_spec.describe()
           << ": " << (result.ok ? "verified" : "FAILED (" + result.detail + ")")
           << " (max deviation " << result.max_entry_deviation << ")\n";
      write_output(text.str(), out_path, out);
    }
    return 0;
  }

  const DensityMatrix rho = build_input(input, tol);
  const AnalysisReport report = run_analysis(rho, input.describe(), tol);

  std::ostringstream text;
  if (format == "json")
    text << dump_json(report_to_json(report, timing));
  else if (format == "csv")
    print_report_csv(report, text);
  else
    print_report_table(report, text);
  write_output(text.str(), out_path, out);
  return 0;
}

int cmd_threshold(const InputSpec& input, const std::string& detector_name,
                  double tol_p, const std::string& format, const std::string& out_path,
                  std::ostream& out) {
  const double tol = env_tolerance();
  const auto detector = detector_from_string(detector_name);
  if (!detector) throw ParseError("unknown detector '" + detector_name + "'");
  const DensityMatrix rho = build_input(input, tol);
  const ThresholdResult result = noise_threshold(rho, *detector, tol_p);

  std::ostringstream text;
  if (format == "json") {
    text << dump_json(threshold_to_json(result, input.describe()));
  } else if (format == "csv") {
    text << "p";
    const int sites = rho.shape().sites();
    if (*detector == Detector::Ppt)
      for (int s = 0; s < sites; ++s)
        text << ",min_ptu_eigenvalue_site_" << site_letter(s);
    text << ",margin\n";
    for (const auto& row : result.scan) {
      text << std::setprecision(15) << row.p;
      for (double v : row.per_site) text << "," << v;
      text << "," << row.margin << "\n";
    }
  } else {
    text << "state:     " << input.describe() << "\n";
    text << "detector:  " << to_string(result.detector) << "\n";
    if (result.threshold)
      text << "threshold: p* = " << std::setprecision(12) << *result.threshold
           << " (+/- " << result.tol_p << ")\n";
    else
      text << "threshold: no threshold <= 1 (detector never fires)\n";
  }
  write_output(text.str(), out_path, out);
  return 0;
}

int cmd_certify(const InputSpec& input, const std::string& method,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  const double tol = env_tolerance();
  const DensityMatrix target = build_input(input, tol);
  const HSDecomposition hs = decompose(target);

  SeparableDecomposition cert = [&]() -> SeparableDecomposition {
    if (method == "l1") return certify_l1(hs);
    if (method == "svd") {
      const CriterionVerdict verdict = svd_sufficient(hs);
      if (!verdict.certificate)
        throw PreconditionError("certify: singular value sum exceeds 1");
      return *verdict.certificate;
    }
    if (method == "qubit_qudit")
      return certify_qubit_qudit_mds(hs, svd_reduce_qubit_qudit(hs));
    if (method == "two_param") {
      const double r1 = hs.coeff({1, 1, 1});
      const double r3 = hs.coeff({0, 0, 3});
      double residual = 0.0;
      for (const auto& [idx, c] : hs.terms())
        if (idx != MultiIndex{1, 1, 1} && idx != MultiIndex{0, 0, 3})
          residual += std::abs(c);
      if (target.shape().sites() != 3 || residual > 1e-10)
        throw PreconditionError("certify: target is not a two-parameter state");
      return certify_two_param(r1, r3);
    }
    if (method == "braid_mixed" || method == "w_mixed") {
      if (input.noise < 0.0)
        throw PreconditionError("certify: method " + method +
                                " targets a white-noise mixture; pass --noise <p>");
      return method == "braid_mixed" ? certify_braid_mixed(input.noise)
                                     : certify_w_mixed(input.noise);
    }
    throw ParseError("unknown method '" + method + "'");
  }();

  const VerifyResult result = verify_certificate(target, cert);
  if (!result.ok) {
    err << "certificate does not verify against " << input.describe() << ": "
        << result.detail << " (max deviation " << result.max_entry_deviation << ")\n";
    return 1;
  }

  write_output(dump_json(certificate_to_json(cert)), out_path, out);
  if (!out_path.empty())
    out << "verified certificate (" << cert.terms.size() << " terms) -> " << out_path
        << "\n";
  return 0;
}

}  // namespace

DensityMatrix parse_state(const std::string& expr) {
  if (expr == "w") return w_state();
  if (expr == "four_qubit_xyz") return four_qubit_xyz();

  const auto colon = expr.find(':');
  const std::string head = expr.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : expr.substr(colon + 1);

  if (head == "ghz") {
    const int variant = parse_int(tail, "GHZ variant");
    if (variant < 1 || variant > 8) throw ParseError("ghz variant must be 1..8");
    return ghz_state(variant);
  }
  if (head == "braid") {
    const auto second = tail.find(':');
    if (second == std::string::npos) throw ParseError("expected braid:<n>:<i>");
    const int n = parse_int(tail.substr(0, second), "qubit count");
    const int i = parse_int(tail.substr(second + 1), "basis index");
    if (n < 2 || n > 10) throw ParseError("braid qubit count must be 2..10");
    if (i < 1 || i > (1 << n)) throw ParseError("braid basis index out of range");
    return braid_state(n, i);
  }
  if (head == "ghzdiag") {
    const std::vector<double> p = parse_number_list(tail);
    if (p.size() != 8) throw ParseError("ghzdiag needs 8 probabilities");
    std::array<double, 8> arr{};
    std::copy(p.begin(), p.end(), arr.begin());
    return ghz_diagonal(GhzDiagParams(arr));
  }
  if (head == "two_param") {
    std::string args = tail;
    std::replace(args.begin(), args.end(), ':', ',');
    const std::vector<double> r = parse_number_list(args);
    if (r.size() != 2) throw ParseError("two_param needs two parameters");
    return two_param_state(r[0], r[1]);
  }
  throw ParseError("unknown state expression '" + expr + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separability and entanglement analysis of small density matrices"};
  app.require_subcommand(1);

  InputSpec input;
  std::string format = "table";
  std::string out_path;
  std::string certificate_path;
  std::string against;
  std::string detector = "ppt";
  std::string method;
  double tol_p = 1e-6;
  bool timing = false;

  const auto add_input_options = [&](CLI::App* cmd) {
    cmd->add_option("--state", input.state_expr,
                    "state expression (ghz:<1-8>, w, braid:<n>:<i>, "
                    "ghzdiag:p1,...,p8, two_param:<r1>,<r3>, four_qubit_xyz)");
    cmd->add_option("--file", input.file_path, "matrix JSON file");
    cmd->add_option("--noise", input.noise, "mix with white noise, signal weight p")
        ->check(CLI::Range(0.0, 1.0));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "run the criteria pipeline");
  add_input_options(analyze);
  analyze->add_option("--certificate", certificate_path,
                      "re-verify a stored certificate instead of analyzing");
  analyze->add_option("--against", against, "target state expression for --certificate");
  analyze->add_option("--format", format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  analyze->add_option("--out", out_path, "write output to file");
  analyze->add_flag("--timing", timing, "include timing in JSON output");

  CLI::App* threshold = app.add_subcommand("threshold", "white-noise threshold search");
  add_input_options(threshold);
  threshold->add_option("--detector", detector, "ppt|guhne");
  threshold->add_option("--tol-p", tol_p, "bisection tolerance")->check(CLI::PositiveNumber);
  threshold->add_option("--format", format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  threshold->add_option("--out", out_path, "write output to file");

  CLI::App* certify = app.add_subcommand("certify", "build and verify a certificate");
  add_input_options(certify);
  certify->add_option("--method", method, "l1|svd|two_param|braid_mixed|w_mixed|qubit_qudit")
      ->required();
  certify->add_option("--out", out_path, "write the certificate JSON to file");

  std::vector<const char*> argv;
  argv.push_back("sepscope");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed())
      return cmd_analyze(input, certificate_path, against, format, out_path, timing, out);
    if (threshold->parsed())
      return cmd_threshold(input, detector, tol_p, format, out_path, out);
    return cmd_certify(input, method, out_path, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << " (" << e.offending << ")\n";
    return 3;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace sepscope::cli
