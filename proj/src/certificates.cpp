#include "sepscope/certificates.hpp"

#include "sepscope/bases.hpp"

#include <cmath>
#include <sstream>

namespace sepscope {

namespace {

Matrix mixed_factor(int d) { return Matrix::Identity(d, d) / d; }

std::vector<Matrix> all_mixed(const SystemShape& shape) {
  std::vector<Matrix> out;
  for (int s = 0; s < shape.sites(); ++s) out.push_back(mixed_factor(shape.dim(s)));
  return out;
}

// Expand one coefficient c on unit-spectrum Hermitian operators ops[j]
// sitting at active_sites[j] (qubit sites) into the 2^(k-1) product terms
// whose sign parity equals sign(c).
void append_sign_expansion(std::vector<ProductTerm>& terms, const SystemShape& shape,
                           const std::vector<int>& active_sites,
                           const std::vector<Matrix>& ops, double c) {
  if (std::abs(c) < 1e-15) return;
  const int k = static_cast<int>(active_sites.size());
  const double parity = c > 0 ? 1.0 : -1.0;
  const double weight = std::abs(c) / static_cast<double>(1 << (k - 1));

  for (int bits = 0; bits < (1 << k); ++bits) {
    double prod = 1.0;
    for (int j = 0; j < k; ++j) prod *= (bits >> j) & 1 ? -1.0 : 1.0;
    if (prod != parity) continue;

    ProductTerm term;
    term.weight = weight;
    term.factors = all_mixed(shape);
    for (int j = 0; j < k; ++j) {
      const double sign = (bits >> j) & 1 ? -1.0 : 1.0;
      const int site = active_sites[static_cast<std::size_t>(j)];
      term.factors[static_cast<std::size_t>(site)] =
          (identity(2) + sign * ops[static_cast<std::size_t>(j)]) / 2.0;
    }
    terms.push_back(std::move(term));
  }
}

void append_remainder(std::vector<ProductTerm>& terms, const SystemShape& shape,
                      double weight) {
  ProductTerm term;
  term.weight = weight;
  term.factors = all_mixed(shape);
  terms.push_back(std::move(term));
}

Matrix bloch_combination(const RealMatrix& rotation, int column) {
  Matrix out = Matrix::Zero(2, 2);
  for (int m = 0; m < 3; ++m) out += rotation(m, column) * pauli(m + 1);
  return out;
}

}  // namespace

VerifyResult verify_certificate(const DensityMatrix& rho,
                                const SeparableDecomposition& cert, double tol) {
  if (cert.shape != rho.shape())
    throw ShapeError("verify_certificate: certificate and target shapes differ");

  VerifyResult result;
  Matrix sum = Matrix::Zero(rho.dim(), rho.dim());

  for (std::size_t t = 0; t < cert.terms.size(); ++t) {
    const ProductTerm& term = cert.terms[t];
    result.weight_sum += term.weight;
    if (term.weight < -1e-12) {
      result.first_bad_term = static_cast<int>(t);
      result.detail = "negative weight";
      return result;
    }
    if (static_cast<int>(term.factors.size()) != cert.shape.sites()) {
      result.first_bad_term = static_cast<int>(t);
      result.detail = "factor count does not match site count";
      return result;
    }
    for (int s = 0; s < cert.shape.sites(); ++s) {
      try {
        validate_density(term.factors[static_cast<std::size_t>(s)],
                         SystemShape({cert.shape.dim(s)}));
      } catch (const std::exception& e) {
        result.first_bad_term = static_cast<int>(t);
        std::ostringstream msg;
        msg << "factor " << s << " invalid: " << e.what();
        result.detail = msg.str();
        return result;
      }
    }
    sum += term.weight * kron(term.factors);
  }

  if (std::abs(result.weight_sum - 1.0) > 1e-10) {
    result.detail = "weights do not sum to 1";
    return result;
  }

  result.max_entry_deviation = (sum - rho.matrix()).cwiseAbs().maxCoeff();
  if (result.max_entry_deviation > tol) {
    result.detail = "reconstruction deviates from target";
    return result;
  }
  result.ok = true;
  return result;
}

SeparableDecomposition certify_two_param(double r1, double r3) {
  if (r1 * r1 + r3 * r3 > 1.0 + 1e-12)
    throw PreconditionError("certify_two_param: R1^2 + R3^2 > 1");

  SeparableDecomposition cert{SystemShape({2, 2, 2}), {}};
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      ProductTerm term;
      term.weight = 0.25;
      term.factors = {(identity(2) + s1 * pauli(1)) / 2.0,
                      (identity(2) + s2 * pauli(1)) / 2.0,
                      (identity(2) + s1 * s2 * r1 * pauli(1) + r3 * pauli(3)) / 2.0};
      cert.terms.push_back(std::move(term));
    }
  }
  return cert;
}

SeparableDecomposition certify_l1(const HSDecomposition& hs) {
  const SystemShape& shape = hs.shape();
  if (!shape.all_qubits()) throw PreconditionError("certify_l1: all-qubit shape required");

  const double l1 = l1_offidentity(hs);
  if (l1 > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "certify_l1: l1 sum " << l1 << " > 1";
    throw PreconditionError(msg.str());
  }

  SeparableDecomposition cert{shape, {}};
  for (const auto& [idx, c] : hs.terms()) {
    std::vector<int> active;
    std::vector<Matrix> ops;
    for (int s = 0; s < shape.sites(); ++s) {
      const int k = idx[static_cast<std::size_t>(s)];
      if (k != 0) {
        active.push_back(s);
        ops.push_back(pauli(k));
      }
    }
    append_sign_expansion(cert.terms, shape, active, ops, c);
  }
  append_remainder(cert.terms, shape, 1.0 - l1);
  return cert;
}

SeparableDecomposition certify_qubit_qudit_mds(const HSDecomposition& hs,
                                               const SVDReduction& reduction) {
  const SystemShape& shape = hs.shape();
  if (shape.sites() != 2 || shape.dim(0) != 2)
    throw PreconditionError("certify_qubit_qudit_mds: shape must be [2, d]");
  if (reduction.singular_values.size() != 1)
    throw PreconditionError("certify_qubit_qudit_mds: expected a single-slice reduction");

  const double sum_abs = reduction.sum_abs();
  if (sum_abs > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "certify_qubit_qudit_mds: sum of singular values " << sum_abs << " > 1";
    throw PreconditionError(msg.str());
  }

  const int d = shape.dim(1);
  const OperatorBasis& qudit = site_basis(d);
  const auto& s = reduction.singular_values[0];
  const RealMatrix& u = reduction.rotations_u[0];
  const RealMatrix& v = reduction.rotations_v[0];

  SeparableDecomposition cert{shape, {}};
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::abs(s[i]) < 1e-15) continue;
    const Matrix sigma_bar = bloch_combination(u, static_cast<int>(i));
    Matrix f_bar = Matrix::Zero(d, d);
    for (int mu = 0; mu < d * d - 1; ++mu)
      f_bar += v(mu, static_cast<int>(i)) * qudit.elements[static_cast<std::size_t>(mu) + 1];

    const double sign = s[i] > 0 ? 1.0 : -1.0;
    for (double branch : {1.0, -1.0}) {
      ProductTerm term;
      term.weight = std::abs(s[i]) / 2.0;
      term.factors = {(identity(2) + branch * sign * sigma_bar) / 2.0,
                      (Matrix::Identity(d, d) + branch * f_bar) / d};
      cert.terms.push_back(std::move(term));
    }
  }
  append_remainder(cert.terms, shape, 1.0 - sum_abs);
  return cert;
}

SeparableDecomposition certify_3q_mds_svd(const HSDecomposition& hs,
                                          const SVDReduction& reduction) {
  const SystemShape& shape = hs.shape();
  if (shape.sites() != 3 || !shape.all_qubits())
    throw PreconditionError("certify_3q_mds_svd: shape must be [2,2,2]");
  if (!is_mds_pattern(hs))
    throw PreconditionError("certify_3q_mds_svd: decomposition is not MDS");
  if (!reduction.pivot)
    throw PreconditionError("certify_3q_mds_svd: reduction carries no pivot");

  const double sum_abs = reduction.sum_abs();
  if (sum_abs > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "certify_3q_mds_svd: sum of slice singular values " << sum_abs << " > 1";
    throw PreconditionError(msg.str());
  }

  const int pivot = *reduction.pivot;
  std::vector<int> rest;
  for (int site = 0; site < 3; ++site)
    if (site != pivot) rest.push_back(site);

  SeparableDecomposition cert{shape, {}};
  for (int l = 1; l <= 3; ++l) {
    const auto& s = reduction.singular_values[static_cast<std::size_t>(l - 1)];
    const RealMatrix& u = reduction.rotations_u[static_cast<std::size_t>(l - 1)];
    const RealMatrix& v = reduction.rotations_v[static_cast<std::size_t>(l - 1)];
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (std::abs(s[i]) < 1e-15) continue;
      const std::vector<int> active = {pivot, rest[0], rest[1]};
      const std::vector<Matrix> ops = {pauli(l), bloch_combination(u, static_cast<int>(i)),
                                       bloch_combination(v, static_cast<int>(i))};
      append_sign_expansion(cert.terms, shape, active, ops, s[i]);
    }
  }
  append_remainder(cert.terms, shape, 1.0 - sum_abs);
  return cert;
}

SeparableDecomposition certify_braid_mixed(double p) {
  if (p < -1e-12 || p > 0.2 + 1e-12)
    throw PreconditionError("certify_braid_mixed: requires 0 <= p <= 1/5");

  const SystemShape shape({2, 2, 2});
  SeparableDecomposition cert{shape, {}};

  // Sign-carrying operator triples reproducing the four full-weight terms of
  // the B1 decomposition: +zzz, -xxz, -xzx, -zxx.
  const Matrix x = pauli(1), y = pauli(2), z = pauli(3);
  const std::vector<std::vector<Matrix>> families = {
      {z, z, z}, {x, x, -z}, {x, -z, x}, {z, x, -x}};
  for (const auto& ops : families)
    append_sign_expansion(cert.terms, shape, {0, 1, 2}, ops, p);

  // The two y-product terms covering the three pair coefficients at once.
  if (p > 1e-15) {
    for (double sign : {1.0, -1.0}) {
      ProductTerm term;
      term.weight = p / 2.0;
      term.factors.assign(3, (identity(2) + sign * y) / 2.0);
      cert.terms.push_back(std::move(term));
    }
  }

  append_remainder(cert.terms, shape, 1.0 - 5.0 * p);
  return cert;
}

SeparableDecomposition certify_w_mixed(double p) {
  if (p < -1e-12 || p > 1.0 / 9.0 + 1e-12)
    throw PreconditionError("certify_w_mixed: requires 0 <= p <= 1/9");

  const SystemShape shape({2, 2, 2});
  const Matrix x = pauli(1), y = pauli(2), z = pauli(3);

  // The fifteen sign patterns of the mixed-W product expansion.
  struct Triple {
    Matrix a, b, c;
  };
  const std::vector<Triple> triples = {
      {z, z, -z},  {-z, z, z},  {z, -z, z},   // z-pair block
      {x, x, z},   {-x, -x, z}, {x, z, x},   {-x, z, -x}, {z, x, x},  {z, -x, -x},
      {y, y, z},   {-y, -y, z}, {y, z, y},   {-y, z, -y}, {z, y, y},  {z, -y, -y}};

  SeparableDecomposition cert{shape, {}};
  if (p > 1e-15) {
    for (const auto& t : triples) {
      ProductTerm term;
      term.weight = p / 3.0;
      term.factors = {(identity(2) + t.a) / 2.0, (identity(2) + t.b) / 2.0,
                      (identity(2) + t.c) / 2.0};
      cert.terms.push_back(std::move(term));
    }
    // The three single-sigma lines carry weight factor 4.
    for (int site = 2; site >= 0; --site) {
      ProductTerm term;
      term.weight = 4.0 * p / 3.0;
      term.factors = all_mixed(shape);
      term.factors[static_cast<std::size_t>(site)] = (identity(2) - z) / 2.0;
      cert.terms.push_back(std::move(term));
    }
  }

  append_remainder(cert.terms, shape, 1.0 - 9.0 * p);
  return cert;
}

SeparableDecomposition certify_ghz_diagonal(const GhzDiagParams& params) {
  const auto& p = params.probabilities();
  const double r111 = p[0] + p[2] + p[4] + p[6] - p[1] - p[3] - p[5] - p[7];
  const double r122 = p[1] + p[2] + p[4] + p[7] - p[0] - p[3] - p[5] - p[6];
  const double r212 = p[1] + p[2] + p[5] + p[6] - p[0] - p[3] - p[4] - p[7];
  const double r221 = p[1] + p[3] + p[4] + p[6] - p[0] - p[2] - p[5] - p[7];
  const double t33 = 2.0 * (p[0] + p[1] + p[6] + p[7]) - 1.0;
  const double o33 = 2.0 * (p[0] + p[1] + p[4] + p[5]) - 1.0;
  const double p33 = 2.0 * (p[0] + p[1] + p[2] + p[3]) - 1.0;

  // Common nonnegative part of the three z-pair coefficients folds into the
  // two-term product identity, reducing the l1 budget.
  const double common = std::max(0.0, std::min({t33, o33, p33}));
  const double budget = std::abs(r111) + std::abs(r122) + std::abs(r212) +
                        std::abs(r221) + std::abs(t33 - common) +
                        std::abs(o33 - common) + std::abs(p33 - common) + common;
  if (budget > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "certify_ghz_diagonal: construction budget " << budget << " > 1";
    throw PreconditionError(msg.str());
  }

  const SystemShape shape({2, 2, 2});
  const Matrix x = pauli(1), y = pauli(2), z = pauli(3);
  SeparableDecomposition cert{shape, {}};

  append_sign_expansion(cert.terms, shape, {0, 1, 2}, {x, x, x}, r111);
  append_sign_expansion(cert.terms, shape, {0, 1, 2}, {x, y, y}, r122);
  append_sign_expansion(cert.terms, shape, {0, 1, 2}, {y, x, y}, r212);
  append_sign_expansion(cert.terms, shape, {0, 1, 2}, {y, y, x}, r221);
  append_sign_expansion(cert.terms, shape, {1, 2}, {z, z}, t33 - common);
  append_sign_expansion(cert.terms, shape, {0, 2}, {z, z}, o33 - common);
  append_sign_expansion(cert.terms, shape, {0, 1}, {z, z}, p33 - common);

  if (common > 1e-15) {
    for (double sign : {1.0, -1.0}) {
      ProductTerm term;
      term.weight = common / 2.0;
      term.factors.assign(3, (identity(2) + sign * z) / 2.0);
      cert.terms.push_back(std::move(term));
    }
  }

  append_remainder(cert.terms, shape, 1.0 - budget);
  return cert;
}

}  // namespace sepscope
