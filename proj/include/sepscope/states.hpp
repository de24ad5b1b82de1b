#pragma once

// Factory for every state under study: the eight orthonormal GHZ variants
// and their diagonal mixtures, the W state, braid states generated by the
// Yang-Baxter R gate, white-noise mixtures, and the small worked examples
// (two-parameter 3-qubit family, 4-qubit x/y/z state).

#include "sepscope/kernel.hpp"

#include <array>
#include <string>

namespace sepscope {

// Variants 1..8, mutually orthogonal pure states. Variant 1 is
// (|000> + |111>)/sqrt(2); even variants carry the relative minus sign.
DensityMatrix ghz_state(int variant);

// (|001> + |010> + |100>)/sqrt(3)
DensityMatrix w_state();

// Real orthogonal 4x4 Bell-type gate satisfying the Yang-Baxter relation
// (R (x) I)(I (x) R)(R (x) I) = (I (x) R)(R (x) I)(I (x) R).
Matrix braid_r_gate();

// g_i = I^(i-1) (x) R (x) I^(n-i-1), 1 <= i <= n-1, acting on n qubits.
Matrix braid_generator(int n, int i);

// Density matrix of g_1 g_2 ... g_{n-1} |C_i>, comp_index 1..2^n.
DensityMatrix braid_state(int n, int comp_index);

// Probabilities of the eight GHZ projectors. The constructor sorts them
// descending (relabeling freedom of the GHZ basis) and records where each
// sorted slot came from.
class GhzDiagParams {
 public:
  explicit GhzDiagParams(const std::array<double, 8>& p);

  const std::array<double, 8>& probabilities() const { return sorted_; }
  const std::array<int, 8>& permutation() const { return perm_; }

 private:
  std::array<double, 8> sorted_{};
  std::array<int, 8> perm_{};
};

DensityMatrix ghz_diagonal(const GhzDiagParams& params);

struct MixtureParams {
  double p;
  explicit MixtureParams(double signal_weight);
};

// p * rho + (1-p) * I/D
DensityMatrix mix_white_noise(const DensityMatrix& rho, const MixtureParams& params);

// 16 rho = IIII + XXXX + YYYY + ZZZZ
DensityMatrix four_qubit_xyz();

// 8 rho = III + r1 XXX + r3 IIZ, valid iff r1^2 + r3^2 <= 1
DensityMatrix two_param_state(double r1, double r3);

// "four_qubit_xyz" or "two_param:<r1>,<r3>"
DensityMatrix named_example(const std::string& name);

// True iff the partial trace over every single site is maximally mixed.
bool is_mds(const DensityMatrix& rho, double tol = kMdsTol);

}  // namespace sepscope
