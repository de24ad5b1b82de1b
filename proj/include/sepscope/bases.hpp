#pragma once

// Local operator bases: the Pauli set for qubits and trace-orthonormal
// SU(d) generator sets (Gell-Mann pattern) for qudits, plus multi-site
// basis elements assembled as Kronecker products.
//
// Normalization convention: qubit sites use the bare Pauli matrices
// (tr sigma^2 = 2); qudit sites use generators with tr(f_mu f_nu) =
// delta_{mu,nu}. Index 0 is always the local identity.

#include "sepscope/kernel.hpp"

namespace sepscope {

struct OperatorBasis {
  int dim = 0;
  std::vector<Matrix> elements;  // element 0 = identity

  int size() const { return static_cast<int>(elements.size()); }
  // Hilbert-Schmidt squared norm tr(e_k e_k) of element k.
  double norm_sq(int k) const;
};

// index 0 -> I, 1 -> sigma_x, 2 -> sigma_y, 3 -> sigma_z
Matrix pauli(int index);

// Generators in canonical order: symmetric off-diagonal pairs (row-major),
// antisymmetric pairs, then diagonal; all rescaled to tr(f_mu f_nu) = delta.
OperatorBasis su_d_generators(int d);

// Basis actually used per site: bare Paulis for d == 2, su_d otherwise.
const OperatorBasis& site_basis(int d);

// Kronecker product of per-site basis elements, site 0 outermost.
Matrix basis_element(const SystemShape& shape, const std::vector<int>& multi_index);

// Product over sites of the per-site HS squared norms; the divisor used by
// coefficient extraction.
double basis_norm_sq(const SystemShape& shape, const std::vector<int>& multi_index);

}  // namespace sepscope
