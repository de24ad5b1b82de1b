#include "sepscope/bases.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace sepscope {

namespace {

const Cplx kI(0.0, 1.0);

OperatorBasis make_pauli_basis() {
  OperatorBasis b;
  b.dim = 2;
  for (int k = 0; k < 4; ++k) b.elements.push_back(pauli(k));
  return b;
}

}  // namespace

Matrix pauli(int index) {
  Matrix m(2, 2);
  switch (index) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw ShapeError("pauli: index out of range");
  }
  return m;
}

OperatorBasis su_d_generators(int d) {
  if (d < 2) throw ShapeError("su_d_generators: dimension < 2");
  OperatorBasis b;
  b.dim = d;
  b.elements.push_back(Matrix::Identity(d, d));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Symmetric pairs, row-major over j < k.
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix m = Matrix::Zero(d, d);
      m(j, k) = inv_sqrt2;
      m(k, j) = inv_sqrt2;
      b.elements.push_back(m);
    }
  }
  // Antisymmetric pairs.
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix m = Matrix::Zero(d, d);
      m(j, k) = -kI * inv_sqrt2;
      m(k, j) = kI * inv_sqrt2;
      b.elements.push_back(m);
    }
  }
  // Diagonal generators, each traceless with tr(f^2) = 1.
  for (int l = 1; l < d; ++l) {
    Matrix m = Matrix::Zero(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int k = 0; k < l; ++k) m(k, k) = scale;
    m(l, l) = -static_cast<double>(l) * scale;
    b.elements.push_back(m);
  }
  return b;
}

double OperatorBasis::norm_sq(int k) const {
  if (k < 0 || k >= size()) throw ShapeError("OperatorBasis: element out of range");
  if (k == 0) return static_cast<double>(dim);
  return dim == 2 ? 2.0 : 1.0;
}

const OperatorBasis& site_basis(int d) {
  static std::mutex mutex;
  static std::map<int, OperatorBasis> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    it = cache.emplace(d, d == 2 ? make_pauli_basis() : su_d_generators(d)).first;
  }
  return it->second;
}

Matrix basis_element(const SystemShape& shape, const std::vector<int>& multi_index) {
  if (static_cast<int>(multi_index.size()) != shape.sites())
    throw ShapeError("basis_element: index length does not match site count");
  std::vector<Matrix> factors;
  factors.reserve(multi_index.size());
  for (int s = 0; s < shape.sites(); ++s) {
    const OperatorBasis& basis = site_basis(shape.dim(s));
    const int k = multi_index[static_cast<std::size_t>(s)];
    if (k < 0 || k >= basis.size()) throw ShapeError("basis_element: index out of range");
    factors.push_back(basis.elements[static_cast<std::size_t>(k)]);
  }
  return kron(factors);
}

double basis_norm_sq(const SystemShape& shape, const std::vector<int>& multi_index) {
  if (static_cast<int>(multi_index.size()) != shape.sites())
    throw ShapeError("basis_norm_sq: index length does not match site count");
  double out = 1.0;
  for (int s = 0; s < shape.sites(); ++s)
    out *= site_basis(shape.dim(s)).norm_sq(multi_index[static_cast<std::size_t>(s)]);
  return out;
}

}  // namespace sepscope
