#include "sepscope/transforms.hpp"

namespace sepscope {

namespace {

// 180-degree rotation around y, exp(-i pi sigma_y / 2); the overall phase is
// irrelevant under conjugation.
Matrix y_flip() {
  Matrix u(2, 2);
  u << 0, -1, 1, 0;
  return u;
}

Matrix site_operator(const SystemShape& shape, int site, const Matrix& op) {
  std::vector<Matrix> factors;
  for (int s = 0; s < shape.sites(); ++s)
    factors.push_back(s == site ? op : identity(shape.dim(s)));
  return kron(factors);
}

Matrix transpose_site(const Matrix& m, const SystemShape& shape, int site) {
  Matrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<int> rdig = shape.digits(r);
    for (int c = 0; c < m.cols(); ++c) {
      std::vector<int> cdig = shape.digits(c);
      std::swap(rdig[static_cast<std::size_t>(site)], cdig[static_cast<std::size_t>(site)]);
      out(shape.flat(rdig), shape.flat(cdig)) = m(r, c);
      std::swap(rdig[static_cast<std::size_t>(site)], cdig[static_cast<std::size_t>(site)]);
    }
  }
  return out;
}

}  // namespace

TransformedMatrix partial_transpose(const DensityMatrix& rho, int site) {
  const SystemShape& shape = rho.shape();
  if (site < 0 || site >= shape.sites()) throw ShapeError("partial_transpose: bad site");
  return TransformedMatrix{transpose_site(rho.matrix(), shape, site), shape,
                           TransformTag::PartialTranspose, site};
}

TransformedMatrix ptu_qubit(const DensityMatrix& rho, int site) {
  const SystemShape& shape = rho.shape();
  if (site < 0 || site >= shape.sites()) throw ShapeError("ptu_qubit: bad site");
  if (!shape.is_qubit(site)) throw ShapeError("ptu_qubit: site is not a qubit");

  const Matrix pt = transpose_site(rho.matrix(), shape, site);
  const Matrix u = site_operator(shape, site, y_flip());
  return TransformedMatrix{u * pt * u.adjoint(), shape, TransformTag::Ptu, site};
}

TransformedMatrix global_tu(const DensityMatrix& rho) {
  const SystemShape& shape = rho.shape();
  if (!shape.all_qubits()) throw ShapeError("global_tu: non-qubit site present");

  std::vector<Matrix> factors(static_cast<std::size_t>(shape.sites()), y_flip());
  const Matrix u = kron(factors);
  const Matrix t = rho.matrix().transpose();
  return TransformedMatrix{u * t * u.adjoint(), shape, TransformTag::GlobalTu, -1};
}

Matrix ptu_via_hs(const DensityMatrix& rho, int site) {
  const HSDecomposition hs = decompose(rho);
  const GSSplit split = gs_split(hs, site);

  std::map<MultiIndex, double> flipped = split.g_part;
  for (const auto& [idx, c] : split.s_part) flipped[idx] = -c;
  return reconstruct(HSDecomposition::from_coeffs(rho.shape(), std::move(flipped)));
}

}  // namespace sepscope
