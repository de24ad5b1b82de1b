#include "sepscope/transforms.hpp"

#include "sepscope/states.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace sepscope;
using namespace sepscope::testing;

TEST_CASE("partial transpose of a product state transposes one factor") {
  auto gen = rng(53);
  const SystemShape shape({2, 2});
  const DensityMatrix a = random_density(SystemShape({2}), gen);
  const DensityMatrix b = random_density(SystemShape({2}), gen);
  const DensityMatrix product =
      validate_density(kron(a.matrix(), b.matrix()), shape, 1e-9);

  const Matrix expect = kron(a.matrix().transpose(), b.matrix());
  CHECK(max_abs_diff(partial_transpose(product, 0).matrix, expect) <= 1e-15);
  CHECK_THROWS_AS(partial_transpose(product, 2), ShapeError);
}

TEST_CASE("partial transpose of the W state matches the published matrix") {
  const TransformedMatrix pt = partial_transpose(w_state(), 0);
  CHECK(max_abs_diff(pt.matrix, w_pt24_reference() / 24.0) <= 1e-14);

  const double s2 = std::sqrt(2.0) / 3.0;
  const Spectrum expect = {-s2, 0, 0, 0, 0, 1.0 / 3.0, s2, 2.0 / 3.0};
  CHECK(spectra_match(eig_hermitian(pt.matrix, 1e-8), expect, 1e-12));
}

TEST_CASE("ptu of GHZ and B1 match the published matrices and spectra") {
  const TransformedMatrix ghz_ptu = ptu_qubit(ghz_state(1), 0);
  CHECK(max_abs_diff(ghz_ptu.matrix, ghz_ptu8_reference() / 8.0) <= 1e-14);
  const Spectrum ghz_expect = {-0.5, 0, 0, 0, 0, 0.5, 0.5, 0.5};
  CHECK(spectra_match(eig_hermitian(ghz_ptu.matrix, 1e-8), ghz_expect, 1e-12));

  const TransformedMatrix b1_ptu = ptu_qubit(braid_state(3, 1), 0);
  CHECK(max_abs_diff(b1_ptu.matrix, b1_ptu8_reference() / 8.0) <= 1e-14);
  CHECK(spectra_match(eig_hermitian(b1_ptu.matrix, 1e-8), ghz_expect, 1e-12));

  const DensityMatrix mm = validate_density(identity(8) / 8.0, SystemShape({2, 2, 2}));
  CHECK(max_abs_diff(ptu_qubit(mm, 1).matrix, mm.matrix()) <= 1e-15);

  const DensityMatrix qq = validate_density(identity(6) / 6.0, SystemShape({2, 3}));
  CHECK_THROWS_AS(ptu_qubit(qq, 1), ShapeError);
}

TEST_CASE("ptu and partial transpose are spectrally identical") {
  auto gen = rng(59);
  for (const SystemShape& shape :
       {SystemShape({2, 2}), SystemShape({2, 2, 2}), SystemShape({2, 3})}) {
    for (int rep = 0; rep < 10; ++rep) {
      const DensityMatrix rho = random_density(shape, gen);
      for (int site = 0; site < shape.sites(); ++site) {
        if (!shape.is_qubit(site)) continue;
        CHECK(spectra_match(eig_hermitian(ptu_qubit(rho, site).matrix, 1e-8),
                            eig_hermitian(partial_transpose(rho, site).matrix, 1e-8),
                            1e-10));
      }
    }
  }
}

TEST_CASE("all three maps preserve trace and Hermiticity") {
  auto gen = rng(61);
  const DensityMatrix rho = random_density(SystemShape({2, 2, 2}), gen);
  for (const Matrix& m : {partial_transpose(rho, 1).matrix, ptu_qubit(rho, 2).matrix,
                          global_tu(rho).matrix}) {
    CHECK(std::abs(m.trace() - Cplx(1, 0)) <= 1e-12);
    CHECK(hermiticity_defect(m) <= 1e-12);
  }
}

TEST_CASE("global_tu preserves the spectrum") {
  auto gen = rng(67);
  for (int rep = 0; rep < 50; ++rep) {
    const DensityMatrix rho = random_density(SystemShape({2, 2, 2}), gen);
    CHECK(spectra_match(eig_hermitian(global_tu(rho).matrix, 1e-8),
                        eig_hermitian(rho.matrix(), 1e-8), 1e-10));
  }
  const DensityMatrix qq = validate_density(identity(6) / 6.0, SystemShape({2, 3}));
  CHECK_THROWS_AS(global_tu(qq), ShapeError);
}

TEST_CASE("odd-n MDS: ptu equals the global map and preserves spectra") {
  auto gen = rng(71);
  for (int rep = 0; rep < 25; ++rep) {
    const DensityMatrix rho = random_mds(SystemShape({2, 2, 2}), gen);
    const Matrix tu = global_tu(rho).matrix;
    for (int site = 0; site < 3; ++site) {
      const Matrix ptu = ptu_qubit(rho, site).matrix;
      if (site == 0) CHECK(max_abs_diff(ptu, tu) <= 1e-12);
      CHECK(spectra_match(eig_hermitian(ptu, 1e-8), eig_hermitian(rho.matrix(), 1e-8),
                          1e-10));
    }

    // Eigenvalues of 8 rho - I come in +/- pairs.
    const Spectrum spec = eig_hermitian(rho.matrix(), 1e-8);
    for (int k = 0; k < 4; ++k) {
      const double r_low = 8.0 * spec[static_cast<std::size_t>(k)] - 1.0;
      const double r_high = 8.0 * spec[static_cast<std::size_t>(7 - k)] - 1.0;
      CHECK(r_low == doctest::Approx(-r_high).epsilon(1e-10));
    }
  }
}

TEST_CASE("qubit-qudit MDS: lambda(PTU) = 1/d - lambda(rho)") {
  auto gen = rng(73);
  for (int rep = 0; rep < 25; ++rep) {
    const DensityMatrix rho = random_mds(SystemShape({2, 3}), gen);
    const Spectrum ptu_spec = eig_hermitian(ptu_qubit(rho, 0).matrix, 1e-8);
    Spectrum mirrored;
    for (double v : eig_hermitian(rho.matrix(), 1e-8)) mirrored.push_back(1.0 / 3.0 - v);
    CHECK(spectra_match(ptu_spec, mirrored, 1e-10));
  }
}

TEST_CASE("qubit-qudit with qudit-identity terms keeps the mirror relation") {
  // The extended form allows sigma_l (x) I terms; the PTU mirror still holds.
  auto gen = rng(79);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const SystemShape shape({2, 3});
  for (int rep = 0; rep < 25; ++rep) {
    std::map<MultiIndex, double> coeffs;
    for (int l = 1; l <= 3; ++l) {
      coeffs[{l, 0}] = uni(gen);
      for (int mu = 1; mu <= 8; ++mu) coeffs[{l, mu}] = uni(gen);
    }
    Matrix correlation = Matrix::Zero(6, 6);
    for (const auto& [idx, c] : coeffs) correlation += c * basis_element(shape, idx);
    const Spectrum corr_spec = eig_hermitian(correlation, 1e-8);
    const double radius = std::max(corr_spec.back(), std::abs(corr_spec.front()));
    const Matrix m = (identity(6) + correlation / (radius * 1.05)) / 6.0;
    const DensityMatrix rho = validate_density(m, shape, 1e-10);

    Spectrum mirrored;
    for (double v : eig_hermitian(rho.matrix(), 1e-8)) mirrored.push_back(1.0 / 3.0 - v);
    CHECK(spectra_match(eig_hermitian(ptu_qubit(rho, 0).matrix, 1e-8), mirrored, 1e-10));
  }
}

TEST_CASE("the G/S split identity matches the PTU transform") {
  auto gen = rng(83);
  std::vector<DensityMatrix> cases = {ghz_state(1), braid_state(3, 1), w_state(),
                                      random_density(SystemShape({2, 2, 2}), gen)};
  for (const DensityMatrix& rho : cases) {
    for (int site = 0; site < 3; ++site) {
      // 2^n rho(PTU) = 2[(I) + G] - 2^n rho, with G the pivot-identity part.
      const GSSplit split = gs_split(decompose(rho), site);
      Matrix g = Matrix::Zero(8, 8);
      for (const auto& [idx, c] : split.g_part)
        g += c * basis_element(rho.shape(), idx);
      const Matrix lhs = 8.0 * ptu_qubit(rho, site).matrix;
      const Matrix rhs = 2.0 * (identity(8) + g) - 8.0 * rho.matrix();
      CHECK(max_abs_diff(lhs, rhs) <= 1e-12);

      CHECK(max_abs_diff(ptu_via_hs(rho, site), ptu_qubit(rho, site).matrix) <= 1e-12);
    }
  }
}
