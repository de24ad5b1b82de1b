#include "sepscope/hs.hpp"

#include "sepscope/states.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace sepscope;
using namespace sepscope::testing;

namespace {

// The seven non-identity GHZ coefficients.
const std::map<MultiIndex, double> kGhzCoeffs = {
    {{1, 1, 1}, 1.0},  {{1, 2, 2}, -1.0}, {{2, 1, 2}, -1.0}, {{2, 2, 1}, -1.0},
    {{0, 3, 3}, 1.0},  {{3, 0, 3}, 1.0},  {{3, 3, 0}, 1.0}};

}  // namespace

TEST_CASE("decompose recovers the GHZ coefficient set exactly") {
  const HSDecomposition hs = decompose(ghz_state(1));
  CHECK(hs.terms().size() == 7);
  for (const auto& [idx, c] : kGhzCoeffs)
    CHECK(hs.coeff(idx) == doctest::Approx(c).epsilon(1e-12));
}

TEST_CASE("decompose of the maximally mixed state has no terms") {
  const DensityMatrix mm = validate_density(identity(8) / 8.0, SystemShape({2, 2, 2}));
  CHECK(decompose(mm).terms().empty());
}

TEST_CASE("decompose of the W state matches the published coefficients") {
  const HSDecomposition hs = decompose(w_state());
  CHECK(hs.coeff({3, 3, 3}) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(hs.coeff({2, 0, 2}) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(hs.coeff({3, 0, 0}) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(hs.coeff({0, 3, 3}) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(hs.coeff({1, 3, 1}) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(hs.terms().size() == 19);
}

TEST_CASE("reconstruct rebuilds the GHZ matrix from its coefficients") {
  const HSDecomposition hs = HSDecomposition::from_coeffs(SystemShape({2, 2, 2}), kGhzCoeffs);
  CHECK(max_abs_diff(reconstruct(hs), ghz8_reference() / 8.0) <= 1e-15);

  const HSDecomposition only_identity =
      HSDecomposition::from_coeffs(SystemShape({2, 2, 2}), {});
  CHECK(max_abs_diff(reconstruct(only_identity), identity(8) / 8.0) == 0.0);
}

TEST_CASE("identity coefficient is pinned to 1") {
  CHECK_THROWS_AS(HSDecomposition::from_coeffs(SystemShape({2, 2}), {{{0, 0}, 0.5}}),
                  ShapeError);
  const HSDecomposition ok =
      HSDecomposition::from_coeffs(SystemShape({2, 2}), {{{0, 0}, 1.0}, {{3, 3}, 0.2}});
  CHECK(ok.coeff({0, 0}) == 1.0);
  CHECK(ok.terms().size() == 1);
}

TEST_CASE("decompose-reconstruct round trip across shapes") {
  auto gen = rng(29);
  for (const SystemShape& shape :
       {SystemShape({2, 2}), SystemShape({2, 2, 2}), SystemShape({2, 2, 2, 2}),
        SystemShape({2, 3})}) {
    for (int rep = 0; rep < 15; ++rep) {
      const DensityMatrix rho = random_density(shape, gen);
      const HSDecomposition hs = decompose(rho);
      CHECK(max_abs_diff(reconstruct(hs), rho.matrix()) <= 1e-12);
    }
  }
}

TEST_CASE("extracted coefficients are real by construction") {
  auto gen = rng(31);
  const DensityMatrix rho = random_density(SystemShape({2, 2, 2}), gen);
  const SystemShape& shape = rho.shape();
  const HSDecomposition hs = decompose(rho);
  for (const auto& [idx, c] : hs.terms()) {
    const Cplx raw = (rho.matrix() * basis_element(shape, idx)).trace();
    CHECK(std::abs(raw.imag()) <= 1e-10);
    CHECK(std::isfinite(c));
  }
}

TEST_CASE("l1_offidentity") {
  CHECK(l1_offidentity(decompose(ghz_state(1))) == doctest::Approx(7.0).epsilon(1e-12));
  const DensityMatrix mm = validate_density(identity(8) / 8.0, SystemShape({2, 2, 2}));
  CHECK(l1_offidentity(decompose(mm)) == 0.0);
  CHECK(l1_offidentity(decompose(two_param_state(0.3, 0.4))) ==
        doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("gs_split isolates the pivot-identity part") {
  const GSSplit ghz_split = gs_split(decompose(ghz_state(1)), 0);
  REQUIRE(ghz_split.g_part.size() == 1);
  CHECK(ghz_split.g_part.at({0, 3, 3}) == doctest::Approx(1.0));
  CHECK(ghz_split.s_part.size() == 6);

  const GSSplit b1_split = gs_split(decompose(braid_state(3, 1)), 0);
  REQUIRE(b1_split.g_part.size() == 1);
  CHECK(b1_split.g_part.at({0, 2, 2}) == doctest::Approx(1.0));

  const DensityMatrix mm = validate_density(identity(8) / 8.0, SystemShape({2, 2, 2}));
  const GSSplit mm_split = gs_split(decompose(mm), 1);
  CHECK(mm_split.g_part.empty());
  CHECK(mm_split.s_part.empty());

  CHECK_THROWS_AS(gs_split(decompose(mm), 3), ShapeError);
  const DensityMatrix qq = validate_density(identity(6) / 6.0, SystemShape({2, 3}));
  CHECK_THROWS_AS(gs_split(decompose(qq), 1), ShapeError);
}

TEST_CASE("svd_reduce_qubit_qudit on simple tensors") {
  const SystemShape shape({2, 3});

  const HSDecomposition zero = HSDecomposition::from_coeffs(shape, {});
  const SVDReduction zr = svd_reduce_qubit_qudit(zero);
  CHECK(zr.sum_abs() == 0.0);
  REQUIRE(zr.singular_values.size() == 1);
  CHECK(zr.singular_values[0].size() == 3);

  const HSDecomposition rank1 =
      HSDecomposition::from_coeffs(shape, {{{1, 1}, 0.5}});
  const SVDReduction r1 = svd_reduce_qubit_qudit(rank1);
  CHECK(r1.singular_values[0][0] == doctest::Approx(0.5));
  CHECK(r1.singular_values[0][1] == doctest::Approx(0.0));

  const HSDecomposition marginal =
      HSDecomposition::from_coeffs(shape, {{{1, 0}, 0.5}});
  CHECK_THROWS_AS(svd_reduce_qubit_qudit(marginal), PreconditionError);

  const HSDecomposition wrong_shape =
      HSDecomposition::from_coeffs(SystemShape({2, 2, 2}), {});
  CHECK_THROWS_AS(svd_reduce_qubit_qudit(wrong_shape), PreconditionError);
}

TEST_CASE("qubit-qudit singular value sum never exceeds the tensor l1") {
  auto gen = rng(37);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const SystemShape shape({2, 3});
  for (int rep = 0; rep < 100; ++rep) {
    std::map<MultiIndex, double> coeffs;
    double l1 = 0.0;
    for (int l = 1; l <= 3; ++l) {
      for (int mu = 1; mu <= 8; ++mu) {
        const double c = uni(gen);
        coeffs[{l, mu}] = c;
        l1 += std::abs(c);
      }
    }
    const SVDReduction r =
        svd_reduce_qubit_qudit(HSDecomposition::from_coeffs(shape, coeffs));
    CHECK(r.sum_abs() <= l1 + 1e-12);
  }
}

TEST_CASE("3-qubit slice SVD of the GHZ triple block") {
  const SVDReduction r = svd_reduce_3q_slices(decompose(ghz_state(1)), 0);
  REQUIRE(r.singular_values.size() == 3);
  CHECK(r.singular_values[0][0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.singular_values[0][1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.singular_values[0][2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.singular_values[1][0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.singular_values[1][1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.singular_values[2][0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.sum_abs() == doctest::Approx(4.0).epsilon(1e-12));

  const SVDReduction zero =
      svd_reduce_3q_slices(HSDecomposition::from_coeffs(SystemShape({2, 2, 2}), {}), 1);
  CHECK(zero.sum_abs() == 0.0);
}

TEST_CASE("slice SVD contracts the per-slice l1 norm") {
  auto gen = rng(41);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const SystemShape shape({2, 2, 2});
  for (int rep = 0; rep < 100; ++rep) {
    std::map<MultiIndex, double> coeffs;
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) coeffs[{l, m, n}] = uni(gen);
    const HSDecomposition hs = HSDecomposition::from_coeffs(shape, coeffs);

    for (int pivot = 0; pivot < 3; ++pivot) {
      const SVDReduction r = svd_reduce_3q_slices(hs, pivot);
      for (int l = 1; l <= 3; ++l) {
        double slice_l1 = 0.0;
        std::vector<int> rest;
        for (int s = 0; s < 3; ++s)
          if (s != pivot) rest.push_back(s);
        for (int m = 1; m <= 3; ++m) {
          for (int n = 1; n <= 3; ++n) {
            MultiIndex idx(3, 0);
            idx[static_cast<std::size_t>(pivot)] = l;
            idx[static_cast<std::size_t>(rest[0])] = m;
            idx[static_cast<std::size_t>(rest[1])] = n;
            slice_l1 += std::abs(hs.coeff(idx));
          }
        }
        double slice_sum = 0.0;
        for (double s : r.singular_values[static_cast<std::size_t>(l - 1)])
          slice_sum += std::abs(s);
        CHECK(slice_sum <= slice_l1 + 1e-12);
      }
    }
  }
}

TEST_CASE("MDS pattern detection") {
  CHECK(is_mds_pattern(decompose(four_qubit_xyz())));
  CHECK_FALSE(is_mds_pattern(decompose(ghz_state(1))));
  CHECK(no_identity_terms_at(decompose(ghz_state(1)), 0) == false);
}
