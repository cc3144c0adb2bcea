#include <doctest.h>

#include "facthom/errors.hpp"
#include "facthom/hochschild.hpp"
#include "oracle.hpp"

using namespace facthom;

using Dims = std::map<int, std::size_t>;

TEST_CASE("HH of the corpus algebras") {
  Field q = Field::rationals();
  CHECK(hh_dims(corpus::ground(q), 3) == Dims{{0, 1}, {1, 0}, {2, 0}});
  CHECK(hh_dims(corpus::split_pair(q), 3) == Dims{{0, 2}, {1, 0}, {2, 0}});
  CHECK(hh_dims(corpus::dual_numbers(q), 4) == Dims{{0, 2}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(hh_dims(corpus::matrix2(q), 3) == Dims{{0, 1}, {1, 0}, {2, 0}});
  CHECK(hh_dims(corpus::upper_triangular2(q), 3) == Dims{{0, 2}, {1, 0}, {2, 0}});
  CHECK(hh_dims(corpus::group_algebra_s3(q), 2).at(0) == 3);
  CHECK(hh_dims(corpus::truncated_poly(q, 3), 3) == Dims{{0, 3}, {1, 2}, {2, 2}});
  // over F2 the dual numbers have b = 0 in every degree: x·x = 0 and 2x = 0
  CHECK(hh_dims(corpus::dual_numbers(Field::prime(2)), 4) == Dims{{0, 2}, {1, 2}, {2, 2}, {3, 2}});
  for (const auto& [name, a] : corpus::all(q)) {
    CAPTURE(name);
    CHECK(hh_dims(a, 1).at(0) == cocenter(a).dim);
    if (a.is_commutative()) CHECK(hh_dims(a, 1).at(0) == a.dim());
  }
}

TEST_CASE("normalized complex shape") {
  Field q = Field::rationals();
  auto h = HochschildComplex::build(corpus::dual_numbers(q), 4);
  for (int n = 0; n <= 4; ++n) CHECK(h.complex().dim(n) == 2);
  CHECK(h.valid_through() == 3);
  CHECK_THROWS_AS(homology_dim(h.complex(), 4), DegreeOutOfRange);
  CHECK_THROWS_AS(HochschildComplex::build(corpus::group_algebra_s3(q), 12), BudgetExceeded);
  CHECK_THROWS_AS(HochschildComplex::build(corpus::dual_numbers(q), 3, 5), BudgetExceeded);
}

TEST_CASE("sparse homology agrees with the dense oracle on small complexes") {
  Field q = Field::rationals();
  for (const auto& [name, a] : corpus::all(q)) {
    for (int n = 4; n >= 1; --n) {
      auto h = HochschildComplex::build(a, n);
      if (h.complex().total_dim() > 64) continue;
      CAPTURE(name);
      CAPTURE(n);
      for (auto [deg, dim] : homology_dims(h.complex(), 0, n - 1)) CHECK(dim == oracle::homology_dim(h.complex(), deg));
      break;
    }
  }
  GradedAlgebra p(q, 2, 3);
  auto g = HochschildComplex::build_graded(p, 3);
  for (int n = 0; n <= 3; ++n) CHECK(homology_dim(g.complex(), n) == oracle::homology_dim(g.complex(), n));
}

TEST_CASE("normalization does not change homology") {
  Field q = Field::rationals();
  for (auto a : {corpus::dual_numbers(q), corpus::split_pair(q), corpus::upper_triangular2(q)}) {
    auto u = HochschildComplex::build_unnormalized(a, 4);
    auto n = HochschildComplex::build(a, 4);
    CHECK(homology_dims(u.complex(), 0, 3) == homology_dims(n.complex(), 0, 3));
    CHECK(u.complex().dim(2) == a.dim() * a.dim() * a.dim());
  }
}

TEST_CASE("b and B identities") {
  Field q = Field::rationals();
  for (const auto& [name, a] : corpus::all(q)) {
    CAPTURE(name);
    auto h = HochschildComplex::build(a, 4);
    auto id = check_differential_identities(h, connes_b(h));
    CHECK(id.ok());
  }
  for (std::size_t m = 1; m <= 2; ++m) {
    GradedAlgebra p(q, m, 5);
    for (std::size_t w = 0; w <= 5; ++w) {
      auto h = HochschildComplex::build_graded(p, w);
      CHECK(check_differential_identities(h, connes_b(h)).ok());
    }
  }
}

TEST_CASE("Connes operator examples") {
  Field q = Field::rationals();
  auto h = HochschildComplex::build(corpus::dual_numbers(q), 3);
  CHECK(h.connes({0}).empty());
  auto bx = h.connes({1});
  REQUIRE(bx.size() == 1);
  CHECK(bx[0].index == *h.index(1, {0, 1}));
  CHECK(bx[0].value == 1);

  GradedAlgebra p(q, 1, 2);
  auto g = HochschildComplex::build_graded(p, 2);
  auto B = connes_b(g);
  const std::size_t x2 = *p.index_of({2});
  ExactMatrix chain(q, g.complex().dim(0), 1);
  chain.set(*g.index(0, {static_cast<std::uint32_t>(x2)}), 0, 1);
  // b(x²) = 0 in degree 0, so bB(x²) must vanish
  CHECK((g.complex().differential(1) * B.components.at(0) * chain).is_zero());
}

TEST_CASE("graded HH and HKR") {
  Field q = Field::rationals();
  CHECK(graded_hh_dims(polynomial_algebra(1, 0, q), 0) == Dims{{0, 1}});
  CHECK(graded_hh_dims(polynomial_algebra(1, 3, q), 3) == Dims{{0, 1}, {1, 1}, {2, 0}, {3, 0}});
  CHECK(graded_hh_dims(polynomial_algebra(2, 2, q), 2) == Dims{{0, 3}, {1, 4}, {2, 1}});
  for (std::size_t m = 1; m <= 2; ++m) {
    for (std::size_t w = 0; w <= 5; ++w) {
      auto dims = graded_hh_dims(polynomial_algebra(m, w, q), w);
      for (auto [i, d] : dims) CHECK(d == (static_cast<std::size_t>(i) <= m ? kaehler_dims(m, i, w) : 0));
    }
  }

  GradedAlgebra p1(q, 1, 3);
  auto id = hkr_map(p1, 0, 3);
  CHECK(id.rows() == 1);
  CHECK(id.cols() == 1);
  CHECK(id.at(0, 0) == 1);
  auto h12 = HochschildComplex::build_graded(p1, 2);
  auto m12 = hkr_map(GradedAlgebra(q, 1, 2), 1, 2);
  const auto x = static_cast<std::uint32_t>(*p1.index_of({1}));
  REQUIRE(m12.cols() == 1);
  CHECK(m12.column(0).size() == 1);
  CHECK(m12.at(*h12.index(1, {x, x}), 0) == 1);

  GradedAlgebra p2(q, 2, 2);
  auto h22 = HochschildComplex::build_graded(p2, 2);
  auto m22 = hkr_map(p2, 2, 2);
  const auto vx = static_cast<std::uint32_t>(*p2.index_of({1, 0}));
  const auto vy = static_cast<std::uint32_t>(*p2.index_of({0, 1}));
  REQUIRE(m22.cols() == 1);
  CHECK(m22.at(*h22.index(2, {0, vx, vy}), 0) == 1);
  CHECK(m22.at(*h22.index(2, {0, vy, vx}), 0) == -1);
  CHECK(m22.column(0).size() == 2);

  for (std::size_t m = 1; m <= 2; ++m) {
    for (std::size_t w = 0; w <= 4; ++w) {
      for (std::size_t i = 0; i <= std::min(m, w); ++i) CHECK(hkr_check(GradedAlgebra(q, m, w), i, w).passed());
    }
  }
  CHECK_THROWS(hkr_map(GradedAlgebra(Field::prime(3), 1, 3), 1, 3));
}

TEST_CASE("circle action is the de Rham differential") {
  int sign = 0;
  for (std::size_t w = 1; w <= 5; ++w) {
    auto r = circle_action_check(w);
    CHECK(r.passed);
    if (sign == 0) sign = r.sign;
    CHECK(r.sign == sign);
  }
  CHECK(sign != 0);
}
