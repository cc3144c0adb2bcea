#include <doctest.h>

#include "facthom/bar.hpp"
#include "facthom/errors.hpp"

using namespace facthom;

using Dims = std::map<int, std::size_t>;

namespace {

std::vector<Scalar> augmentation(const Algebra& a) {
  std::vector<Scalar> aug(a.dim(), Scalar(0));
  aug[0] = 1;
  return aug;
}

}  // namespace

TEST_CASE("Tor examples") {
  Field q = Field::rationals();
  Algebra k = corpus::ground(q);
  CHECK(tor_dims(regular_right(k), k, regular_left(k), 3) == Dims{{0, 1}, {1, 0}, {2, 0}});

  Algebra d = corpus::dual_numbers(q);
  auto kr = trivial_right(d, augmentation(d));
  auto kl = trivial_left(d, augmentation(d));
  CHECK(tor_dims(kr, d, kl, 5) == Dims{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
  // A is free over itself
  CHECK(tor_dims(regular_right(d), d, kl, 4) == Dims{{0, 1}, {1, 0}, {2, 0}, {3, 0}});

  auto bar = BarComplex::build(kr, d, kl, 3);
  CHECK(bar.normalized());
  CHECK(bar.complex().dim(2) == 1);
  auto unnorm = BarComplex::build(kr, d, kl, 4, kDefaultBudget, false);
  CHECK(unnorm.complex().dim(2) == 4);
  CHECK(homology_dims(unnorm.complex(), 0, 3) == homology_dims(BarComplex::build(kr, d, kl, 4).complex(), 0, 3));
  CHECK_THROWS_AS(BarComplex::build(kr, d, kl, 40, 10), BudgetExceeded);
}

TEST_CASE("Tor_0 is the coequalizer") {
  Field q = Field::rationals();
  Algebra d = corpus::dual_numbers(q);
  Algebra u = corpus::upper_triangular2(q);
  Algebra m2 = corpus::matrix2(q);
  struct Case {
    RightModule m;
    Algebra a;
    LeftModule n;
  };
  std::vector<Case> cases{
      {trivial_right(d, augmentation(d)), d, trivial_left(d, augmentation(d))},
      {regular_right(u), u, regular_left(u)},
      {regular_right(m2), m2, regular_left(m2)},
      {enveloping_right(d), enveloping(d), enveloping_left(d)},
  };
  for (const auto& c : cases) CHECK(tor_dims(c.m, c.a, c.n, 1).at(0) == coequalizer_dim(c.m, c.a, c.n));
  CHECK(coequalizer_dim(regular_right(m2), m2, regular_left(m2)) == 4);
}

TEST_CASE("Tor is symmetric under passing to the opposite algebra") {
  Field q = Field::rationals();
  for (const auto& [name, a] : corpus::all(q)) {
    if (a.dim() > 4) continue;
    CAPTURE(name);
    auto m = regular_right(a);
    auto n = regular_left(a);
    auto ab = tor_dims(m, a, n, 3);
    auto ba = tor_dims(as_right_over_opposite(n), opposite(a), as_left_over_opposite(m), 3);
    CHECK(ab == ba);
  }
  Algebra u = corpus::upper_triangular2(q);
  // simple modules of the upper triangular algebra through the two diagonal idempotents
  std::vector<Scalar> s1{1, 0, 0}, s2{0, 1, 0};
  auto t = tor_dims(trivial_right(u, s1), u, trivial_left(u, s2), 3);
  auto t_op = tor_dims(as_right_over_opposite(trivial_left(u, s2)), opposite(u),
                       as_left_over_opposite(trivial_right(u, s1)), 3);
  CHECK(t == t_op);
}

TEST_CASE("excision for the circle") {
  Field q = Field::rationals();
  for (auto a : {corpus::dual_numbers(q), corpus::upper_triangular2(q), corpus::split_pair(q), corpus::ground(q)}) {
    auto rep = excision_circle_check(a, 3);
    CHECK(rep.passed());
    CHECK(rep.rows.size() == 3);
  }
  auto rep = excision_circle_check(corpus::dual_numbers(q), 3);
  CHECK(rep.rows[0].tor == 2);
  CHECK(rep.rows[1].tor == 1);
  CHECK(rep.rows[2].tor == 1);
}
