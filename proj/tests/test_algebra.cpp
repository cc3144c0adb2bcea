#include <doctest.h>

#include <random>

#include "facthom/algebra.hpp"
#include "facthom/errors.hpp"
#include "oracle.hpp"

using namespace facthom;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

ExactMatrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    auto g = oracle::random_matrix(f, n, n, rng, 0.7);
    if (inverse(g)) return g;
  }
}

}  // namespace

TEST_CASE("algebra validation") {
  Field q = Field::rationals();
  // k[x]/(x²) written by hand
  std::vector<Scalar> c(8, Scalar(0));
  c[(0 * 2 + 0) * 2 + 0] = 1;
  c[(0 * 2 + 1) * 2 + 1] = 1;
  c[(1 * 2 + 0) * 2 + 1] = 1;
  Algebra a(q, {"1", "x"}, c, ints({1, 0}));
  CHECK(a == corpus::dual_numbers(q));
  CHECK(a.is_commutative());
  CHECK_THROWS_AS(Algebra(q, {"1", "x"}, c, ints({0, 1})), InvalidStructure);
  // a·a = b, b·a = a, everything else zero: (a·a)·a = a but a·(a·a) = 0
  std::vector<Scalar> na(27, Scalar(0));
  for (std::size_t i = 0; i < 3; ++i) {
    na[(0 * 3 + i) * 3 + i] = 1;
    na[(i * 3 + 0) * 3 + i] = 1;
  }
  na[(1 * 3 + 1) * 3 + 2] = 1;
  na[(2 * 3 + 1) * 3 + 1] = 1;
  CHECK_THROWS_AS(Algebra(q, {"1", "a", "b"}, na, ints({1, 0, 0})), InvalidStructure);
  CHECK_THROWS_AS(Algebra(q, {"1"}, ints({1, 0}), ints({1})), ShapeMismatch);
}

TEST_CASE("corpus algebras") {
  Field q = Field::rationals();
  std::map<std::string, std::size_t> dims{{"ground", 1}, {"split", 2}, {"dual", 2}, {"x3", 3},
                                          {"m2", 4},     {"upper", 3}, {"s3", 6}};
  std::map<std::string, std::size_t> cocenters{{"ground", 1}, {"split", 2}, {"dual", 2}, {"x3", 3},
                                               {"m2", 1},     {"upper", 2}, {"s3", 3}};
  for (const auto& [name, a] : corpus::all(q)) {
    CAPTURE(name);
    CHECK(a.dim() == dims.at(name));
    CHECK(cocenter(a).dim == cocenters.at(name));
    CHECK(cocenter(a).representatives.size() == cocenter(a).dim);
    CHECK(opposite(opposite(a)) == a);
    CHECK(enveloping(a).dim() == a.dim() * a.dim());
    CHECK_NOTHROW(validate(regular_bimodule(a), a, a));
    CHECK_NOTHROW(validate(enveloping_left(a), enveloping(a)));
    CHECK_NOTHROW(validate(enveloping_right(a), enveloping(a)));
    auto ua = unit_adapted(a);
    CHECK(ua.algebra.unit_is_first_basis_vector());
    CHECK(cocenter(ua.algebra).dim == cocenter(a).dim);
  }
  CHECK_FALSE(corpus::matrix2(q).unit_is_first_basis_vector());
  CHECK_FALSE(corpus::group_algebra_s3(q).is_commutative());
  CHECK(opposite(corpus::upper_triangular2(q)).is_commutative() == false);
}

TEST_CASE("cocenter is invariant under change of basis over F7") {
  Field f7 = Field::prime(7);
  std::mt19937_64 rng(17);
  for (const auto& [name, a] : corpus::all(f7)) {
    CAPTURE(name);
    for (int trial = 0; trial < 10; ++trial) {
      auto p = random_invertible(f7, a.dim(), rng);
      Algebra b = a.change_basis(p);
      CHECK(cocenter(b).dim == cocenter(a).dim);
      CHECK(b.is_commutative() == a.is_commutative());
    }
  }
}

TEST_CASE("modules") {
  Field q = Field::rationals();
  Algebra d = corpus::dual_numbers(q);
  auto k = trivial_left(d, ints({1, 0}));
  CHECK_NOTHROW(validate(k, d));
  CHECK_THROWS_AS(trivial_left(d, ints({1, 1})), InvalidStructure);
  auto right = as_right_over_opposite(regular_left(d));
  CHECK_NOTHROW(validate(right, opposite(d)));
  LeftModule bad{q, 1, {ExactMatrix::identity(q, 1), ExactMatrix::identity(q, 1)}};
  CHECK_THROWS_AS(validate(bad, d), InvalidStructure);
}

TEST_CASE("tensor products") {
  Field q = Field::rationals();
  Algebra t = tensor(corpus::dual_numbers(q), corpus::dual_numbers(q));
  CHECK(t.dim() == 4);
  CHECK(t.is_commutative());
  CHECK(cocenter(tensor(corpus::matrix2(q), corpus::matrix2(q))).dim == 1);
  CHECK(cocenter(tensor(corpus::split_pair(q), corpus::dual_numbers(q))).dim == 4);
}

TEST_CASE("graded polynomial algebras and Kähler dimensions") {
  Field q = Field::rationals();
  GradedAlgebra p(q, 2, 3);
  CHECK(p.weight_dim(0) == 1);
  CHECK(p.weight_dim(2) == 3);
  CHECK(p.exponents(p.weight_basis(2)[0]) == std::vector<std::size_t>{2, 0});
  CHECK(p.exponents(p.weight_basis(2)[1]) == std::vector<std::size_t>{1, 1});
  CHECK(p.index_of({4, 0}) == std::nullopt);
  CHECK(p.flat().is_commutative());
  CHECK(kaehler_dims(1, 0, 3) == 1);
  CHECK(kaehler_dims(1, 1, 3) == 1);
  CHECK(kaehler_dims(2, 0, 2) == 3);
  CHECK(kaehler_dims(2, 1, 2) == 4);
  CHECK(kaehler_dims(2, 2, 2) == 1);
  CHECK(kaehler_dims(1, 2, 3) == 0);
  // Koszul complex is exact in positive weight
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t w = 0; w <= 6; ++w) {
      long sum = 0;
      for (std::size_t i = 0; i <= m; ++i) sum += (i % 2 == 0 ? 1 : -1) * static_cast<long>(kaehler_dims(m, i, w));
      CHECK(sum == (w == 0 ? 1 : 0));
    }
  }
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
}

TEST_CASE("Eckmann-Hilton") {
  MonoidPair z2{2, 0, {0, 1, 1, 0}, {0, 1, 1, 0}};
  auto r = eckmann_hilton_check(z2);
  CHECK(r.passed());
  CHECK(r.op1_associative);
  MonoidPair and_xnor{2, 1, {0, 0, 0, 1}, {1, 0, 0, 1}};
  CHECK_THROWS_AS(eckmann_hilton_check(and_xnor), InterchangeViolation);
  MonoidPair mismatch{2, 0, {0, 1, 1, 0}, {0, 0, 0, 1}};
  CHECK_THROWS_AS(eckmann_hilton_check(mismatch), UnitMismatch);
  auto scan = eckmann_hilton_scan(3);
  CHECK(scan.failures == 0);
  CHECK(scan.interchange_pairs > 0);
  CHECK(scan.pairs_examined >= scan.interchange_pairs);
}
