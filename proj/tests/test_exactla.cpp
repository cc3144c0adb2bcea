#include <doctest.h>

#include <random>

#include "facthom/chain_complex.hpp"
#include "facthom/errors.hpp"
#include "oracle.hpp"

using namespace facthom;

TEST_CASE("field arithmetic") {
  Field q = Field::rationals();
  CHECK(q.add(Scalar(1, 2), Scalar(1, 3)) == Scalar(5, 6));
  CHECK(q.inv(Scalar(-3, 4)) == Scalar(-4, 3));
  CHECK(q.format(q.reduce(Scalar(-6, 4))) == "-3/2");
  CHECK(q.parse("6/4") == Scalar(3, 2));
  CHECK_THROWS_AS(q.parse("x"), Error);

  Field f7 = Field::prime(7);
  CHECK(f7.from_int(-1) == 6);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.reduce(Scalar(1, 2)) == 4);
  CHECK(f7.format(10) == "3 mod 7");
  CHECK(f7.name() == "F7");
  CHECK_THROWS_AS(Field::prime(9), InvalidStructure);
  CHECK_THROWS_AS(f7.inv(0), Error);
  CHECK_THROWS_AS(f7.reduce(Scalar(1, 14)), Error);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 101u}) CHECK(is_prime(p));
  for (std::uint64_t n : {0u, 1u, 4u, 9u, 91u}) CHECK_FALSE(is_prime(n));
}

TEST_CASE("matrix basics") {
  Field q = Field::rationals();
  auto a = ExactMatrix::from_rows(q, {{1, 2}, {3, 4}});
  auto b = ExactMatrix::from_rows(q, {{0, 1}, {1, 0}});
  CHECK(a * b == ExactMatrix::from_rows(q, {{2, 1}, {4, 3}}));
  CHECK(a.transpose() == ExactMatrix::from_rows(q, {{1, 3}, {2, 4}}));
  CHECK((a - a).is_zero());
  CHECK(a.kron(ExactMatrix::identity(q, 2)).at(2, 0) == 3);
  CHECK(a.kron(ExactMatrix::identity(q, 2)).at(1, 1) == 1);
  CHECK(a.hstack(b).cols() == 4);
  CHECK(a.vstack(b).rows() == 4);
  CHECK_THROWS_AS(a * ExactMatrix(q, 3, 1), ShapeMismatch);
  CHECK_THROWS_AS(a + ExactMatrix(Field::prime(5), 2, 2), FieldMismatch);
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(*inv * a == ExactMatrix::identity(q, 2));
  CHECK_FALSE(inverse(ExactMatrix::from_rows(q, {{1, 2}, {2, 4}})));
  CHECK(rank(ExactMatrix::from_rows(q, {{1, 2}, {2, 4}})) == 1);
  CHECK(in_column_span(a, SparseVector{{0, Scalar(5)}}));
}

TEST_CASE("rank agrees with the dense oracle and with the transpose") {
  std::mt19937_64 rng(11);
  for (auto f : {Field::prime(7), Field::rationals()}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto m = oracle::random_matrix(f, 6, 6, rng, 0.15 + 0.02 * trial);
      std::size_t r = rank(m);
      CHECK(r == rank(m.transpose()));
      CHECK(r == oracle::rank(m));
    }
    for (int trial = 0; trial < 10; ++trial) {
      auto m = oracle::random_matrix(f, 4 + trial, 9 - trial / 2, rng, 0.3);
      CHECK(rank(m) == oracle::rank(m));
    }
  }
}

TEST_CASE("chain complex validation and truncation") {
  Field q = Field::rationals();
  auto d1 = ExactMatrix::from_rows(q, {{1, -1}});
  auto d2 = ExactMatrix::from_rows(q, {{1}, {1}});
  ChainComplex c(q, 0, {1, 2, 1}, {d1, d2});
  CHECK(homology_dim(c, 1) == 0);
  CHECK_THROWS_AS(homology_dim(c, 0), DegreeOutOfRange);
  CHECK_THROWS_AS(homology_dim(c, 2), DegreeOutOfRange);
  CHECK_THROWS_AS(c.differential(0), DegreeOutOfRange);
  CHECK(c.dim(7) == 0);
  CHECK_THROWS_AS(ChainComplex(q, 0, {1, 2, 1}, {d1, ExactMatrix::from_rows(q, {{1}, {0}})}), InvalidStructure);
  CHECK_THROWS_AS(ChainComplex(q, 0, {1, 2}, {d2}), ShapeMismatch);

  auto b = ChainComplex::bounded(q, 0, {1, 2, 1}, {d1, d2});
  CHECK(homology_dims(b) == std::map<int, std::size_t>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(euler_characteristic(b) == 0);
}

TEST_CASE("homology matches the dense oracle and the Euler characteristic") {
  std::mt19937_64 rng(5);
  for (auto f : {Field::prime(7), Field::rationals()}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::size_t> dims;
      std::size_t len = 2 + rng() % 4;
      for (std::size_t k = 0; k < len; ++k) dims.push_back(rng() % 5);
      auto c = oracle::random_complex(f, -1 + static_cast<int>(rng() % 3), dims, rng);
      long chi_h = 0;
      for (auto [n, h] : homology_dims(c)) {
        CHECK(h == oracle::homology_dim(c, n));
        chi_h += (n % 2 == 0 ? 1 : -1) * static_cast<long>(h);
      }
      CHECK(chi_h == euler_characteristic(c));
    }
  }
}

TEST_CASE("hom complex: H_0 counts chain maps modulo homotopy") {
  Field q = Field::rationals();
  std::mt19937_64 rng(3);
  std::vector<std::pair<ChainComplex, ChainComplex>> cases;
  // S¹ cellular chains against themselves
  auto circle = ChainComplex::bounded(q, 0, {1, 1}, {ExactMatrix(q, 1, 1)});
  cases.push_back({circle, circle});
  // an acyclic complex k → k into a point
  auto acyclic = ChainComplex::bounded(q, 0, {1, 1}, {ExactMatrix::identity(q, 1)});
  cases.push_back({acyclic, ChainComplex::bounded(q, 0, {1}, {})});
  cases.push_back({oracle::random_complex(q, 0, {2, 3, 1}, rng), oracle::random_complex(q, -1, {1, 2, 2, 1}, rng)});
  for (const auto& [v, w] : cases) {
    ChainComplex h = hom_complex(v, w);
    CHECK(homology_dim(h, 0) == oracle::chain_maps_mod_homotopy(v, w));
    // Künneth over a field: H_n Hom(V, W) = ⊕_i Hom(H_i V, H_{i+n} W)
    auto hv = homology_dims(v);
    auto hw = homology_dims(w);
    for (auto [n, dim] : homology_dims(h)) {
      std::size_t expect = 0;
      for (auto [i, a] : hv) {
        auto it = hw.find(i + n);
        if (it != hw.end()) expect += a * it->second;
      }
      CHECK(dim == expect);
    }
  }
  CHECK(homology_dim(hom_complex(circle, circle), 0) == 2);
  CHECK(homology_dim(hom_complex(acyclic, acyclic), 0) == 0);
}

TEST_CASE("chain map check") {
  Field q = Field::rationals();
  auto c = ChainComplex::bounded(q, 0, {1, 1}, {ExactMatrix::identity(q, 1)});
  ChainMap id{c, c, 0, {{0, ExactMatrix::identity(q, 1)}, {1, ExactMatrix::identity(q, 1)}}};
  CHECK(chain_map_check(id).ok);
  ChainMap bad{c, c, 0, {{0, ExactMatrix::identity(q, 1)}, {1, ExactMatrix(q, 1, 1)}}};
  auto r = chain_map_check(bad);
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_violation);
  CHECK(*r.first_violation == 1);
}
