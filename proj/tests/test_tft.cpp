#include <doctest.h>

#include <algorithm>
#include <random>

#include "facthom/errors.hpp"
#include "facthom/tft.hpp"
#include "oracle.hpp"

using namespace facthom;

namespace {

SignedPoints random_points(std::size_t size, int charge, std::mt19937_64& rng) {
  // size and charge have equal parity and |charge| ≤ size
  std::size_t plus = (size + charge) / 2;
  SignedPoints p;
  for (std::size_t i = 0; i < size; ++i) p.signs.push_back(i < plus ? Sign::Plus : Sign::Minus);
  std::shuffle(p.signs.begin(), p.signs.end(), rng);
  return p;
}

Cobordism1 random_cobordism(const SignedPoints& src, const SignedPoints& dst, std::size_t circles, std::mt19937_64& rng) {
  std::vector<std::size_t> plus, minus;
  for (std::size_t p = 0; p < src.size(); ++p) (src.signs[p] == Sign::Plus ? plus : minus).push_back(p);
  for (std::size_t q = 0; q < dst.size(); ++q) (dst.signs[q] == Sign::Plus ? minus : plus).push_back(src.size() + q);
  REQUIRE(plus.size() == minus.size());
  std::shuffle(minus.begin(), minus.end(), rng);
  std::vector<std::size_t> partner(src.size() + dst.size());
  for (std::size_t i = 0; i < plus.size(); ++i) {
    partner[plus[i]] = minus[i];
    partner[minus[i]] = plus[i];
  }
  return Cobordism1(src, dst, partner, circles);
}

std::size_t pick_size(int charge, std::size_t max, std::mt19937_64& rng) {
  std::vector<std::size_t> ok;
  for (std::size_t s = 0; s <= max; ++s) {
    if (static_cast<int>(s) >= std::abs(charge) && (s + charge) % 2 == 0) ok.push_back(s);
  }
  return ok[rng() % ok.size()];
}

ExactMatrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    auto g = oracle::random_matrix(f, n, n, rng, 0.7);
    if (inverse(g)) return g;
  }
}

}  // namespace

TEST_CASE("elementary cobordisms") {
  Field q = Field::rationals();
  auto u = evaluate(2, Cobordism1::coevaluation());
  CHECK(u == ExactMatrix::from_rows(q, {{1}, {0}, {0}, {1}}));
  auto e = evaluate(2, Cobordism1::evaluation());
  CHECK(e == ExactMatrix::from_rows(q, {{1, 0, 0, 1}}));
  CHECK(evaluate(3, Cobordism1::identity(SignedPoints::parse("+-"))) == ExactMatrix::identity(q, 9));
  for (std::size_t n = 1; n <= 4; ++n) {
    auto c = compose(Cobordism1::coevaluation_dual(), Cobordism1::coevaluation());
    CHECK(c == Cobordism1::circles_only(1));
    CHECK(evaluate(n, c) == ExactMatrix::from_rows(q, {{static_cast<long>(n)}}));
  }
}

TEST_CASE("zorro moves are identities") {
  for (const auto& factors : {zorro_factors_plus(), zorro_factors_minus()}) {
    Cobordism1 total = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) total = compose(factors[i], total);
    CHECK(total == Cobordism1::identity(total.source()));
    CHECK(total.circles() == 0);
    for (std::size_t n = 1; n <= 3; ++n) {
      ExactMatrix m = evaluate(n, factors[0]);
      for (std::size_t i = 1; i < factors.size(); ++i) m = evaluate(n, factors[i]) * m;
      CHECK(m == ExactMatrix::identity(Field::rationals(), n));
    }
  }
}

TEST_CASE("closed circles evaluate to n^c") {
  for (std::size_t n = 1; n <= 4; ++n) {
    long expect = 1;
    for (std::size_t c = 0; c <= 4; ++c) {
      CHECK(evaluate(n, Cobordism1::circles_only(c)).at(0, 0) == expect);
      expect *= static_cast<long>(n);
    }
  }
  CHECK(evaluate(2, Cobordism1::circles_only(3), Field::prime(7)).at(0, 0) == 1);
}

TEST_CASE("evaluation is functorial on random composable pairs") {
  std::mt19937_64 rng(41);
  Field q = Field::rationals();
  for (int trial = 0; trial < 100; ++trial) {
    int charge = static_cast<int>(rng() % 5) - 2;
    auto w0 = random_points(pick_size(charge, 4, rng), charge, rng);
    auto w1 = random_points(pick_size(charge, 4, rng), charge, rng);
    auto w2 = random_points(pick_size(charge, 4, rng), charge, rng);
    auto y = random_cobordism(w0, w1, rng() % 3, rng);
    auto x = random_cobordism(w1, w2, rng() % 3, rng);
    std::size_t n = 1 + rng() % 3;
    CAPTURE(trial);
    auto xy = compose(x, y);
    CHECK(xy.source() == w0);
    CHECK(xy.target() == w2);
    CHECK(evaluate(n, xy) == evaluate(n, x) * evaluate(n, y));
    CHECK(evaluate_with(DualityDatum::canonical(n), xy) == evaluate(n, xy));
    CHECK(compose(x, Cobordism1::identity(w1)) == x);
    CHECK(compose(Cobordism1::identity(w2), x) == x);
  }
  (void)q;
}

TEST_CASE("disjoint union is the Kronecker product") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    int c1 = static_cast<int>(rng() % 3) - 1;
    int c2 = static_cast<int>(rng() % 3) - 1;
    auto x = random_cobordism(random_points(pick_size(c1, 3, rng), c1, rng),
                              random_points(pick_size(c1, 3, rng), c1, rng), rng() % 2, rng);
    auto y = random_cobordism(random_points(pick_size(c2, 3, rng), c2, rng),
                              random_points(pick_size(c2, 3, rng), c2, rng), rng() % 2, rng);
    std::size_t n = 1 + rng() % 2;
    auto xy = disjoint_union(x, y);
    CHECK(xy.circles() == x.circles() + y.circles());
    CHECK(evaluate(n, xy) == evaluate(n, x).kron(evaluate(n, y)));
  }
}

TEST_CASE("duality data") {
  Field f7 = Field::prime(7);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = duality_check(DualityDatum::canonical(n));
    CHECK(r.passed);
    CHECK(r.residual_plus.is_zero());
    CHECK(r.residual_minus.is_zero());
  }
  auto zero = DualityDatum(2, 2, ExactMatrix(f7, 4, 1), DualityDatum::canonical(2, f7).epsilon);
  auto r = duality_check(zero);
  CHECK_FALSE(r.passed);
  CHECK(r.residual_plus == ExactMatrix::identity(f7, 2));
  CHECK_THROWS_AS(DualityDatum(2, 2, ExactMatrix(f7, 3, 1), ExactMatrix(f7, 1, 4)), ShapeMismatch);
  CHECK_THROWS_AS(DualityDatum::canonical(2).twisted(ExactMatrix(Field::rationals(), 2, 2)), InvalidStructure);
}

TEST_CASE("random duality data agree through both paths") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    Field f = trial % 2 == 0 ? Field::prime(7) : Field::rationals();
    std::size_t n = 1 + rng() % 3;
    CAPTURE(trial);
    DualityDatum d = DualityDatum::canonical(n, f).twisted(random_invertible(f, n, rng));
    auto r = duality_check(d);
    CHECK(r.passed);
    auto [plus, minus] = snakes_via_cobordisms(d);
    CHECK(plus == ExactMatrix::identity(f, n));
    CHECK(minus == ExactMatrix::identity(f, n));

    DualityDatum raw(n, n, oracle::random_matrix(f, n * n, 1, rng, 0.5), oracle::random_matrix(f, 1, n * n, rng, 0.5));
    auto rr = duality_check(raw);
    auto [p2, m2] = snakes_via_cobordisms(raw);
    CHECK(ExactMatrix::identity(f, n) - rr.residual_plus == p2);
    CHECK(ExactMatrix::identity(f, n) - rr.residual_minus == m2);
    CHECK(rr.passed == (rr.residual_plus.is_zero() && rr.residual_minus.is_zero()));
  }
}

TEST_CASE("full dualizability in Vect") {
  for (std::size_t n = 0; n <= 3; ++n) {
    auto v = full_dualizable_vect(n);
    CHECK(v.passed);
    REQUIRE(v.witness);
    CHECK(duality_check(*v.witness).passed);
  }
  auto inf = full_dualizable_vect(std::nullopt);
  CHECK_FALSE(inf.passed);
  CHECK_FALSE(inf.witness);
  CHECK_FALSE(inf.explanation.empty());
}

TEST_CASE("orientation and interface errors") {
  auto pm = SignedPoints::parse("+-");
  CHECK(pm.to_string() == "+-");
  CHECK(SignedPoints::parse("").size() == 0);
  CHECK_THROWS_AS(SignedPoints::parse("+x"), Error);
  // joining two source + points
  CHECK_THROWS_AS(Cobordism1(SignedPoints::parse("++"), SignedPoints{}, {1, 0}), InvalidStructure);
  CHECK_THROWS_AS(Cobordism1(pm, SignedPoints{}, {0, 1}), InvalidStructure);
  CHECK_THROWS_AS(Cobordism1(pm, SignedPoints{}, {1}), InvalidStructure);
  CHECK_THROWS_AS(compose(Cobordism1::evaluation(), Cobordism1::coevaluation()), ShapeMismatch);
}
