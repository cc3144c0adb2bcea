#include <doctest.h>

#include <random>
#include <set>

#include "facthom/errors.hpp"
#include "facthom/simplicial.hpp"
#include "oracle.hpp"

using namespace facthom;

using Dims = std::map<int, std::size_t>;

namespace {

Dims chains_homology(const SimplicialSet& x, Field f = Field::rationals()) {
  return homology_dims(normalized_chains(x, f), 0, x.level() - 1);
}

// Monoid of all maps {0..k−1} → itself generated by `gens` under composition, as a one-object category.
FinCategory transformation_monoid(std::size_t k, const std::vector<std::vector<std::size_t>>& gens) {
  std::vector<std::size_t> id(k);
  for (std::size_t i = 0; i < k; ++i) id[i] = i;
  std::vector<std::vector<std::size_t>> elems{id};
  std::map<std::vector<std::size_t>, std::size_t> index{{id, 0}};
  for (std::size_t pos = 0; pos < elems.size(); ++pos) {
    for (const auto& g : gens) {
      std::vector<std::size_t> h(k);
      for (std::size_t i = 0; i < k; ++i) h[i] = g[elems[pos][i]];
      if (index.emplace(h, elems.size()).second) elems.push_back(h);
    }
  }
  std::vector<FinCategory::Morphism> mors;
  for (std::size_t m = 0; m < elems.size(); ++m) mors.push_back({"m" + std::to_string(m), 0, 0});
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose;
  for (std::size_t g = 0; g < elems.size(); ++g) {
    for (std::size_t f = 0; f < elems.size(); ++f) {
      std::vector<std::size_t> gf(k);
      for (std::size_t i = 0; i < k; ++i) gf[i] = elems[g][elems[f][i]];
      compose[{g, f}] = index.at(gf);
    }
  }
  return FinCategory({"*"}, mors, {0}, compose);
}

}  // namespace

TEST_CASE("finite categories") {
  CHECK(categories::z2_groupoid().is_groupoid());
  CHECK(categories::walking_isomorphism().is_groupoid());
  CHECK_FALSE(categories::poset(2).is_groupoid());
  CHECK_FALSE(categories::idempotent().is_groupoid());
  CHECK(categories::poset(2).morphism_count() == 6);
  // composition table violating associativity: e∘e = id on a monoid {id, e} with e∘id = id
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> bad{{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 0}, {{1, 1}, 0}};
  CHECK_THROWS_AS(FinCategory({"*"}, {{"id", 0, 0}, {"e", 0, 0}}, {0}, bad), InvalidStructure);
}

TEST_CASE("nerves") {
  auto z2 = nerve(categories::z2_groupoid(), 3);
  for (int n = 0; n <= 3; ++n) CHECK(z2.size(n) == (std::size_t{1} << n));
  auto p = nerve(categories::poset(2), 3);
  CHECK(p.size(0) == 3);
  CHECK(p.size(1) == 6);
  CHECK(p.size(2) == 10);
  CHECK(p.nondegenerate(2).size() == 1);
  CHECK(p.nondegenerate(3).empty());
  // the nerve of a poset with a top element is contractible
  CHECK(chains_homology(p) == Dims{{0, 1}, {1, 0}, {2, 0}});
  CHECK(chains_homology(nerve(categories::walking_isomorphism(), 4))[0] == 1);
}

TEST_CASE("inner horns of nerves have unique fillers") {
  for (const auto& c : {categories::poset(2), categories::walking_isomorphism(), categories::idempotent(),
                        categories::z2_groupoid(), categories::terminal()}) {
    auto x = nerve(c, 4);
    for (int n = 2; n <= 4; ++n) {
      for (int k = 1; k < n; ++k) {
        auto h = horn_check(x, n, k);
        CHECK(h.all_fillable());
        CHECK(h.unique_fillers());
      }
    }
  }
  auto z2 = nerve(categories::z2_groupoid(), 3);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(horn_check(z2, n, k).all_fillable());
  }
  // outer horns in a poset nerve are not all fillable
  CHECK_FALSE(horn_check(nerve(categories::poset(1), 3), 2, 0).all_fillable());
  CHECK_FALSE(horn_check(nerve(categories::idempotent(), 3), 2, 0).unique_fillers());
}

TEST_CASE("nerve fuzz: random transformation monoids") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t k = 2 + rng() % 2;
    std::vector<std::vector<std::size_t>> gens(1 + rng() % 2, std::vector<std::size_t>(k));
    for (auto& g : gens) {
      for (auto& v : g) v = rng() % k;
    }
    FinCategory m = transformation_monoid(k, gens);
    auto x = nerve(m, 3);
    CHECK(x.size(1) == m.morphism_count());
    CHECK(x.size(2) == m.morphism_count() * m.morphism_count());
    for (int n = 2; n <= 3; ++n) {
      for (int kk = 1; kk < n; ++kk) CHECK(horn_check(x, n, kk).unique_fillers());
    }
    bool all_outer = horn_check(x, 2, 0).all_fillable() && horn_check(x, 2, 2).all_fillable();
    CHECK(all_outer == m.is_groupoid());
  }
}

TEST_CASE("models and their homology") {
  CHECK(chains_homology(models::point(3)) == Dims{{0, 1}, {1, 0}, {2, 0}});
  CHECK(chains_homology(models::simplex(2, 3)) == Dims{{0, 1}, {1, 0}, {2, 0}});
  CHECK(chains_homology(models::boundary(2, 3)) == Dims{{0, 1}, {1, 1}, {2, 0}});
  CHECK(chains_homology(models::horn(2, 1, 3)) == Dims{{0, 1}, {1, 0}, {2, 0}});
  auto c1 = models::circle(3);
  auto c2 = models::circle_two(3);
  for (int n = 0; n <= 3; ++n) CHECK(c1.size(n) == static_cast<std::size_t>(n + 1));
  CHECK(chains_homology(c1) == Dims{{0, 1}, {1, 1}, {2, 0}});
  CHECK(chains_homology(c2) == chains_homology(c1));
  auto s1 = models::sphere(4);
  auto s2 = models::sphere_suspension(4);
  CHECK(chains_homology(s1) == Dims{{0, 1}, {1, 0}, {2, 1}, {3, 0}});
  CHECK(chains_homology(s2) == chains_homology(s1));
  CHECK(chains_homology(models::torus(4)) == Dims{{0, 1}, {1, 2}, {2, 1}, {3, 0}});
  CHECK(chains_homology(models::torus(4), Field::prime(2)) == Dims{{0, 1}, {1, 2}, {2, 1}, {3, 0}});
  CHECK(models::by_name("horn:3:1", 3).size(0) == 4);
  CHECK_THROWS(models::by_name("klein", 3));
  for (const auto& x : {c1, s1, models::torus(3)}) {
    auto c = normalized_chains(x, Field::rationals());
    for (int n = 0; n < x.level(); ++n) CHECK(homology_dim(c, n) == oracle::homology_dim(c, n));
  }
}

TEST_CASE("minimal circle is not Kan") {
  auto h = horn_check(models::circle(3), 2, 1);
  CHECK_FALSE(h.all_fillable());
  REQUIRE(h.unfillable);
  CHECK(h.horns == 4);
  CHECK_THROWS_AS(horn_check(models::circle(1), 2, 1), DegreeOutOfRange);
}

TEST_CASE("simplicial identities are enforced") {
  auto x = models::circle(2);
  auto faces = x.faces();
  std::vector<std::vector<std::string>> names;
  for (int n = 0; n <= 2; ++n) {
    std::vector<std::string> level;
    for (std::size_t e = 0; e < x.size(n); ++e) level.push_back(x.name(n, e));
    names.push_back(level);
  }
  CHECK_NOTHROW(SimplicialSet(names, faces, x.degeneracies()));
  // send d_0 of every 2-simplex to the nondegenerate edge
  std::size_t edge = x.nondegenerate(1).at(0);
  for (auto& v : faces[2][0]) v = edge;
  CHECK_THROWS_AS(SimplicialSet(names, faces, x.degeneracies()), InvalidStructure);
}

TEST_CASE("products") {
  auto t = product(models::circle(3), models::circle(3));
  CHECK(t.size(2) == 9);
  CHECK(t == models::torus(3));
  CHECK(chains_homology(product(models::simplex(1, 3), models::circle(3))) == chains_homology(models::circle(3)));
}

TEST_CASE("Loday construction") {
  Field q = Field::rationals();
  for (const auto& [name, a] : corpus::all(q)) {
    CAPTURE(name);
    if (!a.is_commutative()) {
      CHECK_THROWS_AS(LodayComplex::build(a, models::circle(2), 2), InvalidStructure);
      continue;
    }
    CHECK(circle_identification(a, 4).ok());
    auto t = torus_check(a, 2);
    CHECK(t.torus.at(0) == t.h0_coequalizer);
    CHECK(loday_h0_coequalizer(a, models::circle(1)) == hh_dims(a, 1).at(0));
  }
  Algebra d = corpus::dual_numbers(q);
  CHECK(homology_dims(loday(d, models::circle(3), 3), 0, 2) == homology_dims(loday(d, models::circle_two(3), 3), 0, 2));
  CHECK(homology_dims(loday(d, models::circle(3), 3), 0, 2) == Dims{{0, 2}, {1, 1}, {2, 1}});
  // over a point the construction is A itself
  CHECK(homology_dims(loday(d, models::point(2), 2), 0, 1) == Dims{{0, 2}, {1, 0}});
  auto split = torus_check(corpus::split_pair(q), 2);
  CHECK(split.torus == Dims{{0, 2}, {1, 0}});
  CHECK(torus_check(d, 2).h0_coequalizer == 2);
  CHECK_THROWS_AS(loday(d, models::circle(2), 3), DegreeOutOfRange);
  CHECK_THROWS_AS(loday(corpus::truncated_poly(q, 3), models::torus(3), 3, 1000), BudgetExceeded);
}
