#include <algorithm>
#include <functional>
#include <tuple>

#include "facthom/simplicial.hpp"

namespace facthom {

// ---------------------------------------------------------------------------
// FinCategory

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                         std::vector<std::size_t> identity, std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      compose_(std::move(compose)) {
  const std::size_t nm = morphisms_.size();
  for (const auto& m : morphisms_) {
    if (m.source >= objects_.size() || m.target >= objects_.size()) {
      throw InvalidStructure("morphism " + m.name + " has an unknown endpoint");
    }
  }
  if (identity_.size() != objects_.size()) throw InvalidStructure("every object needs an identity");
  for (std::size_t o = 0; o < objects_.size(); ++o) {
    if (identity_[o] >= nm || morphisms_[identity_[o]].source != o || morphisms_[identity_[o]].target != o) {
      throw InvalidStructure("identity of " + objects_[o] + " is not an endomorphism of it");
    }
  }
  for (std::size_t g = 0; g < nm; ++g) {
    for (std::size_t f = 0; f < nm; ++f) {
      if (morphisms_[f].target != morphisms_[g].source) continue;
      auto it = compose_.find({g, f});
      if (it == compose_.end()) {
        throw InvalidStructure("composite " + morphisms_[g].name + "∘" + morphisms_[f].name + " is not defined");
      }
      const auto& gf = morphisms_.at(it->second);
      if (gf.source != morphisms_[f].source || gf.target != morphisms_[g].target) {
        throw InvalidStructure("composite " + morphisms_[g].name + "∘" + morphisms_[f].name + " has wrong endpoints");
      }
    }
  }
  for (std::size_t f = 0; f < nm; ++f) {
    if (this->compose(identity_[morphisms_[f].target], f) != f || this->compose(f, identity_[morphisms_[f].source]) != f) {
      throw InvalidStructure("identity law fails for " + morphisms_[f].name);
    }
  }
  for (std::size_t h = 0; h < nm; ++h) {
    for (std::size_t g = 0; g < nm; ++g) {
      if (morphisms_[g].target != morphisms_[h].source) continue;
      for (std::size_t f = 0; f < nm; ++f) {
        if (morphisms_[f].target != morphisms_[g].source) continue;
        if (this->compose(this->compose(h, g), f) != this->compose(h, this->compose(g, f))) {
          throw InvalidStructure("composition is not associative on (" + morphisms_[h].name + ", " +
                                 morphisms_[g].name + ", " + morphisms_[f].name + ")");
        }
      }
    }
  }
}

std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
  auto it = compose_.find({g, f});
  if (it == compose_.end()) throw InvalidStructure("morphisms are not composable");
  return it->second;
}

bool FinCategory::is_groupoid() const {
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    bool invertible = false;
    for (std::size_t g = 0; g < morphisms_.size() && !invertible; ++g) {
      if (morphisms_[g].source != morphisms_[f].target || morphisms_[g].target != morphisms_[f].source) continue;
      invertible = compose(g, f) == identity_[morphisms_[f].source] && compose(f, g) == identity_[morphisms_[f].target];
    }
    if (!invertible) return false;
  }
  return true;
}

namespace categories {

FinCategory terminal() { return FinCategory({"*"}, {{"id", 0, 0}}, {0}, {{{0, 0}, 0}}); }

FinCategory poset(std::size_t n) {
  std::vector<std::string> objects;
  std::vector<FinCategory::Morphism> morphisms;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i <= n; ++i) objects.push_back(std::to_string(i));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      index[{i, j}] = morphisms.size();
      morphisms.push_back({std::to_string(i) + "<" + std::to_string(j), i, j});
    }
  }
  std::vector<std::size_t> identity;
  for (std::size_t i = 0; i <= n; ++i) identity.push_back(index[{i, i}]);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose;
  for (const auto& [f_ends, f] : index) {
    for (const auto& [g_ends, g] : index) {
      if (f_ends.second == g_ends.first) compose[{g, f}] = index[{f_ends.first, g_ends.second}];
    }
  }
  return FinCategory(std::move(objects), std::move(morphisms), std::move(identity), std::move(compose));
}

FinCategory z2_groupoid() {
  return FinCategory({"*"}, {{"id", 0, 0}, {"t", 0, 0}}, {0},
                     {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 0}});
}

FinCategory walking_isomorphism() {
  // 0: id_a, 1: id_b, 2: f: a → b, 3: g: b → a
  return FinCategory({"a", "b"}, {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}, {"g", 1, 0}}, {0, 1},
                     {{{0, 0}, 0},
                      {{1, 1}, 1},
                      {{2, 0}, 2},
                      {{1, 2}, 2},
                      {{3, 1}, 3},
                      {{0, 3}, 3},
                      {{3, 2}, 0},
                      {{2, 3}, 1}});
}

FinCategory idempotent() {
  return FinCategory({"*"}, {{"id", 0, 0}, {"e", 0, 0}}, {0},
                     {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}});
}

}  // namespace categories

// ---------------------------------------------------------------------------
// SimplicialSet

SimplicialSet::SimplicialSet(std::vector<std::vector<std::string>> names, Table faces, Table degeneracies,
                             std::vector<std::vector<EZForm>> ez)
    : names_(std::move(names)), faces_(std::move(faces)), degens_(std::move(degeneracies)), ez_(std::move(ez)) {
  const int top = level();
  if (top < 0) throw InvalidStructure("simplicial set needs level 0");
  if (faces_.size() != names_.size() || degens_.size() != names_.size()) {
    throw InvalidStructure("face/degeneracy tables must have one entry per level");
  }
  for (int n = 0; n <= top; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const std::size_t nfaces = n == 0 ? 0 : un + 1;
    const std::size_t ndegens = n == top ? 0 : un + 1;
    if (faces_[un].size() != nfaces || degens_[un].size() != ndegens) {
      throw InvalidStructure("level " + std::to_string(n) + " has the wrong number of structure maps");
    }
    for (const auto& d : faces_[un]) {
      if (d.size() != size(n)) throw InvalidStructure("face table size mismatch at level " + std::to_string(n));
      for (auto y : d) {
        if (y >= size(n - 1)) throw InvalidStructure("face image out of range at level " + std::to_string(n));
      }
    }
    for (const auto& s : degens_[un]) {
      if (s.size() != size(n)) throw InvalidStructure("degeneracy table size mismatch at level " + std::to_string(n));
      for (auto y : s) {
        if (y >= size(n + 1)) throw InvalidStructure("degeneracy image out of range at level " + std::to_string(n));
      }
    }
  }
  auto fail = [](const std::string& identity, int n, std::size_t x) {
    throw InvalidStructure("simplicial identity " + identity + " fails at level " + std::to_string(n) + " on element " +
                           std::to_string(x));
  };
  for (int n = 0; n <= top; ++n) {
    for (std::size_t x = 0; x < size(n); ++x) {
      // d_i d_j = d_{j−1} d_i, i < j
      if (n >= 2) {
        for (int j = 1; j <= n; ++j) {
          for (int i = 0; i < j; ++i) {
            if (face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x))) fail("d_i d_j = d_{j-1} d_i", n, x);
          }
        }
      }
      if (n < top) {
        const int up = n + 1;
        for (int j = 0; j <= n; ++j) {
          std::size_t sx = degeneracy(n, j, x);
          for (int i = 0; i <= up; ++i) {
            std::size_t lhs = face(up, i, sx);
            if (i == j || i == j + 1) {
              if (lhs != x) fail("d_j s_j = d_{j+1} s_j = id", n, x);
            } else if (i < j) {
              if (lhs != degeneracy(n - 1, j - 1, face(n, i, x))) fail("d_i s_j = s_{j-1} d_i", n, x);
            } else {
              if (lhs != degeneracy(n - 1, j, face(n, i - 1, x))) fail("d_i s_j = s_j d_{i-1}", n, x);
            }
          }
        }
      }
      if (n + 2 <= top) {
        for (int j = 0; j <= n; ++j) {
          for (int i = 0; i <= j; ++i) {
            if (degeneracy(n + 1, i, degeneracy(n, j, x)) != degeneracy(n + 1, j + 1, degeneracy(n, i, x))) {
              fail("s_i s_j = s_{j+1} s_i", n, x);
            }
          }
        }
      }
    }
  }
  degenerate_.resize(names_.size());
  for (int n = 0; n <= top; ++n) degenerate_[static_cast<std::size_t>(n)].assign(size(n), false);
  for (int n = 0; n < top; ++n) {
    for (const auto& s : degens_[static_cast<std::size_t>(n)]) {
      for (auto y : s) degenerate_[static_cast<std::size_t>(n) + 1][y] = true;
    }
  }
}

std::size_t SimplicialSet::face(int n, std::size_t i, std::size_t x) const {
  return faces_.at(static_cast<std::size_t>(n)).at(i).at(x);
}

std::size_t SimplicialSet::degeneracy(int n, std::size_t i, std::size_t x) const {
  return degens_.at(static_cast<std::size_t>(n)).at(i).at(x);
}

std::vector<std::size_t> SimplicialSet::nondegenerate(int n) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(n); ++x) {
    if (!is_degenerate(n, x)) out.push_back(x);
  }
  return out;
}

std::optional<EZForm> SimplicialSet::ez(int n, std::size_t x) const {
  if (ez_.empty()) return std::nullopt;
  return ez_.at(static_cast<std::size_t>(n)).at(x);
}

std::optional<std::size_t> SimplicialSet::find(int n, const std::string& name) const {
  const auto& level_names = names_.at(static_cast<std::size_t>(n));
  auto it = std::find(level_names.begin(), level_names.end(), name);
  if (it == level_names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - level_names.begin());
}

// ---------------------------------------------------------------------------
// Eilenberg–Zilber builder

namespace {

using Surjection = std::vector<std::uint32_t>;

Surjection identity_surjection(std::size_t k) {
  Surjection s(k + 1);
  for (std::size_t t = 0; t <= k; ++t) s[t] = static_cast<std::uint32_t>(t);
  return s;
}

// Monotone surjections [n] ↠ [k], lexicographic.
std::vector<Surjection> surjections(std::size_t n, std::size_t k) {
  std::vector<Surjection> out;
  Surjection cur{0};
  std::function<void()> rec = [&] {
    if (cur.size() == n + 1) {
      if (cur.back() == k) out.push_back(cur);
      return;
    }
    std::uint32_t last = cur.back();
    cur.push_back(last);
    rec();
    cur.pop_back();
    if (last < k) {
      cur.push_back(last + 1);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::string ez_name(const Surjection& s, const std::string& base) {
  if (s.size() == 1 || std::adjacent_find(s.begin(), s.end()) == s.end()) return base;
  std::string word;
  for (std::size_t t = s.size() - 1; t-- > 0;) {
    if (s[t] == s[t + 1]) word += "s" + std::to_string(t);
  }
  return word + "(" + base + ")";
}

void check_form(const EZForm& f, std::size_t dim, const std::vector<std::vector<NondegenerateSimplex>>& cells) {
  if (f.surjection.size() != dim + 1 || f.surjection.front() != 0 || f.surjection.back() != f.base_dim ||
      f.base_dim >= cells.size() || f.base >= cells[f.base_dim].size()) {
    throw InvalidStructure("malformed face specification");
  }
  for (std::size_t t = 0; t + 1 < f.surjection.size(); ++t) {
    if (f.surjection[t + 1] != f.surjection[t] && f.surjection[t + 1] != f.surjection[t] + 1) {
      throw InvalidStructure("face specification is not a monotone surjection");
    }
  }
}

}  // namespace

SimplicialSet from_nondegenerate(const std::vector<std::vector<NondegenerateSimplex>>& cells, int level) {
  if (level < 0) throw InvalidStructure("negative truncation level");
  for (std::size_t k = 0; k < cells.size(); ++k) {
    for (const auto& c : cells[k]) {
      if (c.faces.size() != (k == 0 ? 0 : k + 1)) throw InvalidStructure("cell " + c.name + " needs k+1 faces");
      for (const auto& f : c.faces) check_form(f, k - 1, cells);
    }
  }
  const auto L = static_cast<std::size_t>(level);
  using Key = std::tuple<Surjection, std::size_t, std::size_t>;
  std::vector<std::vector<EZForm>> elems(L + 1);
  std::vector<std::map<Key, std::size_t>> index(L + 1);
  std::vector<std::vector<std::string>> names(L + 1);
  for (std::size_t n = 0; n <= L; ++n) {
    for (std::size_t k = std::min(n, cells.empty() ? 0 : cells.size() - 1) + 1; k-- > 0;) {
      if (k >= cells.size()) continue;
      for (const auto& s : surjections(n, k)) {
        for (std::size_t b = 0; b < cells[k].size(); ++b) {
          index[n][{s, k, b}] = elems[n].size();
          elems[n].push_back({s, k, b});
          names[n].push_back(ez_name(s, cells[k][b].name));
        }
      }
    }
  }
  auto lookup = [&](std::size_t n, const EZForm& f) { return index[n].at({f.surjection, f.base_dim, f.base}); };

  SimplicialSet::Table faces(L + 1);
  SimplicialSet::Table degens(L + 1);
  for (std::size_t n = 1; n <= L; ++n) {
    faces[n].assign(n + 1, std::vector<std::size_t>(elems[n].size()));
    for (std::size_t x = 0; x < elems[n].size(); ++x) {
      const EZForm& e = elems[n][x];
      for (std::size_t i = 0; i <= n; ++i) {
        Surjection tau;
        for (std::size_t t = 0; t <= n; ++t) {
          if (t != i) tau.push_back(e.surjection[t]);
        }
        // τ = σ∘δ_i misses at most one value j of [k].
        std::optional<std::uint32_t> missing;
        for (std::uint32_t v = 0; v <= e.base_dim; ++v) {
          if (std::find(tau.begin(), tau.end(), v) == tau.end()) missing = v;
        }
        EZForm image;
        if (!missing) {
          image = {tau, e.base_dim, e.base};
        } else {
          const std::uint32_t j = *missing;
          Surjection reduced;
          for (auto v : tau) reduced.push_back(v < j ? v : v - 1);
          const EZForm& fj = cells[e.base_dim][e.base].faces[j];
          Surjection composed;
          for (auto v : reduced) composed.push_back(fj.surjection[v]);
          image = {composed, fj.base_dim, fj.base};
        }
        faces[n][i][x] = lookup(n - 1, image);
      }
    }
  }
  for (std::size_t n = 0; n < L; ++n) {
    degens[n].assign(n + 1, std::vector<std::size_t>(elems[n].size()));
    for (std::size_t x = 0; x < elems[n].size(); ++x) {
      const EZForm& e = elems[n][x];
      for (std::size_t i = 0; i <= n; ++i) {
        Surjection s;
        for (std::size_t t = 0; t <= n + 1; ++t) s.push_back(e.surjection[t <= i ? t : t - 1]);
        degens[n][i][x] = lookup(n + 1, {s, e.base_dim, e.base});
      }
    }
  }
  return SimplicialSet(std::move(names), std::move(faces), std::move(degens), std::move(elems));
}

namespace models {

namespace {

EZForm nd(std::size_t dim, std::size_t base) { return {identity_surjection(dim), dim, base}; }

// Δ^n-type complexes: nondegenerate simplices are the vertex subsets accepted by `keep`.
SimplicialSet subset_complex(int n, int level, const std::function<bool(const std::vector<std::size_t>&)>& keep) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<std::vector<std::size_t>>> subsets(un + 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << (un + 1)); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v <= un; ++v) {
      if (mask & (std::size_t{1} << v)) s.push_back(v);
    }
    if (keep(s)) subsets[s.size() - 1].push_back(s);
  }
  for (auto& level_subsets : subsets) std::sort(level_subsets.begin(), level_subsets.end());
  std::vector<std::vector<NondegenerateSimplex>> cells(un + 1);
  for (std::size_t k = 0; k <= un; ++k) {
    for (const auto& s : subsets[k]) {
      NondegenerateSimplex c;
      for (auto v : s) c.name += std::to_string(v);
      if (k > 0) {
        for (std::size_t j = 0; j <= k; ++j) {
          std::vector<std::size_t> face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
          auto it = std::find(subsets[k - 1].begin(), subsets[k - 1].end(), face);
          if (it == subsets[k - 1].end()) throw InvalidStructure("subset complex is not closed under faces");
          c.faces.push_back(nd(k - 1, static_cast<std::size_t>(it - subsets[k - 1].begin())));
        }
      }
      cells[k].push_back(std::move(c));
    }
  }
  while (!cells.empty() && cells.back().empty()) cells.pop_back();
  return from_nondegenerate(cells, level);
}

}  // namespace

SimplicialSet point(int level) { return from_nondegenerate({{{"*", {}}}}, level); }

SimplicialSet simplex(int n, int level) {
  return subset_complex(n, level, [](const std::vector<std::size_t>&) { return true; });
}

SimplicialSet boundary(int n, int level) {
  const auto full = static_cast<std::size_t>(n) + 1;
  return subset_complex(n, level, [full](const std::vector<std::size_t>& s) { return s.size() < full; });
}

SimplicialSet horn(int n, int k, int level) {
  if (k < 0 || k > n) throw InvalidStructure("horn index out of range");
  const auto full = static_cast<std::size_t>(n) + 1;
  const auto missing = static_cast<std::size_t>(k);
  return subset_complex(n, level, [full, missing](const std::vector<std::size_t>& s) {
    if (s.size() == full) return false;
    if (s.size() + 1 == full && std::find(s.begin(), s.end(), missing) == s.end()) return false;
    return true;
  });
}

SimplicialSet circle(int level) {
  return from_nondegenerate({{{"*", {}}}, {{"e", {nd(0, 0), nd(0, 0)}}}}, level);
}

SimplicialSet circle_two(int level) {
  // a: v0 → v1, b: v1 → v0 (d_0 = target, d_1 = source)
  return from_nondegenerate({{{"v0", {}}, {"v1", {}}}, {{"a", {nd(0, 1), nd(0, 0)}}, {"b", {nd(0, 0), nd(0, 1)}}}},
                            level);
}

SimplicialSet sphere(int level) {
  EZForm point_edge{{0, 0}, 0, 0};
  return from_nondegenerate({{{"*", {}}}, {}, {{"t", {point_edge, point_edge, point_edge}}}}, level);
}

SimplicialSet sphere_suspension(int level) {
  // vertices a, b, c; edges ab, bc, ac; two triangles with faces (bc, ac, ab)
  std::vector<std::vector<NondegenerateSimplex>> cells(3);
  cells[0] = {{"a", {}}, {"b", {}}, {"c", {}}};
  cells[1] = {{"ab", {nd(0, 1), nd(0, 0)}}, {"bc", {nd(0, 2), nd(0, 1)}}, {"ac", {nd(0, 2), nd(0, 0)}}};
  cells[2] = {{"upper", {nd(1, 1), nd(1, 2), nd(1, 0)}}, {"lower", {nd(1, 1), nd(1, 2), nd(1, 0)}}};
  return from_nondegenerate(cells, level);
}

SimplicialSet torus(int level) { return product(circle(level), circle(level)); }

SimplicialSet by_name(const std::string& name, int level) {
  auto parts = [&] {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      auto pos = name.find(':', start);
      out.push_back(name.substr(start, pos - start));
      if (pos == std::string::npos) return out;
      start = pos + 1;
    }
  }();
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw Error("model '" + name + "' needs more arguments");
    try {
      return std::stoi(parts[i]);
    } catch (const std::exception&) {
      throw Error("model '" + name + "': bad integer argument");
    }
  };
  const std::string& head = parts[0];
  if (head == "point") return point(level);
  if (head == "simplex") return simplex(arg(1), level);
  if (head == "boundary") return boundary(arg(1), level);
  if (head == "horn") return horn(arg(1), arg(2), level);
  if (head == "circle") return circle(level);
  if (head == "circle2") return circle_two(level);
  if (head == "sphere") return sphere(level);
  if (head == "sphere2") return sphere_suspension(level);
  if (head == "torus") return torus(level);
  throw Error("unknown simplicial model '" + name + "'");
}

}  // namespace models

// ---------------------------------------------------------------------------
// Nerve and products

SimplicialSet nerve(const FinCategory& c, int level) {
  if (level < 0) throw InvalidStructure("negative truncation level");
  const auto L = static_cast<std::size_t>(level);
  using Chain = std::vector<std::size_t>;
  std::vector<std::vector<Chain>> chains(L + 1);
  std::vector<std::map<Chain, std::size_t>> index(L + 1);
  std::vector<std::vector<std::string>> names(L + 1);
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    chains[0].push_back({o});  // level 0 stores the object
    names[0].push_back(c.object(o));
  }
  if (L >= 1) {
    for (std::size_t f = 0; f < c.morphism_count(); ++f) chains[1].push_back({f});
  }
  for (std::size_t n = 2; n <= L; ++n) {
    for (const auto& prev : chains[n - 1]) {
      for (std::size_t f = 0; f < c.morphism_count(); ++f) {
        if (c.morphism(f).source != c.morphism(prev.back()).target) continue;
        Chain next = prev;
        next.push_back(f);
        chains[n].push_back(std::move(next));
      }
    }
  }
  for (std::size_t n = 0; n <= L; ++n) {
    for (std::size_t x = 0; x < chains[n].size(); ++x) {
      index[n][chains[n][x]] = x;
      if (n >= 1) {
        std::string label;
        for (auto f : chains[n][x]) label += (label.empty() ? "" : "|") + c.morphism(f).name;
        names[n].push_back(label);
      }
    }
  }
  // object c_i of a chain (f_1..f_n): c_0 = source(f_1), c_i = target(f_i)
  auto vertex = [&](const Chain& ch, std::size_t i) {
    return i == 0 ? c.morphism(ch[0]).source : c.morphism(ch[i - 1]).target;
  };
  SimplicialSet::Table faces(L + 1);
  SimplicialSet::Table degens(L + 1);
  for (std::size_t n = 1; n <= L; ++n) {
    faces[n].assign(n + 1, std::vector<std::size_t>(chains[n].size()));
    for (std::size_t x = 0; x < chains[n].size(); ++x) {
      const Chain& ch = chains[n][x];
      for (std::size_t i = 0; i <= n; ++i) {
        Chain out;
        if (n == 1) {
          out = {i == 0 ? c.morphism(ch[0]).target : c.morphism(ch[0]).source};
        } else if (i == 0) {
          out.assign(ch.begin() + 1, ch.end());
        } else if (i == n) {
          out.assign(ch.begin(), ch.end() - 1);
        } else {
          out.assign(ch.begin(), ch.begin() + static_cast<std::ptrdiff_t>(i) - 1);
          out.push_back(c.compose(ch[i], ch[i - 1]));
          out.insert(out.end(), ch.begin() + static_cast<std::ptrdiff_t>(i) + 1, ch.end());
        }
        faces[n][i][x] = index[n - 1].at(out);
      }
    }
  }
  for (std::size_t n = 0; n < L; ++n) {
    degens[n].assign(n + 1, std::vector<std::size_t>(chains[n].size()));
    for (std::size_t x = 0; x < chains[n].size(); ++x) {
      const Chain& ch = chains[n][x];
      for (std::size_t i = 0; i <= n; ++i) {
        Chain out;
        if (n == 0) {
          out = {c.identity(ch[0])};
        } else {
          out.assign(ch.begin(), ch.begin() + static_cast<std::ptrdiff_t>(i));
          out.push_back(c.identity(vertex(ch, i)));
          out.insert(out.end(), ch.begin() + static_cast<std::ptrdiff_t>(i), ch.end());
        }
        degens[n][i][x] = index[n + 1].at(out);
      }
    }
  }
  return SimplicialSet(std::move(names), std::move(faces), std::move(degens));
}

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y) {
  if (x.level() != y.level()) {
    throw InvalidStructure("product needs equal truncation levels (" + std::to_string(x.level()) + " vs " +
                           std::to_string(y.level()) + ")");
  }
  const int L = x.level();
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(L) + 1);
  SimplicialSet::Table faces(static_cast<std::size_t>(L) + 1);
  SimplicialSet::Table degens(static_cast<std::size_t>(L) + 1);
  for (int n = 0; n <= L; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const std::size_t ny = y.size(n);
    for (std::size_t a = 0; a < x.size(n); ++a) {
      for (std::size_t b = 0; b < ny; ++b) names[un].push_back("(" + x.name(n, a) + "," + y.name(n, b) + ")");
    }
    if (n >= 1) {
      const std::size_t ny_down = y.size(n - 1);
      faces[un].assign(un + 1, std::vector<std::size_t>(x.size(n) * ny));
      for (std::size_t i = 0; i <= un; ++i) {
        for (std::size_t a = 0; a < x.size(n); ++a) {
          for (std::size_t b = 0; b < ny; ++b) faces[un][i][a * ny + b] = x.face(n, i, a) * ny_down + y.face(n, i, b);
        }
      }
    }
    if (n < L) {
      const std::size_t ny_up = y.size(n + 1);
      degens[un].assign(un + 1, std::vector<std::size_t>(x.size(n) * ny));
      for (std::size_t i = 0; i <= un; ++i) {
        for (std::size_t a = 0; a < x.size(n); ++a) {
          for (std::size_t b = 0; b < ny; ++b) {
            degens[un][i][a * ny + b] = x.degeneracy(n, i, a) * ny_up + y.degeneracy(n, i, b);
          }
        }
      }
    }
  }
  return SimplicialSet(std::move(names), std::move(faces), std::move(degens));
}

}  // namespace facthom
