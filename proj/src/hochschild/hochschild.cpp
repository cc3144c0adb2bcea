#include "facthom/hochschild.hpp"

#include <algorithm>
#include <functional>

namespace facthom {

namespace {

std::size_t checked_add(std::size_t a, std::size_t b, std::size_t budget) {
  std::size_t s = a + b;
  if (s < a || s > budget) throw BudgetExceeded(s < a ? SIZE_MAX : s, budget);
  return s;
}

std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t budget) {
  if (a != 0 && b > budget / a + 1) throw BudgetExceeded(SIZE_MAX, budget);
  return a * b;
}

// Lexicographic enumeration of tuples: position 0 ranges over [0, d), later
// positions over [first, d).
std::vector<Tuple> product_tuples(std::size_t d, int n, std::uint32_t first) {
  std::vector<Tuple> out;
  if (d == 0 || (n > 0 && first >= d)) return out;
  Tuple t(static_cast<std::size_t>(n) + 1, first);
  t[0] = 0;
  while (true) {
    out.push_back(t);
    std::size_t pos = t.size();
    while (pos-- > 0) {
      if (t[pos] + 1 < d) {
        ++t[pos];
        for (std::size_t q = pos + 1; q < t.size(); ++q) t[q] = first;
        break;
      }
      if (pos == 0) return out;
    }
  }
}

void weighted_tuples(const std::vector<std::size_t>& weights, std::size_t remaining, std::size_t slots, Tuple& prefix,
                     std::vector<Tuple>& out, std::size_t budget, std::size_t& total) {
  if (slots == 0) {
    if (remaining == 0) {
      out.push_back(prefix);
      total = checked_add(total, 1, budget);
    }
    return;
  }
  const bool head = prefix.empty();
  for (std::uint32_t i = 0; i < weights.size(); ++i) {
    std::size_t w = weights[i];
    if (!head && w == 0) continue;  // normalized factors have positive weight
    if (w > remaining) continue;
    prefix.push_back(i);
    weighted_tuples(weights, remaining - w, slots - 1, prefix, out, budget, total);
    prefix.pop_back();
  }
}

}  // namespace

HochschildComplex::HochschildComplex(Algebra algebra, ExactMatrix change, int maxdeg, bool normalized,
                                     std::optional<std::size_t> weight, std::vector<std::size_t> weights,
                                     std::vector<std::vector<Tuple>> bases)
    : algebra_(std::move(algebra)),
      change_(std::move(change)),
      maxdeg_(maxdeg),
      normalized_(normalized),
      weight_(weight),
      element_weights_(std::move(weights)),
      bases_(std::move(bases)),
      lookup_(bases_.size()),
      complex_([this] {
        for (std::size_t n = 0; n < bases_.size(); ++n) {
          for (std::size_t k = 0; k < bases_[n].size(); ++k) lookup_[n].emplace(bases_[n][k], k);
        }
        const Field& f = algebra_.field();
        std::vector<std::size_t> dims{0};
        std::vector<ExactMatrix> diffs{ExactMatrix::zero(f, 0, bases_[0].size())};
        dims.push_back(bases_[0].size());
        for (std::size_t n = 1; n < bases_.size(); ++n) {
          ExactMatrix t(f, bases_[n].size(), bases_[n - 1].size());
          for (std::size_t k = 0; k < bases_[n].size(); ++k) t.set_row(k, boundary(bases_[n][k]));
          diffs.push_back(t.transpose());
          dims.push_back(bases_[n].size());
        }
        if (weight_) {
          diffs.push_back(ExactMatrix::zero(f, bases_.back().size(), 0));
          dims.push_back(0);
        }
        return ChainComplex(f, -1, std::move(dims), std::move(diffs));
      }()) {}

HochschildComplex HochschildComplex::build(const Algebra& a, int maxdeg, std::size_t budget) {
  if (maxdeg < 1) throw Error("hochschild complex needs maxdeg >= 1");
  UnitAdapted adapted = unit_adapted(a);
  const std::size_t d = a.dim();
  std::size_t total = 0;
  std::size_t term = d;
  for (int n = 0; n <= maxdeg; ++n) {
    total = checked_add(total, term, budget);
    term = checked_mul(term, d - 1, budget);
  }
  std::vector<std::vector<Tuple>> bases;
  for (int n = 0; n <= maxdeg; ++n) bases.push_back(product_tuples(d, n, 1));
  return HochschildComplex(std::move(adapted.algebra), std::move(adapted.change), maxdeg, true, std::nullopt, {},
                           std::move(bases));
}

HochschildComplex HochschildComplex::build_unnormalized(const Algebra& a, int maxdeg, std::size_t budget) {
  if (maxdeg < 1) throw Error("hochschild complex needs maxdeg >= 1");
  UnitAdapted adapted = unit_adapted(a);
  const std::size_t d = a.dim();
  std::size_t total = 0;
  std::size_t term = d;
  for (int n = 0; n <= maxdeg; ++n) {
    total = checked_add(total, term, budget);
    term = checked_mul(term, d, budget);
  }
  std::vector<std::vector<Tuple>> bases;
  for (int n = 0; n <= maxdeg; ++n) bases.push_back(product_tuples(d, n, 0));
  return HochschildComplex(std::move(adapted.algebra), std::move(adapted.change), maxdeg, false, std::nullopt, {},
                           std::move(bases));
}

HochschildComplex HochschildComplex::build_graded(const GradedAlgebra& p, std::size_t weight, std::size_t budget) {
  if (weight > p.cutoff()) {
    throw Error("weight " + std::to_string(weight) + " exceeds the cutoff " + std::to_string(p.cutoff()));
  }
  std::vector<std::vector<Tuple>> bases;
  std::size_t total = 0;
  for (std::size_t n = 0; n <= weight; ++n) {
    std::vector<Tuple> level;
    Tuple prefix;
    weighted_tuples(p.weights(), weight, n + 1, prefix, level, budget, total);
    bases.push_back(std::move(level));
  }
  return HochschildComplex(p.flat(), ExactMatrix::identity(p.field(), p.flat().dim()), static_cast<int>(weight), true,
                           weight, p.weights(), std::move(bases));
}

int HochschildComplex::valid_through() const { return weight_ ? maxdeg_ : maxdeg_ - 1; }

std::optional<std::size_t> HochschildComplex::index(int n, const Tuple& t) const {
  if (n < 0 || static_cast<std::size_t>(n) >= lookup_.size()) return std::nullopt;
  auto it = lookup_[static_cast<std::size_t>(n)].find(t);
  if (it == lookup_[static_cast<std::size_t>(n)].end()) return std::nullopt;
  return it->second;
}

namespace {

void accumulate(std::map<Tuple, Scalar>& acc, Tuple t, const Scalar& coeff) { acc[std::move(t)] += coeff; }

}  // namespace

SparseVector HochschildComplex::boundary(const Tuple& t) const {
  const int n = static_cast<int>(t.size()) - 1;
  const Field& f = algebra_.field();
  std::map<Tuple, Scalar> acc;
  for (int i = 0; i < n; ++i) {
    Scalar sign = (i % 2 == 0) ? 1 : -1;
    const auto& prod = algebra_.product(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i) + 1]);
    for (const auto& e : prod) {
      Tuple s;
      s.reserve(t.size() - 1);
      s.insert(s.end(), t.begin(), t.begin() + i);
      s.push_back(static_cast<std::uint32_t>(e.index));
      s.insert(s.end(), t.begin() + i + 2, t.end());
      accumulate(acc, std::move(s), sign * e.value);
    }
  }
  {
    Scalar sign = (n % 2 == 0) ? 1 : -1;
    for (const auto& e : algebra_.product(t.back(), t.front())) {
      Tuple s;
      s.reserve(t.size() - 1);
      s.push_back(static_cast<std::uint32_t>(e.index));
      s.insert(s.end(), t.begin() + 1, t.end() - 1);
      accumulate(acc, std::move(s), sign * e.value);
    }
  }
  SparseVector out;
  for (auto& [s, v] : acc) {
    Scalar red = f.reduce(v);
    if (red == 0) continue;
    if (normalized_ && std::find(s.begin() + 1, s.end(), 0u) != s.end()) continue;
    auto k = index(n - 1, s);
    if (!k) throw Error("boundary left the stored basis");
    out.push_back({*k, std::move(red)});
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  return out;
}

SparseVector HochschildComplex::connes(const Tuple& t) const {
  if (!normalized_) throw Error("Connes operator is defined on the normalized complex");
  const std::size_t n = t.size() - 1;
  if (t[0] == 0) return {};
  const Field& f = algebra_.field();
  std::map<Tuple, Scalar> acc;
  for (std::size_t i = 0; i <= n; ++i) {
    Tuple s{0};
    s.insert(s.end(), t.begin() + static_cast<std::ptrdiff_t>(i), t.end());
    s.insert(s.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
    Scalar sign = ((n * i) % 2 == 0) ? 1 : -1;
    accumulate(acc, std::move(s), sign);
  }
  SparseVector out;
  for (auto& [s, v] : acc) {
    Scalar red = f.reduce(v);
    if (red == 0) continue;
    auto k = index(static_cast<int>(n) + 1, s);
    if (!k) throw Error("Connes operator left the stored range");
    out.push_back({*k, std::move(red)});
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  return out;
}

std::map<int, std::size_t> hh_dims(const Algebra& a, int maxdeg, std::size_t budget) {
  auto h = HochschildComplex::build(a, maxdeg, budget);
  auto dims = homology_dims(h.complex(), 0, h.valid_through());
  if (dims.at(0) != cocenter(a).dim) {
    throw Error("HH_0 = " + std::to_string(dims.at(0)) + " disagrees with the cocenter dimension " +
                std::to_string(cocenter(a).dim));
  }
  return dims;
}

std::map<int, std::size_t> graded_hh_dims(const GradedAlgebra& p, std::size_t weight, std::size_t budget) {
  auto h = HochschildComplex::build_graded(p, weight, budget);
  return homology_dims(h.complex(), 0, h.valid_through());
}

ChainMap connes_b(const HochschildComplex& h) {
  ChainMap map{h.complex(), h.complex(), 1, {}};
  const Field& f = h.algebra().field();
  for (int n = 0; n + 1 <= h.maxdeg(); ++n) {
    const auto& src = h.basis(n);
    ExactMatrix t(f, src.size(), h.basis(n + 1).size());
    for (std::size_t k = 0; k < src.size(); ++k) t.set_row(k, h.connes(src[k]));
    map.components.emplace(n, t.transpose());
  }
  return map;
}

DifferentialIdentities check_differential_identities(const HochschildComplex& h, const ChainMap& B) {
  DifferentialIdentities out;
  const ChainComplex& c = h.complex();
  auto fail = [&](int n) {
    if (!out.first_failure) out.first_failure = n;
  };
  for (int n = c.lo() + 2; n <= c.hi(); ++n) {
    if (!(c.differential(n - 1) * c.differential(n)).is_zero()) {
      out.b_squared_zero = false;
      fail(n);
    }
  }
  for (const auto& [n, bn] : B.components) {
    auto next = B.components.find(n + 1);
    if (next != B.components.end() && !(next->second * bn).is_zero()) {
      out.B_squared_zero = false;
      fail(n);
    }
    ExactMatrix sum = c.differential(n + 1) * bn;
    auto prev = B.components.find(n - 1);
    if (n >= 1 && prev != B.components.end()) sum = sum + prev->second * c.differential(n);
    if (!sum.is_zero()) {
      out.bB_plus_Bb_zero = false;
      fail(n);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// HKR

std::vector<KaehlerForm> kaehler_basis(std::size_t vars, std::size_t form_degree, std::size_t weight) {
  std::vector<KaehlerForm> out;
  if (form_degree > vars || weight < form_degree) return out;
  GradedAlgebra monos(Field::rationals(), vars, weight - form_degree);
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (current.size() == form_degree) {
      subsets.push_back(current);
      return;
    }
    for (std::size_t j = start; j < vars; ++j) {
      current.push_back(j);
      choose(j + 1);
      current.pop_back();
    }
  };
  choose(0);
  for (std::size_t idx : monos.weight_basis(weight - form_degree)) {
    for (const auto& s : subsets) out.push_back({monos.exponents(idx), s});
  }
  return out;
}

namespace {

void require_hkr_field(const Field& f, std::size_t weight) {
  if (!f.is_rational() && f.characteristic() <= weight) {
    throw Error("HKR comparison needs characteristic 0 or p > " + std::to_string(weight) + "; got " + f.name());
  }
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ExactMatrix hkr_matrix(const GradedAlgebra& p, const HochschildComplex& h, std::size_t form_degree,
                       std::size_t weight) {
  auto forms = kaehler_basis(p.vars(), form_degree, weight);
  const Field& f = p.field();
  const int deg = static_cast<int>(form_degree);
  ExactMatrix t(f, forms.size(), h.basis(deg).size());
  for (std::size_t col = 0; col < forms.size(); ++col) {
    const auto& form = forms[col];
    auto coef = p.index_of(form.coefficient);
    std::vector<std::uint32_t> var_index;
    for (std::size_t j : form.differentials) {
      std::vector<std::size_t> e(p.vars(), 0);
      e[j] = 1;
      var_index.push_back(static_cast<std::uint32_t>(*p.index_of(e)));
    }
    std::vector<std::size_t> perm(form_degree);
    for (std::size_t q = 0; q < form_degree; ++q) perm[q] = q;
    std::map<std::size_t, Scalar> acc;
    do {
      Tuple tup{static_cast<std::uint32_t>(*coef)};
      for (std::size_t q : perm) tup.push_back(var_index[q]);
      auto k = h.index(deg, tup);
      if (!k) throw Error("HKR image left the weight-graded basis");
      acc[*k] += permutation_sign(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    SparseVector row;
    for (auto& [k, v] : acc) {
      Scalar red = f.reduce(v);
      if (red != 0) row.push_back({k, red});
    }
    t.set_row(col, std::move(row));
  }
  return t.transpose();
}

}  // namespace

ExactMatrix hkr_map(const GradedAlgebra& p, std::size_t form_degree, std::size_t weight) {
  if (form_degree > p.vars() || weight < form_degree) throw Error("HKR map needs i <= m and w >= i");
  require_hkr_field(p.field(), weight);
  auto h = HochschildComplex::build_graded(p, weight);
  return hkr_matrix(p, h, form_degree, weight);
}

HkrReport hkr_check(const GradedAlgebra& p, std::size_t form_degree, std::size_t weight) {
  require_hkr_field(p.field(), weight);
  HkrReport r;
  r.form_degree = form_degree;
  r.weight = weight;
  r.kaehler_dim = kaehler_dims(p.vars(), form_degree, weight);
  auto h = HochschildComplex::build_graded(p, weight);
  const int deg = static_cast<int>(form_degree);
  r.hh_dim = homology_dim(h.complex(), deg);
  if (form_degree > p.vars() || weight < form_degree) {
    // Ω^i_w = 0: the map is the zero map out of the zero space.
    r.columns_are_cycles = true;
    r.injective_on_homology = true;
    r.surjective_on_homology = r.hh_dim == 0;
    return r;
  }
  ExactMatrix m = hkr_matrix(p, h, form_degree, weight);
  r.columns_are_cycles = (h.complex().differential(deg) * m).is_zero();
  const ExactMatrix& boundaries = h.complex().differential(deg + 1);
  std::size_t image_rank = rank(boundaries.hstack(m)) - rank(boundaries);
  r.injective_on_homology = image_rank == m.cols();
  r.surjective_on_homology = image_rank == r.hh_dim;
  return r;
}

CircleActionReport circle_action_check(std::size_t weight, Field field) {
  if (weight < 1) throw Error("circle action check needs weight >= 1");
  require_hkr_field(field, weight);
  GradedAlgebra p(field, 1, weight);
  auto h = HochschildComplex::build_graded(p, weight);
  const auto top = static_cast<std::uint32_t>(*p.index_of({weight}));
  const auto below = static_cast<std::uint32_t>(*p.index_of({weight - 1}));
  const auto x = static_cast<std::uint32_t>(*p.index_of({1}));
  SparseVector b_of_top = h.connes(Tuple{top});
  std::size_t hkr_index = *h.index(1, Tuple{below, x});
  const ExactMatrix& b2 = h.complex().differential(2);
  CircleActionReport r;
  r.weight = weight;
  for (int sign : {1, -1}) {
    Scalar coeff = field.from_int(-sign * static_cast<long>(weight));
    SparseVector diff = axpy(field, b_of_top, coeff, SparseVector{{hkr_index, Scalar(1)}});
    if (in_column_span(b2, diff)) {
      r.passed = true;
      r.sign = sign;
      return r;
    }
  }
  return r;
}

}  // namespace facthom
