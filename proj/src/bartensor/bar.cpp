#include "facthom/bar.hpp"

#include <algorithm>

namespace facthom {

const char* const kExcisionConvention =
    "A is a right A⊗A^op-module by m·(a⊗b) = b·m·a and a left A⊗A^op-module by (a⊗b)·n = a·n·b";

namespace {

// Tuples (m, a_1..a_n, n') in lexicographic order; algebra slots range over [first, d).
std::vector<Tuple> bar_tuples(std::size_t mdim, std::size_t d, std::size_t ndim, int n, std::uint32_t first) {
  std::vector<Tuple> out;
  std::vector<std::size_t> bound(static_cast<std::size_t>(n) + 2, d);
  bound.front() = mdim;
  bound.back() = ndim;
  for (auto b : bound) {
    if (b == 0) return out;
  }
  if (n > 0 && first >= d) return out;
  Tuple t(bound.size(), first);
  t.front() = 0;
  t.back() = 0;
  auto start = [&](std::size_t pos) { return (pos == 0 || pos + 1 == t.size()) ? 0u : first; };
  while (true) {
    out.push_back(t);
    std::size_t pos = t.size();
    bool advanced = false;
    while (pos-- > 0) {
      if (t[pos] + 1 < bound[pos]) {
        ++t[pos];
        for (std::size_t q = pos + 1; q < t.size(); ++q) t[q] = start(q);
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

}  // namespace

BarComplex BarComplex::build(const RightModule& m, const Algebra& a, const LeftModule& n, int maxdeg,
                             std::size_t budget, bool normalized) {
  if (maxdeg < 1) throw Error("bar complex needs maxdeg >= 1");
  if (!(m.field == a.field()) || !(n.field == a.field())) throw FieldMismatch("bar complex inputs over different fields");
  validate(m, a);
  validate(n, a);
  UnitAdapted adapted = unit_adapted(a);
  const Algebra& alg = adapted.algebra;
  RightModule mr = rebase(m, adapted.change);
  LeftModule nl = rebase(n, adapted.change);
  const std::size_t d = alg.dim();
  const std::uint32_t first = normalized ? 1 : 0;

  std::size_t total = 0;
  std::size_t term = m.dim * n.dim;
  const std::size_t factor = normalized ? d - 1 : d;
  for (int k = 0; k <= maxdeg; ++k) {
    total += term;
    if (total > budget) throw BudgetExceeded(total, budget);
    if (factor != 0 && term > budget / factor + 1) throw BudgetExceeded(SIZE_MAX, budget);
    term *= factor;
  }

  std::vector<std::vector<Tuple>> bases;
  std::vector<std::map<Tuple, std::size_t>> lookup;
  for (int k = 0; k <= maxdeg; ++k) {
    bases.push_back(bar_tuples(m.dim, d, n.dim, k, first));
    std::map<Tuple, std::size_t> idx;
    for (std::size_t j = 0; j < bases.back().size(); ++j) idx.emplace(bases.back()[j], j);
    lookup.push_back(std::move(idx));
  }

  const Field& f = a.field();
  auto boundary = [&](const Tuple& t) {
    const std::size_t deg = t.size() - 2;
    std::map<Tuple, Scalar> acc;
    for (std::size_t i = 0; i <= deg; ++i) {
      Scalar sign = (i % 2 == 0) ? 1 : -1;
      if (i == 0) {
        // m · a_1: column t[0] of the action of a_1
        for (const auto& e : mr.action[t[1]].column(t[0])) {
          Tuple s{static_cast<std::uint32_t>(e.index)};
          s.insert(s.end(), t.begin() + 2, t.end());
          acc[std::move(s)] += sign * e.value;
        }
      } else if (i == deg) {
        for (const auto& e : nl.action[t[deg]].column(t.back())) {
          Tuple s(t.begin(), t.end() - 2);
          s.push_back(static_cast<std::uint32_t>(e.index));
          acc[std::move(s)] += sign * e.value;
        }
      } else {
        for (const auto& e : alg.product(t[i], t[i + 1])) {
          Tuple s(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
          s.push_back(static_cast<std::uint32_t>(e.index));
          s.insert(s.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 2, t.end());
          acc[std::move(s)] += sign * e.value;
        }
      }
    }
    SparseVector out;
    for (auto& [s, v] : acc) {
      Scalar red = f.reduce(v);
      if (red == 0) continue;
      if (normalized && std::find(s.begin() + 1, s.end() - 1, 0u) != s.end() - 1) continue;
      auto it = lookup[deg - 1].find(s);
      if (it == lookup[deg - 1].end()) throw Error("bar differential left the stored basis");
      out.push_back({it->second, std::move(red)});
    }
    std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
    return out;
  };

  std::vector<std::size_t> dims{0, bases[0].size()};
  std::vector<ExactMatrix> diffs{ExactMatrix::zero(f, 0, bases[0].size())};
  for (int k = 1; k <= maxdeg; ++k) {
    const auto& src = bases[static_cast<std::size_t>(k)];
    ExactMatrix t(f, src.size(), bases[static_cast<std::size_t>(k) - 1].size());
    for (std::size_t j = 0; j < src.size(); ++j) t.set_row(j, boundary(src[j]));
    diffs.push_back(t.transpose());
    dims.push_back(src.size());
  }
  ChainComplex complex(f, -1, std::move(dims), std::move(diffs));
  return BarComplex(maxdeg, normalized, std::move(bases), std::move(complex));
}

std::map<int, std::size_t> tor_dims(const RightModule& m, const Algebra& a, const LeftModule& n, int maxdeg,
                                    std::size_t budget) {
  auto bar = BarComplex::build(m, a, n, maxdeg, budget);
  return homology_dims(bar.complex(), 0, maxdeg - 1);
}

std::size_t coequalizer_dim(const RightModule& m, const Algebra& a, const LeftModule& n) {
  validate(m, a);
  validate(n, a);
  const Field& f = a.field();
  Echelon relations(f, m.dim * n.dim);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t p = 0; p < m.dim; ++p) {
      for (std::size_t q = 0; q < n.dim; ++q) {
        std::map<std::size_t, Scalar> acc;
        for (const auto& e : m.action[i].column(p)) acc[e.index * n.dim + q] += e.value;
        for (const auto& e : n.action[i].column(q)) acc[p * n.dim + e.index] -= e.value;
        SparseVector v;
        for (auto& [k, x] : acc) {
          Scalar red = f.reduce(x);
          if (red != 0) v.push_back({k, red});
        }
        relations.insert(std::move(v));
      }
    }
  }
  return m.dim * n.dim - relations.rank();
}

bool ExcisionReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ExcisionRow& r) { return r.agree(); });
}

ExcisionReport excision_circle_check(const Algebra& a, int maxdeg, std::size_t budget) {
  Algebra env = enveloping(a);
  auto tor = tor_dims(enveloping_right(a), env, enveloping_left(a), maxdeg, budget);
  auto hh = hh_dims(a, maxdeg, budget);
  ExcisionReport report;
  for (int n = 0; n < maxdeg; ++n) report.rows.push_back({n, tor.at(n), hh.at(n)});
  return report;
}

}  // namespace facthom
