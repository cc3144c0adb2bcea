#include <algorithm>

#include "facthom/algebra.hpp"

namespace facthom {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t kaehler_dims(std::size_t vars, std::size_t form_degree, std::size_t weight) {
  if (form_degree > vars || weight < form_degree) return 0;
  // monomials of degree (w − i) in m variables: C(w − i + m − 1, m − 1)
  return binomial(vars, form_degree) * binomial(weight - form_degree + vars - 1, vars - 1);
}

namespace {

// Exponent vectors of total degree w in m variables, decreasing lexicographic order.
void monomials(std::size_t m, std::size_t w, std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() + 1 == m) {
    prefix.push_back(w);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t e = w + 1; e-- > 0;) {
    prefix.push_back(e);
    monomials(m, w - e, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<std::size_t>> all_monomials(std::size_t m, std::size_t cutoff) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t w = 0; w <= cutoff; ++w) {
    std::vector<std::size_t> prefix;
    monomials(m, w, prefix, out);
  }
  return out;
}

std::string monomial_label(const std::vector<std::size_t>& e) {
  static const char* names = "xyzuvw";
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += v < 6 ? std::string(1, names[v]) : "x" + std::to_string(v + 1);
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

Algebra flat_polynomial(Field field, std::size_t m, std::size_t cutoff) {
  if (m == 0) throw InvalidStructure("polynomial algebra needs at least one variable");
  auto monos = all_monomials(m, cutoff);
  const std::size_t d = monos.size();
  std::vector<std::string> labels;
  for (const auto& e : monos) labels.push_back(monomial_label(e));
  std::vector<Scalar> c(d * d * d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<std::size_t> sum(m);
      for (std::size_t v = 0; v < m; ++v) sum[v] = monos[i][v] + monos[j][v];
      auto it = std::find(monos.begin(), monos.end(), sum);
      if (it != monos.end()) c[(i * d + j) * d + static_cast<std::size_t>(it - monos.begin())] = 1;
    }
  }
  std::vector<Scalar> unit(d, Scalar(0));
  unit[0] = 1;
  return Algebra(field, std::move(labels), std::move(c), std::move(unit));
}

}  // namespace

GradedAlgebra::GradedAlgebra(Field field, std::size_t vars, std::size_t cutoff)
    : vars_(vars), cutoff_(cutoff), flat_(flat_polynomial(field, vars, cutoff)) {
  exponents_ = all_monomials(vars, cutoff);
  for (const auto& e : exponents_) {
    std::size_t w = 0;
    for (auto x : e) w += x;
    weights_.push_back(w);
  }
}

std::size_t GradedAlgebra::weight_dim(std::size_t w) const {
  return static_cast<std::size_t>(std::count(weights_.begin(), weights_.end(), w));
}

std::vector<std::size_t> GradedAlgebra::weight_basis(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] == w) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> GradedAlgebra::index_of(const std::vector<std::size_t>& exponents) const {
  auto it = std::find(exponents_.begin(), exponents_.end(), exponents);
  if (it == exponents_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - exponents_.begin());
}

GradedAlgebra polynomial_algebra(std::size_t vars, std::size_t cutoff, Field field) {
  return GradedAlgebra(field, vars, cutoff);
}

}  // namespace facthom
