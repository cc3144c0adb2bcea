#include <string>

#include "facthom/algebra.hpp"

namespace facthom {

InterchangeViolation::InterchangeViolation(std::array<std::size_t, 4> witness)
    : InvalidStructure("interchange law fails at (a, b, c, d) = (" + std::to_string(witness[0]) + ", " +
                       std::to_string(witness[1]) + ", " + std::to_string(witness[2]) + ", " +
                       std::to_string(witness[3]) + ")"),
      witness_(witness) {}

namespace {

bool is_unit(const std::vector<std::size_t>& op, std::size_t n, std::size_t e) {
  for (std::size_t a = 0; a < n; ++a) {
    if (op[e * n + a] != a || op[a * n + e] != a) return false;
  }
  return true;
}

bool is_associative(const std::vector<std::size_t>& op, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (op[op[a * n + b] * n + c] != op[a * n + op[b * n + c]]) return false;
      }
    }
  }
  return true;
}

// (a·b)∘(c·d) = (a∘c)·(b∘d) with · = op1, ∘ = op2.
std::optional<std::array<std::size_t, 4>> interchange_witness(const std::vector<std::size_t>& op1,
                                                              const std::vector<std::size_t>& op2, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          if (op2[op1[a * n + b] * n + op1[c * n + d]] != op1[op2[a * n + c] * n + op2[b * n + d]]) {
            return std::array<std::size_t, 4>{a, b, c, d};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

EckmannHiltonReport eckmann_hilton_check(const MonoidPair& pair) {
  const std::size_t n = pair.size;
  if (pair.op1.size() != n * n || pair.op2.size() != n * n) throw ShapeMismatch("operation tables must be n x n");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (pair.op1[i] >= n || pair.op2[i] >= n) throw InvalidStructure("operation table entry outside the set");
  }
  if (pair.unit >= n) throw UnitMismatch("claimed unit is not an element of the set");
  if (!is_unit(pair.op1, n, pair.unit)) {
    throw UnitMismatch("element " + std::to_string(pair.unit) + " is not a unit for op1");
  }
  if (!is_unit(pair.op2, n, pair.unit)) {
    throw UnitMismatch("element " + std::to_string(pair.unit) + " is not a unit for op2");
  }
  if (auto w = interchange_witness(pair.op1, pair.op2, n)) throw InterchangeViolation(*w);

  EckmannHiltonReport report;
  report.op1_associative = is_associative(pair.op1, n);
  report.op2_associative = is_associative(pair.op2, n);
  report.ops_equal = true;
  report.commutative = true;
  for (std::size_t a = 0; a < n && !report.counterexample; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool equal = pair.op1[a * n + b] == pair.op2[a * n + b];
      bool comm = pair.op1[a * n + b] == pair.op1[b * n + a];
      if (!equal) report.ops_equal = false;
      if (!comm) report.commutative = false;
      if (!equal || !comm) {
        report.counterexample = std::array<std::size_t, 2>{a, b};
        break;
      }
    }
  }
  return report;
}

namespace {

// Every unital operation on {0..n−1} with unit e: the (n−1)² non-unit entries range freely.
std::vector<std::vector<std::size_t>> unital_operations(std::size_t n, std::size_t e) {
  std::vector<std::pair<std::size_t, std::size_t>> free_cells;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != e && b != e) free_cells.push_back({a, b});
    }
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < free_cells.size(); ++i) count *= n;
  std::vector<std::vector<std::size_t>> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<std::size_t> op(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      op[e * n + a] = a;
      op[a * n + e] = a;
    }
    std::size_t c = code;
    for (const auto& [a, b] : free_cells) {
      op[a * n + b] = c % n;
      c /= n;
    }
    out.push_back(std::move(op));
  }
  return out;
}

}  // namespace

EckmannHiltonScan eckmann_hilton_scan(std::size_t max_size) {
  EckmannHiltonScan scan;
  scan.max_size = max_size;
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (std::size_t e = 0; e < n; ++e) {
      auto ops = unital_operations(n, e);
      for (const auto& op1 : ops) {
        for (const auto& op2 : ops) {
          ++scan.pairs_examined;
          if (interchange_witness(op1, op2, n)) continue;
          ++scan.interchange_pairs;
          auto report = eckmann_hilton_check(MonoidPair{n, e, op1, op2});
          if (report.op1_associative && report.op2_associative) ++scan.associative_interchange_pairs;
          if (!report.passed()) ++scan.failures;
        }
      }
    }
  }
  return scan;
}

}  // namespace facthom
