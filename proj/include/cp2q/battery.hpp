// Verification suites: the per-topic suites behind the CLI commands and the
// thirteen-part acceptance battery built from them.
#pragma once

#include <string>
#include <vector>

#include "cp2q/report.hpp"

namespace cp2q {

enum class Level { Smoke, Full };

/// Exact scalars met while running suites, each with its value at q0 and an
/// independent double-precision recomputation.
struct NumericLedger {
  struct Item {
    std::string suite, label;
    double exact_at_q0 = 0, recomputed = 0;
  };
  Rational q0{1, 2};
  std::vector<Item> items;
  void add(const std::string& suite, std::string label, const Radical& exact, double recomputed);
  void add(const std::string& suite, std::string label, double exact, double recomputed);
  double q() const { return q0.get_d(); }
};

// ---- single-topic suites -----------------------------------------------------

SuiteReport rep_suite(int n1, int n2);
SuiteReport h0_suite(int N, int D, NumericLedger* ledger = nullptr);
SuiteReport frame_suite(int N, bool with_flatness, NumericLedger* ledger = nullptr);
SuiteReport ring_suite(int max_n);
/// Unique Haar table on the (D, D) slice, twisted trace on all monomial pairs
/// of total bidegree <= (D, D), sum_i h(z_i z_i^*) = 1 and `probes` random
/// positivity probes at q0.
SuiteReport haar_suite(int D, int probes, const Rational& q0, NumericLedger* ledger = nullptr);

// ---- acceptance battery --------------------------------------------------------

/// Short title of criterion k (1..13).
std::string criterion_title(int k);
/// Runs criterion k. Criterion 13 compares everything recorded in `ledger`
/// (filled by criteria 6..12) within 1e-9.
SuiteReport run_criterion(int k, Level level, NumericLedger& ledger);
std::vector<SuiteReport> run_battery(Level level);

}  // namespace cp2q
