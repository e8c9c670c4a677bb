#pragma once

#include <optional>
#include <vector>

#include "tropenum/pathcount.hpp"
#include "tropenum/rational.hpp"

namespace tropenum {

/// C(n, k); zero outside 0 <= k <= n. Throws NegativeN for n < 0.
BigInt binomial(long long n, long long k);

/// Rational plane curves of degree d through 3d - 1 points, from the
/// associativity recursion
///
///   N_d = sum_{a+b=d} N_a N_b (a^2 b^2 C(3d-4, 3a-2) - a^3 b C(3d-4, 3a-1))
///
/// over ordered pairs, with N_1 = 1 as the only base case. Memoized across
/// calls; safe to call concurrently.
BigInt km_N(int d);

/// 3 W >= d!, compared in integers.
bool factorial_bound_check(int d, const BigInt& w);

struct InvariantRow {
  int d = 0;
  BigInt n_paths;
  BigInt n_recursion;
  BigInt w;
  bool bound_ok = false;
  bool dominance_ok = false;
  bool parity_ok = false;

  friend bool operator==(const InvariantRow&, const InvariantRow&) = default;
};

struct InvariantTable {
  LambdaPreset preset = LambdaPreset::XMinusEpsY;
  std::vector<InvariantRow> rows;

  /// True when every row's flags match its stored values.
  bool flags_consistent() const;
  bool all_ok() const;
};

/// Rows d = 1..dmax. Throws CrossCheckMismatch as soon as the two N
/// computations disagree.
InvariantTable build_table(int dmax, LambdaPreset preset = LambdaPreset::XMinusEpsY,
                           unsigned workers = 1);

struct AsymptoticRow {
  int d = 0;
  double log_n = 0;
  double three_d_log_d = 0;
  double diff_over_d = 0;         ///< (log N_d - 3d log d) / d
  std::optional<double> log_gap;  ///< (log N_d - log W_d) / d when W_d > 0
};

/// Floating-point view of the table for display only. Throws EmptyTable.
std::vector<AsymptoticRow> asymptotic_report(const InvariantTable& table);

}  // namespace tropenum
