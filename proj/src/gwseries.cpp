#include "tropenum/gwseries.hpp"

#include <cmath>
#include <mutex>

#include "tropenum/errors.hpp"

namespace tropenum {

BigInt binomial(long long n, long long k) {
  if (n < 0) throw NegativeN("binomial needs n >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

std::mutex km_mutex;
std::vector<BigInt> km_memo{0, 1};  // index d; entry 0 unused

}  // namespace

BigInt km_N(int d) {
  if (d < 1) throw BadDegree(d);
  std::lock_guard lock(km_mutex);
  for (int e = static_cast<int>(km_memo.size()); e <= d; ++e) {
    BigInt sum = 0;
    for (int a = 1; a < e; ++a) {
      const int b = e - a;
      const BigInt a2b2 = BigInt(a) * a * b * b;
      const BigInt a3b = BigInt(a) * a * a * b;
      sum += km_memo[a] * km_memo[b] *
             (a2b2 * binomial(3 * e - 4, 3 * a - 2) - a3b * binomial(3 * e - 4, 3 * a - 1));
    }
    km_memo.push_back(std::move(sum));
  }
  return km_memo[d];
}

bool factorial_bound_check(int d, const BigInt& w) {
  if (d < 1) throw BadDegree(d);
  BigInt factorial = 1;
  for (int k = 2; k <= d; ++k) factorial *= k;
  return 3 * w >= factorial;
}

namespace {

InvariantRow make_row(int d, BigInt n_paths, BigInt n_recursion, BigInt w) {
  InvariantRow row{d, std::move(n_paths), std::move(n_recursion), std::move(w)};
  row.bound_ok = factorial_bound_check(d, row.w);
  row.dominance_ok = row.w <= row.n_paths;
  row.parity_ok = (row.n_paths - row.w) % 2 == 0;
  return row;
}

}  // namespace

bool InvariantTable::flags_consistent() const {
  for (const auto& row : rows)
    if (row != make_row(row.d, row.n_paths, row.n_recursion, row.w)) return false;
  return true;
}

bool InvariantTable::all_ok() const {
  for (const auto& row : rows)
    if (row.n_paths != row.n_recursion || !row.bound_ok || !row.dominance_ok || !row.parity_ok)
      return false;
  return true;
}

InvariantTable build_table(int dmax, LambdaPreset preset, unsigned workers) {
  if (dmax < 1) throw BadDegree(dmax);
  InvariantTable table;
  table.preset = preset;
  CurveCounter counter(preset, workers);
  for (int d = 1; d <= dmax; ++d) {
    BigInt n_paths = counter.irreducible(d, 3 * d - 1, MultiplicityKind::Complex);
    BigInt n_recursion = km_N(d);
    if (n_paths != n_recursion)
      throw CrossCheckMismatch("degree " + std::to_string(d) + ": lattice paths give " +
                               n_paths.str() + ", recursion gives " + n_recursion.str());
    BigInt w = counter.irreducible(d, 3 * d - 1, MultiplicityKind::Welschinger);
    table.rows.push_back(make_row(d, std::move(n_paths), std::move(n_recursion), std::move(w)));
  }
  return table;
}

std::vector<AsymptoticRow> asymptotic_report(const InvariantTable& table) {
  if (table.rows.empty()) throw EmptyTable();
  std::vector<AsymptoticRow> out;
  for (const auto& row : table.rows) {
    AsymptoticRow a;
    a.d = row.d;
    a.log_n = log_big(row.n_recursion);
    a.three_d_log_d = 3.0 * row.d * std::log(static_cast<double>(row.d));
    a.diff_over_d = (a.log_n - a.three_d_log_d) / row.d;
    if (row.w > 0) a.log_gap = (a.log_n - log_big(row.w)) / row.d;
    out.push_back(a);
  }
  return out;
}

}  // namespace tropenum
