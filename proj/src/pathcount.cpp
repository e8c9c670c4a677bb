#include "tropenum/pathcount.hpp"

#include <algorithm>
#include <thread>

#include "tropenum/errors.hpp"

namespace tropenum {

PathDomain::PathDomain(int d, LambdaPreset preset) : d_(d), preset_(preset) {
  if (d < 1) throw BadDegree(d);
  if ((d + 1) * (d + 2) / 2 > 0xFFFF) throw BadDegree(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) points_.push_back({i, j});
  if (preset == LambdaPreset::XMinusEpsY) {
    std::sort(points_.begin(), points_.end(), [](LatticePoint a, LatticePoint b) {
      return a.i != b.i ? a.i < b.i : a.j > b.j;
    });
  } else {
    std::sort(points_.begin(), points_.end(), [d](LatticePoint a, LatticePoint b) {
      return (d + 1) * a.i + a.j < (d + 1) * b.i + b.j;
    });
  }
  rank_.assign((d + 1) * (d + 1), -1);
  for (std::size_t k = 0; k < points_.size(); ++k)
    rank_[points_[k].i * (d + 1) + points_[k].j] = static_cast<int>(k);
}

int PathDomain::rank(LatticePoint v) const {
  return contains(v) ? rank_[v.i * (d_ + 1) + v.j] : -1;
}

std::vector<LatticePoint> PathDomain::boundary_arc(bool left) const {
  // The triangle vertex that is neither p nor q decides the arc through it.
  const LatticePoint corners[] = {{0, 0}, {d_, 0}, {0, d_}};
  LatticePoint third{};
  for (const auto& c : corners)
    if (c != p() && c != q()) third = c;
  const bool third_is_left = orient(p(), q(), third) > 0;

  std::vector<LatticePoint> arc;
  const auto walk = [&](LatticePoint from, LatticePoint to) {
    const LatticePoint step{(to.i - from.i) / d_, (to.j - from.j) / d_};
    for (int k = 0; k < d_; ++k) arc.push_back({from.i + k * step.i, from.j + k * step.j});
  };
  if (left == third_is_left) {
    walk(p(), third);
    walk(third, q());
  } else {
    walk(p(), q());
  }
  arc.push_back(q());
  return arc;
}

PathDomain lambda_order(int d, LambdaPreset preset) { return PathDomain(d, preset); }

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Visits every increasing choice of `inner` ranks strictly between 0 and
// last, in lexicographic order.
template <typename Visit>
void for_each_chain(int last, int inner, Visit&& visit) {
  std::vector<int> chain(inner + 2);
  chain.front() = 0;
  chain.back() = last;
  const int pool = last - 1;  // candidates 1 .. last-1
  if (inner > pool) return;
  for (int k = 0; k < inner; ++k) chain[k + 1] = k + 1;
  for (;;) {
    visit(chain);
    // Advance to the next combination; slot k may not exceed pool - inner + k + 1.
    int k = inner - 1;
    while (k >= 0 && chain[k + 1] == pool - inner + k + 1) --k;
    if (k < 0) return;
    ++chain[k + 1];
    for (int m = k + 1; m < inner; ++m) chain[m + 1] = chain[m] + 1;
  }
}

}  // namespace

void enumerate_paths(const PathDomain& domain, int steps,
                     const std::function<void(const LatticePath&)>& visit) {
  if (steps < 1) return;
  const auto& pts = domain.points();
  LatticePath path(steps + 1);
  for_each_chain(static_cast<int>(pts.size()) - 1, steps - 1,
                 [&](const std::vector<int>& chain) {
                   for (std::size_t k = 0; k < chain.size(); ++k) path[k] = pts[chain[k]];
                   visit(path);
                 });
}

void enumerate_paths(const PathDomain& domain,
                     const std::function<void(const LatticePath&)>& visit) {
  enumerate_paths(domain, domain.path_steps(), visit);
}

std::uint64_t count_paths(const PathDomain& domain, int steps) {
  if (steps < 1) return 0;
  std::uint64_t n = 0;
  for_each_chain(static_cast<int>(domain.points().size()) - 1, steps - 1,
                 [&](const std::vector<int>&) { ++n; });
  return n;
}

std::uint64_t count_paths(const PathDomain& domain) {
  return count_paths(domain, domain.path_steps());
}

// ---------------------------------------------------------------------------
// Corner-cutting recursion

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("path multiplicity overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("path multiplicity overflow");
  return r;
}

std::vector<std::uint16_t> to_ranks(const PathDomain& domain, const LatticePath& path) {
  std::vector<std::uint16_t> out;
  out.reserve(path.size());
  for (const auto& v : path) out.push_back(static_cast<std::uint16_t>(domain.rank(v)));
  return out;
}

}  // namespace

MultiplicityEngine::MultiplicityEngine(PathDomain domain)
    : domain_(std::move(domain)),
      left_arc_(to_ranks(domain_, domain_.boundary_arc(true))),
      right_arc_(to_ranks(domain_, domain_.boundary_arc(false))) {}

void MultiplicityEngine::validate(const LatticePath& path) const {
  if (path.size() < 2) throw InvalidPath("a path needs at least two points");
  if (path.front() != domain_.p() || path.back() != domain_.q())
    throw InvalidPath("path must run from " + to_string(domain_.p()) + " to " +
                      to_string(domain_.q()));
  int prev = -1;
  for (const auto& v : path) {
    const int r = domain_.rank(v);
    if (r < 0) throw InvalidPath(to_string(v) + " lies outside the triangle");
    if (r <= prev) throw InvalidPath("path is not strictly lambda-increasing at " + to_string(v));
    prev = r;
  }
}

std::int64_t MultiplicityEngine::oriented(const LatticePath& path, bool toward_left,
                                          MultiplicityKind kind) {
  validate(path);
  auto ranks = to_ranks(domain_, path);
  return divide(ranks, toward_left, kind);
}

std::int64_t MultiplicityEngine::side(const LatticePath& path, Side s, MultiplicityKind kind) {
  return oriented(path, s == Side::Plus, kind);
}

MultiplicityResult MultiplicityEngine::multiplicity(const LatticePath& path) {
  validate(path);
  auto ranks = to_ranks(domain_, path);
  MultiplicityResult r;
  r.mu_plus = divide(ranks, true, MultiplicityKind::Complex);
  r.mu_minus = divide(ranks, false, MultiplicityKind::Complex);
  r.mu = checked_mul(r.mu_plus, r.mu_minus);
  r.nu_plus = divide(ranks, true, MultiplicityKind::Welschinger);
  r.nu_minus = divide(ranks, false, MultiplicityKind::Welschinger);
  r.nu = checked_mul(r.nu_plus, r.nu_minus);
  return r;
}

std::int64_t MultiplicityEngine::divide(std::vector<std::uint16_t>& ranks, bool left,
                                        MultiplicityKind kind) {
  if (ranks == (left ? left_arc_ : right_arc_)) return 1;

  std::string key;
  key.reserve(2 * ranks.size() + 1);
  key.push_back(static_cast<char>((left ? 1 : 0) | (kind == MultiplicityKind::Welschinger ? 2 : 0)));
  for (auto r : ranks) {
    key.push_back(static_cast<char>(r & 0xFF));
    key.push_back(static_cast<char>(r >> 8));
  }
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

  const auto& pts = domain_.points();
  std::int64_t value = 0;
  for (std::size_t j = 1; j + 1 < ranks.size(); ++j) {
    const LatticePoint a = pts[ranks[j - 1]], v = pts[ranks[j]], b = pts[ranks[j + 1]];
    const std::int64_t turn = orient(a, v, b);
    if (left ? turn <= 0 : turn >= 0) continue;

    // First corner turning toward the side: cut it off, or flip it across
    // the diagonal a-b.
    const std::int64_t area = std::abs(turn);
    std::int64_t factor = area;
    if (kind == MultiplicityKind::Welschinger)
      factor = area % 2 == 0 ? 0 : (interior_points(a, v, b) % 2 == 0 ? 1 : -1);

    const std::uint16_t saved = ranks[j];
    std::int64_t total = 0;
    if (factor != 0) {
      ranks.erase(ranks.begin() + j);
      total = checked_mul(factor, divide(ranks, left, kind));
      ranks.insert(ranks.begin() + j, saved);
    }
    const LatticePoint flipped = a + b - v;
    if (domain_.contains(flipped)) {
      ranks[j] = static_cast<std::uint16_t>(domain_.rank(flipped));
      total = checked_add(total, divide(ranks, left, kind));
      ranks[j] = saved;
    }
    value = total;
    break;
  }
  memo_.emplace(std::move(key), value);
  return value;
}

std::int64_t side_multiplicity(const LatticePath& path, const PathDomain& domain, Side side,
                               MultiplicityKind kind) {
  MultiplicityEngine engine(domain);
  return engine.side(path, side, kind);
}

MultiplicityResult path_multiplicity(const LatticePath& path, const PathDomain& domain) {
  MultiplicityEngine engine(domain);
  return engine.multiplicity(path);
}

PathTotals path_totals_with_steps(int d, LambdaPreset preset, int steps, unsigned workers) {
  const PathDomain domain(d, preset);
  workers = std::max(1u, workers);
  std::vector<PathTotals> partial(workers);

  const auto run = [&](unsigned worker) {
    MultiplicityEngine engine(domain);
    PathTotals& acc = partial[worker];
    std::uint64_t index = 0;
    enumerate_paths(domain, steps, [&](const LatticePath& path) {
      if (index++ % workers != worker) return;
      const auto m = engine.multiplicity(path);
      ++acc.paths;
      acc.mu += m.mu;
      acc.nu += m.nu;
    });
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  PathTotals total;
  for (const auto& p : partial) {
    total.paths += p.paths;
    total.mu += p.mu;
    total.nu += p.nu;
  }
  return total;
}

PathTotals path_totals(int d, LambdaPreset preset, unsigned workers) {
  return path_totals_with_steps(d, preset, 3 * d - 1, workers);
}

// ---------------------------------------------------------------------------
// Irreducible counts

namespace {

BigInt choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

CurveCounter::CurveCounter(LambdaPreset preset, unsigned workers)
    : preset_(preset), workers_(workers) {}

const PathTotals& CurveCounter::totals(int d, int points) {
  const auto key = std::make_pair(d, points);
  if (auto it = totals_.find(key); it != totals_.end()) return it->second;
  PathTotals t;
  const int max_steps = (d + 1) * (d + 2) / 2 - 1;
  if (points >= 1 && points <= max_steps) t = path_totals_with_steps(d, preset_, points, workers_);
  return totals_.emplace(key, std::move(t)).first->second;
}

BigInt CurveCounter::all_curves(int d, int points, MultiplicityKind kind) {
  if (d < 0 || points < 0) return 0;
  if (d == 0) return points == 0 ? 1 : 0;
  const auto& t = totals(d, points);
  return kind == MultiplicityKind::Complex ? t.mu : t.nu;
}

BigInt CurveCounter::irreducible(int d, int points, MultiplicityKind kind) {
  if (d < 1) throw BadDegree(d);
  if (points < 1) return 0;
  const auto key = std::make_tuple(d, points, kind == MultiplicityKind::Welschinger);
  if (auto it = irreducible_.find(key); it != irreducible_.end()) return it->second;

  // Subtract configurations where the component through the first point has
  // lower degree.
  BigInt value = all_curves(d, points, kind);
  for (int d1 = 1; d1 < d; ++d1) {
    const int max_n1 = std::min(points - 1, (d1 + 1) * (d1 + 2) / 2 - 1);
    for (int n1 = 3 * d1 - 1; n1 <= max_n1; ++n1) {
      const BigInt rest = all_curves(d - d1, points - n1, kind);
      if (rest == 0) continue;
      const BigInt head = irreducible(d1, n1, kind);
      if (head == 0) continue;
      value -= choose(points - 1, n1 - 1) * head * rest;
    }
  }
  return irreducible_.emplace(key, std::move(value)).first->second;
}

BigInt count_gw(int d, LambdaPreset preset, unsigned workers) {
  if (d < 1) throw BadDegree(d);
  return CurveCounter(preset, workers).irreducible(d, 3 * d - 1, MultiplicityKind::Complex);
}

BigInt count_welschinger(int d, LambdaPreset preset, unsigned workers) {
  if (d < 1) throw BadDegree(d);
  return CurveCounter(preset, workers).irreducible(d, 3 * d - 1, MultiplicityKind::Welschinger);
}

}  // namespace tropenum
