#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "banach2d/norm_space.hpp"
#include "banach2d/vec2.hpp"

namespace banach2d {

/// Tuning of the nested-grid search over pairs of unit vectors.
struct SearchConfig {
  int coarse_grid{1024};       // grid points per full turn of each angle
  int refine_rounds{3};
  double refine_shrink{0.1};   // spacing factor per refinement round
  int top_cells{8};            // refinement seeds taken from the coarse grid
  double tol{1e-4};            // target accuracy of reported values
  int workers{1};              // threads for the coarse pass; results do not depend on it

  void validate() const {
    if (coarse_grid < 16) throw std::invalid_argument("SearchConfig: coarse_grid must be >= 16");
    if (refine_rounds < 0) throw std::invalid_argument("SearchConfig: refine_rounds must be >= 0");
    if (!(refine_shrink > 0.0 && refine_shrink < 1.0)) {
      throw std::invalid_argument("SearchConfig: refine_shrink must lie in (0, 1)");
    }
    if (top_cells < 1) throw std::invalid_argument("SearchConfig: top_cells must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("SearchConfig: tol must be > 0");
    if (workers < 1) throw std::invalid_argument("SearchConfig: workers must be >= 1");
  }
};

enum class Method { exact, grid };

inline std::string_view to_string(Method m) { return m == Method::exact ? "exact" : "grid"; }

struct SearchResult {
  double value{0.0};
  double theta1{0.0};
  double theta2{0.0};
  Vec2 x1;  // witnesses on the unit sphere; the objective at (x1, x2) is `value`
  Vec2 x2;
  Method method{Method::grid};
  std::vector<double> round_values;  // best value after the coarse pass and each round
  std::size_t evaluations{0};
};

namespace detail {

inline double canonical_angle(double th) {
  th = std::fmod(th, kTwoPi);
  if (th < 0.0) th += kTwoPi;
  if (th >= kTwoPi) th = 0.0;
  return th;
}

/// Sphere points at angles j * 2pi / n. For even n the second half is the
/// exact negation of the first, so antipodal pairs are represented exactly.
inline std::vector<Vec2> sphere_grid(const NormSpace& space, int n) {
  std::vector<Vec2> pts(static_cast<std::size_t>(n));
  const double h = kTwoPi / n;
  const int half = n % 2 == 0 ? n / 2 : n;
  for (int j = 0; j < half; ++j) pts[static_cast<std::size_t>(j)] = sphere_point(space, j * h);
  for (int j = half; j < n; ++j) pts[static_cast<std::size_t>(j)] = -pts[static_cast<std::size_t>(j - half)];
  return pts;
}

template <class Fn>
void parallel_rows(int rows, int workers, Fn&& fn) {
  if (workers <= 1 || rows < 2) {
    fn(0, rows);
    return;
  }
  const int w = std::min(workers, rows);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  for (int k = 0; k < w; ++k) {
    const int lo = rows * k / w;
    const int hi = rows * (k + 1) / w;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

struct Candidate {
  double value;
  double theta1;
  double theta2;
  Vec2 x1;
  Vec2 x2;
};

/// Larger value wins; ties go to the lexicographically smaller angle pair.
inline bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.theta1 != b.theta1) return a.theta1 < b.theta1;
  return a.theta2 < b.theta2;
}

/**
 * Maximizes score(x1, x2) over feasible pairs of unit vectors.
 *
 * The score must be invariant under (x1, x2) -> (-x1, -x2); theta1 is then
 * restricted to [0, pi). Infeasible cells score -inf. When nothing feasible
 * is found the result value is -inf.
 */
template <class Score, class Feasible>
SearchResult grid_maximize(const NormSpace& space, Score&& score, Feasible&& feasible,
                           const SearchConfig& cfg) {
  cfg.validate();
  constexpr double kNone = -std::numeric_limits<double>::infinity();
  const int n = cfg.coarse_grid;
  const int rows = (n + 1) / 2;
  const double h = kTwoPi / n;
  const auto pts = sphere_grid(space, n);

  std::vector<double> values(static_cast<std::size_t>(rows) * static_cast<std::size_t>(n));
  parallel_rows(rows, cfg.workers, [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const Vec2& u = pts[static_cast<std::size_t>(i)];
      double* row = values.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n);
      for (int j = 0; j < n; ++j) {
        const Vec2& v = pts[static_cast<std::size_t>(j)];
        row[j] = feasible(u, v) ? score(u, v) : kNone;
      }
    }
  });

  SearchResult res;
  res.method = Method::grid;
  res.evaluations = values.size();

  auto at = [&](int i, int j) { return values[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
  // Neighbour lookup across theta1 = pi uses (x1, x2) ~ (-x1, -x2).
  auto neighbour = [&](int i, int j) {
    const int shift = n / 2;
    if (i >= rows) {
      i -= rows;
      j += shift;
    } else if (i < 0) {
      i += rows;
      j += shift;
    }
    j = ((j % n) + n) % n;
    return at(i, j);
  };

  Candidate best{kNone, 0.0, 0.0, pts[0], pts[0]};
  struct Cell {
    double value;
    int i;
    int j;
  };
  std::vector<Cell> local_max;
  std::vector<Cell> all_cells;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = at(i, j);
      if (v == kNone) continue;
      if (v > best.value) {
        best = {v, i * h, j * h, pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]};
      }
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di != 0 || dj != 0) && neighbour(i + di, j + dj) > v) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) local_max.push_back({v, i, j});
    }
  }
  res.round_values.push_back(best.value);
  if (best.value == kNone) {
    res.value = kNone;
    return res;
  }

  auto by_value = [](const Cell& a, const Cell& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::sort(local_max.begin(), local_max.end(), by_value);
  std::vector<Cell> seeds(local_max.begin(),
                          local_max.begin() + std::min<std::ptrdiff_t>(cfg.top_cells, static_cast<std::ptrdiff_t>(local_max.size())));
  if (seeds.size() < static_cast<std::size_t>(cfg.top_cells)) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != kNone) all_cells.push_back({at(i, j), i, j});
    std::sort(all_cells.begin(), all_cells.end(), by_value);
    for (const auto& c : all_cells) {
      if (seeds.size() >= static_cast<std::size_t>(cfg.top_cells)) break;
      const bool dup = std::any_of(seeds.begin(), seeds.end(),
                                   [&](const Cell& s) { return s.i == c.i && s.j == c.j; });
      if (!dup) seeds.push_back(c);
    }
  }

  std::vector<Candidate> centres;
  for (const auto& s : seeds) {
    centres.push_back({s.value, s.i * h, s.j * h, pts[static_cast<std::size_t>(s.i)],
                       pts[static_cast<std::size_t>(s.j)]});
  }
  const int half_width = static_cast<int>(std::ceil(1.0 / cfg.refine_shrink - 1e-9));
  double spacing = h;
  for (int round = 0; round < cfg.refine_rounds; ++round) {
    spacing *= cfg.refine_shrink;
    for (auto& c : centres) {
      Candidate local = c;
      for (int a = -half_width; a <= half_width; ++a) {
        const double t1 = c.theta1 + a * spacing;
        const Vec2 u = sphere_point(space, t1);
        for (int b = -half_width; b <= half_width; ++b) {
          if (a == 0 && b == 0) continue;
          const double t2 = c.theta2 + b * spacing;
          const Vec2 v = sphere_point(space, t2);
          ++res.evaluations;
          if (!feasible(u, v)) continue;
          const Candidate cand{score(u, v), t1, t2, u, v};
          if (cand.value > local.value) local = cand;
        }
      }
      c = local;
      if (better(c, best)) best = c;
    }
    res.round_values.push_back(best.value);
  }

  res.value = best.value;
  res.theta1 = canonical_angle(best.theta1);
  res.theta2 = canonical_angle(best.theta2);
  res.x1 = best.x1;
  res.x2 = best.x2;
  return res;
}

}  // namespace detail

/**
 * Supremum of a continuous even objective f(x1, x2) over pairs of unit
 * vectors, by a coarse angular grid followed by shrinking local grids around
 * the best local maxima. The returned value is attained at the witnesses and
 * is therefore a lower bound on the supremum. Deterministic for fixed input.
 */
template <class Objective>
SearchResult pair_maximize(const NormSpace& space, Objective&& objective, const SearchConfig& cfg) {
  return detail::grid_maximize(
      space, std::forward<Objective>(objective), [](const Vec2&, const Vec2&) { return true; }, cfg);
}

namespace detail {

/// Unit vector at angular offset `phi` in [0, pi] from `theta` on side `side`.
/// The far end is the exact antipode.
inline Vec2 offset_point(const NormSpace& space, const Vec2& u, double theta, int side, double phi) {
  if (phi >= std::numbers::pi) return -u;
  return sphere_point(space, theta + side * phi);
}

/// Smallest feasible x2 on either side of x1 = u on the curve ||x1 - x2|| = eps,
/// found by bisection in the angle; returns the better of the two sides.
inline Candidate boundary_pair(const NormSpace& space, double theta, double eps) {
  const Vec2 u = sphere_point(space, theta);
  Candidate best{std::numeric_limits<double>::infinity(), theta, theta, u, u};
  for (int side : {+1, -1}) {
    double lo = 0.0;
    double hi = std::numbers::pi;
    for (int it = 0; it < 54; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (space.norm(u - offset_point(space, u, theta, side, mid)) >= eps) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    const Vec2 v = offset_point(space, u, theta, side, hi);
    const double val = 1.0 - 0.5 * space.norm(u + v);
    if (val < best.value) best = {val, theta, theta + side * hi, u, v};
  }
  return best;
}

/// Boundary part of the modulus-of-convexity search: scan theta1 over
/// [0, pi), then refine around the best few with shrinking 1D grids.
inline Candidate boundary_infimum(const NormSpace& space, double eps, const SearchConfig& cfg,
                                  std::size_t& evaluations) {
  const int n = cfg.coarse_grid;
  const int rows = (n + 1) / 2;
  const double h = kTwoPi / n;
  std::vector<Candidate> scan(static_cast<std::size_t>(rows));
  parallel_rows(rows, cfg.workers, [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) scan[static_cast<std::size_t>(i)] = boundary_pair(space, i * h, eps);
  });
  evaluations += static_cast<std::size_t>(rows) * 2 * 55;

  std::vector<std::size_t> order(scan.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scan[a].value < scan[b].value; });

  Candidate best = scan[order.front()];
  const int half_width = static_cast<int>(std::ceil(1.0 / cfg.refine_shrink - 1e-9));
  const std::size_t n_seeds = std::min<std::size_t>(static_cast<std::size_t>(cfg.top_cells), order.size());
  for (std::size_t s = 0; s < n_seeds; ++s) {
    Candidate c = scan[order[s]];
    double spacing = h;
    for (int round = 0; round < cfg.refine_rounds; ++round) {
      spacing *= cfg.refine_shrink;
      Candidate local = c;
      for (int a = -half_width; a <= half_width; ++a) {
        if (a == 0) continue;
        const Candidate cand = boundary_pair(space, c.theta1 + a * spacing, eps);
        evaluations += 2 * 55;
        if (cand.value < local.value) local = cand;
      }
      c = local;
    }
    if (c.value < best.value || (c.value == best.value && c.theta1 < best.theta1)) best = c;
  }
  return best;
}

}  // namespace detail

/**
 * Modulus of convexity by search:
 *
 *   inf { 1 - ||x1 + x2|| / 2 : x1, x2 in S_X, ||x1 - x2|| >= eps }.
 *
 * Combines a feasibility-filtered pair grid with a bisection onto the
 * constraint boundary ||x1 - x2|| = eps for each grid value of x1. Every
 * candidate is feasible, so the value bounds delta(eps) from above.
 * Result clamped to [0, 1].
 */
inline SearchResult constrained_infimum(const NormSpace& space, double eps, const SearchConfig& cfg) {
  if (!(eps >= 0.0 && eps <= 2.0)) {
    throw std::invalid_argument("constrained_infimum: eps must lie in [0, 2]");
  }
  cfg.validate();
  SearchResult grid = detail::grid_maximize(
      space, [&space](const Vec2& u, const Vec2& v) { return -(1.0 - 0.5 * space.norm(u + v)); },
      [&space, eps](const Vec2& u, const Vec2& v) { return space.norm(u - v) >= eps; }, cfg);

  std::size_t evals = grid.evaluations;
  const detail::Candidate edge = detail::boundary_infimum(space, eps, cfg, evals);

  SearchResult res;
  res.method = Method::grid;
  res.evaluations = evals;
  for (double v : grid.round_values) res.round_values.push_back(std::clamp(std::min(-v, edge.value), 0.0, 1.0));
  if (-grid.value <= edge.value) {
    res.value = -grid.value;
    res.theta1 = grid.theta1;
    res.theta2 = grid.theta2;
    res.x1 = grid.x1;
    res.x2 = grid.x2;
  } else {
    res.value = edge.value;
    res.theta1 = detail::canonical_angle(edge.theta1);
    res.theta2 = detail::canonical_angle(edge.theta2);
    res.x1 = edge.x1;
    res.x2 = edge.x2;
  }
  res.value = std::clamp(res.value, 0.0, 1.0);
  return res;
}

/// Boundary-only variant of constrained_infimum (no pair grid); an upper
/// bound on delta(eps) at a fraction of the cost.
inline SearchResult boundary_modulus(const NormSpace& space, double eps, const SearchConfig& cfg) {
  if (!(eps >= 0.0 && eps <= 2.0)) throw std::invalid_argument("boundary_modulus: eps must lie in [0, 2]");
  cfg.validate();
  SearchResult r;
  r.method = Method::grid;
  const detail::Candidate edge = detail::boundary_infimum(space, eps, cfg, r.evaluations);
  r.value = std::clamp(edge.value, 0.0, 1.0);
  r.theta1 = detail::canonical_angle(edge.theta1);
  r.theta2 = detail::canonical_angle(edge.theta2);
  r.x1 = edge.x1;
  r.x2 = edge.x2;
  r.round_values.push_back(r.value);
  return r;
}

/**
 * delta(eps) for many eps at once. One coarse pass tabulates
 * (||x1 - x2||, 1 - ||x1 + x2|| / 2) over the pair grid; each eps then takes
 * the suffix minimum over cells with distance >= eps and is polished by the
 * boundary bisection. Cheaper than repeated constrained_infimum calls.
 */
inline std::vector<SearchResult> modulus_profile(const NormSpace& space, const std::vector<double>& eps_values,
                                                 const SearchConfig& cfg) {
  cfg.validate();
  for (double e : eps_values) {
    if (!(e >= 0.0 && e <= 2.0)) throw std::invalid_argument("modulus_profile: eps must lie in [0, 2]");
  }
  const int n = cfg.coarse_grid;
  const int rows = (n + 1) / 2;
  const double h = detail::kTwoPi / n;
  const auto pts = detail::sphere_grid(space, n);

  struct Cell {
    double dist;
    double gap;
    int i;
    int j;
  };
  std::vector<Cell> cells(static_cast<std::size_t>(rows) * static_cast<std::size_t>(n));
  detail::parallel_rows(rows, cfg.workers, [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const Vec2& u = pts[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) {
        const Vec2& v = pts[static_cast<std::size_t>(j)];
        cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
            {space.norm(u - v), 1.0 - 0.5 * space.norm(u + v), i, j};
      }
    }
  });
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.dist != b.dist) return a.dist > b.dist;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  // prefix_best[k]: index of the smallest gap among cells[0..k], i.e. among dist >= cells[k].dist
  std::vector<std::size_t> prefix_best(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    prefix_best[k] = (k == 0 || cells[k].gap < cells[prefix_best[k - 1]].gap) ? k : prefix_best[k - 1];
  }

  std::vector<SearchResult> out;
  out.reserve(eps_values.size());
  for (double eps : eps_values) {
    SearchResult r;
    r.method = Method::grid;
    r.evaluations = cells.size();
    // cells with dist >= eps form a prefix
    const auto end = std::partition_point(cells.begin(), cells.end(),
                                          [eps](const Cell& c) { return c.dist >= eps; });
    double grid_value = std::numeric_limits<double>::infinity();
    const Cell* grid_cell = nullptr;
    if (end != cells.begin()) {
      grid_cell = &cells[prefix_best[static_cast<std::size_t>(end - cells.begin()) - 1]];
      grid_value = grid_cell->gap;
    }
    const detail::Candidate edge = detail::boundary_infimum(space, eps, cfg, r.evaluations);
    if (grid_cell != nullptr && grid_value <= edge.value) {
      r.value = grid_value;
      r.theta1 = grid_cell->i * h;
      r.theta2 = grid_cell->j * h;
      r.x1 = pts[static_cast<std::size_t>(grid_cell->i)];
      r.x2 = pts[static_cast<std::size_t>(grid_cell->j)];
    } else {
      r.value = edge.value;
      r.theta1 = detail::canonical_angle(edge.theta1);
      r.theta2 = detail::canonical_angle(edge.theta2);
      r.x1 = edge.x1;
      r.x2 = edge.x2;
    }
    r.value = std::clamp(r.value, 0.0, 1.0);
    r.round_values.push_back(r.value);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace banach2d
