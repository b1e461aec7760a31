#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "banach2d/constants.hpp"
#include "banach2d/ext_real.hpp"
#include "banach2d/means.hpp"
#include "banach2d/norm_space.hpp"
#include "banach2d/search.hpp"

namespace banach2d {

// Numerical certificates for the inequalities satisfied by J_t[tau, X]:
//
//   thm31  (J_{t1})^{t2} <= (J_{t2})^{t2}
//                        <= ((1+tau)^{t2} + [2 (J_{t1})^{t1} - (1+tau)^{t1}]^{t2/t1}) / 2
//   cor31  the same with t1 = 1
//   rmk32  J_1^t <= J_t^t <= 2^{t-1} J_1^t for t >= 1, reversed for 0 < t <= 1
//   prop34 J_t <= sup_eps M_t(3 - 2 delta(eps) - tau, tau eps + 1 - tau)
//   thm32  J_t^t <= max_{J(X) <= eps <= 2} ([1-tau+tau eps]^t + [1+tau-2 tau delta(eps)]^t) / 2
//   thm33  G_{-inf}(X) <= thm33_bound(J(X))
//   prop31 tau -> (J_t[tau])^t is convex (checked on consecutive grid triples)
//
// Every certificate stores lhs, rhs, the tolerance and the noise floor, so
// the verdict can be recomputed from the serialized record alone.

enum class ClaimId { thm31, cor31, rmk32, prop34, thm32, thm33, prop31_convexity };

inline constexpr ClaimId kAllClaims[] = {ClaimId::thm31, ClaimId::cor31, ClaimId::rmk32, ClaimId::prop34,
                                         ClaimId::thm32, ClaimId::thm33, ClaimId::prop31_convexity};

inline std::string_view to_string(ClaimId c) {
  switch (c) {
    case ClaimId::thm31: return "thm31";
    case ClaimId::cor31: return "cor31";
    case ClaimId::rmk32: return "rmk32";
    case ClaimId::prop34: return "prop34";
    case ClaimId::thm32: return "thm32";
    case ClaimId::thm33: return "thm33";
    case ClaimId::prop31_convexity: return "prop31_convexity";
  }
  return "?";
}

inline std::optional<ClaimId> parse_claim_id(std::string_view s) {
  for (ClaimId c : kAllClaims)
    if (to_string(c) == s) return c;
  if (s == "prop31") return ClaimId::prop31_convexity;
  return std::nullopt;
}

enum class Verdict { pass, inconclusive, fail, skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

/// Margins >= -noise_floor pass outright, margins in [-tol, -noise_floor)
/// are inconclusive (still `pass == true`), below -tol fail.
inline Verdict classify_margin(double margin, double tol, double noise_floor) {
  if (margin >= -noise_floor) return Verdict::pass;
  if (margin >= -tol) return Verdict::inconclusive;
  return Verdict::fail;
}

struct CertificateParams {
  std::optional<ExtReal> t;
  std::optional<double> t1;
  std::optional<double> t2;
  std::optional<double> tau;
  std::optional<double> tau_left;   // convexity triple end points
  std::optional<double> tau_right;
};

struct Certificate {
  ClaimId claim{ClaimId::thm31};
  std::string part;  // "lower" / "upper" for two-sided claims, empty otherwise
  std::string space;
  CertificateParams params;
  double lhs{0.0};
  double rhs{0.0};
  double margin{0.0};
  double tol{0.0};
  double noise_floor{0.0};
  bool pass{true};
  Verdict verdict{Verdict::pass};
  int grid{0};        // coarse pair-grid size, or eps-grid size where an eps supremum is involved
  std::string note;
};

struct VerifyOptions {
  double tol{5e-3};
  double noise_floor{1e-4};
  int eps_grid{401};
  int eps_polish{24};              // golden-section steps around the best eps grid point
  double non_square_margin{1e-3};  // J(X) < 2 - margin to apply thm32
};

inline Certificate make_certificate(ClaimId claim, std::string part, std::string space, CertificateParams params,
                                    double lhs, double rhs, const VerifyOptions& opts, int grid,
                                    std::string note = {}) {
  Certificate c;
  c.claim = claim;
  c.part = std::move(part);
  c.space = std::move(space);
  c.params = params;
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = rhs - lhs;
  c.tol = opts.tol;
  c.noise_floor = opts.noise_floor;
  c.verdict = classify_margin(c.margin, c.tol, c.noise_floor);
  c.pass = c.margin >= -c.tol;
  c.grid = grid;
  c.note = std::move(note);
  return c;
}

/**
 * Evaluates the claims on one space. J_t[tau], J(X), G_{-inf} and the
 * delta tables are memoized, so a full suite costs far fewer searches than
 * its certificate count suggests. Not thread-safe; use one per worker.
 */
class Verifier {
 public:
  Verifier(NormSpace space, SearchConfig cfg = {}, VerifyOptions opts = {}, std::string label = {})
      : space_(std::move(space)), cfg_(cfg), opts_(opts), label_(label.empty() ? space_.label() : std::move(label)) {
    cfg_.validate();
    if (opts_.eps_grid < 2) throw std::invalid_argument("VerifyOptions: eps_grid must be >= 2");
  }

  const NormSpace& space() const { return space_; }
  const std::string& label() const { return label_; }
  const VerifyOptions& options() const { return opts_; }
  const SearchConfig& config() const { return cfg_; }

  /// J_t[tau, X] (automatic method), memoized.
  double skew(const ExtReal& t, double tau) {
    const auto key = std::make_pair(t.as_double(), tau);
    if (auto it = skew_cache_.find(key); it != skew_cache_.end()) return it->second;
    const double v = skew_james(space_, t, tau, MethodChoice::automatic, cfg_).value;
    skew_cache_.emplace(key, v);
    return v;
  }

  double james() {
    if (!james_) james_ = james_constant(space_, cfg_).value;
    return *james_;
  }

  double g_neg_inf() {
    if (!g_neg_inf_) g_neg_inf_ = g_constant(space_, ExtReal::neg_inf(), cfg_).value;
    return *g_neg_inf_;
  }

  std::vector<Certificate> theorem31(double t1, double t2, double tau) {
    if (!(t1 >= 1.0) || !(t2 >= t1) || !std::isfinite(t2)) {
      throw std::invalid_argument("check_theorem31: requires 1 <= t1 <= t2 < inf");
    }
    require_unit_tau(tau, "check_theorem31");
    return sandwich(ClaimId::thm31, t1, t2, tau);
  }

  std::vector<Certificate> corollary31(double t, double tau) {
    if (!(t >= 1.0) || !std::isfinite(t)) throw std::invalid_argument("check_corollary31: requires 1 <= t < inf");
    require_unit_tau(tau, "check_corollary31");
    return sandwich(ClaimId::cor31, 1.0, t, tau);
  }

  std::vector<Certificate> remark32(double t, double tau) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("check_remark32: requires 0 < t < inf");
    require_unit_tau(tau, "check_remark32");
    const double j1 = skew(1.0, tau);
    const double jt = skew(t, tau);
    const double j1t = std::pow(j1, t);
    const double jtt = std::pow(jt, t);
    const double scale = std::pow(2.0, t - 1.0);
    CertificateParams p;
    p.t = t;
    p.tau = tau;
    std::vector<Certificate> out;
    if (t >= 1.0) {
      out.push_back(cert(ClaimId::rmk32, "lower", p, j1t, jtt, cfg_.coarse_grid));
      out.push_back(cert(ClaimId::rmk32, "upper", p, jtt, scale * j1t, cfg_.coarse_grid));
    } else {
      out.push_back(cert(ClaimId::rmk32, "lower", p, scale * j1t, jtt, cfg_.coarse_grid));
      out.push_back(cert(ClaimId::rmk32, "upper", p, jtt, j1t, cfg_.coarse_grid));
    }
    return out;
  }

  Certificate prop34(const ExtReal& t, double tau) {
    require_unit_tau(tau, "check_prop34");
    const double lhs = skew(t, tau);
    auto integrand = [&](double eps, double delta) {
      return generalized_mean(t, std::max(0.0, 3.0 - 2.0 * delta - tau), tau * eps + 1.0 - tau);
    };
    const double rhs = eps_supremum(0.0, 2.0, full_profile(), integrand);
    CertificateParams p;
    p.t = t;
    p.tau = tau;
    return cert(ClaimId::prop34, "", p, lhs, rhs, opts_.eps_grid, "certified for tau in [0, 1] only");
  }

  Certificate thm32(double t, double tau) {
    if (!(t >= 1.0) || !std::isfinite(t)) throw std::invalid_argument("check_thm32: requires 1 <= t < inf");
    require_unit_tau(tau, "check_thm32");
    CertificateParams p;
    p.t = t;
    p.tau = tau;
    const double j = james();
    if (!(j < 2.0 - opts_.non_square_margin)) {
      Certificate c = cert(ClaimId::thm32, "", p, 0.0, 0.0, cfg_.coarse_grid,
                           "skipped: J(X) = " + format_short(j) + " >= 2 - " + format_short(opts_.non_square_margin) + ", not uniformly non-square");
      c.verdict = Verdict::skipped;
      return c;
    }
    const double lhs = std::pow(skew(t, tau), t);
    auto integrand = [&](double eps, double delta) {
      const double a = 1.0 - tau + tau * eps;
      const double b = std::max(0.0, 1.0 + tau - 2.0 * tau * delta);
      return 0.5 * (std::pow(a, t) + std::pow(b, t));
    };
    const double rhs = eps_supremum(j, 2.0, thm32_profile(j), integrand);
    return cert(ClaimId::thm32, "", p, lhs, rhs, opts_.eps_grid);
  }

  Certificate thm33() {
    return cert(ClaimId::thm33, "", {}, g_neg_inf(), thm33_bound(std::clamp(james(), 1.0, 2.0)),
                cfg_.coarse_grid);
  }

  std::vector<Certificate> prop31_convexity(double t, std::vector<double> taus) {
    if (!(t >= 1.0) || !std::isfinite(t)) {
      throw std::invalid_argument("check_prop31_convexity: requires a finite t >= 1");
    }
    for (double tau : taus) detail::require_tau(tau, "check_prop31_convexity");
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
    std::vector<Certificate> out;
    for (std::size_t k = 1; k + 1 < taus.size(); ++k) {
      const double l = taus[k - 1];
      const double m = taus[k];
      const double r = taus[k + 1];
      const double w = (r - m) / (r - l);
      const double fl = std::pow(skew(t, l), t);
      const double fm = std::pow(skew(t, m), t);
      const double fr = std::pow(skew(t, r), t);
      CertificateParams p;
      p.t = t;
      p.tau = m;
      p.tau_left = l;
      p.tau_right = r;
      out.push_back(cert(ClaimId::prop31_convexity, "", p, fm, w * fl + (1.0 - w) * fr, cfg_.coarse_grid));
    }
    return out;
  }

 private:
  static void require_unit_tau(double tau, const char* who) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument(std::string(who) + ": tau must lie in [0, 1]");
  }

  static std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }

  Certificate cert(ClaimId claim, std::string part, const CertificateParams& p, double lhs, double rhs, int grid,
                   std::string note = {}) const {
    return make_certificate(claim, std::move(part), label_, p, lhs, rhs, opts_, grid, std::move(note));
  }

  std::vector<Certificate> sandwich(ClaimId claim, double t1, double t2, double tau) {
    const double j1 = skew(t1, tau);
    const double j2 = skew(t2, tau);
    const double top = std::pow(1.0 + tau, t1);
    // x = y on the sphere gives 2 J_{t1}^{t1} >= (1+tau)^{t1} + (1-tau)^{t1}; the
    // clamp only absorbs search error.
    const double base = std::max(0.0, 2.0 * std::pow(j1, t1) - top);
    const double upper = 0.5 * (std::pow(1.0 + tau, t2) + std::pow(base, t2 / t1));
    CertificateParams p;
    if (claim == ClaimId::cor31) {
      p.t = t2;
    } else {
      p.t1 = t1;
      p.t2 = t2;
    }
    p.tau = tau;
    const double j2t2 = std::pow(j2, t2);
    return {cert(claim, "lower", p, std::pow(j1, t2), j2t2, cfg_.coarse_grid),
            cert(claim, "upper", p, j2t2, upper, cfg_.coarse_grid)};
  }

  std::vector<double> eps_grid(double lo, double hi) const {
    std::vector<double> g(static_cast<std::size_t>(opts_.eps_grid));
    for (int k = 0; k < opts_.eps_grid; ++k) {
      g[static_cast<std::size_t>(k)] = k + 1 == opts_.eps_grid ? hi : lo + (hi - lo) * k / (opts_.eps_grid - 1);
    }
    return g;
  }

  struct Profile {
    std::vector<double> eps;
    std::vector<double> delta;
  };

  const Profile& full_profile() {
    if (!full_profile_) full_profile_ = make_profile(0.0, 2.0);
    return *full_profile_;
  }

  const Profile& thm32_profile(double j) {
    if (!thm32_profile_) thm32_profile_ = make_profile(j, 2.0);
    return *thm32_profile_;
  }

  Profile make_profile(double lo, double hi) const {
    Profile p;
    p.eps = eps_grid(lo, hi);
    for (const auto& r : modulus_profile(space_, p.eps, cfg_)) p.delta.push_back(r.value);
    return p;
  }

  /// sup over eps in [lo, hi] of f(eps, delta(eps)): tabulated grid, then a
  /// golden-section polish with boundary-bisection delta values.
  template <class F>
  double eps_supremum(double lo, double hi, const Profile& prof, F&& f) const {
    std::size_t best_k = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < prof.eps.size(); ++k) {
      const double v = f(prof.eps[k], prof.delta[k]);
      if (v > best) {
        best = v;
        best_k = k;
      }
    }
    auto g = [&](double eps) { return f(eps, boundary_modulus(space_, eps, cfg_).value); };
    double a = prof.eps[best_k == 0 ? 0 : best_k - 1];
    double b = prof.eps[std::min(best_k + 1, prof.eps.size() - 1)];
    a = std::max(a, lo);
    b = std::min(b, hi);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = g(c);
    double fd = g(d);
    best = std::max({best, fc, fd});
    for (int it = 2; it < opts_.eps_polish; ++it) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = g(c);
        best = std::max(best, fc);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = g(d);
        best = std::max(best, fd);
      }
    }
    return best;
  }

  NormSpace space_;
  SearchConfig cfg_;
  VerifyOptions opts_;
  std::string label_;
  std::map<std::pair<double, double>, double> skew_cache_;
  std::optional<double> james_;
  std::optional<double> g_neg_inf_;
  std::optional<Profile> full_profile_;
  std::optional<Profile> thm32_profile_;
};

inline std::vector<Certificate> check_theorem31(const NormSpace& space, double t1, double t2, double tau,
                                                const SearchConfig& cfg = {}, const VerifyOptions& opts = {}) {
  return Verifier(space, cfg, opts).theorem31(t1, t2, tau);
}

inline std::vector<Certificate> check_corollary31(const NormSpace& space, double t, double tau,
                                                  const SearchConfig& cfg = {}, const VerifyOptions& opts = {}) {
  return Verifier(space, cfg, opts).corollary31(t, tau);
}

inline std::vector<Certificate> check_remark32(const NormSpace& space, double t, double tau,
                                               const SearchConfig& cfg = {}, const VerifyOptions& opts = {}) {
  return Verifier(space, cfg, opts).remark32(t, tau);
}

inline Certificate check_prop34(const NormSpace& space, const ExtReal& t, double tau, const SearchConfig& cfg = {},
                                const VerifyOptions& opts = {}) {
  return Verifier(space, cfg, opts).prop34(t, tau);
}

inline Certificate check_thm32(const NormSpace& space, double t, double tau, const SearchConfig& cfg = {},
                               const VerifyOptions& opts = {}) {
  return Verifier(space, cfg, opts).thm32(t, tau);
}

inline Certificate check_thm33(const NormSpace& space, const SearchConfig& cfg = {}, const VerifyOptions& opts = {}) {
  return Verifier(space, cfg, opts).thm33();
}

inline std::vector<Certificate> check_prop31_convexity(const NormSpace& space, double t, std::vector<double> taus,
                                                       const SearchConfig& cfg = {},
                                                       const VerifyOptions& opts = {}) {
  return Verifier(space, cfg, opts).prop31_convexity(t, std::move(taus));
}

/// Parameter grids for a full run.
struct SuiteGrid {
  std::vector<double> t_pairs{1.0, 2.0, 4.0};        // t1 <= t2 for thm31
  std::vector<double> t_values{0.5, 1.0, 2.0, 4.0};  // t for cor31 (t >= 1), rmk32, prop34, thm32 (t >= 1)
  std::vector<double> taus{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> convexity_taus{0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
};

/// Runs the selected claims over the grid; output ordered by claim, then parameters.
inline std::vector<Certificate> run_suite(Verifier& v, const std::vector<ClaimId>& claims, const SuiteGrid& grid = {}) {
  std::vector<ClaimId> sorted = claims;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Certificate> out;
  auto append = [&out](std::vector<Certificate> cs) {
    for (auto& c : cs) out.push_back(std::move(c));
  };
  for (ClaimId claim : sorted) {
    switch (claim) {
      case ClaimId::thm31:
        for (double t1 : grid.t_pairs)
          for (double t2 : grid.t_pairs)
            if (t2 >= t1)
              for (double tau : grid.taus) append(v.theorem31(t1, t2, tau));
        break;
      case ClaimId::cor31:
        for (double t : grid.t_values)
          if (t >= 1.0)
            for (double tau : grid.taus) append(v.corollary31(t, tau));
        break;
      case ClaimId::rmk32:
        for (double t : grid.t_values)
          for (double tau : grid.taus) append(v.remark32(t, tau));
        break;
      case ClaimId::prop34:
        for (double t : grid.t_values)
          for (double tau : grid.taus) out.push_back(v.prop34(t, tau));
        break;
      case ClaimId::thm32:
        for (double t : grid.t_values)
          if (t >= 1.0)
            for (double tau : grid.taus) out.push_back(v.thm32(t, tau));
        break;
      case ClaimId::thm33:
        out.push_back(v.thm33());
        break;
      case ClaimId::prop31_convexity:
        for (double t : grid.t_values)
          if (t >= 1.0) append(v.prop31_convexity(t, grid.convexity_taus));
        break;
    }
  }
  return out;
}

inline std::vector<Certificate> run_suite(Verifier& v, const SuiteGrid& grid = {}) {
  return run_suite(v, std::vector<ClaimId>(std::begin(kAllClaims), std::end(kAllClaims)), grid);
}

}  // namespace banach2d
