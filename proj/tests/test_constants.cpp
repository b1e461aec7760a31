#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include <banach2d/constants.hpp>

#include "oracles.hpp"

using namespace banach2d;

namespace {

const double kTaus[] = {0.0, 0.1, 0.25, 0.4, 0.5, 0.75, 0.9, 1.0, 1.25, 1.5, 2.0, 3.0};

SearchConfig fast() {
  SearchConfig c;
  c.coarse_grid = 256;
  return c;
}

std::vector<oracle::P> to_points(const std::vector<Vec2>& v) {
  std::vector<oracle::P> out;
  for (const auto& p : v) out.push_back({p.x1, p.x2});
  return out;
}

}  // namespace

TEST(SkewJames, PolygonClosedForm) {
  for (const auto& s : {NormSpace::hexagon(), NormSpace::l1_linf_hybrid()}) {
    for (double t : {1.0, 2.0, 4.0, 3.3}) {
      for (double tau : kTaus) {
        const ConstantValue v = skew_james(s, t, tau, MethodChoice::exact);
        EXPECT_EQ(v.method_used, Method::exact);
        EXPECT_NEAR(v.value, oracle::piecewise_skew(t, tau), 1e-9) << s.label() << " t=" << t << " tau=" << tau;
      }
    }
  }
}

TEST(SkewJames, ExactMatchesIndependentVertexEnumeration) {
  const std::vector<std::pair<NormSpace, oracle::Norm>> cases{
      {NormSpace::hexagon(), oracle::hexagon},
      {NormSpace::l1_linf_hybrid(), oracle::l1_linf_hybrid},
      {NormSpace::max_norm(), oracle::linf},
      {NormSpace::pnorm(1.0), oracle::l1}};
  for (const auto& [space, norm] : cases) {
    const auto verts = to_points(*extreme_points(space));
    for (double t : {1.0, 1.5, 2.0, 4.0}) {
      for (double tau : kTaus) {
        EXPECT_NEAR(skew_james(space, t, tau).value, oracle::vertex_skew(norm, verts, t, tau), 1e-12)
            << space.label() << " t=" << t << " tau=" << tau;
      }
    }
  }
}

TEST(SkewJames, ExactDominatesBruteForce) {
  // The vertex maximum is the true supremum, so no sampled pair may exceed it.
  for (const auto& [space, norm] : {std::pair{NormSpace::hexagon(), oracle::Norm(oracle::hexagon)},
                                    std::pair{NormSpace::l1_linf_hybrid(), oracle::Norm(oracle::l1_linf_hybrid)}}) {
    for (double t : {1.0, 2.0}) {
      for (double tau : {0.3, 1.0, 1.7}) {
        const double exact = skew_james(space, t, tau, MethodChoice::exact).value;
        const double brute = oracle::brute_skew(norm, 240, t, tau);
        EXPECT_LE(brute, exact + 1e-12);
        EXPECT_GE(brute, exact - 2e-2);
      }
    }
  }
}

TEST(SkewJames, GridAgreesWithExact) {
  for (const auto& s : {NormSpace::hexagon(), NormSpace::l1_linf_hybrid()}) {
    for (double t : {1.0, 2.0, 4.0}) {
      for (double tau : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0}) {
        const ConstantValue g = skew_james(s, t, tau, MethodChoice::grid, fast());
        EXPECT_EQ(g.method_used, Method::grid);
        EXPECT_NEAR(g.value, skew_james(s, t, tau, MethodChoice::exact).value, 2e-3);
      }
    }
  }
}

TEST(SkewJames, NamedValues) {
  EXPECT_NEAR(skew_james(NormSpace::l1_linf_hybrid(), 2.0, 1.0, MethodChoice::exact).value, std::sqrt(2.5), 1e-12);
  EXPECT_NEAR(skew_james(NormSpace::hexagon(), 1.0, 2.0).value, 2.5, 1e-12);
  EXPECT_NEAR(skew_james(NormSpace::hexagon(), 1.0, 0.0).value, 1.0, 1e-12);
  EXPECT_NEAR(skew_james(NormSpace::euclidean(), 2.0, 0.5).value, std::sqrt(1.25), 1e-4);
  EXPECT_NEAR(skew_james(NormSpace::euclidean(), ExtReal::neg_inf(), 1.0).value, std::sqrt(2.0), 1e-4);
}

TEST(SkewJames, HilbertIdentity) {
  for (double tau : {0.0, 0.3, 0.7, 1.0, 1.6}) {
    EXPECT_NEAR(skew_james(NormSpace::euclidean(), 2.0, tau, MethodChoice::automatic, fast()).value,
                std::sqrt(1.0 + tau * tau), 1e-4);
  }
}

TEST(SkewJames, WitnessesOnSphereAndReproduceValue) {
  for (const auto& s : {NormSpace::hexagon(), NormSpace::day_james(), NormSpace::euclidean()}) {
    for (const ExtReal t : {ExtReal::neg_inf(), ExtReal(0.0), ExtReal(2.0)}) {
      const ConstantValue v = skew_james(s, t, 0.6, MethodChoice::automatic, fast());
      ASSERT_TRUE(v.witnesses);
      const auto [x, y] = *v.witnesses;
      EXPECT_NEAR(s.norm(x), 1.0, 1e-12);
      EXPECT_NEAR(s.norm(y), 1.0, 1e-12);
      EXPECT_NEAR(skew_objective(s, t, 0.6, x, y), v.value, 1e-12);
    }
  }
}

TEST(SkewJames, MethodGating) {
  const NormSpace hex = NormSpace::hexagon();
  EXPECT_EQ(skew_james(hex, 0.5, 1.0, MethodChoice::automatic, fast()).method_used, Method::grid);
  EXPECT_EQ(skew_james(hex, ExtReal::neg_inf(), 1.0, MethodChoice::automatic, fast()).method_used, Method::grid);
  EXPECT_EQ(skew_james(hex, 1.0, 1.0).method_used, Method::exact);
  EXPECT_EQ(skew_james(NormSpace::day_james(), 2.0, 1.0, MethodChoice::automatic, fast()).method_used, Method::grid);
  try {
    skew_james(hex, 0.5, 1.0, MethodChoice::exact);
    FAIL() << "expected MethodUnavailable";
  } catch (const MethodUnavailable& e) {
    EXPECT_NE(std::string(e.what()).find("t >= 1"), std::string::npos);
  }
  try {
    skew_james(NormSpace::euclidean(), 2.0, 1.0, MethodChoice::exact);
    FAIL() << "expected MethodUnavailable";
  } catch (const MethodUnavailable& e) {
    EXPECT_NE(std::string(e.what()).find("extreme point"), std::string::npos);
  }
  EXPECT_THROW(skew_james(hex, ExtReal::pos_inf(), 1.0, MethodChoice::exact), MethodUnavailable);
  EXPECT_THROW(skew_james(hex, 1.0, -0.5), std::invalid_argument);
}

TEST(SkewJames, TriangleUpperBound) {
  oracle::Gen gen(41);
  const std::vector<NormSpace> spaces{NormSpace::hexagon(), NormSpace::day_james(), NormSpace::pnorm(3.0),
                                      NormSpace::polytopal({{1, 0}, {0.6, 0.8}, {-0.3, 1.0}})};
  for (int k = 0; k < 24; ++k) {
    const NormSpace& s = spaces[static_cast<std::size_t>(k) % spaces.size()];
    const double t = gen.mean_parameter();
    const ExtReal et = std::isinf(t) ? (t < 0 ? ExtReal::neg_inf() : ExtReal::pos_inf()) : ExtReal(t);
    const double tau = gen.uniform(0, 1);
    const double v = skew_james(s, et, tau, MethodChoice::automatic, fast()).value;
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0 + tau + 1e-4) << s.label() << " t=" << t << " tau=" << tau;
  }
}

TEST(SkewJames, NondecreasingInT) {
  const ExtReal ts[] = {ExtReal::neg_inf(), ExtReal(0.0), ExtReal(1.0), ExtReal(2.0), ExtReal(4.0), ExtReal::pos_inf()};
  for (const auto& s : {NormSpace::hexagon(), NormSpace::day_james(), NormSpace::euclidean()}) {
    for (double tau : {0.3, 1.0}) {
      double prev = -1.0;
      for (const ExtReal& t : ts) {
        const double v = skew_james(s, t, tau, MethodChoice::automatic, fast()).value;
        EXPECT_GE(v, prev - 1e-4) << s.label() << " t=" << t.to_string();
        prev = v;
      }
    }
  }
}

TEST(JamesType, AgreesWithSkewAtTauOne) {
  for (const auto& s : {NormSpace::hexagon(), NormSpace::day_james(), NormSpace::pnorm(3.0)}) {
    for (const ExtReal t : {ExtReal::neg_inf(), ExtReal(0.0), ExtReal(1.0), ExtReal(2.0)}) {
      EXPECT_NEAR(james_type(s, t, 1.0, MethodChoice::automatic, fast()).value,
                  skew_james(s, t, 1.0, MethodChoice::automatic, fast()).value, 1e-4)
          << s.label() << " t=" << t.to_string();
    }
  }
}

TEST(JamesType, EuclideanValues) {
  EXPECT_NEAR(james_type(NormSpace::euclidean(), 2.0, 1.0).value, std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(james_type(NormSpace::euclidean(), ExtReal::neg_inf(), 1.0).value, std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(james_type(NormSpace::euclidean(), 2.0, 0.5, MethodChoice::automatic, fast()).value, std::sqrt(1.25),
              1e-4);
}

TEST(JamesConstant, KnownSpaces) {
  EXPECT_NEAR(james_constant(NormSpace::euclidean()).value, std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(james_constant(NormSpace::max_norm()).value, 2.0, 1e-12);
  EXPECT_NEAR(james_constant(NormSpace::day_james()).value, std::sqrt(8.0 / 3.0), 1e-4);
  const double hex_brute = oracle::brute_sup(oracle::hexagon, 360, [](oracle::P x, oracle::P y) {
    return std::min(oracle::hexagon(x[0] + y[0], x[1] + y[1]), oracle::hexagon(x[0] - y[0], x[1] - y[1]));
  });
  const double hex = james_constant(NormSpace::hexagon()).value;
  EXPECT_GE(hex, hex_brute - 1e-12);
  EXPECT_NEAR(hex, hex_brute, 1e-3);
  EXPECT_TRUE(is_uniformly_non_square(james_constant(NormSpace::hexagon(), fast()), 1e-3));
  EXPECT_FALSE(is_uniformly_non_square(james_constant(NormSpace::max_norm(), fast()), 1e-3));
}

TEST(NamedConstants, Aliases) {
  const NormSpace l2 = NormSpace::euclidean();
  const SearchConfig cfg = fast();
  EXPECT_NEAR(a2_constant(l2, cfg).value, std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(alonso_llorens_fuster_constant(l2, cfg).value, std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(gao_constant(l2, cfg), 4.0, 1e-3);
  EXPECT_NEAR(gao_skew(l2, 0.5, cfg), 2.5, 1e-3);
  EXPECT_NEAR(fu_skew_james(NormSpace::hexagon(), 1.0, cfg).value,
              skew_james(NormSpace::hexagon(), ExtReal::neg_inf(), 1.0, MethodChoice::automatic, cfg).value, 0.0);
  EXPECT_NEAR(a2_constant(NormSpace::hexagon(), cfg).value, 1.5, 1e-12);
  EXPECT_NEAR(gao_constant(NormSpace::max_norm(), cfg), 8.0, 1e-9);
}

TEST(ModulusOfConvexity, NamedValues) {
  EXPECT_NEAR(modulus_of_convexity(NormSpace::euclidean(), std::sqrt(2.0)), 1.0 - std::sqrt(2.0) / 2.0, 1e-4);
  EXPECT_NEAR(modulus_of_convexity(NormSpace::max_norm(), 1.5), 0.0, 1e-12);
  for (double eps : {0.5, 1.0, 1.8, 2.0}) {
    EXPECT_NEAR(modulus_of_convexity(NormSpace::euclidean(), eps, fast()), oracle::euclid_delta(eps), 1e-4);
  }
  EXPECT_THROW(modulus_of_convexity(NormSpace::euclidean(), 3.0), std::invalid_argument);
}

TEST(ConvexityCoefficient, KnownSpaces) {
  EXPECT_EQ(convexity_coefficient(NormSpace::max_norm(), fast()), 2.0);
  // delta(eps) ~ eps^2 / 8 crosses the 1e-6 zero tolerance near eps = 2.8e-3.
  EXPECT_LT(convexity_coefficient(NormSpace::euclidean(), fast()), 5e-3);
  // The hexagon's flat edges have length 1: delta vanishes exactly on [0, 1].
  const double hex = convexity_coefficient(NormSpace::hexagon(), fast());
  EXPECT_GT(hex, 0.0);
  EXPECT_LT(hex, 2.0);
  EXPECT_NEAR(hex, 1.0, 2e-3);
  EXPECT_GT(oracle::brute_delta(oracle::hexagon, 360, hex + 0.05), 1e-6);
}

TEST(GConstant, EuclideanIsOne) {
  const SearchConfig cfg = fast();
  const ConstantValue gm = g_constant(NormSpace::euclidean(), ExtReal::neg_inf(), cfg);
  EXPECT_NEAR(gm.value, 1.0, 2e-3);
  ASSERT_TRUE(gm.tau_star);
  EXPECT_GE(*gm.tau_star, 0.0);
  EXPECT_LE(*gm.tau_star, 1.0);
  EXPECT_NEAR(g_constant(NormSpace::euclidean(), 2.0, cfg).value, 1.0, 2e-3);
}

TEST(GConstant, HexagonClosedForm) {
  // J_2[tau]^2 = ((1+tau)^2 + 1) / 2 on [0, 1]; the ratio to 1 + tau^2 peaks where tau^2 + tau = 1.
  const ConstantValue g = g_constant(NormSpace::hexagon(), 2.0);
  double brute = 0.0;
  for (int k = 0; k <= 100000; ++k) {
    const double tau = k / 100000.0;
    brute = std::max(brute, std::pow(oracle::piecewise_skew(2.0, tau), 2) / (1 + tau * tau));
  }
  EXPECT_NEAR(g.value, brute, 1e-9);
  EXPECT_NEAR(*g.tau_star, (std::sqrt(5.0) - 1.0) / 2.0, 1e-4);
  EXPECT_EQ(g.method_used, Method::exact);
}

TEST(CtConstant, KnownSpaces) {
  const SearchConfig cfg = fast();
  EXPECT_NEAR(c_t_constant(NormSpace::euclidean(), 2.0, cfg).value, 1.0, 2e-3);
  const ConstantValue linf = von_neumann_jordan_constant(NormSpace::max_norm(), cfg);
  EXPECT_NEAR(linf.value, 2.0, 2e-3);
  EXPECT_NEAR(*linf.tau_star, 1.0, 1e-3);
  EXPECT_NEAR(zbaganu_constant(NormSpace::euclidean(), cfg).value, 1.0, 2e-3);
}

TEST(LyjConstant, KnownSpaces) {
  const SearchConfig cfg = fast();
  EXPECT_NEAR(lyj_constant(NormSpace::euclidean(), 1.0, 1.0, cfg), 1.0, 1e-4);
  EXPECT_NEAR(lyj_constant(NormSpace::max_norm(), 1.0, 1.0, cfg), 2.0, 1e-12);
  for (const auto& s : {NormSpace::hexagon(), NormSpace::day_james(), NormSpace::euclidean()}) {
    EXPECT_NEAR(lyj_constant(s, 1.0, 0.0, cfg), 1.0, 1e-9) << s.label();
  }
  // Upper bound 1 + 2 lambda mu / (lambda^2 + mu^2) from the triangle inequality.
  for (double mu : {0.2, 0.5, 0.9}) {
    EXPECT_LE(lyj_constant(NormSpace::hexagon(), 1.0, mu, cfg), 1.0 + 2.0 * mu / (1.0 + mu * mu) + 1e-12);
  }
  EXPECT_THROW(lyj_constant(NormSpace::hexagon(), 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(lyj_constant(NormSpace::hexagon(), -1.0, 1.0), std::invalid_argument);
}

TEST(LyjConstant, CoincidesWithGAtTTwo) {
  for (const auto& s : {NormSpace::hexagon(), NormSpace::l1_linf_hybrid()}) {
    double best = 0.0;
    for (int k = 0; k <= 400; ++k) best = std::max(best, lyj_constant(s, 1.0, k / 400.0));
    EXPECT_NEAR(g_constant(s, 2.0).value, best, 5e-4) << s.label();
  }
}

TEST(Thm33Bound, Values) {
  EXPECT_NEAR(thm33_bound(std::sqrt(8.0 / 3.0)), 1.4007, 5e-4);
  EXPECT_NEAR(thm33_bound(2.0), 2.0, 1e-15);
  EXPECT_EQ(thm33_bound(1.0), 1.0);
  EXPECT_NEAR(thm33_bound(std::sqrt(2.0)), (std::sqrt(2.0) - 1) * (std::sqrt(2.0) - 1) + 1, 1e-12);
  EXPECT_THROW(thm33_bound(0.5), std::invalid_argument);
  EXPECT_THROW(thm33_bound(2.1), std::invalid_argument);
  EXPECT_THROW(thm33_bound(std::nan("")), std::invalid_argument);
}

TEST(Thm33Bound, SimplifiesToShiftedSquare) {
  oracle::Gen gen(42);
  for (int k = 0; k < 10000; ++k) {
    const double j = k == 0 ? 2.0 : gen.uniform(1.0, 2.0) + 1e-15;
    if (j > 2.0) continue;
    EXPECT_NEAR(thm33_bound(j), (j - 1) * (j - 1) + 1, 1e-12) << j;
    EXPECT_NEAR(thm33_bound(j), oracle::thm33_raw(j), 1e-12) << j;
  }
}
