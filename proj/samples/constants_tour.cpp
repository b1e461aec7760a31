// Prints a handful of constants for the built-in spaces, or for a norm given as a JSON file.
//
//   sample_constants                      # all built-ins
//   sample_constants norm_specs/pnorm3.json

#include <cstdio>
#include <exception>
#include <vector>

#include <banach2d/banach2d.hpp>

using namespace banach2d;

namespace {

void tour(const NormSpace& space) {
  SearchConfig cfg;
  cfg.coarse_grid = 256;
  const ConstantValue j = james_constant(space, cfg);
  std::printf("%s\n", space.label().c_str());
  std::printf("  J(X)            %.6f  (uniformly non-square: %s)\n", j.value,
              is_uniformly_non_square(j, 1e-3) ? "yes" : "no");
  for (double tau : {0.5, 1.0, 2.0}) {
    const ConstantValue s = skew_james(space, 2.0, tau, MethodChoice::automatic, cfg);
    std::printf("  J_2[%.1f]        %.6f  (%s)\n", tau, s.value, s.method_used == Method::exact ? "exact" : "grid");
  }
  std::printf("  C_NJ(X)         %.6f\n", von_neumann_jordan_constant(space, cfg).value);
  std::printf("  delta(1)        %.6f\n", modulus_of_convexity(space, 1.0, cfg));
  std::printf("  eps_0(X)        %.6f\n", convexity_coefficient(space, cfg));
  std::printf("  bound(J(X))     %.6f\n", thm33_bound(j.value));
}

}  // namespace

int main(int argc, char** argv) {
  try {
    if (argc > 1) {
      for (int k = 1; k < argc; ++k) tour(load_norm_spec(argv[k]));
      return 0;
    }
    for (const auto& space : {NormSpace::hexagon(), NormSpace::l1_linf_hybrid(), NormSpace::day_james(),
                              NormSpace::euclidean(), NormSpace::pnorm(3.0), NormSpace::max_norm()}) {
      tour(space);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sample_constants: %s\n", e.what());
    return 1;
  }
  return 0;
}
