// Prints the reference values frozen into the acceptance suite.
#include "oracles.hpp"

#include <cstdio>

int main() {
  const double r = std::sqrt(0.5);
  const oracle::cplx p{r, 0.0};
  std::printf("# S_{4^K}(e_0), p = q = 1/sqrt2\n");
  for (int k = 1; k <= 8; ++k) {
    std::printf("%d %.17g\n", k, oracle::parseval_partial({{1.0, 0.0}}, p, p, std::uint64_t{1} << (2 * k)));
  }
  std::printf("# h_L(-1/2), rho = -1\n");
  for (int len = 1; len <= 4; ++len) std::printf("%d %.17g\n", len, oracle::h(0.0, 1.0, -0.5, len));
  std::printf("# S_{4^K}(e_1), rho = -1\n");
  for (int k = 1; k <= 8; ++k) {
    std::printf("%d %.17g\n", k, oracle::parseval_partial({{1.0, 1.0}}, 0.0, 1.0, std::uint64_t{1} << (2 * k)));
  }
  std::printf("# ||e_1||^2 %.17g\n", oracle::norm_squared({{1.0, 1.0}}));
}
