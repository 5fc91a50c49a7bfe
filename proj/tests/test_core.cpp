#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <cmath>
#include <stdexcept>

#include "pfwave/types.hpp"
#include "test_util.hpp"

using namespace pfwave;

TEST_CASE("packet spec validates its parameters") {
  CHECK_NOTHROW(PacketSpec(0.0, 0.5));
  CHECK_NOTHROW(PacketSpec(-3.0, 1e-6));
  CHECK_THROWS_AS(PacketSpec(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PacketSpec(0.0, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(PacketSpec(0.0, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(PacketSpec(std::nan(""), 0.5), std::invalid_argument);
}

TEST_CASE("uniform grid covers both endpoints") {
  const Grid g = make_uniform_grid(-1.0, 2.0, 7);
  CHECK(g.n_points == 7);
  CHECK(g.samples.size() == 7);
  CHECK(g.samples.front() == -1.0);
  CHECK(g.samples.back() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(g.spacing() == doctest::Approx(0.5));
  CHECK_THROWS_AS(make_uniform_grid(0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_uniform_grid(1.0, 1.0, 8), std::invalid_argument);
}

TEST_CASE("edge avoiding grid dodges an exact edge hit") {
  const PacketSpec p{0.0, 0.5};
  // Spacing 2.5e-4 lands one sample exactly on each packet edge before the
  // nudge is applied.
  const Grid g = make_edge_avoiding_grid(p, -5.0, 5.0, 40001);
  CHECK(g.n_points == 40001);
  for (double edge : {-0.5, 0.5}) {
    for (double x : g.samples) {
      CHECK(std::fabs(x - edge) > kSingularExclusion);
    }
  }
  // The nudge stays below one spacing.
  CHECK(g.x_min >= -5.0);
  CHECK(g.x_min < -5.0 + g.spacing());
}

TEST_CASE("edge avoiding grid respects transported edges and extra points") {
  testing::Rng rng(20260816);
  for (int trial = 0; trial < 50; ++trial) {
    const double center = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(0.05, 1.5);
    const double t = rng.uniform(0.0, 2.0);
    const double extra_point = rng.uniform(-4.0, 4.0);
    const double extra[] = {extra_point};
    const Grid g = make_edge_avoiding_grid(PacketSpec{center, b}, -4.0, 4.0,
                                           200 + trial, t, extra);
    const double avoid[] = {center - b - t, center - b + t, center + b - t,
                            center + b + t, extra_point};
    for (double a : avoid) {
      for (double x : g.samples) {
        CHECK(std::fabs(x - a) > kSingularExclusion);
      }
    }
    CHECK(g.n_points == 200 + trial);
    CHECK(g.spacing() == doctest::Approx(8.0 / (199.0 + trial)));
  }
}

TEST_CASE("sign is odd and zero at zero") {
  CHECK(sign(3.0) == 1.0);
  CHECK(sign(-2.5) == -1.0);
  CHECK(sign(0.0) == 0.0);
  CHECK(sign(-0.0) == 0.0);
}

TEST_CASE("singular variants report their kind") {
  const ComplexOrSingular finite = Complex{1.0, 2.0};
  const ComplexOrSingular bad = SingularPoint{0.5, SingularKind::log_divergence};
  CHECK_FALSE(is_singular(finite));
  CHECK(is_singular(bad));
  const SingularPoint s = std::get<SingularPoint>(bad);
  CHECK(s.location == 0.5);
  CHECK(s.kind == SingularKind::log_divergence);
}
