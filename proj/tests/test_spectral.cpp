#include "curvgraph/curvature.hpp"
#include "curvgraph/generators.hpp"
#include "curvgraph/spectral.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <cmath>

using namespace curvgraph;

namespace {
Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }
double tree_value(int p) { return 1 - 2 * std::sqrt(p - 1.0) / p; }
}  // namespace

TEST_CASE("Fujiwara bounds") {
  CHECK(fujiwara_bounds(0.0, 1.0).lower == 0.0);
  CHECK(fujiwara_bounds(0.5, 0.0).ess_upper == 0.0);
  const auto t3 = fujiwara_bounds(1.0 / 3, std::log(2.0));
  CHECK(std::abs(t3.lower - tree_value(3)) < 1e-12);
  CHECK(std::abs(t3.ess_upper - tree_value(3)) < 1e-12);
  CHECK_ERROR(fujiwara_bounds(1.5, 1.0), ErrorCode::DomainError);
  CHECK_ERROR(fujiwara_bounds(-0.1, 1.0), ErrorCode::DomainError);
  CHECK_ERROR(fujiwara_bounds(0.5, -1.0), ErrorCode::DomainError);
}

TEST_CASE("McKean type bound") {
  CHECK(std::abs(mckean_bound(3, kInfinite, r(1, 6)) - tree_value(3)) < 1e-12);
  CHECK(mckean_bound(7, 3, r(1, 42)) == doctest::Approx(1 - std::sqrt(416.0 / 441)).epsilon(1e-14));
  CHECK(mckean_bound(7, 3, r(1, 42)) == doctest::Approx(0.0288).epsilon(1e-2));
  // C_{3,7} = 7/3, so 2 C c = 1/9
  CHECK(mckean_bound(3, 7, r(1, 42)) == doctest::Approx(1 - std::sqrt(80.0 / 81)).epsilon(1e-14));
  CHECK_ERROR(mckean_bound(7, 3, 0), ErrorCode::NonpositiveCurvatureGap);
  CHECK_ERROR(mckean_bound(3, kInfinite, 1), ErrorCode::BoundExceedsOne);
  for (int p = 3; p <= 8; ++p)
    CHECK(std::abs(mckean_bound(p, kInfinite, r(p - 2, 2 * p)) - tree_value(p)) < 1e-12);
}

TEST_CASE("essential spectrum upper bound") {
  CHECK(ess_upper_regular(7, 3) == doctest::Approx(0.1056).epsilon(1e-3));
  const double x = (3 + std::sqrt(5.0)) / 2;
  CHECK(ess_upper_regular(7, 3) == doctest::Approx(1 - 2 * std::sqrt(x) / (1 + x)).epsilon(1e-13));
  CHECK(std::abs(ess_upper_regular(5, kInfinite) - tree_value(5)) < 1e-12);
  CHECK(std::abs(ess_upper_regular(4, 4)) < 1e-15);
}

TEST_CASE("Dirichlet eigenvalue") {
  const PlanarGraph single = regular_tessellation_ball(7, 3, 1);
  const auto one = dirichlet_lambda0(VertexSet(single, dirichlet_region(single)));
  CHECK(one.size == 1);
  CHECK(one.lambda0 == doctest::Approx(1.0).epsilon(1e-12));

  const PlanarGraph t3 = regular_tree_ball(3, 8);
  CHECK(dirichlet_lambda0(VertexSet(t3, dirichlet_region(t3))).lambda0 >= tree_value(3));

  const PlanarGraph g37 = regular_tessellation_ball(3, 7, 6);
  const auto d37 = dirichlet_lambda0(VertexSet(g37, dirichlet_region(g37)));
  CHECK(d37.lambda0 >= mckean_bound(3, 7, r(1, 42)));
  CHECK(d37.residual < 1e-10);

  CHECK_ERROR(dirichlet_region(build_graph({{1, 2}, {2, 0}, {0, 1}})), ErrorCode::NoInteriorMarked);
  CHECK_ERROR(dirichlet_lambda0(VertexSet(g37, {})), ErrorCode::NoInterior);
}

TEST_CASE("Dirichlet eigenvalue agrees with a dense solver") {
  for (const PlanarGraph& g : {regular_tessellation_ball(3, 7, 7), regular_tessellation_ball(7, 3, 3),
                               regular_tree_ball(3, 6), oracle::square_lattice_ball(8),
                               oracle::triangular_lattice_ball(6)}) {
    const auto region = dirichlet_region(g);
    const double sparse = dirichlet_lambda0(VertexSet(g, region)).lambda0;
    const double dense = oracle::dense_dirichlet(g, region);
    CHECK(std::abs(sparse - dense) < 1e-9);
  }
}
