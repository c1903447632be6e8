#include "curvgraph/curvature.hpp"
#include "curvgraph/generators.hpp"
#include "curvgraph/growth.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <cmath>

using namespace curvgraph;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

CurvatureSequence constant_kappa(int q, const Rational& value, int n_max) {
  CurvatureSequence k;
  k.q = q;
  k.kappa.assign(n_max + 1, value);
  return k;
}

GrowthSeries big(std::initializer_list<long long> values) {
  GrowthSeries out;
  for (long long v : values) out.push_back(BigInt(v));
  return out;
}

}  // namespace

TEST_CASE("b coefficients") {
  const auto b4 = b_coefficients(4);
  CHECK(b4.N == 1);
  CHECK(b4.b == std::vector<Rational>{2});
  const auto b7 = b_coefficients(7);
  CHECK(b7.N == 5);
  CHECK(b7.b == std::vector<Rational>{r(4, 5), r(4, 5), r(-6, 5), r(4, 5), r(4, 5)});
  const auto b3 = b_coefficients(3);
  CHECK(b3.N == 1);
  CHECK(b3.b == std::vector<Rational>{2});
  CHECK(b_coefficients(8).N == 3);
  CHECK_ERROR(b_coefficients(2), ErrorCode::ParameterOutOfRange);
  CHECK_ERROR(b_coefficients(kInfinite), ErrorCode::ParameterOutOfRange);
}

TEST_CASE("sphere recursion examples") {
  CHECK(sphere_recursion(constant_kappa(4, 0, 6), 4, 6).integers() == big({1, 4, 8, 12, 16, 20, 24}));
  CHECK(sphere_recursion(constant_kappa(7, r(-1, 5), 6), 3, 6).integers() ==
        big({1, 3, 6, 12, 18, 30, 45}));
  // kappa_n of G_{5,4}: (2q/(q-2)) kappa(v) = 4 * (-1/4)
  CHECK(regular_curvature_sequence(5, 4, 3).at(1) == -1);
  CHECK(sphere_recursion(constant_kappa(4, -1, 6), 5, 6).integers() == big({1, 5, 15, 40, 105, 275, 720}));
  CHECK(sphere_recursion(constant_kappa(4, 0, 0), 4, 0).integers() == big({1}));
}

TEST_CASE("sphere recursion input checking") {
  // kappa = 1/3 is no graph's curvature: fractional sigma
  const auto kappa = constant_kappa(4, r(1, 3), 5);
  CHECK_ERROR(sphere_recursion(kappa, 4, 5), ErrorCode::NonIntegerSigma);
  const auto synthetic = sphere_recursion(kappa, 4, 5, RecursionMode::Synthetic);
  CHECK_FALSE(synthetic.warnings.empty());
  CHECK_ERROR(synthetic.integers(), ErrorCode::NonIntegerSigma);

  CHECK_ERROR(sphere_recursion(constant_kappa(4, 3, 5), 4, 5), ErrorCode::NonPositiveSigma);

  auto seeded = constant_kappa(7, r(-1, 5), 4);
  seeded.kappa0 = r(-1, 5);  // 14/5 + 1/5 = 3
  CHECK(sphere_recursion(seeded, 3, 4).integers() == big({1, 3, 6, 12, 18}));
  seeded.kappa0 = 0;
  CHECK_ERROR(sphere_recursion(seeded, 3, 4), ErrorCode::InvalidInput);
  CHECK_ERROR(sphere_recursion(seeded, 3, -1), ErrorCode::InvalidInput);
}

TEST_CASE("growth polynomials") {
  const auto p73 = growth_polynomials(7, 3);
  CHECK(p73.g.coefficients() == std::vector<std::int64_t>{1, -3, 1});
  CHECK(p73.h.coefficients() == std::vector<std::int64_t>{1, 4, 1});
  const auto p54 = growth_polynomials(5, 4);
  CHECK(p54.g.coefficients() == std::vector<std::int64_t>{1, -3, 1});
  CHECK(p54.h.coefficients() == std::vector<std::int64_t>{1, 2, 1});
  CHECK(growth_polynomials(4, 5).g.coefficients() == std::vector<std::int64_t>{1, -2, 0, -2, 1});
  const auto p37 = growth_polynomials(3, 7);
  CHECK(p37.h.coefficients() == std::vector<std::int64_t>{1, 2, 2, 4, 2, 2, 1});
  CHECK(p37.g.coefficients() == std::vector<std::int64_t>{1, -1, -1, 1, -1, -1, 1});
  CHECK(p37.g.evaluate_exact(2) == 1 - 2 - 4 + 8 - 16 - 32 + 64);
  CHECK(p73.g.evaluate(2.0L) == -1.0L);
  CHECK_ERROR(growth_polynomials(3, 5), ErrorCode::ParameterOutOfRange);
}

TEST_CASE("series expansion against the frozen oracle") {
  const GrowthPolynomial one({1, 5, 2});
  CHECK(series_expand(one, one, 4) == big({1, 0, 0, 0, 0}));
  CHECK_ERROR(series_expand(one, GrowthPolynomial({2, 1}), 4), ErrorCode::InvalidInput);
  for (const auto& s : oracle::frozen_series()) {
    CAPTURE(s.p);
    CAPTURE(s.q);
    const auto poly = growth_polynomials(s.p, s.q);
    const auto series = series_expand(poly.h, poly.g, 40);
    for (size_t n = 0; n < s.head.size(); ++n) CHECK(series[n] == s.head[n]);
    CHECK(series[30] == BigInt(s.sigma30));
    CHECK(series[40] == BigInt(s.sigma40));
    const auto rec = sphere_recursion(regular_curvature_sequence(s.p, s.q, 40), s.p, 40).integers();
    CHECK(rec == series);
  }
}

TEST_CASE("largest root") {
  const double golden = (3 + std::sqrt(5.0)) / 2;
  CHECK(largest_root(7, 3).x == doctest::Approx(golden).epsilon(1e-14));
  CHECK(largest_root(5, 4).x == doctest::Approx(golden).epsilon(1e-14));
  CHECK(std::abs(largest_root(3, 7).x - oracle::kX37) < 1e-12);
  CHECK(std::abs(largest_root(4, 5).x - oracle::kX45) < 1e-12);
  const auto flat = largest_root(4, 4);
  CHECK(flat.flat);
  CHECK(flat.mu() == 0.0);
  CHECK_ERROR(largest_root(GrowthPolynomial({1, 1})), ErrorCode::NoSignChange);
}

TEST_CASE("closed form exponential growth") {
  CHECK(mu_closed_form(7, 3) == doctest::Approx(0.9624237).epsilon(1e-7));
  CHECK(mu_closed_form(5, 4) == doctest::Approx(mu_closed_form(7, 3)).epsilon(1e-15));
  CHECK(mu_closed_form(4, 6) == doctest::Approx(0.9624237).epsilon(1e-7));
  CHECK_ERROR(mu_closed_form(4, 5), ErrorCode::ParameterOutOfRange);
  CHECK(quadratic_factor(7, 3).coefficients() == std::vector<std::int64_t>{1, -3, 1});
  for (int p = 5; p <= 12; ++p) {
    const auto q4 = divide_exact(growth_polynomials(p, 4).g, quadratic_factor(p, 4));
    REQUIRE(q4.has_value());
  }
  CHECK(divide_exact(GrowthPolynomial({1, 0, 1}), GrowthPolynomial({1, 1})) == std::nullopt);
  CHECK(divide_exact(GrowthPolynomial({-1, 0, 1}), GrowthPolynomial({1, 1}))->coefficients() ==
        std::vector<std::int64_t>{-1, 1});
}

TEST_CASE("exponential growth lower bound") {
  CHECK(mu_lower_bound(7, 3) == doctest::Approx(std::log(1.5)).epsilon(1e-15));
  CHECK(mu_lower_bound(4, 4) == 0.0);
  CHECK(std::abs(mu_lower_bound(3, 7) - oracle::kMuLower37) < 1e-15);
  for (int p = 3; p <= 10; ++p)
    for (int q = 3; q <= 10; ++q)
      if (is_hyperbolic(p, q)) CHECK(mu_lower_bound(p, q) <= largest_root(p, q).mu());
  CHECK_ERROR(mu_lower_bound(3, 4), ErrorCode::ParameterOutOfRange);
}

TEST_CASE("root analysis") {
  const auto a73 = root_analysis(growth_polynomials(7, 3).g);
  REQUIRE(a73.roots.size() == 2);
  CHECK(a73.roots[0].real() == doctest::Approx(2.6180340).epsilon(1e-7));
  CHECK(a73.roots[1].real() == doctest::Approx(0.3819660).epsilon(1e-6));
  CHECK(a73.salem_ok);
  CHECK(a73.mahler == doctest::Approx(2.6180340).epsilon(1e-7));

  const auto a45 = root_analysis(growth_polynomials(4, 5).g);
  CHECK(a45.salem_ok);
  CHECK(a45.off_circle == 2);
  CHECK(std::abs(a45.mahler - oracle::kX45) < 1e-9);
  CHECK(a45.max_residual < 1e-10);

  // z^2 - 1 has roots on the circle only
  CHECK_FALSE(root_analysis(GrowthPolynomial({-1, 0, 1})).salem_ok);
}

TEST_CASE("growth comparison") {
  const auto same = compare_growth(big({1, 3, 6}), big({1, 3, 6}));
  CHECK(same.nonneg);
  CHECK(same.monotone);
  const auto s54 = sphere_recursion(regular_curvature_sequence(5, 4, 30), 5, 30).integers();
  const auto s84 = sphere_recursion(regular_curvature_sequence(8, 4, 30), 8, 30).integers();
  const auto cmp = compare_growth(s54, s84);
  CHECK(cmp.nonneg);
  CHECK(cmp.monotone);
  const auto bad = compare_growth(big({1, 4, 8}), big({1, 3, 9}));
  CHECK_FALSE(bad.nonneg);
  CHECK(bad.first_violation == 1);
  CHECK_ERROR(compare_growth(big({1}), big({1, 2})), ErrorCode::LengthMismatch);
}

TEST_CASE("tree bound") {
  GrowthSeries tree = big({1, 4});
  for (int n = 2; n <= 20; ++n) tree.push_back(tree.back() * 3);
  CHECK(tree_bound_check(tree, 4).holds);
  CHECK(tree_bound_check(big({1, 3, 6, 12, 18}), 3).holds);
  const auto over = tree_bound_check(big({1, 3, 7}), 3);
  CHECK_FALSE(over.holds);
  CHECK(over.first_violation == 2);
}

TEST_CASE("curvature of balls") {
  const auto flat = ball_curvature_identity(oracle::square_lattice_ball(4), 0, 1);
  CHECK(flat.lhs == 0);
  CHECK(flat.holds());
  const PlanarGraph g37 = regular_tessellation_ball(3, 7, 8);
  for (int n = 1; n <= 3; ++n) CHECK(ball_curvature_identity(g37, 0, n).holds());
  CHECK_ERROR(ball_curvature_identity(g37, 0, 6), ErrorCode::HorizonExceeded);
}

TEST_CASE("finite-radius growth estimates") {
  GrowthSeries pow2;
  for (int n = 0; n <= 40; ++n) pow2.push_back(BigInt(1) << n);
  const auto e2 = mu_estimate(pow2, 1);
  CHECK(e2.crude == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(e2.sliding == doctest::Approx(std::log(2.0)).epsilon(1e-15));

  const auto poly = growth_polynomials(3, 7);
  const auto e37 = mu_estimate(series_expand(poly.h, poly.g, 40));
  CHECK(std::abs(e37.sliding - std::log(oracle::kX37)) < 1e-2);

  const auto p44 = growth_polynomials(4, 4);
  CHECK(mu_estimate(series_expand(p44.h, p44.g, 40)).sliding < 0.03);
  CHECK_ERROR(mu_estimate(big({1, 2})), ErrorCode::InvalidInput);

  CHECK(log_big(BigInt(1)) == 0.0);
  CHECK(log_big(BigInt("5923383140030821178808077234112")) ==
        doctest::Approx(std::log(5.923383140030821e30)).epsilon(1e-14));
}
