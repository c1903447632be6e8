#pragma once

#include "curvgraph/planar_graph.hpp"
#include "curvgraph/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curvgraph {

/// Integer polynomial, coefficients in ascending degree.
class GrowthPolynomial {
 public:
  GrowthPolynomial() = default;
  explicit GrowthPolynomial(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](int i) const { return coeffs_.at(i); }
  long double evaluate(long double z) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;
  /// Exact value at an integer point.
  BigInt evaluate_exact(std::int64_t z) const;
  std::string to_string() const;

  friend bool operator==(const GrowthPolynomial&, const GrowthPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

using GrowthSeries = std::vector<BigInt>;

/// Depth N and the weights b_0..b_{N-1} attached to face degree q.
struct BCoefficients {
  int N = 0;
  std::vector<Rational> b;
};
/// Errors: ParameterOutOfRange (q < 3 or infinite).
BCoefficients b_coefficients(int q);

/// kappa_n = (2q/(q-2)) times the average vertex curvature over the sphere S_n.
struct CurvatureSequence {
  int q = 0;
  std::vector<Rational> kappa;      ///< kappa[n-1] is kappa_n, n >= 1
  std::optional<Rational> kappa0;   ///< kappa_0, when known
  const Rational& at(int n) const;
};

/// Constant sequence of a (p,q)-regular tessellation: kappa_n = (2q/(q-2))(1 - p/2 + p/q).
CurvatureSequence regular_curvature_sequence(int p, int q, int n_max);

enum class RecursionMode {
  Graph,      ///< kappa comes from a real graph: non-integral sigma is an error
  Synthetic,  ///< exploratory input: integrality and positivity only warn
};

struct RecursionResult {
  std::vector<Rational> sigma;    ///< sigma_0 .. sigma_{n_max}
  std::vector<std::string> warnings;
  /// Integer view; fails with NonIntegerSigma if an entry is fractional.
  GrowthSeries integers() const;
};

/// The (N+1)-step sphere-size recursion driven by kappa_n and the seed sigma_1.
/// Errors: NonIntegerSigma, NonPositiveSigma (Graph mode), InvalidInput.
RecursionResult sphere_recursion(const CurvatureSequence& kappa, const BigInt& sigma1,
                                 int n_max, RecursionMode mode = RecursionMode::Graph);

/// The numerator h and denominator g of the growth series of G_{p,q}.
struct GrowthPolynomials {
  GrowthPolynomial h;
  GrowthPolynomial g;
};
/// Errors: ParameterOutOfRange.
GrowthPolynomials growth_polynomials(int p, int q);

/// Power-series coefficients of h/g up to z^n_max. Errors: InvalidInput (g(0) != 1).
GrowthSeries series_expand(const GrowthPolynomial& h, const GrowthPolynomial& g,
                           int n_max);

/// The terms b_l - kappa_n of the regular recursion, exact.
std::vector<Rational> regular_recursion_terms(int p, int q);

struct LargestRoot {
  bool flat = false;  ///< g(1) = 0: polynomial growth, mu = 0
  double x = 1.0;
  /// log x, exactly 0 when flat
  double mu() const;
};
/// Largest real root above 1 by bisection on (1, 1 + max|a_i|].
/// Errors: NoSignChange.
LargestRoot largest_root(const GrowthPolynomial& g);
/// As above for g_{p,q}, additionally asserting 1 < x < p - 1 when hyperbolic.
LargestRoot largest_root(int p, int q);

/// Exponential growth for q in {3, 4, 6} from the quadratic factor of g_{p,q}.
/// Errors: ParameterOutOfRange.
double mu_closed_form(int p, int q);
/// z^2 - (p - 4/(q-2)) z + 1, integral for q in {3, 4, 6}.
GrowthPolynomial quadratic_factor(int p, int q);
/// Quotient of exact division by a monic polynomial, or nullopt if the
/// remainder is nonzero.
std::optional<GrowthPolynomial> divide_exact(const GrowthPolynomial& num,
                                             const GrowthPolynomial& den);

/// log(1 + (2q/(q-1)) C) with C = p(1/2 - 1/p - 1/q). Errors: PositiveCurvature,
/// ParameterOutOfRange.
double mu_lower_bound(int p, int q);

struct RootAnalysis {
  std::vector<std::complex<double>> roots;
  int off_circle = 0;         ///< roots with ||z| - 1| > tolerance
  bool salem_ok = false;
  double mahler = 0.0;
  double max_residual = 0.0;  ///< max |g(z)| / max(1,|z|)^deg
};
/// All roots from the companion matrix, each polished by Newton steps.
/// Errors: RootFindingFailure.
RootAnalysis root_analysis(const GrowthPolynomial& g);

struct GrowthComparison {
  bool nonneg = true;
  bool monotone = true;
  std::optional<int> first_violation;
};
/// Errors: LengthMismatch.
GrowthComparison compare_growth(const GrowthSeries& sigma, const GrowthSeries& sigma_tilde);

struct TreeBoundReport {
  bool holds = true;
  std::optional<int> first_violation;
};
/// sigma_n <= p (p-1)^{n-1} and log(sigma_n)/n <= log(p-1) + log(p/(p-1))/n.
TreeBoundReport tree_bound_check(const GrowthSeries& sigma, int p);

struct BallCurvatureIdentity {
  Rational lhs;  ///< curvature of B_n
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};
/// Errors: HorizonExceeded, NotFaceRegular, NoInteriorMarked, BoundaryVertex.
BallCurvatureIdentity ball_curvature_identity(const PlanarGraph& g, int v0, int n);

struct MuEstimate {
  double crude = 0.0;    ///< log(sigma_n) / n
  double sliding = 0.0;  ///< log(sigma_n / sigma_{n-k}) / k
};
/// Finite-radius proxies for the exponential growth. Errors: InvalidInput.
MuEstimate mu_estimate(const GrowthSeries& sigma, int k = 1);

/// Natural logarithm of a positive big integer.
double log_big(const BigInt& x);

}  // namespace curvgraph
