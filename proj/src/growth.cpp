#include "curvgraph/growth.hpp"

#include "curvgraph/curvature.hpp"
#include "curvgraph/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace curvgraph {

GrowthPolynomial::GrowthPolynomial(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

long double GrowthPolynomial::evaluate(long double z) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + static_cast<long double>(*it);
  return acc;
}

std::complex<long double> GrowthPolynomial::evaluate(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + static_cast<long double>(*it);
  return acc;
}

BigInt GrowthPolynomial::evaluate_exact(std::int64_t z) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::string GrowthPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0 && coeffs_.size() > 1) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << "z";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

BCoefficients b_coefficients(int q) {
  if (q < 3 || q == kInfinite)
    fail(ErrorCode::ParameterOutOfRange, "face degree must be finite and at least 3");
  BCoefficients out;
  out.N = q % 2 == 0 ? (q - 2) / 2 : q - 2;
  out.b.assign(out.N, make_rational(4, q - 2));
  if (q % 2 == 1) out.b[(out.N - 1) / 2] -= 2;
  return out;
}

const Rational& CurvatureSequence::at(int n) const {
  if (n < 1 || n > static_cast<int>(kappa.size()))
    fail(ErrorCode::InvalidInput, "curvature sequence has no entry kappa_" + std::to_string(n));
  return kappa[n - 1];
}

CurvatureSequence regular_curvature_sequence(int p, int q, int n_max) {
  require_tessellation_parameters(p, q);
  if (q == kInfinite || p == kInfinite)
    fail(ErrorCode::ParameterOutOfRange, "p and q must be finite");
  const Rational k = make_rational(2 * q, q - 2) * regular_vertex_curvature(p, q);
  CurvatureSequence seq;
  seq.q = q;
  seq.kappa.assign(std::max(n_max, 0), k);
  seq.kappa0 = k;
  return seq;
}

GrowthSeries RecursionResult::integers() const {
  GrowthSeries out;
  out.reserve(sigma.size());
  for (size_t n = 0; n < sigma.size(); ++n) {
    if (!is_integer(sigma[n]))
      fail(ErrorCode::NonIntegerSigma,
           "sigma_" + std::to_string(n) + " = " + to_string(sigma[n]) + " is not an integer");
    out.push_back(numerator_of(sigma[n]));
  }
  return out;
}

RecursionResult sphere_recursion(const CurvatureSequence& kappa, const BigInt& sigma1,
                                 int n_max, RecursionMode mode) {
  if (n_max < 0) fail(ErrorCode::InvalidInput, "n_max must be non-negative");
  const BCoefficients bc = b_coefficients(kappa.q);
  const int N = bc.N;
  const bool strict = mode == RecursionMode::Graph;
  RecursionResult out;

  auto report = [&](ErrorCode code, const std::string& message) {
    if (strict) fail(code, message);
    out.warnings.push_back(message);
  };

  if (kappa.kappa0) {
    const Rational expected = make_rational(2 * kappa.q, kappa.q - 2) - *kappa.kappa0;
    if (expected != Rational(sigma1))
      report(ErrorCode::InvalidInput, "sigma_1 = " + to_string(sigma1) +
                                          " but 2q/(q-2) - kappa_0 = " + to_string(expected));
  }

  std::vector<Rational>& s = out.sigma;
  s.push_back(1);
  if (n_max >= 1) s.push_back(Rational(sigma1));
  for (int n = 1; n < n_max; ++n) {
    Rational next = 0;
    if (n < N) next += s[1];
    if (n > N) next -= s[n - N];
    const int terms = std::min(n, N);
    for (int l = 0; l < terms; ++l) next += (bc.b[l] - kappa.at(n - l)) * s[n - l];
    s.push_back(next);
  }

  for (size_t n = 1; n < s.size(); ++n) {
    if (!is_integer(s[n]))
      report(ErrorCode::NonIntegerSigma,
             "sigma_" + std::to_string(n) + " = " + to_string(s[n]) + " is not an integer");
    if (s[n] <= 0)
      report(ErrorCode::NonPositiveSigma,
             "sigma_" + std::to_string(n) + " = " + to_string(s[n]) + " is not positive");
  }
  return out;
}

GrowthPolynomials growth_polynomials(int p, int q) {
  require_tessellation_parameters(p, q);
  if (p == kInfinite || q == kInfinite)
    fail(ErrorCode::ParameterOutOfRange, "growth polynomials need finite p and q");
  const int N = b_coefficients(q).N;
  std::vector<std::int64_t> h(N + 2, 2), g(N + 2, -(p - 2));
  h.front() = h.back() = 1;
  g.front() = g.back() = 1;
  if (q % 2 == 1) {
    const int mid = (N + 1) / 2;
    h[mid] = 4;
    g[mid] = -(p - 4);
  }
  return {GrowthPolynomial(std::move(h)), GrowthPolynomial(std::move(g))};
}

GrowthSeries series_expand(const GrowthPolynomial& h, const GrowthPolynomial& g, int n_max) {
  if (g.coefficients().front() != 1)
    fail(ErrorCode::InvalidInput, "denominator must have constant term 1");
  if (n_max < 0) fail(ErrorCode::InvalidInput, "n_max must be non-negative");
  GrowthSeries s(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    BigInt acc = n <= h.degree() ? BigInt(h[n]) : BigInt(0);
    for (int i = 1; i <= std::min(n, g.degree()); ++i) acc -= g[i] * s[n - i];
    s[n] = std::move(acc);
  }
  return s;
}

std::vector<Rational> regular_recursion_terms(int p, int q) {
  const auto seq = regular_curvature_sequence(p, q, 1);
  const BCoefficients bc = b_coefficients(q);
  std::vector<Rational> out;
  for (const auto& b : bc.b) out.push_back(b - seq.at(1));
  return out;
}

double LargestRoot::mu() const { return flat ? 0.0 : std::log(x); }

LargestRoot largest_root(const GrowthPolynomial& g) {
  if (g.degree() < 1) fail(ErrorCode::NoSignChange, "constant polynomial has no root");
  if (g.evaluate_exact(1) == 0) return {true, 1.0};

  long double bound = 0;
  const long double lead = std::abs(static_cast<long double>(g.coefficients().back()));
  for (auto c : g.coefficients()) bound = std::max(bound, std::abs(static_cast<long double>(c)));
  long double lo = 1, hi = 1 + bound / lead;
  const bool lo_negative = g.evaluate(lo) < 0;
  if (lo_negative == (g.evaluate(hi) < 0))
    fail(ErrorCode::NoSignChange, "no sign change of " + g.to_string() + " on (1, " +
                                      std::to_string(static_cast<double>(hi)) + "]");
  for (int iter = 0; iter < 256; ++iter) {
    const long double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    const long double v = g.evaluate(mid);
    if (v == 0) {
      lo = hi = mid;
      break;
    }
    ((v < 0) == lo_negative ? lo : hi) = mid;
  }
  return {false, static_cast<double>((lo + hi) / 2)};
}

LargestRoot largest_root(int p, int q) {
  const auto root = largest_root(growth_polynomials(p, q).g);
  if (is_hyperbolic(p, q)) {
    if (root.flat || !(root.x > 1.0 && root.x < p - 1.0))
      fail(ErrorCode::Internal, "largest root " + std::to_string(root.x) +
                                    " outside (1, p-1)");
  } else if (!root.flat) {
    fail(ErrorCode::Internal, "flat parameters without a root at 1");
  }
  return root;
}

GrowthPolynomial quadratic_factor(int p, int q) {
  if (q != 3 && q != 4 && q != 6)
    fail(ErrorCode::ParameterOutOfRange, "quadratic factor exists for q in {3, 4, 6}");
  require_tessellation_parameters(p, q);
  const std::int64_t middle = p - 4 / (q - 2);
  return GrowthPolynomial({1, -middle, 1});
}

double mu_closed_form(int p, int q) {
  if (q != 3 && q != 4 && q != 6)
    fail(ErrorCode::ParameterOutOfRange, "closed form holds for q in {3, 4, 6}");
  require_tessellation_parameters(p, q);
  if (p == kInfinite) fail(ErrorCode::ParameterOutOfRange, "p must be finite");
  const long double a = static_cast<long double>(p) / 2 - 2.0L / (q - 2);
  return static_cast<double>(std::log(a + std::sqrt(std::max(a * a - 1, 0.0L))));
}

std::optional<GrowthPolynomial> divide_exact(const GrowthPolynomial& num,
                                             const GrowthPolynomial& den) {
  if (den.coefficients().back() != 1)
    fail(ErrorCode::InvalidInput, "divisor must be monic");
  std::vector<std::int64_t> rem = num.coefficients();
  const int dn = den.degree();
  if (num.degree() < dn) return std::nullopt;
  std::vector<std::int64_t> quot(num.degree() - dn + 1, 0);
  for (int i = num.degree(); i >= dn; --i) {
    const std::int64_t c = rem[i];
    quot[i - dn] = c;
    for (int j = 0; j <= dn; ++j) rem[i - dn + j] -= c * den[j];
  }
  for (int i = 0; i < dn; ++i)
    if (rem[i] != 0) return std::nullopt;
  return GrowthPolynomial(std::move(quot));
}

double mu_lower_bound(int p, int q) {
  require_tessellation_parameters(p, q);
  if (p == kInfinite || q == kInfinite)
    fail(ErrorCode::ParameterOutOfRange, "p and q must be finite");
  const Rational kappa = regular_vertex_curvature(p, q);
  if (kappa > 0) fail(ErrorCode::PositiveCurvature, "vertex curvature is positive");
  const Rational C = -kappa;
  return std::log1p(to_double(make_rational(2 * q, q - 1) * C));
}

RootAnalysis root_analysis(const GrowthPolynomial& g) {
  const int n = g.degree();
  if (n < 1) fail(ErrorCode::RootFindingFailure, "constant polynomial");
  const auto& a = g.coefficients();
  const double lead = static_cast<double>(a.back());

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -static_cast<double>(a[i]) / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::RootFindingFailure, "companion eigenvalue iteration failed");

  // Derivative for Newton polishing.
  std::vector<std::int64_t> da;
  for (int i = 1; i <= n; ++i) da.push_back(a[i] * i);
  const GrowthPolynomial dg(da);

  double l1 = 0;
  for (auto c : a) l1 += std::abs(static_cast<double>(c));
  const double tolerance = 1e-10 * (1 + l1);

  RootAnalysis out;
  for (int i = 0; i < n; ++i) {
    std::complex<long double> z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int step = 0; step < 8; ++step) {
      const auto d = dg.evaluate(z);
      if (std::abs(d) == 0) break;
      const auto next = z - g.evaluate(z) / d;
      if (std::abs(next - z) <= 1e-18L * std::max(1.0L, std::abs(z))) {
        z = next;
        break;
      }
      z = next;
    }
    const long double scale = std::pow(std::max(1.0L, std::abs(z)), static_cast<long double>(n));
    const double residual = static_cast<double>(std::abs(g.evaluate(z)) / scale);
    out.max_residual = std::max(out.max_residual, residual);
    out.roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  if (out.max_residual > tolerance)
    fail(ErrorCode::RootFindingFailure,
         "root residual " + std::to_string(out.max_residual) + " exceeds tolerance");

  std::sort(out.roots.begin(), out.roots.end(), [](const auto& x, const auto& y) {
    if (std::abs(x) != std::abs(y)) return std::abs(x) > std::abs(y);
    return std::arg(x) < std::arg(y);
  });

  constexpr double kCircle = 1e-9;
  std::vector<std::complex<double>> off;
  out.mahler = std::abs(lead);
  for (const auto& z : out.roots) {
    if (std::abs(std::abs(z) - 1.0) > kCircle) off.push_back(z);
    out.mahler *= std::max(1.0, std::abs(z));
  }
  out.off_circle = static_cast<int>(off.size());
  out.salem_ok = off.size() == 2 && std::abs(off[0].imag()) <= kCircle &&
                 std::abs(off[1].imag()) <= kCircle && off[0].real() > 0 &&
                 off[1].real() > 0 && std::abs(off[0].real() * off[1].real() - 1.0) <= kCircle;
  return out;
}

GrowthComparison compare_growth(const GrowthSeries& sigma, const GrowthSeries& sigma_tilde) {
  if (sigma.size() != sigma_tilde.size())
    fail(ErrorCode::LengthMismatch, "series lengths " + std::to_string(sigma.size()) +
                                        " and " + std::to_string(sigma_tilde.size()));
  GrowthComparison out;
  BigInt previous = 0;
  for (size_t n = 0; n < sigma.size(); ++n) {
    const BigInt diff = sigma_tilde[n] - sigma[n];
    bool bad = false;
    if (diff < 0) {
      out.nonneg = false;
      bad = true;
    }
    if (n > 0 && diff < previous) {
      out.monotone = false;
      bad = true;
    }
    if (bad && !out.first_violation) out.first_violation = static_cast<int>(n);
    previous = diff;
  }
  return out;
}

TreeBoundReport tree_bound_check(const GrowthSeries& sigma, int p) {
  if (p < 3) fail(ErrorCode::ParameterOutOfRange, "p must be at least 3");
  TreeBoundReport out;
  BigInt bound = p;
  const double slack = std::log(p - 1.0);
  const double offset = std::log(p / (p - 1.0));
  for (size_t n = 1; n < sigma.size(); ++n) {
    bool ok = sigma[n] <= bound;
    if (ok && sigma[n] > 0) {
      const double nn = static_cast<double>(n);
      ok = log_big(sigma[n]) / nn <= slack + offset / nn + 1e-12;
    }
    if (!ok) {
      out.holds = false;
      if (!out.first_violation) out.first_violation = static_cast<int>(n);
    }
    bound *= p - 1;
  }
  return out;
}

BallCurvatureIdentity ball_curvature_identity(const PlanarGraph& g, int v0, int n) {
  const auto counts = c_counts(g, v0, n);
  const int q = regular_face_degree(g, n);
  const auto& dist = g.center_distances();
  std::vector<int> ball;
  std::int64_t sigma_n = 0, sigma_next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] <= n) ball.push_back(v);
    if (dist[v] == n) ++sigma_n;
    if (dist[v] == n + 1) ++sigma_next;
  }
  BallCurvatureIdentity out;
  out.lhs = set_curvature(VertexSet(g, std::move(ball)));
  out.rhs = 1 - make_rational(q - 2, 2 * q) * (sigma_next - sigma_n);
  for (int j = 2; j <= q - 2; ++j)
    out.rhs += make_rational(q - 2 * j, 2 * q) * counts.at(j);
  return out;
}

double log_big(const BigInt& x) {
  if (x <= 0) fail(ErrorCode::InvalidInput, "logarithm of a non-positive integer");
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const auto shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

MuEstimate mu_estimate(const GrowthSeries& sigma, int k) {
  if (sigma.size() < 3) fail(ErrorCode::InvalidInput, "need at least three sphere sizes");
  const int n = static_cast<int>(sigma.size()) - 1;
  if (k < 1 || k > n) fail(ErrorCode::InvalidInput, "window must lie in [1, n]");
  MuEstimate out;
  out.crude = log_big(sigma[n]) / n;
  out.sliding = (log_big(sigma[n]) - log_big(sigma[n - k])) / k;
  return out;
}

}  // namespace curvgraph
