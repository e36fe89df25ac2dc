#pragma once

#include <cstddef>
#include <cstdint>

// Probabilistic bounds used by the progressive sampler. Every function here
// is pure. Log terms are passed in already adjusted for the union bound of
// the caller (see schedule_log_term).
namespace bcapprox::bounds {

// g(x) = x(1-x), x in [0,1].
double g(double x);
// h(x) = (1+x)ln(1+x) - x, x >= 0. Series expansion near 0.
double h(double x);
// h1(x) = 1 + x - sqrt(1+2x), x >= 0.
double h1(double x);

// Fixed point of r(x) = u + sqrt(v + y x) for u, v, y >= 0:
//   x* = u + y/2 + sqrt(y^2/4 + u y + v).
double fixed_point(double u, double v, double y);

// Upper bound on the empirical Rademacher average of one class from its
// c-trial Monte-Carlo estimate:
//   max(mcera, 0) + sqrt(4 wimpy L / (c m)).
// A negative Monte-Carlo estimate is raised to 0 (the ERA is nonnegative).
double era_upper_bound(double mcera, double wimpy, std::size_t trials,
                       std::uint64_t m, double log_term);

// R = era + L/m + sqrt((L/m)^2 + 2 L era / m).
double rademacher_radius(double era_bound, std::uint64_t m, double log_term);

// Supremum-deviation bound of one class:
//   eps = 2R + sqrt(2 L (nu + 4R) / m) + L / (3m),  R = rademacher_radius(...)
double eps_bound(double era_bound, double nu, std::uint64_t m, double log_term);

// Variance upper bound from the empirical wimpy variance:
//   nu = w + L/m + sqrt((L/m)^2 + 2 w L / m).
double var_upper_bound(double wimpy, std::uint64_t m, double log_term);

enum class ScheduleMode {
  kMain,  // ln(2^{i+1} * 5t / delta)
  kTopK,  // ln(2^{i} * 5t / delta)
};

// Log term for iteration i >= 1, evaluated in log space so large i never
// overflows. Summed over i the per-iteration budgets are delta/2 (main) and
// delta (top-k).
double schedule_log_term(double delta, std::size_t classes, unsigned iteration,
                         ScheduleMode mode);

struct SampleBound {
  double x_hat1 = 0.0;
  double x_hat2 = 0.0;
  double x_hat = 0.0;
  double argmax = 0.0;     // where the supremum was found
  double supremum = 0.0;   // value of the objective at argmax, before margin
  std::uint64_t samples = 0;
};

// Number of samples after which the supremum deviation of estimators with
// variance <= nu_hat and total mean <= rho is <= epsilon with probability
// >= 1-delta:
//   sup_{x in (0, x_hat]} ln(2 rho / (x delta)) / (g(x) h(epsilon / g(x)))
// The supremum is located on a 10^4-point log grid over [x_hat 1e-9, x_hat]
// and refined by golden-section search, then inflated by 0.1% and rounded up.
// Throws ParameterError unless epsilon, delta in (0,1), nu_hat in (0, 1/4]
// and rho >= 0.
SampleBound sufficient_samples_detail(double epsilon, double delta, double nu_hat,
                                      double rho);
std::uint64_t sufficient_samples(double epsilon, double delta, double nu_hat, double rho);

// (2 nu + 2 eps / 3) / eps^2 * (ln(2 rho / nu) + ln(1 / delta)).
double closed_form_samples(double epsilon, double delta, double nu_hat, double rho);

// Relative deviation radius at true value b:
//   sqrt(2 min(g(b), nu) L_b / m) + L_b / (3m),  L_b = ln((4/delta) min(rho/b, n))
// with min(rho/b, n) = n at b = 0.
double relative_deviation(double b, std::uint64_t m, double delta, double nu_hat,
                          double rho, std::uint64_t n);

struct Interval {
  double lower = 0.0;
  double upper = 1.0;
};

// Confidence interval for b from its estimate:
//   lower = min{x in [0, b~]: b~ <= x + d_r(x)}
//   upper = max{x in [b~, 1]: x <= b~ + d_r(x)}
// Located by a coarse scan followed by 200 bisection steps, then widened
// outward by 1e-10 and clamped to [0,1].
Interval invert_ci(double b_tilde, std::uint64_t m, double delta, double nu_hat,
                   double rho, std::uint64_t n);

// Bernstein bound on the average shortest-path internal length:
//   rho~ + sqrt((5/3)(D L/m)^2 + 2 D rho~ L/m) + 4 D L/(3m),  L = ln(1/delta)
// Throws IntegrityError if rho_tilde > D.
double rho_bound_bernstein(double rho_tilde, double diameter, std::uint64_t m, double delta);

// Empirical-Bernstein bound:
//   rho~ + sqrt(2 Lambda ln(2/delta) / m) + 7 D ln(2/delta) / (3m)
// Throws ParameterError when m < 2 or lambda < 0.
double rho_bound_empirical_bernstein(double rho_tilde, double lambda, double diameter,
                                     std::uint64_t m, double delta);

// Lambda = (m sum X^2 - (sum X)^2) / (m (m-1)), the streaming form of
// sum_{i<j} (X_i - X_j)^2 / (m (m-1)). Clamped at 0 against rounding.
double lambda_streaming(std::uint64_t m, double sum_x, double sum_x_sq);

}  // namespace bcapprox::bounds
