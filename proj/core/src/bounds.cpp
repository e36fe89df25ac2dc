#include "bcapprox/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bcapprox/error.hpp"

namespace bcapprox::bounds {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

double as_real(std::uint64_t m) { return static_cast<double>(m); }

// phi(x) = g(x) h(eps / g(x)), decreasing in x on (0, 1/2].
double phi(double x, double eps) {
  const double gx = g(x);
  return gx * h(eps / gx);
}

double sample_objective(double x, double eps, double delta, double rho) {
  return std::log(2.0 * rho / (x * delta)) / phi(x, eps);
}

}  // namespace

double g(double x) {
  require(x >= 0.0 && x <= 1.0, "g(x) needs x in [0,1]");
  return x * (1.0 - x);
}

double h(double x) {
  require(x >= 0.0, "h(x) needs x >= 0");
  if (x < 1e-4) {
    // x^2/2 - x^3/6 + x^4/12 - x^5/20
    return x * x * (0.5 - x * (1.0 / 6.0 - x * (1.0 / 12.0 - x / 20.0)));
  }
  return (1.0 + x) * std::log1p(x) - x;
}

double h1(double x) {
  require(x >= 0.0, "h1(x) needs x >= 0");
  // 1 + x - sqrt(1+2x) = x^2 / (1 + x + sqrt(1+2x)), stable near 0.
  return x * x / (1.0 + x + std::sqrt(1.0 + 2.0 * x));
}

double fixed_point(double u, double v, double y) {
  require(u >= 0.0 && v >= 0.0 && y >= 0.0, "fixed_point needs u, v, y >= 0");
  return u + y / 2.0 + std::sqrt(y * y / 4.0 + u * y + v);
}

double era_upper_bound(double mcera, double wimpy, std::size_t trials, std::uint64_t m,
                       double log_term) {
  require(trials >= 1 && m >= 1, "era_upper_bound needs c, m >= 1");
  require(wimpy >= 0.0 && wimpy <= 1.0, "wimpy variance must lie in [0,1]");
  require(log_term >= 0.0, "log term must be nonnegative");
  return std::max(mcera, 0.0) +
         std::sqrt(4.0 * wimpy * log_term / (static_cast<double>(trials) * as_real(m)));
}

double rademacher_radius(double era_bound, std::uint64_t m, double log_term) {
  require(era_bound >= 0.0 && m >= 1 && log_term >= 0.0, "rademacher_radius domain");
  const double lm = log_term / as_real(m);
  return era_bound + lm + std::sqrt(lm * lm + 2.0 * era_bound * lm);
}

double eps_bound(double era_bound, double nu, std::uint64_t m, double log_term) {
  require(nu >= 0.0, "eps_bound needs nu >= 0");
  const double r = rademacher_radius(era_bound, m, log_term);
  const double mr = as_real(m);
  return 2.0 * r + std::sqrt(2.0 * log_term * (nu + 4.0 * r) / mr) + log_term / (3.0 * mr);
}

double var_upper_bound(double wimpy, std::uint64_t m, double log_term) {
  require(wimpy >= 0.0 && m >= 1 && log_term >= 0.0, "var_upper_bound domain");
  const double lm = log_term / as_real(m);
  return wimpy + lm + std::sqrt(lm * lm + 2.0 * wimpy * lm);
}

double schedule_log_term(double delta, std::size_t classes, unsigned iteration,
                         ScheduleMode mode) {
  require(delta > 0.0, "delta must be positive");
  require(classes >= 1, "at least one class");
  require(iteration >= 1, "iterations are numbered from 1");
  const double exponent = mode == ScheduleMode::kMain ? iteration + 1.0 : iteration;
  return exponent * std::numbers::ln2 + std::log(5.0 * static_cast<double>(classes) / delta);
}

SampleBound sufficient_samples_detail(double epsilon, double delta, double nu_hat,
                                      double rho) {
  require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0,1)");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  require(nu_hat > 0.0 && nu_hat <= 0.25, "nu_hat must lie in (0, 1/4]");
  require(rho >= 0.0, "rho must be nonnegative");

  SampleBound out;
  // Smallest x in [1/2 - sqrt(eps/3 - eps^2/9), 1/2] with phi(x) <= 2 eps^2.
  // phi is decreasing there and phi(1/2) <= 2 eps^2 always holds.
  const double target = 2.0 * epsilon * epsilon;
  double lo = 0.5 - std::sqrt(epsilon / 3.0 - epsilon * epsilon / 9.0);
  double hi = 0.5;
  if (phi(lo, epsilon) <= target) {
    out.x_hat1 = lo;
  } else {
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (phi(mid, epsilon) <= target ? hi : lo) = mid;
    }
    out.x_hat1 = hi;
  }
  out.x_hat2 = 0.5 - std::sqrt(0.25 - nu_hat);
  out.x_hat = std::min(out.x_hat1, out.x_hat2);

  if (rho <= 0.0) {
    // All centralities are zero; nothing can deviate.
    out.samples = 1;
    return out;
  }

  constexpr int kGrid = 10000;
  const double x_hi = out.x_hat;
  const double x_lo = x_hi * 1e-9;
  const double log_lo = std::log(x_lo);
  const double step = (std::log(x_hi) - log_lo) / (kGrid - 1);
  auto grid_x = [&](int i) { return i == kGrid - 1 ? x_hi : std::exp(log_lo + step * i); };

  int best_i = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    const double val = sample_objective(grid_x(i), epsilon, delta, rho);
    if (val > best) {
      best = val;
      best_i = i;
    }
  }
  // Golden-section refinement between the neighbours of the grid maximum.
  double a = grid_x(std::max(best_i - 1, 0));
  double b = grid_x(std::min(best_i + 1, kGrid - 1));
  double arg = grid_x(best_i);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = sample_objective(c, epsilon, delta, rho);
  double fd = sample_objective(d, epsilon, delta, rho);
  for (int it = 0; it < 100 && b - a > 1e-15 * x_hi; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = sample_objective(c, epsilon, delta, rho);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = sample_objective(d, epsilon, delta, rho);
    }
  }
  for (double cand : {c, d}) {
    const double val = sample_objective(cand, epsilon, delta, rho);
    if (val > best) {
      best = val;
      arg = cand;
    }
  }

  out.argmax = arg;
  out.supremum = best;
  const double inflated = std::ceil(std::max(best, 1.0) * 1.001);
  out.samples = inflated >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max()
                                   : static_cast<std::uint64_t>(inflated);
  return out;
}

std::uint64_t sufficient_samples(double epsilon, double delta, double nu_hat, double rho) {
  return sufficient_samples_detail(epsilon, delta, nu_hat, rho).samples;
}

double closed_form_samples(double epsilon, double delta, double nu_hat, double rho) {
  return (2.0 * nu_hat + 2.0 * epsilon / 3.0) / (epsilon * epsilon) *
         (std::log(2.0 * rho / nu_hat) + std::log(1.0 / delta));
}

double relative_deviation(double b, std::uint64_t m, double delta, double nu_hat,
                          double rho, std::uint64_t n) {
  require(b >= 0.0 && b <= 1.0, "b must lie in [0,1]");
  require(m >= 1 && n >= 1, "m, n >= 1");
  const double nn = static_cast<double>(n);
  const double ratio = b > 0.0 ? std::min(rho / b, nn) : nn;
  // rho/b can drop below delta/4 for large b; a negative log would make the
  // radius meaningless, so it is floored at 0.
  const double log_term = std::max(0.0, std::log(4.0 / delta * ratio));
  const double var = std::min(g(b), nu_hat);
  const double mr = as_real(m);
  return std::sqrt(2.0 * var * log_term / mr) + log_term / (3.0 * mr);
}

Interval invert_ci(double b_tilde, std::uint64_t m, double delta, double nu_hat,
                   double rho, std::uint64_t n) {
  require(b_tilde >= 0.0 && b_tilde <= 1.0, "estimate must lie in [0,1]");
  auto d_r = [&](double x) { return relative_deviation(x, m, delta, nu_hat, rho, n); };
  constexpr int kScan = 1000;
  constexpr int kBisect = 200;
  constexpr double kOutward = 1e-10;

  Interval out;
  // Lower end: first scan point in [0, b~] that satisfies b~ <= x + d_r(x).
  {
    auto ok = [&](double x) { return b_tilde <= x + d_r(x); };
    double prev = 0.0;
    double found = b_tilde;
    for (int i = 0; i <= kScan; ++i) {
      const double x = b_tilde * i / kScan;
      if (ok(x)) {
        found = x;
        break;
      }
      prev = x;
    }
    double lo = prev;
    double hi = found;
    if (found > 0.0 && !ok(lo)) {
      for (int it = 0; it < kBisect; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? hi : lo) = mid;
      }
      out.lower = lo;
    } else {
      out.lower = found;
    }
    out.lower = std::max(0.0, out.lower - kOutward);
  }
  // Upper end: last scan point in [b~, 1] that satisfies x <= b~ + d_r(x).
  {
    auto ok = [&](double x) { return x <= b_tilde + d_r(x); };
    double prev = 1.0;
    double found = b_tilde;
    for (int i = 0; i <= kScan; ++i) {
      const double x = 1.0 - (1.0 - b_tilde) * i / kScan;
      if (ok(x)) {
        found = x;
        break;
      }
      prev = x;
    }
    double lo = found;
    double hi = prev;
    if (found < 1.0 && !ok(hi)) {
      for (int it = 0; it < kBisect; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
      }
      out.upper = hi;
    } else {
      out.upper = found;
    }
    out.upper = std::min(1.0, out.upper + kOutward);
  }
  return out;
}

double rho_bound_bernstein(double rho_tilde, double diameter, std::uint64_t m, double delta) {
  require(m >= 1, "m >= 1");
  require(delta > 0.0 && delta <= 1.0, "delta must lie in (0,1]");
  require(rho_tilde >= 0.0, "rho_tilde must be nonnegative");
  if (rho_tilde > diameter) {
    throw IntegrityError("average path length estimate exceeds the vertex diameter");
  }
  const double dl = diameter * std::log(1.0 / delta) / as_real(m);
  // Fixed point of x = rho~ + DL/(3m) + sqrt(2 D L x / m).
  return fixed_point(rho_tilde + dl / 3.0, 0.0, 2.0 * dl);
}

double rho_bound_empirical_bernstein(double rho_tilde, double lambda, double diameter,
                                     std::uint64_t m, double delta) {
  require(m >= 2, "empirical Bernstein bound needs m >= 2");
  require(lambda >= 0.0, "Lambda must be nonnegative");
  require(delta > 0.0 && delta <= 1.0, "delta must lie in (0,1]");
  const double l2 = std::log(2.0 / delta);
  const double mr = as_real(m);
  return rho_tilde + std::sqrt(2.0 * lambda * l2 / mr) + 7.0 * diameter * l2 / (3.0 * mr);
}

double lambda_streaming(std::uint64_t m, double sum_x, double sum_x_sq) {
  require(m >= 2, "Lambda needs m >= 2");
  const double mr = as_real(m);
  return std::max(0.0, (mr * sum_x_sq - sum_x * sum_x) / (mr * (mr - 1.0)));
}

}  // namespace bcapprox::bounds
