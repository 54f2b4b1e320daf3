#include "fg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fg {

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;

double loglog(double n) { return std::log(std::log(n)); }

}  // namespace

double BoundParams::cutoff_c() { return std::exp(kE * kE); }

double BoundParams::dm() const { return std::pow(static_cast<double>(d), m); }

double lambda_split(double n) {
  if (!(n > kE)) throw std::domain_error("lambda_split requires n > e");
  return n * loglog(n) / std::log(n);
}

double induction_ratio(double n, const BoundParams& p) {
  if (!(n > kE)) throw std::domain_error("induction_ratio requires n > e");
  double dm = p.dm();
  double lam = lambda_split(n);
  double np = (n - lam) / dm;
  if (!(np > 1.0)) throw std::domain_error("induction_ratio requires (n - lambda(n))/d^m > 1");
  double ll = loglog(n);
  double term1 = std::log(n) / (n * ll * ll);
  double term2 = dm * std::log(n) * std::log(n) / (n * ll * ll);
  double term3 = (n - lam) / n * (std::log(n) / std::log(np)) * (loglog(np) / ll) * (loglog(np) / ll);
  return term1 + term2 + term3;
}

double induction_ratio_refactored(double n, const BoundParams& p) {
  if (!(n > kE)) throw std::domain_error("induction_ratio requires n > e");
  double a = p.dm();
  double lam = lambda_split(n);
  double np = (n - lam) / a;
  if (!(np > 1.0)) throw std::domain_error("induction_ratio requires (n - lambda(n))/d^m > 1");
  double ll2 = loglog(n) * loglog(n);
  double first = (1.0 / ll2) * (std::log(n) / n) * (1.0 + a * std::log(n));
  double second = (loglog(np) * loglog(np) / ll2) * a * (np * std::log(n)) / (n * std::log(np));
  return first + second;
}

ThresholdReport find_threshold(const BoundParams& p, double limit) {
  if (!(limit > 1e3)) throw std::invalid_argument("find_threshold requires limit > 10^3");
  constexpr int kLogSamples = 10000;
  constexpr int kIntegerChecks = 1000;

  // Smallest integer where f is defined.
  double first_valid = 4.0;
  for (;;) {
    double lam = first_valid > kE ? lambda_split(first_valid) : -1.0;
    if (lam >= 0 && (first_valid - lam) / p.dm() > 1.0) break;
    first_valid += 1.0;
    if (first_valid > limit) throw std::runtime_error("induction ratio undefined up to the limit");
  }

  std::vector<double> grid(kLogSamples);
  double ratio = std::log(limit / first_valid) / (kLogSamples - 1);
  for (int i = 0; i < kLogSamples; ++i) grid[i] = first_valid * std::exp(ratio * i);

  int last_violation = -1;
  for (int i = 0; i < kLogSamples; ++i) {
    if (induction_ratio(grid[i], p) > 1.0) last_violation = i;
  }

  for (int start = last_violation + 1; start < kLogSamples; ++start) {
    auto n0 = static_cast<std::uint64_t>(std::ceil(grid[start]));
    bool ok = true;
    std::uint64_t bad = 0;
    for (std::uint64_t k = 0; k <= kIntegerChecks; ++k) {
      if (induction_ratio(static_cast<double>(n0 + k), p) > 1.0) {
        ok = false;
        bad = n0 + k;
        break;
      }
    }
    if (ok) {
      return ThresholdReport{n0, limit, kLogSamples, kIntegerChecks, first_valid};
    }
    // skip grid points below the found violation
    while (start + 1 < kLogSamples && grid[start + 1] <= static_cast<double>(bad)) ++start;
  }
  throw std::runtime_error("no threshold below the limit");
}

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> slopes,
                                 std::vector<double> intercepts)
    : xs_(std::move(xs)), slopes_(std::move(slopes)), intercepts_(std::move(intercepts)) {
  if (xs_.empty() || xs_.size() != slopes_.size() || xs_.size() != intercepts_.size()) {
    throw std::invalid_argument("piecewise-linear pieces mismatch");
  }
}

double PiecewiseLinear::operator()(double x) const {
  if (x < xs_.front()) x = xs_.front();
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  return slopes_[i] * x + intercepts_[i];
}

PiecewiseLinear concave_majorant(const std::map<double, double>& log_samples) {
  if (log_samples.size() < 2) throw std::invalid_argument("need at least two samples");
  std::vector<double> ns, s;  // s(n) = log F(n) / n
  ns.reserve(log_samples.size());
  for (const auto& [n, logf] : log_samples) {
    if (!(n > 0)) throw std::invalid_argument("sample points must be positive");
    ns.push_back(n);
    s.push_back(logf / n);
  }
  // Suffix maxima of s: the least admissible slope from each point on.
  std::vector<double> suffix(s.size());
  double run = -std::numeric_limits<double>::infinity();
  for (std::size_t i = s.size(); i-- > 0;) {
    run = std::max(run, s[i]);
    suffix[i] = run;
  }
  if (!(suffix.back() < suffix.front()) && suffix.front() > 1e-12) {
    throw std::domain_error("samples do not look subexponential: log F(n)/n does not decay");
  }

  std::vector<double> xs, slopes, intercepts;
  double delta = 0.0;
  double prev_eps = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    double eps = suffix[i];
    if (!xs.empty() && !(eps < prev_eps)) continue;  // same block, slope unchanged
    if (xs.empty()) {
      delta = 0.0;
    } else {
      delta = (prev_eps - eps) * ns[i] + delta;
    }
    xs.push_back(ns[i]);
    slopes.push_back(eps);
    intercepts.push_back(delta);
    prev_eps = eps;
  }
  return PiecewiseLinear(std::move(xs), std::move(slopes), std::move(intercepts));
}

double log_growth_majorant(double n, const BoundParams& p) {
  if (n < 0) throw std::domain_error("growth majorant requires n >= 0");
  double c = BoundParams::cutoff_c();
  double x = n >= c ? n : c;
  double ll = loglog(x);
  return p.a + p.b * x * ll * ll / std::log(x);
}

double growth_majorant(double n, const BoundParams& p) { return std::exp(log_growth_majorant(n, p)); }

double few_factor_sphere_bound(double n, double lam,
                               const std::function<double(double)>& delta_at) {
  if (!(lam > 0) || lam > n / 2) throw std::domain_error("requires 0 < lambda <= n/2");
  double d = delta_at(n / lam);
  return std::exp(lam) * std::pow(n / lam, lam - 1.0) * std::pow(d, lam);
}

namespace {

// Generalized binomial coefficient: product form, real upper argument.
double generalized_binomial(double x, int k) {
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= (x - i) / (i + 1);
  return acc;
}

}  // namespace

double many_factor_sphere_bound(double n, double lam, const BoundParams& p, double index_stab,
                                double k_const, double rate) {
  if (!(lam > 0) || lam > n / 2) throw std::domain_error("requires 0 < lambda <= n/2");
  int dm = static_cast<int>(p.dm());
  return index_stab * std::pow(k_const, dm) * generalized_binomial(n - lam, dm) *
         std::pow(rate, n - lam);
}

double stabilizer_constant_m(const BoundParams& p, double index_stab, double gamma_at_c) {
  double dm = p.dm();
  return (dm + 1.0) * index_stab * std::pow(gamma_at_c, dm) * std::pow(kE / dm, dm);
}

double growth_lower_bound(double t) { return std::exp(log_growth_lower_bound(t)); }

double log_growth_lower_bound(double t) {
  if (!(t >= 2.0)) throw std::domain_error("lower bound requires t >= 2");
  double expo = std::pow(t / 2.0, std::log(3.0) / std::log(6.0));
  return expo * std::log(12.0);
}

}  // namespace fg
