#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

// Numeric side of the growth bounds: the split function lambda(n), the
// induction ratio f(n) whose eventual bound f <= 1 drives the upper
// bound, the concave majorant construction, the piecewise majorant F,
// the two sphere majorants, and the closed-form lower bound
// 12^((t/2)^(log 3 / log 6)).
//
// Everything is 64-bit floating point with natural logarithms. Claims
// are certified on explicit sampled ranges only; sampling policies are
// part of the reported results.

namespace fg {

struct BoundParams {
  int d = 3;       // tree arity
  int m = 3;       // level at which reduction-freeness stabilizes
  double a = 0.0;  // additive constant in the exponent of F
  double b = 1.0;  // multiplicative constant in the exponent of F
  double big_m = 0.0;

  // e^(e^2): below this the majorant F is frozen to a constant.
  static double cutoff_c();
  double dm() const;  // d^m
};

// lambda(n) = n log log n / log n, defined for n > e.
double lambda_split(double n);

// The three-term ratio f(n); f(n) <= 1 eventually. Defined for n > e
// with (n - lambda(n))/d^m > 1; throws std::domain_error otherwise.
double induction_ratio(double n, const BoundParams& p);

// Independent refactored coding of the same expression,
// f(n) = (log n / n)(1 + A log n)/(loglog n)^2
//      + A (n'/n)(log n/log n')(loglog n'/loglog n)^2, A = d^m,
// n' = (n - lambda(n))/A. Used as a cross-check oracle.
double induction_ratio_refactored(double n, const BoundParams& p);

struct ThresholdReport {
  std::uint64_t threshold = 0;  // smallest sampled N with f <= 1 beyond it
  double limit = 0;
  int log_samples = 0;      // size of the log-spaced grid
  int integer_checks = 0;   // consecutive integers verified from N on
  double first_valid = 0;   // smallest n where f is defined
};

// Finds the smallest grid point N such that f(n) <= 1 holds on every
// log-spaced sample in [N, limit] (10^4 samples) and on all integers in
// [N, N + 10^3]. Throws std::runtime_error when no such N exists below
// the limit.
ThresholdReport find_threshold(const BoundParams& p, double limit);

// Continuous piecewise-linear function given by breakpoints; linear
// continuation beyond the last breakpoint.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<double> xs, std::vector<double> slopes,
                  std::vector<double> intercepts);
  double operator()(double x) const;
  std::size_t pieces() const { return xs_.size(); }
  double slope(std::size_t i) const { return slopes_[i]; }
  double breakpoint(std::size_t i) const { return xs_[i]; }

 private:
  std::vector<double> xs_;  // ascending; segment i covers [xs_i, xs_{i+1})
  std::vector<double> slopes_;
  std::vector<double> intercepts_;
};

// Builds the concave piecewise-linear majorant of log F from samples
// (n -> log F(n)): slopes eps_i strictly decreasing, breakpoints n_i
// strictly increasing with n_1 = the first sample, delta_1 = 0 and
// delta_i = (eps_{i-1} - eps_i) n_i + delta_{i-1}. The result dominates
// log F on the samples and is concave, hence satisfies
// sum log G(n_i) <= k log G(mean). Throws std::domain_error when the
// samples are not subexponential (log F(n)/n does not decay).
PiecewiseLinear concave_majorant(const std::map<double, double>& log_samples);

// log of the two-branch majorant: A + B n (loglog n)^2 / log n above the
// cutoff c = e^(e^2), frozen to its value at c below.
double log_growth_majorant(double n, const BoundParams& p);
double growth_majorant(double n, const BoundParams& p);

// Sphere majorant for words made of few reduction-free factors:
// e^lam (n/lam)^(lam-1) delta(n/lam)^lam, with the measured delta
// supplied as a callback. Requires 0 < lam <= n/2.
double few_factor_sphere_bound(double n, double lam,
                               const std::function<double(double)>& delta_at);

// Sphere majorant for the remainder: p(n) rate^(n-lam) with
// p(n) = index_stab * K^(d^m) * binom(n-lam, d^m) (generalized binomial,
// a degree-d^m polynomial). Requires 0 < lam <= n/2.
double many_factor_sphere_bound(double n, double lam, const BoundParams& p,
                                double index_stab, double k_const, double rate);

// M = (d^m + 1) [G:Stab(m)] gamma(c)^(d^m) (e/d^m)^(d^m) for a
// user-supplied stabilizer index and measured gamma(c).
double stabilizer_constant_m(const BoundParams& p, double index_stab, double gamma_at_c);

// 12^((t/2)^(log 3/ log 6)) for t >= 2; throws std::domain_error below.
double growth_lower_bound(double t);
double log_growth_lower_bound(double t);

}  // namespace fg
