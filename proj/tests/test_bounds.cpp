#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "fg/bounds.hpp"
#include "fg/metric.hpp"
#include "fg/seqcomb.hpp"

using namespace fg;

namespace {
constexpr double kE = 2.718281828459045235360287471352662498;
}

TEST_CASE("lambda split") {
  // at n = e^e the inner logs collapse: lambda = e^(e-1)
  double n = std::exp(kE);
  CHECK(lambda_split(n) == doctest::Approx(std::exp(kE - 1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(lambda_split(2.0), std::domain_error);
  // monotone and below n/2 on a coarse scan
  double prev = lambda_split(100.0);
  for (double x = 110.0; x < 1e7; x *= 1.37) {
    double cur = lambda_split(x);
    CHECK(cur > prev);
    CHECK(cur < x / 2.0);
    prev = cur;
  }
}

TEST_CASE("induction ratio: two codings agree to 1e-12") {
  BoundParams p;
  p.d = 3;
  p.m = 3;
  for (double n = 50.0; n < 1e12; n *= 1.7) {
    double lam = n > kE ? lambda_split(n) : 0.0;
    if (!((n - lam) / p.dm() > 1.0)) continue;
    double a = induction_ratio(n, p);
    double b = induction_ratio_refactored(n, p);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)));
  }
  CHECK_THROWS_AS(induction_ratio(2.0, p), std::domain_error);
  CHECK_THROWS_AS(induction_ratio(30.0, p), std::domain_error);  // n' too small at d^m=27
}

TEST_CASE("induction ratio decays into the threshold regime") {
  BoundParams p;
  p.d = 3;
  p.m = 3;
  CHECK(induction_ratio(1e9, p) < 1.0);
  ThresholdReport rep = find_threshold(p, 1e12);
  CHECK(rep.threshold > 0);
  CHECK(rep.threshold <= 1'000'000'000'000ull);
  CHECK(rep.log_samples == 10000);
  CHECK(rep.integer_checks == 1000);
  // everything from the threshold on passes on the grid
  for (double x = static_cast<double>(rep.threshold); x < 1e12; x *= 2.3) {
    CHECK(induction_ratio(x, p) <= 1.0);
  }
  // a smaller tree power needs a smaller threshold
  BoundParams q;
  q.d = 3;
  q.m = 1;
  CHECK(find_threshold(q, 1e12).threshold <= rep.threshold);
}

TEST_CASE("concave majorant of sampled log F") {
  SUBCASE("constant F flattens") {
    std::map<double, double> samples;
    for (double n = 1; n <= 1024; n *= 2) samples[n] = 3.0;  // log F = 3
    PiecewiseLinear g = concave_majorant(samples);
    CHECK(g(1.0) >= 3.0);
    CHECK(g(1024.0) >= 3.0);
    // slopes decrease toward zero: the majorant flattens
    for (std::size_t i = 1; i < g.pieces(); ++i) CHECK(g.slope(i) < g.slope(i - 1));
    CHECK(g.slope(g.pieces() - 1) <= 3.0 / 512.0);
  }

  SUBCASE("F = e^sqrt(n) is dominated") {
    std::map<double, double> samples;
    for (double n = 1; n <= 1e6; n = std::ceil(n * 1.1)) samples[n] = std::sqrt(n);
    PiecewiseLinear g = concave_majorant(samples);
    for (const auto& [n, logf] : samples) CHECK(g(n) + 1e-9 >= logf);
    // discrete concavity on a uniform grid
    for (double n = 2; n + 2 <= 1e6; n *= 1.5) {
      double second = g(n + 2) - 2 * g(n + 1) + g(n);
      CHECK(second <= 1e-9);
    }
    // product inequality on random tuples, in log form
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> pick(1.0, 1e6);
    std::uniform_int_distribution<int> klen(2, 8);
    for (int trial = 0; trial < 100; ++trial) {
      int k = klen(rng);
      double sum = 0.0, lhs = 0.0;
      for (int i = 0; i < k; ++i) {
        double n = pick(rng);
        sum += n;
        lhs += g(n);
      }
      double rhs = k * g(sum / k);
      CHECK(lhs <= rhs + 1e-9 * std::abs(rhs));
    }
  }

  SUBCASE("exponential samples are rejected") {
    std::map<double, double> samples;
    for (double n = 1; n <= 4096; n *= 2) samples[n] = 2.0 * n;  // log F = 2n
    CHECK_THROWS_AS(concave_majorant(samples), std::domain_error);
  }
}

TEST_CASE("growth majorant branches") {
  BoundParams p;
  p.a = 0.5;
  p.b = 2.0;
  double c = BoundParams::cutoff_c();
  // frozen below the cutoff
  CHECK(log_growth_majorant(0.0, p) == log_growth_majorant(c, p));
  CHECK(log_growth_majorant(c / 2, p) == log_growth_majorant(c, p));
  CHECK(growth_majorant(10.0, p) >= 1.0);
  // log-concave above the cutoff: sampled second differences, keeping the
  // whole stencil on the smooth branch (the junction itself is a kink)
  for (double n = c * 1.01; n < 1e6; n *= 1.2) {
    double h = std::max(1.0, n * 1e-3);
    REQUIRE(n - h > c);
    double second =
        log_growth_majorant(n + h, p) - 2 * log_growth_majorant(n, p) + log_growth_majorant(n - h, p);
    CHECK(second <= 1e-12 * std::max(1.0, std::abs(log_growth_majorant(n, p))));
  }
}

TEST_CASE("sphere majorants") {
  // lam = n/2 with delta == 1: e^(n/2) * 2^(n/2 - 1)
  double n = 10.0;
  double expected = std::exp(5.0) * std::pow(2.0, 4.0);
  CHECK(few_factor_sphere_bound(n, 5.0, [](double) { return 1.0; }) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(few_factor_sphere_bound(10.0, 6.0, [](double) { return 1.0; }),
                  std::domain_error);

  // rate 1 collapses the long-product bound to the polynomial
  BoundParams p;
  p.d = 3;
  p.m = 1;
  double lam = 2.0;
  double poly = 3.0 * std::pow(1.0, 3) *
                ((n - lam) * (n - lam - 1) * (n - lam - 2)) / 6.0;
  CHECK(many_factor_sphere_bound(n, lam, p, 3.0, 1.0, 1.0) ==
        doctest::Approx(poly).epsilon(1e-12));
}

TEST_CASE("measured sphere split against the few-factor majorant") {
  // W<_2(n): elements of length n that are products of at most two
  // reduction-free factors with lengths summing to n; the displayed
  // majorant with the measured (monotone) delta stays above it.
  BallTable table = enumerate_ball(5);
  GrowthSeries gs = growth_series(table);
  ReductionFreeChecker checker(table);

  std::vector<std::vector<const BallEntry*>> by_len(6);
  for (const auto& [k, e] : table.entries) by_len[e.minlen].push_back(&e);

  auto delta_at = [&gs](double x) {
    // running maximum of the measured sphere counts, evaluated at ceil(x)
    int n = std::min<int>(static_cast<int>(std::ceil(x)), gs.max_len);
    std::uint64_t best = 0;
    for (int i = 0; i <= n; ++i) best = std::max(best, gs.delta[i]);
    return static_cast<double>(best);
  };

  for (int n = 4; n <= 5; ++n) {
    std::unordered_set<std::string> members;
    for (const auto* e : by_len[n]) {
      if (checker.check(e->rep, 3)) members.insert(canonical_key(e->rep).bytes);
    }
    for (int j = 1; j < n; ++j) {
      for (const auto* u : by_len[j]) {
        if (!checker.check(u->rep, 3)) continue;
        for (const auto* v : by_len[n - j]) {
          if (!checker.check(v->rep, 3)) continue;
          NormalWord prod = multiply(u->rep, v->rep);
          ElementKey k = canonical_key(prod);
          const BallEntry* pe = table.find(k);
          if (pe && pe->minlen == static_cast<std::uint32_t>(n)) members.insert(k.bytes);
        }
      }
    }
    double bound = few_factor_sphere_bound(n, 2.0, delta_at);
    CHECK(static_cast<double>(members.size()) <= bound);
  }
}

TEST_CASE("stabilizer constant helper") {
  BoundParams p;
  p.d = 3;
  p.m = 1;
  // (d^m + 1) * idx * gamma^(d^m) * (e/d^m)^(d^m)
  CHECK(stabilizer_constant_m(p, 3.0, 21.0) ==
        doctest::Approx(4.0 * 3.0 * std::pow(21.0, 3) * std::pow(kE / 3.0, 3)).epsilon(1e-12));
}

TEST_CASE("closed-form lower bound") {
  CHECK(growth_lower_bound(2.0) == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(growth_lower_bound(12.0) == doctest::Approx(1728.0).epsilon(1e-9));
  CHECK(std::log(3.0) / std::log(6.0) == doctest::Approx(0.6131).epsilon(1e-3));
  CHECK_THROWS_AS(growth_lower_bound(1.5), std::domain_error);

  // the enumerated gamma dominates the closed form on the exhausted range
  BallTable table = enumerate_ball(5);
  GrowthSeries gs = growth_series(table);
  for (int n = 2; n <= 5; ++n) {
    CHECK(static_cast<double>(gs.gamma[n]) >= growth_lower_bound(n));
  }
}
