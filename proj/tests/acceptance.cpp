// Acceptance suite: every criterion prints one pass/fail line; the exit
// code is the number of failed criteria. Criteria that encode textbook
// anchor values falsified by exhaustive enumeration are kept as stated
// and fail with full diagnostics rather than being loosened.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "fg/bounds.hpp"
#include "fg/element_key.hpp"
#include "fg/metric.hpp"
#include "fg/reports.hpp"
#include "fg/sampling.hpp"
#include "fg/seqcomb.hpp"
#include "fg/torsion.hpp"
#include "fg/tree_group.hpp"
#include "fg/word.hpp"

using namespace fg;

namespace {

int failures = 0;

void line(int criterion, bool ok, const std::string& what, const std::string& detail,
          double seconds) {
  std::printf("[%s] criterion %2d: %s%s%s  (%.2fs)\n", ok ? "pass" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename F>
void criterion(int number, const std::string& what, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  line(number, ok, what, detail, std::chrono::duration<double>(t1 - t0).count());
}

unsigned workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

int main() {
  std::printf("acceptance suite: exhaustive desk-scale checks\n");

  // Shared tables.
  auto t0 = std::chrono::steady_clock::now();
  BallTable ball9 = enumerate_ball(9, workers());
  auto t1 = std::chrono::steady_clock::now();
  std::printf("radius-9 ball: %zu elements (%.1fs)\n", ball9.entries.size(),
              std::chrono::duration<double>(t1 - t0).count());
  GrowthSeries gs9 = growth_series(ball9);
  auto t2 = std::chrono::steady_clock::now();
  std::printf("growth series done (%.1fs)\n", std::chrono::duration<double>(t2 - t1).count());
  std::fflush(stdout);

  criterion(1, "generator relations: a^3 = t^3 = 1 and all six t_c^e have order 3",
            [&](std::string&) {
              bool ok = is_identity(power(NormalWord::rotation(Rot(1)), 3)) &&
                        is_identity(power(normalize("t"), 3));
              OrderResult ra = order_of(NormalWord::rotation(Rot(1)), 10);
              ok = ok && ra.kind == OrderResult::Kind::Finite && ra.order == 3;
              for (int c = 0; c < 3 && ok; ++c) {
                for (int e = 1; e <= 2 && ok; ++e) {
                  OrderResult r = order_of(NormalWord::syllable(Rot(c), e), 10);
                  ok = r.kind == OrderResult::Kind::Finite && r.order == 3;
                }
              }
              return ok;
            });

  criterion(2, "beta(2) = 12 from enumeration at radius 2", [&](std::string& detail) {
    std::uint64_t ball = gs9.beta[2];
    std::uint64_t sphere = gs9.beta[2] - gs9.beta[1];
    std::ostringstream os;
    os << "measured #(B(2) in commutator subgroup) = " << ball << " (identity + " << sphere
       << " two-syllable elements t^{+-a^i} t^{-+a^j}, pairwise distinct by bisimulation and "
          "depth-8 action); the quoted 12 counts the nontrivial elements only";
    detail = os.str();
    return ball == 12;
  });

  criterion(3, "gamma(0) = 3 and gamma(1) = 21 with an independent dedup oracle",
            [&](std::string& detail) {
              // oracle first: pairwise bisimulation over all 21 candidates
              std::vector<NormalWord> candidates;
              for (int tau = 0; tau < 3; ++tau) candidates.push_back(NormalWord::rotation(Rot(tau)));
              for (int c = 0; c < 3; ++c) {
                for (int e = 1; e <= 2; ++e) {
                  for (int tau = 0; tau < 3; ++tau) {
                    candidates.push_back(NormalWord::syllable(Rot(c), e, Rot(tau)));
                  }
                }
              }
              std::size_t classes = 0;
              for (std::size_t i = 0; i < candidates.size(); ++i) {
                bool fresh = true;
                for (std::size_t j = 0; j < i && fresh; ++j) {
                  fresh = !equal(candidates[i], candidates[j]);
                }
                if (fresh) ++classes;
              }
              std::set<std::string> sigs;
              for (const auto& w : candidates) sigs.insert(action_signature(w, 6));
              std::ostringstream os;
              os << "oracle classes = " << classes << ", depth-6 signatures = " << sigs.size()
                 << ", gamma = (" << gs9.gamma[0] << ", " << gs9.gamma[1] << ")";
              detail = os.str();
              return classes == 21 && sigs.size() == 21 && gs9.gamma[0] == 3 && gs9.gamma[1] == 21;
            });

  criterion(4,
            "triple injection on (B(2) cap G')^3: 1728 pairwise-distinct images of length <= 12",
            [&](std::string& detail) {
              std::vector<NormalWord> gp;
              for (const auto& [k, e] : ball9.entries) {
                if (e.minlen <= 2 && in_commutator_subgroup(e.rep)) gp.push_back(e.rep);
              }
              std::sort(gp.begin(), gp.end());
              std::unordered_map<ElementKey, int, ElementKeyHash> images;
              std::map<std::size_t, int> lengths;
              std::size_t total = 0;
              bool all_gprime = true;
              for (const auto& x : gp) {
                for (const auto& y : gp) {
                  for (const auto& z : gp) {
                    NormalWord im = triple_inject(x, y, z);
                    images[canonical_key(im)] += 1;
                    lengths[im.length()] += 1;
                    all_gprime = all_gprime && in_commutator_subgroup(im);
                    ++total;
                  }
                }
              }
              std::size_t max_len = lengths.empty() ? 0 : lengths.rbegin()->first;
              std::size_t over12 = 0;
              for (const auto& [len, count] : lengths) {
                if (len > 12) over12 += static_cast<std::size_t>(count);
              }
              std::ostringstream os;
              os << "inputs " << gp.size() << ", triples " << total << ", distinct "
                 << images.size() << ", all in G' = " << (all_gprime ? "yes" : "no")
                 << ", max image length " << max_len << " (" << over12
                 << " above 12; minimality certified by exhaustive bounded search, so the "
                    "images verify beta(6n+3) >= beta(n)^3 rather than the quoted 6n)";
              detail = os.str();
              return images.size() == total && all_gprime && images.size() == 1728 && over12 == 0;
            });

  criterion(5, "level-1 reduction characterization, exhaustive to length 6",
            [&](std::string& detail) {
              LemmaReport r = run_mot_sans_red(ball9, 6);
              detail = "tested " + std::to_string(r.tested) + " elements, violations " +
                       std::to_string(r.violations.size());
              return r.ok() && r.tested >= 20805;
            });

  criterion(6, "reduction-freeness stabilizes: level 3 implies level 6, to length 6",
            [&](std::string& detail) {
              LemmaReport r = run_structure_i(ball9, 6);
              detail = "tested " + std::to_string(r.tested) + " elements, violations " +
                       std::to_string(r.violations.size());
              return r.ok();
            });

  criterion(7, "reduction-free sphere counts delta(1..9) stay within the n <= 5 maximum",
            [&](std::string& detail) {
              std::uint64_t cap = 0;
              for (int n = 1; n <= 5; ++n) cap = std::max(cap, gs9.delta[n]);
              bool ok = true;
              std::ostringstream os;
              os << "delta =";
              for (int n = 1; n <= 9; ++n) {
                os << " " << gs9.delta[n];
                if (gs9.delta[n] > cap) ok = false;
              }
              os << "; calibrated maximum over n <= 5 is " << cap
                 << " (the counts still grow on the exhausted range; the boundedness "
                    "argument only applies beyond length 21)";
              detail = os.str();
              return ok;
            });

  criterion(8, "pivot relations and the partial-sum transform, exhaustive to length 12 plus "
               "1000 seeded words",
            [&](std::string& detail) {
              LemmaReport eq = run_equiv_suites(12);
              LemmaReport rel = run_rel123(12, 1000, 0);
              detail = "transform " + std::to_string(eq.tested) + " sequences, relations " +
                       std::to_string(rel.tested) + " words; violations " +
                       std::to_string(eq.violations.size() + rel.violations.size());
              return eq.ok() && rel.ok();
            });

  criterion(9, "deep-reduction family: 100 members of length 23..40 all reduce within 2 levels",
            [&](std::string& detail) {
              LemmaReport r = run_words_not_in_i(100, 23, 40, 0);
              detail = "tested " + std::to_string(r.tested) + ", violations " +
                       std::to_string(r.violations.size());
              return r.ok() && r.tested == 100;
            });

  criterion(10, "induction ratio: threshold below 10^12 with f <= 1 on the tail samples",
            [&](std::string& detail) {
              BoundParams p;
              p.d = 3;
              p.m = 3;
              ThresholdReport rep = find_threshold(p, 1e12);
              bool ok = rep.threshold <= 1'000'000'000'000ull;
              // re-verify on a fresh grid over [N, 10^12] plus the integer scan
              double n0 = static_cast<double>(rep.threshold);
              for (int i = 0; i < 10000 && ok; ++i) {
                double x = n0 * std::exp(std::log(1e12 / n0) * i / 9999.0);
                ok = induction_ratio(x, p) <= 1.0;
              }
              for (std::uint64_t k = 0; k <= 1000 && ok; ++k) {
                ok = induction_ratio(static_cast<double>(rep.threshold + k), p) <= 1.0;
              }
              detail = "N = " + std::to_string(rep.threshold);
              return ok;
            });

  criterion(11, "concave majorant dominates the subexponential profile to 10^6",
            [&](std::string& detail) {
              BoundParams p;  // a = 0, b = 1
              p.a = 0.0;
              p.b = 1.0;
              // sample the displayed profile n (loglog n)^2 / log n where defined
              std::map<double, double> samples;
              for (double n = 4; n <= 1000; n += 1) {
                samples[n] = n * std::pow(std::log(std::log(n)), 2) / std::log(n);
              }
              for (double n = 1000; n <= 1e6; n *= 1.01) {
                double x = std::floor(n);
                samples[x] = x * std::pow(std::log(std::log(x)), 2) / std::log(x);
              }
              PiecewiseLinear g = concave_majorant(samples);
              bool ok = true;
              for (const auto& [n, logf] : samples) {
                if (g(n) + 1e-9 * std::max(1.0, std::abs(logf)) < logf) ok = false;
              }
              // discrete concavity of the construction
              for (std::size_t i = 2; i < g.pieces() && ok; ++i) {
                ok = g.slope(i) < g.slope(i - 1);
              }
              // product inequality on 100 seeded tuples, in log form
              std::mt19937_64 rng(0);
              std::uniform_real_distribution<double> pick(4.0, 1e6);
              std::uniform_int_distribution<int> klen(2, 8);
              for (int trial = 0; trial < 100 && ok; ++trial) {
                int k = klen(rng);
                double sum = 0, lhs = 0;
                for (int i = 0; i < k; ++i) {
                  double n = pick(rng);
                  sum += n;
                  lhs += g(n);
                }
                double rhs = k * g(sum / k);
                ok = lhs <= rhs + 1e-9 * std::abs(rhs);
              }
              detail = std::to_string(samples.size()) + " samples, " + std::to_string(g.pieces()) +
                       " linear pieces";
              return ok;
            });

  criterion(12, "infinite-order certificate for the mixed generator product",
            [&](std::string& detail) {
              NormalWord at = normalize("at");
              auto cert = infinite_order_certificate(at, 100);
              bool ok = cert.has_value() && cert->k == 3 && cert->j >= 1 && cert->j < 3;
              if (ok) {
                NormalWord cube = power(at, 3);
                ok = cube.tail().is_zero() && equal(section(cube, cert->vertex), power(at, cert->j));
              }
              NormalWord acc;
              for (int k = 1; k <= 100 && ok; ++k) {
                acc = multiply(acc, at);
                ok = !is_identity(acc);
              }
              if (cert) {
                detail = "k = " + std::to_string(cert->k) + ", vertex [" + cert->vertex.str() +
                         "], j = " + std::to_string(cert->j) + ", all powers to 100 nontrivial";
              }
              return ok;
            });

  criterion(13, "branch embedding places 100 seeded commutator elements at the first subtree",
            [&](std::string& detail) {
              LemmaReport r = run_psi_embedding(0, 100, 4);
              detail = "tested " + std::to_string(r.tested) + ", violations " +
                       std::to_string(r.violations.size());
              return r.ok() && r.tested == 100;
            });

  criterion(14, "bisimulation equality coincides with depth-8 action on the radius-5 ball",
            [&](std::string& detail) {
              // sweep every normal word of <= 5 syllables: keys and
              // depth-8 signatures must determine each other
              std::unordered_map<std::string, ElementKey> sig_to_key;
              std::unordered_map<ElementKey, std::string, ElementKeyHash> key_to_sig;
              std::size_t words = 0, elements = 0;
              bool ok = true;
              std::vector<Syllable> prefix;
              std::function<void(int)> gen = [&](int left) {
                for (int tau = 0; tau < 3; ++tau) {
                  NormalWord w(prefix, Rot(tau));
                  ++words;
                  ElementKey k = canonical_key(w);
                  std::string sig = action_signature(w, 8);
                  auto [it1, fresh1] = key_to_sig.emplace(k, sig);
                  if (!fresh1 && it1->second != sig) ok = false;
                  auto [it2, fresh2] = sig_to_key.emplace(sig, k);
                  if (!fresh2 && !(it2->second == k)) ok = false;
                  if (fresh1) ++elements;
                }
                if (left == 0) return;
                int last = prefix.empty() ? -1 : prefix.back().index;
                for (int c = 0; c < 3 && ok; ++c) {
                  if (c == last) continue;
                  for (int e = 1; e <= 2; ++e) {
                    prefix.push_back(
                        Syllable{static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(e)});
                    gen(left - 1);
                    prefix.pop_back();
                  }
                }
              };
              gen(5);
              std::ostringstream os;
              os << words << " words, " << elements << " elements, " << sig_to_key.size()
                 << " distinct depth-8 actions";
              detail = os.str();
              return ok && elements == sig_to_key.size() && elements == gs9.gamma[5];
            });

  std::printf("%d of 14 criteria failed\n", failures);
  return failures;
}
