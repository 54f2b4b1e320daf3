#include "fg/seqcomb.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "fg/tree_group.hpp"

namespace fg {

IndexSeq index_seq(const NormalWord& w) {
  IndexSeq c;
  c.values.reserve(w.length());
  for (const auto& s : w.syllables()) c.values.push_back(s.index);
  return c;
}

ExpSeq exp_seq(const NormalWord& w) {
  ExpSeq g;
  g.values.reserve(w.length());
  for (const auto& s : w.syllables()) g.values.push_back(s.exp);
  return g;
}

namespace {

// Letter of the pivot pattern (translate 0) at position p relative to the
// pivot: |p| mod 3. Descending toward the pivot on the left, ascending
// away on the right.
inline int pattern_letter(long long p) { return static_cast<int>((p < 0 ? -p : p) % 3); }

}  // namespace

bool in_pivot_pattern(const IndexSeq& c) {
  std::size_t n = c.values.size();
  if (n <= 1) return true;
  // Windows of length n of any translate start anywhere in
  // [-(n+2), 3]: left of that range every window is a pure descending
  // factor already covered, right of it a pure ascending one.
  long long lo = -static_cast<long long>(n) - 2;
  for (int sigma = 0; sigma < 3; ++sigma) {
    for (long long start = lo; start <= 3; ++start) {
      bool match = true;
      for (std::size_t i = 0; i < n && match; ++i) {
        match = (pattern_letter(start + static_cast<long long>(i)) + sigma) % 3 == c.values[i];
      }
      if (match) return true;
    }
  }
  return false;
}

bool in_step_pattern(const ExpSeq& g) {
  bool seen_two = false;
  for (auto v : g.values) {
    if (v != 1 && v != 2) return false;
    if (v == 2) seen_two = true;
    if (v == 1 && seen_two) return false;
  }
  return true;
}

IndexSeq negated_partial_sums(const ExpSeq& s) {
  IndexSeq out;
  out.values.reserve(s.values.size());
  int acc = 0;
  for (auto v : s.values) {
    acc = (acc + v) % 3;
    out.values.push_back(static_cast<std::uint8_t>((3 - acc) % 3));
  }
  return out;
}

bool in_sigma_step_pattern(const ExpSeq& s) { return in_pivot_pattern(negated_partial_sums(s)); }

PivotInfo pivot_of_index_seq(const IndexSeq& c) {
  if (!in_pivot_pattern(c)) throw std::domain_error("sequence is not a pivot-pattern factor");
  std::size_t n = c.values.size();
  PivotInfo p;
  if (n <= 1) return p;  // smallest valid position
  // Ascending prefix => pivot 1; otherwise the descent run ends at the
  // pivot. Steps are +-1 mod 3 since adjacent letters differ.
  std::size_t k = 1;
  while (k < n && (c.values[k - 1] + 2) % 3 == c.values[k]) ++k;  // descending steps
  if (k == 1) {
    p.position = 1;
    p.kind = PivotInfo::Kind::LeftEnd;
  } else if (k == n) {
    p.position = n;
    p.kind = PivotInfo::Kind::RightEnd;
  } else {
    p.position = k;
    p.kind = PivotInfo::Kind::Interior;
  }
  return p;
}

PivotInfo pivot_of_exp_seq(const ExpSeq& g) {
  if (!in_step_pattern(g)) throw std::domain_error("sequence is not a step-pattern factor");
  std::size_t n = g.values.size();
  PivotInfo p;
  if (n == 0) return p;
  std::size_t ones = 0;
  while (ones < n && g.values[ones] == 1) ++ones;
  if (ones == 0) {
    p.position = 1;
    p.kind = PivotInfo::Kind::LeftEnd;
  } else if (ones == n) {
    p.position = n;
    p.kind = PivotInfo::Kind::RightEnd;
  } else {
    p.position = ones;
    p.kind = PivotInfo::Kind::Interior;
  }
  return p;
}

ExpSeq pivot_section_exp_seq(const NormalWord& w) {
  IndexSeq c = index_seq(w);
  PivotInfo pv = pivot_of_index_seq(c);  // throws outside the pattern
  std::size_t n = w.length();
  std::size_t m = pv.position;
  const auto& g = w.syllables();

  ExpSeq out;
  // Left positions congruent to m-1 mod 3 up to m-1, then right positions
  // congruent to m+1 mod 3 from m+1 on; positions are 1-based.
  std::vector<std::size_t> pos;
  for (std::size_t p = (m >= 1 ? ((m - 1) % 3 == 0 ? 3 : (m - 1) % 3) : 1); p + 1 <= m; p += 3) {
    pos.push_back(p);
  }
  std::size_t left_count = pos.size();
  for (std::size_t p = m + 1; p <= n; p += 3) pos.push_back(p);

  bool merge = m > 2 && m + 1 < n && left_count > 0 && pos.size() > left_count &&
               pos[left_count - 1] == m - 1 && pos[left_count] == m + 1;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    int v = g[pos[i] - 1].exp;
    if (merge && i == left_count - 1) {
      v = (v + g[pos[i + 1] - 1].exp) % 3;
      out.values.push_back(static_cast<std::uint8_t>(v));
      ++i;  // skip the merged partner
      continue;
    }
    out.values.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

bool word_reduction_free_level1(const NormalWord& w) {
  IndexSeq c = index_seq(w);
  if (!in_pivot_pattern(c)) return false;
  std::size_t n = w.length();
  if (n == 0) return true;
  PivotInfo pv = pivot_of_index_seq(c);
  std::size_t m = pv.position;
  // The pivot-adjacent exponents must agree exactly when both flanking
  // positions m-2 and m+2 exist (otherwise the section word loses its
  // separating t-letters and nothing can merge): 2 < m <= n-2.
  if (pv.kind == PivotInfo::Kind::Interior && 2 < m && m + 2 <= n) {
    return w.syllables()[m - 2].exp == w.syllables()[m].exp;  // gamma_{m-1} == gamma_{m+1}
  }
  return true;
}

bool word_reduction_free(const NormalWord& w, int depth) {
  if (depth <= 0) return true;
  WreathDecomp d = decompose(w);
  std::size_t total = 0;
  for (const auto& s : d.sections) total += s.length();
  if (total != w.length()) return false;
  for (const auto& s : d.sections) {
    if (!word_reduction_free(s, depth - 1)) return false;
  }
  return true;
}

bool ReductionFreeChecker::check(const NormalWord& g, int depth) {
  if (depth <= 0) return true;
  ElementKey key = canonical_key(g);
  auto it = memo_.find(MemoKey{key, depth});
  if (it != memo_.end()) return it->second;
  const BallEntry* entry = table_.find(key);
  if (!entry) throw std::out_of_range("element outside the exhausted ball radius");
  WreathDecomp d = decompose(entry->rep);
  std::size_t total = 0;
  bool ok = true;
  std::array<const BallEntry*, 3> sub{};
  for (int i = 0; i < 3; ++i) {
    sub[i] = table_.find(canonical_key(d.sections[i]));
    if (!sub[i]) throw std::out_of_range("section outside the exhausted ball radius");
    total += sub[i]->minlen;
  }
  ok = total == entry->minlen;
  for (int i = 0; ok && i < 3; ++i) ok = check(sub[i]->rep, depth - 1);
  memo_.emplace(MemoKey{std::move(key), depth}, ok);
  return ok;
}

bool element_reduction_free(const NormalWord& g, int depth, const BallTable& table) {
  ReductionFreeChecker checker(table);
  return checker.check(g, depth);
}

std::vector<NormalWord> deep_reduction_examples(int n, int count, std::uint64_t seed) {
  std::vector<NormalWord> out;
  if (n < 23 || count <= 0) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_m(11, n - 11);
  std::uniform_int_distribution<int> pick_sigma(0, 2);
  std::uniform_int_distribution<int> pick_p(0, n);

  std::set<std::tuple<int, int, int>> drawn;
  std::size_t space = static_cast<std::size_t>(n - 21) * 3 * (n - 1);
  while (static_cast<int>(out.size()) < count && drawn.size() < space) {
    int m = pick_m(rng);
    int sigma = pick_sigma(rng);
    int p = pick_p(rng);
    if (p == m - 1 || p == m) continue;  // would break the pivot-adjacent match
    if (!drawn.insert({m, sigma, p}).second) continue;
    std::vector<Syllable> syl;
    syl.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
      int idx = (pattern_letter(j - m) + sigma) % 3;
      int e = j <= p ? 1 : 2;
      syl.push_back(Syllable{static_cast<std::uint8_t>(idx), static_cast<std::uint8_t>(e)});
    }
    out.emplace_back(std::move(syl), Rot(0));
  }
  return out;
}

}  // namespace fg
