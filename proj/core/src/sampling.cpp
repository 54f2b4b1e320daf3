#include "fg/sampling.hpp"

namespace fg {

NormalWord random_word(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> idx3(0, 2);
  std::uniform_int_distribution<int> idx2(0, 1);
  std::uniform_int_distribution<int> exp(1, 2);
  std::vector<Syllable> syl;
  syl.reserve(static_cast<std::size_t>(n));
  int last = -1;
  for (int i = 0; i < n; ++i) {
    int c = i == 0 ? idx3(rng) : (last + 1 + idx2(rng)) % 3;
    syl.push_back(Syllable{static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(exp(rng))});
    last = c;
  }
  return NormalWord(std::move(syl), Rot(idx3(rng)));
}

NormalWord random_commutator_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  for (;;) {
    int n = len(rng);
    if (n == 1) continue;  // a single syllable never has exponent sum 0
    NormalWord w = random_word(rng, n);
    std::vector<Syllable> syl = w.syllables();
    if (n > 0) {
      int sum = 0;
      for (int i = 0; i + 1 < n; ++i) sum += syl[i].exp;
      int need = (3 - sum % 3) % 3;
      if (need == 0) continue;  // exponent 0 is not a syllable; redraw
      syl.back().exp = static_cast<std::uint8_t>(need);
    }
    return NormalWord(std::move(syl), Rot(0));
  }
}

NormalWord random_pivot_pattern_word(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick_m(1, n > 0 ? n : 1);
  std::uniform_int_distribution<int> sigma(0, 2);
  std::uniform_int_distribution<int> exp(1, 2);
  int m = n > 0 ? pick_m(rng) : 1;
  int s = sigma(rng);
  std::vector<Syllable> syl;
  syl.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    int dist = j < m ? m - j : j - m;
    int idx = (dist % 3 + s) % 3;
    syl.push_back(Syllable{static_cast<std::uint8_t>(idx), static_cast<std::uint8_t>(exp(rng))});
  }
  return NormalWord(std::move(syl), Rot(sigma(rng)));
}

ExpSeq random_sigma_step_seq(std::mt19937_64& rng, int n) {
  // Draw a pivot-pattern factor T and undo the transform: with T_0 := 0,
  // s_i = T_{i-1} - T_i mod 3 is nonzero because adjacent letters differ,
  // and the negated partial sums of s reproduce T. Sequences in the class
  // always have -s_1 as first sum, so T_1 != 0; redraw otherwise.
  for (;;) {
    NormalWord t = random_pivot_pattern_word(rng, n);
    if (n > 0 && t.syllables().front().index == 0) continue;
    ExpSeq s;
    s.values.reserve(static_cast<std::size_t>(n));
    int prev = 0;
    for (const auto& syl : t.syllables()) {
      int cur = syl.index;
      s.values.push_back(static_cast<std::uint8_t>(((prev - cur) % 3 + 3) % 3));
      prev = cur;
    }
    return s;
  }
}

}  // namespace fg
