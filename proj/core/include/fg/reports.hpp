#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fg/metric.hpp"
#include "fg/seqcomb.hpp"

// Exhaustive and randomized verification suites. Each returns a report
// with the tested count and the (expected empty) list of violations;
// suites are deterministic given their parameters.

namespace fg {

struct Violation {
  std::string word;
  std::string detail;
};

struct LemmaReport {
  std::string lemma;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t tested = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void count() { ++tested; }
  void fail(std::string word, std::string detail) {
    violations.push_back(Violation{std::move(word), std::move(detail)});
  }
};

std::string report_to_json(const LemmaReport& report);

// All minimal words per element of the exhausted ball, for the
// "some minimal representative" clauses.
class MinimalWordsIndex {
 public:
  MinimalWordsIndex(const BallTable& table, int max_len);
  const std::vector<NormalWord>* find(const ElementKey& k) const;

 private:
  std::unordered_map<ElementKey, std::vector<NormalWord>, ElementKeyHash> words_;
};

// Level-1 characterization: an element of length <= max_len has no
// level-1 length reduction iff one of its minimal words passes the
// syntactic index-pattern + pivot-exponent test.
LemmaReport run_mot_sans_red(const BallTable& table, int max_len);

// Reduction-freeness stabilizes: through level 3 implies through level 6
// for every element of length <= max_len.
LemmaReport run_structure_i(const BallTable& table, int max_len);

// Sphere counts of reduction-free elements stay below the maximum seen
// on the first `calib` spheres.
LemmaReport run_delta_bounded(const BallTable& table, int calib);

// Translating all syllable indices permutes the first-level sections and
// preserves the root.
LemmaReport run_permut(std::uint64_t seed, int samples, int max_len);

// Step-pattern sequences map into the pivot pattern under negated
// partial sums, with matching pivots; exhaustive over lengths <= max_len.
LemmaReport run_equiv_suites(int max_len);

// The three displayed pivot relations between a word with an interior
// pivot (normalized so c_m = 0, c_1 = 1) and its sections, checked
// exhaustively to `exhaustive_len` and on `samples` seeded constructed
// words satisfying the hypotheses.
LemmaReport run_rel123(int exhaustive_len, int samples, std::uint64_t seed);

// Characterization through sections: an element of length <= max_len is
// reduction free through level 6 iff at every vertex of depth <= depth
// some minimal word of the section is an index-pattern factor.
LemmaReport run_cara_i(const BallTable& table, int max_len, int depth);

// The generated deep-reduction family: reduction free at the root but
// provably reduced within two further levels.
LemmaReport run_words_not_in_i(int count, int n_lo, int n_hi, std::uint64_t seed);

// psi embedding: decompose(branch_embed(g)) = <g,1,1> with trivial root
// for seeded commutator-subgroup elements.
LemmaReport run_psi_embedding(std::uint64_t seed, int samples, int max_len);

}  // namespace fg
