#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fg/metric.hpp"
#include "fg/word.hpp"

// Index/exponent sequence combinatorics classifying words without length
// reduction. An element has a length reduction if at some level the
// sections' total weighted length drops strictly below its own.
//
// The classifying patterns:
//   - the pivot pattern: the two-way infinite word descending mod 3 on
//     the left, ascending on the right, glued at a single pivot letter
//     (..2 1 0 1 2..), taken up to adding a constant mod 3;
//   - the step pattern: a run of 1s followed by a run of 2s.
// Index sequences of level-1 reduction-free words are exactly the factors
// of the pivot pattern; their exponent sequences are constrained through
// the negated-partial-sum transform which carries the step pattern onto
// the pivot pattern.

namespace fg {

struct IndexSeq {
  std::vector<std::uint8_t> values;  // over {0,1,2}
  friend bool operator==(const IndexSeq&, const IndexSeq&) = default;
};

struct ExpSeq {
  std::vector<std::uint8_t> values;  // over {1,2}; {0,1,2} after sums/merges
  friend bool operator==(const ExpSeq&, const ExpSeq&) = default;
};

IndexSeq index_seq(const NormalWord& w);
ExpSeq exp_seq(const NormalWord& w);

// Factor of one of the three translates of the pivot pattern. Matches
// against explicitly generated windows of all translates.
bool in_pivot_pattern(const IndexSeq& c);

// Factor of ..1 1 1 2 2 2..: a (possibly empty) run of 1s then 2s.
bool in_step_pattern(const ExpSeq& g);

// Negated partial sums mod 3: s -> (-(s_1+..+s_i))_i.
IndexSeq negated_partial_sums(const ExpSeq& s);

// Definition adopted from the partial-sum characterization: s is in the
// class iff negated_partial_sums(s) is a pivot-pattern factor.
bool in_sigma_step_pattern(const ExpSeq& s);

// Where the pattern flips orientation, 1-based.
struct PivotInfo {
  std::size_t position = 1;
  enum class Kind { LeftEnd, Interior, RightEnd } kind = Kind::LeftEnd;
};

// Pivot of a pivot-pattern factor: 1 if purely ascending, n if purely
// descending, else the k with c_{k-1} = c_{k+1}. Ambiguous short inputs
// take the smallest valid position. Throws std::domain_error outside the
// pattern.
PivotInfo pivot_of_index_seq(const IndexSeq& c);

// Pivot of a step-pattern factor: the last position of the 1-run (n if
// all 1s, 1 if all 2s); equals pivot_of_index_seq of the negated partial
// sums whenever both are defined. Throws std::domain_error outside the
// pattern.
PivotInfo pivot_of_exp_seq(const ExpSeq& g);

// Exponent sequence of the pivot-facing section (the component that
// receives t-letters from positions m-1 and m+1): entries at positions
// congruent to m-1 (left of the pivot) and m+1 (right of it), with the
// two pivot-adjacent entries merged into one (sum mod 3) when the pivot
// is interior with 2 < m < n-1; near the boundary the subsequence is
// returned unmerged. Requires a pivot-pattern index sequence.
ExpSeq pivot_section_exp_seq(const NormalWord& w);

// Lemma-level syntactic test for "no length reduction at level 1" of the
// written word: (a) the index sequence is a pivot-pattern factor and
// (b) if the pivot m is interior with 2 < m < n-2 then the exponents at
// m-1 and m+1 agree.
bool word_reduction_free_level1(const NormalWord& w);

// Word-level recursion: level-1 syllable counts are conserved and all
// three section words are reduction free to depth-1 less.
bool word_reduction_free(const NormalWord& w, int depth);

// Element-level recursion evaluated with true minimal lengths from the
// exhausted ball: sum of the sections' minimal lengths equals the
// element's, and sections recurse. Throws std::out_of_range when an
// element falls outside the table.
bool element_reduction_free(const NormalWord& g, int depth, const BallTable& table);

// Memoizing checker for sweeping whole tables.
class ReductionFreeChecker {
 public:
  explicit ReductionFreeChecker(const BallTable& table) : table_(table) {}
  bool check(const NormalWord& g, int depth);

 private:
  struct MemoKey {
    ElementKey key;
    int depth;
    friend bool operator==(const MemoKey&, const MemoKey&) = default;
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
      return ElementKeyHash{}(k.key) * 31 + static_cast<std::size_t>(k.depth);
    }
  };
  const BallTable& table_;
  std::unordered_map<MemoKey, bool, MemoHash> memo_;
};

// Seeded generator of words of length n that are reduction free at the
// root (pivot-pattern indices, interior pivot m in (10, n-10), matching
// pivot-adjacent exponents) with a step-pattern exponent sequence; all of
// them provably acquire a reduction within two further levels. Returns
// an empty list when the constraints are unsatisfiable.
std::vector<NormalWord> deep_reduction_examples(int n, int count, std::uint64_t seed);

}  // namespace fg
