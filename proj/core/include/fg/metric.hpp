#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fg/element_key.hpp"
#include "fg/tree_group.hpp"
#include "fg/word.hpp"

// Exhaustive enumeration of balls in the weighted metric (t-letters cost 1,
// a-letters are free), minimal-length tables and the growth sequences.

namespace fg {

// Number of t-letters of the representative; the metric on elements is
// the minimum over representatives, realized by BallTable.
inline std::size_t weighted_len(const NormalWord& w) { return w.length(); }

struct BallEntry {
  std::uint32_t minlen = 0;
  NormalWord rep;  // lexicographically smallest minimal word
};

// All group elements of weighted length <= radius, keyed canonically.
struct BallTable {
  int radius = 0;
  std::unordered_map<ElementKey, BallEntry, ElementKeyHash> entries;

  const BallEntry* find(const ElementKey& k) const {
    auto it = entries.find(k);
    return it == entries.end() ? nullptr : &it->second;
  }
};

// Grows the ball level by level: every element of length n+1 is some
// length-n element extended by one syllable and a tail, so extending the
// stored representatives of the current sphere reaches the whole next
// sphere. Representative ties resolve to the lexicographically smallest
// word, independent of scheduling; `workers` only shards the candidate
// generation. Throws std::length_error if the table would exceed
// max_entries (resource cap).
BallTable enumerate_ball(int radius, unsigned workers = 1,
                         std::size_t max_entries = 200u * 1000u * 1000u);

// Reference implementation: generates every normal word of <= radius
// syllables in spec order (syllable count ascending, then lexicographic
// on (index, exponent, tail)) and dedups with a fresh memo. Quadratically
// slower; used as the enumeration oracle in tests.
BallTable enumerate_ball_naive(int radius);

// gamma(n): elements of length <= n; beta(n): those in the commutator
// subgroup; delta(n): sphere elements with no length reduction through
// level 3 (see seqcomb.hpp; reduction-free stabilizes at level 3 on the
// exhausted range, which structure-I suites certify).
struct GrowthSeries {
  int max_len = 0;
  std::vector<std::uint64_t> gamma;
  std::vector<std::uint64_t> beta;
  std::vector<std::uint64_t> delta;
};

GrowthSeries growth_series(const BallTable& table);

// Recorded minimal length of the element represented by g. Throws
// std::out_of_range if g is not in the table (never falls back to the
// representative's own length).
std::uint32_t minimal_length(const NormalWord& g, const BallTable& table);

// The injection (g1,g2,g3) -> psi(g1) psi(g2)^a psi(g3)^(a^2) of triples
// of commutator-subgroup elements; the image has sections <g1,g2,g3> and
// trivial root, so distinct triples give distinct images. The returned
// word is numerically certified (sections re-checked). When the plain
// concatenation overshoots 2*(len1+len2+len3) syllables, a bounded exact
// search replaces it by a minimal-length word; note that boundary-heavy
// inputs can force one syllable more than 2*(len1+len2+len3).
NormalWord triple_inject(const NormalWord& g1, const NormalWord& g2, const NormalWord& g3);

// Versioned binary cache: magic "FGBALL", version, radius, then one
// record per element (key bytes, minlen, representative in raw letters),
// sorted by key. save/load round-trips bit-exactly.
void save_table(const BallTable& table, const std::filesystem::path& path);
BallTable load_table(const std::filesystem::path& path);

}  // namespace fg
