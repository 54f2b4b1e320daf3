#pragma once

#include <cstdint>
#include <random>

#include "fg/seqcomb.hpp"
#include "fg/word.hpp"

// Seeded generators for randomized suites; fixed seed means fully
// deterministic output everywhere.

namespace fg {

// Uniform normal word with exactly n syllables and a uniform tail.
NormalWord random_word(std::mt19937_64& rng, int n);

// Commutator-subgroup element of at most max_len syllables: tail 0 and
// exponent sum 0 mod 3 by construction.
NormalWord random_commutator_word(std::mt19937_64& rng, int max_len);

// Word of length n whose index sequence is a pivot-pattern factor with
// the pivot at a chosen position (uniform translate), exponents uniform.
NormalWord random_pivot_pattern_word(std::mt19937_64& rng, int n);

// Uniform step-pattern-class sequence of the given length: sampled by
// drawing a pivot-pattern factor and undoing the partial-sum transform.
ExpSeq random_sigma_step_seq(std::mt19937_64& rng, int n);

}  // namespace fg
