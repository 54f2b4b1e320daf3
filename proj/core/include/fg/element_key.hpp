#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fg/tree_group.hpp"
#include "fg/word.hpp"

// Canonical identifiers for group elements. The section automaton of a
// word (states = reachable sections, transitions = the three wreath
// sections, output = root rotation) is closed, minimized by partition
// refinement, and serialized with states in breadth-first discovery
// order. Two words get the same key exactly when they define the same
// tree automorphism, which makes the key usable for exact dedup and as
// a stable on-disk element id.

namespace fg {

struct ElementKey {
  // u32 state count, then per state: u8 root, 3x u32 successor ids,
  // all little endian, states in BFS discovery order from the initial
  // state (id 0), successors visited in child order 0,1,2.
  std::string bytes;

  friend bool operator==(const ElementKey&, const ElementKey&) = default;
  friend auto operator<=>(const ElementKey&, const ElementKey&) = default;
};

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const { return std::hash<std::string>{}(k.bytes); }
};

ElementKey canonical_key(const NormalWord& w);

// Number of states of the minimized section automaton (from a key).
std::uint32_t key_state_count(const ElementKey& k);

// The images of all 3^depth vertices of the given depth, packed row-major
// as uint16 little endian. Equal words have equal signatures; the converse
// holds only up to the inspected depth.
std::string action_signature(const NormalWord& w, int depth);

}  // namespace fg
