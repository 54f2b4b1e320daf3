#include "fg/element_key.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace fg {

namespace {

struct Closure {
  // node i: root rotation + successor node ids
  std::vector<std::uint8_t> root;
  std::vector<std::array<std::uint32_t, 3>> succ;
};

// Closes w under sections. Terminates because section lengths never
// exceed the parent length, so the reachable word set is finite.
Closure close_under_sections(const NormalWord& w) {
  Closure c;
  std::unordered_map<NormalWord, std::uint32_t, NormalWordHash> id;
  std::vector<NormalWord> words;
  auto intern = [&](const NormalWord& x) {
    auto [it, fresh] = id.try_emplace(x, static_cast<std::uint32_t>(words.size()));
    if (fresh) words.push_back(x);
    return it->second;
  };
  intern(w);
  for (std::uint32_t i = 0; i < words.size(); ++i) {
    WreathDecomp d = decompose(words[i]);
    c.root.push_back(static_cast<std::uint8_t>(d.root.value()));
    std::array<std::uint32_t, 3> s{};
    for (int k = 0; k < 3; ++k) s[k] = intern(d.sections[k]);
    c.succ.push_back(s);
  }
  return c;
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const std::string& s, std::size_t pos) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
  return v;
}

}  // namespace

ElementKey canonical_key(const NormalWord& w) {
  Closure c = close_under_sections(w);
  std::size_t n = c.root.size();

  // Moore partition refinement: split by root, then by successor blocks
  // until stable.
  std::vector<std::uint32_t> block(n);
  bool seen_root[3] = {false, false, false};
  for (std::size_t i = 0; i < n; ++i) {
    block[i] = c.root[i];
    seen_root[c.root[i]] = true;
  }
  std::size_t nblocks = static_cast<std::size_t>(seen_root[0]) + seen_root[1] + seen_root[2];
  for (;;) {
    std::map<std::array<std::uint32_t, 4>, std::uint32_t> sig_to_block;
    std::vector<std::uint32_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::array<std::uint32_t, 4> sig = {block[i], block[c.succ[i][0]], block[c.succ[i][1]],
                                          block[c.succ[i][2]]};
      auto [it, fresh] = sig_to_block.try_emplace(sig, static_cast<std::uint32_t>(sig_to_block.size()));
      next[i] = it->second;
    }
    bool stable = sig_to_block.size() == nblocks;
    nblocks = sig_to_block.size();
    block = std::move(next);
    if (stable) break;
  }

  // Relabel blocks in BFS discovery order from the initial state.
  std::vector<std::uint32_t> order(nblocks, UINT32_MAX);
  std::vector<std::uint32_t> rep;  // one closure node per discovered block
  rep.reserve(nblocks);
  auto discover = [&](std::uint32_t node) {
    if (order[block[node]] == UINT32_MAX) {
      order[block[node]] = static_cast<std::uint32_t>(rep.size());
      rep.push_back(node);
    }
  };
  discover(0);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    for (int k = 0; k < 3; ++k) discover(c.succ[rep[i]][k]);
  }

  ElementKey key;
  put_u32(key.bytes, static_cast<std::uint32_t>(rep.size()));
  for (std::size_t i = 0; i < rep.size(); ++i) {
    key.bytes.push_back(static_cast<char>(c.root[rep[i]]));
    for (int k = 0; k < 3; ++k) put_u32(key.bytes, order[block[c.succ[rep[i]][k]]]);
  }
  return key;
}

std::uint32_t key_state_count(const ElementKey& k) {
  if (k.bytes.size() < 4) throw std::invalid_argument("malformed element key");
  return get_u32(k.bytes, 0);
}

std::string action_signature(const NormalWord& w, int depth) {
  if (depth < 0 || depth > 10) throw std::invalid_argument("action depth must be in [0, 10]");
  Closure c = close_under_sections(w);
  std::size_t n = c.root.size();
  std::size_t width = 1;
  for (int d = 0; d < depth; ++d) width *= 3;

  // images[s][v] for the automaton state s and vertex index v at level d,
  // built level by level.
  std::vector<std::vector<std::uint16_t>> cur(n, std::vector<std::uint16_t>(1, 0));
  std::size_t layer = 1;
  for (int d = 0; d < depth; ++d) {
    layer *= 3;
    std::vector<std::vector<std::uint16_t>> next(n, std::vector<std::uint16_t>(layer));
    for (std::size_t s = 0; s < n; ++s) {
      for (int i = 0; i < 3; ++i) {
        int img = (i + c.root[s]) % 3;
        const auto& sub = cur[c.succ[s][i]];
        for (std::size_t r = 0; r < sub.size(); ++r) {
          next[s][i * (layer / 3) + r] =
              static_cast<std::uint16_t>(img * (layer / 3) + sub[r]);
        }
      }
    }
    cur = std::move(next);
  }

  std::string out;
  out.reserve(2 * width);
  for (std::size_t v = 0; v < width; ++v) {
    out.push_back(static_cast<char>(cur[0][v] & 0xff));
    out.push_back(static_cast<char>((cur[0][v] >> 8) & 0xff));
  }
  return out;
}

}  // namespace fg
