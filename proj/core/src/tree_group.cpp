#include "fg/tree_group.hpp"

#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace fg {

NormalWord multiply(const NormalWord& u, const NormalWord& v) {
  WordBuilder b;
  for (const auto& s : u.syllables()) b.push(Rot(s.index), s.exp);
  b.push_tail(u.tail());
  b.append(v);
  return b.take();
}

NormalWord inverse(const NormalWord& w) {
  // (S a^tau)^-1 = a^-tau S^-1: reverse, negate exponents, shift indices
  // by tau, negate tau.
  WordBuilder b;
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    b.push(Rot(it->index) + w.tail(), 3 - it->exp);
  }
  b.push_tail(-w.tail());
  return b.take();
}

NormalWord power(const NormalWord& w, int e) {
  NormalWord base = e < 0 ? inverse(w) : w;
  int k = e < 0 ? -e : e;
  NormalWord acc;
  for (int i = 0; i < k; ++i) acc = multiply(acc, base);
  return acc;
}

WreathDecomp decompose(const NormalWord& w) {
  // Every syllable stabilizes the first level, so sections are the
  // componentwise products of t_0^e = <a^e,1,t^e>, t_1^e = <t^e,a^e,1>,
  // t_2^e = <1,t^e,a^e>: syllable t_c^e sends t^e to section c-1 and
  // a^e to section c.
  WreathDecomp d;
  std::array<WordBuilder, 3> parts;
  std::array<int, 3> offset = {0, 0, 0};
  for (const auto& s : w.syllables()) {
    int c = s.index;
    int t_comp = (c + 2) % 3;
    parts[t_comp].push(Rot(-offset[t_comp]), s.exp);
    offset[c] += s.exp;
  }
  for (int i = 0; i < 3; ++i) {
    parts[i].push_tail(Rot(offset[i]));
    d.sections[i] = parts[i].take();
  }
  d.root = w.tail();
  return d;
}

NormalWord section(const NormalWord& w, const Vertex& v) {
  NormalWord cur = w;
  for (std::size_t i = 0; i < v.depth(); ++i) {
    cur = decompose(cur).sections[v.letter(i).value()];
  }
  return cur;
}

Vertex act(const NormalWord& w, const Vertex& v) {
  Vertex out;
  NormalWord cur = w;
  for (std::size_t i = 0; i < v.depth(); ++i) {
    Rot x = v.letter(i);
    out.push(x + cur.tail());
    cur = decompose(cur).sections[x.value()];
  }
  return out;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<NormalWord, NormalWord>& p) const {
    return p.first.hash() * 0x9e3779b97f4a7c15ull + p.second.hash();
  }
};

using PairSet = std::unordered_set<std::pair<NormalWord, NormalWord>, PairHash>;

bool equal_rec(const NormalWord& u, const NormalWord& v, PairSet& assumed) {
  if (u == v) return true;
  if (u.tail() != v.tail()) return false;
  auto key = std::make_pair(u, v);
  if (assumed.contains(key)) return true;  // coinductive hypothesis
  assumed.insert(key);
  WreathDecomp du = decompose(u);
  WreathDecomp dv = decompose(v);
  for (int i = 0; i < 3; ++i) {
    if (!equal_rec(du.sections[i], dv.sections[i], assumed)) return false;
  }
  return true;
}

}  // namespace

bool equal(const NormalWord& u, const NormalWord& v) {
  PairSet assumed;
  return equal_rec(u, v, assumed);
}

bool is_identity(const NormalWord& w) {
  // w = 1 iff every reachable section has trivial root.
  if (!w.tail().is_zero()) return false;
  std::unordered_set<NormalWord, NormalWordHash> seen;
  std::queue<NormalWord> todo;
  seen.insert(w);
  todo.push(w);
  while (!todo.empty()) {
    NormalWord cur = std::move(todo.front());
    todo.pop();
    WreathDecomp d = decompose(cur);
    if (!d.root.is_zero()) return false;
    for (auto& s : d.sections) {
      if (seen.insert(s).second) todo.push(std::move(s));
    }
  }
  return true;
}

bool in_commutator_subgroup(const NormalWord& w) {
  if (!w.tail().is_zero()) return false;
  int sum = 0;
  for (const auto& s : w.syllables()) sum += s.exp;
  return sum % 3 == 0;
}

NormalWord translate_indices(const NormalWord& w, Rot sigma) {
  std::vector<Syllable> out = w.syllables();
  for (auto& s : out) s.index = static_cast<std::uint8_t>((Rot(s.index) + sigma).value());
  return NormalWord(std::move(out), w.tail());
}

NormalWord branch_embed(const NormalWord& w) {
  if (!in_commutator_subgroup(w)) {
    throw std::domain_error("branch_embed requires a commutator-subgroup element");
  }
  // a -> t, t -> t^a on the expansion t_c^e = (a^-1)^c t^e a^c, i.e.
  // each syllable becomes t_0^{-c} t_1^{e} t_0^{c}.
  WordBuilder b;
  for (const auto& s : w.syllables()) {
    b.push(Rot(0), 3 - s.index);
    b.push(Rot(1), s.exp);
    b.push(Rot(0), s.index);
  }
  return b.take();
}

NormalWord conjugate_by_rotation(const NormalWord& w, Rot k) {
  // a^-k (S a^tau) a^k = (indices + k) a^tau
  return translate_indices(w, k);
}

Portrait portrait(const NormalWord& w, int depth) {
  if (depth < 0) throw std::invalid_argument("portrait depth must be >= 0");
  Portrait p;
  p.depth = depth;
  std::size_t count = 0, layer = 1;
  for (int d = 0; d <= depth; ++d, layer *= 3) count += layer;
  p.labels.resize(count);
  // BFS over the truncated tree, carrying section words.
  std::vector<NormalWord> nodes;
  nodes.reserve(count);
  nodes.push_back(w);
  for (std::size_t i = 0; i < count; ++i) {
    WreathDecomp d = decompose(nodes[i]);
    p.labels[i] = static_cast<std::uint8_t>(d.root.value());
    if (3 * i + 3 < count) {
      for (int c = 0; c < 3; ++c) nodes.push_back(d.sections[c]);
    }
  }
  return p;
}

std::string portrait_to_dot(const Portrait& p) {
  std::string out = "digraph portrait {\n  node [shape=circle];\n";
  std::vector<std::string> names(p.node_count());
  names[0] = "";
  for (std::size_t i = 0; i < p.node_count(); ++i) {
    if (3 * i + 3 < p.node_count()) {
      for (int c = 0; c < 3; ++c) names[3 * i + 1 + c] = names[i] + static_cast<char>('0' + c);
    }
    out += "  \"" + names[i] + "\" [label=\"" + std::to_string(p.labels[i]) + "\"];\n";
  }
  for (std::size_t i = 0; i < p.node_count(); ++i) {
    if (3 * i + 3 < p.node_count()) {
      for (int c = 0; c < 3; ++c) {
        out += "  \"" + names[i] + "\" -> \"" + names[3 * i + 1 + c] + "\";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace fg
