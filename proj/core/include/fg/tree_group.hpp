#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fg/word.hpp"

// Wreath recursion of the Fabrykowski-Gupta group on the ternary tree.
//
// Conventions (pinned by the generator recursions and kept consistently
// everywhere): an automorphism g with first-level sections <g_0,g_1,g_2>
// and root rotation s maps the vertex i.w to s(i).g_i(w); products act
// first factor first, so (uv)_i = u_i * v_{s_u(i)} and roots add. With
// these choices
//
//   t   = <a, 1, t>      t^a  = <t, a, 1>      t^{a^2} = <1, t, a>
//
// where x^y = y^-1 x y and a rotates the first level by +1.

namespace fg {

// One level of the wreath decomposition: three sections plus the root
// rotation. Sections are returned in normal form.
struct WreathDecomp {
  std::array<NormalWord, 3> sections;
  Rot root;
};

NormalWord multiply(const NormalWord& u, const NormalWord& v);
NormalWord inverse(const NormalWord& w);
NormalWord power(const NormalWord& w, int e);

WreathDecomp decompose(const NormalWord& w);

// State of w at a vertex: section(w, v.u) = section(section(w, v), u),
// and the section at the root is w itself.
NormalWord section(const NormalWord& w, const Vertex& v);

// Image of a vertex under the tree action. Depth is preserved.
Vertex act(const NormalWord& w, const Vertex& v);

// Word problem: true iff u and v define the same tree automorphism.
// Coinductive bisimulation check; a pair under examination is assumed
// equal on revisit. Terminates because section lengths never exceed the
// parent's, so only finitely many word pairs are reachable.
bool equal(const NormalWord& u, const NormalWord& v);

bool is_identity(const NormalWord& w);

// Kernel of the abelianization onto (Z/3)^2: the a-exponent sum (= tau)
// and the t-exponent sum both vanish mod 3.
bool in_commutator_subgroup(const NormalWord& w);

// Translates every syllable index by sigma (t_c -> t_{c+sigma}); the
// sections of the result are those of w permuted by sigma.
NormalWord translate_indices(const NormalWord& w, Rot sigma);

// The endomorphism of the commutator subgroup induced by a -> t and
// t -> t^a, applied letter by letter to the expansion
// t_c^e = (a^-1)^c t^e a^c. For g in G' it satisfies
// decompose(branch_embed(g)) = <g, 1, 1> with trivial root.
// Throws std::domain_error if w is not in the commutator subgroup.
NormalWord branch_embed(const NormalWord& w);

// Conjugate by a^k: w^(a^k) = a^-k w a^k.
NormalWord conjugate_by_rotation(const NormalWord& w, Rot k);

// Rooted ternary tree of the given depth, each node labeled with the
// root rotation of the section at that vertex. Nodes are stored in BFS
// order: index 0 is the root, node i has children 3*i+1+c.
struct Portrait {
  int depth = 0;
  std::vector<std::uint8_t> labels;

  std::size_t node_count() const { return labels.size(); }
};

Portrait portrait(const NormalWord& w, int depth);

// DOT digraph; node names are vertex path strings, labels the rotations.
std::string portrait_to_dot(const Portrait& p);

}  // namespace fg
