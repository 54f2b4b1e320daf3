#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

// Elements of the Fabrykowski-Gupta group, represented by words in the
// normal form
//
//   w = t_{c_1}^{g_1} t_{c_2}^{g_2} ... t_{c_n}^{g_n} a^tau
//
// where t_c = a^{-c} t a^{c}, exponents lie in {1,2}, adjacent syllable
// indices differ, and tau in {0,1,2}. Every word in the generators a, t
// rewrites into this shape; the shape is a representative, not a canonical
// form (equality of group elements goes through bisimulation, see
// tree_group.hpp / element_key.hpp).
//
// The weighted length of a word counts t-letters only: a-letters are free,
// so the weighted length equals the number of syllables.

namespace fg {

// Residue mod 3. Doubles as a root rotation of the ternary tree (the
// generator a rotates the first level by +1) and as a vertex letter.
class Rot {
 public:
  constexpr Rot() = default;
  constexpr explicit Rot(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  constexpr int value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr Rot operator+(Rot a, Rot b) { return Rot(a.v_ + b.v_); }
  friend constexpr Rot operator-(Rot a, Rot b) { return Rot(a.v_ - b.v_ + 3); }
  constexpr Rot operator-() const { return Rot(3 - v_); }
  friend constexpr auto operator<=>(Rot, Rot) = default;

 private:
  std::uint8_t v_ = 0;
};

// A vertex of the rooted ternary tree: a finite path over {0,1,2}.
// The empty path is the root; depth equals the path length.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<std::uint8_t> path);
  // Parses "201" style strings; "" is the root. Throws std::invalid_argument.
  static Vertex parse(std::string_view s);

  std::size_t depth() const { return path_.size(); }
  Rot letter(std::size_t i) const { return Rot(path_[i]); }
  const std::vector<std::uint8_t>& path() const { return path_; }
  void push(Rot r) { path_.push_back(static_cast<std::uint8_t>(r.value())); }
  std::string str() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;

 private:
  std::vector<std::uint8_t> path_;
};

// One syllable t_c^e with index c in {0,1,2} and exponent e in {1,2}.
struct Syllable {
  std::uint8_t index = 0;
  std::uint8_t exp = 1;

  friend constexpr auto operator<=>(const Syllable&, const Syllable&) = default;
};

class NormalWord {
 public:
  NormalWord() = default;
  // Takes ownership; requires the sequence to be in normal form already
  // (adjacent indices distinct, exponents in {1,2}).
  NormalWord(std::vector<Syllable> syllables, Rot tail);

  static NormalWord identity() { return NormalWord(); }
  // Pure rotation a^k.
  static NormalWord rotation(Rot k) { return NormalWord({}, k); }
  // Single syllable t_c^e followed by a^tau.
  static NormalWord syllable(Rot c, int e, Rot tau = Rot(0));

  const std::vector<Syllable>& syllables() const { return syllables_; }
  Rot tail() const { return tail_; }
  // Weighted length of the word: number of syllables (t-letters).
  std::size_t length() const { return syllables_.size(); }
  bool trivial() const { return syllables_.empty() && tail_.is_zero(); }

  // Raw-letter form over {a,A,t,T}; normalize() inverts it exactly.
  std::string raw_letters() const;
  std::string str() const;  // human readable, e.g. "t0^1 t2^2 a^1"

  // Syntactic identity of representatives (not group equality).
  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  // Lexicographic on (index, exp) pairs, then tail; used for deterministic
  // tie-breaks among equal-length representatives.
  friend auto operator<=>(const NormalWord&, const NormalWord&) = default;

  std::size_t hash() const;

 private:
  std::vector<Syllable> syllables_;
  Rot tail_;
};

struct NormalWordHash {
  std::size_t operator()(const NormalWord& w) const { return w.hash(); }
};

// Incremental normal-form builder. push() merges a new syllable into the
// running word, cascading cancellations of vanishing exponents.
class WordBuilder {
 public:
  void push(Rot index, int exp);
  void push_tail(Rot k) { tail_ = tail_ + k; }
  // Appends v conjugated into the current tail frame, i.e. multiplies the
  // built word by v on the right.
  void append(const NormalWord& v);
  NormalWord take();

 private:
  std::vector<Syllable> syllables_;
  Rot tail_;
};

// Rewrites a raw word over {a, a^-1, t, t^-1} (letters 'a','A','t','T')
// into normal form. Scanning keeps a running a-offset k; a t^e read at
// offset k becomes the syllable t_{-k}^e, and tau collects the total
// a-exponent. Throws std::invalid_argument (with the offending position)
// on any other character.
NormalWord normalize(std::string_view raw);

}  // namespace fg
