#include "fg/word.hpp"

#include <stdexcept>

namespace fg {

Vertex::Vertex(std::vector<std::uint8_t> path) : path_(std::move(path)) {
  for (auto x : path_) {
    if (x > 2) throw std::invalid_argument("vertex letter out of range");
  }
}

Vertex Vertex::parse(std::string_view s) {
  std::vector<std::uint8_t> p;
  p.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '2') {
      throw std::invalid_argument("bad vertex letter at position " + std::to_string(i));
    }
    p.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Vertex(std::move(p));
}

std::string Vertex::str() const {
  std::string s;
  s.reserve(path_.size());
  for (auto x : path_) s.push_back(static_cast<char>('0' + x));
  return s;
}

NormalWord::NormalWord(std::vector<Syllable> syllables, Rot tail)
    : syllables_(std::move(syllables)), tail_(tail) {
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    const auto& s = syllables_[i];
    if (s.index > 2 || s.exp < 1 || s.exp > 2) throw std::invalid_argument("bad syllable");
    if (i + 1 < syllables_.size() && syllables_[i + 1].index == s.index) {
      throw std::invalid_argument("adjacent syllables share an index");
    }
  }
}

NormalWord NormalWord::syllable(Rot c, int e, Rot tau) {
  e = ((e % 3) + 3) % 3;
  if (e == 0) return NormalWord({}, tau);
  return NormalWord({Syllable{static_cast<std::uint8_t>(c.value()), static_cast<std::uint8_t>(e)}}, tau);
}

namespace {

void emit_a_run(std::string& out, int k) {
  k = ((k % 3) + 3) % 3;
  if (k == 1) out.push_back('a');
  if (k == 2) out.push_back('A');  // a^2 = a^-1
}

}  // namespace

std::string NormalWord::raw_letters() const {
  std::string out;
  int offset = 0;
  for (const auto& s : syllables_) {
    // t_c^e = a^{-c} t^e a^{c}; fold the closing run into the next opening one
    emit_a_run(out, -s.index - offset);
    out.push_back(s.exp == 1 ? 't' : 'T');
    offset = -s.index;
  }
  emit_a_run(out, tail_.value() - offset);
  return out;
}

std::string NormalWord::str() const {
  std::string out;
  for (const auto& s : syllables_) {
    out += "t" + std::to_string(s.index) + "^" + std::to_string(s.exp) + " ";
  }
  out += "a^" + std::to_string(tail_.value());
  return out;
}

std::size_t NormalWord::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const auto& s : syllables_) mix(static_cast<std::uint64_t>(s.index) * 4 + s.exp);
  mix(0xffu + tail_.value());
  return static_cast<std::size_t>(h);
}

void WordBuilder::push(Rot index, int exp) {
  exp = ((exp % 3) + 3) % 3;
  if (exp == 0) return;
  auto idx = static_cast<std::uint8_t>(index.value());
  if (!syllables_.empty() && syllables_.back().index == idx) {
    int merged = (syllables_.back().exp + exp) % 3;
    syllables_.pop_back();
    if (merged != 0) push(index, merged);
    return;
  }
  syllables_.push_back(Syllable{idx, static_cast<std::uint8_t>(exp)});
}

void WordBuilder::append(const NormalWord& v) {
  // a^tau t_c a^{-tau} = t_{c - tau}
  for (const auto& s : v.syllables()) push(Rot(s.index) - tail_, s.exp);
  push_tail(v.tail());
}

NormalWord WordBuilder::take() { return NormalWord(std::move(syllables_), tail_); }

NormalWord normalize(std::string_view raw) {
  WordBuilder b;
  int offset = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    switch (raw[i]) {
      case 'a': offset += 1; break;
      case 'A': offset -= 1; break;
      case 't': b.push(Rot(-offset), 1); break;
      case 'T': b.push(Rot(-offset), 2); break;
      default:
        throw std::invalid_argument("unrecognized letter '" + std::string(1, raw[i]) +
                                    "' at position " + std::to_string(i));
    }
  }
  b.push_tail(Rot(offset));
  return b.take();
}

}  // namespace fg
