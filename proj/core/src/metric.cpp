#include "fg/metric.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <stdexcept>
#include <thread>

namespace fg {

namespace {

struct Candidate {
  ElementKey key;
  NormalWord word;
};

std::vector<Candidate> extend_frontier(const std::vector<NormalWord>& frontier,
                                       std::size_t begin, std::size_t end) {
  std::vector<Candidate> out;
  out.reserve((end - begin) * 18);
  for (std::size_t i = begin; i < end; ++i) {
    const NormalWord& rep = frontier[i];
    int last = rep.syllables().empty() ? -1 : rep.syllables().back().index;
    for (int c = 0; c < 3; ++c) {
      if (c == last) continue;
      for (int e = 1; e <= 2; ++e) {
        std::vector<Syllable> syl = rep.syllables();
        syl.push_back(Syllable{static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(e)});
        for (int tau = 0; tau < 3; ++tau) {
          NormalWord w(syl, Rot(tau));
          out.push_back(Candidate{canonical_key(w), std::move(w)});
        }
      }
    }
  }
  return out;
}

}  // namespace

BallTable enumerate_ball(int radius, unsigned workers, std::size_t max_entries) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  if (workers == 0) workers = 1;

  BallTable table;
  table.radius = radius;

  // Level 0: the three rotations (a-letters are free).
  std::vector<NormalWord> frontier;
  for (int tau = 0; tau < 3; ++tau) {
    NormalWord w = NormalWord::rotation(Rot(tau));
    table.entries.emplace(canonical_key(w), BallEntry{0, w});
    frontier.push_back(std::move(w));
  }

  constexpr std::size_t kBlock = 8192;  // bounds transient candidate memory
  for (int level = 1; level <= radius; ++level) {
    for (std::size_t base = 0; base < frontier.size(); base += kBlock * workers) {
      std::vector<std::vector<Candidate>> shards(workers);
      if (workers == 1 || frontier.size() < 64) {
        shards[0] = extend_frontier(frontier, base, std::min(frontier.size(), base + kBlock));
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
          std::size_t b = std::min(frontier.size(), base + t * kBlock);
          std::size_t e = std::min(frontier.size(), base + (t + 1) * kBlock);
          pool.emplace_back([&, b, e, t] { shards[t] = extend_frontier(frontier, b, e); });
        }
        for (auto& th : pool) th.join();
      }

      // Sequential merge with an order-independent rule (least length,
      // then lexicographically least word), so sharding cannot change
      // the final table.
      for (auto& shard : shards) {
        for (auto& cand : shard) {
          auto it = table.entries.find(cand.key);
          if (it == table.entries.end()) {
            table.entries.emplace(std::move(cand.key),
                                  BallEntry{static_cast<std::uint32_t>(level), cand.word});
            if (table.entries.size() > max_entries) {
              throw std::length_error(
                  "ball enumeration exceeded the entry cap (partial result discarded)");
            }
          } else if (it->second.minlen == static_cast<std::uint32_t>(level) &&
                     cand.word < it->second.rep) {
            it->second.rep = cand.word;
          }
        }
      }
    }
    std::vector<NormalWord> next;
    for (auto& [key, entry] : table.entries) {
      if (entry.minlen == static_cast<std::uint32_t>(level)) next.push_back(entry.rep);
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return table;
}

namespace {

// Emits every normal word with exactly `left` more syllables appended to
// `prefix`, lexicographically, tails last. First key occurrence wins.
void naive_gen(std::vector<Syllable>& prefix, int left, int total, BallTable& table) {
  if (left == 0) {
    for (int tau = 0; tau < 3; ++tau) {
      NormalWord w(prefix, Rot(tau));
      ElementKey k = canonical_key(w);
      if (!table.entries.contains(k)) {
        table.entries.emplace(std::move(k),
                              BallEntry{static_cast<std::uint32_t>(total), std::move(w)});
      }
    }
    return;
  }
  int last = prefix.empty() ? -1 : prefix.back().index;
  for (int c = 0; c < 3; ++c) {
    if (c == last) continue;
    for (int e = 1; e <= 2; ++e) {
      prefix.push_back(Syllable{static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(e)});
      naive_gen(prefix, left - 1, total, table);
      prefix.pop_back();
    }
  }
}

}  // namespace

BallTable enumerate_ball_naive(int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  BallTable table;
  table.radius = radius;
  for (int n = 0; n <= radius; ++n) {
    std::vector<Syllable> prefix;
    naive_gen(prefix, n, n, table);
  }
  return table;
}

std::uint32_t minimal_length(const NormalWord& g, const BallTable& table) {
  const BallEntry* e = table.find(canonical_key(g));
  if (!e) throw std::out_of_range("element outside the exhausted ball radius");
  return e->minlen;
}

namespace {

// Run-length form of a word over {t, a}: (is_t, exp) with exp in {1,2},
// alternating types. This is exactly the raw expansion a word's sections
// must reproduce, so the search below compares streams against it.
struct Run {
  std::uint8_t is_t = 0;
  std::uint8_t exp = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

std::vector<Run> run_form(const NormalWord& g) {
  std::vector<Run> runs;
  int offset = 0;
  for (const auto& s : g.syllables()) {
    int a = (((-s.index - offset) % 3) + 3) % 3;
    if (a != 0) runs.push_back(Run{0, static_cast<std::uint8_t>(a)});
    runs.push_back(Run{1, s.exp});
    offset = -s.index;
  }
  int a = (((g.tail().value() - offset) % 3) + 3) % 3;
  if (a != 0) runs.push_back(Run{0, static_cast<std::uint8_t>(a)});
  return runs;
}

// Appends one letter to a normalized run list, merging and cancelling.
// Pops can cascade only one level since runs alternate.
void push_run(std::vector<Run>& runs, std::uint8_t is_t, int e) {
  if (!runs.empty() && runs.back().is_t == is_t) {
    int m = (runs.back().exp + e) % 3;
    runs.pop_back();
    if (m != 0) push_run(runs, is_t, m);
    return;
  }
  runs.push_back(Run{is_t, static_cast<std::uint8_t>(e)});
}

struct StreamState {
  std::array<std::vector<Run>, 3> stream;
  int last_class = -1;
  bool operator==(const StreamState&) const = default;
};

struct StreamStateHash {
  std::size_t operator()(const StreamState& s) const {
    std::uint64_t h = static_cast<std::uint64_t>(s.last_class + 1);
    for (const auto& runs : s.stream) {
      h = h * 1099511628211ull + runs.size();
      for (const auto& r : runs) h = h * 131 + (r.is_t * 4 + r.exp);
    }
    return static_cast<std::size_t>(h);
  }
};

// Admissible cost to finish component streams: future class-j syllables
// must cover both the a-side fixes of component j and the t-side fixes
// of component j-1, and the two demands share the same letters while
// distinct classes never do. Every target run beyond the longest exact
// run prefix costs at least one letter of the serving class, as does
// every surplus run that has to merge or cancel away.
std::size_t schedule_heuristic(const StreamState& st, const std::array<std::vector<Run>, 3>& target) {
  std::array<std::size_t, 3> t_need{}, a_need{};
  for (int j = 0; j < 3; ++j) {
    std::size_t p = 0;
    while (p < st.stream[j].size() && p < target[j].size() && st.stream[j][p] == target[j][p]) ++p;
    std::size_t tt = 0, ta = 0, st_t = 0, st_a = 0;
    for (std::size_t i = p; i < target[j].size(); ++i) (target[j][i].is_t ? tt : ta) += 1;
    for (std::size_t i = p; i < st.stream[j].size(); ++i) (st.stream[j][i].is_t ? st_t : st_a) += 1;
    t_need[j] = tt + st_t;
    a_need[j] = std::max(ta, st_a);
  }
  std::size_t total = 0;
  for (int j = 0; j < 3; ++j) total += std::max(a_need[j], t_need[(j + 2) % 3]);
  return total;
}

// Minimal-length word whose three sections have the given run forms and
// whose root is trivial, if one exists within `budget` syllables.
// Breadth-first over schedules: each syllable t_c^e appends t^e to the
// stream of component c-1 and a^e to the stream of component c. Sound
// and complete up to the budget.
std::optional<NormalWord> section_schedule_search(const std::array<std::vector<Run>, 3>& target,
                                                  std::size_t budget) {
  struct Node {
    StreamState st;
    std::vector<Syllable> word;
  };
  std::queue<Node> bfs;
  std::unordered_map<StreamState, std::uint32_t, StreamStateHash> seen;
  StreamState init;
  bfs.push(Node{init, {}});
  seen.emplace(init, 0);
  constexpr std::size_t kStateCap = 4u << 20;

  while (!bfs.empty()) {
    Node cur = std::move(bfs.front());
    bfs.pop();
    if (cur.word.size() >= budget) continue;
    for (int c = 0; c < 3; ++c) {
      if (c == cur.st.last_class) continue;
      for (int e = 1; e <= 2; ++e) {
        StreamState ns = cur.st;
        ns.last_class = c;
        push_run(ns.stream[(c + 2) % 3], 1, e);
        push_run(ns.stream[c], 0, e);
        std::size_t used = cur.word.size() + 1;
        bool done = ns.stream[0] == target[0] && ns.stream[1] == target[1] &&
                    ns.stream[2] == target[2];
        if (!done) {
          if (used + schedule_heuristic(ns, target) > budget) continue;
          auto it = seen.find(ns);
          if (it != seen.end() && it->second <= used) continue;
          if (seen.size() > kStateCap) return std::nullopt;
          seen.emplace(ns, static_cast<std::uint32_t>(used));
        }
        Node nxt{std::move(ns), cur.word};
        nxt.word.push_back(Syllable{static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(e)});
        if (done) return NormalWord(nxt.word, Rot(0));
        bfs.push(std::move(nxt));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

NormalWord triple_inject(const NormalWord& g1, const NormalWord& g2, const NormalWord& g3) {
  const NormalWord* in[3] = {&g1, &g2, &g3};
  for (const auto* g : in) {
    if (!in_commutator_subgroup(*g)) {
      throw std::domain_error("triple_inject requires commutator-subgroup elements");
    }
  }

  // Baseline: psi(g1) * (a^-1 psi(g2) a) * (a^-2 psi(g3) a^2).
  NormalWord word = multiply(
      multiply(branch_embed(g1), conjugate_by_rotation(branch_embed(g2), Rot(1))),
      conjugate_by_rotation(branch_embed(g3), Rot(2)));

  // The concatenation can overshoot the 2*(sum of lengths) mark by up to
  // three boundary syllables; for desk-scale inputs an exact search then
  // finds the true minimum below it.
  std::size_t budget = 2 * (g1.length() + g2.length() + g3.length());
  if (word.length() > budget && word.length() <= 25) {
    std::array<std::vector<Run>, 3> target = {run_form(g1), run_form(g2), run_form(g3)};
    if (auto improved = section_schedule_search(target, word.length() - 1);
        improved && improved->length() < word.length()) {
      word = *improved;
    }
  }

  // The image is certified, not assumed: re-check the sections and root.
  WreathDecomp d = decompose(word);
  if (!d.root.is_zero() || !equal(d.sections[0], g1) || !equal(d.sections[1], g2) ||
      !equal(d.sections[2], g3)) {
    throw std::logic_error("triple_inject produced a word with wrong sections");
  }
  return word;
}

namespace {

constexpr char kMagic[6] = {'F', 'G', 'B', 'A', 'L', 'L'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, 4);
}

std::uint32_t read_u32(std::istream& is) {
  char b[4];
  if (!is.read(b, 4)) throw std::runtime_error("corrupt ball cache: truncated");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  return v;
}

}  // namespace

void save_table(const BallTable& table, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open cache file for writing: " + path.string());
  os.write(kMagic, sizeof(kMagic));
  put_u32(os, kVersion);
  put_u32(os, static_cast<std::uint32_t>(table.radius));
  put_u32(os, static_cast<std::uint32_t>(table.entries.size()));
  std::vector<const ElementKey*> order;
  order.reserve(table.entries.size());
  for (const auto& [k, e] : table.entries) order.push_back(&k);
  std::sort(order.begin(), order.end(),
            [](const ElementKey* a, const ElementKey* b) { return a->bytes < b->bytes; });
  for (const ElementKey* k : order) {
    const BallEntry& e = table.entries.at(*k);
    put_u32(os, static_cast<std::uint32_t>(k->bytes.size()));
    os.write(k->bytes.data(), static_cast<std::streamsize>(k->bytes.size()));
    put_u32(os, e.minlen);
    std::string raw = e.rep.raw_letters();
    put_u32(os, static_cast<std::uint32_t>(raw.size()));
    os.write(raw.data(), static_cast<std::streamsize>(raw.size()));
  }
  if (!os) throw std::runtime_error("write failure on cache file: " + path.string());
}

BallTable load_table(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open cache file: " + path.string());
  char magic[6];
  if (!is.read(magic, 6) || !std::equal(magic, magic + 6, kMagic)) {
    throw std::runtime_error("corrupt ball cache: bad magic");
  }
  std::uint32_t version = read_u32(is);
  if (version != kVersion) {
    throw std::runtime_error("ball cache version mismatch: got " + std::to_string(version));
  }
  BallTable table;
  table.radius = static_cast<int>(read_u32(is));
  std::uint32_t count = read_u32(is);
  table.entries.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t klen = read_u32(is);
    std::string kb(klen, '\0');
    if (!is.read(kb.data(), klen)) throw std::runtime_error("corrupt ball cache: truncated key");
    BallEntry e;
    e.minlen = read_u32(is);
    std::uint32_t rlen = read_u32(is);
    std::string raw(rlen, '\0');
    if (!is.read(raw.data(), rlen)) throw std::runtime_error("corrupt ball cache: truncated word");
    e.rep = normalize(raw);
    table.entries.emplace(ElementKey{std::move(kb)}, std::move(e));
  }
  char extra;
  if (is.read(&extra, 1)) throw std::runtime_error("corrupt ball cache: trailing bytes");
  return table;
}

}  // namespace fg
