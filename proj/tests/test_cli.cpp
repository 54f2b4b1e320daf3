#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#ifndef FG_CLI_PATH
#error "FG_CLI_PATH must point at the fg binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(FG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("growth emits the pinned CSV header and rows") {
  RunResult r = run("growth --max-len 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("n,gamma,beta,delta,lower_bound\n", 0) == 0);
  CHECK(r.output.find("\n0,3,1,3,\n") != std::string::npos);
  CHECK(r.output.find("\n1,21,1,18,\n") != std::string::npos);
  CHECK(r.output.find("\n2,93,13,72,12\n") != std::string::npos);
}

TEST_CASE("growth output is byte-identical across runs") {
  RunResult a = run("growth --max-len 3 --workers 1");
  RunResult b = run("growth --max-len 3 --workers 4");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("order reports the certificate for the mixed generator") {
  RunResult r = run("order --word at");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["result"] == "infinite");
  CHECK(j["certificate"]["root_order_k"] == 3);
  CHECK(j["certificate"]["power_j"] == 1);

  RunResult t = run("order --word t");
  auto jt = nlohmann::json::parse(t.output);
  CHECK(jt["result"] == "finite");
  CHECK(jt["order"] == 3);
}

TEST_CASE("portrait emits DOT with path names and rotation labels") {
  RunResult r = run("portrait --word t --depth 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("digraph") != std::string::npos);
  CHECK(r.output.find("\"0\" [label=\"1\"]") != std::string::npos);
  CHECK(r.output.find("\"1\" [label=\"0\"]") != std::string::npos);
  CHECK(r.output.find("\"2\" [label=\"0\"]") != std::string::npos);
}

TEST_CASE("malformed words give a usage error with the position") {
  RunResult r = run("order --word atz");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("position 2") != std::string::npos);
}

TEST_CASE("unknown lemma names give a usage error") {
  RunResult r = run("lemma no-such-lemma");
  CHECK(r.exit_code == 2);
}

TEST_CASE("lemma suites exit zero without violations") {
  RunResult r = run("lemma equiv-suites --max-len 10");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["lemma"] == "equiv-suites");
  CHECK(j["violations"].empty());

  RunResult p = run("lemma permut --samples 200 --seed 3");
  CHECK(p.exit_code == 0);

  RunResult w = run("lemma words-not-in-I --samples 20");
  CHECK(w.exit_code == 0);

  RunResult m = run("lemma mot-sans-red --max-len 3");
  CHECK(m.exit_code == 0);
}

TEST_CASE("bounds reports a threshold below the limit") {
  RunResult r = run("bounds --d 3 --m 3 --limit 1e9");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["N"].get<std::uint64_t>() > 0);
  CHECK(j["N"].get<std::uint64_t>() < 1000000000ull);
  CHECK(j["violations"].empty());
}

TEST_CASE("cache build and info round trip") {
  namespace fs = std::filesystem;
  fs::path file = fs::temp_directory_path() / "fg_cli_cache.fgball";
  RunResult b = run("cache build --max-len 2 " + file.string());
  CHECK(b.exit_code == 0);
  RunResult i = run("cache info " + file.string());
  CHECK(i.exit_code == 0);
  auto j = nlohmann::json::parse(i.output);
  CHECK(j["radius"] == 2);
  CHECK(j["elements"] == 93);
  // growth can reuse the cache
  RunResult g = run("growth --max-len 2 --cache " + file.string());
  CHECK(g.exit_code == 0);
  CHECK(g.output.find("\n2,93,13,72,12\n") != std::string::npos);
  fs::remove(file);
}

TEST_CASE("inject reports distinctness and the length profile") {
  RunResult r = run("inject --n 1");
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["ball_commutator_elements"] == 1);  // only the identity at radius 1
  CHECK(j["pairwise_distinct"] == true);
  CHECK(j["images_longer_than_6n"] == 0);
  CHECK(r.exit_code == 0);
}
