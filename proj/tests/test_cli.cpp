#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "fnt/cli.hpp"

using namespace fnt;

namespace {

struct temp_file {
  std::string path;
  explicit temp_file(const std::string& name, const std::string& content)
      : path("/tmp/fnt_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~temp_file() { std::remove(path.c_str()); }
};

struct cli_result {
  int code;
  std::string out, err;
};

cli_result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: typing on a chain emits a parseable TYPF") {
  temp_file f("chain.netf", fixtures::kChain);
  auto r = run({"typing", f.path});
  CHECK(r.code == 0);
  typing t = parse_typing(r.out);
  CHECK(*t.entry({"a"}) == fixtures::iv(2, 3));
}

TEST_CASE("cli: flow prints component bounds") {
  temp_file f("diamond.netf", fixtures::kDiamond);
  auto r = run({"flow", f.path});
  CHECK(r.code == 0);
  CHECK(r.out == "component 0: min=0 max=7\n");
}

TEST_CASE("cli: infeasible networks exit 2") {
  temp_file f("bad.netf",
              "node u\nnode v\narc a _ u 0 5\narc b u v 2 4\narc c v _ 0 1\n");
  auto r = run({"flow", f.path});
  CHECK(r.code == 2);
  CHECK(r.err.find("infeasible") != std::string::npos);
}

TEST_CASE("cli: missing or malformed input exits 3") {
  CHECK(run({"typing", "/nonexistent.netf"}).code == 3);
  temp_file f("garbage.netf", "not a network\n");
  CHECK(run({"typing", f.path}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
}

TEST_CASE("cli: schedule emits SCHEDF and honors --strategy file") {
  temp_file f("ring.netf", serialize_network(gen_ring(8, 3)));
  auto r = run({"schedule", f.path, "--strategy", "planar"});
  CHECK(r.code == 0);
  binding_schedule s = parse_schedule(r.out);
  CHECK(s.order.size() == gen_ring(8, 3).internal_count());
  temp_file sf("ring.schedf", r.out);
  auto rt = run({"typing", f.path, "--strategy", "file", "--schedule", sf.path});
  CHECK(rt.code == 0);
}

TEST_CASE("cli: planar strategy falls back to greedy with a warning") {
  temp_file f("plain.netf", serialize_network(gen_random(6, 9, 2, 2, 4)));
  auto r = run({"typing", f.path});
  CHECK(r.code == 0);
  CHECK(r.err.find("falling back") != std::string::npos);
}

TEST_CASE("cli: check verdicts on the reference typings") {
  temp_file f2("t2.typf", serialize_typing(fixtures::t2()));
  temp_file f3("t3.typf", serialize_typing(fixtures::t3()));
  temp_file f3p("t3p.typf", serialize_typing(fixtures::t3_prime()));
  CHECK(run({"check", "--mode", "sub", f2.path, f3.path}).code == 0);
  CHECK(run({"check", "--mode", "strong", f2.path, f3.path}).code == 1);
  CHECK(run({"check", "--mode", "input-safe", f3p.path, f2.path}).code == 0);
  CHECK(run({"check", "--mode", "tight", f2.path}).code == 0);
  CHECK(run({"check", "--mode", "sub", f2.path}).code == 3);
}

TEST_CASE("cli: gen is deterministic and validates") {
  auto a = run({"gen", "--family", "grid", "--k", "2", "--cols", "6", "--seed", "1"});
  auto b = run({"gen", "--family", "grid", "--k", "2", "--cols", "6", "--seed", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  flow_network net = parse_network(a.out);
  CHECK(is_good_embedding(net, extract_embedding(net)).good);
  CHECK(run({"gen", "--family", "ring", "--n", "5"}).code == 3);
}

TEST_CASE("cli: verify passes on random instances and demonstrates failure") {
  auto ok = run({"verify", "--count", "3", "--seed", "2"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  auto bad = run({"verify", "--count", "1", "--seed", "2", "--inject-widen"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli: bench emits one row per size") {
  auto r = run({"bench", "--k", "2", "--sizes", "40,80", "--reps", "1"});
  CHECK(r.code == 0);
  int lines = 0;
  for (char c : r.out) lines += (c == '\n');
  CHECK(lines == 3);  // header + 2 rows
}
