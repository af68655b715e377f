#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "deltacvx/deltacvx.hpp"
#include "json.hpp"
#include "support/generators.hpp"

using namespace deltacvx;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string edge_list(const Graph& g) { return to_edge_list(g); }

// Writes `text` to a temporary file that is removed on scope exit.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& text, const std::string& tag = "g") {
    static int counter = 0;
    path = "deltacvx_cli_test_" + tag + std::to_string(counter++) + ".txt";
    std::ofstream(path) << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

nlohmann::ordered_json parse_json(const std::string& s) { return nlohmann::ordered_json::parse(s); }

}  // namespace

TEST_CASE("cli: interval of an edge in K3 is the whole triangle") {
  auto r = invoke({"interval", "-", "--set", "0,1"}, edge_list(testing::complete(3)));
  CHECK(r.code == 0);
  CHECK(r.out == "{0,1,2}\n");
}

TEST_CASE("cli: K4 has no convex two-partition") {
  auto r = invoke({"two-partition", "-", "--json", "--deterministic"}, edge_list(testing::complete(4)));
  CHECK(r.code == 0);
  auto doc = parse_json(r.out);
  CHECK(doc["result"] == "none");
  CHECK(doc["witness"].empty());
}

TEST_CASE("cli: JSON documents keep a fixed field order") {
  auto r = invoke({"phi", "-", "--json", "--deterministic"}, edge_list(testing::paw()));
  REQUIRE(r.code == 0);
  auto doc = parse_json(r.out);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "graph", "result", "witness", "ms"});
  CHECK(doc["command"] == "phi");
  CHECK(doc["graph"]["n"] == 4);
  CHECK(doc["graph"]["m"] == 4);
  CHECK(doc["ms"] == 0.0);
}

TEST_CASE("cli: deterministic runs are byte-identical") {
  const std::string g = edge_list(testing::petersen());
  for (std::string cmd : {"theta", "phi", "hull-number", "chi", "two-partition", "triangles"}) {
    CAPTURE(cmd);
    auto a = invoke({cmd, "-", "--json", "--deterministic"}, g);
    auto b = invoke({cmd, "-", "--json", "--deterministic"}, g);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: exact and brute-force solvers agree") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const std::string g = edge_list(testing::random_connected_graph(7, 0.5, rng));
    for (std::string cmd : {"phi", "theta"}) {
      auto exact = parse_json(invoke({cmd, "-", "--json", "--exact"}, g).out);
      auto brute = parse_json(invoke({cmd, "-", "--json", "--brute-force"}, g).out);
      CHECK(exact["result"] == brute["result"]);
    }
  }
}

TEST_CASE("cli: emitted witnesses verify") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    TempFile graph(edge_list(testing::random_connected_graph(7, 0.6, rng)));
    for (std::string cmd : {"phi", "theta", "chi", "two-partition"}) {
      CAPTURE(cmd);
      auto r = invoke({cmd, graph.path, "--json"});
      REQUIRE(r.code == 0);
      if (parse_json(r.out)["result"] == "none") continue;
      TempFile witness(r.out, "w");
      auto v = invoke({"verify", graph.path, "--witness-json", witness.path});
      CHECK(v.code == 0);
      CHECK(v.out.rfind("ok", 0) == 0);
    }
  }
}

TEST_CASE("cli: verify reports a violating triangle") {
  auto r = invoke({"verify", "-", "--set", "0,1", "--set", "2"}, edge_list(testing::complete(3)));
  CHECK(r.code == 1);
  CHECK(r.out.find("(0,1,2)") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  const std::string k3 = edge_list(testing::complete(3));
  CHECK(invoke({"frobnicate", "-"}, k3).code == 1);
  CHECK(invoke({"phi"}, k3).code == 2);
  CHECK(invoke({"phi", "-", "--no-such-flag"}, k3).code == 2);
  CHECK(invoke({"phi", "-", "--format", "xml"}, k3).code == 2);
  CHECK(invoke({}, k3).code == 2);
  CHECK(invoke({"phi", "does/not/exist.el"}).code == 1);

  auto bad = invoke({"parse", "-", "--format", "el"}, "3 1\n0 7\n");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);

  auto capped = invoke({"theta", "-", "--cap", "5"}, edge_list(testing::complete(7)));
  CHECK(capped.code == 1);
  CHECK(capped.err.find("capacity") != std::string::npos);

  CHECK(invoke({"two-partition", "-"}, "1 0\n").code == 1);
  CHECK(invoke({"interval", "-", "--set", "0,9"}, k3).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("cli: graph6 input and output") {
  auto r = invoke({"parse", "-", "--format", "g6", "--json", "--deterministic"}, "D?{\n");
  REQUIRE(r.code == 0);
  auto doc = parse_json(r.out);
  CHECK(doc["graph"]["n"] == 5);
  CHECK(doc["result"]["graph6"] == "D?{");
  CHECK(doc["witness"] == nlohmann::ordered_json::parse("[[0,4],[1,4],[2,4],[3,4]]"));
  CHECK(invoke({"triangles", "-"}, "D?{").out.rfind("0 triangle", 0) == 0);
}

TEST_CASE("cli: explicit seed triangle") {
  const std::string paw = edge_list(testing::paw());
  auto lex = parse_json(invoke({"two-partition", "-", "--json"}, paw).out);
  auto seeded = parse_json(invoke({"two-partition", "-", "--json", "--seed-triangle", "2,1,0"}, paw).out);
  auto named = parse_json(invoke({"two-partition", "-", "--json", "--seed-triangle", "lexmin"}, paw).out);
  CHECK(lex["witness"] == seeded["witness"]);
  CHECK(lex["witness"] == named["witness"]);
  CHECK(lex["witness"] == nlohmann::ordered_json::parse("[[0,1,2],[3]]"));
  CHECK(invoke({"two-partition", "-", "--seed-triangle", "0,1,3"}, paw).code == 1);
}

TEST_CASE("cli: products and product checks") {
  TempFile p3(edge_list(testing::path(3))), k2(edge_list(testing::complete(2)));
  auto a = parse_json(invoke({"product", p3.path, k2.path, "--kind", "lex", "--json"}).out);
  auto b = parse_json(invoke({"product", k2.path, p3.path, "--kind", "lex", "--json"}).out);
  CHECK(a["graph"]["m"] == 11);
  CHECK(b["graph"]["m"] == 13);

  auto strong = invoke({"product-check", p3.path, p3.path, "--kind", "strong", "--json"});
  CHECK(strong.code == 0);
  auto doc = parse_json(strong.out);
  CHECK(doc["result"]["holds"] == true);
  CHECK(doc["result"]["chi"] == 4);

  auto box = invoke({"product-check", p3.path, k2.path, "--kind", "cartesian", "--json"});
  CHECK(box.code == 0);
  CHECK(parse_json(box.out)["result"]["holds"] == true);
}

TEST_CASE("cli: reduce then extract recovers a proper coloring") {
  const Graph c5 = testing::cycle(5);
  TempFile graph(edge_list(c5));
  auto red = parse_json(invoke({"reduce", graph.path, "--k", "3", "--json"}).out);
  CHECK(red["result"]["universal_vertex"] == 5);
  CHECK(red["graph"]["m"] == 10);

  auto r = invoke({"extract", graph.path, "--k", "3", "--json", "--set", "0,2", "--set", "1,3", "--set", "4",
                   "--set", "5"});
  REQUIRE(r.code == 0);
  auto colors = parse_json(r.out)["result"].get<std::vector<std::size_t>>();
  CHECK(is_proper_coloring(c5, colors));

  auto broken = invoke({"extract", graph.path, "--k", "3", "--set", "0,1", "--set", "2,3", "--set", "4",
                        "--set", "5"});
  CHECK(broken.code == 1);
}
