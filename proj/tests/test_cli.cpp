#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pdom/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pdom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(P_tmpdir) + "/pdom_test_" + name;
  std::ofstream(path) << text;
  return path;
}

int count_lines(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("gamma command") {
  const auto r = run({"gamma", "--gen", "path:6", "--p", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "graph = EhCG\norder = 6\np = 1/2\ntarget = 3\ngamma_p = 1\nwitness = {1}\n"
        "coverage = 3/6\n");
  CHECK(run({"gamma", "--gen", "subdivided-star:8", "--p", "1/2"}).out.find("witness = {0}\n") !=
        std::string::npos);
  const auto zero = run({"gamma", "--gen", "path:1", "--p", "0/1"});
  CHECK(zero.out.find("gamma_p = 0\nwitness = {}\n") != std::string::npos);
  const auto rec = run({"gamma", "--gen", "path:6", "--p", "1/2", "--format", "records"});
  CHECK(rec.out == "# graph\tp\ttarget\tgamma_p\twitness\tcoverage\nEhCG\t1/2\t3\t1\t{1}\t3/6\n");
  const auto dot = run({"gamma", "--gen", "path:3", "--format", "dot"});
  CHECK(dot.out.rfind("graph G {", 0) == 0);
  CHECK(dot.out.find("1 [shape=box") != std::string::npos);
}

TEST_CASE("influence command") {
  const auto kb = run({"influence", "--gen", "complete-bipartite:4,2", "--all-p"});
  CHECK(kb.code == 0);
  CHECK(kb.out.substr(kb.out.rfind("intersection")) == "intersection = {4,5}\n");
  CHECK(run({"influence", "--gen", "path:6", "--p", "1/1"}).out ==
        "p = 1/1  gamma_p = 2  sets = 1  influencing = {1,4}\n");
  const auto f2 = run({"influence", "--gen", "fig2", "--all-p"});
  CHECK(f2.out.substr(f2.out.rfind("intersection")) == "intersection = {}\n");
  CHECK(count_lines(f2.out) == 10);
}

TEST_CASE("enumerate command") {
  CHECK(count_lines(run({"enumerate", "--gen", "fig3", "--p", "7/9"}).out) == 10);
  CHECK(run({"enumerate", "--gen", "path:2", "--p", "1/1"}).out == "{0}\n{1}\n");
  CHECK(run({"enumerate", "--gen", "fig2", "--p", "8/9"}).out == "{5,6}\n");
  CHECK(run({"enumerate", "--gen", "fig2", "--p", "8/9", "--format", "records"}).out ==
        "# size\tset\n2\t{5,6}\n");
  CHECK(run({"enumerate", "--gen", "fig2", "--format", "dot"}).code == 2);
}

TEST_CASE("scan command") {
  const auto four = run({"scan", "--max-order", "4", "--p", "1/2"});
  CHECK(four.code == 0);
  CHECK(four.out == "# g6_g\tg6_h\tp\tgp_g\tgp_h\tgp_prod\tholds\twitness\tregime\n"
                    "pairs=55, failures=0\n");
  CHECK(run({"scan", "--max-order", "2", "--p", "1/1"}).out.find("failures=0") !=
        std::string::npos);
  const std::string file = temp_file("family.g6", "A_\nBw\nBW\n");
  const auto custom = run({"scan", "--graphs", file, "--p", "1/2"});
  CHECK(custom.code == 0);
  CHECK(custom.out.find("pairs=6, failures=0") != std::string::npos);
  CHECK(run({"scan", "--max-order", "9"}).code == 3);
  CHECK(run({"scan", "--max-order", "5", "--p", "0.5"}).code == 2);
}

TEST_CASE("product and generate commands") {
  CHECK(run({"product", "--gen", "path:2", "--gen2", "path:2"}).out == "Cr\n");
  CHECK(run({"product", "--gen", "complete:3", "--gen2", "complete:3"}).out == "H{S{aSf\n");
  const auto dot = run({"product", "--gen", "path:3", "--gen2", "complete:4", "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph G {\n", 0) == 0);
  CHECK(run({"product", "--gen", "path:9", "--gen2", "path:8"}).code == 3);
  CHECK(run({"generate", "--gen", "path:3"}).out == "Bg\n");
  CHECK(run({"generate", "--g6", "D?{", "--dot"}).out.find("0 -- 4;") != std::string::npos);
}

TEST_CASE("file inputs") {
  const std::string edges = temp_file("edges.txt", "n 4\n0 1\n1 2\n");
  CHECK(run({"generate", "--file", edges}).out == "Cg\n");
  const std::string g6 = temp_file("one.g6", "D?{\n");
  CHECK(run({"gamma", "--file", g6}).out.find("gamma_p = 1\n") != std::string::npos);
  const std::string bad = temp_file("bad.txt", "0 1\n1 y\n");
  const auto r = run({"gamma", "--file", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"gamma", "--file", "/nonexistent/graph"}).code == 2);
}

TEST_CASE("errors and exit codes") {
  CHECK(run({"gamma", "--gen", "path:100"}).code == 3);
  CHECK(run({"gamma", "--g6", "D?"}).code == 2);
  CHECK(run({"gamma", "--gen", "path:6", "--p", "0.5"}).code == 2);
  CHECK(run({"gamma", "--gen", "path:6", "--p", "3/2"}).code == 2);
  CHECK(run({"gamma"}).code == 2);
  CHECK(run({"gamma", "--gen", "path:3", "--g6", "Bw"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"gamma", "--gen", "wheel:5"}).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"influence", "--gen", "fig4", "--all-p", "--format",
                                         "records"};
  CHECK(run(args).out == run(args).out);
}
