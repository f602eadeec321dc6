#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using treemu::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("treemu_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("mu and check") {
  const std::string k13 = temp_file("k13.txt", "4\n0 1\n0 2\n0 3\n");
  const auto mu = call({"mu", k13});
  CHECK(mu.code == 0);
  CHECK(mu.out.rfind("mu: 4.000000000000\n", 0) == 0);

  CHECK(call({"check", k13, "--alpha", "4"}).code == 0);
  CHECK(call({"check", k13, "--alpha", "4"}).out == "check: true\n");
  CHECK(call({"check", k13, "--alpha", "5"}).code == 1);
  CHECK(call({"check", k13, "--alpha", "8/2"}).code == 0);
  CHECK(call({"check", k13, "--alpha", "4/0"}).code == 2);
  CHECK(call({"check", k13, "--alpha", "four"}).code == 2);
  CHECK(call({"check", k13}).code == 2);

  const std::string lev = temp_file("p3.txt", "0 1 2\n");
  CHECK(call({"check", lev, "--alpha", "3", "--format", "levelseq"}).code == 0);

  const std::string bad = temp_file("dup.txt", "3\n0 1\n1 0\n");
  const auto err = call({"mu", bad});
  CHECK(err.code == 2);
  CHECK(err.err.find("NotATree") != std::string::npos);
  CHECK(call({"mu", "/nonexistent/tree.txt"}).code == 2);
}

TEST_CASE("witness and build") {
  const auto w = call({"witness", "--alpha", "5", "--r", "3"});
  CHECK(w.code == 0);
  CHECK(w.out == "alpha 5\nr 3\ns 3\n( * * )\n( * * )\n( * * )\n");

  CHECK(call({"witness", "--alpha", "4", "--r", "2", "--max-values", "100"}).code == 1);
  CHECK(call({"witness", "--alpha", "1", "--r", "2"}).code == 2);

  const std::string file = temp_file("w5.txt", w.out);
  const auto tree = call({"build", "--witness", file});
  CHECK(tree.code == 0);
  CHECK(tree.out.rfind("10\n", 0) == 0);

  const auto report = call({"build", "--witness", file, "--report"});
  CHECK(report.code == 0);
  CHECK(report.out.find("alpha: 5\n") != std::string::npos);
  CHECK(report.out.find("order: 10\n") != std::string::npos);
  CHECK(report.out.find("max_degree: 3\n") != std::string::npos);
  CHECK(report.out.find("verified: true\n") != std::string::npos);
  CHECK(report.out.find("phi 0: -1\n") != std::string::npos);
  CHECK(report.out.find(": 3/2\n") != std::string::npos);

  CHECK(call({"build", "--witness", file, "--out", "dot"}).out.rfind("graph T {", 0) == 0);

  const std::string broken = temp_file("bad.txt", "alpha 5\nr 3\ns 2\n( * * )\n( * * )\n");
  CHECK(call({"build", "--witness", broken}).code == 2);
}

TEST_CASE("star-gap") {
  const auto rep = call({"star-gap", "5", "--report"});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("alpha: 6\n") != std::string::npos);
  CHECK(rep.out.find("order: 30\n") != std::string::npos);
  CHECK(rep.out.find("max_degree: 4\n") != std::string::npos);
  CHECK(rep.out.find("verified: true\n") != std::string::npos);

  CHECK(call({"star-gap", "12", "--strategy", "divisor=2", "--report"}).code == 0);
  CHECK(call({"star-gap", "9", "--strategy", "prime", "--report"}).code == 0);
  CHECK(call({"star-gap", "8", "--strategy", "prime"}).code == 2);
  CHECK(call({"star-gap", "8", "--strategy", "divisor=3"}).code == 2);
  CHECK(call({"star-gap", "8", "--strategy", "bogus"}).code == 2);
  CHECK(call({"star-gap", "3"}).code == 1);
}

TEST_CASE("enumerate, audits, scan and export") {
  const auto e = call({"enumerate", "--max-order", "4"});
  CHECK(e.code == 0);
  CHECK(e.out == "0 1\n0 1 1\n0 1 2 1\n0 1 1 1\n");
  CHECK(call({"enumerate", "--max-order", "10", "--count"}).out.find("10: 106") != std::string::npos);
  CHECK(call({"enumerate", "--max-order", "13"}).code == 2);

  const auto v = call({"verify-theorem1", "--max-order", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.find("trees: 7\n") != std::string::npos);
  CHECK(v.out.find("violations: 0\n") != std::string::npos);
  CHECK(call({"verify-theorem1", "--max-order", "13"}).code == 2);
  CHECK(call({"verify-theorem1", "--max-order", "4", "--machine"}).out.find('\t') != std::string::npos);

  CHECK(call({"bound-audit", "--max-order", "8"}).code == 0);

  const auto scan = call({"conjecture-scan", "--alpha", "5", "--r", "3"});
  CHECK(scan.code == 0);
  CHECK(scan.out.find("in_window: true\n") != std::string::npos);
  CHECK(scan.out.find("witness: found\n") != std::string::npos);

  const std::string k13 = temp_file("k13x.txt", "4\n0 3\n0 2\n0 1\n");
  CHECK(call({"export", k13, "--to", "edgelist"}).out == "4\n0 1\n0 2\n0 3\n");
  CHECK(call({"export", k13, "--to", "levelseq"}).out == "0 1 1 1\n");
}

TEST_CASE("usage") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"mu", "--help"}).code == 0);
}
