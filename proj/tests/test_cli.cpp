#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "serialize.hpp"

using namespace cherednik;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented invocations") {
  auto g = run({"diagram", "gamma", "--tau", "2,1", "--s", "1", "--l", "1", "--json"});
  CHECK(g.code == 0);
  CHECK(g.out == "{\"diagram\":[2,1,1],\"j_s\":1,\"k_insert\":1}\n");
  auto l = run({"char", "l-empty", "--mu", "1", "--k", "2", "--N", "6"});
  CHECK(l.code == 0);
  CHECK(l.out == "[0,1,0,1,0,1,0]\n");
  auto c = run({"diagram", "core", "--tau", "8,5,4,3,3,2", "--s", "22"});
  CHECK(c.out == "(7,4,3,2,2,2,2)\n");
}

TEST_CASE("emit") {
  CHECK(io::emit_json(io::to_json(Partition{2, 1})) == "[2,1]");
  CHECK(io::emit_json(io::to_json(Rational(-3, 2))) == "{\"den\":\"2\",\"num\":\"-3\"}");
  std::vector<Rational> c{1, 0, 1};
  CHECK(io::emit_json(io::to_json(QSeries(2, c))) == "{\"coeffs\":[\"1\",\"0\",\"1\"],\"trunc\":2}");
  CHECK(io::emit_text(io::to_json(Partition{})) == "empty\n");
}

TEST_CASE("round trips") {
  for (const auto& p : partitions_up_to(5)) CHECK(io::partition_from_json(io::to_json(p)) == p);
  const Rational big = parse_rational("-98765432109876543210987654322/7");
  CHECK(big.get_den() == 7);
  CHECK(io::rational_from_json(io::json::parse(io::emit_json(io::to_json(big)))) == big);
  QSeries s = QSeries::geometric(7, 3).scaled(Rational(2, 5));
  CHECK(io::qseries_from_json(io::to_json(s)) == s);
  Line l = line_of(Partition{2}, Partition{3, 1}, 2);
  CHECK(io::line_from_json(io::to_json(l)) == l);
  PointReport r = classify_point(Partition{}, ExactPoint{2, 4}, 4);
  CHECK(io::emit_json(io::to_json(io::report_from_json(io::to_json(r)))) == io::emit_json(io::to_json(r)));
}

TEST_CASE("partition arguments") {
  CHECK(io::parse_partition("empty") == Partition{});
  CHECK(io::parse_partition("3,1,1") == Partition{3, 1, 1});
  CHECK_THROWS_AS(io::parse_partition("3,,1"), DomainError);
  CHECK_THROWS_AS(io::parse_partition("1,2"), DomainError);
  CHECK_THROWS_AS(io::parse_partition("a"), DomainError);
}

TEST_CASE("exit codes") {
  auto bad = run({"diagram", "bogus"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("bogus") != std::string::npos);
  CHECK(bad.err.find("cherednik-cli diagram (") != std::string::npos);
  auto badtau = run({"diagram", "transpose", "--tau", "1,2"});
  CHECK(badtau.code == 2);
  CHECK(badtau.err.find("--tau") != std::string::npos);
  CHECK(run({"diagram", "core"}).code == 2);
  CHECK(run({}).code == 2);
  auto dom = run({"diagram", "tilde", "--tau", "3", "--n", "5"});
  CHECK(dom.code == 3);
  CHECK(run({"point", "classify", "--tau", "empty", "--c-prime", "1", "--nu", "2"}).code == 3);
  CHECK(run({"diagram", "core", "--tau", "2,1", "--s", "2"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("config file and overrides") {
  const std::string path = "cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"N": 3, "format": "json"})";
  }
  auto a = run({"--config", path, "char", "l-empty", "--mu", "1", "--k", "2"});
  CHECK(a.out == "{\"coeffs\":[\"0\",\"1\",\"0\",\"1\"],\"trunc\":3}\n");
  auto b = run({"--config", path, "char", "l-empty", "--mu", "1", "--k", "2", "--N", "2", "--format", "text"});
  CHECK(b.out == "[0,1,0]\n");
  setenv(cli::kConfigEnv, path.c_str(), 1);
  auto c = run({"char", "l-empty", "--mu", "1", "--k", "2"});
  CHECK(c.out == a.out);
  unsetenv(cli::kConfigEnv);
  CHECK(run({"--config", "missing.json", "diagram", "f", "--tau", "2"}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("every command group answers") {
  const std::vector<std::vector<std::string>> cmds{
      {"diagram", "transpose", "--tau", "6,5,4,1"},
      {"diagram", "content", "--tau", "2,1"},
      {"diagram", "f", "--tau", "2,1"},
      {"diagram", "hooks", "--tau", "2,1"},
      {"diagram", "rec", "--l", "7", "--eta", "9,7,7,5,5,5,4,1"},
      {"diagram", "tilde", "--tau", "6,5,4,1", "--n", "31"},
      {"diagram", "pieri", "--tau", "2,1"},
      {"diagram", "cset", "--tau", "8,5,4,3,3,2", "--max-s", "33"},
      {"line", "of", "--tau", "empty", "--mu", "2", "--m", "2"},
      {"line", "in-b", "--tau", "empty", "--mu", "2", "--m", "2"},
      {"line", "intersect", "--tau", "empty", "--mu", "1", "--m", "1", "--tau2", "empty", "--mu2", "2", "--m2", "4"},
      {"point", "classify", "--tau", "empty", "--c-prime", "7", "--nu", "-2"},
      {"point", "classify", "--tau", "empty", "--kind", "generic-line", "--s", "0", "--r", "2"},
      {"singular", "--tau", "1", "--c-prime", "-3/2", "--nu", "1/2"},
      {"char", "verma", "--mu", "1", "--tau", "empty", "--N", "6"},
      {"char", "simple", "--mu", "1", "--tau", "empty", "--s", "0", "--r", "2", "--N", "6"},
      {"char", "table", "--tau", "empty", "--size-bound", "1", "--N", "5"},
      {"char", "min-degree", "--mu", "2,1", "--tau", "1"},
      {"resolution", "--tau", "empty", "--s", "2", "--sign", "1", "--r", "1", "--max-l", "3"},
      {"kronecker", "classical", "--lambda", "1,1,1", "--mu", "2,1", "--tau", "2,1"},
      {"kronecker", "reduced", "--lambda", "2", "--tau", "1", "--mu", "1"},
      {"symfun", "character", "--lambda", "2,1", "--rho", "3"},
      {"symfun", "schur", "--lambda", "2,1", "--kind", "finite", "--m", "3"},
      {"length", "classify", "--tau", "empty", "--c-prime", "-3/2", "--nu", "1/2"},
      {"classical", "core", "--lambda", "5,4,2,2", "--e", "7"},
      {"classical", "rec", "--l", "1", "--beta", "3,1,1,1", "--e", "7"},
      {"classical", "block-chain", "--beta", "empty", "--n", "4", "--s", "0"},
      {"classical", "simple", "--lambda", "7", "--n", "7", "--s", "0"},
      {"classical", "char", "--mu", "1,1,1", "--tau", "2,1", "--n", "3", "--N", "5"},
  };
  for (const auto& cmd : cmds) {
    for (const char* fmt : {"json", "text"}) {
      auto args = cmd;
      args.insert(args.end(), {"--format", fmt});
      auto r = run(args);
      INFO(cmd[0] << " " << cmd[1] << " " << fmt << ": " << r.err);
      CHECK(r.code == 0);
      CHECK_FALSE(r.out.empty());
      if (std::string(fmt) == "json") CHECK(io::json::accept(r.out));
      // Output is byte-identical across runs.
      CHECK(run(args).out == r.out);
    }
  }
  CHECK(run({"kronecker", "classical", "--lambda", "1,1,1", "--mu", "2,1", "--tau", "2,1"}).out == "1\n");
  CHECK(run({"classical", "core", "--lambda", "5,4,2,2", "--e", "7"}).out == "(3,1,1,1)\n");
}
