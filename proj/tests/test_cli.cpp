#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "loopkit/cli.hpp"
#include "loopkit/magma.hpp"

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = loopkit::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class TempFile {
public:
  TempFile(const std::string& name, const std::string& content) {
    path_ = std::filesystem::temp_directory_path() / ("loopkit_test_" + name);
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  std::string str() const { return path_.string(); }

private:
  std::filesystem::path path_;
};

const std::string kC12Path = std::string(LOOPKIT_TABLES_DIR) + "/c12.tbl";

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("demo prints the golden construction") {
  const CliResult result = run_cli({"demo"});
  CHECK(result.status == 0);
  CHECK(result.err.empty());
  CHECK(contains(result.out, "alpha1S2 = (0 1 2)(3 4 5)(6 7 8)(9 10 11)\n"));
  CHECK(contains(result.out, "beta1T2 = (0 2 1)(3 5 4)(6 8 7)(9 11 10)\n"));
  CHECK(contains(result.out, "gamma1R2 = ()\n"));
  CHECK(contains(result.out, "triple = (R1, R2, R0) in Aut(L)\n"));

  // byte-identical on repeat runs
  CHECK(run_cli({"demo"}).out == result.out);
}

TEST_CASE("embedded demo table matches the shipped fixture file") {
  std::ifstream in(kC12Path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CHECK(loopkit::read_table_file(buffer.str()) == loopkit::cli::embedded_demo_table());
  CHECK(loopkit::cli::embedded_demo_table() ==
        loopkit::from_table(fixtures::c12_rows()));
}

TEST_CASE("check subcommand") {
  CliResult result = run_cli({"check", "--table", kC12Path, "--identity", "c"});
  CHECK(result.status == 0);
  CHECK(contains(result.out, "c: holds=true"));
  CHECK_FALSE(contains(result.out, "steiner"));

  result = run_cli({"check", "--table", kC12Path});
  CHECK(result.status == 0);
  CHECK(contains(result.out, "table: order 12, identity 0"));
  CHECK(contains(result.out, "lc: holds=true"));
  CHECK(contains(result.out, "steiner: holds=false witness=(1)"));
  CHECK(contains(result.out, "associative: holds=false witness=(3, 6, 3)"));
}

TEST_CASE("check rejects malformed tables with exit 1") {
  const TempFile bad("bad.tbl", "2\n0 1\n1 1\n");
  const CliResult result = run_cli({"check", "--table", bad.str()});
  CHECK(result.status == 1);
  CHECK(result.err.rfind("ERROR latin-violation:", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"check"}).status == 2);  // missing --table
  CHECK(run_cli({"frobnicate"}).status == 2);
  const CliResult result =
      run_cli({"check", "--table", kC12Path, "--identity", "bogus"});
  CHECK(result.status == 2);
  CHECK(result.err.rfind("ERROR usage:", 0) == 0);
}

TEST_CASE("autotopism subcommand") {
  CliResult result = run_cli({"autotopism", "--table", kC12Path, "--x", "4"});
  CHECK(result.status == 0);
  CHECK(contains(result.out, "x = 4, x^2 = 2, trivial = false"));
  CHECK(contains(result.out, "alpha1S2 = (0 1 2)(3 4 5)(6 7 8)(9 10 11)"));
  CHECK(contains(result.out,
                 "inverse = ((0 2 1)(3 5 4)(6 8 7)(9 11 10), "
                 "(0 1 2)(3 4 5)(6 7 8)(9 10 11), ())"));

  result = run_cli({"autotopism", "--table", kC12Path, "--x", "0"});
  CHECK(result.status == 0);
  CHECK(contains(result.out, "trivial = true"));

  result = run_cli({"autotopism", "--table", kC12Path, "--x", "99"});
  CHECK(result.status == 1);
  CHECK(result.err.rfind("ERROR index-range:", 0) == 0);
}

TEST_CASE("parastrophe subcommand emits a table") {
  const TempFile z2("z2.tbl", "2\n0 1\n1 0\n");
  CliResult result = run_cli({"parastrophe", "--table", z2.str(), "--kind", "star"});
  CHECK(result.status == 0);
  CHECK(result.out == "2\n0 1\n1 0\n");

  result = run_cli({"parastrophe", "--table", z2.str(), "--kind", "sideways"});
  CHECK(result.status == 2);

  // rdiv of the order-12 loop differs from it
  result = run_cli({"parastrophe", "--table", kC12Path, "--kind", "rdiv"});
  CHECK(result.status == 0);
  const loopkit::CayleyTable parsed = loopkit::read_table_file(result.out);
  CHECK_FALSE(parsed == loopkit::from_table(fixtures::c12_rows()));
}

TEST_CASE("equiv-report subcommand") {
  const CliResult result = run_cli({"equiv-report", "--table", kC12Path});
  CHECK(result.status == 0);
  CHECK(contains(result.out,
                 "x=4 alpha1S2=(0 1 2)(3 4 5)(6 7 8)(9 10 11) "
                 "beta2T1=(0 1 2)(3 4 5)(6 7 8)(9 10 11)"));
  CHECK(contains(result.out, "(i) all components identity: no"));
  CHECK(contains(result.out, "(ii) rdiv = L: no, ldiv = L: no => no"));
  CHECK(contains(result.out, "(i) <=> (ii): ok"));
  CHECK(contains(result.out, "(ii) => (iii): ok"));
  CHECK(contains(result.out, "steiner criterion: no"));

  const TempFile q5("q5.tbl",
                    loopkit::write_table_file(loopkit::from_table(fixtures::order5_rows())));
  const CliResult bad = run_cli({"equiv-report", "--table", q5.str()});
  CHECK(bad.status == 1);
  CHECK(bad.err.rfind("ERROR not-c-loop:", 0) == 0);
}

TEST_CASE("sts subcommand") {
  CliResult result = run_cli({"sts", "--table", kC12Path});
  CHECK(result.status == 0);
  CHECK(contains(result.out, "ground[5] ="));
  CHECK(contains(result.out, "triple[0] = {0, 1, 2}"));
  CHECK(contains(result.out, "triple[1] = {3, 4, 5}"));
  CHECK(contains(result.out, "provenance: base 0 x 1 -> (0, 1, 2)"));
  CHECK(contains(result.out, "axiom i (distinct members): pass"));
  CHECK(contains(result.out,
                 "axiom ii (unique pair cover): fail pair={0, 3} covered 0 times"));
  CHECK(contains(result.out, "triples r = 2, r mod 6 = 2, admissible(1 or 3 mod 6): no"));

  const TempFile bases("bases.txt",
                       "(), (), ()\n"
                       "(0 1 2)(3 4 5)(6 7 8)(9 10 11), "
                       "(0 2 1)(3 5 4)(6 8 7)(9 11 10), ()\n");
  result = run_cli({"sts", "--table", kC12Path, "--bases", bases.str()});
  CHECK(result.status == 0);
  CHECK(contains(result.out, "bases 2"));

  const TempFile k4("k4.tbl", loopkit::write_table_file(fixtures::klein4_loop().table()));
  result = run_cli({"sts", "--table", k4.str()});
  CHECK(result.status == 1);
  CHECK(result.err.rfind("ERROR steiner-input:", 0) == 0);
}

TEST_CASE("enumerate subcommand") {
  const TempFile z3("z3.tbl", loopkit::write_table_file(fixtures::cyclic_loop(3).table()));
  CliResult result = run_cli({"enumerate", "--table", z3.str()});
  CHECK(result.status == 0);
  CHECK(contains(result.out, "autotopism count: 18"));

  result = run_cli({"enumerate", "--table", kC12Path});
  CHECK(result.status == 1);
  CHECK(result.err.rfind("ERROR order-too-large:", 0) == 0);
}

TEST_CASE("missing input file reports an io error") {
  const CliResult result = run_cli({"check", "--table", "/nonexistent/nowhere.tbl"});
  CHECK(result.status == 1);
  CHECK(result.err.rfind("ERROR io:", 0) == 0);
}
