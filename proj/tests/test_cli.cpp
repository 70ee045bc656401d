#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "helpers.hpp"
#include "tempered/report.hpp"

using namespace tempered;
using testing::code_of;
using testing::h2;
using testing::w2;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    out.push_back(l);
  }
  return out;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("classify") {
  const auto r = run({"classify", "sl2r", "--radius", "5", "--format", "csv"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 12);
  CHECK(ls[0] == "kappa,N,r_order,minimal_k_types,dirac_hw");
  CHECK(contains(r.out, "\r\n"));

  const auto j = run({"classify", "sp4r", "--radius", "3", "--format", "json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["group"] == "sp4r");
  REQUIRE(!doc["components"].empty());
  for (const auto& c : doc["components"])
    CHECK(c["minimal_k_types"].size() == (std::size_t{1} << c["N"].get<int>()));

  CHECK(run({"classify", "sp4r", "--radius", "2"}).code == 0);
  CHECK(run({"classify", "nosuch", "--radius", "1"}).code == 2);
  CHECK(run({"classify", "sp4r", "--radius", "1.5"}).code == 2);
  CHECK(run({"classify", "sp4r", "--radius", "-1"}).code == 2);
  CHECK(run({"classify", "sp4r", "--radius", "2", "--format", "xml"}).code == 2);
  CHECK(run({"classify", "sl2c", "--radius", "3"}).code == 0);
  CHECK(run({"classify", "su21", "--radius", "3"}).code == 0);
}

TEST_CASE("match") {
  auto r = run({"match", "sp4r", "--mu", "2,0", "--direction", "inverse"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "kappa: (1/2,1/2)"));

  r = run({"match", "sp4r", "--mu", "1/2,-1/2", "--direction", "forward"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "minimal_k_types: (2,-1);(1,-2)"));

  r = run({"match", "sp4r", "--mu", "0,0", "--direction", "inverse"});
  CHECK(r.code == 4);
  CHECK_FALSE(r.err.empty());

  r = run({"match", "sp4r", "--mu", "3,-1", "--direction", "inverse"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "kappa: (3/2,-1/2)"));
  CHECK(contains(r.out, "N: 0"));
  CHECK(run({"match", "sp4r", "--mu", "1/2,1/2", "--direction", "inverse"}).code == 2);
  CHECK(run({"match", "sp4r", "--mu", "2,0", "--format", "csv"}).code == 2);
  CHECK(run({"match", "sp4r", "--mu", "1,0", "--direction", "forward"}).code == 2);
  CHECK(run({"match", "sp4r", "--mu", "0,1", "--direction", "inverse"}).code == 2);
  CHECK(run({"match", "sp4r", "--mu", "1,2,3"}).code == 2);
  CHECK(run({"match", "sl2r", "--mu=-1", "--direction", "inverse"}).code == 0);

  const auto j = run({"match", "sp4r", "--mu", "4,3", "--direction", "inverse", "--format", "json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["kappa"] == nlohmann::json::array({"5/2", "3/2"}));
  CHECK(doc["mu"] == nlohmann::json::array({"4", "3"}));
}

TEST_CASE("krep") {
  auto r = run({"krep", "sp4r", "dim", "2,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  r = run({"krep", "sp4r", "diracmult", "--tau", "1/2,1/2", "--v", "2,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = run({"krep", "sl2r", "weights", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "{0:1}\n");
  CHECK(run({"krep", "sp4r", "dim", "0,2"}).code == 2);
  CHECK(run({"krep", "sp4r", "dim", "x"}).code == 2);
  CHECK(run({"krep", "sp4r", "explode", "1,0"}).code == 2);
  r = run({"krep", "sp4r", "spin"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "(3/2,3/2):1"));
}

TEST_CASE("catalog and validate") {
  auto r = run({"catalog"});
  CHECK(r.code == 0);
  for (const auto& name : catalog_names()) CHECK(contains(r.out, name));
  r = run({"catalog", "sp4r"});
  CHECK(r.code == 0);
  CHECK(parse_descriptor(r.out) == catalog("sp4r"));

  const auto dir = std::filesystem::temp_directory_path() / "tempered-cli-tests";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "good.desc") << serialize_descriptor(catalog("su21"));
  CHECK(run({"validate", (dir / "good.desc").string()}).code == 0);

  auto bad = catalog("sp4r");
  bad.form = BilinearForm({{1, 2}, {2, 1}});
  std::ofstream(dir / "bad.desc") << serialize_descriptor(bad);
  r = run({"validate", (dir / "bad.desc").string()});
  CHECK(r.code == 2);
  CHECK(contains(r.out + r.err, "form not positive definite"));
  CHECK(run({"validate", (dir / "missing.desc").string()}).code == 2);

  CHECK(run({"classify", (dir / "good.desc").string(), "--radius", "2"}).code == 0);
}

TEST_CASE("figure") {
  const auto sp = catalog("sp4r");
  const auto g = cli::build_grid(sp, {-6, 6}, {-6, 6});
  const auto* c43 = g.at(4, 3);
  REQUIRE(c43);
  CHECK(c43->kind == cli::GridCell::Kind::Bullet);
  CHECK(c43->kappa == h2(5, 3));
  REQUIRE(g.at(2, 2));
  REQUIRE(g.at(2, 0));
  CHECK(g.at(2, 2)->kind == cli::GridCell::Kind::Component);
  CHECK(g.at(2, 2)->id == g.at(2, 0)->id);
  CHECK(g.at(2, -1)->id == g.at(1, -2)->id);
  CHECK(g.at(2, -1)->id != g.at(2, 2)->id);
  CHECK(g.at(0, 0)->kind == cli::GridCell::Kind::Empty);
  CHECK(g.at(0, 1) == nullptr);

  // Claimed cells map back to their owner.
  for (const auto& c : g.cells)
    if (c.kind != cli::GridCell::Kind::Empty) CHECK(match_inverse(sp, Weight{Rational(c.m), Rational(c.n)}) == c.kappa);

  const auto text = run({"figure", "sp4r"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "•"));
  const auto csv = run({"figure", "sp4r", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(contains(csv.out, "4,3,bullet,\"(5/2,3/2)\",0"));

  CHECK(run({"figure", "su21", "--m-range", "-3:3", "--n-range", "-3:3"}).code == 0);
  CHECK(run({"figure", "sl2r"}).code == 2);
  CHECK(run({"figure", "sp4r", "--m-range", "3:1"}).code == 5);
  CHECK(run({"figure", "sp4r", "--m-range", "0:100000"}).code == 5);
  CHECK(run({"figure", "sp4r", "--m-range", "a:b"}).code == 2);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"bogus"}).code == 2);
  const std::vector<std::string> args{"classify", "sp4r", "--radius", "5", "--format", "csv"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit code contract") {
  CHECK(cli::exit_code_for(Errc::UnknownDescriptor) == 2);
  CHECK(cli::exit_code_for(Errc::ParseError) == 2);
  CHECK(cli::exit_code_for(Errc::InternalBijectionFailure) == 3);
  CHECK(cli::exit_code_for(Errc::DominanceFailure) == 3);
  CHECK(cli::exit_code_for(Errc::AmbiguousPositiveSystem) == 4);
  CHECK(cli::exit_code_for(Errc::RangeError) == 5);
  CHECK(cli::parse_range("-2:5").lo == -2);
  CHECK(code_of([] { cli::parse_range("5"); }) == Errc::ParseError);
}

TEST_CASE("report helpers") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(format_weight_list({w2(2, 2), w2(2, 0)}) == "(2,2);(2,0)");
  CHECK(to_json(h2(1, -1)) == nlohmann::json::array({"1/2", "-1/2"}));
  CHECK(parse_output_format("json") == OutputFormat::Json);
}
