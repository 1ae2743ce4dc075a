#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oaparity/cli.hpp"
#include "oaparity/constructions.hpp"
#include "oaparity/io.hpp"

using namespace oaparity;

namespace {

const std::filesystem::path kData = OAPARITY_TEST_DATA;

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

}  // namespace

TEST_CASE("text formats round trip byte for byte") {
  const std::string oa = "OA 3 2 0\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n";
  CHECK(format_oa_text(parse_oa_text(oa)) == oa);
  const std::string ls = "LS 3 1\n1 2 3\n2 3 1\n3 1 2\n";
  CHECK(format_ls_text(parse_ls_text(ls), 1) == ls);
  const std::string sigma = "SIGMA 3 4\n0 0 1\n0 0 0\n1 0 0\n";
  CHECK(format_sigma_text(parse_sigma_text(sigma)) == sigma);
  CHECK(format_oa_text(parse_oa_text("# c\n\nOA 3 2 1\n1 1 1\n1 2 2\n2 1 2\n2 2 1\n")) == oa);
}

TEST_CASE("JSON mirrors round trip") {
  const auto a = linear_mols(5);
  CHECK(oa_from_json(oa_to_json(a, 1)) == a);
  CHECK(oa_from_json(Json::parse(oa_to_json(a).dump())) == a);
  const auto s = LatinSquare::cyclic(4);
  CHECK(ls_from_json(ls_to_json(s)) == s);
  const auto sigma = sigma_parity(a);
  CHECK(sigma_from_json(sigma_to_json(sigma)) == sigma);
  const auto t = tau_parity(a);
  CHECK(tau_from_json(tau_to_json(t)) == t);
  CHECK(tau_to_json(t)["tau"][0][0] == 1);
  CHECK(parse_parity(tau_to_json(t).dump()) == t);
  CHECK(parse_parity(format_sigma_text(sigma)) == t);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_oa_text("OA 3 2 0\n0 0 0\n0 1 x\n1 0 1\n1 1 0\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_ls_text("# comment\nLS 2 0\n0 1\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_oa_text("OA 3 2 0\n0 0 0\n0 1 1\n1 0 1\n1 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_array("{\"format\":\"oa\"}"), ParseError);
  CHECK_THROWS_AS(parse_array(""), ParseError);
}

TEST_CASE("array inputs") {
  CHECK(read_array(data("good.oa")).array.columns() == 3);
  const auto ls = read_array(data("cyclic3.ls"));
  CHECK(ls.from_latin_square);
  CHECK(ls.array.order() == 3);
  CHECK_THROWS_AS(read_array(data("bad.oa")), DomainError);
}

TEST_CASE("catalogue ingestion") {
  CHECK(ingest_catalogue(data("empty.mols")).empty());
  const auto pair = ingest_catalogue(data("pair3.mols"));
  REQUIRE(pair.size() == 1);
  CHECK(pair[0].label == "p3");
  CHECK(pair[0].note == "linear pair");
  CHECK(parse_catalogue(format_catalogue_entry(pair[0])).front().squares == pair[0].squares);
  CHECK_THROWS_WITH_AS(ingest_catalogue(data("duplicate.mols")), doctest::Contains("orthogonal"), DomainError);
  CHECK_THROWS_AS(parse_catalogue("MOLSSET a 3 5 0\n"), ParseError);
}

TEST_CASE("CLI exit codes") {
  CHECK(run_cli({"validate", data("good.oa")}).out == "OA(3,2) valid\n");
  CHECK(run_cli({"validate", data("cyclic3.ls")}).out == "LS(3) valid\n");
  const auto bad = run_cli({"validate", data("bad.oa")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run_cli({"enumerate", "--k", "9", "--nmod4", "0"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"validate", data("missing.oa")}).code == 1);
}

TEST_CASE("CLI commands") {
  const auto e = run_cli({"enumerate", "--k", "5", "--nmod4", "3"});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("2 classes: 192, 320\n", 0) == 0);
  const auto j = Json::parse(run_cli({"--json", "enumerate", "--k", "4", "--nmod4", "2"}).out);
  CHECK(j["classes"] == 3);

  const auto p = run_cli({"--json", "parity", data("good.oa")});
  CHECK(p.code == 0);
  CHECK(Json::parse(p.out)["pp_plausible"] == "yes");

  CHECK(run_cli({"graphs", "--dot", data("good.oa")}).out.find("digraph") != std::string::npos);
  CHECK(run_cli({"class", data("good.oa")}).code == 0);
  CHECK(run_cli({"ensemble", data("good.oa")}).code == 0);

  const auto d = run_cli({"construct", "desarguesian", "--q", "4"});
  CHECK(d.code == 0);
  CHECK(parse_oa_text(d.out) == linear_mols(4));
  CHECK(run_cli({"construct", "desarguesian", "--q", "6"}).code == 1);
  const auto t = run_cli({"construct", "thm45", "--n", "11", "--pattern", "rnr"});
  CHECK(parse_oa_text(t.out) == thm45_oa(11, ResiduePattern::RNR));
  const auto s = run_cli({"construct", "sigma", "--kind", "block", "--n", "6"});
  CHECK(parse_sigma_text(s.out) == block_sigma(6));
  CHECK(run_cli({"construct", "sigma", "--kind", "pp-random", "--n", "6", "--seed", "3"}).out ==
        run_cli({"construct", "sigma", "--kind", "pp-random", "--n", "6", "--seed", "3"}).out);

  CHECK(run_cli({"search", "latin", "--n", "4"}).out.rfind("n 4: 576 Latin squares\n", 0) == 0);
  const auto so = run_cli({"search", "oa", "--k", "3", "--n", "5", "--type", "011"});
  CHECK(so.code == 0);
  CHECK(so.out.find("found") != std::string::npos);
  CHECK(run_cli({"search", "oa", "--k", "4", "--n", "7", "--budget", "1"}).code == 1);
}

TEST_CASE("catalogue emitted by the CLI ingests to the expected class") {
  const auto emitted = run_cli({"construct", "desarguesian", "--q", "9", "--emit-mols"});
  REQUIRE(emitted.code == 0);
  const auto path = std::filesystem::temp_directory_path() / "oaparity_q9.mols";
  std::ofstream(path) << emitted.out;
  const auto r = run_cli({"--json", "ingest", path.string()});
  std::filesystem::remove(path);
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["entries"][0]["class_size"] == 1290240);
}
