#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "afcore/cli.hpp"
#include "afcore/graph.hpp"
#include "afcore/graph_json.hpp"

using nlohmann::json;
namespace cli = afcore::cli;

namespace {

const std::string kData = AFCORE_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "afcore");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("afcore_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("flag emits the Gr(2,4) relation") {
  const auto r = run({"flag", "--type", "A", "--rank", "3", "--subset", "1,3"});
  REQUIRE(r.code == cli::kExitOk);
  const json j = r.doc();
  CHECK(j.at("vertices").size() == 6);
  CHECK(j.at("edges").size() == 6);
  CHECK(j.at("reps").size() == 6);
  CHECK(j.at("reps")[0].at("word") == "1");

  const auto viaFile = run({"flag", "--input", data("gr24_cartan.json")});
  REQUIRE(viaFile.code == cli::kExitOk);
  CHECK(viaFile.doc() == j);

  const auto amp = run({"flag", "--type", "A", "--rank", "3", "--subset", "1,3", "--amplified"});
  REQUIRE(amp.code == cli::kExitOk);
  for (const auto& e : amp.doc().at("edges")) CHECK(e.at("mult") == "inf");
}

TEST_CASE("cone membership") {
  CHECK(run({"cone", "--graph", data("chain3.json"), "--element", "1,-7,4"}).out == "{\"member\":true}\n");
  CHECK(run({"cone", "--graph", data("chain3.json"), "--element", "0,-1,5"}).doc().at("member") == false);
  CHECK(run({"cone", "--relation", data("chain3_relation.json"), "--element", "0,0,0"}).doc().at("member") == true);
  CHECK(run({"cone", "--graph", data("chain3.json"), "--element", "1,2"}).code == cli::kExitInputError);
}

TEST_CASE("verify reports") {
  const auto ok = run({"verify", "--target", "plucker", "--truncation", "6"});
  REQUIRE(ok.code == cli::kExitOk);
  const json j = ok.doc();
  CHECK(j.at("all_pass") == true);
  for (const auto& rel : j.at("relations")) {
    CHECK(rel.contains("name"));
    CHECK(rel.contains("degree"));
    CHECK(rel.contains("interior_dim"));
    CHECK(rel.at("residual") == 0.0);
  }
  const auto bad = run({"verify", "--target", "plucker", "--truncation", "4", "--interior", "0"});
  CHECK(bad.code == cli::kExitVerificationFailed);
  CHECK(bad.doc().at("all_pass") == false);
  CHECK(run({"verify", "--target", "x6", "--truncation", "5"}).code == cli::kExitOk);
  CHECK(run({"verify", "--target", "grassmann-core", "--truncation", "4"}).code == cli::kExitOk);
  CHECK(run({"verify", "--target", "lens", "--weight", "2", "--ncap", "3", "--truncation", "6"}).code == cli::kExitOk);
  CHECK(run({"verify", "--target", "rank-one", "--truncation", "4", "--max-entry", "1"}).code == cli::kExitOk);
  CHECK(run({"verify", "--target", "lens", "--ncap", "4", "--truncation", "5"}).code == cli::kExitInputError);
  CHECK(run({"verify", "--target", "nothing"}).code == cli::kExitInputError);
}

TEST_CASE("moves") {
  const auto found = run({"moves", "--from", data("l24_tilde.json"), "--to", data("l24.json")});
  REQUIRE(found.code == cli::kExitOk);
  const json j = found.doc();
  CHECK(j.at("moves").size() <= 4);
  CHECK(j.at("after") == j.at("target"));
  const auto none = run({"moves", "--from", data("l24.json"), "--to", data("l24_tilde.json"), "--max-depth", "2"});
  CHECK(none.code == cli::kExitVerificationFailed);
  CHECK(none.doc().at("moves").is_null());
}

TEST_CASE("graph transforms round-trip") {
  for (const std::string cmd : {"closure", "reduce", "loops", "amplify"}) {
    const auto r = run({cmd, "--relation", data("gr24_hasse.json")});
    REQUIRE(r.code == cli::kExitOk);
    const json j = r.doc();
    if (cmd == "closure" || cmd == "reduce")
      CHECK(afcore::relation_to_json(afcore::relation_from_json(j)) == j);
    else
      CHECK(afcore::graph_to_json(afcore::graph_from_json(j)) == j);
  }
  CHECK(run({"closure", "--relation", data("gr24_hasse.json")}).doc().at("edges").size() == 14);
  CHECK(run({"reduce", "--relation", data("l24.json")}).doc() == json::parse(std::ifstream(data("gr24_hasse.json"))));
}

TEST_CASE("dimension group commands") {
  const auto k0 = run({"k0", "--relation", data("gr24_hasse.json"), "--core", "--kcheck", "5"});
  REQUIRE(k0.code == cli::kExitOk);
  const json j = k0.doc();
  CHECK(j.at("group").at("unit") == json::array({1, 1, 1, 1, 1, 1}));
  CHECK(j.at("certificate").at("checked_inequalities").size() == 30);
  CHECK(run({"k0", "--relation", data("chain3_relation.json")}).doc().contains("certificate") == false);

  const std::string rev = write_temp("rev.json", R"({"vertices":["a","b","c"],"edges":[{"src":"c","dst":"b"},{"src":"b","dst":"a"}]})");
  const auto iso = run({"iso", "--a", data("chain3_relation.json"), "--b", rev});
  REQUIRE(iso.code == cli::kExitOk);
  CHECK(iso.doc().at("bijection") == json{{"1", "c"}, {"2", "b"}, {"3", "a"}});
  const auto no = run({"iso", "--a", data("chain3_relation.json"), "--b", data("gr24_hasse.json")});
  CHECK(no.doc().at("isomorphic") == false);
}

TEST_CASE("projective ring commands") {
  const auto r = run({"cp", "--n", "3", "--element", "1,1,0", "--search-bound", "10"});
  REQUIRE(r.code == cli::kExitOk);
  const json j = r.doc();
  CHECK(j.at("necessary") == true);
  CHECK(j.at("certificate").is_null());
  CHECK(j.at("proof_of_nonmembership").at("argument") == "x2-product");
  CHECK(run({"cp", "--n", "2", "--element", "3,-4"}).doc().at("certificate").is_array());
  CHECK(run({"cp", "--n", "3", "--refute"}).doc().at("first_failure_k") == 2);
  CHECK(run({"cp", "--n", "3"}).code == cli::kExitInputError);
}

TEST_CASE("input errors") {
  CHECK(run({"closure", "--relation", data("gr24_hasse.json"), "--bogus"}).code == cli::kExitInputError);
  CHECK(run({}).code == cli::kExitInputError);
  CHECK(run({"frobnicate"}).code == cli::kExitInputError);
  CHECK(run({"closure", "--relation", "/nonexistent/file.json"}).code == cli::kExitInputError);
  const std::string cyclic =
      write_temp("cyclic.json", R"({"vertices":["1","2"],"edges":[{"src":"1","dst":"2"},{"src":"2","dst":"1"}]})");
  const auto cyc = run({"closure", "--relation", cyclic});
  CHECK(cyc.code == cli::kExitInputError);
  CHECK(cyc.out.empty());
  CHECK_FALSE(cyc.err.empty());
  const std::string broken = write_temp("broken.json", "{\"vertices\": [");
  CHECK(run({"loops", "--relation", broken}).code == cli::kExitInputError);
  CHECK(run({"moves", "--from", data("f24_tilde.json"), "--to", data("l24.json")}).code == cli::kExitInputError);
}

TEST_CASE("group size limit from the environment") {
  ::setenv("AFCORE_MAX_GROUP", "10", 1);
  CHECK(run({"flag", "--type", "A", "--rank", "3", "--subset", "1,3"}).code == cli::kExitInputError);
  ::setenv("AFCORE_MAX_GROUP", "24", 1);
  CHECK(run({"flag", "--type", "A", "--rank", "3", "--subset", "1,3"}).code == cli::kExitOk);
  ::setenv("AFCORE_MAX_GROUP", "many", 1);
  CHECK(run({"flag", "--type", "A", "--rank", "3"}).code == cli::kExitInputError);
  ::unsetenv("AFCORE_MAX_GROUP");
}

TEST_CASE("output is deterministic and --pretty only changes layout") {
  const std::vector<std::vector<std::string>> commands{
      {"flag", "--type", "B", "--rank", "3", "--subset", "2"},
      {"k0", "--relation", data("gr24_hasse.json"), "--core"},
      {"verify", "--target", "grassmann-core", "--truncation", "4"},
      {"moves", "--from", data("l24_tilde.json"), "--to", data("l24.json")}};
  for (const auto& c : commands) {
    const auto first = run(c), second = run(c);
    CHECK(first.out == second.out);
    auto pretty_args = c;
    pretty_args.insert(pretty_args.begin(), "--pretty");
    const auto pretty = run(pretty_args);
    CHECK(pretty.doc() == first.doc());
    CHECK(pretty.out != first.out);
  }
}
