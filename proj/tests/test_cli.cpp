#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tropgrass/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "tropgrass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = tropgrass::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = TROPGRASS_DATA_DIR;

bool all_claims_pass(const json& j) {
  for (const auto& c : j.at("claims"))
    if (!c.at("pass").get<bool>()) return false;
  return true;
}

}  // namespace

TEST_CASE("treespace stats") {
  auto r = call({"treespace", "stats", "--n", "6"});
  CHECK(r.code == tropgrass::cli::kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["f_vector"] == json({25, 105, 105}));
  CHECK(j["facets"] == 105);
  CHECK(all_claims_pass(j));
  for (const auto& c : j["claims"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("actual"));
  }
  CHECK(call({"treespace", "stats", "--n", "6"}).out == r.out);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == tropgrass::cli::kExitUsage);
  CHECK(call({"nonsense"}).code == tropgrass::cli::kExitUsage);
  CHECK(call({"treespace", "stats", "--n", "3"}).code == tropgrass::cli::kExitUsage);
  CHECK(call({"char7", "demo", "--char", "4"}).code == tropgrass::cli::kExitUsage);
  CHECK(call({"tree", "reconstruct", "--input", "/nonexistent.csv"}).code == tropgrass::cli::kExitUsage);
  CHECK(call({"groebner", "degree"}).code == tropgrass::cli::kExitUsage);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("tree reconstruction from a distance matrix") {
  auto r = call({"tree", "reconstruct", "--input", kData + "/snowflake_distances.csv"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["newick"] == "(((1:1,2:1):1,(3:1,4:1):1):1,5:1,6:1);");
  CHECK(j["tree"]["splits"].size() == 3);
}

TEST_CASE("plane subcommands") {
  auto w = kData + "/snowflake_w.json";
  auto t = json::parse(call({"plane", "type", "--input", w}).out);
  CHECK(t["count"] == 9);
  auto m = call({"plane", "member", "--input", w, "--point", "0,0,0,0,0,0"});
  CHECK(json::parse(m.out)["member"] == true);
  auto bad = json::parse(call({"plane", "member", "--input", w, "--point", "0,0,5,0,0,0"}).out);
  CHECK(bad["member"] == false);
  CHECK(bad.contains("violated_circuit"));
  CHECK(call({"plane", "dual", "--input", w}).code == 0);
  auto rec = call({"plane", "reconstruct", "--input", w});
  CHECK(rec.code == 0);
  CHECK(all_claims_pass(json::parse(rec.out)));
}

TEST_CASE("groebner subcommands and output files") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "tropgrass_cli_test";
  fs::create_directories(dir);
  {
    std::ofstream(dir / "w.json") << R"({"13": -4, "14": -4, "23": -4, "24": -4})";
  }
  auto out = (dir / "in.json").string();
  auto r = call({"groebner", "initial", "--plucker", "2,4", "--weight", (dir / "w.json").string(), "--output", out});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  auto j = json::parse(in);
  CHECK(j["initial_ideal"]["generators"] == json({"p_14*p_23 - p_13*p_24"}));
  {
    std::ofstream(dir / "ideal.json") << j["initial_ideal"].dump();
  }
  auto mf = json::parse(
      call({"groebner", "monomial-free", "--ideal", (dir / "ideal.json").string(), "--weight", (dir / "w.json").string()})
          .out);
  CHECK(mf["monomial_free"] == true);
  auto deg = json::parse(call({"groebner", "degree", "--plucker", "2,6"}).out);
  CHECK(deg["degree"] == "14");
  auto cap = call({"groebner", "intersect", "--ideal", (dir / "ideal.json").string(), "--other",
                   (dir / "ideal.json").string()});
  CHECK(cap.code == 0);
  fs::remove_all(dir);
}

TEST_CASE("char7 demo over GF(2) and the budget") {
  auto r = call({"char7", "demo", "--char", "2"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["monomial_free"] == true);
  CHECK(all_claims_pass(j));
  auto b = call({"char7", "demo", "--budget", "50"});
  CHECK(b.code == tropgrass::cli::kExitBudget);
  auto jb = json::parse(b.out);
  CHECK(jb.contains("budget_exceeded"));
  CHECK(all_claims_pass(jb));
  setenv("TROPGRASS_BUDGET", "50", 1);
  CHECK(call({"char7", "demo", "--wprime"}).code == tropgrass::cli::kExitBudget);
  unsetenv("TROPGRASS_BUDGET");
}

TEST_CASE("seeds") {
  auto a = call({"treespace", "verify-initial", "--n", "5", "--trees", "2", "--seed", "4"});
  auto b = call({"treespace", "verify-initial", "--n", "5", "--trees", "2", "--seed", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  setenv("TROPGRASS_SEED", "4", 1);
  auto c = call({"treespace", "verify-initial", "--n", "5", "--trees", "2"});
  unsetenv("TROPGRASS_SEED");
  CHECK(c.out == a.out);
  auto d = call({"treespace", "verify-initial", "--n", "5", "--trees", "2", "--seed", "5"});
  CHECK(d.out != a.out);
  CHECK(json::parse(a.out)["seed"] == 4);
}

TEST_CASE("scenario reports") {
  auto g = call({"g36", "verify", "--homology"});
  CHECK(g.code == 0);
  auto j = json::parse(g.out);
  CHECK(j["betti"] == json({1, 0, 0, 126}));
  CHECK(j["g36_f_vector"] == json({65, 550, 1395, 1035}));
  auto s = call({"sagbi", "demo"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["sagbi_basis"] == false);
}
