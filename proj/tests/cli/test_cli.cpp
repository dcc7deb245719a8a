#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hkd/cli.hpp"
#include "hkd/json_io.hpp"

namespace fs = std::filesystem;
using hkd::io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hkd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (fs::path(HKD_DATA_DIR) / name).string(); }

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("hkdl_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("density-betti on the Koszul table") {
  const auto r = run({"density-betti", "--in", data("koszul.json")});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["ehk"] == "1");
  CHECK(j["f"]["breakpoints"] == Json::array({"0", "1", "2"}));
  CHECK(j["f"]["pieces"] == Json::array({Json::array({"0", "1"}), Json::array({"2", "-1"})}));

  const auto e7 = run({"density-betti", "--in", data("e8_betti.json"), "--ring", data("e7_ring.json")});
  REQUIRE(e7.code == 0);
  CHECK(Json::parse(e7.out)["e0"] == "1/6");
}

TEST_CASE("catalog command") {
  const auto e8 = run({"catalog", "--family", "E8"});
  REQUIRE(e8.code == 0);
  const auto j = Json::parse(e8.out);
  CHECK(j["ehk"] == "239/120");
  CHECK(j["verdict"] == "agree");
  CHECK(j["p"] == 7);

  const auto d4 = Json::parse(run({"catalog", "--family", "D", "--n", "4"}).out);
  CHECK(d4["ehk"] == "31/16");
  CHECK(d4["verdict"] == "discrepancy");
  CHECK(d4["checks"]["table_vs_printed"] == "discrepancy");

  CHECK(run({"catalog", "--family", "A", "--n", "3", "--p", "3"}).code == 2);
  CHECK(run({"catalog", "--family", "E6", "--p", "3"}).code == 2);
  CHECK(run({"catalog", "--family", "Q"}).code == 1);
}

TEST_CASE("compare emits decreasing distances") {
  const auto ref = write("a2_closed.json", run({"catalog", "--family", "A", "--n", "2"}).out);
  const auto r = run({"compare", "--spec", data("a2.json"), "--levels", "1,2,3", "--reference", ref});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0][0] == "level");
  CHECK(hkd::Rational::parse(rows[2][3]) < hkd::Rational::parse(rows[1][3]));
  CHECK(hkd::Rational::parse(rows[3][3]) < hkd::Rational::parse(rows[2][3]));

  const auto plane = csv(run({"compare", "--spec", data("plane.json"), "--levels", "1,2,3",
                              "--reference", data("plane_pair.json")}).out);
  CHECK(plane[1][3] == "1/2");
  CHECK(plane[2][3] == "1/4");
  CHECK(plane[3][3] == "1/8");
}

TEST_CASE("density-empirical") {
  const auto r = run({"density-empirical", "--spec", data("a2.json"), "--level", "1", "--p", "2"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["q"] == 2);
  CHECK(j["integral"] == "3/2");
  CHECK(run({"density-empirical", "--spec", data("a2.json"), "--level", "3", "--max-degree", "50"}).code == 3);
}

TEST_CASE("segre, rescale, hn2, integrate") {
  const auto s = Json::parse(run({"segre", "--a", data("plane_pair.json"), "--b", data("plane_pair.json")}).out);
  CHECK(s["ehk"] == "4/3");
  CHECK(s["expansion"] == "4/3");
  CHECK(s["d"] == 3);

  const auto amb = write("a2_ambient.json",
                         R"({"breakpoints": ["0","2","3"], "pieces": [["0","1"],["6","-2"]], "tail": null})");
  const auto rs = Json::parse(run({"rescale", "--in", amb, "--l0", "2", "--rank", "2"}).out);
  CHECK(rs["breakpoints"] == Json::array({"0", "1", "3/2"}));
  CHECK(rs["pieces"] == Json::array({Json::array({"0", "2"}), Json::array({"6", "-4"})}));

  const auto hn = Json::parse(run({"hn2", "--in", data("hn_koszul.json")}).out);
  CHECK(hn["pieces"] == Json::array({Json::array({"0", "1"}), Json::array({"2", "-1"})}));

  const auto integral = Json::parse(run({"integrate", "--in", data("plane_pair.json")}).out);
  CHECK(integral["integral"] == "1");
}

TEST_CASE("sample") {
  const auto rows = csv(run({"sample", "--in", data("plane_pair.json"), "--k", "4"}).out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"x", "x_exact", "value", "value_exact"});
  CHECK(rows[1][0] == "0");
  CHECK(rows[2][0] == "0.55");
  CHECK(rows[3][0] == "1.1");
  CHECK(rows[4][0] == "1.65");
  CHECK(rows[5][0] == "2.2");
  CHECK(rows[2][3] == "11/20");
  CHECK(rows[5][3] == "0");

  const auto zero = write("zero.json", R"({"breakpoints": ["0"], "pieces": [], "tail": null})");
  for (const auto& row : csv(run({"sample", "--in", zero, "--k", "3"}).out)) {
    if (row[0] != "x") CHECK(row[3] == "0");
  }

  const auto e8 = write("e8.json", run({"catalog", "--family", "E8"}).out);
  const auto e8rows = csv(run({"sample", "--in", e8, "--k", "1000"}).out);
  CHECK(e8rows.size() == 1002);
  CHECK(e8rows.back()[3] == "0");
  CHECK(run({"sample", "--in", e8, "--k", "1"}).code == 2);
}

TEST_CASE("exit codes and structured errors") {
  const auto broken = write("broken.json", "{\"d\": 2, ");
  const auto r1 = run({"density-betti", "--in", broken});
  CHECK(r1.code == 1);
  CHECK(Json::parse(r1.err)["error"] == "parse");
  CHECK(run({"density-betti", "--bogus"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"integrate", "--in", "/nonexistent.json"}).code == 1);

  const auto perturbed = write("perturbed.json", R"({"d": 2, "betti": [{"i":1,"j":12,"b":1},{"i":1,"j":20,"b":1},
      {"i":1,"j":30,"b":1},{"i":2,"j":30,"b":1},{"i":2,"j":31,"b":1}]})");
  const auto r2 = run({"density-betti", "--in", perturbed});
  CHECK(r2.code == 2);
  CHECK(Json::parse(r2.err)["error"] == "validation");

  ::setenv("HKDL_MAX_POINTS", "500", 1);
  const auto r3 = run({"compare", "--spec", data("a2.json"), "--levels", "1,2,3"});
  ::unsetenv("HKDL_MAX_POINTS");
  CHECK(r3.code == 3);
  CHECK(r3.err.find("max feasible level is") != std::string::npos);

  ::setenv("HKDL_MAX_POINTS", "lots", 1);
  CHECK(run({"compare", "--spec", data("a2.json")}).code == 1);
  ::unsetenv("HKDL_MAX_POINTS");

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes across thread counts") {
  const std::vector<std::string> base{"compare", "--spec", data("a2.json"), "--levels", "1,2"};
  auto with_threads = [&](int t, const std::string& out) {
    std::vector<std::string> args{"--threads", std::to_string(t)};
    args.insert(args.end(), base.begin(), base.end());
    args.push_back("--out");
    args.push_back(out);
    return run(args).code;
  };
  const auto a = (scratch() / "t1.csv").string();
  const auto b = (scratch() / "t4.csv").string();
  const auto c = (scratch() / "t4b.csv").string();
  REQUIRE(with_threads(1, a) == 0);
  REQUIRE(with_threads(4, b) == 0);
  REQUIRE(with_threads(4, c) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(b) == slurp(c));
  CHECK(!slurp(a).empty());
}
