#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dakc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& text) {
  const fs::path dir = fs::path(DAKC_TEST_TMP) / "cli_scratch";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

const char* kPath = "p dakc 3 2\na 1 2\na 2 3\n";

}  // namespace

TEST_CASE("solve the path") {
  const std::string path = scratch("path.gr", kPath);
  Result r = run({"solve", path, "--b", "1", "--k", "1", "--p", "3"});
  CHECK(r.code == 0);
  json report = json::parse(r.out);
  CHECK(report["answer"] == "yes");
  CHECK(report["anchors"] == json::array({1}));
  CHECK(report["core"] == json::array({1, 2, 3}));
  CHECK(report["solver"] == "k1");

  r = run({"solve", path, "--b", "0", "--k", "1", "--p", "1"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["answer"] == "no");
}

TEST_CASE("parameters come from the q line unless overridden") {
  const std::string path = scratch("path_q.gr", std::string(kPath) + "q 1 1 3\n");
  CHECK(run({"solve", path}).code == 0);
  CHECK(run({"solve", path, "--b", "0"}).code == 1);
  CHECK(run({"solve", scratch("path_noq.gr", kPath)}).code == 4);
}

TEST_CASE("unsupported regime") {
  // Vertex 1 has degree 5 and sits on the cycle 1 -> 5 -> 1.
  const std::string g = scratch("star.gr", "p dakc 6 6\na 2 1\na 3 1\na 4 1\na 1 5\na 5 1\na 1 6\n");
  Result r = run({"solve", g, "--b", "1", "--k", "2", "--p", "4"});
  CHECK(r.code == 2);
  const json report = json::parse(r.out);
  CHECK(report["answer"] == "unsupported");
  CHECK(report["reason"].get<std::string>().find("W[2]") != std::string::npos);
  CHECK(r.err.find("W[2]") != std::string::npos);
  r = run({"solve", g, "--b", "1", "--k", "2", "--p", "4", "--allow-oracle"});
  CHECK(json::parse(r.out)["solver"] == "oracle");
  CHECK(run({"solve", g, "--b", "1", "--k", "2", "--p", "4", "--solver", "degree"}).code == 2);
  CHECK(run({"solve", g, "--b", "1", "--k", "2", "--p", "4", "--solver", "dag"}).code == 5);
}

TEST_CASE("every solver choice agrees on a small dag") {
  const std::string g = scratch("dag.gr", "p dakc 4 4\na 1 3\na 2 3\na 3 4\na 1 4\n");
  for (const char* solver : {"auto", "degree", "dag", "oracle"}) {
    const Result r = run({"solve", g, "--b", "2", "--k", "2", "--p", "4", "--solver", solver});
    CHECK(r.code == 0);
  }
  CHECK(run({"solve", g, "--b", "2", "--k", "2", "--p", "4", "--solver", "k1"}).code == 5);
  const Result seeded = run({"solve", g, "--b", "2", "--k", "2", "--p", "4", "--solver", "dag", "--mode", "seeded",
                             "--seed", "9", "--trial-cap", "100000"});
  CHECK(seeded.code == 0);
  CHECK(json::parse(seeded.out)["mode"] == "seeded");
  const Result again = run({"solve", g, "--b", "2", "--k", "2", "--p", "4", "--solver", "dag", "--mode", "seeded",
                            "--seed", "9", "--trial-cap", "100000", "--threads", "3"});
  CHECK(again.out == seeded.out);
}

TEST_CASE("solve output verifies, tampering is caught") {
  const std::string g = scratch("path_v.gr", kPath);
  const std::string report = scratch("report.json", "");
  CHECK(run({"solve", g, "--b", "1", "--k", "1", "--p", "3", "-o", report}).code == 0);
  Result r = run({"verify", g, report, "--b", "1", "--k", "1", "--p", "3"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["valid"] == true);

  const std::string tampered = scratch("tampered.json", R"({"anchors":[1],"core":[1,3]})");
  r = run({"verify", g, tampered, "--b", "1", "--k", "1", "--p", "2"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["violation"].get<std::string>().find("vertex 3") != std::string::npos);

  CHECK(run({"verify", g, scratch("bad.json", "{not json"), "--b", "1", "--k", "1", "--p", "2"}).code == 3);
  CHECK(run({"verify", g, scratch("range.json", R"({"anchors":[9],"core":[]})"), "--b", "1", "--k", "1", "--p", "2"})
            .code == 3);
}

TEST_CASE("maximize p") {
  const std::string g = scratch("path_m.gr", kPath);
  const Result r = run({"max", g, "--b", "1", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["max_p"] == 3);
  CHECK(json::parse(run({"max", g, "--b", "0", "--k", "1"}).out)["max_p"] == 0);
}

TEST_CASE("generate then solve with the oracle") {
  const std::string cnf = scratch("f.cnf", "p cnf 2 2\n1 2 0\n-1 -2 0\n");
  const std::string out = (fs::path(DAKC_TEST_TMP) / "cli_scratch" / "sat.gr").string();
  CHECK(run({"gen", "sat", cnf, "--k", "1", "--strict", "-o", out}).code == 0);
  CHECK(slurp(out + ".labels").rfind("1 x1\n", 0) == 0);
  CHECK(run({"oracle", out}).code == 0);

  const std::string unsat = scratch("u.cnf", "p cnf 1 2\n1 0\n-1 0\n");
  CHECK(run({"gen", "sat", unsat, "--k", "1", "-o", out}).code == 0);
  CHECK(run({"oracle", out}).code == 1);

  const std::string cover = scratch("sc.txt", "u 1\ns 1\n");
  const Result printed = run({"gen", "setcover", cover, "--b", "1"});
  CHECK(printed.code == 0);
  CHECK(printed.out.rfind("p dakc 6 5\n", 0) == 0);
  const std::string base = scratch("base.gr", printed.out);
  const std::string amplified = (fs::path(DAKC_TEST_TMP) / "cli_scratch" / "amp.gr").string();
  CHECK(run({"gen", "amplify", base, "--k", "2", "--delta", "5", "-o", amplified}).code == 0);
  CHECK(run({"oracle", amplified}).code == 0);

  const std::string clique = scratch("g.txt", "p ug 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(run({"gen", "clique", clique, "--b", "2", "--k", "2", "-o", out}).code == 0);
  CHECK(run({"oracle", out}).code == 0);

  CHECK(run({"gen", "setcover", scratch("hole.txt", "u 2\ns 1\n"), "--b", "1"}).code == 3);
  CHECK(run({"gen", "clique", clique, "--b", "2"}).code == 4);
}

TEST_CASE("list separators") {
  const std::string g = scratch("sep.gr", "p dakc 4 3\na 1 2\na 2 3\na 3 4\n");
  const Result r = run({"seps", g, "--s", "1", "--t", "4", "--h", "2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["separators"] == json::parse("[[2]]"));
  CHECK(run({"seps", g, "--s", "1", "--t", "2", "--h", "2"}).code == 5);
}

TEST_CASE("errors map to exit codes") {
  CHECK(run({"solve", "/nonexistent/file.gr", "--b", "1", "--k", "1", "--p", "1"}).code == 3);
  CHECK(run({"solve", scratch("loop.gr", "p dakc 2 1\na 1 1\n"), "--b", "1", "--k", "1", "--p", "1"}).code == 3);
  CHECK(run({"solve"}).code == 4);
  CHECK(run({"frobnicate"}).code == 4);
  CHECK(run({"solve", scratch("p.gr", kPath), "--b", "1", "--k", "1", "--p", "1", "--solver", "magic"}).code == 4);
  const std::string big = scratch("big.gr", "p dakc 30 0\n");
  CHECK(run({"solve", big, "--b", "1", "--k", "2", "--p", "3", "--mode", "exhaustive", "--solver", "dag"}).code == 5);
  CHECK(run({"oracle", big, "--b", "5", "--k", "1", "--p", "6", "--subset-cap", "100"}).code == 5);
  CHECK(run({"--help"}).code == 0);
}
