#include <doctest.h>

#include "reldens/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace reldens::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome invoke(const std::string& args) {
  const std::string cmd = std::string(RELDENS_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (const auto n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "reldens_cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("documented invocations") {
  const auto ek = invoke("erdos-kac --n-max 1000000 --mode lnlnN --format json");
  REQUIRE(ek.code == 0);
  const auto j = nlohmann::json::parse(ek.out);
  CHECK(j["schema"] == 1);
  CHECK(j["metrics"].contains("ks_to_phi"));

  const auto d = invoke("density --set block-example --n-max 4194304");
  REQUIRE(d.code == 0);
  const auto dj = nlohmann::json::parse(d.out);
  CHECK(dj["metrics"]["verdict"] == "Oscillating");
  CHECK(std::abs(dj["metrics"]["limsup"].get<double>() - 0.66) < 0.01);

  const auto w = invoke("weyl --alpha 0.5 --h 2 --n 1000");
  REQUIRE(w.code == 0);
  CHECK(nlohmann::json::parse(w.out)["metrics"]["magnitude"] == 1.0);

  const auto ind = invoke("independence --set ap:2:2 --set ap:4:4");
  REQUIRE(ind.code == 0);
  CHECK(nlohmann::json::parse(ind.out)["metrics"]["max_defect_exact"] == "1/8");
}

TEST_CASE("exit codes") {
  CHECK(invoke("").code == 2);
  CHECK(invoke("frobnicate").code == 2);
  CHECK(invoke("density --set nonsense").code == 2);
  CHECK(invoke("weyl --format xml").code == 2);
  CHECK(invoke("lacunary --mode linear").code == 2);
  CHECK(invoke("digit-clt --m-terms 40").code == 2);
  CHECK(invoke("erdos-kac --n-max 1000000 --memory-budget 1000").code == 3);
  CHECK(invoke("--help").code == 0);
}

TEST_CASE("data and summary files") {
  const auto dir = scratch("files");
  REQUIRE(invoke("weyl --n 5000 --format json --output " + (dir / "w").string()).code == 0);
  const auto table = nlohmann::json::parse(slurp(dir / "w.json"));
  CHECK(table["columns"] == nlohmann::json::array({"N", "magnitude"}));
  CHECK(table["rows"].back()[0] == 5000);
  const auto summary = nlohmann::ordered_json::parse(slurp(dir / "w.summary.json"));
  CHECK(summary["experiment"] == "weyl");

  REQUIRE(invoke("digit-clt --m-terms 10 --output " + (dir / "d").string()).code == 0);
  const auto csv = slurp(dir / "d.csv");
  CHECK(csv.rfind("k,count,binomial\n0,1,1\n1,10,10\n", 0) == 0);
}

TEST_CASE("summary round trip") {
  for (const auto& sub : subcommands()) {
    ExperimentConfig c;
    c.subcommand = sub;
    c.pilot = true;
    const auto r = run_experiment(c);
    const auto text = r.summary.to_json().dump();
    CHECK(Summary::from_json(nlohmann::ordered_json::parse(text)) == r.summary);
    CHECK(r.summary.experiment == sub);
  }
  nlohmann::ordered_json bad = {{"schema", 2}, {"experiment", "x"}, {"params", {}}, {"metrics", {}}};
  CHECK_THROWS(Summary::from_json(bad));
}

TEST_CASE("number formatting") {
  CHECK(format_number(1000000.0) == "1000000");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-2.5) == "-2.5");
  CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("outputs do not depend on the thread count") {
  for (const auto& sub : subcommands()) {
    const auto dir = scratch("threads-" + sub);
    REQUIRE(invoke(sub + " --pilot --threads 1 --output " + (dir / "t1").string()).code == 0);
    REQUIRE(invoke(sub + " --pilot --threads 8 --output " + (dir / "t8").string()).code == 0);
    CHECK(slurp(dir / "t1.csv") == slurp(dir / "t8.csv"));
    CHECK(slurp(dir / "t1.summary.json") == slurp(dir / "t8.summary.json"));
  }
}
