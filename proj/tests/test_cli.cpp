#include <doctest.h>

#include <json.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "specmom/cli.hpp"
#include "specmom/matio.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = specmom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Output without the manifest line, whose timestamp varies between runs.
std::string body(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string kept;
  while (std::getline(in, line)) {
    if (line.rfind("# manifest ", 0) == 0) continue;
    kept += line + '\n';
  }
  return kept;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("region prints the deltoid boundary and its cusps") {
  const auto r = run({"region", "--prob", "2/3,0,0,1/3", "--samples", "512"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# manifest {", 0) == 0);
  CHECK(r.out.find("cusps: 3 at 1, e^{2πi/3}, e^{4πi/3}") != std::string::npos);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 513);
  CHECK(lines[0] == "t,re,im");
  CHECK(lines[1].rfind("0,1,0", 0) == 0);
}

TEST_CASE("region grid mode") {
  const auto r = run({"region", "--prob", "3/4,0,0,0,1/4", "--grid", "--grid-size", "11"});
  CHECK(r.code == 0);
  const auto lines = data_lines(r.out);
  CHECK(lines.size() == 1 + 11 * 11);
  CHECK(r.out.find("interior") != std::string::npos);
  CHECK(r.out.find("exterior") != std::string::npos);
}

TEST_CASE("identical arguments give identical bodies") {
  const std::vector<std::vector<std::string>> runs{
      {"dynamic", "--toy", "--prob", "3/4,0,0,0,1/4", "--iters", "200", "--seed", "7"},
      {"power", "--barbell", "50,0.1,3", "--iters", "50", "--seed", "2"},
      {"approx", "--prob", "1/2,0,1/2", "--n", "100", "--t", "3", "--z", "0.9"},
      {"poly-growth", "--prob", "2/3,0,0,1/3", "--eps", "1e-5", "--n-max", "100"},
      {"bounds", "--prob", "2/3,0,0,1/3", "--eps", "0.01", "--n-max", "20", "--delta", "0.5"},
  };
  for (const auto& args : runs) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(body(a.out) == body(b.out));
    CHECK_FALSE(data_lines(a.out).empty());
  }
}

TEST_CASE("dynamic toy trace converges") {
  const auto r = run({"dynamic", "--toy", "--prob", "3/4,0,0,0,1/4", "--iters", "400", "--seed", "7"});
  REQUIRE(r.code == 0);
  const auto lines = data_lines(r.out);
  CHECK(lines[0] == "k,h_k,nu_k,d_k,rho_k,r_k,relerr");
  CHECK(lines.size() == 401);
  const std::string last = lines.back();
  const double relerr = std::stod(last.substr(last.rfind(',') + 1));
  CHECK(relerr <= 1e-10);
}

TEST_CASE("json output mirrors the records") {
  const auto r = run({"momentum", "--toy", "--prob", "3/4,0,0,0,1/4", "--lambda-star", "1", "--iters", "20",
                      "--out", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["manifest"]["subcommand"] == "momentum");
  CHECK(doc["manifest"]["seed"] == 0);
  CHECK(doc["records"].size() == 20);
  CHECK(doc["records"][0].contains("d_k"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"region", "--prob", "2/3,0,0,1/3", "--samples", "abc"}).code == 2);
  CHECK(run({"region", "--prob", "2/3,0,0,1/3", "--samples", "8"}).code == 2);
  const auto bad = run({"region", "--prob", "3/4,0,0,1/4"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("MeanNotZero") != std::string::npos);
  CHECK(run({"momentum", "--toy", "--prob", "3/4,0,0,0,1/4"}).code != 0);
  CHECK(run({"power", "--matrix", "/nonexistent/file.mtx"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("selfcheck passes") {
  const auto r = run({"selfcheck"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("barbell writes a readable Matrix Market file") {
  const auto path = std::filesystem::temp_directory_path() / "specmom_cli_barbell.mtx";
  const auto r = run({"barbell", "--n", "30", "--p", "0.2", "--seed", "9", "--output", path.string()});
  REQUIRE(r.code == 0);
  const auto file = specmom::read_matrix_market(path.string());
  CHECK(file.matrix == specmom::barbell(30, 0.2, 9));

  const auto solved = run({"power", "--matrix", path.string(), "--iters", "10"});
  CHECK(solved.code == 0);
  std::filesystem::remove(path);
}
