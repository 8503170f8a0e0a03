#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

std::filesystem::path write_input(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("bettikit_cli_" + name + ".txt");
  std::ofstream(path) << text;
  return path;
}

// Runs the tool on `input` with the given arguments; stderr is discarded.
Run run(const std::string& args, const std::string& input) {
  static int counter = 0;
  const auto path = write_input(std::to_string(counter++), input);
  const std::string cmd = std::string(BETTIKIT_CLI_PATH) + " " + args + " " + path.string() + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  std::filesystem::remove(path);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

const std::string kPentagon = "n: 5\nfacets: 0 1, 1 2, 2 3, 3 4, 0 4\n";
const std::string kTorusIdeal =
    "n: 7\n"
    "gens: x0x1x2, x1x2x3, x2x3x4, x3x4x5, x4x5x6, x0x5x6, x0x1x6,\n"
    "  x0x1x4, x1x2x5, x2x3x6, x0x3x4, x1x4x5, x2x5x6, x0x3x6,\n"
    "  x0x2x4, x1x3x5, x2x4x6, x0x3x5, x1x4x6, x0x2x5, x1x3x6\n";

}  // namespace

TEST_CASE("betti") {
  const auto r = run("betti", kPentagon);
  CHECK(r.status == 0);
  CHECK(r.out == "total: 1 5 5 1\n    0: 1 . . .\n    1: . 5 5 .\n    2: . . . 1\n");

  const auto ideal = run("betti --convention ideal", kPentagon);
  CHECK(ideal.out.starts_with("total: 5 5 1\n"));

  const auto torus = run("betti", kTorusIdeal);
  CHECK(torus.status == 0);
  CHECK(torus.out.starts_with("total: 1 21 49 42 15 2\n"));

  CHECK(run("betti", "n: 3\ngens:\n").out == "total: 1\n    0: 1\n");
  CHECK(run("betti --multigraded", "n: 2\ngens: x0*x1\n").out == "0 1 1\n1 x0*x1 1\n");
  CHECK(run("betti --convention ideal --multigraded", "n: 3\ngens: x0*x1, x1*x2\n").out ==
        "0 x0*x1 1\n0 x1*x2 1\n1 x0*x1*x2 1\n");

  const auto json = nlohmann::json::parse(run("betti --json", kPentagon).out);
  CHECK(json.at("diagram").at("totals") == nlohmann::json({1, 5, 5, 1}));
  CHECK(json.at("p") == 32003);
}

TEST_CASE("non-square-free input needs polarization") {
  const std::string input = "n: 2\ngens: x0^2, x0*x1\n";
  CHECK(run("extremal", input).status == 2);
  CHECK(run("betti", input).status == 2);
  CHECK(run("extremal --dual --polarize", input).status == 2);
  const auto pol = run("extremal --polarize", input);
  CHECK(pol.status == 0);
  CHECK(pol.out.starts_with("corners: (2,1):1\n"));
}

TEST_CASE("dual") {
  const auto r = run("dual", kPentagon);
  CHECK(r.status == 0);
  CHECK(r.out == "gens: x0*x1*x2, x0*x1*x4, x0*x3*x4, x1*x2*x3, x2*x3*x4\n");
  CHECK(run("dual", "n: 5\ngens: x0x2, x0x3, x0x4, x1x4\n").out == "gens: x0*x1, x0*x4, x2*x3*x4\n");
  CHECK(run("dual --diagram", kPentagon).out.find("    2: . 5 5 1\n") != std::string::npos);
  CHECK(run("dual", "n: 3\nfacets: 0 1 2\n").out == "dual ideal is the unit ideal (the input is the full simplex)\n");
}

TEST_CASE("extremal") {
  const auto r = run("extremal", kTorusIdeal);
  CHECK(r.status == 0);
  CHECK(r.out.starts_with("corners: (4,3):1 (5,2):2\nmultigraded extremal:\n"));
  CHECK(run("extremal --dual", kPentagon).out.starts_with("corners: (3,2):1\n"));
}

TEST_CASE("check") {
  const auto pent = run("check --which all", kPentagon);
  CHECK(pent.status == 0);
  CHECK(pent.out.find("FAIL") == std::string::npos);
  CHECK(pent.out.find("gorenstein instance=<n=5 facets: ") != std::string::npos);

  const auto torus = run("check --which gorenstein", kTorusIdeal);
  CHECK(torus.status == 1);
  CHECK(torus.out.find("FAIL witness=<") != std::string::npos);
  CHECK(run("check --which terai", kTorusIdeal).status == 0);

  const auto simplex = run("check --which all", "n: 3\nfacets: 0 1 2\n");
  CHECK(simplex.out.find("thmG SKIP") != std::string::npos);
  CHECK(run("check --which thmG", "n: 3\nfacets: 0 1 2\n").status == 2);
  CHECK(run("check --which bogus", kPentagon).status == 2);
  CHECK(run("check --which cm", "n: 4\nfacets: 0 1, 2 3\n").status == 1);

  const auto rp2 = std::string("n: 6\nfacets: 0 1 2, 0 2 3, 0 3 4, 0 4 5, 0 1 5, 1 2 4, 2 3 5, 1 3 4, 2 4 5, 1 3 5\n");
  CHECK(run("check --which cm", rp2).status == 0);
  CHECK(run("check --which cm --char 2", rp2).status == 1);
}

TEST_CASE("gin") {
  const auto r = run("gin", "n: 2\ngens: x*y\n");
  CHECK(r.status == 0);
  CHECK(r.out == "gin: x0^2\n");
  CHECK(run("gin", "n: 2\ngens: x^2, y^2\n").out == "gin: x0^2, x0*x1, x1^3\n");
  const auto cmp = run("gin --compare", "n: 2\ngens: x^2 + y^2, xy\n");
  CHECK(cmp.status == 0);
  CHECK(cmp.out.find("gin-corners instance=<") != std::string::npos);
  CHECK(cmp.out.find("gin-depth instance=<") != std::string::npos);
  CHECK(run("gin", kPentagon).status == 2);
  CHECK(run("gin", "gens: x^2 + y\n").status == 2);

  // Same seed, same answer.
  const std::string input = "n: 3\nseed: 7\ngens: x*y + z^2, x^2 - 3*y*z\n";
  CHECK(run("gin --json", input).out == run("gin --json", input).out);
  CHECK(nlohmann::json::parse(run("gin --json", input).out).at("seed") == 7);
  CHECK(nlohmann::json::parse(run("gin --json --seed 9", input).out).at("seed") == 9);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("betti", "n: 3\nfacets: 0 5\n").status == 2);
  CHECK(run("betti", "n: 3\nbogus: 1\n").status == 2);
  CHECK(run("betti --char 4", kPentagon).status == 2);
  CHECK(run("betti --convention sideways", kPentagon).status == 2);
  CHECK(run("frobnicate", kPentagon).status == 2);
}
