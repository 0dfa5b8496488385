#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "superstft/io.hpp"
#include "superstft/core.hpp"

using namespace superstft;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(SUPERSTFT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv(const std::string& s) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : io::split(s, '\n'))
    if (!line.empty()) rows.push_back(io::split(line, ','));
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("spectrogram rows") {
    const Run r = run("spectrogram --window gaussian --signal superosc --a 2 --n 6 --u -3:3:61 --eta -3:3:61 --mode closed");
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    CHECK(rows.size() == 3722);
    CHECK(rows[0] == std::vector<std::string>{"u", "eta", "re", "im", "abs"});
    CHECK(r.out.find('\r') == std::string::npos);
  }

  TEST_CASE("spectrogram both modes agree") {
    const Run r = run("spectrogram --window gaussian --signal superosc --a 2 --n 6 --u -3:3:61 --eta -3:3:61 --mode both");
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    REQUIRE(rows[0].size() == 6);
    CHECK(rows[0][5] == "abs_err");
    double worst = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) worst = std::max(worst, io::parse_double(rows[i][5]));
    CHECK(worst <= 1e-7);
  }

  TEST_CASE("csv values round trip") {
    const Run r = run("spectrogram --window hermite --order 2 --u 0.1:0.3:3 --eta -1:1:3");
    REQUIRE(r.code == 0);
    for (const auto& row : csv(r.out)) {
      if (row[0] == "u") continue;
      for (const auto& cell : row) CHECK(io::format_double(io::parse_double(cell)) == cell);
    }
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run("spectrogram --window hermite --order -1").code == 2);
    CHECK(run("spectrogram --u 1:0:3").code == 2);
    CHECK(run("spectrogram --window triangle").code == 2);
    CHECK(run("verify --suite nope").code == 2);
    CHECK(run("").code == 2);
  }

  TEST_CASE("verify streams json") {
    const Run r = run("verify --suite hermite --json -");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["seed"] == 42);
    bool found = false;
    for (const auto& rec : j["suites"]) found = found || rec["id"] == "i_km_compact";
    CHECK(found);
  }

  TEST_CASE("zak frame reports") {
    const auto h = nlohmann::json::parse(run("zak-frame --window hermite --order 1 --resolution 64").out);
    CHECK(h["verdict"] != "Frame");
    CHECK(h["min_location"].contains("u"));
    const auto g1 = nlohmann::json::parse(run("zak-frame --resolution 64").out);
    const auto g2 = nlohmann::json::parse(run("zak-frame --resolution 128").out);
    CHECK(g1["verdict"] == g2["verdict"]);
    const auto s = nlohmann::json::parse(run("zak-frame --signal superosc-gaussian --a 2 --n 4 --resolution 128").out);
    CHECK(s["grid_resolution"] == 128);
    CHECK(s.contains("lower_bound"));
  }

  TEST_CASE("evolve datum at t = 0") {
    const Run r = run("evolve --window gaussian --x0 0 --k0 1 --t 0:1:11 --x -4:4:81 --normalized");
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    CHECK(rows.size() == 1 + 11 * 81);
    double worst = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (io::parse_double(rows[i][1]) != 0.0) continue;
      const double x = io::parse_double(rows[i][0]);
      const Complex v(io::parse_double(rows[i][2]), io::parse_double(rows[i][3]));
      worst = std::max(worst, std::abs(v - std::polar(std::exp(-0.5 * x * x), x)));
    }
    CHECK(worst <= 1e-9);
  }

  TEST_CASE("evolve superoscillatory mode sum") {
    const auto rows = csv(run("evolve --superosc --a 2 --n 8 --t 0:0:1 --x 0.5:0.5:1").out);
    REQUIRE(rows.size() == 2);
    CHECK(io::parse_double(rows[1][4]) > 1.0);
  }

  TEST_CASE("evolve accuracy flag") {
    const auto rows = csv(run("evolve --window hermite --order 1 --t 2000:2000:1 --x -1:1:3").out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].back() == "accuracy_flag");
    CHECK(rows[1].back() == "1");
    const auto plain = csv(run("evolve --window gaussian --t 0:1:2 --x 0:1:2").out);
    CHECK(plain[0].back() == "abs");
  }
}
