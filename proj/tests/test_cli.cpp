#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "treeshift/cli.hpp"

using treeshift::cli::dispatch;
using treeshift::cli::kExitOk;
using treeshift::cli::kExitUsage;
using treeshift::cli::kExitVerificationFailed;
using json = nlohmann::json;

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("treeshift_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("strip-entropy csv") {
  const Run r = run({"strip-entropy", "--k", "2", "--n", "5", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("n,lambda_digits,h_lo,h_hi\n", 0) == 0);
  CHECK(r.out.find("0.508889") != std::string::npos);
  // header plus five rows
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"counts", "--k", "2", "--n", "-1"}).code == kExitUsage);
  CHECK(run({"counts", "--k", "2"}).code == kExitUsage);
  CHECK(run({"counts", "--n", "3", "--bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--precision", "32", "counts", "--n", "2"}).code == kExitUsage);
  CHECK(run({"strip-entropy", "--n", "2", "--matrix", "/nonexistent/m.txt"}).code == kExitUsage);
  CHECK(run({"map-orbit", "--k", "two"}).code == kExitUsage);
  CHECK(run({"map-orbit", "--k", "2", "--start", "1.5"}).code == kExitUsage);
  const Run r = run({"counts", "--n", "-1"});
  CHECK(r.err.find("usage error") != std::string::npos);
}

TEST_CASE("malformed matrix file") {
  const fs::path p = scratch_dir() / "bad.txt";
  std::ofstream(p) << "2\n1 0\n0 1\n";
  const Run r = run({"counts", "--n", "2", "--matrix", p.string()});
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("node cap is reported as a cap error") {
  const Run r = run({"enumerate", "--depth", "5"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("cap exceeded") != std::string::npos);
}

TEST_CASE("verify-monotonicity emits a certificate") {
  const fs::path cert = scratch_dir() / "cert3.json";
  const Run r = run({"--format", "json", "verify-monotonicity", "--k", "3", "--paper-golden", "--emit-cert", cert.string()});
  CHECK(r.code == kExitOk);
  const json j = json::parse(slurp(cert));
  for (const char* key : {"k", "p", "A", "rad_coeff", "radicand", "d", "q", "remainder_zero", "sturm", "endpoint_signs",
                          "valid"})
    CHECK(j.contains(key));
  CHECK(j["k"] == 3);
  CHECK(j["valid"] == true);
  CHECK(j["remainder_zero"] == true);
  CHECK(j["sturm"]["roots"] == 0);
  CHECK(j["matches_published"] == true);
  // p_3 = r^4 + r - 1
  CHECK(j["p"] == json::array({"-1/1", "1/1", "0/1", "0/1", "1/1"}));
  CHECK(json::parse(r.out) == j);
}

TEST_CASE("--out writes atomically and leaves no temporary") {
  const fs::path dir = scratch_dir() / "out";
  fs::create_directories(dir);
  const fs::path target = dir / "counts.csv";
  std::ofstream(target) << "old";
  const Run r = run({"--format", "csv", "--out", target.string(), "counts", "--n", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  const std::string body = slurp(target);
  CHECK(body.rfind("n,digits,r,", 0) == 0);
  CHECK(body.find("25/41") != std::string::npos);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  CHECK(run({"--out", (dir / "missing" / "x.csv").string(), "counts", "--n", "1"}).code == kExitVerificationFailed);
  CHECK(slurp(target) == body);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--seed", "9", "--format", "json", "enumerate", "--random-d", "3", "--depth", "2"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  for (const auto& row : j["rows"]) CHECK(row["match"] == true);
  CHECK(j["rows"].size() == 3);
}

TEST_CASE("precision from the environment") {
  ::setenv(treeshift::cli::kPrecisionEnv, "128", 1);
  const Run r = run({"--format", "json", "strip-entropy", "--n", "1"});
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out)["precision_bits"] == 128);
  CHECK(json::parse(run({"--precision", "300", "--format", "json", "strip-entropy", "--n", "1"}).out)["precision_bits"] ==
        300);
  ::setenv(treeshift::cli::kPrecisionEnv, "lots", 1);
  CHECK(run({"strip-entropy", "--n", "1"}).code == kExitUsage);
  ::unsetenv(treeshift::cli::kPrecisionEnv);
}

TEST_CASE("--log2 rescales entropies") {
  const json nats = json::parse(run({"--format", "json", "strip-entropy", "--n", "1"}).out);
  const json bits = json::parse(run({"--log2", "--format", "json", "strip-entropy", "--n", "1"}).out);
  CHECK(nats["units"] == "nats");
  CHECK(bits["units"] == "bits");
  const double hn = std::stod(nats["rows"][0]["h"]["lo"].get<std::string>());
  const double hb = std::stod(bits["rows"][0]["h"]["lo"].get<std::string>());
  CHECK(hb == doctest::Approx(hn / std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("remaining subcommands") {
  CHECK(run({"counts", "--n", "4"}).out.find("5317636/8143397") != std::string::npos);
  CHECK(run({"series", "--N", "5"}).code == kExitOk);
  CHECK(run({"bounds", "--k", "6"}).code == kExitOk);
  CHECK(run({"bounds", "--k", "2", "--cross-m", "5"}).code == kExitOk);

  const Run fp = run({"--format", "json", "fixed-point", "--k", "2"});
  CHECK(fp.code == kExitOk);
  const json f = json::parse(fp.out);
  CHECK(std::stod(f["rows"][0]["value"]["lo"].get<std::string>()) == doctest::Approx(0.6823278).epsilon(1e-7));
  CHECK(f["rows"][2]["value"] == "attracting");

  const json k0 = json::parse(run({"--format", "json", "critical-k0", "--tol", "1e-6"}).out);
  CHECK(std::stod(k0["rows"][0]["value"]["lo"].get<std::string>()) == doctest::Approx(4.141041).epsilon(1e-6));

  const json orbit = json::parse(run({"--format", "json", "map-orbit", "--k", "2", "--start", "0.5", "--steps", "2"}).out);
  REQUIRE(orbit["rows"].size() == 3);
  CHECK(std::stod(orbit["rows"][1]["x"]["lo"].get<std::string>()) == doctest::Approx(0.8));

  const json inter = json::parse(run({"--format", "json", "intermediate", "--nmax", "15"}).out);
  CHECK(inter["rows"][14]["q"] == "2306");

  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("reproduce-paper") {
  const Run r = run({"--format", "csv", "reproduce-paper"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("erratum") != std::string::npos);
  CHECK(r.err.find("erratum") != std::string::npos);
}
