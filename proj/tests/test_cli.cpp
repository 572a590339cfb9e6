#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "burau_forge/cli.hpp"
#include "burau_forge/report.hpp"

using namespace burau_forge;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("f and euler") {
    const auto f = call({"f", "--n", "7"});
    CHECK(f.code == 0);
    CHECK(f.json()["f"] == "4");
    CHECK(f.json()["status"] == "pass");
    const auto e = call({"euler", "--n", "7"});
    CHECK(e.code == 0);
    CHECK(e.json()["euler_characteristic"] == "-4");
    CHECK(e.json()["orbifold_euler_characteristic"] == "-1/42");
    CHECK(call({"f", "--n", "8"}).code == 2);
  }

  TEST_CASE("classify") {
    const auto c = call({"classify", "--order", "14"});
    CHECK(c.code == 0);
    CHECK(c.json()["classification"]["case"] == "even-case");
    CHECK(c.json()["classification"]["geometry"] == "hyperbolic");
    CHECK(call({"classify", "--order", "5"}).json()["classification"]["case"] == "finite-image");
    CHECK(call({"classify", "--order", "10"}).json()["classification"]["order_minus_q"] == 5);
  }

  TEST_CASE("verify suites") {
    const auto r = call({"verify", "--suite", "onerel", "--range", "2..50"});
    CHECK(r.code == 0);
    CHECK(r.json()["claims"].size() == 49);
    for (const auto& claim : r.json()["claims"]) CHECK(claim.contains("anchor"));
    const auto k = call({"verify", "--suite", "kernel", "--range", "1..8"});
    CHECK(k.code == 0);
    CHECK(k.json()["params"]["skipped"] == Json::array({1, 6}));
    CHECK(call({"--strict", "verify", "--suite", "kernel", "--range", "2..3"}).code == 1);
    CHECK(call({"verify", "--suite", "kernel", "--range", "2..3", "--strict"}).code == 1);
    CHECK(call({"verify", "--suite", "st", "--range", "7..11"}).code == 0);
    CHECK(call({"verify", "--suite", "presentation", "--range", "7..11"}).code == 0);
    CHECK(call({"verify", "--suite", "psl", "--range", "3..9"}).code == 0);
    CHECK(call({"verify", "--suite", "even", "--range", "4..6"}).code == 0);
    CHECK(call({"verify", "--suite", "odd", "--range", "3..4"}).code == 0);
    CHECK(call({"verify", "--suite", "oddlem", "--range", "3..4"}).code == 0);
  }

  TEST_CASE("usage errors") {
    CHECK(call({}).code == 2);
    CHECK(call({"classify", "--order", "14", "--bogus"}).code == 2);
    CHECK(call({"verify", "--suite", "nope", "--range", "1..2"}).code == 2);
    CHECK(call({"verify", "--suite", "even", "--range", "5..4"}).code == 2);
    CHECK(call({"verify", "--suite", "even", "--range", "four"}).code == 2);
    CHECK(call({"verify", "--suite", "st", "--range", "3..5"}).code == 2);
    CHECK(call({"artin", "--braid", "g1", "--strand", "1", "--depth", "3"}).code == 2);
    CHECK(call({"verify-cert", "--file", "/nonexistent/cert.json"}).code == 2);
    const auto e = call({"nonsense"});
    CHECK(e.code == 2);
    CHECK(e.err.find("Usage") != std::string::npos);
    CHECK(e.out.empty());
  }

  TEST_CASE("deterministic output") {
    const auto a = call({"params", "--p", "12"});
    const auto b = call({"params", "--p", "12"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.json().contains("timestamp"));
    CHECK(call({"--timestamps", "params", "--p", "12"}).json().contains("timestamp"));
    CHECK(a.json()["quantum_params"]["p"] == 12);
  }

  TEST_CASE("twist order") {
    const auto t = call({"twist-order", "--p", "12"});
    CHECK(t.code == 0);
    CHECK(t.json()["twist_order"] == 12);
    CHECK(call({"twist-order", "--p", "3"}).code == 0);
    CHECK(call({"--strict", "twist-order", "--p", "3"}).code == 1);
  }

  TEST_CASE("certify-free and verify-cert") {
    const auto r = call({"certify-free", "--order", "14", "--x", "[A,B]", "--y", "[A^2,B]", "--max-len", "6", "--pingpong",
                         "--max-power", "4"});
    CHECK(r.code == 0);
    const Json j = r.json();
    REQUIRE(j.contains("certificate"));
    const std::string path = temp_path("burau_forge_cli_cert.json");
    std::ofstream(path) << r.out;
    CHECK(call({"verify-cert", "--file", path}).code == 0);

    Json tampered = j["certificate"];
    tampered["arcs"]["x+"]["start"][0] = "1/2";
    const std::string bad = temp_path("burau_forge_cli_bad.json");
    std::ofstream(bad) << tampered.dump();
    CHECK(call({"verify-cert", "--file", bad}).code == 1);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);

    const auto finite = call({"certify-free", "--order", "5", "--x", "[A,B]", "--y", "[A^2,B]", "--max-len", "20"});
    CHECK(finite.code == 1);
    CHECK(finite.json()["claims"][0]["witnesses"].size() == 2);
  }

  TEST_CASE("artin") {
    const auto a = call({"artin", "--braid", "g1^2", "--strand", "1", "--depth", "3"});
    CHECK(a.code == 0);
    CHECK(a.json()["longitude"] == "x1 x2^-1 x1^-1");
    CHECK(a.json()["depth"] == 1);
    const auto c = call({"artin", "--braid", "[g1^2,g2^2]", "--strand", "3", "--depth", "4"});
    CHECK(c.code == 0);
    CHECK(c.json()["depth"].get<int>() >= 1);
  }
}
