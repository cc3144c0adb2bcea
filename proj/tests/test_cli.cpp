#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run cli(const std::string& args) {
  std::string cmd = std::string("cd ") + FACTHOM_CORPUS_DIR + "/.. && " + FACTHOM_CLI + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("cli: Hochschild homology") {
  auto r = cli("hh --algebra corpus/dual_numbers.alg --maxdeg 4");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "0:2 1:1 2:1 3:1"));
  CHECK(contains(r.out, "input corpus/dual_numbers.alg sha256:"));
  CHECK(r.out.rfind("facthom hh --algebra", 0) == 0);
  CHECK(contains(cli("hh --corpus m2 --maxdeg 3").out, "0:1 1:0 2:0"));
  CHECK(contains(cli("hh-graded --vars 2 --weight 2").out, "0:3 1:4 2:1"));
  CHECK(cli("hkr --vars 2 --weight 3").code == 0);
  CHECK(cli("connes-check --corpus dual --maxdeg 3").code == 0);
  CHECK(cli("excision --corpus dual").code == 0);
  CHECK(cli("cocenter --corpus s3").code == 0);
}

TEST_CASE("cli: exit codes") {
  CHECK(cli("hh --algebra corpus/missing.alg").code == 2);
  CHECK(cli("hh --corpus nosuch").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("hh --corpus s3 --maxdeg 12 --budget 100").code == 2);
  CHECK(cli("eh-check --monoids corpus/and_xnor.monoid").code == 1);
  CHECK(cli("eh-check --monoids corpus/z2_twice.monoid").code == 0);
  CHECK(cli("kan --model circle --require kan").code == 1);
  CHECK(cli("kan --corpus-category z2 --max-n 3 --require kan").code == 0);
  CHECK(cli("kan --corpus-category poset2 --max-n 3 --require unique").code == 0);
  CHECK(cli("tft dual --datum corpus/zero_u.dual").code == 1);
  CHECK(cli("tft dual --datum corpus/twisted2_f7.dual").code == 0);
  CHECK(cli("tft dual --infinite").code == 1);
}

TEST_CASE("cli: malformed input reports line and column") {
  auto r = cli("tft eval --cobordism " FACTHOM_CORPUS_DIR "/../tests/CMakeLists.txt");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "1:1"));
}

TEST_CASE("cli: TFT and simplicial commands") {
  auto e = cli("tft eval --cobordism corpus/circle.cob --dim 3");
  CHECK(e.code == 0);
  CHECK(contains(e.out, "[3]"));
  CHECK(cli("tft zorro --dim 2").code == 0);
  CHECK(cli("chains --model torus --level 3").code == 0);
  CHECK(contains(cli("chains --model torus --level 3").out, "0:1 1:2"));
  CHECK(cli("loday --corpus dual --model circle --maxdeg 3").code == 0);
  CHECK(cli("torus --corpus split").code == 0);
  CHECK(cli("nerve --corpus-category iso --level 3").code == 0);
}

TEST_CASE("cli: json output is valid and deterministic") {
  for (const std::string args : {"hh --corpus dual --json", "tft eval --cobordism corpus/circle.cob --dim 2 --json",
                                 "kan --model circle --json", "eh-check --scan 2 --json"}) {
    CAPTURE(args);
    auto a = cli(args);
    auto b = cli(args);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j.contains("command"));
    CHECK(j.contains("result"));
    CHECK(j.contains("budget"));
  }
  auto j = nlohmann::json::parse(cli("hh --algebra corpus/dual_numbers.alg --json").out);
  CHECK(j["inputs"][0]["sha256"].get<std::string>().size() == 64);
}
