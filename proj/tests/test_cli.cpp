#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "reslat/catalog.hpp"
#include "reslat/io.hpp"

using namespace reslat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "reslat_test_cli";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  write_file(p, text);
  return p;
}

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", "A6"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "A6: valid residuated lattice, 6 elements\n");
  const auto bad = temp_file("bad.txt", "elements 0 1\ncovers 0<1\nmul\n0 1\n1 1\n");
  r = run({"check", bad.string()});
  CHECK(r.code == cli::kExitFalse);
  CHECK_FALSE(r.err.empty());
  const auto broken = temp_file("broken.txt", "elements 0 1\nmul\n0 0 0\n");
  r = run({"check", broken.string()});
  CHECK(r.code == cli::kExitFalse);
  CHECK(has(r.err, "line 3"));
}

TEST_CASE("filters and spectrum") {
  auto r = run({"filters", "A6"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "A6: 5 filters\n{1}\n{d,1}\n{c,d,1}\n{a,b,d,1}\n{0,a,b,c,d,1}\n");
  r = run({"spectrum", "A8"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out ==
        "A8: 3 prime filters, 1 maximal\n"
        "maximal {a,c,d,e,f,1}\n"
        "prime {f,1}\nprime {c,e,1}\nprime {a,c,d,e,f,1}\n");
}

TEST_CASE("gelfand exit codes follow the verdict") {
  auto r = run({"gelfand", "A8"});
  CHECK(r.code == cli::kExitOk);
  CHECK(has(r.out, "Gelfand: yes (14/14 criteria)"));
  r = run({"gelfand", "A6"});
  CHECK(r.code == cli::kExitFalse);
  CHECK(has(r.out, "Gelfand: no (0/14 criteria)"));
  CHECK(has(r.out, "witness prime {1} under {c,d,1} {a,b,d,1}"));
  r = run({"gelfand", "-v", "A6"});
  CHECK(has(r.out, "contessa/"));
}

TEST_CASE("soft and pure") {
  auto r = run({"soft", "B2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(has(r.out, "Soft: yes (3/3 conditions)"));
  r = run({"soft", "A6"});
  CHECK(r.code == cli::kExitFalse);
  r = run({"pure", "A8"});
  CHECK(r.code == cli::kExitOk);
}

TEST_CASE("search") {
  auto r = run({"search", "--max-size", "4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(has(r.out, "models: 11"));
  r = run({"search", "--min-size", "5", "--max-size", "3"});
  CHECK(r.code == cli::kExitUsage);
  r = run({"search", "--max-size", "9"});
  CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("report and export-dot write files") {
  const auto dir = std::filesystem::temp_directory_path() / "reslat_test_cli";
  std::filesystem::create_directories(dir);
  const auto json = dir / "a6.json";
  auto r = run({"report", "A6", "-o", json.string()});
  CHECK(r.code == cli::kExitOk);
  const auto first = read_file(json);
  r = run({"report", "A6"});
  CHECK(r.out == first);
  r = run({"export-dot", "--spectrum", "A8"});
  CHECK(r.code == cli::kExitOk);
  CHECK(has(r.out, "digraph \"Spec A8\""));
}

TEST_CASE("error exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"filters"}).code == cli::kExitUsage);
  CHECK(run({"filters", "/nonexistent/algebra.txt"}).code == cli::kExitIoErr);
  const auto bad = temp_file("bad2.txt", "elements 0 1\ncovers 0<1\nmul\n0 1\n1 1\n");
  CHECK(run({"filters", bad.string()}).code == cli::kExitDataErr);
  CHECK(run({"catalog", "--show", "Nope"}).code == cli::kExitUsage);
  auto r = run({"catalog"});
  CHECK(r.code == cli::kExitOk);
  CHECK(has(r.out, "A6 6\n"));
  CHECK(run({"--help"}).code == cli::kExitOk);
}
