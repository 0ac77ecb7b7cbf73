#include "doctest.h"

#include <filesystem>
#include <regex>

#include "reslat/catalog.hpp"
#include "reslat/dot.hpp"
#include "reslat/filters.hpp"
#include "reslat/io.hpp"
#include "reslat/report.hpp"

using namespace reslat;

namespace {

std::size_t count_edges(const std::string& dot) {
  const std::regex edge(R"(n\d+ -> n\d+;)");
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("text and JSON round trips") {
  for (const auto& a : catalog_all()) {
    CAPTURE(a.name());
    const auto text = serialize_text(a);
    const auto back = parse_algebra(text);
    CHECK(back == a);
    CHECK(serialize_text(back) == text);
    const auto json = serialize_json(a);
    CHECK(parse_algebra(json) == a);
  }
}

TEST_CASE("leq matrix form") {
  const char* text = R"(name C3
elements 0 h 1
leq
1 1 1
0 1 1
0 0 1
mul
0 0 0
0 0 h
0 h 1
)";
  const auto a = parse_algebra(text);
  CHECK(find_isomorphism(a, lukasiewicz_chain(3)).has_value());
}

TEST_CASE("parse errors carry positions") {
  SUBCASE("short mul row") {
    const char* text = "name X\nelements 0 a b c d 1\ncovers 0<a a<b 0<c c<d b<d d<1\nmul\n"
                       "0 0 0 0 0 0\n0 a a 0 a\n";
    try {
      parse_raw(text);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 6);
      CHECK(std::string(e.what()).find("5 entries") != std::string::npos);
    }
  }
  SUBCASE("unknown element") {
    try {
      parse_raw("elements 0 1\ncovers 0<z\nmul\n0 0\n0 1\n");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("broken JSON") {
    CHECK_THROWS_AS(parse_raw("{\"elements\": [\"0\", \"1\"],\n \"mul\": [}"), ParseError);
  }
  SUBCASE("valid syntax, invalid algebra") {
    CHECK_THROWS_AS(parse_algebra("elements 0 1\ncovers 0<1\nmul\n0 1\n1 1\n"), ValidationError);
  }
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "reslat_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "a8.txt";
  write_file(path, serialize_text(algebra_a8()));
  CHECK(load_algebra(path.string()) == algebra_a8());
  CHECK(load_algebra("A6") == algebra_a6());
  CHECK_THROWS_AS(read_file(dir / "missing.txt"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report JSON is stable and round-trips") {
  for (const auto& a : {algebra_a6(), algebra_a8(), boolean_cube(2)}) {
    const auto r = analyze(a);
    const auto json = report_json(r);
    CHECK(report_json(analyze(a)) == json);
    const auto back = report_from_json(json);
    CHECK(back == r);
    CHECK(report_json(back) == json);
    CHECK(json.back() == '\n');
  }
  CHECK_THROWS_AS(report_from_json("{\"name\": 3}"), ParseError);
}

TEST_CASE("report contents for A6") {
  const auto r = analyze(algebra_a6());
  CHECK(r.filters == std::vector<std::string>{"{1}", "{d,1}", "{c,d,1}", "{a,b,d,1}", "{0,a,b,c,d,1}"});
  CHECK_FALSE(r.flags.gelfand);
  CHECK(r.unanimous());
  REQUIRE(r.battery("gelfand") != nullptr);
  CHECK(r.battery("gelfand")->criteria.size() >= 14);
  CHECK(r.witnesses.at("gelfand.prime") == "{1}");
}

TEST_CASE("DOT output") {
  const auto a6 = algebra_a6();
  const auto hasse = hasse_dot(a6);
  CHECK(count_edges(hasse) == a6.lattice().covers().size());
  CHECK(count_edges(hasse) == 6);
  CHECK(hasse.rfind("digraph \"A6\" {", 0) == 0);
  const auto spec = spectrum_dot(FilterLattice(algebra_a8()));
  CHECK(count_edges(spec) == 2);
  CHECK(spec.find("label=\"{f,1}\"") != std::string::npos);
}
