#include "doctest.h"

#include <cstdlib>
#include <variant>

#include "oracles.hpp"
#include "reslat/catalog.hpp"
#include "reslat/io.hpp"

using namespace reslat;

namespace {

const char* kA6Text = R"(name A6
elements 0 a b c d 1
covers 0<a a<b 0<c c<d b<d d<1
mul
0 0 0 0 0 0
0 a a 0 a a
0 a a 0 a b
0 0 0 c c c
0 a a c d d
0 a b c d 1
)";

RawTables a6_raw() { return parse_raw(kA6Text); }

Element id(const ResiduatedLattice& a, const char* n) { return *a.find(n); }

ValidationError::Kind kind_of(const RawTables& raw, std::size_t bound = kMaxCarrier) {
  auto r = try_validate(raw, bound);
  REQUIRE(std::holds_alternative<ValidationError>(r));
  return std::get<ValidationError>(r).kind();
}

}  // namespace

TEST_CASE("catalog A6 matches the hand-written table") {
  const auto a6 = algebra_a6();
  const auto parsed = validate(a6_raw());
  CHECK(parsed == a6);
  CHECK(a6.size() == 6);
}

TEST_CASE("residuum agrees with the join formula") {
  for (const auto& a : catalog_all()) {
    CAPTURE(a.name());
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < a.size(); ++y) {
        CHECK(a.res(x, y) == oracle::residuum(a, x, y));
      }
      CHECK(a.res(a.one(), x) == x);
    }
  }
}

TEST_CASE("negations in A6 and A8") {
  const auto a6 = algebra_a6();
  const auto a8 = algebra_a8();
  CHECK(a6.neg(id(a6, "a")) == id(a6, "c"));
  CHECK(a6.neg(id(a6, "c")) == id(a6, "b"));
  CHECK(a8.neg(id(a8, "a")) == id(a8, "b"));
  CHECK(negation(a8, id(a8, "1")) == a8.zero());
}

TEST_CASE("validation error kinds") {
  SUBCASE("adjunction") {
    auto raw = a6_raw();
    const std::size_t n = raw.names.size();
    raw.mul[1 * n + 3] = 1;  // a*c := a
    raw.mul[3 * n + 1] = 1;
    CHECK(kind_of(raw) == ValidationError::Kind::AdjunctionFails);
  }
  SUBCASE("not a lattice") {
    auto raw = a6_raw();
    raw.covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}};
    CHECK(kind_of(raw) == ValidationError::Kind::NotALattice);
  }
  SUBCASE("not commutative") {
    auto raw = a6_raw();
    const std::size_t n = raw.names.size();
    raw.mul[1 * n + 2] = 0;
    CHECK(kind_of(raw) == ValidationError::Kind::NotCommutativeMonoid);
  }
  SUBCASE("residuum mismatch") {
    auto raw = to_raw(algebra_a6());
    (*raw.res)[0] = 0;  // 0 -> 0 is 1
    CHECK(kind_of(raw) == ValidationError::Kind::ResiduumMismatch);
  }
  SUBCASE("malformed") {
    auto raw = a6_raw();
    raw.mul.pop_back();
    CHECK(kind_of(raw) == ValidationError::Kind::Malformed);
  }
  SUBCASE("size bound") {
    CHECK(kind_of(a6_raw(), 5) == ValidationError::Kind::SizeOverflow);
    CHECK(std::holds_alternative<ResiduatedLattice>(try_validate(a6_raw(), 6)));
  }
}

TEST_CASE("environment lowers the carrier bound") {
  setenv("RESLAT_MAX_SIZE", "5", 1);
  CHECK(carrier_bound() == 5);
  CHECK_THROWS_AS(validate(a6_raw()), ValidationError);
  setenv("RESLAT_MAX_SIZE", "1000", 1);
  CHECK(carrier_bound() == kMaxCarrier);
  unsetenv("RESLAT_MAX_SIZE");
  CHECK(carrier_bound() == kMaxCarrier);
}

TEST_CASE("powers in the three-element MV chain") {
  const auto mv = *catalog_lookup("MV3");
  const Element half = 1;
  CHECK(power(mv, half, 1) == half);
  CHECK(power(mv, half, 2) == mv.zero());
  CHECK(mv.neg(half) == half);
  CHECK(power_sequence(mv, half) == std::vector<Element>{half, mv.zero()});
}

TEST_CASE("element classes of A8") {
  const auto a8 = algebra_a8();
  const auto cls = classify_elements(a8);
  CHECK(cls.nilpotents == oracle::named(a8, {"0", "b"}));
  CHECK(cls.non_nilpotents == a8.carrier() - cls.nilpotents);
  CHECK(cls.nilpotence_order[id(a8, "b")] == 2u);
  CHECK_FALSE(cls.nilpotence_order[id(a8, "a")].has_value());
  CHECK(cls.boolean_center == oracle::named(a8, {"0", "1"}));
  for (Element x = 0; x < a8.size(); ++x) {
    CHECK(cls.idempotents.contains(x) == (a8.mul(x, x) == x));
  }
}

TEST_CASE("filter test agrees with the definition on every subset") {
  for (const auto& a : catalog_all()) {
    if (a.size() > 10) continue;
    CAPTURE(a.name());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m) {
      const auto s = ElementSet::from_bits(m);
      CHECK(is_filter(a, s) == oracle::filter_by_definition(a, s));
    }
  }
}

TEST_CASE("direct product is componentwise") {
  const auto c2 = godel_chain(2);
  const auto a6 = algebra_a6();
  const std::vector<ResiduatedLattice> fs{a6, c2};
  const auto p = direct_product(fs);
  REQUIRE(p.size() == 12);
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) {
      const Element m = p.mul(x, y);
      CHECK(m / 2 == a6.mul(x / 2, y / 2));
      CHECK(m % 2 == c2.mul(x % 2, y % 2));
      CHECK(p.res(x, y) / 2 == a6.res(x / 2, y / 2));
    }
  }
  CHECK(find_isomorphism(direct_product(std::vector{c2, c2}), boolean_cube(2)).has_value());
  CHECK_THROWS_AS(direct_product(std::vector{a6, a6, a6}, 64), ValidationError);
}

TEST_CASE("quotient of A6 by {d,1}") {
  const auto a6 = algebra_a6();
  const auto q = quotient(a6, oracle::named(a6, {"d", "1"}));
  CHECK(q.algebra.size() == 4);
  CHECK(is_homomorphism(a6, q.algebra, q.projection));
  CHECK(q.projection[id(a6, "d")] == q.projection[id(a6, "1")]);
  CHECK(q.projection[id(a6, "a")] == q.projection[id(a6, "b")]);
  CHECK(q.projection[id(a6, "0")] != q.projection[id(a6, "c")]);
  CHECK_THROWS_AS(quotient(a6, oracle::named(a6, {"b", "1"})), Error);
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(godel_chain(4), godel_chain(4)).has_value());
  CHECK_FALSE(find_isomorphism(godel_chain(3), lukasiewicz_chain(3)).has_value());
  CHECK_FALSE(find_isomorphism(algebra_a6(), godel_chain(6)).has_value());
}

TEST_CASE("prelinearity against the definition") {
  for (const auto& a : catalog_all()) {
    bool expected = true;
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < a.size(); ++y) {
        if (a.join(oracle::residuum(a, x, y), oracle::residuum(a, y, x)) != a.one()) {
          expected = false;
        }
      }
    }
    CHECK_MESSAGE(is_prelinear(a) == expected, a.name());
  }
}
