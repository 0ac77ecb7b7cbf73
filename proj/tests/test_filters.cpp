#include "doctest.h"

#include "oracles.hpp"
#include "reslat/catalog.hpp"
#include "reslat/filters.hpp"

using namespace reslat;
using oracle::named;

namespace {

std::vector<ElementSet> vec(std::span<const ElementSet> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("filters, primes and maximals agree with subset scans") {
  for (const auto& a : catalog_all()) {
    if (a.size() > 12) continue;
    CAPTURE(a.name());
    FilterLattice fl(a);
    CHECK(vec(fl.filters()) == oracle::filters(a));
    CHECK(vec(fl.primes()) == oracle::primes(a));
    CHECK(vec(fl.maximals()) == oracle::maximals(a));
  }
}

TEST_CASE("filter table of A6") {
  const auto a = algebra_a6();
  FilterLattice fl(a);
  const std::vector<ElementSet> expected{named(a, {"1"}), named(a, {"d", "1"}),
                                         named(a, {"c", "d", "1"}),
                                         named(a, {"a", "b", "d", "1"}), a.carrier()};
  CHECK(vec(fl.filters()) == expected);
  CHECK(vec(fl.maximals()) ==
        std::vector<ElementSet>{named(a, {"c", "d", "1"}), named(a, {"a", "b", "d", "1"})});
  // b v c = d, so {d,1} is not prime.
  CHECK_FALSE(fl.is_prime(named(a, {"d", "1"})));
  CHECK(fl.is_prime(named(a, {"1"})));
}

TEST_CASE("filter table and spectrum of A8") {
  const auto a = algebra_a8();
  FilterLattice fl(a);
  const auto m = named(a, {"a", "c", "d", "e", "f", "1"});
  const std::vector<ElementSet> expected{named(a, {"1"}), named(a, {"f", "1"}),
                                         named(a, {"c", "e", "1"}), m, a.carrier()};
  CHECK(vec(fl.filters()) == expected);
  CHECK(vec(fl.primes()) ==
        std::vector<ElementSet>{named(a, {"f", "1"}), named(a, {"c", "e", "1"}), m});
  CHECK(vec(fl.maximals()) == std::vector<ElementSet>{m});
}

TEST_CASE("join is the generated filter and matches a closure oracle") {
  for (const auto& a : catalog_all()) {
    if (a.size() > 12) continue;
    FilterLattice fl(a);
    const auto fs = oracle::filters(a);
    for (ElementSet f : fs) {
      for (ElementSet g : fs) {
        ElementSet least = a.carrier();
        for (ElementSet h : fs) {
          if (f.subset_of(h) && g.subset_of(h) && h.subset_of(least)) least = h;
        }
        CHECK(filter_join(fl, f, g) == least);
        CHECK(filter_meet(fl, f, g) == (f & g));
      }
    }
  }
}

TEST_CASE("comaximality") {
  SUBCASE("A6 maximals are comaximal") {
    const auto a = algebra_a6();
    FilterLattice fl(a);
    const auto c = is_comaximal(fl, named(a, {"a", "b", "d", "1"}), named(a, {"c", "d", "1"}));
    CHECK(c.comaximal());
    REQUIRE(c.product.has_value());
    CHECK(a.mul(c.product->first, c.product->second) == a.zero());
    REQUIRE(c.negation.has_value());
  }
  SUBCASE("A8 primes are not") {
    const auto a = algebra_a8();
    FilterLattice fl(a);
    const auto c = is_comaximal(fl, named(a, {"c", "e", "1"}), named(a, {"f", "1"}));
    CHECK_FALSE(c.comaximal());
    CHECK_FALSE(c.product.has_value());
    CHECK_FALSE(c.negation.has_value());
  }
  SUBCASE("improper input") {
    const auto a = algebra_a6();
    FilterLattice fl(a);
    CHECK_THROWS_AS(is_comaximal(fl, a.carrier(), named(a, {"1"})), ImproperInput);
  }
}

TEST_CASE("prime extension") {
  {
    const auto a = algebra_a6();
    FilterLattice fl(a);
    const auto p = prime_extension(fl, named(a, {"1"}), named(a, {"0", "c"}));
    CHECK(p == named(a, {"a", "b", "d", "1"}));
    CHECK_THROWS_AS(prime_extension(fl, named(a, {"d", "1"}), named(a, {"0", "d"})), Unsatisfiable);
  }
  {
    const auto a = algebra_a8();
    FilterLattice fl(a);
    const auto p = prime_extension(fl, named(a, {"f", "1"}), named(a, {"0", "a", "c", "e"}));
    CHECK(p == named(a, {"f", "1"}));
  }
}

TEST_CASE("local algebras") {
  CHECK(is_local(FilterLattice(algebra_a8())));
  CHECK_FALSE(is_local(FilterLattice(algebra_a6())));
  for (const auto& a : catalog_all()) {
    FilterLattice fl(a);
    CHECK_MESSAGE(local_conditions(fl).unanimous(), a.name());
    CHECK(is_local(fl) == (oracle::maximals(a).size() == 1));
  }
}

TEST_CASE("radicals and semisimplicity") {
  const auto a6 = algebra_a6();
  FilterLattice fl6(a6);
  CHECK(radical(fl6, named(a6, {"1"})) == named(a6, {"d", "1"}));
  CHECK_FALSE(is_semisimple(fl6));
  CHECK_THROWS_AS(radical(fl6, a6.carrier()), ImproperInput);
  CHECK(is_semisimple(FilterLattice(boolean_cube(2))));
  CHECK(is_semisimple(FilterLattice(lukasiewicz_chain(4))));
  CHECK_FALSE(is_semisimple(FilterLattice(godel_chain(3))));
}

TEST_CASE("D-parts equal omega of the complement") {
  for (const auto& a : catalog_all()) {
    if (a.size() > 12) continue;
    FilterLattice fl(a);
    for (std::size_t i = 0; i < fl.primes().size(); ++i) {
      const ElementSet p = fl.primes()[i];
      ElementSet expected;
      for (Element x = 0; x < a.size(); ++x) {
        for (Element y = 0; y < a.size(); ++y) {
          if (!p.contains(y) && a.join(x, y) == a.one()) expected.insert(x);
        }
      }
      CHECK(fl.d_part_at(i) == expected);
      CHECK(d_part(fl, p) == expected);
    }
  }
}

TEST_CASE("omega rejects non-ideals") {
  const auto a = algebra_a6();
  FilterLattice fl(a);
  CHECK_THROWS_AS(omega_filter(fl, named(a, {"a"})), NotAnIdeal);
  CHECK(is_lattice_ideal(a, named(a, {"0", "a", "b"})));
}
