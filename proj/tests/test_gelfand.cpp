#include "doctest.h"

#include "oracles.hpp"
#include "reslat/catalog.hpp"
#include "reslat/gelfand.hpp"

using namespace reslat;
using oracle::named;

namespace {

/// Every prime lies under exactly one maximal, by subset scans.
bool gelfand_oracle(const ResiduatedLattice& a) {
  const auto ms = oracle::maximals(a);
  for (ElementSet p : oracle::primes(a)) {
    const auto above = std::count_if(ms.begin(), ms.end(), [&](ElementSet m) { return p.subset_of(m); });
    if (above != 1) return false;
  }
  return true;
}

GelfandVerdict verdict(const ResiduatedLattice& a) {
  FilterLattice fl(a);
  PureStructure ps(fl);
  return gelfand_verdict(ps);
}

}  // namespace

TEST_CASE("verdicts on the catalog") {
  for (const auto& a : catalog_all()) {
    CAPTURE(a.name());
    const auto v = verdict(a);
    CHECK(v.unanimous());
    CHECK(v.dissenters().empty());
    if (a.size() <= 12) CHECK(v.gelfand() == gelfand_oracle(a));
    CHECK(v.groups_holding() == (v.gelfand() ? kGelfandGroups.size() : 0));
    for (auto g : kGelfandGroups) CHECK(v.group_holds(g) == v.gelfand());
  }
}

TEST_CASE("A6 is not Gelfand and A8 is") {
  const auto a6 = algebra_a6();
  const auto v6 = verdict(a6);
  CHECK_FALSE(v6.gelfand());
  REQUIRE(v6.witness_prime.has_value());
  CHECK(*v6.witness_prime == named(a6, {"1"}));
  CHECK(v6.witness_maximals ==
        std::vector<ElementSet>{named(a6, {"c", "d", "1"}), named(a6, {"a", "b", "d", "1"})});
  REQUIRE(v6.contessa_pair.has_value());
  CHECK(a6.mul(v6.contessa_pair->first, v6.contessa_pair->second) == a6.zero());

  const auto v8 = verdict(algebra_a8());
  CHECK(v8.gelfand());
  CHECK_FALSE(v8.contessa_pair.has_value());
}

TEST_CASE("retractions onto the maximal spectrum") {
  const auto r6 = retraction(FilterLattice(algebra_a6()));
  CHECK_FALSE(r6.map.has_value());
  CHECK(r6.retractions == 0);
  const auto r8 = retraction(FilterLattice(algebra_a8()));
  REQUIRE(r8.map.has_value());
  CHECK(r8.continuous);
  CHECK(r8.retractions == 1);
}

TEST_CASE("retraction search on a hand-built space") {
  // Two closed points under one generic point: no retraction onto {1,2}.
  const std::vector<PointSet> closed{PointSet::singleton(1), PointSet::singleton(2)};
  const auto x = FiniteSpace::from_closed_subbasis(3, closed);
  CHECK(find_retractions(x, PointSet::from_bits(0b110)).found == 0);
  // Discrete: every assignment of point 0 works.
  const std::vector<PointSet> opens{PointSet::singleton(0), PointSet::singleton(1), PointSet::singleton(2)};
  const auto d = FiniteSpace::from_open_subbasis(3, opens);
  CHECK(find_retractions(d, PointSet::from_bits(0b110)).found == 2);
}

TEST_CASE("relation classes") {
  FilterLattice fl(algebra_a6());
  for (auto kind : {RelationKind::Join, RelationKind::DPart}) {
    const auto r = relation_closure(fl, kind);
    CHECK(r.classes == 1);
    CHECK(r.closure[0].size() == 3);
    CHECK_FALSE(relation_classes_match(fl, r));
  }
  FilterLattice fl8(algebra_a8());
  const auto r8 = relation_closure(fl8, RelationKind::Join);
  CHECK(r8.classes == 1);
  CHECK(relation_classes_match(fl8, r8));
  CHECK(quotient_space_homeo(fl8, RelationKind::DPart));
}

TEST_CASE("soft algebras") {
  CHECK(is_soft(FilterLattice(boolean_cube(2))));
  CHECK_FALSE(is_soft(FilterLattice(algebra_a6())));
  CHECK_FALSE(is_soft(FilterLattice(algebra_a8())));
  for (const auto& a : catalog_all()) {
    const auto s = soft_conditions(FilterLattice(a));
    CHECK_MESSAGE(s.unanimous(), a.name());
  }
}

TEST_CASE("max-spectrum Hausdorff battery") {
  for (const auto& a : catalog_all()) {
    const auto b = hausnorm_battery(FilterLattice(a));
    CHECK(b.size() == 6);
    CHECK_MESSAGE(unanimous(b), a.name());
  }
}

TEST_CASE("product of Gelfand algebras is Gelfand") {
  const auto a8 = algebra_a8();
  const auto p = direct_product(std::vector{a8, a8});
  REQUIRE(p.size() == 64);
  const auto v = verdict(p);
  CHECK(v.gelfand());
  CHECK(v.unanimous());
}
