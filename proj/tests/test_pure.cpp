#include "doctest.h"

#include "oracles.hpp"
#include "reslat/catalog.hpp"
#include "reslat/pure.hpp"

using namespace reslat;
using oracle::named;

namespace {

std::vector<ElementSet> vec(std::span<const ElementSet> s) { return {s.begin(), s.end()}; }

/// sigma(F) straight from the definition: kernel of the primes lying
/// under some prime that contains F.
ElementSet sigma_oracle(const ResiduatedLattice& a, ElementSet f) {
  const auto pr = oracle::primes(a);
  ElementSet k = a.carrier();
  for (ElementSet q : pr) {
    const bool below = std::any_of(pr.begin(), pr.end(), [&](ElementSet p) {
      return f.subset_of(p) && q.subset_of(p);
    });
    if (below) k &= q;
  }
  return k;
}

}  // namespace

TEST_CASE("pure filters of A6 and A8 are trivial") {
  for (const auto& a : {algebra_a6(), algebra_a8()}) {
    FilterLattice fl(a);
    PureStructure ps(fl);
    CHECK(vec(ps.pure_filters()) == std::vector<ElementSet>{named(a, {"1"}), a.carrier()});
  }
}

TEST_CASE("Boolean algebras: every filter is pure") {
  const auto b2 = boolean_cube(2);
  FilterLattice fl(b2);
  PureStructure ps(fl);
  CHECK(ps.pure_filters().size() == 4);
  CHECK(vec(ps.spp()) == vec(fl.maximals()));
}

TEST_CASE("sigma matches the definition and the coannihilator route") {
  for (const auto& a : catalog_all()) {
    if (a.size() > 12) continue;
    CAPTURE(a.name());
    FilterLattice fl(a);
    PureStructure ps(fl);
    for (ElementSet f : fl.filters()) {
      CHECK(ps.sigma(f) == sigma_oracle(a, f));
      CHECK(ps.sigma_via_coannihilators(f) == ps.sigma(f));
      CHECK(ps.is_pure(f) == (sigma_oracle(a, f) == f));
    }
  }
}

TEST_CASE("rho is the largest pure filter below") {
  for (const auto& a : catalog_all()) {
    FilterLattice fl(a);
    PureStructure ps(fl);
    for (ElementSet f : fl.filters()) {
      ElementSet best;
      for (ElementSet g : ps.pure_filters()) {
        if (g.subset_of(f) && best.subset_of(g)) best = g;
      }
      CHECK(ps.rho(f) == best);
    }
  }
}

TEST_CASE("rho equals sigma on the primes of A8") {
  const auto a = algebra_a8();
  FilterLattice fl(a);
  PureStructure ps(fl);
  for (ElementSet p : fl.primes()) CHECK(ps.rho(p) == ps.sigma(p));
}

TEST_CASE("purely-prime spectrum") {
  const auto a = algebra_a6();
  FilterLattice fl(a);
  PureStructure ps(fl);
  CHECK(vec(ps.spp()) == std::vector<ElementSet>{named(a, {"1"})});
  const auto map = pure_part_map(ps);
  CHECK(map.lands_in_spp);
  CHECK(map.continuous);
  CHECK_FALSE(spp_max_homeo(ps));

  FilterLattice fl8(algebra_a8());
  PureStructure ps8(fl8);
  CHECK(spp_max_homeo(ps8));
  CHECK(d_topology_coincidence(ps8));
}

TEST_CASE("rho/Rad adjunction") {
  {
    FilterLattice fl(algebra_a6());
    PureStructure ps(fl);
    const auto c = rho_rad_adjunction(ps);
    CHECK_FALSE(c.holds);
    CHECK_FALSE(c.witness.empty());
  }
  FilterLattice fl(algebra_a8());
  PureStructure ps(fl);
  CHECK(rho_rad_adjunction(ps).holds);
}

TEST_CASE("sigma and rho batteries are unanimous on the catalog") {
  for (const auto& a : catalog_all()) {
    FilterLattice fl(a);
    PureStructure ps(fl);
    CHECK_MESSAGE(unanimous(sigma_battery(ps)), a.name());
    CHECK_MESSAGE(unanimous(rho_battery(ps)), a.name());
    const auto pc = pure_characterization(ps);
    CHECK(pc.intersection_of_d_parts);
    CHECK(pc.closed_set_form);
  }
}
