#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "reslat/catalog.hpp"
#include "reslat/filters.hpp"
#include "reslat/topology.hpp"

using namespace reslat;
using oracle::named;

namespace {

FiniteSpace random_space(std::mt19937& rng) {
  const std::size_t n = 1 + rng() % 6;
  std::vector<PointSet> basis(1 + rng() % 5);
  for (auto& b : basis) b = PointSet::from_bits(rng() & ((std::uint64_t{1} << n) - 1));
  return FiniteSpace::from_open_subbasis(n, basis);
}

/// Smallest closed set containing s, from the list of closed sets.
PointSet closure_by_scan(const FiniteSpace& x, PointSet s) {
  PointSet best = x.points();
  for (PointSet c : x.closed_sets()) {
    if (s.subset_of(c) && c.subset_of(best)) best = c;
  }
  return best;
}

}  // namespace

TEST_CASE("random spaces: closure and normality against exhaustive scans") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_space(rng);
    const auto opens = x.open_sets();
    for (PointSet u : opens) {
      for (PointSet v : opens) {
        CHECK(x.is_open(u | v));
        CHECK(x.is_open(u & v));
      }
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << x.size()); ++m) {
      const auto s = PointSet::from_bits(m);
      CHECK(x.closure(s) == closure_by_scan(x, s));
      CHECK(x.interior(s) == x.points() - x.closure(x.points() - s));
    }
    CHECK(is_normal(x) == oracle::normal_by_open_sets(x));
  }
}

TEST_CASE("separation axioms on small spaces") {
  const std::vector<PointSet> sierpinski{PointSet::singleton(0)};
  const auto s = FiniteSpace::from_open_subbasis(2, sierpinski);
  CHECK_FALSE(is_t1(s));
  CHECK_FALSE(is_hausdorff(s));
  CHECK(is_normal(s));
  const std::vector<PointSet> points{PointSet::singleton(0), PointSet::singleton(1)};
  const auto d = FiniteSpace::from_open_subbasis(2, points);
  CHECK(is_discrete(d));
  CHECK(is_hausdorff(d));
}

TEST_CASE("hull and kernel") {
  const auto a = algebra_a6();
  FilterLattice fl(a);
  const auto pi = fl.primes();
  // primes: {1}, {c,d,1}, {a,b,d,1}
  CHECK(hull(pi, named(a, {"d"})) == PointSet::from_bits(0b110));
  CHECK(co_hull(pi, named(a, {"d"})) == PointSet::from_bits(0b001));
  CHECK(kernel(pi, PointSet::from_bits(0b110), a.carrier()) == named(a, {"d", "1"}));
  CHECK(kernel(pi, PointSet{}, a.carrier()) == a.carrier());
  CHECK(specialization(pi, PointSet::from_bits(0b001)) == PointSet::from_bits(0b111));
  CHECK(generalization(pi, PointSet::from_bits(0b010)) == PointSet::from_bits(0b011));
}

TEST_CASE("hull-kernel spectra of A6 and A8") {
  {
    FilterLattice fl(algebra_a6());
    const auto sp = spec_h(fl);
    CHECK_FALSE(is_normal(sp.space));
    CHECK(is_hausdorff(max_h(fl).space));
    // {1} specializes to both maximals
    CHECK(sp.space.closure(PointSet::singleton(0)) == sp.space.points());
  }
  {
    FilterLattice fl(algebra_a8());
    CHECK(is_normal(spec_h(fl).space));
    CHECK(max_h(fl).space.size() == 1);
  }
}

TEST_CASE("closed sets of Spec_h are hulls") {
  for (const auto& a : catalog_all()) {
    FilterLattice fl(a);
    const auto sp = spec_h(fl);
    if (sp.space.size() > kMaterializeCap) continue;
    for (PointSet c : sp.space.closed_sets()) {
      CHECK(hull(fl.primes(), kernel(fl.primes(), c, a.carrier())) == c);
      CHECK(closed_iff_patch_and_stable(fl, c));
    }
  }
}

TEST_CASE("clopens come from the Boolean center") {
  CHECK(clopen_sets(FilterLattice(boolean_cube(2))).clopens.size() == 4);
  CHECK(clopen_sets(FilterLattice(algebra_a6())).clopens.size() == 2);
  for (const auto& a : catalog_all()) {
    CHECK_MESSAGE(clopen_check(FilterLattice(a)), a.name());
  }
}

TEST_CASE("Max is dense exactly for semisimple algebras") {
  for (const auto& a : catalog_all()) {
    FilterLattice fl(a);
    const auto d = density_check(fl);
    CHECK(d.max_dense == d.semisimple);
    CHECK(d.semisimple == is_semisimple(fl));
  }
  CHECK_FALSE(density_check(FilterLattice(algebra_a6())).max_dense);
  CHECK(density_check(FilterLattice(boolean_cube(3))).max_dense);
}

TEST_CASE("continuity and subspaces") {
  const std::vector<PointSet> sierpinski{PointSet::singleton(0)};
  const auto s = FiniteSpace::from_open_subbasis(2, sierpinski);
  const std::vector<std::size_t> id{0, 1};
  const std::vector<std::size_t> swap{1, 0};
  CHECK(is_homeomorphism(s, s, id));
  CHECK_FALSE(is_continuous(s, s, swap));
  CHECK(subspace(s, PointSet::singleton(1)).size() == 1);
  const std::vector<std::size_t> collapse{0, 0};
  CHECK(quotient_space(s, collapse, 1).size() == 1);
}
