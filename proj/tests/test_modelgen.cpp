#include "doctest.h"

#include <set>
#include <tuple>

#include "naive_models.hpp"
#include "reslat/catalog.hpp"
#include "reslat/modelgen.hpp"

using namespace reslat;

TEST_CASE("lattice counts match the naive poset scan") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(enumerate_lattices(n).size() == naive::lattices(n).size());
  }
  CHECK(enumerate_lattices(7).size() == 53);
  CHECK_THROWS_AS(enumerate_lattices(0), BoundExceeded);
  CHECK_THROWS_AS(enumerate_lattices(kMaxEnumerationSize + 1), BoundExceeded);
}

TEST_CASE("enumerated lattices are pairwise non-isomorphic and naturally labelled") {
  const auto ls = enumerate_lattices(6);
  for (const auto& l : ls) {
    CHECK(l.bottom() == 0);
    CHECK(l.top() == 5);
    for (Element x = 0; x < 6; ++x) {
      for (Element y = 0; y < 6; ++y) {
        if (l.leq(x, y)) CHECK(x <= y);
      }
    }
  }
  std::set<std::vector<char>> canon;
  for (const auto& l : ls) {
    std::vector<char> leq(36);
    for (Element x = 0; x < 6; ++x) {
      for (Element y = 0; y < 6; ++y) leq[x * 6 + y] = l.leq(x, y);
    }
    canon.insert(naive::canonical(6, leq));
  }
  CHECK(canon.size() == ls.size());
}

TEST_CASE("algebra counts match the naive table scan") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    EnumerationTask task;
    task.min_size = task.max_size = n;
    CHECK(enumerate_algebras(task).size() == naive::algebras(n).size());
  }
}

TEST_CASE("structures on chains") {
  const auto c2 = godel_chain(2).lattice();
  CHECK(residuated_structures(c2).size() == 1);
  // Goedel and Lukasiewicz, nothing else, on three elements.
  const auto c3 = godel_chain(3).lattice();
  const auto rs = residuated_structures(c3, "C3");
  CHECK(rs.size() == 2);
  CHECK(rs.front().name() == "C3#1");
  EnumerationTask chains;
  chains.min_size = 1;
  chains.max_size = 5;
  chains.backbone = Backbone::Chains;
  for (const auto& a : enumerate_algebras(chains)) CHECK(is_prelinear(a));
}

TEST_CASE("no duplicates up to isomorphism, and A6 appears") {
  EnumerationTask task;
  task.min_size = task.max_size = 6;
  const auto all = enumerate_algebras(task);
  CHECK(all.size() == 129);
  std::size_t a6_matches = 0;
  const auto a6 = algebra_a6();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (find_isomorphism(all[i], a6)) ++a6_matches;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].lattice() == all[j].lattice()) CHECK_FALSE(find_isomorphism(all[i], all[j]));
    }
  }
  CHECK(a6_matches == 1);
}

TEST_CASE("automorphisms") {
  const auto b2 = boolean_cube(2).lattice();
  CHECK(lattice_automorphisms(b2).size() == 2);
  CHECK(lattice_automorphisms(godel_chain(5).lattice()).size() == 1);
}

TEST_CASE("classification sweep") {
  EnumerationTask task;
  task.min_size = 1;
  task.max_size = 5;
  task.threads = 2;
  const auto c = classify_all(task);
  CHECK(c.counts.models == c.reports.size());
  CHECK(c.counts.models == 1 + 1 + 2 + 7 + 26);
  CHECK(c.counts.prelinear_not_gelfand == 0);
  for (const auto& r : c.reports) {
    CHECK(r.unanimous());
    if (r.size <= 2) CHECK(r.flags.gelfand);
  }
  CHECK(count_flags(c.reports).gelfand == c.counts.gelfand);
  CHECK(std::is_sorted(c.reports.begin(), c.reports.end(), [](const auto& x, const auto& y) {
    return std::tie(x.size, x.name) < std::tie(y.size, y.name);
  }));
}
