#pragma once

// Brute-force reference computations, written straight from the definitions
// and independent of the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/topology.hpp"

namespace oracle {

using reslat::Element;
using reslat::ElementSet;
using reslat::PointSet;
using reslat::ResiduatedLattice;

inline ElementSet named(const ResiduatedLattice& a, std::initializer_list<const char*> names) {
  ElementSet s;
  for (const char* n : names) s.insert(*a.find(n));
  return s;
}

inline ElementSet whole(const ResiduatedLattice& a) { return ElementSet::full(a.size()); }

/// Contains 1, upward closed, closed under products.
inline bool filter_by_definition(const ResiduatedLattice& a, ElementSet s) {
  if (!s.contains(a.one())) return false;
  for (std::size_t x : s) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.leq(static_cast<Element>(x), y) && !s.contains(y)) return false;
    }
    for (std::size_t y : s) {
      if (!s.contains(a.mul(static_cast<Element>(x), static_cast<Element>(y)))) return false;
    }
  }
  return true;
}

/// Every filter, sorted by (cardinality, bitmask).
inline std::vector<ElementSet> filters(const ResiduatedLattice& a) {
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m) {
    const auto s = ElementSet::from_bits(m);
    if (filter_by_definition(a, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool prime_by_definition(const ResiduatedLattice& a, ElementSet p) {
  if (p == whole(a) || !filter_by_definition(a, p)) return false;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (p.contains(a.join(x, y)) && !p.contains(x) && !p.contains(y)) return false;
    }
  }
  return true;
}

inline std::vector<ElementSet> primes(const ResiduatedLattice& a) {
  std::vector<ElementSet> out;
  for (ElementSet f : filters(a)) {
    if (prime_by_definition(a, f)) out.push_back(f);
  }
  return out;
}

inline std::vector<ElementSet> maximals(const ResiduatedLattice& a) {
  const auto fs = filters(a);
  std::vector<ElementSet> out;
  for (ElementSet f : fs) {
    if (f == whole(a)) continue;
    const bool top = std::none_of(fs.begin(), fs.end(), [&](ElementSet g) {
      return g != f && g != whole(a) && f.subset_of(g);
    });
    if (top) out.push_back(f);
  }
  return out;
}

/// join {z : x*z <= y}
inline Element residuum(const ResiduatedLattice& a, Element x, Element y) {
  Element acc = a.zero();
  for (Element z = 0; z < a.size(); ++z) {
    if (a.leq(a.mul(x, z), y)) acc = a.join(acc, z);
  }
  return acc;
}

/// Normality by enumerating every pair of disjoint closed sets and every
/// pair of open sets.
inline bool normal_by_open_sets(const reslat::FiniteSpace& x) {
  const auto opens = x.open_sets();
  const PointSet all = x.points();
  for (PointSet o1 : opens) {
    for (PointSet o2 : opens) {
      const PointSet c1 = all - o1;
      const PointSet c2 = all - o2;
      if (c1.intersects(c2)) continue;
      bool separated = false;
      for (PointSet u : opens) {
        if (!c1.subset_of(u)) continue;
        for (PointSet v : opens) {
          if (c2.subset_of(v) && !u.intersects(v)) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return false;
    }
  }
  return true;
}

}  // namespace oracle
