#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

/// Least filter containing X: the up-set of the idempotent power of the
/// product of X (products of X are bounded below by powers of that product).
ElementSet generated_filter(const ResiduatedLattice& a, ElementSet x);

/// "{a,b,1}" with members in index order.
std::string format_set(const ResiduatedLattice& a, ElementSet s);

/// Prime and maximal filters, with the D-part of every prime.
struct SpectrumSets {
  std::vector<ElementSet> primes;    // canonical order
  std::vector<ElementSet> maximals;  // canonical order, subset of primes
  std::vector<ElementSet> d_parts;   // parallel to primes
};

/// The frame of all filters of an algebra, with its spectrum.
///
/// Owns a copy of the algebra. All queries are const and thread-safe.
class FilterLattice {
 public:
  explicit FilterLattice(ResiduatedLattice algebra);

  const ResiduatedLattice& algebra() const noexcept { return algebra_; }

  /// All filters in canonical order (cardinality, then bitmask).
  std::span<const ElementSet> filters() const noexcept { return filters_; }
  std::size_t size() const noexcept { return filters_.size(); }
  std::optional<std::size_t> index_of(ElementSet f) const;
  bool contains(ElementSet f) const { return index_of(f).has_value(); }

  ElementSet bottom() const { return ElementSet::singleton(algebra_.one()); }
  ElementSet top() const { return algebra_.carrier(); }
  ElementSet principal(Element x) const { return principal_[x]; }

  ElementSet meet(ElementSet f, ElementSet g) const { return f & g; }
  /// F v G = filter generated by F u G.
  ElementSet join(ElementSet f, ElementSet g) const;

  const SpectrumSets& spectrum() const noexcept { return spectrum_; }
  std::span<const ElementSet> primes() const noexcept { return spectrum_.primes; }
  std::span<const ElementSet> maximals() const noexcept { return spectrum_.maximals; }
  bool is_prime(ElementSet f) const;
  bool is_maximal(ElementSet f) const;
  /// D-part of a prime given by its position in primes().
  ElementSet d_part_at(std::size_t prime_index) const {
    return spectrum_.d_parts[prime_index];
  }
  std::optional<std::size_t> prime_index(ElementSet p) const;

  /// Intersection of the maximal filters containing F; A when there are none.
  ElementSet radical_total(ElementSet f) const;
  /// Maximal filters containing F.
  std::vector<ElementSet> maximals_above(ElementSet f) const;

 private:
  ResiduatedLattice algebra_;
  std::vector<ElementSet> filters_;
  std::vector<ElementSet> principal_;
  std::vector<std::size_t> join_;  // filters_.size()^2, indices
  SpectrumSets spectrum_;
};

FilterLattice all_filters(const ResiduatedLattice& a);

ElementSet filter_join(const FilterLattice& fl, ElementSet f, ElementSet g);
ElementSet filter_meet(const FilterLattice& fl, ElementSet f, ElementSet g);

/// Outcome of the three comaximality criteria for two proper filters.
struct Comaximality {
  bool joins_to_top = false;                            // F v G = A
  std::optional<std::pair<Element, Element>> product;   // f*g = 0
  std::optional<Element> negation;                      // a in F, ~a in G
  bool comaximal() const { return joins_to_top; }
};

/// Throws ImproperInput if F or G is A, EquivalenceViolation if the three
/// criteria disagree.
Comaximality is_comaximal(const FilterLattice& fl, ElementSet f, ElementSet g);

SpectrumSets prime_filters(const FilterLattice& fl);
std::vector<ElementSet> maximal_filters(const FilterLattice& fl);

/// Rad(F) for proper F; throws ImproperInput for F = A.
ElementSet radical(const FilterLattice& fl, ElementSet f);
/// Rad(A) = {1}.
bool is_semisimple(const FilterLattice& fl);

/// The five local-ness conditions, each computed on its own.
struct LocalConditions {
  bool one_maximal = false;           // exactly one maximal filter
  bool in_is_filter = false;          // in(A) is a filter
  bool in_is_proper_filter = false;   // in(A) is a proper filter
  bool in_is_unique_maximal = false;  // Max(A) = {in(A)}
  bool ni_is_prime = false;           // ni(A) proper, x*y in ni => x or y in ni
  bool unanimous() const;
};

LocalConditions local_conditions(const FilterLattice& fl);
/// Throws EquivalenceViolation when the five conditions disagree.
bool is_local(const FilterLattice& fl);

/// A prime filter containing F, disjoint from the join-closed set C, and
/// maximal among filters with that property (first in canonical order).
/// Throws Unsatisfiable if F meets C, Error if C is empty or not join-closed.
ElementSet prime_extension(const FilterLattice& fl, ElementSet f, ElementSet c);

/// X^perp = intersection of the primes not containing X (A if none).
ElementSet coannihilator(const FilterLattice& fl, ElementSet x);

struct CoannihilatorFamilies {
  std::vector<ElementSet> all;       // Gamma(A), canonical order
  std::vector<ElementSet> elements;  // gamma(A) = {x^perp}, canonical order
  bool baer = false;                 // Gamma(A) is a sublattice of F(A)
  bool rickart = false;              // gamma(A) is a Boolean sublattice of F(A)
};

CoannihilatorFamilies coannihilators(const FilterLattice& fl);

/// Down-closed, join-closed, non-empty.
bool is_lattice_ideal(const ResiduatedLattice& a, ElementSet s);

/// omega(I) = {a : a v x = 1 for some x in I}. Throws NotAnIdeal.
ElementSet omega_filter(const FilterLattice& fl, ElementSet ideal);

/// D(p) = omega(A \ p), recomputed as k(G(p)); throws EquivalenceViolation
/// if the two disagree and Error if p is not prime.
ElementSet d_part(const FilterLattice& fl, ElementSet prime);

}  // namespace reslat
