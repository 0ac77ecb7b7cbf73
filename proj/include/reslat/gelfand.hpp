#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "reslat/criterion.hpp"
#include "reslat/pure.hpp"

namespace reslat {

/// The fourteen independent characterizations, in report order.
inline constexpr std::array<std::string_view, 14> kGelfandGroups = {
    "unique-maximal",        "contessa",        "maximal-filters",
    "normal-filter-lattice", "max-separation",  "retract",
    "spectrum-normal",       "join-relation",   "d-part-relation",
    "d-topology",            "pure-spectrum",   "unit-part",
    "pure-part",             "rho-rad-adjunction",
};

struct GelfandVerdict {
  Battery criteria;
  /// First prime (canonical order) lying under two maximal filters.
  std::optional<ElementSet> witness_prime;
  std::vector<ElementSet> witness_maximals;
  /// First pair with a*b = 0 and no m, n with ~a^m v ~b^n = 1.
  std::optional<std::pair<Element, Element>> contessa_pair;

  bool gelfand() const { return !witness_prime.has_value(); }
  bool unanimous() const { return reslat::unanimous(criteria); }
  /// A group holds when all of its criteria hold.
  bool group_holds(std::string_view group) const;
  std::size_t groups_holding() const;
  /// Criteria whose value differs from the definition.
  std::vector<const Criterion*> dissenters() const;
};

/// Every prime lies under exactly one maximal filter.
Criterion is_gelfand_definition(const FilterLattice& fl, std::optional<ElementSet>* prime = nullptr,
                                std::vector<ElementSet>* maximals = nullptr);
/// a*b = 0 implies ~a^m v ~b^n = 1 for some m, n.
Criterion contessa_check(const FilterLattice& fl,
                         std::optional<std::pair<Element, Element>>* pair = nullptr);
/// Ten conditions on maximal filters and their D-parts.
Battery pmprop_battery(const FilterLattice& fl);
/// Normality of the filter lattice and of the principal-filter lattice.
Battery nococo_check(const FilterLattice& fl);
/// Maximals pairwise separated in Spec_h; G(m) closed in Spec_h.
Battery separation_check(const FilterLattice& fl);

enum class RelationKind { Join, DPart };

/// Base relation on Spec, its transitive closure and the classes.
struct RelationClosure {
  std::vector<ElementSet> points;       // the primes
  std::vector<PointSet> base;           // row p: {q : (p,q) in relation}
  std::vector<PointSet> closure;        // transitive closure rows
  std::vector<std::size_t> class_of;    // class index per prime
  std::size_t classes = 0;
};

/// Join: p v q != A. DPart: D(p) v D(q) != A.
RelationClosure relation_closure(const FilterLattice& fl, RelationKind kind);
/// closure(m) = G(m) for every maximal m.
bool relation_classes_match(const FilterLattice& fl, const RelationClosure& r);
/// m -> class(m) is a homeomorphism Max_h -> Spec_h / closure.
bool quotient_space_homeo(const FilterLattice& fl, RelationKind kind);

struct RetractionSearch {
  std::size_t found = 0;                            // capped at the search limit
  std::optional<std::vector<std::size_t>> first;   // point -> point of `onto`
};

/// Continuous maps x -> subspace(onto) fixing `onto` pointwise.
RetractionSearch find_retractions(const FiniteSpace& x, PointSet onto, std::size_t limit = 2);

struct Retraction {
  /// p -> the unique maximal above p, when every prime has one.
  std::optional<std::vector<ElementSet>> map;
  bool continuous = false;
  /// Number of continuous retractions Spec_h -> Max_h (counted up to 2).
  std::size_t retractions = 0;
};

Retraction retraction(const FilterLattice& fl);

/// Evaluate all fourteen groups.
GelfandVerdict gelfand_verdict(const PureStructure& ps);

struct SoftConditions {
  bool definition = false;       // semisimple, unique maximal over h(Rad)
  bool hausdorff_dense = false;  // Max_h Hausdorff and dense in Spec_h
  bool gelfand_semisimple = false;
  bool unanimous() const {
    return definition == hausdorff_dense && definition == gelfand_semisimple;
  }
};

SoftConditions soft_conditions(const FilterLattice& fl);
/// Throws EquivalenceViolation when the three conditions disagree.
bool is_soft(const FilterLattice& fl);

/// Six conditions equivalent to Max_h being Hausdorff.
Battery hausnorm_battery(const FilterLattice& fl);

}  // namespace reslat
