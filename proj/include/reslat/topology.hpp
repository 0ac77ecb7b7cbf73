#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reslat/filters.hpp"

namespace reslat {

enum class SpaceKind { HullKernel, Dual, Patch, Pure, DTopology, Subspace, Quotient, Custom };

const char* to_string(SpaceKind kind);

/// Largest point count for which open/closed families are materialized.
inline constexpr std::size_t kMaterializeCap = 20;

/// A finite topological space on points 0..n-1.
///
/// Stored as the minimal open neighbourhood of every point; a set is open
/// iff it is a union of minimal neighbourhoods.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Topology generated by a family of open sets (a subbasis).
  static FiniteSpace from_open_subbasis(std::size_t n, std::span<const PointSet> subbasis,
                                        SpaceKind kind = SpaceKind::Custom);
  /// Topology whose closed sets are generated by `closed_subbasis`
  /// (complements form an open subbasis).
  static FiniteSpace from_closed_subbasis(std::size_t n, std::span<const PointSet> closed_subbasis,
                                          SpaceKind kind = SpaceKind::Custom);

  std::size_t size() const noexcept { return minimal_open_.size(); }
  PointSet points() const { return PointSet::full(size()); }
  SpaceKind kind() const noexcept { return kind_; }

  PointSet minimal_open(std::size_t p) const { return minimal_open_[p]; }
  /// Smallest open set containing S.
  PointSet open_hull(PointSet s) const;
  PointSet closure(PointSet s) const;
  PointSet interior(PointSet s) const;
  bool is_open(PointSet s) const { return open_hull(s) == s; }
  bool is_closed(PointSet s) const { return closure(s) == s; }

  /// All open (closed) sets in canonical order. Throws BoundExceeded above
  /// kMaterializeCap points.
  std::vector<PointSet> open_sets() const;
  std::vector<PointSet> closed_sets() const;

  bool operator==(const FiniteSpace& o) const { return minimal_open_ == o.minimal_open_; }

 private:
  std::vector<PointSet> minimal_open_;
  SpaceKind kind_ = SpaceKind::Custom;
};

struct SpacePredicates {
  bool normal = false;
  bool hausdorff = false;
  bool t1 = false;
  bool compact = true;  // every finite space is compact
  bool discrete = false;
};

SpacePredicates space_predicates(const FiniteSpace& x);
bool is_normal(const FiniteSpace& x);
bool is_hausdorff(const FiniteSpace& x);
bool is_t1(const FiniteSpace& x);
bool is_discrete(const FiniteSpace& x);

/// Subspace on the points of `keep` (renumbered in increasing order).
FiniteSpace subspace(const FiniteSpace& x, PointSet keep);
/// Quotient by the partition `class_of` (values 0..classes-1).
FiniteSpace quotient_space(const FiniteSpace& x, std::span<const std::size_t> class_of,
                           std::size_t classes);

/// Preimage of every open set of `to` is open in `from`.
bool is_continuous(const FiniteSpace& from, const FiniteSpace& to,
                   std::span<const std::size_t> map);
/// Bijective, continuous, with continuous inverse.
bool is_homeomorphism(const FiniteSpace& from, const FiniteSpace& to,
                      std::span<const std::size_t> map);

// ---------------------------------------------------------------------------
// Spaces of prime filters

/// h_Pi(X) = {P in Pi : X subset of P}.
PointSet hull(std::span<const ElementSet> pi, ElementSet x);
/// d_Pi(X) = Pi \ h_Pi(X).
PointSet co_hull(std::span<const ElementSet> pi, ElementSet x);
/// k(pi) = intersection of the chosen primes; `top` when pi is empty.
ElementSet kernel(std::span<const ElementSet> pi, PointSet chosen, ElementSet top);
/// Primes of Pi containing some prime of pi.
PointSet specialization(std::span<const ElementSet> pi, PointSet chosen);
/// Primes of Pi contained in some prime of pi.
PointSet generalization(std::span<const ElementSet> pi, PointSet chosen);

/// A topology on a collection of prime filters.
struct SpectrumSpace {
  std::vector<ElementSet> points;
  FiniteSpace space;

  std::optional<std::size_t> index_of(ElementSet p) const;
  PointSet set_of(std::span<const ElementSet> filters) const;
};

/// Hull-kernel (closed basis h(x)), dual (open basis h(x)), or patch topology
/// on the primes Pi. DTopology uses the opens d(F) for F in `pure_filters`.
SpectrumSpace build_space(const FilterLattice& fl, std::span<const ElementSet> pi, SpaceKind kind,
                          std::span<const ElementSet> pure_filters = {});

/// Spec_h and Max_h.
SpectrumSpace spec_h(const FilterLattice& fl);
SpectrumSpace max_h(const FilterLattice& fl);

struct ClopenCheck {
  std::vector<PointSet> clopens;    // Clop(Spec_h), canonical order
  std::vector<PointSet> from_beta;  // {h(e) : e in beta(A)}, canonical order
  bool equal() const { return clopens == from_beta; }
};

ClopenCheck clopen_sets(const FilterLattice& fl);
/// Throws EquivalenceViolation when Clop(Spec_h) differs from H(beta(A)).
bool clopen_check(const FilterLattice& fl);

struct ClosedCharacterization {
  bool h_closed = false;
  bool patch_closed = false;
  bool s_stable = false;
};

ClosedCharacterization closed_characterization(const FilterLattice& fl, PointSet chosen);
/// Throws EquivalenceViolation when h-closedness differs from
/// patch-closedness plus S-stability.
bool closed_iff_patch_and_stable(const FilterLattice& fl, PointSet chosen);

struct DensityCheck {
  bool max_dense = false;
  bool semisimple = false;
};

DensityCheck density_check(const FilterLattice& fl);
/// Throws EquivalenceViolation when the two sides differ.
bool max_dense_iff_semisimple(const FilterLattice& fl);

}  // namespace reslat
