#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "reslat/criterion.hpp"
#include "reslat/filters.hpp"
#include "reslat/topology.hpp"

namespace reslat {

/// sigma, rho, pure filters and the pure spectrum of an algebra.
///
/// Keeps a reference to the filter lattice, which must outlive it.
class PureStructure {
 public:
  /// Throws EquivalenceViolation if the two routes to sigma disagree.
  explicit PureStructure(const FilterLattice& fl);

  const FilterLattice& filters() const noexcept { return *fl_; }

  /// sigma(F) = k(G(h(F))). Throws Error if F is not a filter.
  ElementSet sigma(ElementSet f) const;
  /// sigma(F) = {a : F v a^perp = A}, computed from coannihilators.
  ElementSet sigma_via_coannihilators(ElementSet f) const;
  /// Largest pure filter contained in F.
  ElementSet rho(ElementSet f) const;
  bool is_pure(ElementSet f) const;

  std::span<const ElementSet> pure_filters() const noexcept { return pure_; }
  std::span<const ElementSet> purely_maximal() const noexcept { return purely_maximal_; }
  /// Purely-prime filters.
  std::span<const ElementSet> spp() const noexcept { return spp_; }

  /// Spp with opens d_p(F) = {P in Spp : F not in P} over pure F.
  const SpectrumSpace& pure_spectrum() const noexcept { return pure_spectrum_; }
  /// Spec with opens d(F) over pure F.
  const SpectrumSpace& d_topology() const noexcept { return d_topology_; }

 private:
  std::size_t index(ElementSet f) const;

  const FilterLattice* fl_;
  std::vector<ElementSet> sigma_;
  std::vector<ElementSet> sigma_alt_;
  std::vector<ElementSet> rho_;
  std::vector<ElementSet> pure_;
  std::vector<ElementSet> purely_maximal_;
  std::vector<ElementSet> spp_;
  SpectrumSpace pure_spectrum_;
  SpectrumSpace d_topology_;
};

/// The pure part map Spec -> Spp, p -> rho(p).
struct PurePartMap {
  std::vector<ElementSet> images;  // parallel to the primes
  bool lands_in_spp = false;       // every rho(p) is purely-prime
  bool preimages_match = false;    // rho^-1(d_p(F)) = d(F) for every pure F
  bool continuous = false;         // continuity into the pure spectrum
};

PurePartMap pure_part_map(const PureStructure& ps);

/// rho restricted to Max is a homeomorphism Max_h -> Spp.
bool spp_max_homeo(const PureStructure& ps);

/// Hull-kernel and D-topology induce the same subspace topology on Max.
bool d_topology_coincidence(const PureStructure& ps);

struct PureCharacterization {
  bool intersection_of_d_parts = false;  // every pure F = meet of D(m), m in Max n h(F)
  bool closed_set_form = false;          // pure filters = meets of D(m) over Max n C, C closed
};

PureCharacterization pure_characterization(const PureStructure& ps);

/// rho(F) in G  <=>  F in Rad(G) over all pairs, with Rad(A) = A.
Criterion rho_rad_adjunction(const PureStructure& ps);

/// The five sigma conditions equivalent to being Gelfand.
Battery sigma_battery(const PureStructure& ps);
/// The six rho conditions equivalent to being Gelfand.
Battery rho_battery(const PureStructure& ps);

}  // namespace reslat
