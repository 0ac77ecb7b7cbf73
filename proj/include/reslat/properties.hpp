#pragma once

#include <string>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

struct PropertyCheck {
  std::string name;
  bool holds = false;
  std::string detail;  // first counterexample when the property fails
};

/// Exhaustive structural audit of one algebra: residuation laws, filter
/// generation, spectra and topologies, D-parts, unit and pure parts, and
/// the extra properties of Gelfand algebras when they apply.
std::vector<PropertyCheck> audit_properties(const ResiduatedLattice& a);

}  // namespace reslat
