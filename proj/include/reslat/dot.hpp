#pragma once

#include <span>
#include <string>
#include <string_view>

#include "reslat/algebra.hpp"
#include "reslat/filters.hpp"
#include "reslat/topology.hpp"

namespace reslat {

/// Hasse diagram: one edge per covering pair, lower -> upper.
std::string hasse_dot(const ResiduatedLattice& a);

/// Specialization order of a space: edge p -> q when q is in cl{p}, p is
/// not in cl{q}, and no point lies strictly between them.
std::string specialization_dot(const FiniteSpace& x, std::span<const std::string> labels,
                               std::string_view graph_name);

/// Specialization order of Spec_h (inclusion of primes).
std::string spectrum_dot(const FilterLattice& fl);

}  // namespace reslat
