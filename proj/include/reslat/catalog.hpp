#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

/// The six-element algebra that is not Gelfand.
ResiduatedLattice algebra_a6();
/// The eight-element local algebra that is Gelfand.
ResiduatedLattice algebra_a8();
/// n-element chain with x*y = min(x, y).
ResiduatedLattice godel_chain(std::size_t n);
/// n-element chain with x*y = max(0, x + y - top).
ResiduatedLattice lukasiewicz_chain(std::size_t n);
/// Boolean algebra of subsets of a k-element set, x*y = x meet y.
ResiduatedLattice boolean_cube(std::size_t k);

/// Built-in names: A6, A8, C2..C6, B1..B3, MV3.
std::vector<std::string> catalog_names();
std::optional<ResiduatedLattice> catalog_lookup(std::string_view name);
/// Every built-in algebra, in catalog_names() order.
std::vector<ResiduatedLattice> catalog_all();

}  // namespace reslat
