#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "reslat/algebra.hpp"

namespace reslat {

/// Text format, one directive per line, `#` starts a comment:
///
///   name A6
///   elements 0 a b c d 1
///   covers 0<a a<b 0<c c<d b<d d<1
///   mul
///   0 0 0 0 0 0
///   ...            (n rows of n element names)
///   res            (optional, same shape)
///   ...
///
/// `leq` followed by n rows of 0/1 may replace `covers`.
/// A document whose first non-blank character is `{` is read as JSON with
/// keys name, elements, covers ([[lo, hi], ...]) or leq, mul, res.
RawTables parse_raw(std::string_view text);
/// parse_raw followed by validate.
ResiduatedLattice parse_algebra(std::string_view text);

/// Canonical text form: covers sorted, res table included.
std::string serialize_text(const ResiduatedLattice& a);
std::string serialize_json(const ResiduatedLattice& a);

/// Throws IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// A catalog name, or a path to a text/JSON algebra file.
ResiduatedLattice load_algebra(std::string_view spec);

}  // namespace reslat
