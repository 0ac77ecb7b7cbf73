#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/criterion.hpp"

namespace reslat {

/// One equivalence battery: the value by definition and every criterion.
struct BatteryVerdict {
  std::string name;
  bool verdict = false;
  bool unanimous = false;
  Battery criteria;
  bool operator==(const BatteryVerdict&) const;
};

struct ClassificationFlags {
  bool gelfand = false;
  bool soft = false;
  bool local = false;
  bool semisimple = false;
  bool rickart = false;
  bool baer = false;
  bool prelinear = false;
  bool operator==(const ClassificationFlags&) const = default;
};

struct AnalysisReport {
  std::string name;
  std::size_t size = 0;
  std::vector<std::string> filters;  // canonical order, formatted {x,y,1}
  std::vector<std::string> primes;
  std::vector<std::string> maximals;
  std::vector<std::string> pure_filters;
  std::vector<std::string> spp;
  ClassificationFlags flags;
  /// gelfand, soft, local, max-hausdorff, in that order.
  std::vector<BatteryVerdict> batteries;
  std::map<std::string, std::string> witnesses;
  /// Non-maximal primes p with sigma(p) != D(p).
  std::vector<std::string> observations;

  bool unanimous() const;
  const BatteryVerdict* battery(std::string_view name) const;
  bool operator==(const AnalysisReport&) const = default;
};

/// Runs every battery. EquivalenceViolation from the internal cross-checks
/// propagates; disagreeing batteries are recorded, not thrown.
AnalysisReport analyze(const ResiduatedLattice& a);

/// Deterministic JSON (sorted keys, two-space indent, trailing newline).
std::string report_json(const AnalysisReport& r);
/// Inverse of report_json. Throws ParseError.
AnalysisReport report_from_json(std::string_view text);

}  // namespace reslat
