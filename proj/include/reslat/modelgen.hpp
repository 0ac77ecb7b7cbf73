#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/report.hpp"

namespace reslat {

/// Largest carrier the enumerators accept.
inline constexpr std::size_t kMaxEnumerationSize = 8;

/// Bounded lattices on {0..n-1}, one per isomorphism class. Element 0 is
/// the bottom, n-1 the top, and x <= y implies x <= y as integers.
/// The callback returns false to stop early. Throws BoundExceeded.
void for_each_lattice(std::size_t n, const std::function<bool(const BoundedLattice&)>& visit);
std::vector<BoundedLattice> enumerate_lattices(std::size_t n);

/// Order-preserving bijections of a lattice onto itself.
std::vector<std::vector<Element>> lattice_automorphisms(const BoundedLattice& l);

/// Every commutative integral residuated structure on `l`, one per orbit
/// of the lattice automorphisms. Elements are named 0, a, b, ..., 1 and
/// the algebras `prefix`#k.
void for_each_residuated_structure(const BoundedLattice& l, const std::string& prefix,
                                   const std::function<bool(const ResiduatedLattice&)>& visit);
std::vector<ResiduatedLattice> residuated_structures(const BoundedLattice& l,
                                                     const std::string& prefix = "R");

enum class Backbone { Chains, All };

struct EnumerationTask {
  std::size_t min_size = 1;
  std::size_t max_size = 6;
  Backbone backbone = Backbone::All;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// All algebras of the task, sizes ascending; names are n<size>.l<lattice>#<k>.
std::vector<ResiduatedLattice> enumerate_algebras(const EnumerationTask& task);

struct ClassificationCounts {
  std::size_t models = 0;
  std::size_t gelfand = 0;
  std::size_t soft = 0;
  std::size_t local = 0;
  std::size_t semisimple = 0;
  std::size_t rickart = 0;
  std::size_t baer = 0;
  std::size_t prelinear = 0;
  std::size_t prelinear_not_gelfand = 0;
};

struct Classification {
  std::vector<AnalysisReport> reports;  // sorted by (size, name)
  ClassificationCounts counts;
};

/// Analyzes every enumerated model in parallel. A model whose batteries
/// disagree, or whose cross-checks throw, aborts the run with an
/// EquivalenceViolation carrying the model in the text format.
Classification classify_all(const EnumerationTask& task);

ClassificationCounts count_flags(const std::vector<AnalysisReport>& reports);

}  // namespace reslat
