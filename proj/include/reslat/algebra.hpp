#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "reslat/bitset.hpp"
#include "reslat/errors.hpp"

namespace reslat {

/// Dense element index, 0..n-1.
using Element = std::uint32_t;

/// Largest carrier any algebra may have (capacity of ElementSet).
inline constexpr std::size_t kMaxCarrier = ElementSet::kCapacity;

/// Carrier bound applied by validate/direct_product.
///
/// Defaults to 64; the RESLAT_MAX_SIZE environment variable lowers it.
/// Values above 64 or unparsable values are ignored.
std::size_t carrier_bound();

/// Unvalidated input: element names, an order, and the monoid table.
///
/// Tables are row-major n*n. The order is taken from `leq` when it is
/// non-empty, otherwise from `covers` (pairs lower < upper).
struct RawTables {
  std::string name;
  std::vector<std::string> names;
  std::vector<std::pair<Element, Element>> covers;
  std::vector<char> leq;
  std::vector<Element> mul;
  std::optional<std::vector<Element>> res;
};

/// A finite bounded lattice, given by its order; join and meet are derived.
class BoundedLattice {
 public:
  /// Throws ValidationError (NotALattice / Malformed) with a witness.
  static BoundedLattice from_order(std::size_t n, std::span<const char> leq);
  static BoundedLattice from_covers(
      std::size_t n, std::span<const std::pair<Element, Element>> covers);

  std::size_t size() const noexcept { return n_; }
  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  Element join(Element x, Element y) const { return join_[x * n_ + y]; }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  /// {y : x <= y}
  ElementSet up(Element x) const { return up_[x]; }
  /// {y : y <= x}
  ElementSet down(Element x) const { return down_[x]; }
  /// Covering pairs (x, y), x < y with nothing strictly between, sorted.
  std::vector<std::pair<Element, Element>> covers() const;

  bool operator==(const BoundedLattice&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// A validated finite (commutative, integral) residuated lattice.
///
/// Immutable once built; obtain one through `validate`.
class ResiduatedLattice {
 public:
  const std::string& name() const noexcept { return name_; }
  std::span<const std::string> names() const noexcept { return names_; }
  const std::string& name_of(Element x) const { return names_[x]; }
  std::optional<Element> find(std::string_view name) const;

  std::size_t size() const noexcept { return lattice_.size(); }
  const BoundedLattice& lattice() const noexcept { return lattice_; }
  ElementSet carrier() const { return ElementSet::full(size()); }

  Element zero() const noexcept { return lattice_.bottom(); }
  Element one() const noexcept { return lattice_.top(); }
  bool leq(Element x, Element y) const { return lattice_.leq(x, y); }
  Element join(Element x, Element y) const { return lattice_.join(x, y); }
  Element meet(Element x, Element y) const { return lattice_.meet(x, y); }
  Element mul(Element x, Element y) const { return mul_[x * size() + y]; }
  Element res(Element x, Element y) const { return res_[x * size() + y]; }
  /// x -> 0
  Element neg(Element x) const { return res(x, zero()); }
  ElementSet up(Element x) const { return lattice_.up(x); }
  ElementSet down(Element x) const { return lattice_.down(x); }
  /// Upward closure of a set of elements.
  ElementSet up_closure(ElementSet s) const;

  std::span<const Element> mul_table() const noexcept { return mul_; }
  std::span<const Element> res_table() const noexcept { return res_; }

  /// Same name list, order, and operations.
  bool operator==(const ResiduatedLattice&) const = default;

 private:
  friend std::variant<ResiduatedLattice, ValidationError> try_validate(
      const RawTables& raw, std::size_t bound);

  ResiduatedLattice() = default;

  std::string name_;
  std::vector<std::string> names_;
  BoundedLattice lattice_;
  std::vector<Element> mul_;
  std::vector<Element> res_;
};

/// Validates raw tables. Checks, in order: shape, lattice order and lub/glb,
/// commutativity and unit, adjunction with the derived residuum,
/// associativity, and (when supplied) agreement of the residuum table.
std::variant<ResiduatedLattice, ValidationError> try_validate(
    const RawTables& raw, std::size_t bound = carrier_bound());

/// Throwing form of try_validate.
ResiduatedLattice validate(const RawTables& raw,
                           std::size_t bound = carrier_bound());

/// The raw tables of a validated algebra (order as covers, residuum included).
RawTables to_raw(const ResiduatedLattice& a);

/// res[x][y] = join{z : x*z <= y}. Throws ValidationError(NoResiduum) when
/// the constructed table is not adjoint to `mul`.
std::vector<Element> derive_residuum(const BoundedLattice& lattice,
                                     std::span<const Element> mul);

/// x -> 0.
Element negation(const ResiduatedLattice& a, Element x);
/// x^n for n >= 1.
Element power(const ResiduatedLattice& a, Element x, unsigned n);
/// x^1, x^2, ... up to (excluding) the first repeated value. Powers form a
/// descending chain, so the last entry is the idempotent x^k = x^(k+1).
std::vector<Element> power_sequence(const ResiduatedLattice& a, Element x);

struct ElementClassification {
  ElementSet idempotents;
  ElementSet nilpotents;      // ni(A)
  ElementSet non_nilpotents;  // in(A) = A \ ni(A)
  ElementSet boolean_center;  // {e : e*e = e, e v ~e = 1}
  /// Least n with x^n = 0, for nilpotent x.
  std::vector<std::optional<unsigned>> nilpotence_order;
};

ElementClassification classify_elements(const ResiduatedLattice& a);

/// True iff `s` contains 1 and is closed under products and under joins
/// with arbitrary elements.
bool is_filter(const ResiduatedLattice& a, ElementSet s);

/// Componentwise product. Elements are ordered lexicographically with the
/// first factor most significant; names are "(x,y,...)".
ResiduatedLattice direct_product(std::span<const ResiduatedLattice> factors,
                                 std::size_t bound = carrier_bound());

/// Quotient by the filter congruence x ~ y  <=>  x->y, y->x in F.
struct Quotient {
  ResiduatedLattice algebra;
  /// Element of `A` -> its class in `algebra`.
  std::vector<Element> projection;
};

/// Throws Error when `filter` is not a filter of `a`.
Quotient quotient(const ResiduatedLattice& a, ElementSet filter);

/// True iff `map` preserves 0, 1, join, meet, product and residuum.
bool is_homomorphism(const ResiduatedLattice& from, const ResiduatedLattice& to,
                     std::span<const Element> map);

/// Bijection preserving order and all operations, if any.
std::optional<std::vector<Element>> find_isomorphism(
    const ResiduatedLattice& a, const ResiduatedLattice& b);

/// Prelinearity: (x->y) v (y->x) = 1 for all x, y.
bool is_prelinear(const ResiduatedLattice& a);

}  // namespace reslat
