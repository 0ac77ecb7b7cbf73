#include "reslat/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace reslat {

const char* to_string(ValidationError::Kind kind) {
  switch (kind) {
    case ValidationError::Kind::Malformed: return "Malformed";
    case ValidationError::Kind::NotALattice: return "NotALattice";
    case ValidationError::Kind::NotCommutativeMonoid: return "NotCommutativeMonoid";
    case ValidationError::Kind::AdjunctionFails: return "AdjunctionFails";
    case ValidationError::Kind::ResiduumMismatch: return "ResiduumMismatch";
    case ValidationError::Kind::NoResiduum: return "NoResiduum";
    case ValidationError::Kind::SizeOverflow: return "SizeOverflow";
  }
  return "?";
}

std::size_t carrier_bound() {
  const char* env = std::getenv("RESLAT_MAX_SIZE");
  if (env == nullptr) return kMaxCarrier;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v == 0 || v > kMaxCarrier) return kMaxCarrier;
  return static_cast<std::size_t>(v);
}

namespace {

ValidationError lattice_error(std::vector<std::size_t> witness,
                              const std::string& what) {
  return ValidationError(ValidationError::Kind::NotALattice, std::move(witness),
                         "not a lattice: " + what);
}

}  // namespace

// ---------------------------------------------------------------------------
// BoundedLattice

BoundedLattice BoundedLattice::from_order(std::size_t n, std::span<const char> leq) {
  if (n == 0 || n > kMaxCarrier) {
    throw ValidationError(ValidationError::Kind::Malformed, {},
                          "carrier size must be in 1..64");
  }
  if (leq.size() != n * n) {
    throw ValidationError(ValidationError::Kind::Malformed, {},
                          "order matrix must be n x n");
  }
  auto le = [&](std::size_t x, std::size_t y) { return leq[x * n + y] != 0; };
  for (std::size_t x = 0; x < n; ++x) {
    if (!le(x, x)) throw lattice_error({x}, "order is not reflexive");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && le(x, y) && le(y, x)) {
        throw lattice_error({x, y}, "order is not antisymmetric");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!le(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (le(y, z) && !le(x, z)) {
          throw lattice_error({x, y, z}, "order is not transitive");
        }
      }
    }
  }

  BoundedLattice l;
  l.n_ = n;
  l.up_.assign(n, ElementSet{});
  l.down_.assign(n, ElementSet{});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (le(x, y)) {
        l.up_[x].insert(y);
        l.down_[y].insert(x);
      }
    }
  }
  const ElementSet all = ElementSet::full(n);
  bool have_bottom = false;
  bool have_top = false;
  for (std::size_t x = 0; x < n; ++x) {
    if (l.up_[x] == all) {
      l.bottom_ = static_cast<Element>(x);
      have_bottom = true;
    }
    if (l.down_[x] == all) {
      l.top_ = static_cast<Element>(x);
      have_top = true;
    }
  }
  if (!have_bottom) throw lattice_error({}, "no least element");
  if (!have_top) throw lattice_error({}, "no greatest element");

  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ElementSet ub = l.up_[x] & l.up_[y];
      const ElementSet lb = l.down_[x] & l.down_[y];
      bool found_join = false;
      for (std::size_t z : ub) {
        if (ub.subset_of(l.up_[z])) {
          l.join_[x * n + y] = static_cast<Element>(z);
          found_join = true;
          break;
        }
      }
      if (!found_join) throw lattice_error({x, y}, "pair has no least upper bound");
      bool found_meet = false;
      for (std::size_t z : lb) {
        if (lb.subset_of(l.down_[z])) {
          l.meet_[x * n + y] = static_cast<Element>(z);
          found_meet = true;
          break;
        }
      }
      if (!found_meet) throw lattice_error({x, y}, "pair has no greatest lower bound");
    }
  }
  return l;
}

BoundedLattice BoundedLattice::from_covers(
    std::size_t n, std::span<const std::pair<Element, Element>> covers) {
  if (n == 0 || n > kMaxCarrier) {
    throw ValidationError(ValidationError::Kind::Malformed, {},
                          "carrier size must be in 1..64");
  }
  std::vector<char> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) leq[x * n + x] = 1;
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) {
      throw ValidationError(ValidationError::Kind::Malformed, {},
                            "covering pair refers to an unknown element");
    }
    leq[lo * n + hi] = 1;
  }
  // Warshall closure
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (leq[i * n + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j] != 0) leq[i * n + j] = 1;
      }
    }
  }
  return from_order(n, leq);
}

std::vector<std::pair<Element, Element>> BoundedLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < n_; ++x) {
    const ElementSet above = up_[x] - ElementSet::singleton(x);
    for (std::size_t y : above) {
      // y covers x iff nothing of `above` lies strictly below y
      const ElementSet between = above & down_[y];
      if (between == ElementSet::singleton(y)) {
        out.emplace_back(x, static_cast<Element>(y));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ResiduatedLattice

std::optional<Element> ResiduatedLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Element>(i);
  }
  return std::nullopt;
}

ElementSet ResiduatedLattice::up_closure(ElementSet s) const {
  ElementSet out;
  for (std::size_t x : s) out |= up(static_cast<Element>(x));
  return out;
}

std::vector<Element> derive_residuum(const BoundedLattice& lattice,
                                     std::span<const Element> mul) {
  const std::size_t n = lattice.size();
  std::vector<Element> res(n * n, lattice.bottom());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element acc = lattice.bottom();
      for (Element z = 0; z < n; ++z) {
        if (lattice.leq(mul[x * n + z], y)) acc = lattice.join(acc, z);
      }
      res[x * n + y] = acc;
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const bool lhs = lattice.leq(mul[x * n + z], y);
        const bool rhs = lattice.leq(z, res[x * n + y]);
        if (lhs != rhs) {
          throw ValidationError(ValidationError::Kind::NoResiduum, {x, y},
                                "no residuum: join of {z : x*z <= y} is not adjoint");
        }
      }
    }
  }
  return res;
}

std::variant<ResiduatedLattice, ValidationError> try_validate(const RawTables& raw,
                                                              std::size_t bound) {
  using Kind = ValidationError::Kind;
  const std::size_t n = raw.names.size();
  if (n == 0) return ValidationError(Kind::Malformed, {}, "empty carrier");
  if (n > std::min(bound, kMaxCarrier)) {
    return ValidationError(Kind::SizeOverflow, {},
                           "carrier of " + std::to_string(n) +
                               " elements exceeds the bound of " +
                               std::to_string(std::min(bound, kMaxCarrier)));
  }
  {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (raw.names[i].empty()) {
        return ValidationError(Kind::Malformed, {i}, "empty element name");
      }
      if (!seen.insert(raw.names[i]).second) {
        return ValidationError(Kind::Malformed, {i},
                               "duplicate element name '" + raw.names[i] + "'");
      }
    }
  }
  if (raw.mul.size() != n * n) {
    return ValidationError(Kind::Malformed, {}, "product table must be n x n");
  }
  for (std::size_t i = 0; i < raw.mul.size(); ++i) {
    if (raw.mul[i] >= n) {
      return ValidationError(Kind::Malformed, {i / n, i % n},
                             "product table entry out of range");
    }
  }
  if (raw.res && raw.res->size() != n * n) {
    return ValidationError(Kind::Malformed, {}, "residuum table must be n x n");
  }

  ResiduatedLattice a;
  try {
    a.lattice_ = raw.leq.empty() ? BoundedLattice::from_covers(n, raw.covers)
                                 : BoundedLattice::from_order(n, raw.leq);
  } catch (const ValidationError& e) {
    return e;
  }
  a.name_ = raw.name;
  a.names_ = raw.names;
  a.mul_ = raw.mul;
  const auto& l = a.lattice_;
  auto mul = [&](std::size_t x, std::size_t y) { return raw.mul[x * n + y]; };

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (mul(x, y) != mul(y, x)) {
        return ValidationError(Kind::NotCommutativeMonoid, {x, y},
                               "product is not commutative at (" + raw.names[x] +
                                   ", " + raw.names[y] + ")");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (mul(l.top(), x) != x) {
      return ValidationError(Kind::NotCommutativeMonoid, {x},
                             "top element is not a unit for " + raw.names[x]);
    }
  }

  // Residuum candidate, then the adjunction scan for the first bad triple.
  std::vector<Element> res(n * n, l.bottom());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element acc = l.bottom();
      for (Element z = 0; z < n; ++z) {
        if (l.leq(mul(x, z), y)) acc = l.join(acc, z);
      }
      res[x * n + y] = acc;
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (l.leq(mul(x, z), y) != l.leq(z, res[x * n + y])) {
          return ValidationError(Kind::AdjunctionFails, {x, y, z},
                                 "adjunction fails at (x,y,z) = (" + raw.names[x] +
                                     ", " + raw.names[y] + ", " + raw.names[z] + ")");
        }
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          return ValidationError(Kind::NotCommutativeMonoid, {x, y, z},
                                 "product is not associative at (" + raw.names[x] +
                                     ", " + raw.names[y] + ", " + raw.names[z] + ")");
        }
      }
    }
  }

  if (raw.res) {
    for (std::size_t i = 0; i < n * n; ++i) {
      if ((*raw.res)[i] != res[i]) {
        const std::size_t x = i / n;
        const std::size_t y = i % n;
        return ValidationError(Kind::ResiduumMismatch, {x, y},
                               "supplied residuum differs at (" + raw.names[x] +
                                   ", " + raw.names[y] + ")");
      }
    }
  }
  a.res_ = std::move(res);
  return a;
}

ResiduatedLattice validate(const RawTables& raw, std::size_t bound) {
  auto result = try_validate(raw, bound);
  if (auto* err = std::get_if<ValidationError>(&result)) throw *err;
  return std::get<ResiduatedLattice>(std::move(result));
}

RawTables to_raw(const ResiduatedLattice& a) {
  RawTables raw;
  raw.name = a.name();
  raw.names.assign(a.names().begin(), a.names().end());
  raw.covers = a.lattice().covers();
  raw.mul.assign(a.mul_table().begin(), a.mul_table().end());
  raw.res = std::vector<Element>(a.res_table().begin(), a.res_table().end());
  return raw;
}

// ---------------------------------------------------------------------------
// Element-level operations

Element negation(const ResiduatedLattice& a, Element x) { return a.neg(x); }

Element power(const ResiduatedLattice& a, Element x, unsigned n) {
  if (n == 0) throw Error("power: exponent must be at least 1");
  Element acc = x;
  for (unsigned i = 1; i < n; ++i) acc = a.mul(acc, x);
  return acc;
}

std::vector<Element> power_sequence(const ResiduatedLattice& a, Element x) {
  std::vector<Element> seq{x};
  for (;;) {
    const Element next = a.mul(seq.back(), x);
    if (std::find(seq.begin(), seq.end(), next) != seq.end()) break;
    seq.push_back(next);
  }
  return seq;
}

ElementClassification classify_elements(const ResiduatedLattice& a) {
  ElementClassification c;
  c.nilpotence_order.assign(a.size(), std::nullopt);
  for (Element x = 0; x < a.size(); ++x) {
    if (a.mul(x, x) == x) c.idempotents.insert(x);
    const auto seq = power_sequence(a, x);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (seq[k] == a.zero()) {
        c.nilpotence_order[x] = static_cast<unsigned>(k + 1);
        c.nilpotents.insert(x);
        break;
      }
    }
    if (a.mul(x, x) == x && a.join(x, a.neg(x)) == a.one()) {
      c.boolean_center.insert(x);
    }
  }
  c.non_nilpotents = a.carrier() - c.nilpotents;
  return c;
}

bool is_filter(const ResiduatedLattice& a, ElementSet s) {
  if (!s.subset_of(a.carrier()) || !s.contains(a.one())) return false;
  for (std::size_t x : s) {
    if (!a.up(static_cast<Element>(x)).subset_of(s)) return false;
    for (std::size_t y : s) {
      if (!s.contains(a.mul(static_cast<Element>(x), static_cast<Element>(y)))) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

ResiduatedLattice direct_product(std::span<const ResiduatedLattice> factors,
                                 std::size_t bound) {
  if (factors.empty()) throw Error("direct_product: need at least one factor");
  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= f.size();
    if (total > std::min(bound, kMaxCarrier)) {
      throw ValidationError(ValidationError::Kind::SizeOverflow, {},
                            "direct product exceeds the carrier bound of " +
                                std::to_string(std::min(bound, kMaxCarrier)));
    }
  }
  const std::size_t k = factors.size();
  // coords[i][j]: component j of product element i
  std::vector<std::vector<Element>> coords(total, std::vector<Element>(k));
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rest = i;
    for (std::size_t j = k; j-- > 0;) {
      coords[i][j] = static_cast<Element>(rest % factors[j].size());
      rest /= factors[j].size();
    }
  }
  auto encode = [&](const std::vector<Element>& c) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < k; ++j) idx = idx * factors[j].size() + c[j];
    return static_cast<Element>(idx);
  };

  RawTables raw;
  for (std::size_t j = 0; j < k; ++j) {
    raw.name += (j == 0 ? "" : "x") + factors[j].name();
  }
  raw.names.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::string nm = "(";
    for (std::size_t j = 0; j < k; ++j) {
      if (j != 0) nm += ",";
      nm += factors[j].name_of(coords[i][j]);
    }
    raw.names.push_back(nm + ")");
  }
  raw.leq.assign(total * total, 0);
  raw.mul.assign(total * total, 0);
  std::vector<Element> res(total * total, 0);
  std::vector<Element> tmp(k);
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t y = 0; y < total; ++y) {
      bool le = true;
      for (std::size_t j = 0; j < k; ++j) {
        le = le && factors[j].leq(coords[x][j], coords[y][j]);
      }
      raw.leq[x * total + y] = le ? 1 : 0;
      for (std::size_t j = 0; j < k; ++j) tmp[j] = factors[j].mul(coords[x][j], coords[y][j]);
      raw.mul[x * total + y] = encode(tmp);
      for (std::size_t j = 0; j < k; ++j) tmp[j] = factors[j].res(coords[x][j], coords[y][j]);
      res[x * total + y] = encode(tmp);
    }
  }
  raw.res = std::move(res);
  return validate(raw, bound);
}

Quotient quotient(const ResiduatedLattice& a, ElementSet filter) {
  if (!is_filter(a, filter)) throw Error("quotient: argument is not a filter");
  const std::size_t n = a.size();
  auto equiv = [&](Element x, Element y) {
    return filter.contains(a.res(x, y)) && filter.contains(a.res(y, x));
  };
  std::vector<Element> cls(n, 0);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (equiv(x, reps[c])) {
        cls[x] = static_cast<Element>(c);
        placed = true;
        break;
      }
    }
    if (!placed) {
      cls[x] = static_cast<Element>(reps.size());
      reps.push_back(x);
    }
  }
  // The congruence must respect every operation.
  for (Element x = 0; x < n; ++x) {
    for (Element x2 = 0; x2 < n; ++x2) {
      if (cls[x] != cls[x2]) continue;
      for (Element y = 0; y < n; ++y) {
        for (Element y2 = 0; y2 < n; ++y2) {
          if (cls[y] != cls[y2]) continue;
          if (cls[a.join(x, y)] != cls[a.join(x2, y2)] ||
              cls[a.meet(x, y)] != cls[a.meet(x2, y2)] ||
              cls[a.mul(x, y)] != cls[a.mul(x2, y2)] ||
              cls[a.res(x, y)] != cls[a.res(x2, y2)]) {
            throw Error("quotient: filter relation is not a congruence");
          }
        }
      }
    }
  }
  const std::size_t m = reps.size();
  RawTables raw;
  raw.name = a.name() + "/F";
  for (Element r : reps) raw.names.push_back("[" + a.name_of(r) + "]");
  raw.leq.assign(m * m, 0);
  raw.mul.assign(m * m, 0);
  std::vector<Element> res(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      raw.leq[i * m + j] = filter.contains(a.res(reps[i], reps[j])) ? 1 : 0;
      raw.mul[i * m + j] = cls[a.mul(reps[i], reps[j])];
      res[i * m + j] = cls[a.res(reps[i], reps[j])];
    }
  }
  raw.res = std::move(res);
  return Quotient{validate(raw), std::move(cls)};
}

bool is_homomorphism(const ResiduatedLattice& from, const ResiduatedLattice& to,
                     std::span<const Element> map) {
  if (map.size() != from.size()) return false;
  for (Element v : map) {
    if (v >= to.size()) return false;
  }
  if (map[from.zero()] != to.zero() || map[from.one()] != to.one()) return false;
  for (Element x = 0; x < from.size(); ++x) {
    for (Element y = 0; y < from.size(); ++y) {
      if (map[from.join(x, y)] != to.join(map[x], map[y]) ||
          map[from.meet(x, y)] != to.meet(map[x], map[y]) ||
          map[from.mul(x, y)] != to.mul(map[x], map[y]) ||
          map[from.res(x, y)] != to.res(map[x], map[y])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

struct Invariant {
  std::size_t up = 0;
  std::size_t down = 0;
  bool idempotent = false;
  std::size_t powers = 0;
  auto operator<=>(const Invariant&) const = default;
};

Invariant invariant_of(const ResiduatedLattice& a, Element x) {
  return Invariant{a.up(x).size(), a.down(x).size(), a.mul(x, x) == x,
                   power_sequence(a, x).size()};
}

bool extend(const ResiduatedLattice& a, const ResiduatedLattice& b,
            const std::vector<Invariant>& inv_a, const std::vector<Invariant>& inv_b,
            std::vector<Element>& map, std::vector<char>& used, Element x) {
  const std::size_t n = a.size();
  if (x == n) return is_homomorphism(a, b, map);
  for (Element t = 0; t < n; ++t) {
    if (used[t] != 0 || inv_a[x] != inv_b[t]) continue;
    bool ok = true;
    for (Element y = 0; y < x && ok; ++y) {
      ok = a.leq(x, y) == b.leq(t, map[y]) && a.leq(y, x) == b.leq(map[y], t);
      // products whose value is already mapped
      const Element p = a.mul(x, y);
      if (ok && p < x) ok = map[p] == b.mul(t, map[y]);
    }
    if (ok) {
      const Element sq = a.mul(x, x);
      if (sq < x) ok = map[sq] == b.mul(t, t);
    }
    if (!ok) continue;
    map[x] = t;
    used[t] = 1;
    if (extend(a, b, inv_a, inv_b, map, used, x + 1)) return true;
    used[t] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const ResiduatedLattice& a,
                                                     const ResiduatedLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<Invariant> inv_a(n);
  std::vector<Invariant> inv_b(n);
  for (Element x = 0; x < n; ++x) {
    inv_a[x] = invariant_of(a, x);
    inv_b[x] = invariant_of(b, x);
  }
  {
    auto sa = inv_a;
    auto sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<Element> map(n, 0);
  std::vector<char> used(n, 0);
  if (extend(a, b, inv_a, inv_b, map, used, 0)) return map;
  return std::nullopt;
}

bool is_prelinear(const ResiduatedLattice& a) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.join(a.res(x, y), a.res(y, x)) != a.one()) return false;
    }
  }
  return true;
}

}  // namespace reslat
