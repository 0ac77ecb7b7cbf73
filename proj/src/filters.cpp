#include "reslat/filters.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace reslat {

ElementSet generated_filter(const ResiduatedLattice& a, ElementSet x) {
  Element product = a.one();
  for (std::size_t e : x) product = a.mul(product, static_cast<Element>(e));
  const Element stable = power_sequence(a, product).back();
  return a.up(stable);
}

std::string format_set(const ResiduatedLattice& a, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : s) {
    if (!first) out += ',';
    out += a.name_of(static_cast<Element>(x));
    first = false;
  }
  return out + "}";
}

namespace {

bool prime_test(const ResiduatedLattice& a, ElementSet f) {
  if (f == a.carrier()) return false;
  for (Element x = 0; x < a.size(); ++x) {
    if (f.contains(x)) continue;
    for (Element y = x; y < a.size(); ++y) {
      if (!f.contains(y) && f.contains(a.join(x, y))) return false;
    }
  }
  return true;
}

}  // namespace

FilterLattice::FilterLattice(ResiduatedLattice algebra) : algebra_(std::move(algebra)) {
  const auto& a = algebra_;
  principal_.reserve(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    principal_.push_back(generated_filter(a, ElementSet::singleton(x)));
  }
  // Closure of the principal filters under intersection and join.
  std::set<ElementSet> seen(principal_.begin(), principal_.end());
  std::deque<ElementSet> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const ElementSet f = queue.front();
    queue.pop_front();
    const std::vector<ElementSet> snapshot(seen.begin(), seen.end());
    for (ElementSet g : snapshot) {
      for (ElementSet h : {f & g, generated_filter(a, f | g)}) {
        if (seen.insert(h).second) queue.push_back(h);
      }
    }
  }
  filters_.assign(seen.begin(), seen.end());  // std::set orders canonically

  const std::size_t k = filters_.size();
  join_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      join_[i * k + j] = *index_of(generated_filter(a, filters_[i] | filters_[j]));
    }
  }

  for (ElementSet f : filters_) {
    if (prime_test(a, f)) spectrum_.primes.push_back(f);
  }
  for (ElementSet p : spectrum_.primes) {
    const bool maximal = std::none_of(filters_.begin(), filters_.end(), [&](ElementSet g) {
      return g != a.carrier() && g != p && p.subset_of(g);
    });
    if (maximal) spectrum_.maximals.push_back(p);
  }
  for (ElementSet p : spectrum_.primes) {
    // omega of the prime ideal A \ p
    const ElementSet ideal = a.carrier() - p;
    ElementSet d;
    for (Element x = 0; x < a.size(); ++x) {
      for (std::size_t y : ideal) {
        if (a.join(x, static_cast<Element>(y)) == a.one()) {
          d.insert(x);
          break;
        }
      }
    }
    spectrum_.d_parts.push_back(d);
  }
}

std::optional<std::size_t> FilterLattice::index_of(ElementSet f) const {
  auto it = std::lower_bound(filters_.begin(), filters_.end(), f);
  if (it == filters_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - filters_.begin());
}

ElementSet FilterLattice::join(ElementSet f, ElementSet g) const {
  const auto i = index_of(f);
  const auto j = index_of(g);
  if (i && j) return filters_[join_[*i * filters_.size() + *j]];
  return generated_filter(algebra_, f | g);
}

bool FilterLattice::is_prime(ElementSet f) const {
  return std::binary_search(spectrum_.primes.begin(), spectrum_.primes.end(), f);
}

bool FilterLattice::is_maximal(ElementSet f) const {
  return std::binary_search(spectrum_.maximals.begin(), spectrum_.maximals.end(), f);
}

std::optional<std::size_t> FilterLattice::prime_index(ElementSet p) const {
  auto it = std::lower_bound(spectrum_.primes.begin(), spectrum_.primes.end(), p);
  if (it == spectrum_.primes.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - spectrum_.primes.begin());
}

ElementSet FilterLattice::radical_total(ElementSet f) const {
  ElementSet acc = top();
  for (ElementSet m : spectrum_.maximals) {
    if (f.subset_of(m)) acc &= m;
  }
  return acc;
}

std::vector<ElementSet> FilterLattice::maximals_above(ElementSet f) const {
  std::vector<ElementSet> out;
  for (ElementSet m : spectrum_.maximals) {
    if (f.subset_of(m)) out.push_back(m);
  }
  return out;
}

FilterLattice all_filters(const ResiduatedLattice& a) { return FilterLattice(a); }

ElementSet filter_join(const FilterLattice& fl, ElementSet f, ElementSet g) {
  return fl.join(f, g);
}

ElementSet filter_meet(const FilterLattice& fl, ElementSet f, ElementSet g) {
  return fl.meet(f, g);
}

Comaximality is_comaximal(const FilterLattice& fl, ElementSet f, ElementSet g) {
  const auto& a = fl.algebra();
  if (f == a.carrier() || g == a.carrier()) {
    throw ImproperInput("is_comaximal: both filters must be proper");
  }
  Comaximality c;
  c.joins_to_top = fl.join(f, g) == a.carrier();
  for (std::size_t x : f) {
    for (std::size_t y : g) {
      if (a.mul(static_cast<Element>(x), static_cast<Element>(y)) == a.zero()) {
        c.product = std::pair{static_cast<Element>(x), static_cast<Element>(y)};
        break;
      }
    }
    if (c.product) break;
  }
  for (std::size_t x : f) {
    if (g.contains(a.neg(static_cast<Element>(x)))) {
      c.negation = static_cast<Element>(x);
      break;
    }
  }
  if (c.joins_to_top != c.product.has_value() ||
      c.joins_to_top != c.negation.has_value()) {
    throw EquivalenceViolation("comaximality criteria disagree");
  }
  return c;
}

SpectrumSets prime_filters(const FilterLattice& fl) { return fl.spectrum(); }

std::vector<ElementSet> maximal_filters(const FilterLattice& fl) {
  return std::vector<ElementSet>(fl.maximals().begin(), fl.maximals().end());
}

ElementSet radical(const FilterLattice& fl, ElementSet f) {
  if (f == fl.top()) throw ImproperInput("radical: filter must be proper");
  return fl.radical_total(f);
}

bool is_semisimple(const FilterLattice& fl) {
  return fl.radical_total(fl.bottom()) == fl.bottom();
}

bool LocalConditions::unanimous() const {
  return one_maximal == in_is_filter && one_maximal == in_is_proper_filter &&
         one_maximal == in_is_unique_maximal && one_maximal == ni_is_prime;
}

LocalConditions local_conditions(const FilterLattice& fl) {
  const auto& a = fl.algebra();
  const auto cls = classify_elements(a);
  LocalConditions c;
  c.one_maximal = fl.maximals().size() == 1;
  c.in_is_filter = is_filter(a, cls.non_nilpotents);
  c.in_is_proper_filter = c.in_is_filter && cls.non_nilpotents != a.carrier();
  c.in_is_unique_maximal =
      fl.maximals().size() == 1 && fl.maximals()[0] == cls.non_nilpotents;
  c.ni_is_prime = cls.nilpotents != a.carrier();
  for (Element x = 0; x < a.size() && c.ni_is_prime; ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (cls.nilpotents.contains(a.mul(x, y)) && !cls.nilpotents.contains(x) &&
          !cls.nilpotents.contains(y)) {
        c.ni_is_prime = false;
        break;
      }
    }
  }
  return c;
}

bool is_local(const FilterLattice& fl) {
  const auto c = local_conditions(fl);
  if (!c.unanimous()) throw EquivalenceViolation("local-ness conditions disagree");
  return c.one_maximal;
}

ElementSet prime_extension(const FilterLattice& fl, ElementSet f, ElementSet c) {
  const auto& a = fl.algebra();
  if (c.empty()) throw Error("prime_extension: avoided set must be non-empty");
  for (std::size_t x : c) {
    for (std::size_t y : c) {
      if (!c.contains(a.join(static_cast<Element>(x), static_cast<Element>(y)))) {
        throw Error("prime_extension: avoided set is not join-closed");
      }
    }
  }
  if (f.intersects(c)) throw Unsatisfiable("prime_extension: filter meets the avoided set");
  std::vector<ElementSet> candidates;
  for (ElementSet g : fl.filters()) {
    if (f.subset_of(g) && !g.intersects(c)) candidates.push_back(g);
  }
  for (ElementSet g : candidates) {
    const bool maximal = std::none_of(candidates.begin(), candidates.end(), [&](ElementSet h) {
      return h != g && g.subset_of(h);
    });
    if (!maximal) continue;
    if (!fl.is_prime(g)) {
      throw EquivalenceViolation("filter maximal w.r.t. avoiding a join-closed set is not prime");
    }
    return g;
  }
  // `f` itself avoids C when its closure does; unreachable for valid filters.
  throw Unsatisfiable("prime_extension: no filter containing F avoids C");
}

ElementSet coannihilator(const FilterLattice& fl, ElementSet x) {
  ElementSet acc = fl.top();
  for (ElementSet p : fl.primes()) {
    if (!x.subset_of(p)) acc &= p;
  }
  return acc;
}

namespace {

bool closed_under_filter_ops(const FilterLattice& fl, const std::vector<ElementSet>& family) {
  auto in = [&](ElementSet s) {
    return std::binary_search(family.begin(), family.end(), s);
  };
  for (ElementSet f : family) {
    for (ElementSet g : family) {
      if (!in(f & g) || !in(fl.join(f, g))) return false;
    }
  }
  return true;
}

}  // namespace

CoannihilatorFamilies coannihilators(const FilterLattice& fl) {
  const auto& a = fl.algebra();
  CoannihilatorFamilies out;
  // X^perp only depends on d(X) = union of d(x); enumerate those unions.
  std::vector<ElementSet> d_of(a.size());
  std::set<ElementSet> elementwise;
  for (Element x = 0; x < a.size(); ++x) {
    elementwise.insert(coannihilator(fl, ElementSet::singleton(x)));
  }
  // Represent d-sets as bitmasks over prime indices.
  const auto primes = fl.primes();
  std::set<std::uint64_t> unions{0};
  for (Element x = 0; x < a.size(); ++x) {
    std::uint64_t dx = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (!primes[i].contains(x)) dx |= std::uint64_t{1} << i;
    }
    std::vector<std::uint64_t> snapshot(unions.begin(), unions.end());
    for (std::uint64_t u : snapshot) unions.insert(u | dx);
  }
  std::set<ElementSet> all;
  for (std::uint64_t u : unions) {
    ElementSet acc = fl.top();
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if ((u >> i) & 1U) acc &= primes[i];
    }
    all.insert(acc);
  }
  out.all.assign(all.begin(), all.end());
  out.elements.assign(elementwise.begin(), elementwise.end());
  out.baer = closed_under_filter_ops(fl, out.all);
  out.rickart = closed_under_filter_ops(fl, out.elements);
  if (out.rickart) {
    for (ElementSet f : out.elements) {
      const bool complemented = std::any_of(out.elements.begin(), out.elements.end(), [&](ElementSet g) {
        return (f & g) == fl.bottom() && fl.join(f, g) == fl.top();
      });
      if (!complemented) {
        out.rickart = false;
        break;
      }
    }
  }
  return out;
}

bool is_lattice_ideal(const ResiduatedLattice& a, ElementSet s) {
  if (s.empty() || !s.subset_of(a.carrier())) return false;
  for (std::size_t x : s) {
    if (!a.down(static_cast<Element>(x)).subset_of(s)) return false;
    for (std::size_t y : s) {
      if (!s.contains(a.join(static_cast<Element>(x), static_cast<Element>(y)))) return false;
    }
  }
  return true;
}

ElementSet omega_filter(const FilterLattice& fl, ElementSet ideal) {
  const auto& a = fl.algebra();
  if (!is_lattice_ideal(a, ideal)) throw NotAnIdeal("omega_filter: argument is not a lattice ideal");
  ElementSet out;
  for (Element x = 0; x < a.size(); ++x) {
    for (std::size_t y : ideal) {
      if (a.join(x, static_cast<Element>(y)) == a.one()) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

ElementSet d_part(const FilterLattice& fl, ElementSet prime) {
  if (!fl.is_prime(prime)) throw Error("d_part: argument is not a prime filter");
  const ElementSet via_omega = omega_filter(fl, fl.top() - prime);
  ElementSet via_kernel = fl.top();
  for (ElementSet q : fl.primes()) {
    if (q.subset_of(prime)) via_kernel &= q;
  }
  if (via_omega != via_kernel) {
    throw EquivalenceViolation("D-part: omega(A\\p) differs from k(G(p))");
  }
  return via_omega;
}

}  // namespace reslat
