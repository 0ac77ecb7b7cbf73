#include "reslat/gelfand.hpp"

#include <algorithm>
#include <functional>

namespace reslat {

bool GelfandVerdict::group_holds(std::string_view group) const {
  bool seen = false;
  for (const auto& c : criteria) {
    if (c.group != group) continue;
    seen = true;
    if (!c.holds) return false;
  }
  return seen;
}

std::size_t GelfandVerdict::groups_holding() const {
  return static_cast<std::size_t>(std::count_if(
      kGelfandGroups.begin(), kGelfandGroups.end(),
      [&](std::string_view g) { return group_holds(g); }));
}

std::vector<const Criterion*> GelfandVerdict::dissenters() const {
  std::vector<const Criterion*> out;
  for (const auto& c : criteria) {
    if (c.holds != gelfand()) out.push_back(&c);
  }
  return out;
}

namespace {

std::string show(const ResiduatedLattice& a, ElementSet s) { return format_set(a, s); }

std::string show_pair(const ResiduatedLattice& a, const char* l, ElementSet x, const char* r,
                      ElementSet y) {
  return std::string(l) + "=" + show(a, x) + ", " + r + "=" + show(a, y);
}

/// Search m, n along the power sequences for ~a^m v ~b^n in `target`.
bool negated_powers_reach(const ResiduatedLattice& a, Element x, Element y, ElementSet target) {
  for (Element xm : power_sequence(a, x)) {
    for (Element yn : power_sequence(a, y)) {
      if (target.contains(a.join(a.neg(xm), a.neg(yn)))) return true;
    }
  }
  return false;
}

/// First zero-divisor pair (a <= b by index) failing the power search.
std::optional<std::pair<Element, Element>> zero_divisor_failure(const ResiduatedLattice& a,
                                                                ElementSet target) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = x; y < a.size(); ++y) {
      if (a.mul(x, y) != a.zero()) continue;
      if (!negated_powers_reach(a, x, y, target)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

ElementSet d_part_of(const FilterLattice& fl, ElementSet p) {
  return fl.d_part_at(*fl.prime_index(p));
}

/// For all distinct maximals m, n (unordered when `symmetric`).
template <class Pred>
std::optional<std::pair<ElementSet, ElementSet>> first_max_pair_failing(const FilterLattice& fl,
                                                                        bool symmetric,
                                                                        Pred pred) {
  const auto max = fl.maximals();
  for (std::size_t i = 0; i < max.size(); ++i) {
    for (std::size_t j = symmetric ? i + 1 : 0; j < max.size(); ++j) {
      if (i != j && !pred(max[i], max[j])) return std::pair{max[i], max[j]};
    }
  }
  return std::nullopt;
}

Criterion from_pair(std::string group, std::string key, const ResiduatedLattice& a,
                    const std::optional<std::pair<ElementSet, ElementSet>>& fail,
                    const char* l, const char* r) {
  Criterion c{std::move(group), std::move(key), !fail.has_value(), {}};
  if (fail) c.witness = show_pair(a, l, fail->first, r, fail->second);
  return c;
}

/// Normality of a finite bounded lattice of filters given as a list.
bool filter_family_normal(const FilterLattice& fl, const std::vector<ElementSet>& fam,
                          std::string* witness) {
  const std::size_t k = fam.size();
  std::vector<std::uint64_t> comax(k, 0);   // H with H v F = A
  std::vector<std::uint64_t> disjoint(k, 0);  // K with H n K = {1}
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (fl.join(fam[i], fam[j]) == fl.top()) comax[i] |= std::uint64_t{1} << j;
      if ((fam[i] & fam[j]) == fl.bottom()) disjoint[i] |= std::uint64_t{1} << j;
    }
  }
  for (std::size_t f = 0; f < k; ++f) {
    for (std::size_t g = f; g < k; ++g) {
      if (fl.join(fam[f], fam[g]) != fl.top()) continue;
      bool separated = false;
      for (std::size_t h = 0; h < k && !separated; ++h) {
        if (((comax[f] >> h) & 1U) && (disjoint[h] & comax[g]) != 0) separated = true;
      }
      if (!separated) {
        if (witness) *witness = show_pair(fl.algebra(), "F", fam[f], "G", fam[g]);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Criterion is_gelfand_definition(const FilterLattice& fl, std::optional<ElementSet>* prime,
                                std::vector<ElementSet>* maximals) {
  Criterion c{"unique-maximal", "unique-maximal", true, {}};
  for (ElementSet p : fl.primes()) {
    auto above = fl.maximals_above(p);
    if (above.size() == 1) continue;
    c.holds = false;
    c.witness = "prime " + show(fl.algebra(), p) + " under";
    for (ElementSet m : above) c.witness += " " + show(fl.algebra(), m);
    if (prime) *prime = p;
    if (maximals) *maximals = std::move(above);
    break;
  }
  return c;
}

Criterion contessa_check(const FilterLattice& fl, std::optional<std::pair<Element, Element>>* pair) {
  const auto& a = fl.algebra();
  Criterion c{"contessa", "contessa", true, {}};
  if (auto fail = zero_divisor_failure(a, ElementSet::singleton(a.one()))) {
    c.holds = false;
    c.witness = "a=" + a.name_of(fail->first) + ", b=" + a.name_of(fail->second);
    if (pair) *pair = fail;
  }
  return c;
}

Battery pmprop_battery(const FilterLattice& fl) {
  const auto& a = fl.algebra();
  const std::string g = "maximal-filters";
  const ElementSet top = fl.top();
  Battery out;

  out.push_back(from_pair(g, "max-join-separation", a,
                          first_max_pair_failing(fl, true, [&](ElementSet m, ElementSet n) {
                            for (Element x = 0; x < a.size(); ++x) {
                              if (m.contains(x)) continue;
                              for (Element y = 0; y < a.size(); ++y) {
                                if (!n.contains(y) && a.join(x, y) == a.one()) return true;
                              }
                            }
                            return false;
                          }),
                          "m", "n"));

  out.push_back(from_pair(g, "d-part-comaximal", a,
                          first_max_pair_failing(fl, true, [&](ElementSet m, ElementSet n) {
                            return fl.join(d_part_of(fl, m), d_part_of(fl, n)) == top;
                          }),
                          "m", "n"));

  out.push_back(from_pair(g, "d-part-negation", a,
                          first_max_pair_failing(fl, false, [&](ElementSet m, ElementSet n) {
                            const ElementSet dm = d_part_of(fl, m);
                            const ElementSet dn = d_part_of(fl, n);
                            for (std::size_t x : dm) {
                              if (dn.contains(a.neg(static_cast<Element>(x)))) return true;
                            }
                            return false;
                          }),
                          "m", "n"));

  Criterion c{g, "d-part-prime", true, {}};
  for (ElementSet m : fl.maximals()) {
    for (ElementSet p : fl.primes()) {
      if (c.holds && d_part_of(fl, p).subset_of(m) && !p.subset_of(m)) {
        c.holds = false;
        c.witness = show_pair(a, "p", p, "m", m);
      }
    }
  }
  out.push_back(c);

  c = {g, "d-part-filter", true, {}};
  for (ElementSet m : fl.maximals()) {
    for (ElementSet f : fl.filters()) {
      if (c.holds && f != top && d_part_of(fl, m).subset_of(f) && !f.subset_of(m)) {
        c.holds = false;
        c.witness = show_pair(a, "F", f, "m", m);
      }
    }
  }
  out.push_back(c);

  c = {g, "d-part-join", true, {}};
  for (ElementSet m : fl.maximals()) {
    for (ElementSet f : fl.filters()) {
      if (c.holds && f != top && fl.join(f, m) == top && fl.join(f, d_part_of(fl, m)) != top) {
        c.holds = false;
        c.witness = show_pair(a, "F", f, "m", m);
      }
    }
  }
  out.push_back(c);

  c = {g, "d-part-unique-maximal", true, {}};
  for (ElementSet m : fl.maximals()) {
    if (fl.maximals_above(d_part_of(fl, m)).size() != 1) {
      c.holds = false;
      c.witness = "m=" + show(a, m);
      break;
    }
  }
  out.push_back(c);

  c = {g, "d-part-hull", true, {}};
  for (std::size_t i = 0; i < fl.primes().size(); ++i) {
    const ElementSet m = fl.primes()[i];
    if (!fl.is_maximal(m)) continue;
    if (generalization(fl.primes(), PointSet::singleton(i)) != hull(fl.primes(), d_part_of(fl, m))) {
      c.holds = false;
      c.witness = "m=" + show(a, m);
      break;
    }
  }
  out.push_back(c);

  c = {g, "d-part-quotient-local", true, {}};
  for (ElementSet m : fl.maximals()) {
    const FilterLattice q(quotient(a, d_part_of(fl, m)).algebra);
    if (!is_local(q)) {
      c.holds = false;
      c.witness = "m=" + show(a, m);
      break;
    }
  }
  out.push_back(c);

  c = {g, "d-part-element", true, {}};
  for (ElementSet m : fl.maximals()) {
    if (!c.holds) break;
    for (Element x = 0; x < a.size() && c.holds; ++x) {
      if (m.contains(x)) continue;
      bool found = false;
      for (Element xn : power_sequence(a, x)) {
        for (Element y = 0; y < a.size() && !found; ++y) {
          if (!m.contains(y) && a.join(y, a.neg(xn)) == a.one()) found = true;
        }
      }
      if (!found) {
        c.holds = false;
        c.witness = "m=" + show(a, m) + ", x=" + a.name_of(x);
      }
    }
  }
  out.push_back(c);
  return out;
}

Battery nococo_check(const FilterLattice& fl) {
  const std::string g = "normal-filter-lattice";
  Battery out;
  std::vector<ElementSet> all(fl.filters().begin(), fl.filters().end());
  Criterion c{g, "filters-normal", true, {}};
  c.holds = filter_family_normal(fl, all, &c.witness);
  out.push_back(c);

  std::vector<ElementSet> principal;
  for (Element x = 0; x < fl.algebra().size(); ++x) principal.push_back(fl.principal(x));
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()), principal.end());
  c = {g, "principal-filters-normal", true, {}};
  c.holds = filter_family_normal(fl, principal, &c.witness);
  out.push_back(c);
  return out;
}

Battery separation_check(const FilterLattice& fl) {
  const auto& a = fl.algebra();
  const std::string g = "max-separation";
  const SpectrumSpace s = spec_h(fl);
  Battery out;
  out.push_back(from_pair(g, "max-separated", a,
                          first_max_pair_failing(fl, true, [&](ElementSet m, ElementSet n) {
                            return !s.space.minimal_open(*s.index_of(m))
                                        .intersects(s.space.minimal_open(*s.index_of(n)));
                          }),
                          "m", "n"));
  Criterion c{g, "generalization-closed", true, {}};
  for (ElementSet m : fl.maximals()) {
    const PointSet gm = generalization(s.points, PointSet::singleton(*s.index_of(m)));
    if (!s.space.is_closed(gm)) {
      c.holds = false;
      c.witness = "m=" + show(a, m);
      break;
    }
  }
  out.push_back(c);
  return out;
}

RelationClosure relation_closure(const FilterLattice& fl, RelationKind kind) {
  RelationClosure r;
  r.points.assign(fl.primes().begin(), fl.primes().end());
  const std::size_t k = r.points.size();
  r.base.assign(k, PointSet{});
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      const ElementSet x = kind == RelationKind::Join ? r.points[p] : fl.d_part_at(p);
      const ElementSet y = kind == RelationKind::Join ? r.points[q] : fl.d_part_at(q);
      if (fl.join(x, y) != fl.top()) r.base[p].insert(q);
    }
  }
  r.closure = r.base;
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t p = 0; p < k; ++p) {
      if (r.closure[p].contains(m)) r.closure[p] |= r.closure[m];
    }
  }
  r.class_of.assign(k, k);
  for (std::size_t p = 0; p < k; ++p) {
    if (r.class_of[p] != k) continue;
    for (std::size_t q : r.closure[p]) r.class_of[q] = r.classes;
    r.class_of[p] = r.classes;
    ++r.classes;
  }
  return r;
}

bool relation_classes_match(const FilterLattice& fl, const RelationClosure& r) {
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    if (!fl.is_maximal(r.points[i])) continue;
    if (r.closure[i] != generalization(r.points, PointSet::singleton(i))) return false;
  }
  return true;
}

bool quotient_space_homeo(const FilterLattice& fl, RelationKind kind) {
  const RelationClosure r = relation_closure(fl, kind);
  const SpectrumSpace s = spec_h(fl);
  const FiniteSpace q = quotient_space(s.space, r.class_of, r.classes);
  std::vector<std::size_t> eta;
  for (ElementSet m : fl.maximals()) eta.push_back(r.class_of[*s.index_of(m)]);
  return is_homeomorphism(max_h(fl).space, q, eta);
}

RetractionSearch find_retractions(const FiniteSpace& x, PointSet onto, std::size_t limit) {
  RetractionSearch out;
  const FiniteSpace y = subspace(x, onto);
  std::vector<std::size_t> y_index(x.size(), 0);
  {
    std::size_t i = 0;
    for (std::size_t p : onto) y_index[p] = i++;
  }
  std::vector<std::size_t> free_points;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!onto.contains(p)) free_points.push_back(p);
  }
  const std::size_t unset = x.size();
  std::vector<std::size_t> f(x.size(), unset);
  for (std::size_t p : onto) f[p] = p;
  if (onto.empty() && !free_points.empty()) return out;

  // Continuous maps preserve the specialization preorder; prune on it.
  auto consistent = [&](std::size_t p) {
    for (std::size_t q = 0; q < x.size(); ++q) {
      if (f[q] == unset) continue;
      if (x.minimal_open(p).contains(q) && !x.minimal_open(f[p]).contains(f[q])) return false;
      if (x.minimal_open(q).contains(p) && !x.minimal_open(f[q]).contains(f[p])) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (out.found >= limit) return;
    if (i == free_points.size()) {
      std::vector<std::size_t> as_y(x.size());
      for (std::size_t p = 0; p < x.size(); ++p) as_y[p] = y_index[f[p]];
      if (is_continuous(x, y, as_y)) {
        if (!out.first) out.first = f;
        ++out.found;
      }
      return;
    }
    const std::size_t p = free_points[i];
    for (std::size_t m : onto) {
      f[p] = m;
      if (consistent(p)) go(i + 1);
      f[p] = unset;
    }
  };
  go(0);
  return out;
}

Retraction retraction(const FilterLattice& fl) {
  Retraction r;
  const SpectrumSpace s = spec_h(fl);
  const PointSet max = s.set_of(fl.maximals());
  std::vector<ElementSet> map;
  bool total = true;
  for (ElementSet p : s.points) {
    const auto above = fl.maximals_above(p);
    if (above.size() != 1) {
      total = false;
      break;
    }
    map.push_back(above.front());
  }
  if (total) {
    const SpectrumSpace m = max_h(fl);
    std::vector<std::size_t> idx;
    for (ElementSet target : map) idx.push_back(*m.index_of(target));
    r.continuous = is_continuous(s.space, m.space, idx);
    r.map = std::move(map);
  }
  r.retractions = find_retractions(s.space, max).found;
  return r;
}

GelfandVerdict gelfand_verdict(const PureStructure& ps) {
  const auto& fl = ps.filters();
  GelfandVerdict v;
  auto append = [&](Battery b) {
    for (auto& c : b) v.criteria.push_back(std::move(c));
  };
  v.criteria.push_back(is_gelfand_definition(fl, &v.witness_prime, &v.witness_maximals));
  v.criteria.push_back(contessa_check(fl, &v.contessa_pair));
  append(pmprop_battery(fl));
  append(nococo_check(fl));
  append(separation_check(fl));

  const SpectrumSpace s = spec_h(fl);
  const auto found = find_retractions(s.space, s.set_of(fl.maximals()), 1).found;
  v.criteria.push_back({"retract", "max-retract", found > 0, found > 0 ? "" : "no continuous retraction"});
  const bool normal = is_normal(s.space);
  v.criteria.push_back({"spectrum-normal", "spec-normal", normal, normal ? "" : "Spec_h not normal"});

  for (auto [kind, group] : {std::pair{RelationKind::Join, "join-relation"},
                             std::pair{RelationKind::DPart, "d-part-relation"}}) {
    const RelationClosure r = relation_closure(fl, kind);
    const bool classes = relation_classes_match(fl, r);
    v.criteria.push_back({group, std::string(group) + "-classes", classes,
                          classes ? "" : "class of a maximal differs from its generalization"});
    const bool homeo = quotient_space_homeo(fl, kind);
    v.criteria.push_back({group, std::string(group) + "-homeo", homeo,
                          homeo ? "" : "Max_h -> Spec_h/closure not a homeomorphism"});
  }

  const bool coincide = d_topology_coincidence(ps);
  v.criteria.push_back({"d-topology", "d-topology-on-max", coincide,
                        coincide ? "" : "hull-kernel and D-topology differ on Max"});
  const bool spp = spp_max_homeo(ps);
  v.criteria.push_back({"pure-spectrum", "pure-spectrum-homeo", spp,
                        spp ? "" : "Max_h -> Spp not a homeomorphism"});
  append(sigma_battery(ps));
  append(rho_battery(ps));
  v.criteria.push_back(rho_rad_adjunction(ps));
  return v;
}

SoftConditions soft_conditions(const FilterLattice& fl) {
  SoftConditions s;
  const bool semisimple = is_semisimple(fl);
  const ElementSet rad = fl.radical_total(fl.bottom());
  bool unique_over_rad = true;
  for (ElementSet p : fl.primes()) {
    if (rad.subset_of(p) && fl.maximals_above(p).size() != 1) unique_over_rad = false;
  }
  s.definition = semisimple && unique_over_rad;
  s.hausdorff_dense = is_hausdorff(max_h(fl).space) && density_check(fl).max_dense;
  s.gelfand_semisimple = is_gelfand_definition(fl).holds && semisimple;
  return s;
}

bool is_soft(const FilterLattice& fl) {
  const auto s = soft_conditions(fl);
  if (!s.unanimous()) throw EquivalenceViolation("soft conditions disagree");
  return s.definition;
}

Battery hausnorm_battery(const FilterLattice& fl) {
  const auto& a = fl.algebra();
  const std::string g = "max-hausdorff";
  const ElementSet rad = fl.radical_total(fl.bottom());
  std::vector<ElementSet> over_rad;
  for (ElementSet p : fl.primes()) {
    if (rad.subset_of(p)) over_rad.push_back(p);
  }
  const SpectrumSpace hr = build_space(fl, over_rad, SpaceKind::HullKernel);
  Battery out;

  out.push_back({g, "max-hausdorff", is_hausdorff(max_h(fl).space), {}});

  Criterion c{g, "rad-hull-unique-maximal", true, {}};
  for (ElementSet p : over_rad) {
    if (fl.maximals_above(p).size() != 1) {
      c.holds = false;
      c.witness = "p=" + show(a, p);
      break;
    }
  }
  out.push_back(c);

  out.push_back({g, "rad-hull-retract",
                 find_retractions(hr.space, hr.set_of(fl.maximals()), 1).found > 0, {}});
  out.push_back({g, "rad-hull-normal", is_normal(hr.space), {}});

  c = {g, "rad-hull-generalization-closed", true, {}};
  for (ElementSet m : fl.maximals()) {
    const PointSet gm = generalization(hr.points, PointSet::singleton(*hr.index_of(m)));
    if (!hr.space.is_closed(gm)) {
      c.holds = false;
      c.witness = "m=" + show(a, m);
      break;
    }
  }
  out.push_back(c);

  c = {g, "rad-contessa", true, {}};
  if (auto fail = zero_divisor_failure(a, rad)) {
    c.holds = false;
    c.witness = "a=" + a.name_of(fail->first) + ", b=" + a.name_of(fail->second);
  }
  out.push_back(c);
  return out;
}

}  // namespace reslat
