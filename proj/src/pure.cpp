#include "reslat/pure.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace reslat {

PureStructure::PureStructure(const FilterLattice& fl) : fl_(&fl) {
  const auto primes = fl.primes();
  const ElementSet top = fl.top();

  std::vector<ElementSet> perp(fl.algebra().size());
  for (Element x = 0; x < perp.size(); ++x) perp[x] = coannihilator(fl, ElementSet::singleton(x));

  for (ElementSet f : fl.filters()) {
    const PointSet g = generalization(primes, hull(primes, f));
    const ElementSet s = kernel(primes, g, top);
    ElementSet alt;
    for (Element x = 0; x < perp.size(); ++x) {
      if (fl.join(f, perp[x]) == top) alt.insert(x);
    }
    if (s != alt) {
      throw EquivalenceViolation("sigma(" + format_set(fl.algebra(), f) +
                                 "): k(G(h(F))) differs from {a : F v a^perp = A}");
    }
    sigma_.push_back(s);
    sigma_alt_.push_back(alt);
  }

  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (sigma_[i] == fl.filters()[i]) pure_.push_back(fl.filters()[i]);
  }
  for (ElementSet f : fl.filters()) {
    ElementSet acc = fl.bottom();
    for (ElementSet g : pure_) {
      if (g.subset_of(f)) acc = fl.join(acc, g);
    }
    rho_.push_back(acc);
  }

  for (ElementSet p : pure_) {
    if (p == top) continue;
    const bool maximal = std::none_of(pure_.begin(), pure_.end(), [&](ElementSet q) {
      return q != top && q != p && p.subset_of(q);
    });
    if (maximal) purely_maximal_.push_back(p);
    bool prime = true;
    for (ElementSet f1 : pure_) {
      for (ElementSet f2 : pure_) {
        if ((f1 & f2).subset_of(p) && !f1.subset_of(p) && !f2.subset_of(p)) prime = false;
      }
    }
    if (prime) spp_.push_back(p);
  }

  std::vector<PointSet> opens;
  for (ElementSet f : pure_) opens.push_back(co_hull(spp_, f));
  pure_spectrum_.points = spp_;
  pure_spectrum_.space = FiniteSpace::from_open_subbasis(spp_.size(), opens, SpaceKind::Pure);
  d_topology_ = build_space(fl, primes, SpaceKind::DTopology, pure_);
}

std::size_t PureStructure::index(ElementSet f) const {
  const auto i = fl_->index_of(f);
  if (!i) throw Error("pure: " + format_set(fl_->algebra(), f) + " is not a filter");
  return *i;
}

ElementSet PureStructure::sigma(ElementSet f) const { return sigma_[index(f)]; }

ElementSet PureStructure::sigma_via_coannihilators(ElementSet f) const {
  return sigma_alt_[index(f)];
}

ElementSet PureStructure::rho(ElementSet f) const { return rho_[index(f)]; }

bool PureStructure::is_pure(ElementSet f) const {
  return std::binary_search(pure_.begin(), pure_.end(), f);
}

PurePartMap pure_part_map(const PureStructure& ps) {
  const auto& fl = ps.filters();
  const auto primes = fl.primes();
  const auto spp = ps.spp();
  PurePartMap m;
  m.lands_in_spp = true;
  std::vector<std::size_t> index;
  for (ElementSet p : primes) {
    const ElementSet r = ps.rho(p);
    m.images.push_back(r);
    auto it = std::find(spp.begin(), spp.end(), r);
    if (it == spp.end()) {
      m.lands_in_spp = false;
    } else {
      index.push_back(static_cast<std::size_t>(it - spp.begin()));
    }
  }
  m.preimages_match = true;
  for (ElementSet f : ps.pure_filters()) {
    PointSet pre;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (!f.subset_of(m.images[i])) pre.insert(i);
    }
    if (pre != co_hull(primes, f)) m.preimages_match = false;
  }
  if (m.lands_in_spp) {
    m.continuous = is_continuous(spec_h(fl).space, ps.pure_spectrum().space, index);
  }
  return m;
}

bool spp_max_homeo(const PureStructure& ps) {
  const auto& fl = ps.filters();
  const auto spp = ps.spp();
  std::vector<std::size_t> index;
  for (ElementSet m : fl.maximals()) {
    auto it = std::find(spp.begin(), spp.end(), ps.rho(m));
    if (it == spp.end()) return false;
    index.push_back(static_cast<std::size_t>(it - spp.begin()));
  }
  return is_homeomorphism(max_h(fl).space, ps.pure_spectrum().space, index);
}

bool d_topology_coincidence(const PureStructure& ps) {
  const auto& fl = ps.filters();
  const SpectrumSpace h = spec_h(fl);
  const PointSet max = h.set_of(fl.maximals());
  return subspace(h.space, max) == subspace(ps.d_topology().space, max);
}

PureCharacterization pure_characterization(const PureStructure& ps) {
  const auto& fl = ps.filters();
  const auto primes = fl.primes();
  const auto maximals = fl.maximals();
  auto meet_of_d_parts = [&](auto&& keep) {
    ElementSet acc = fl.top();
    for (ElementSet m : maximals) {
      if (keep(m)) acc &= fl.d_part_at(*fl.prime_index(m));
    }
    return acc;
  };

  PureCharacterization c;
  c.intersection_of_d_parts = std::all_of(
      ps.pure_filters().begin(), ps.pure_filters().end(), [&](ElementSet f) {
        return meet_of_d_parts([&](ElementSet m) { return f.subset_of(m); }) == f;
      });

  // Closed sets of Spec_h are the hulls h(F).
  std::set<ElementSet> generated;
  for (ElementSet f : fl.filters()) {
    const PointSet closed = hull(primes, f);
    generated.insert(meet_of_d_parts([&](ElementSet m) {
      return closed.contains(*fl.prime_index(m));
    }));
  }
  c.closed_set_form = std::vector<ElementSet>(generated.begin(), generated.end()) ==
                      std::vector<ElementSet>(ps.pure_filters().begin(), ps.pure_filters().end());
  return c;
}

namespace {

std::string pair_witness(const ResiduatedLattice& a, const char* l, ElementSet x, const char* r,
                         ElementSet y) {
  return std::string(l) + "=" + format_set(a, x) + ", " + r + "=" + format_set(a, y);
}

/// Shared shape of the sigma and rho batteries.
Battery operator_battery(const PureStructure& ps, const std::string& group, const std::string& op,
                         const std::function<ElementSet(ElementSet)>& t) {
  const auto& fl = ps.filters();
  const auto& a = fl.algebra();
  const auto filters = fl.filters();
  const auto maximals = fl.maximals();
  Battery out;

  Criterion c{group, op + "-max", true, {}};
  for (ElementSet f : filters) {
    for (ElementSet m : maximals) {
      if (c.holds && t(f).subset_of(m) && !f.subset_of(m)) {
        c.holds = false;
        c.witness = pair_witness(a, "F", f, "m", m);
      }
    }
  }
  out.push_back(c);

  c = {group, op + "-hull", true, {}};
  for (ElementSet f : filters) {
    if (!c.holds) break;
    for (ElementSet m : maximals) {
      if (f.subset_of(m) != t(f).subset_of(m)) {
        c.holds = false;
        c.witness = pair_witness(a, "F", f, "m", m);
        break;
      }
    }
  }
  out.push_back(c);

  c = {group, op + "-radical", true, {}};
  for (ElementSet f : filters) {
    if (fl.radical_total(f) != fl.radical_total(t(f))) {
      c.holds = false;
      c.witness = "F=" + format_set(a, f);
      break;
    }
  }
  out.push_back(c);

  c = {group, op + "-comaximal", true, {}};
  for (ElementSet f : filters) {
    if (!c.holds) break;
    for (ElementSet g : filters) {
      if (fl.join(f, g) == fl.top() && fl.join(t(f), t(g)) != fl.top()) {
        c.holds = false;
        c.witness = pair_witness(a, "F", f, "G", g);
        break;
      }
    }
  }
  out.push_back(c);

  // Binary joins suffice: the finite case follows by induction and the
  // empty join is {1}, fixed by both operators.
  c = {group, op + "-join", true, {}};
  for (ElementSet f : filters) {
    if (!c.holds) break;
    for (ElementSet g : filters) {
      if (fl.join(t(f), t(g)) != t(fl.join(f, g))) {
        c.holds = false;
        c.witness = pair_witness(a, "F", f, "G", g);
        break;
      }
    }
  }
  out.push_back(c);
  return out;
}

}  // namespace

Battery sigma_battery(const PureStructure& ps) {
  return operator_battery(ps, "unit-part", "sigma", [&](ElementSet f) { return ps.sigma(f); });
}

Battery rho_battery(const PureStructure& ps) {
  Battery out =
      operator_battery(ps, "pure-part", "rho", [&](ElementSet f) { return ps.rho(f); });
  const auto& fl = ps.filters();
  const auto maximals = fl.maximals();
  Criterion c{"pure-part", "rho-max-comaximal", true, {}};
  for (std::size_t i = 0; i < maximals.size() && c.holds; ++i) {
    for (std::size_t j = i + 1; j < maximals.size(); ++j) {
      if (fl.join(ps.rho(maximals[i]), ps.rho(maximals[j])) != fl.top()) {
        c.holds = false;
        c.witness = pair_witness(fl.algebra(), "m", maximals[i], "n", maximals[j]);
        break;
      }
    }
  }
  out.push_back(c);
  return out;
}

Criterion rho_rad_adjunction(const PureStructure& ps) {
  const auto& fl = ps.filters();
  Criterion c{"rho-rad-adjunction", "rho-rad-adjunction", true, {}};
  for (ElementSet f : fl.filters()) {
    if (!c.holds) break;
    for (ElementSet g : fl.filters()) {
      if (ps.rho(f).subset_of(g) != f.subset_of(fl.radical_total(g))) {
        c.holds = false;
        c.witness = pair_witness(fl.algebra(), "F", f, "G", g);
        break;
      }
    }
  }
  return c;
}

}  // namespace reslat
