#include "reslat/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace reslat {

const char* to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::HullKernel: return "hull-kernel";
    case SpaceKind::Dual: return "dual";
    case SpaceKind::Patch: return "patch";
    case SpaceKind::Pure: return "pure";
    case SpaceKind::DTopology: return "D-topology";
    case SpaceKind::Subspace: return "subspace";
    case SpaceKind::Quotient: return "quotient";
    case SpaceKind::Custom: return "custom";
  }
  return "?";
}

FiniteSpace FiniteSpace::from_open_subbasis(std::size_t n, std::span<const PointSet> subbasis,
                                            SpaceKind kind) {
  if (n > PointSet::kCapacity) throw BoundExceeded("finite space: more than 64 points");
  FiniteSpace x;
  x.kind_ = kind;
  const PointSet all = PointSet::full(n);
  x.minimal_open_.assign(n, all);
  for (PointSet b : subbasis) {
    for (std::size_t p : b & all) x.minimal_open_[p] &= b;
  }
  return x;
}

FiniteSpace FiniteSpace::from_closed_subbasis(std::size_t n,
                                              std::span<const PointSet> closed_subbasis,
                                              SpaceKind kind) {
  std::vector<PointSet> opens;
  opens.reserve(closed_subbasis.size());
  const PointSet all = PointSet::full(n);
  for (PointSet c : closed_subbasis) opens.push_back(all - c);
  return from_open_subbasis(n, opens, kind);
}

PointSet FiniteSpace::open_hull(PointSet s) const {
  PointSet out;
  for (std::size_t p : s) out |= minimal_open_[p];
  return out;
}

PointSet FiniteSpace::closure(PointSet s) const {
  PointSet out;
  for (std::size_t q = 0; q < size(); ++q) {
    if (minimal_open_[q].intersects(s)) out.insert(q);
  }
  return out;
}

PointSet FiniteSpace::interior(PointSet s) const {
  PointSet out;
  for (std::size_t q = 0; q < size(); ++q) {
    if (minimal_open_[q].subset_of(s)) out.insert(q);
  }
  return out;
}

std::vector<PointSet> FiniteSpace::open_sets() const {
  if (size() > kMaterializeCap) {
    throw BoundExceeded("finite space: too many points to materialize open sets");
  }
  std::set<PointSet> seen{PointSet{}};
  std::vector<PointSet> frontier{PointSet{}};
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (PointSet s : frontier) {
      for (PointSet u : minimal_open_) {
        if (seen.insert(s | u).second) next.push_back(s | u);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<PointSet> FiniteSpace::closed_sets() const {
  std::vector<PointSet> out;
  for (PointSet o : open_sets()) out.push_back(points() - o);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const FiniteSpace& x) {
  // Disjoint closed sets fail to separate iff two of their points do, and
  // the closures of those points are already disjoint closed sets.
  for (std::size_t p = 0; p < x.size(); ++p) {
    const PointSet cp = x.closure(PointSet::singleton(p));
    for (std::size_t q = p + 1; q < x.size(); ++q) {
      const PointSet cq = x.closure(PointSet::singleton(q));
      if (!cp.intersects(cq) && x.minimal_open(p).intersects(x.minimal_open(q))) return false;
    }
  }
  return true;
}

bool is_hausdorff(const FiniteSpace& x) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t q = p + 1; q < x.size(); ++q) {
      if (x.minimal_open(p).intersects(x.minimal_open(q))) return false;
    }
  }
  return true;
}

bool is_t1(const FiniteSpace& x) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x.closure(PointSet::singleton(p)) != PointSet::singleton(p)) return false;
  }
  return true;
}

bool is_discrete(const FiniteSpace& x) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x.minimal_open(p) != PointSet::singleton(p)) return false;
  }
  return true;
}

SpacePredicates space_predicates(const FiniteSpace& x) {
  SpacePredicates s;
  s.normal = is_normal(x);
  s.hausdorff = is_hausdorff(x);
  s.t1 = is_t1(x);
  s.discrete = is_discrete(x);
  return s;
}

FiniteSpace subspace(const FiniteSpace& x, PointSet keep) {
  std::vector<std::size_t> old_of;
  for (std::size_t p : keep) old_of.push_back(p);
  std::vector<PointSet> opens;
  for (std::size_t p : old_of) {
    const PointSet u = x.minimal_open(p) & keep;
    PointSet renumbered;
    for (std::size_t i = 0; i < old_of.size(); ++i) {
      if (u.contains(old_of[i])) renumbered.insert(i);
    }
    opens.push_back(renumbered);
  }
  return FiniteSpace::from_open_subbasis(old_of.size(), opens, SpaceKind::Subspace);
}

FiniteSpace quotient_space(const FiniteSpace& x, std::span<const std::size_t> class_of,
                           std::size_t classes) {
  if (class_of.size() != x.size()) throw Error("quotient_space: partition size mismatch");
  std::vector<PointSet> members(classes);
  for (std::size_t p = 0; p < class_of.size(); ++p) members.at(class_of[p]).insert(p);
  auto saturate = [&](PointSet s) {
    PointSet out;
    for (std::size_t p : s) out |= members[class_of[p]];
    return out;
  };
  std::vector<PointSet> opens;
  for (std::size_t c = 0; c < classes; ++c) {
    // Smallest saturated open set containing the class.
    PointSet s = members[c];
    for (;;) {
      const PointSet next = saturate(x.open_hull(s));
      if (next == s) break;
      s = next;
    }
    PointSet image;
    for (std::size_t p : s) image.insert(class_of[p]);
    opens.push_back(image);
  }
  return FiniteSpace::from_open_subbasis(classes, opens, SpaceKind::Quotient);
}

bool is_continuous(const FiniteSpace& from, const FiniteSpace& to,
                   std::span<const std::size_t> map) {
  if (map.size() != from.size()) return false;
  for (std::size_t q = 0; q < to.size(); ++q) {
    PointSet pre;
    for (std::size_t p = 0; p < map.size(); ++p) {
      if (to.minimal_open(q).contains(map[p])) pre.insert(p);
    }
    if (!from.is_open(pre)) return false;
  }
  return true;
}

bool is_homeomorphism(const FiniteSpace& from, const FiniteSpace& to,
                      std::span<const std::size_t> map) {
  if (map.size() != from.size() || from.size() != to.size()) return false;
  std::vector<std::size_t> inverse(to.size(), to.size());
  for (std::size_t p = 0; p < map.size(); ++p) {
    if (map[p] >= to.size() || inverse[map[p]] != to.size()) return false;
    inverse[map[p]] = p;
  }
  return is_continuous(from, to, map) && is_continuous(to, from, inverse);
}

PointSet hull(std::span<const ElementSet> pi, ElementSet x) {
  PointSet out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (x.subset_of(pi[i])) out.insert(i);
  }
  return out;
}

PointSet co_hull(std::span<const ElementSet> pi, ElementSet x) {
  return PointSet::full(pi.size()) - hull(pi, x);
}

ElementSet kernel(std::span<const ElementSet> pi, PointSet chosen, ElementSet top) {
  ElementSet acc = top;
  for (std::size_t i : chosen) acc &= pi[i];
  return acc;
}

PointSet specialization(std::span<const ElementSet> pi, PointSet chosen) {
  PointSet out;
  for (std::size_t q = 0; q < pi.size(); ++q) {
    for (std::size_t p : chosen) {
      if (pi[p].subset_of(pi[q])) {
        out.insert(q);
        break;
      }
    }
  }
  return out;
}

PointSet generalization(std::span<const ElementSet> pi, PointSet chosen) {
  PointSet out;
  for (std::size_t q = 0; q < pi.size(); ++q) {
    for (std::size_t p : chosen) {
      if (pi[q].subset_of(pi[p])) {
        out.insert(q);
        break;
      }
    }
  }
  return out;
}

std::optional<std::size_t> SpectrumSpace::index_of(ElementSet p) const {
  auto it = std::find(points.begin(), points.end(), p);
  if (it == points.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

PointSet SpectrumSpace::set_of(std::span<const ElementSet> filters) const {
  PointSet out;
  for (ElementSet f : filters) {
    if (auto i = index_of(f)) out.insert(*i);
  }
  return out;
}

SpectrumSpace build_space(const FilterLattice& fl, std::span<const ElementSet> pi, SpaceKind kind,
                          std::span<const ElementSet> pure_filters) {
  const auto& a = fl.algebra();
  SpectrumSpace s;
  s.points.assign(pi.begin(), pi.end());
  std::vector<PointSet> hx;
  for (Element x = 0; x < a.size(); ++x) hx.push_back(hull(pi, ElementSet::singleton(x)));
  const PointSet all = PointSet::full(pi.size());
  std::vector<PointSet> opens;
  switch (kind) {
    case SpaceKind::HullKernel:
      for (PointSet h : hx) opens.push_back(all - h);
      break;
    case SpaceKind::Dual:
      opens = hx;
      break;
    case SpaceKind::Patch:
      for (PointSet h : hx) {
        opens.push_back(h);
        opens.push_back(all - h);
      }
      break;
    case SpaceKind::DTopology:
      for (ElementSet f : pure_filters) opens.push_back(co_hull(pi, f));
      break;
    default:
      throw Error(std::string("build_space: unsupported kind ") + to_string(kind));
  }
  s.space = FiniteSpace::from_open_subbasis(pi.size(), opens, kind);
  return s;
}

SpectrumSpace spec_h(const FilterLattice& fl) {
  return build_space(fl, fl.primes(), SpaceKind::HullKernel);
}

SpectrumSpace max_h(const FilterLattice& fl) {
  return build_space(fl, fl.maximals(), SpaceKind::HullKernel);
}

namespace {

/// Connected components of the specialization graph; clopen sets are
/// exactly the unions of components.
std::vector<PointSet> components(const FiniteSpace& x) {
  std::vector<PointSet> out;
  PointSet left = x.points();
  while (!left.empty()) {
    PointSet comp = PointSet::singleton(left.front());
    for (;;) {
      PointSet next = x.open_hull(comp) | x.closure(comp);
      if (next == comp) break;
      comp = next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

}  // namespace

ClopenCheck clopen_sets(const FilterLattice& fl) {
  const SpectrumSpace s = spec_h(fl);
  const auto comps = components(s.space);
  if (comps.size() > kMaterializeCap) {
    throw BoundExceeded("clopen_sets: too many components");
  }
  std::set<PointSet> clopens;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << comps.size()); ++mask) {
    PointSet u;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if ((mask >> i) & 1U) u |= comps[i];
    }
    if (s.space.is_open(u) && s.space.is_closed(u)) clopens.insert(u);
  }
  std::set<PointSet> beta;
  const auto cls = classify_elements(fl.algebra());
  for (std::size_t e : cls.boolean_center) {
    beta.insert(hull(s.points, ElementSet::singleton(e)));
  }
  ClopenCheck c;
  c.clopens.assign(clopens.begin(), clopens.end());
  c.from_beta.assign(beta.begin(), beta.end());
  return c;
}

bool clopen_check(const FilterLattice& fl) {
  const ClopenCheck c = clopen_sets(fl);
  if (!c.equal()) throw EquivalenceViolation("Clop(Spec_h) differs from H(beta(A))");
  return true;
}

ClosedCharacterization closed_characterization(const FilterLattice& fl, PointSet chosen) {
  const SpectrumSpace h = spec_h(fl);
  const SpectrumSpace p = build_space(fl, fl.primes(), SpaceKind::Patch);
  ClosedCharacterization c;
  c.h_closed = h.space.is_closed(chosen);
  c.patch_closed = p.space.is_closed(chosen);
  c.s_stable = specialization(fl.primes(), chosen) == chosen;
  return c;
}

bool closed_iff_patch_and_stable(const FilterLattice& fl, PointSet chosen) {
  const auto c = closed_characterization(fl, chosen);
  if (c.h_closed != (c.patch_closed && c.s_stable)) {
    throw EquivalenceViolation("h-closedness differs from patch-closed and S-stable");
  }
  return c.h_closed;
}

DensityCheck density_check(const FilterLattice& fl) {
  const SpectrumSpace h = spec_h(fl);
  DensityCheck d;
  d.max_dense = h.space.closure(h.set_of(fl.maximals())) == h.space.points();
  d.semisimple = is_semisimple(fl);
  return d;
}

bool max_dense_iff_semisimple(const FilterLattice& fl) {
  const auto d = density_check(fl);
  if (d.max_dense != d.semisimple) {
    throw EquivalenceViolation("density of Max differs from semisimplicity");
  }
  return d.semisimple;
}

}  // namespace reslat
