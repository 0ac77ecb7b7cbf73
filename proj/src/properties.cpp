#include "reslat/properties.hpp"

#include <algorithm>
#include <functional>

#include "reslat/filters.hpp"
#include "reslat/gelfand.hpp"
#include "reslat/pure.hpp"
#include "reslat/topology.hpp"

namespace reslat {

namespace {

class Audit {
 public:
  explicit Audit(const ResiduatedLattice& a) : a_(a) {}

  /// `find` returns the first counterexample, or an empty string.
  void check(std::string name, const std::function<std::string()>& find) {
    std::string detail;
    try {
      detail = find();
    } catch (const Error& e) {
      detail = std::string("threw: ") + e.what();
    }
    out_.push_back({std::move(name), detail.empty(), detail});
  }

  std::string set(ElementSet s) const { return format_set(a_, s); }
  std::string el(Element x) const { return a_.name_of(x); }

  std::vector<PropertyCheck> take() { return std::move(out_); }

 private:
  const ResiduatedLattice& a_;
  std::vector<PropertyCheck> out_;
};

/// Least filter containing `s`, by repeated closure under products and upsets.
ElementSet naive_filter(const ResiduatedLattice& a, ElementSet s) {
  s.insert(a.one());
  for (;;) {
    ElementSet next = a.up_closure(s);
    for (std::size_t x : s) {
      for (std::size_t y : s) next.insert(a.mul(static_cast<Element>(x), static_cast<Element>(y)));
    }
    if (next == s) return s;
    s = next;
  }
}

/// Subsets of the spectrum to test closure identities on.
std::vector<PointSet> point_families(std::size_t n, std::span<const ElementSet> primes,
                                     const ResiduatedLattice& a) {
  std::vector<PointSet> out;
  if (n <= 10) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(PointSet::from_bits(m));
    return out;
  }
  out.push_back(PointSet{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      PointSet s = PointSet::singleton(i);
      s.insert(j);
      out.push_back(s);
    }
  }
  for (Element x = 0; x < a.size(); ++x) out.push_back(hull(primes, ElementSet::singleton(x)));
  return out;
}

}  // namespace

std::vector<PropertyCheck> audit_properties(const ResiduatedLattice& a) {
  const std::size_t n = a.size();
  const FilterLattice fl(a);
  const PureStructure ps(fl);
  const auto filters = fl.filters();
  const auto primes = fl.primes();
  const auto maximals = fl.maximals();
  const ElementSet top = fl.top();
  const ElementSet one = fl.bottom();
  Audit au(a);

  // --- residuation -------------------------------------------------------
  au.check("adjunction", [&]() -> std::string {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (a.leq(a.mul(x, z), y) != a.leq(z, a.res(x, y)))
            return "x=" + au.el(x) + ", y=" + au.el(y) + ", z=" + au.el(z);
    return {};
  });
  au.check("product-distributes-over-join", [&]() -> std::string {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (a.mul(x, a.join(y, z)) != a.join(a.mul(x, y), a.mul(x, z)))
            return "x=" + au.el(x) + ", y=" + au.el(y) + ", z=" + au.el(z);
    return {};
  });
  au.check("join-over-product-inequality", [&]() -> std::string {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (!a.leq(a.mul(a.join(x, y), a.join(x, z)), a.join(x, a.mul(y, z))))
            return "x=" + au.el(x) + ", y=" + au.el(y) + ", z=" + au.el(z);
    return {};
  });
  au.check("residuum-derivation", [&]() -> std::string {
    const auto derived = derive_residuum(a.lattice(), a.mul_table());
    if (!std::equal(derived.begin(), derived.end(), a.res_table().begin(), a.res_table().end()))
      return "derived table differs";
    return {};
  });

  // --- filters -----------------------------------------------------------
  au.check("generated-filter-closure", [&]() -> std::string {
    for (Element x = 0; x < n; ++x) {
      for (Element y = x; y < n; ++y) {
        ElementSet s = ElementSet::singleton(x);
        s.insert(y);
        if (generated_filter(a, s) != naive_filter(a, s)) return "X=" + au.set(s);
      }
    }
    return {};
  });
  if (n <= 16) {
    au.check("filter-enumeration", [&]() -> std::string {
      std::vector<ElementSet> scan;
      const std::uint64_t rest = (std::uint64_t{1} << n) - 1;
      for (std::uint64_t m = 0; m <= rest; ++m) {
        const ElementSet s = ElementSet::from_bits(m);
        if (s.contains(a.one()) && is_filter(a, s)) scan.push_back(s);
      }
      std::sort(scan.begin(), scan.end());
      if (!std::equal(scan.begin(), scan.end(), filters.begin(), filters.end()))
        return std::to_string(scan.size()) + " filters by scan, " +
               std::to_string(filters.size()) + " enumerated";
      return {};
    });
  }
  au.check("join-with-principal-filter", [&]() -> std::string {
    for (ElementSet f : filters) {
      for (Element x = 0; x < n; ++x) {
        ElementSet expect;
        const auto pw = power_sequence(a, x);
        for (std::size_t fe : f)
          for (Element p : pw) expect |= a.up(a.mul(static_cast<Element>(fe), p));
        if (fl.join(f, fl.principal(x)) != expect) return "F=" + au.set(f) + ", x=" + au.el(x);
      }
    }
    return {};
  });
  au.check("principal-filter-antitone", [&]() -> std::string {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (a.leq(x, y) && !fl.principal(y).subset_of(fl.principal(x)))
          return "x=" + au.el(x) + ", y=" + au.el(y);
    return {};
  });
  au.check("principal-filter-meet", [&]() -> std::string {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if ((fl.principal(x) & fl.principal(y)) != fl.principal(a.join(x, y)))
          return "x=" + au.el(x) + ", y=" + au.el(y);
    return {};
  });
  au.check("principal-filter-join", [&]() -> std::string {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (fl.join(fl.principal(x), fl.principal(y)) != fl.principal(a.mul(x, y)))
          return "x=" + au.el(x) + ", y=" + au.el(y);
    return {};
  });
  au.check("principal-filters-sublattice", [&]() -> std::string {
    std::vector<ElementSet> pf;
    for (Element x = 0; x < n; ++x) pf.push_back(fl.principal(x));
    auto in = [&](ElementSet s) { return std::find(pf.begin(), pf.end(), s) != pf.end(); };
    for (ElementSet f : pf)
      for (ElementSet g : pf)
        if (!in(f & g) || !in(fl.join(f, g))) return "F=" + au.set(f) + ", G=" + au.set(g);
    return {};
  });
  au.check("filter-lattice-distributive", [&]() -> std::string {
    for (ElementSet f : filters)
      for (ElementSet g : filters)
        for (ElementSet h : filters)
          if ((f & fl.join(g, h)) != fl.join(f & g, f & h))
            return "F=" + au.set(f) + ", G=" + au.set(g) + ", H=" + au.set(h);
    return {};
  });
  au.check("comaximality-characterizations", [&]() -> std::string {
    for (ElementSet f : filters)
      for (ElementSet g : filters)
        if (f != top && g != top) is_comaximal(fl, f, g);
    return {};
  });
  au.check("maximal-by-negated-powers", [&]() -> std::string {
    for (ElementSet m : filters) {
      if (m == top) continue;
      bool cond = true;
      for (Element x = 0; x < n && cond; ++x) {
        if (m.contains(x)) continue;
        const auto pw = power_sequence(a, x);
        cond = std::any_of(pw.begin(), pw.end(), [&](Element p) { return m.contains(a.neg(p)); });
      }
      if (cond != fl.is_maximal(m)) return "m=" + au.set(m);
    }
    return {};
  });
  au.check("local-characterizations", [&]() -> std::string {
    return local_conditions(fl).unanimous() ? std::string{} : "conditions disagree";
  });
  au.check("prime-extension", [&]() -> std::string {
    for (ElementSet f : filters) {
      for (Element c = 0; c < n; ++c) {
        if (f.contains(c)) continue;
        const ElementSet p = prime_extension(fl, f, ElementSet::singleton(c));
        if (!fl.is_prime(p) || !f.subset_of(p) || p.contains(c))
          return "F=" + au.set(f) + ", c=" + au.el(c);
      }
    }
    return {};
  });

  // --- spectra -----------------------------------------------------------
  const SpectrumSpace h = spec_h(fl);
  const SpectrumSpace d = build_space(fl, primes, SpaceKind::Dual);
  const auto families = point_families(primes.size(), primes, a);
  au.check("closure-is-hull-of-kernel", [&]() -> std::string {
    for (PointSet pi : families) {
      const PointSet cl = h.space.closure(pi);
      if (cl != hull(primes, kernel(primes, pi, top)) || cl != specialization(primes, pi))
        return "pi=" + std::to_string(pi.bits());
    }
    return {};
  });
  au.check("dual-closure-is-generalization", [&]() -> std::string {
    for (PointSet pi : families)
      if (d.space.closure(pi) != generalization(primes, pi)) return "pi=" + std::to_string(pi.bits());
    return {};
  });
  au.check("closed-iff-patch-closed-and-stable", [&]() -> std::string {
    for (PointSet pi : families) {
      const auto c = closed_characterization(fl, pi);
      if (c.h_closed != (c.patch_closed && c.s_stable)) return "pi=" + std::to_string(pi.bits());
    }
    return {};
  });
  au.check("hull-kernel-galois", [&]() -> std::string {
    for (ElementSet f : filters)
      for (PointSet pi : families)
        if (f.subset_of(kernel(primes, pi, top)) != pi.subset_of(hull(primes, f)))
          return "F=" + au.set(f) + ", pi=" + std::to_string(pi.bits());
    return {};
  });
  au.check("specialization-closure-operators", [&]() -> std::string {
    for (PointSet pi : families) {
      const PointSet s = specialization(primes, pi);
      const PointSet g = generalization(primes, pi);
      if (!pi.subset_of(s) || specialization(primes, s) != s) return "S at " + std::to_string(pi.bits());
      if (!pi.subset_of(g) || generalization(primes, g) != g) return "G at " + std::to_string(pi.bits());
    }
    return {};
  });
  au.check("clopens-are-boolean-hulls", [&]() -> std::string {
    return clopen_sets(fl).equal() ? std::string{} : "clopen families differ";
  });
  au.check("max-dense-iff-semisimple", [&]() -> std::string {
    const auto c = density_check(fl);
    return c.max_dense == c.semisimple ? std::string{} : "density and semisimplicity disagree";
  });

  // --- D-parts -----------------------------------------------------------
  const ElementSet beta = classify_elements(a).boolean_center;
  au.check("d-part-kernel-of-generalization", [&]() -> std::string {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (d_part(fl, primes[i]) != fl.d_part_at(i)) return "p=" + au.set(primes[i]);
    return {};
  });
  au.check("d-parts-of-maximals-meet-to-one", [&]() -> std::string {
    ElementSet acc = top;
    for (ElementSet m : maximals) acc &= fl.d_part_at(*fl.prime_index(m));
    return acc == one ? std::string{} : "meet is " + au.set(acc);
  });
  au.check("boolean-part-of-prime-in-d-part", [&]() -> std::string {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (!(beta & primes[i]).subset_of(fl.d_part_at(i))) return "p=" + au.set(primes[i]);
    return {};
  });
  au.check("boolean-center-meets-radical-in-one", [&]() -> std::string {
    const ElementSet r = beta & fl.radical_total(one);
    return r == one ? std::string{} : "meet is " + au.set(r);
  });
  au.check("d-part-comaximality-via-ideals", [&]() -> std::string {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = 0; j < primes.size(); ++j) {
        bool ideal_top = false;
        for (Element x = 0; x < n && !ideal_top; ++x)
          for (Element y = 0; y < n && !ideal_top; ++y)
            ideal_top = !primes[i].contains(x) && !primes[j].contains(y) && a.join(x, y) == a.one();
        if ((fl.join(fl.d_part_at(i), fl.d_part_at(j)) == top) != ideal_top)
          return "p=" + au.set(primes[i]) + ", q=" + au.set(primes[j]);
      }
    }
    return {};
  });
  au.check("quotient-maximals", [&]() -> std::string {
    for (ElementSet f : filters) {
      const Quotient q = quotient(a, f);
      const FilterLattice qfl(q.algebra);
      std::vector<ElementSet> images;
      for (ElementSet m : maximals) {
        if (!f.subset_of(m)) continue;
        ElementSet img;
        for (std::size_t x : m) img.insert(q.projection[x]);
        images.push_back(img);
      }
      std::sort(images.begin(), images.end());
      if (!std::equal(images.begin(), images.end(), qfl.maximals().begin(), qfl.maximals().end()))
        return "F=" + au.set(f);
    }
    return {};
  });
  au.check("local-quotient-by-d-part", [&]() -> std::string {
    for (ElementSet m : maximals) {
      const ElementSet dm = fl.d_part_at(*fl.prime_index(m));
      const bool local = FilterLattice(quotient(a, dm).algebra).maximals().size() == 1;
      bool cond = true;
      for (Element x = 0; x < n && cond; ++x) {
        if (m.contains(x)) continue;
        bool found = false;
        for (Element p : power_sequence(a, x))
          for (Element y = 0; y < n && !found; ++y)
            found = !m.contains(y) && a.join(y, a.neg(p)) == a.one();
        cond = found;
      }
      if (local != cond) return "m=" + au.set(m);
    }
    return {};
  });
  au.check("quotient-by-one-and-by-carrier", [&]() -> std::string {
    if (!find_isomorphism(a, quotient(a, one).algebra)) return "A/{1} not isomorphic to A";
    if (quotient(a, top).algebra.size() != 1) return "A/A not trivial";
    return {};
  });

  // --- unit part -----------------------------------------------------------
  au.check("unit-part-routes-agree", [&]() -> std::string {
    for (ElementSet f : filters)
      if (ps.sigma(f) != ps.sigma_via_coannihilators(f)) return "F=" + au.set(f);
    return {};
  });
  au.check("unit-part-is-subfilter", [&]() -> std::string {
    for (ElementSet f : filters)
      if (!is_filter(a, ps.sigma(f)) || !ps.sigma(f).subset_of(f)) return "F=" + au.set(f);
    return {};
  });
  au.check("unit-part-monotone", [&]() -> std::string {
    for (ElementSet f : filters)
      for (ElementSet g : filters)
        if (f.subset_of(g) && !ps.sigma(f).subset_of(ps.sigma(g)))
          return "F=" + au.set(f) + ", G=" + au.set(g);
    return {};
  });
  au.check("unit-part-of-prime-in-d-part", [&]() -> std::string {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (!ps.sigma(primes[i]).subset_of(fl.d_part_at(i))) return "p=" + au.set(primes[i]);
    return {};
  });
  au.check("unit-part-of-maximal-is-d-part", [&]() -> std::string {
    for (ElementSet m : maximals)
      if (ps.sigma(m) != fl.d_part_at(*fl.prime_index(m))) return "m=" + au.set(m);
    return {};
  });
  au.check("unit-part-preserves-meets", [&]() -> std::string {
    for (ElementSet f : filters)
      for (ElementSet g : filters)
        if (ps.sigma(f & g) != (ps.sigma(f) & ps.sigma(g)))
          return "F=" + au.set(f) + ", G=" + au.set(g);
    return {};
  });
  au.check("unit-part-join-subadditive", [&]() -> std::string {
    for (ElementSet f : filters)
      for (ElementSet g : filters)
        if (!fl.join(ps.sigma(f), ps.sigma(g)).subset_of(ps.sigma(fl.join(f, g))))
          return "F=" + au.set(f) + ", G=" + au.set(g);
    return {};
  });

  // --- pure filters --------------------------------------------------------
  const auto pure = ps.pure_filters();
  au.check("pure-filters-frame", [&]() -> std::string {
    for (ElementSet f : pure) {
      for (ElementSet g : pure) {
        if (!ps.is_pure(f & g) || !ps.is_pure(fl.join(f, g)))
          return "F=" + au.set(f) + ", G=" + au.set(g);
        for (ElementSet k : pure)
          if ((f & fl.join(g, k)) != fl.join(f & g, f & k))
            return "F=" + au.set(f) + ", G=" + au.set(g) + ", H=" + au.set(k);
      }
    }
    return {};
  });
  au.check("pure-filter-meet-of-d-parts", [&]() -> std::string {
    return pure_characterization(ps).intersection_of_d_parts ? std::string{} : "some pure filter differs";
  });
  au.check("pure-part-below-unit-part", [&]() -> std::string {
    for (ElementSet f : filters)
      if (!ps.rho(f).subset_of(ps.sigma(f))) return "F=" + au.set(f);
    return {};
  });
  au.check("pure-part-kernel-operator", [&]() -> std::string {
    for (ElementSet f : filters) {
      const ElementSet r = ps.rho(f);
      if (!r.subset_of(f) || ps.rho(r) != r || !ps.is_pure(r)) return "F=" + au.set(f);
      if ((r == f) != ps.is_pure(f)) return "fixed point F=" + au.set(f);
      for (ElementSet g : filters)
        if (f.subset_of(g) && !r.subset_of(ps.rho(g))) return "F=" + au.set(f) + ", G=" + au.set(g);
    }
    return {};
  });
  au.check("pure-part-preserves-meets", [&]() -> std::string {
    for (ElementSet f : filters)
      for (ElementSet g : filters)
        if (ps.rho(f & g) != (ps.rho(f) & ps.rho(g))) return "F=" + au.set(f) + ", G=" + au.set(g);
    return {};
  });
  au.check("pure-filter-meet-of-pure-parts", [&]() -> std::string {
    for (ElementSet f : pure) {
      ElementSet acc = top;
      for (ElementSet m : maximals)
        if (f.subset_of(m)) acc &= ps.rho(m);
      if (acc != f) return "F=" + au.set(f);
    }
    return {};
  });
  au.check("pure-filter-pure-part-of-radical", [&]() -> std::string {
    for (ElementSet f : pure)
      if (ps.rho(fl.radical_total(f)) != f) return "F=" + au.set(f);
    return {};
  });
  au.check("pure-part-of-prime-equals-of-d-part", [&]() -> std::string {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (ps.rho(primes[i]) != ps.rho(fl.d_part_at(i))) return "p=" + au.set(primes[i]);
    return {};
  });
  const auto spp = ps.spp();
  auto in_spp = [&](ElementSet s) { return std::find(spp.begin(), spp.end(), s) != spp.end(); };
  au.check("pure-part-of-prime-purely-prime", [&]() -> std::string {
    for (ElementSet p : primes)
      if (!in_spp(ps.rho(p))) return "p=" + au.set(p);
    return {};
  });
  std::vector<ElementSet> rho_max;
  for (ElementSet m : maximals) rho_max.push_back(ps.rho(m));
  std::sort(rho_max.begin(), rho_max.end());
  rho_max.erase(std::unique(rho_max.begin(), rho_max.end()), rho_max.end());
  const std::vector<ElementSet> purely_max(ps.purely_maximal().begin(), ps.purely_maximal().end());
  au.check("purely-maximal-are-pure-parts-of-maximals", [&]() -> std::string {
    for (ElementSet p : purely_max)
      if (!std::binary_search(rho_max.begin(), rho_max.end(), p)) return "P=" + au.set(p);
    return {};
  });
  au.check("pure-filter-meet-of-purely-primes", [&]() -> std::string {
    for (ElementSet f : pure) {
      ElementSet acc = top;
      for (ElementSet p : spp)
        if (f.subset_of(p)) acc &= p;
      if (acc != f) return "F=" + au.set(f);
    }
    return {};
  });
  au.check("pure-part-map-continuous", [&]() -> std::string {
    const auto m = pure_part_map(ps);
    if (!m.lands_in_spp) return "image outside the pure spectrum";
    if (!m.preimages_match) return "preimage of d_p(F) is not d(F)";
    if (!m.continuous) return "not continuous";
    return {};
  });

  // --- Gelfand consequences ------------------------------------------------
  const bool gelfand = is_gelfand_definition(fl).holds;
  auto gelfand_check = [&](std::string name, const std::function<std::string()>& find) {
    au.check(std::move(name), [&]() { return gelfand ? find() : std::string{}; });
  };
  gelfand_check("gelfand:pure-part-equals-unit-part", [&]() -> std::string {
    for (ElementSet f : filters)
      if (ps.rho(f) != ps.sigma(f)) return "F=" + au.set(f);
    return {};
  });
  gelfand_check("gelfand:purely-maximal-equals-pure-parts-of-maximals", [&]() -> std::string {
    return purely_max == rho_max ? std::string{} : "sets differ";
  });
  gelfand_check("gelfand:pure-spectrum-equals-purely-maximal", [&]() -> std::string {
    return std::equal(spp.begin(), spp.end(), purely_max.begin(), purely_max.end()) ? std::string{}
                                                                                 : "sets differ";
  });
  gelfand_check("gelfand:pure-spectrum-equals-pure-parts-of-maximals", [&]() -> std::string {
    return std::equal(spp.begin(), spp.end(), rho_max.begin(), rho_max.end()) ? std::string{}
                                                                           : "sets differ";
  });
  gelfand_check("gelfand:pure-spectrum-hausdorff", [&]() -> std::string {
    return is_hausdorff(ps.pure_spectrum().space) ? std::string{} : "not Hausdorff";
  });
  gelfand_check("gelfand:max-spectrum-hausdorff", [&]() -> std::string {
    return is_hausdorff(max_h(fl).space) ? std::string{} : "not Hausdorff";
  });
  gelfand_check("gelfand:unique-retraction", [&]() -> std::string {
    const auto r = retraction(fl);
    return r.continuous && r.retractions == 1 ? std::string{} : "retraction missing or not unique";
  });
  return au.take();
}

}  // namespace reslat
