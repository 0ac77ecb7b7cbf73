#include "reslat/modelgen.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <tuple>

#include "reslat/io.hpp"

namespace reslat {

namespace {

void check_size(std::size_t n) {
  if (n == 0 || n > kMaxEnumerationSize) {
    throw BoundExceeded("enumeration size " + std::to_string(n) + " is outside 1.." +
                        std::to_string(kMaxEnumerationSize));
  }
}

/// Every pair has a least upper bound; with a top and a bottom this makes a lattice.
bool has_joins(std::size_t n, const std::vector<char>& leq) {
  auto le = [&](std::size_t x, std::size_t y) { return leq[x * n + y] != 0; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      std::optional<std::size_t> least;
      for (std::size_t z = 0; z < n; ++z) {
        if (!le(x, z) || !le(y, z)) continue;
        if (!least || le(z, *least)) {
          least = z;
        } else if (!le(*least, z)) {
          return false;
        }
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (le(x, z) && le(y, z) && !le(*least, z)) return false;
      }
    }
  }
  return true;
}

/// Strict order on the middle elements 1..m as a bitmask over pairs i<j.
class OrderSearch {
 public:
  OrderSearch(std::size_t n, const std::function<bool(const BoundedLattice&)>& visit)
      : n_(n), m_(n - 2), visit_(visit), rel_(m_ * m_, 0) {
    // j ascending, i descending: deciding (i, j) sees every (i, k), (k, j), i < k < j.
    for (std::size_t j = 0; j < m_; ++j) {
      for (std::size_t i = j; i-- > 0;) pairs_.emplace_back(i, j);
    }
  }

  void run() { step(0); }

 private:
  bool step(std::size_t k) {
    if (k == pairs_.size()) return leaf();
    const auto [i, j] = pairs_[k];
    bool forced = false;
    for (std::size_t c = i + 1; c < j && !forced; ++c) forced = rel_[i * m_ + c] && rel_[c * m_ + j];
    if (!forced) {
      rel_[i * m_ + j] = 0;
      if (!step(k + 1)) return false;
    }
    rel_[i * m_ + j] = 1;
    const bool go_on = step(k + 1);
    rel_[i * m_ + j] = 0;
    return go_on;
  }

  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        c = (c << 1) | static_cast<std::uint64_t>(related(i, j));
      }
    }
    return c;
  }

  /// Relation after relabeling by the current permutation.
  bool related(std::size_t i, std::size_t j) const {
    return rel_[inverse_[i] * m_ + inverse_[j]] != 0;
  }

  bool canonical() {
    std::vector<std::size_t> p(m_);
    std::iota(p.begin(), p.end(), 0);
    inverse_ = p;
    const std::uint64_t own = code();
    while (std::next_permutation(p.begin(), p.end())) {
      for (std::size_t x = 0; x < m_; ++x) inverse_[p[x]] = x;
      bool natural = true;
      for (std::size_t i = 0; i < m_ && natural; ++i) {
        for (std::size_t j = 0; j < i && natural; ++j) natural = !related(i, j);
      }
      if (natural && code() > own) return false;
    }
    return true;
  }

  bool leaf() {
    std::vector<char> leq(n_ * n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      leq[x] = 1;
      leq[x * n_ + n_ - 1] = 1;
      leq[x * n_ + x] = 1;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        if (rel_[i * m_ + j]) leq[(i + 1) * n_ + j + 1] = 1;
      }
    }
    if (!has_joins(n_, leq) || !canonical()) return true;
    return visit_(BoundedLattice::from_order(n_, leq));
  }

  std::size_t n_;
  std::size_t m_;
  const std::function<bool(const BoundedLattice&)>& visit_;
  std::vector<char> rel_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> inverse_;
};

std::vector<std::string> structure_names(const BoundedLattice& l) {
  std::vector<std::string> names(l.size());
  char next = 'a';
  for (Element x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) {
      names[x] = "0";
    } else if (x == l.top()) {
      names[x] = "1";
    } else {
      names[x] = std::string(1, next++);
    }
  }
  return names;
}

bool is_chain(const BoundedLattice& l) {
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = 0; y < l.size(); ++y) {
      if (!l.leq(x, y) && !l.leq(y, x)) return false;
    }
  }
  return true;
}

class StructureSearch {
 public:
  StructureSearch(const BoundedLattice& l, const std::string& prefix,
                  const std::function<bool(const ResiduatedLattice&)>& visit)
      : l_(l), n_(l.size()), prefix_(prefix), visit_(visit), autos_(lattice_automorphisms(l)) {
    mul_.assign(n_ * n_, kUnset);
    for (Element x = 0; x < n_; ++x) {
      set(l.top(), x, x);
      set(l.bottom(), x, l.bottom());
    }
    for (Element x = 0; x < n_; ++x) {
      if (x == l.top() || x == l.bottom()) continue;
      for (Element y = x; y < n_; ++y) {
        if (y != l.top() && y != l.bottom()) pairs_.emplace_back(x, y);
      }
    }
    raw_.names = structure_names(l);
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) raw_.leq.push_back(static_cast<char>(l.leq(x, y)));
    }
  }

  void run() { step(0); }

 private:
  static constexpr Element kUnset = ~Element{0};

  void set(Element x, Element y, Element v) {
    mul_[x * n_ + y] = v;
    mul_[y * n_ + x] = v;
  }

  bool monotone_with_assigned(std::size_t k, Element v) const {
    const auto [x, y] = pairs_[k];
    for (std::size_t q = 0; q < k; ++q) {
      const auto [u, w] = pairs_[q];
      const Element t = mul_[u * n_ + w];
      const bool below = (l_.leq(u, x) && l_.leq(w, y)) || (l_.leq(u, y) && l_.leq(w, x));
      const bool above = (l_.leq(x, u) && l_.leq(y, w)) || (l_.leq(y, u) && l_.leq(x, w));
      if (below && !l_.leq(t, v)) return false;
      if (above && !l_.leq(v, t)) return false;
    }
    return true;
  }

  bool step(std::size_t k) {
    if (k == pairs_.size()) return leaf();
    const auto [x, y] = pairs_[k];
    for (std::size_t v : l_.down(l_.meet(x, y))) {
      if (!monotone_with_assigned(k, static_cast<Element>(v))) continue;
      set(x, y, static_cast<Element>(v));
      if (!step(k + 1)) return false;
    }
    set(x, y, kUnset);
    return true;
  }

  Element m(Element x, Element y) const { return mul_[x * n_ + y]; }

  bool laws_hold() const {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        for (Element z = 0; z < n_; ++z) {
          if (m(x, l_.join(y, z)) != l_.join(m(x, y), m(x, z))) return false;
          if (m(m(x, y), z) != m(x, m(y, z))) return false;
        }
      }
    }
    return true;
  }

  bool canonical() const {
    std::vector<Element> image(n_ * n_);
    for (const auto& a : autos_) {
      for (Element x = 0; x < n_; ++x) {
        for (Element y = 0; y < n_; ++y) image[a[x] * n_ + a[y]] = a[m(x, y)];
      }
      if (image < mul_) return false;
    }
    return true;
  }

  bool leaf() {
    if (!laws_hold() || !canonical()) return true;
    raw_.mul = mul_;
    raw_.name = prefix_ + "#" + std::to_string(++count_);
    auto result = try_validate(raw_, kMaxCarrier);
    if (auto* a = std::get_if<ResiduatedLattice>(&result)) return visit_(*a);
    --count_;
    return true;
  }

  const BoundedLattice& l_;
  std::size_t n_;
  std::string prefix_;
  const std::function<bool(const ResiduatedLattice&)>& visit_;
  std::vector<std::vector<Element>> autos_;
  std::vector<Element> mul_;
  std::vector<std::pair<Element, Element>> pairs_;
  RawTables raw_;
  std::size_t count_ = 0;
};

}  // namespace

void for_each_lattice(std::size_t n, const std::function<bool(const BoundedLattice&)>& visit) {
  check_size(n);
  if (n == 1) {
    const std::vector<char> leq{1};
    visit(BoundedLattice::from_order(1, leq));
    return;
  }
  OrderSearch(n, visit).run();
}

std::vector<BoundedLattice> enumerate_lattices(std::size_t n) {
  std::vector<BoundedLattice> out;
  for_each_lattice(n, [&](const BoundedLattice& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

std::vector<std::vector<Element>> lattice_automorphisms(const BoundedLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::vector<Element>> out;
  std::vector<Element> img(n);
  std::vector<char> used(n, 0);
  std::function<void(Element)> assign = [&](Element x) {
    if (x == n) {
      out.push_back(img);
      return;
    }
    for (Element y = 0; y < n; ++y) {
      if (used[y] || l.up(x).size() != l.up(y).size() || l.down(x).size() != l.down(y).size()) {
        continue;
      }
      bool ok = true;
      for (Element z = 0; z < x && ok; ++z) {
        ok = l.leq(z, x) == l.leq(img[z], y) && l.leq(x, z) == l.leq(y, img[z]);
      }
      if (!ok) continue;
      img[x] = y;
      used[y] = 1;
      assign(x + 1);
      used[y] = 0;
    }
  };
  assign(0);
  return out;
}

void for_each_residuated_structure(const BoundedLattice& l, const std::string& prefix,
                                   const std::function<bool(const ResiduatedLattice&)>& visit) {
  StructureSearch(l, prefix, visit).run();
}

std::vector<ResiduatedLattice> residuated_structures(const BoundedLattice& l,
                                                     const std::string& prefix) {
  std::vector<ResiduatedLattice> out;
  for_each_residuated_structure(l, prefix, [&](const ResiduatedLattice& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

std::vector<ResiduatedLattice> enumerate_algebras(const EnumerationTask& task) {
  std::vector<ResiduatedLattice> out;
  for (std::size_t n = std::max<std::size_t>(task.min_size, 1); n <= task.max_size; ++n) {
    std::size_t index = 0;
    for_each_lattice(n, [&](const BoundedLattice& l) {
      ++index;
      if (task.backbone == Backbone::Chains && !is_chain(l)) return true;
      const std::string prefix = "n" + std::to_string(n) + ".l" + std::to_string(index);
      for_each_residuated_structure(l, prefix, [&](const ResiduatedLattice& a) {
        out.push_back(a);
        return true;
      });
      return true;
    });
  }
  return out;
}

ClassificationCounts count_flags(const std::vector<AnalysisReport>& reports) {
  ClassificationCounts c;
  for (const auto& r : reports) {
    ++c.models;
    c.gelfand += r.flags.gelfand;
    c.soft += r.flags.soft;
    c.local += r.flags.local;
    c.semisimple += r.flags.semisimple;
    c.rickart += r.flags.rickart;
    c.baer += r.flags.baer;
    c.prelinear += r.flags.prelinear;
    c.prelinear_not_gelfand += r.flags.prelinear && !r.flags.gelfand;
  }
  return c;
}

Classification classify_all(const EnumerationTask& task) {
  const auto models = enumerate_algebras(task);
  std::vector<std::optional<AnalysisReport>> reports(models.size());
  std::vector<std::string> failures(models.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < models.size(); i = next++) {
      try {
        AnalysisReport r = analyze(models[i]);
        if (!r.unanimous()) {
          std::string detail;
          for (const auto& b : r.batteries) {
            if (!b.unanimous) detail += (detail.empty() ? "" : ", ") + b.name;
          }
          failures[i] = "batteries disagree: " + detail;
        }
        reports[i] = std::move(r);
      } catch (const EquivalenceViolation& e) {
        failures[i] = e.what();
      }
    }
  };
  unsigned threads = task.threads ? task.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(models.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < models.size(); ++i) {
    if (!failures[i].empty()) {
      throw EquivalenceViolation(models[i].name() + ": " + failures[i], serialize_text(models[i]));
    }
  }

  Classification out;
  for (auto& r : reports) out.reports.push_back(std::move(*r));
  std::sort(out.reports.begin(), out.reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.size, a.name) < std::tie(b.size, b.name);
  });
  out.counts = count_flags(out.reports);
  return out;
}

}  // namespace reslat
