#pragma once

// Slow enumerations used to check the model generator: every order relation
// on the middle elements, every multiplication table.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <variant>
#include <vector>

#include "reslat/algebra.hpp"

namespace naive {

using reslat::Element;

/// leq matrix of a bounded poset on n points with 0 bottom and n-1 top,
/// middle relation taken from `bits` (one bit per ordered pair of middle
/// points). Empty when the relation is not a partial order.
inline std::vector<char> order_from_bits(std::size_t n, std::uint64_t bits) {
  std::vector<char> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    leq[i * n + i] = 1;
    leq[0 * n + i] = 1;
    leq[i * n + n - 1] = 1;
  }
  std::size_t bit = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = 1; j + 1 < n; ++j) {
      if (i == j) continue;
      if ((bits >> bit++) & 1U) leq[i * n + j] = 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i * n + j] && leq[j * n + i]) return {};
      for (std::size_t k = 0; k < n; ++k) {
        if (leq[i * n + j] && leq[j * n + k] && !leq[i * n + k]) return {};
      }
    }
  }
  return leq;
}

inline bool has_joins(std::size_t n, const std::vector<char>& leq) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t least_count = 0;
      for (std::size_t z = 0; z < n; ++z) {
        if (!leq[x * n + z] || !leq[y * n + z]) continue;
        bool least = true;
        for (std::size_t w = 0; w < n; ++w) {
          if (leq[x * n + w] && leq[y * n + w] && !leq[z * n + w]) least = false;
        }
        if (least) ++least_count;
      }
      if (least_count != 1) return false;
    }
  }
  return true;
}

/// Smallest relabelled leq matrix over permutations of the middle points.
inline std::vector<char> canonical(std::size_t n, const std::vector<char>& leq) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> best;
  do {
    std::vector<char> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[perm[i] * n + perm[j]] = leq[i * n + j];
    }
    if (best.empty() || m < best) best = m;
  } while (n > 2 && std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

/// One leq matrix per isomorphism class of n-element lattices.
inline std::vector<std::vector<char>> lattices(std::size_t n) {
  if (n == 1) return {std::vector<char>{1}};
  const std::size_t m = n - 2;
  std::set<std::vector<char>> seen;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (m * (m > 0 ? m - 1 : 0))); ++bits) {
    auto leq = order_from_bits(n, bits);
    if (leq.empty() || !has_joins(n, leq)) continue;
    seen.insert(canonical(n, leq));
  }
  return {seen.begin(), seen.end()};
}

/// Every commutative integral residuated lattice of size n up to
/// isomorphism: all tables with 1 as unit, filtered by validation.
inline std::vector<reslat::ResiduatedLattice> algebras(std::size_t n) {
  std::vector<reslat::ResiduatedLattice> out;
  for (const auto& leq : lattices(n)) {
    reslat::RawTables raw;
    for (std::size_t i = 0; i < n; ++i) raw.names.push_back("x" + std::to_string(i));
    raw.leq = leq;
    raw.mul.assign(n * n, 0);
    std::vector<std::size_t> cells;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == n - 1) raw.mul[x * n + y] = static_cast<Element>(y);
        else if (y == n - 1) raw.mul[x * n + y] = static_cast<Element>(x);
        else cells.push_back(x * n + y);
      }
    }
    std::vector<reslat::ResiduatedLattice> here;
    std::vector<Element> digits(cells.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < cells.size(); ++k) raw.mul[cells[k]] = digits[k];
      auto r = reslat::try_validate(raw, n);
      if (auto* a = std::get_if<reslat::ResiduatedLattice>(&r)) {
        const bool dup = std::any_of(here.begin(), here.end(), [&](const auto& b) {
          return reslat::find_isomorphism(*a, b).has_value();
        });
        if (!dup) here.push_back(std::move(*a));
      }
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
      if (k == digits.size()) break;
    }
    for (auto& a : here) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace naive
