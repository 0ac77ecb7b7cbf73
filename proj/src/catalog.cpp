#include "reslat/catalog.hpp"

#include <algorithm>

namespace reslat {

namespace {

/// Table given by names: rows[i][k] is names[i] * names[i + k].
ResiduatedLattice from_upper_rows(std::string name, std::vector<std::string> names,
                                  const std::vector<std::pair<std::string, std::string>>& covers,
                                  const std::vector<std::vector<std::string>>& rows) {
  auto id = [&](const std::string& s) {
    return static_cast<Element>(std::find(names.begin(), names.end(), s) - names.begin());
  };
  const std::size_t n = names.size();
  RawTables raw;
  raw.name = std::move(name);
  for (const auto& [lo, hi] : covers) raw.covers.emplace_back(id(lo), id(hi));
  raw.mul.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      const Element v = id(rows[i][k]);
      raw.mul[i * n + i + k] = v;
      raw.mul[(i + k) * n + i] = v;
    }
  }
  raw.names = std::move(names);
  return validate(raw);
}

std::string chain_name(std::size_t i, std::size_t n) {
  if (i == 0) return "0";
  if (i + 1 == n) return "1";
  return "a" + std::to_string(i);
}

ResiduatedLattice chain(std::string name, std::size_t n, bool lukasiewicz) {
  RawTables raw;
  raw.name = std::move(name);
  for (std::size_t i = 0; i < n; ++i) raw.names.push_back(chain_name(i, n));
  for (Element i = 0; i + 1 < n; ++i) raw.covers.emplace_back(i, i + 1);
  raw.mul.assign(n * n, 0);
  const std::size_t top = n - 1;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      raw.mul[x * n + y] = static_cast<Element>(
          lukasiewicz ? (x + y > top ? x + y - top : 0) : std::min(x, y));
    }
  }
  return validate(raw);
}

}  // namespace

ResiduatedLattice algebra_a6() {
  return from_upper_rows(
      "A6", {"0", "a", "b", "c", "d", "1"},
      {{"0", "a"}, {"a", "b"}, {"0", "c"}, {"c", "d"}, {"b", "d"}, {"d", "1"}},
      {{"0", "0", "0", "0", "0", "0"},
       {"a", "a", "0", "a", "a"},
       {"a", "0", "a", "b"},
       {"c", "c", "c"},
       {"d", "d"},
       {"1"}});
}

ResiduatedLattice algebra_a8() {
  return from_upper_rows(
      "A8", {"0", "a", "b", "c", "d", "e", "f", "1"},
      {{"0", "a"}, {"0", "b"}, {"b", "d"}, {"d", "f"}, {"f", "1"},
       {"a", "d"}, {"a", "c"}, {"c", "e"}, {"d", "e"}, {"e", "1"}},
      {{"0", "0", "0", "0", "0", "0", "0", "0"},
       {"a", "0", "a", "a", "a", "a", "a"},
       {"0", "0", "0", "0", "b", "b"},
       {"c", "a", "c", "a", "c"},
       {"a", "a", "d", "d"},
       {"c", "d", "e"},
       {"f", "f"},
       {"1"}});
}

ResiduatedLattice godel_chain(std::size_t n) {
  return chain("C" + std::to_string(n), n, false);
}

ResiduatedLattice lukasiewicz_chain(std::size_t n) {
  return chain("MV" + std::to_string(n), n, true);
}

ResiduatedLattice boolean_cube(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  RawTables raw;
  raw.name = "B" + std::to_string(k);
  for (std::size_t x = 0; x < n; ++x) {
    if (x == 0) {
      raw.names.push_back("0");
    } else if (x + 1 == n) {
      raw.names.push_back("1");
    } else {
      std::string bits;
      for (std::size_t b = k; b-- > 0;) bits += ((x >> b) & 1U) ? '1' : '0';
      raw.names.push_back("x" + bits);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t b = 0; b < k; ++b) {
      if (((x >> b) & 1U) == 0) {
        raw.covers.emplace_back(static_cast<Element>(x), static_cast<Element>(x | (1U << b)));
      }
    }
  }
  raw.mul.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) raw.mul[x * n + y] = static_cast<Element>(x & y);
  }
  return validate(raw);
}

std::vector<std::string> catalog_names() {
  return {"A6", "A8", "C2", "C3", "C4", "C5", "C6", "B1", "B2", "B3", "MV3"};
}

std::optional<ResiduatedLattice> catalog_lookup(std::string_view name) {
  if (name == "A6") return algebra_a6();
  if (name == "A8") return algebra_a8();
  if (name == "MV3") return lukasiewicz_chain(3);
  if (name.size() == 2 && name[1] >= '0' && name[1] <= '9') {
    const std::size_t k = static_cast<std::size_t>(name[1] - '0');
    if (name[0] == 'C' && k >= 2 && k <= 6) return godel_chain(k);
    if (name[0] == 'B' && k >= 1 && k <= 3) return boolean_cube(k);
  }
  return std::nullopt;
}

std::vector<ResiduatedLattice> catalog_all() {
  std::vector<ResiduatedLattice> out;
  for (const auto& n : catalog_names()) out.push_back(*catalog_lookup(n));
  return out;
}

}  // namespace reslat
