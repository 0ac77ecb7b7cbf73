#include "reslat/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "json.hpp"

#include "reslat/catalog.hpp"

namespace reslat {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
  std::string raw;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(start, end - start));
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, {}, raw};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      const std::size_t b = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(b, i - b), b + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

class TextParser {
 public:
  explicit TextParser(std::string_view text) : lines_(split_lines(text)) {
    last_line_ = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
  }

  RawTables run() {
    RawTables raw;
    bool have_mul = false;
    bool have_order = false;
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_++];
      const Token& head = line.tokens.front();
      if (head.text == "name") {
        const std::size_t from = line.tokens.size() > 1 ? line.tokens[1].column - 1 : line.raw.size();
        std::string rest = line.raw.substr(from);
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.pop_back();
        raw.name = rest;
      } else if (head.text == "elements") {
        if (!raw.names.empty()) fail(line, head, "duplicate 'elements' directive");
        if (line.tokens.size() < 2) fail(line, head, "'elements' needs at least one name");
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          const Token& t = line.tokens[i];
          if (index_.contains(t.text)) fail(line, t, "duplicate element '" + t.text + "'");
          index_.emplace(t.text, static_cast<Element>(raw.names.size()));
          raw.names.push_back(t.text);
        }
      } else if (head.text == "covers") {
        require_elements(raw, line, head);
        if (!raw.leq.empty()) fail(line, head, "both 'covers' and 'leq' given");
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          const Token& t = line.tokens[i];
          const auto lt = t.text.find('<');
          if (lt == std::string::npos || lt == 0 || lt + 1 == t.text.size()) {
            fail(line, t, "expected a cover 'x<y', found '" + t.text + "'");
          }
          const Element lo = element(line, t, t.text.substr(0, lt), 0);
          const Element hi = element(line, t, t.text.substr(lt + 1), lt + 1);
          raw.covers.emplace_back(lo, hi);
        }
        have_order = true;
      } else if (head.text == "leq") {
        require_elements(raw, line, head);
        if (!raw.covers.empty()) fail(line, head, "both 'covers' and 'leq' given");
        const auto rows = table(line, raw.names.size(), "leq", [&](const Line& l, const Token& t) {
          if (t.text != "0" && t.text != "1") fail(l, t, "leq entries must be 0 or 1");
          return static_cast<Element>(t.text == "1");
        });
        for (Element v : rows) raw.leq.push_back(static_cast<char>(v));
        have_order = true;
      } else if (head.text == "mul" || head.text == "res") {
        require_elements(raw, line, head);
        auto rows = table(line, raw.names.size(), head.text,
                          [&](const Line& l, const Token& t) { return element(l, t, t.text, 0); });
        if (head.text == "mul") {
          if (have_mul) fail(line, head, "duplicate 'mul' table");
          raw.mul = std::move(rows);
          have_mul = true;
        } else {
          if (raw.res) fail(line, head, "duplicate 'res' table");
          raw.res = std::move(rows);
        }
      } else {
        fail(line, head, "unknown directive '" + head.text + "'");
      }
    }
    if (raw.names.empty()) throw ParseError(last_line_, 1, "missing 'elements' directive");
    if (!have_order && raw.names.size() > 1) {
      throw ParseError(last_line_, 1, "missing 'covers' or 'leq' directive");
    }
    if (!have_mul) throw ParseError(last_line_, 1, "missing 'mul' table");
    return raw;
  }

 private:
  [[noreturn]] static void fail(const Line& line, const Token& t, const std::string& msg) {
    throw ParseError(line.number, t.column, msg);
  }

  void require_elements(const RawTables& raw, const Line& line, const Token& t) const {
    if (raw.names.empty()) fail(line, t, "'" + t.text + "' before 'elements'");
  }

  Element element(const Line& line, const Token& t, const std::string& name,
                  std::size_t offset) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw ParseError(line.number, t.column + offset, "unknown element '" + name + "'");
    }
    return it->second;
  }

  template <class F>
  std::vector<Element> table(const Line& header, std::size_t n, const std::string& what, F&& cell) {
    if (header.tokens.size() > 1) fail(header, header.tokens[1], "'" + what + "' takes no arguments");
    std::vector<Element> out;
    out.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (pos_ >= lines_.size()) {
        throw ParseError(last_line_, 1,
                         what + ": expected " + std::to_string(n) + " rows, found " +
                             std::to_string(r));
      }
      const Line& line = lines_[pos_++];
      if (line.tokens.size() != n) {
        const Token& at = line.tokens.size() > n ? line.tokens[n] : line.tokens.front();
        fail(line, at,
             what + " row " + std::to_string(r + 1) + " has " + std::to_string(line.tokens.size()) +
                 " entries, expected " + std::to_string(n));
      }
      for (const Token& t : line.tokens) out.push_back(cell(line, t));
    }
    return out;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 1;
  std::unordered_map<std::string, Element> index_;
};

std::pair<std::size_t, std::size_t> position_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class JsonParser {
 public:
  explicit JsonParser(std::string_view text) : text_(text) {}

  RawTables run() {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text_.begin(), text_.end());
    } catch (const nlohmann::json::parse_error& e) {
      // byte is one past the offending character
      const auto [line, col] = position_of_offset(text_, e.byte == 0 ? 0 : e.byte - 1);
      throw ParseError(line, col, "invalid JSON");
    }
    if (!doc.is_object()) fail("", "top level must be an object");

    RawTables raw;
    if (doc.contains("name")) {
      if (!doc["name"].is_string()) fail("name", "must be a string");
      raw.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("elements") || !doc["elements"].is_array() || doc["elements"].empty()) {
      fail("elements", "must be a non-empty array of names");
    }
    for (const auto& e : doc["elements"]) {
      if (!e.is_string()) fail("elements", "names must be strings");
      const auto s = e.get<std::string>();
      if (index_.contains(s)) fail("elements", "duplicate element '" + s + "'");
      index_.emplace(s, static_cast<Element>(raw.names.size()));
      raw.names.push_back(s);
    }
    const std::size_t n = raw.names.size();
    if (doc.contains("covers") && doc.contains("leq")) fail("leq", "both 'covers' and 'leq' given");
    if (doc.contains("covers")) {
      if (!doc["covers"].is_array()) fail("covers", "must be an array of pairs");
      for (const auto& c : doc["covers"]) {
        if (!c.is_array() || c.size() != 2) fail("covers", "each cover is a pair [lower, upper]");
        raw.covers.emplace_back(element("covers", c[0]), element("covers", c[1]));
      }
    } else if (doc.contains("leq")) {
      for (Element v : rows(doc["leq"], "leq", n, [&](const nlohmann::json& x) {
             if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1)) {
               fail("leq", "entries must be 0 or 1");
             }
             return static_cast<Element>(x.get<int>());
           })) {
        raw.leq.push_back(static_cast<char>(v));
      }
    } else if (n > 1) {
      fail("", "missing 'covers' or 'leq'");
    }
    if (!doc.contains("mul")) fail("", "missing 'mul'");
    auto cell = [&](const char* key) {
      return [this, key](const nlohmann::json& x) { return element(key, x); };
    };
    raw.mul = rows(doc["mul"], "mul", n, cell("mul"));
    if (doc.contains("res")) raw.res = rows(doc["res"], "res", n, cell("res"));
    for (const auto& [key, value] : doc.items()) {
      static const char* known[] = {"name", "elements", "covers", "leq", "mul", "res"};
      if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
        fail(key, "unknown key");
      }
    }
    return raw;
  }

 private:
  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    std::size_t line = 1;
    std::size_t col = 1;
    if (!key.empty()) {
      const auto at = text_.find("\"" + key + "\"");
      if (at != std::string_view::npos) std::tie(line, col) = position_of_offset(text_, at);
    }
    throw ParseError(line, col, key.empty() ? msg : key + ": " + msg);
  }

  Element element(const std::string& key, const nlohmann::json& x) const {
    if (!x.is_string()) fail(key, "entries must be element names");
    auto it = index_.find(x.get<std::string>());
    if (it == index_.end()) fail(key, "unknown element '" + x.get<std::string>() + "'");
    return it->second;
  }

  template <class F>
  std::vector<Element> rows(const nlohmann::json& t, const std::string& key, std::size_t n,
                            F&& cell) const {
    if (!t.is_array() || t.size() != n) {
      fail(key, "expected " + std::to_string(n) + " rows");
    }
    std::vector<Element> out;
    for (std::size_t r = 0; r < n; ++r) {
      if (!t[r].is_array() || t[r].size() != n) {
        fail(key, "row " + std::to_string(r + 1) + " has " +
                      std::to_string(t[r].is_array() ? t[r].size() : 0) + " entries, expected " +
                      std::to_string(n));
      }
      for (const auto& x : t[r]) out.push_back(cell(x));
    }
    return out;
  }

  std::string_view text_;
  std::unordered_map<std::string, Element> index_;
};

void check_name(const std::string& s) {
  const bool bad = s.empty() || std::any_of(s.begin(), s.end(), [](char c) {
                     return std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '<';
                   });
  if (bad) throw Error("element name '" + s + "' cannot be written in the text format");
}

}  // namespace

RawTables parse_raw(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return JsonParser(text).run();
  return TextParser(text).run();
}

ResiduatedLattice parse_algebra(std::string_view text) { return validate(parse_raw(text)); }

std::string serialize_text(const ResiduatedLattice& a) {
  const std::size_t n = a.size();
  std::ostringstream out;
  out << "name " << a.name() << '\n';
  out << "elements";
  for (const auto& s : a.names()) {
    check_name(s);
    out << ' ' << s;
  }
  out << '\n';
  if (n > 1) {
    out << "covers";
    for (const auto& [lo, hi] : a.lattice().covers()) out << ' ' << a.name_of(lo) << '<' << a.name_of(hi);
    out << '\n';
  }
  auto table = [&](const char* title, auto op) {
    out << title << '\n';
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) out << (y ? " " : "") << a.name_of(op(x, y));
      out << '\n';
    }
  };
  table("mul", [&](Element x, Element y) { return a.mul(x, y); });
  table("res", [&](Element x, Element y) { return a.res(x, y); });
  return out.str();
}

std::string serialize_json(const ResiduatedLattice& a) {
  const std::size_t n = a.size();
  nlohmann::ordered_json doc;
  doc["name"] = a.name();
  doc["elements"] = std::vector<std::string>(a.names().begin(), a.names().end());
  auto covers = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : a.lattice().covers()) covers.push_back({a.name_of(lo), a.name_of(hi)});
  doc["covers"] = covers;
  auto table = [&](auto op) {
    auto rows = nlohmann::ordered_json::array();
    for (Element x = 0; x < n; ++x) {
      auto row = nlohmann::ordered_json::array();
      for (Element y = 0; y < n; ++y) row.push_back(a.name_of(op(x, y)));
      rows.push_back(row);
    }
    return rows;
  };
  doc["mul"] = table([&](Element x, Element y) { return a.mul(x, y); });
  doc["res"] = table([&](Element x, Element y) { return a.res(x, y); });
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

ResiduatedLattice load_algebra(std::string_view spec) {
  if (auto a = catalog_lookup(spec)) return std::move(*a);
  return parse_algebra(read_file(std::filesystem::path(spec)));
}

}  // namespace reslat
