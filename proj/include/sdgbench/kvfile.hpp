#pragma once

// Minimal sectioned key-value text format shared by schema files and
// experiment configs:
//
//   # comment (line start only)
//   [section name]
//   key = value
//
// Section order and key order are preserved. Duplicate keys within a section
// are rejected so typos fail loudly instead of being silently shadowed.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdgbench/error.hpp"

namespace sdgbench {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline double parse_double(std::string_view s, const std::string& what) {
  double v = 0;
  auto t = trim(s);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size())
    throw Error("invalid number for " + what + ": '" + std::string(t) + "'");
  return v;
}

inline long long parse_int(std::string_view s, const std::string& what) {
  long long v = 0;
  auto t = trim(s);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size())
    throw Error("invalid integer for " + what + ": '" + std::string(t) + "'");
  return v;
}

inline std::uint64_t parse_u64(std::string_view s, const std::string& what) {
  std::uint64_t v = 0;
  auto t = trim(s);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size())
    throw Error("invalid unsigned integer for " + what + ": '" + std::string(t) + "'");
  return v;
}

inline bool parse_bool(std::string_view s, const std::string& what) {
  auto t = trim(s);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw Error("invalid boolean for " + what + ": '" + std::string(t) + "'");
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    auto item = trim(s.substr(pos, comma - pos));
    if (!item.empty()) out.emplace_back(item);
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

struct KvSection {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* find(std::string_view key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }

  const std::string& require(std::string_view key) const {
    const std::string* v = find(key);
    if (!v) throw Error("section [" + name + "] is missing key '" + std::string(key) + "'");
    return *v;
  }
};

struct KvFile {
  std::vector<KvSection> sections;

  const KvSection* find(std::string_view name) const {
    for (const auto& s : sections)
      if (s.name == name) return &s;
    return nullptr;
  }
};

inline KvFile parse_kv_text(std::string_view text, const std::string& origin) {
  KvFile file;
  KvSection* current = nullptr;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto where = [&] { return origin + ":" + std::to_string(lineno); };
    if (line.front() == '[') {
      if (line.back() != ']') throw Error(where() + ": unterminated section header");
      auto name = detail::trim(line.substr(1, line.size() - 2));
      if (name.empty()) throw Error(where() + ": empty section name");
      file.sections.push_back(KvSection{std::string(name), {}});
      current = &file.sections.back();
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw Error(where() + ": expected 'key = value'");
    auto key = detail::trim(line.substr(0, eq));
    auto value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw Error(where() + ": empty key");
    if (!current) throw Error(where() + ": key outside any [section]");
    if (current->find(key)) throw Error(where() + ": duplicate key '" + std::string(key) + "'");
    current->entries.emplace_back(std::string(key), std::string(value));
  }
  return file;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline KvFile parse_kv_file(const std::string& path) {
  return parse_kv_text(read_text_file(path), path);
}

}  // namespace sdgbench
