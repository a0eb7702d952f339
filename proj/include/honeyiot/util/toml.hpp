// Minimal TOML subset parser: comments, [tables], [[arrays of tables]],
// bare keys, basic strings, integers, floats, booleans, and single-line
// arrays of scalars. Covers the configuration files this project reads.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace honeyiot::tomlmini {

struct Value {
  enum class Kind { String, Int, Float, Bool, Array };
  Kind kind = Kind::String;
  std::string s;
  int64_t i = 0;
  double f = 0.0;
  bool b = false;
  std::vector<Value> arr;

  // Numeric coercion: integers read as floats where a float is expected.
  double as_double() const { return kind == Kind::Int ? static_cast<double>(i) : f; }
};

using Table = std::map<std::string, Value>;

struct Document {
  Table root;
  std::map<std::string, Table> tables;
  std::map<std::string, std::vector<Table>> table_arrays;

  const Table* find_table(const std::string& name) const {
    auto it = tables.find(name);
    return it == tables.end() ? nullptr : &it->second;
  }
};

// Throws std::runtime_error with a line number on malformed input.
Document parse(std::string_view text);
Document parse_file(const std::string& path);

std::optional<std::string> get_str(const Table& t, const std::string& key);
std::optional<int64_t> get_int(const Table& t, const std::string& key);
std::optional<double> get_double(const Table& t, const std::string& key);
std::optional<bool> get_bool(const Table& t, const std::string& key);
std::vector<std::string> get_str_array(const Table& t, const std::string& key);

}  // namespace honeyiot::tomlmini
