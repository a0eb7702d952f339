#include "honeyiot/util/toml.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "honeyiot/util/fsio.hpp"

namespace honeyiot::tomlmini {

namespace {

[[noreturn]] void fail(size_t line, const std::string& msg) {
  throw std::runtime_error("toml parse error at line " + std::to_string(line) + ": " + msg);
}

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  size_t line = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char get() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
  void skip_to_eol() {
    while (!done() && peek() != '\n') ++pos;
  }
};

std::string parse_basic_string(Cursor& c) {
  const size_t line = c.line;
  c.get();  // opening quote
  std::string out;
  while (true) {
    if (c.done()) fail(line, "unterminated string");
    char ch = c.get();
    if (ch == '"') return out;
    if (ch == '\n') fail(line, "newline in string");
    if (ch == '\\') {
      if (c.done()) fail(line, "dangling escape");
      char esc = c.get();
      switch (esc) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        default: fail(line, std::string("unsupported escape \\") + esc);
      }
    } else {
      out.push_back(ch);
    }
  }
}

Value parse_value(Cursor& c);

Value parse_array(Cursor& c) {
  const size_t line = c.line;
  c.get();  // '['
  Value v;
  v.kind = Value::Kind::Array;
  c.skip_ws();
  while (true) {
    if (c.done()) fail(line, "unterminated array");
    if (c.peek() == ']') {
      c.get();
      return v;
    }
    v.arr.push_back(parse_value(c));
    c.skip_ws();
    if (!c.done() && c.peek() == ',') {
      c.get();
      c.skip_ws();
    }
  }
}

Value parse_scalar(Cursor& c) {
  const size_t line = c.line;
  size_t start = c.pos;
  while (!c.done()) {
    char ch = c.peek();
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ',' || ch == ']' || ch == '#') break;
    c.get();
  }
  std::string_view tok = c.text.substr(start, c.pos - start);
  if (tok.empty()) fail(line, "expected a value");
  Value v;
  if (tok == "true" || tok == "false") {
    v.kind = Value::Kind::Bool;
    v.b = (tok == "true");
    return v;
  }
  bool has_dot = tok.find('.') != std::string_view::npos;
  bool has_exp = tok.find('e') != std::string_view::npos || tok.find('E') != std::string_view::npos;
  if (has_dot || has_exp) {
    v.kind = Value::Kind::Float;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v.f);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) fail(line, "bad float");
    return v;
  }
  v.kind = Value::Kind::Int;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v.i);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) fail(line, "bad integer");
  return v;
}

Value parse_value(Cursor& c) {
  c.skip_ws();
  if (c.done()) fail(c.line, "expected a value");
  char ch = c.peek();
  if (ch == '"') {
    Value v;
    v.kind = Value::Kind::String;
    v.s = parse_basic_string(c);
    return v;
  }
  if (ch == '[') return parse_array(c);
  return parse_scalar(c);
}

std::string parse_key(Cursor& c) {
  c.skip_ws();
  if (!c.done() && c.peek() == '"') return parse_basic_string(c);
  size_t start = c.pos;
  while (!c.done()) {
    char ch = c.peek();
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.') {
      c.get();
    } else {
      break;
    }
  }
  if (c.pos == start) fail(c.line, "expected a key");
  return std::string(c.text.substr(start, c.pos - start));
}

}  // namespace

Document parse(std::string_view text) {
  Document doc;
  Cursor c{text};
  Table* current = &doc.root;

  while (!c.done()) {
    c.skip_ws();
    if (c.done()) break;
    char ch = c.peek();
    if (ch == '\n' || ch == '\r') {
      c.get();
      continue;
    }
    if (ch == '#') {
      c.skip_to_eol();
      continue;
    }
    if (ch == '[') {
      const size_t line = c.line;
      c.get();
      bool is_array = !c.done() && c.peek() == '[';
      if (is_array) c.get();
      std::string name = parse_key(c);
      c.skip_ws();
      if (c.done() || c.get() != ']') fail(line, "expected ']'");
      if (is_array) {
        if (c.done() || c.get() != ']') fail(line, "expected ']]'");
        doc.table_arrays[name].emplace_back();
        current = &doc.table_arrays[name].back();
      } else {
        current = &doc.tables[name];
      }
      c.skip_ws();
      if (!c.done() && c.peek() == '#') c.skip_to_eol();
      continue;
    }
    const size_t line = c.line;
    std::string key = parse_key(c);
    c.skip_ws();
    if (c.done() || c.get() != '=') fail(line, "expected '=' after key '" + key + "'");
    Value v = parse_value(c);
    c.skip_ws();
    if (!c.done() && c.peek() == '#') c.skip_to_eol();
    if (!c.done() && c.peek() != '\n' && c.peek() != '\r') fail(line, "trailing characters after value");
    (*current)[key] = std::move(v);
  }
  return doc;
}

Document parse_file(const std::string& path) { return parse(read_file(path)); }

std::optional<std::string> get_str(const Table& t, const std::string& key) {
  auto it = t.find(key);
  if (it == t.end() || it->second.kind != Value::Kind::String) return std::nullopt;
  return it->second.s;
}

std::optional<int64_t> get_int(const Table& t, const std::string& key) {
  auto it = t.find(key);
  if (it == t.end() || it->second.kind != Value::Kind::Int) return std::nullopt;
  return it->second.i;
}

std::optional<double> get_double(const Table& t, const std::string& key) {
  auto it = t.find(key);
  if (it == t.end()) return std::nullopt;
  if (it->second.kind != Value::Kind::Float && it->second.kind != Value::Kind::Int) return std::nullopt;
  return it->second.as_double();
}

std::optional<bool> get_bool(const Table& t, const std::string& key) {
  auto it = t.find(key);
  if (it == t.end() || it->second.kind != Value::Kind::Bool) return std::nullopt;
  return it->second.b;
}

std::vector<std::string> get_str_array(const Table& t, const std::string& key) {
  std::vector<std::string> out;
  auto it = t.find(key);
  if (it == t.end() || it->second.kind != Value::Kind::Array) return out;
  for (const auto& v : it->second.arr) {
    if (v.kind == Value::Kind::String) out.push_back(v.s);
  }
  return out;
}

}  // namespace honeyiot::tomlmini
