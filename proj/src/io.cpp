#include "reflex/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "reflex/error.hpp"

namespace reflex {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& msg) {
  fail(ErrorCode::Parse,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back({std::string(line.substr(i, j - i)), lineno, i + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

Integer to_integer(const Token& t) {
  const std::string& s = t.text;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) parse_error(t.line, t.column, "expected an integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      parse_error(t.line, t.column + i, "expected an integer, got '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

std::size_t to_count(const Token& t) {
  Integer v = to_integer(t);
  if (v < 0 || !v.fits_ulong_p()) parse_error(t.line, t.column, "expected a nonnegative count");
  return v.get_ui();
}

}  // namespace

Polytope parse_polytope(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) parse_error(1, 1, "missing header 'd n'");
  const auto& header = lines[0];
  if (header.size() != 2)
    parse_error(header[0].line, header[0].column, "header must be 'd n'");
  const std::size_t d = to_count(header[0]);
  const std::size_t n = to_count(header[1]);
  if (d == 0) parse_error(header[0].line, header[0].column, "dimension must be positive");
  if (lines.size() - 1 < n) {
    const auto& last = lines.back().back();
    parse_error(last.line + 1, 1,
                "expected " + std::to_string(n) + " vertex lines, found " +
                    std::to_string(lines.size() - 1));
  }
  if (lines.size() - 1 > n) {
    const auto& extra = lines[n + 1][0];
    parse_error(extra.line, extra.column, "unexpected data after " + std::to_string(n) + " vertices");
  }
  std::vector<IntVector> pts;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& toks = lines[i];
    if (toks.size() != d) {
      const auto& t = toks.size() > d ? toks[d] : toks.back();
      parse_error(t.line, t.column,
                  "expected " + std::to_string(d) + " coordinates, found " + std::to_string(toks.size()));
    }
    IntVector v;
    for (const auto& t : toks) v.push_back(to_integer(t));
    pts.push_back(std::move(v));
  }
  return Polytope::hull(pts);
}

Polytope read_polytope_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Parse, "cannot open " + path);
    buf << in.rdbuf();
  }
  return parse_polytope(buf.str());
}

std::string format_polytope(const Polytope& p) {
  std::ostringstream out;
  out << p.dim() << ' ' << p.vertices().size() << '\n';
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  }
  return out.str();
}

IntVector parse_vector(std::string_view text) {
  IntVector v;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (part.empty()) parse_error(1, pos + 1, "empty coordinate in '" + std::string(text) + "'");
    v.push_back(to_integer({std::string(part), 1, pos + 1}));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return v;
}

}  // namespace reflex
