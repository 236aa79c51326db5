#pragma once

#include "digraph.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace chromprof {

// Text format: first significant line is n, each further line "u v" is an
// arc u -> v. Blank lines and lines starting with '#' are ignored.

namespace detail {

inline auto trim(std::string_view s) -> std::string_view {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline auto parse_int(std::string_view tok, int line, const char *what) -> int {
  if (tok.empty())
    throw ParseError(line, std::string("missing ") + what);
  long long value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
    value = value * 10 + (c - '0');
    if (value > 1'000'000)
      throw ParseError(line, std::string(what) + " too large");
  }
  return static_cast<int>(value);
}

} // namespace detail

inline auto parse_digraph(std::string_view text) -> Digraph {
  std::optional<Digraph> d;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = detail::trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#')
      continue;
    std::istringstream fields{std::string(line)};
    std::string a, b, extra;
    fields >> a >> b >> extra;
    if (!d) {
      if (!b.empty())
        throw ParseError(line_no, "header must be a single vertex count");
      d.emplace(detail::parse_int(a, line_no, "vertex count"));
      continue;
    }
    if (b.empty() || !extra.empty())
      throw ParseError(line_no, "expected 'u v'");
    const int u = detail::parse_int(a, line_no, "vertex");
    const int v = detail::parse_int(b, line_no, "vertex");
    if (u >= d->vertex_count() || v >= d->vertex_count())
      throw ParseError(line_no, "endpoint out of range 0.." + std::to_string(d->vertex_count() - 1));
    if (u == v)
      throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    d->add_arc(u, v);
  }
  if (!d)
    throw ParseError(std::max(line_no, 1), "missing header");
  return *d;
}

inline auto serialize_digraph(const Digraph &d) -> std::string {
  std::string out = std::to_string(d.vertex_count()) + "\n";
  for (auto [u, v] : d.arcs())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline auto to_dot(const Digraph &d, std::string_view name = "D") -> std::string {
  std::string out = "digraph " + std::string(name) + " {\n";
  for (int v = 0; v < d.vertex_count(); ++v)
    out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : d.arcs())
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

inline auto read_digraph_file(const std::string &path) -> Digraph {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

inline auto write_text_file(const std::string &path, const std::string &content) -> void {
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write " + path);
  out << content;
}

} // namespace chromprof
