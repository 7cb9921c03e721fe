#pragma once

/**
 * Text formats for graphs.
 *
 * Family DSL:
 *   null:N  path:N  cycle:N  complete:N  kbip:M,N  bn:N
 *   join(S1,S2)  njoin(K,S)  edges:N:a-b,c-d,...
 * Whitespace between tokens is ignored.
 *
 * Edge-list format: first line "n m", then m lines "u v" (0-indexed).
 */

#include "polyvol/error.hpp"
#include "polyvol/family.hpp"
#include "polyvol/graph.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyvol {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_space();
    std::string w;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      w += text_[pos_];
      advance();
    }
    if (w.empty()) fail("expected a family name");
    return w;
  }

  int integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > std::numeric_limits<int>::max()) fail("integer too large");
      advance();
    }
    return static_cast<int>(v);
  }

  /// True if the upcoming text is "<digits>-" (start of an edge item).
  bool at_edge_item() {
    skip_space();
    std::size_t p = pos_;
    if (p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p]))) return false;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == '-';
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline FamilySpec parse_spec(Cursor& in) {
  const std::size_t line = in.line();
  const std::size_t col = in.column();
  const std::string name = in.word();
  auto checked = [&](FamilySpec spec) {
    try {
      (void)build_family(spec);
    } catch (const ParameterError& e) {
      throw ParseError(e.what(), line, col);
    }
    return spec;
  };

  if (name == "join") {
    in.expect('(');
    FamilySpec a = parse_spec(in);
    in.expect(',');
    FamilySpec b = parse_spec(in);
    in.expect(')');
    return checked(FamilySpec::join(std::move(a), std::move(b)));
  }
  if (name == "njoin") {
    in.expect('(');
    const int k = in.integer();
    in.expect(',');
    FamilySpec s = parse_spec(in);
    in.expect(')');
    return checked(FamilySpec::njoin(k, std::move(s)));
  }

  in.expect(':');
  if (name == "kbip") {
    const int m = in.integer();
    in.expect(',');
    return checked(FamilySpec::complete_bipartite(m, in.integer()));
  }
  if (name == "edges") {
    const int n = in.integer();
    in.expect(':');
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    while (in.at_edge_item()) {
      const std::size_t el = in.line();
      const std::size_t ec = in.column();
      const int u = in.integer();
      in.expect('-');
      const int v = in.integer();
      if (u >= n || v >= n) throw ParseError("edge endpoint out of range", el, ec);
      if (u == v) throw ParseError("self-loop", el, ec);
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw ParseError("duplicate edge", el, ec);
      edges.push_back({u, v});
      // A comma not followed by an edge belongs to the enclosing join/njoin.
      Cursor rewind = in;
      if (!in.accept(',') || !in.at_edge_item()) {
        in = rewind;
        break;
      }
    }
    return checked(FamilySpec::explicit_edges(n, std::move(edges)));
  }

  const int n = in.integer();
  if (name == "null") return checked(FamilySpec::null(n));
  if (name == "path") return checked(FamilySpec::path(n));
  if (name == "cycle") return checked(FamilySpec::cycle(n));
  if (name == "complete") return checked(FamilySpec::complete(n));
  if (name == "bn") return checked(FamilySpec::bn(n));
  throw ParseError("unknown family '" + name + "'", line, col);
}

}  // namespace detail

inline FamilySpec parse_family(std::string_view text) {
  detail::Cursor in(text);
  FamilySpec spec = detail::parse_spec(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return spec;
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string row;
  std::size_t line_no = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, row)) {
      ++line_no;
      if (row.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto parse_pair = [&](const char* what) {
    std::istringstream fields(row);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      const auto col = row.find_first_not_of(" \t");
      throw ParseError(std::string("expected ") + what, line_no, col == std::string::npos ? 1 : col + 1);
    }
    return std::pair<long long, long long>{a, b};
  };

  if (!next_line()) throw ParseError("empty edge-list file", 1, 1);
  const auto [n, m] = parse_pair("'n m' header");
  if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range", line_no, 1);
  if (m < 0) throw ParseError("negative edge count", line_no, 1);

  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i), line_no + 1, 1);
    const auto [u, v] = parse_pair("'u v' edge");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range", line_no, 1);
    if (u == v) throw ParseError("self-loop", line_no, 1);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) throw ParseError("duplicate edge", line_no, 1);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line()) throw ParseError("unexpected content after the last edge", line_no, 1);
  return g;
}

/// Text of `path`; an empty optional if the file cannot be opened.
inline std::optional<std::string> read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) return std::nullopt;
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// True when the first non-blank line consists of exactly two integers.
inline bool looks_like_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string row;
  while (std::getline(in, row)) {
    if (row.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(row);
    long long a = 0;
    long long b = 0;
    std::string extra;
    return (fields >> a >> b) && !(fields >> extra);
  }
  return false;
}

}  // namespace polyvol
