#include "pdom/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string_view>

namespace pdom {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(what + " (line " + std::to_string(line) + ", byte " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim_newline(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Graph decode_graph6(std::string_view text, int line) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();

  auto take = [&]() -> int {
    if (pos >= text.size()) {
      throw ParseError("graph6 string ends early", line, static_cast<int>(pos) + 1);
    }
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) {
      throw ParseError("byte outside graph6 range 63..126", line, static_cast<int>(pos) + 1);
    }
    ++pos;
    return c - kBias;
  };

  if (pos >= text.size()) throw ParseError("empty graph6 string", line, 1);
  long long order = take();
  if (order == 63) {
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      order = 0;
      for (int i = 0; i < 6; ++i) order = (order << 6) | take();
    } else {
      order = 0;
      for (int i = 0; i < 3; ++i) order = (order << 6) | take();
    }
  }
  if (order > kMaxOrder) {
    throw CapacityError("graph6 order " + std::to_string(order) + " exceeds the cap of " +
                        std::to_string(kMaxOrder));
  }

  const int n = static_cast<int>(order);
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bit_count + 5) / 6;
  if (text.size() - pos != body) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                         " bytes, expected " + std::to_string(body),
                     line, static_cast<int>(pos) + 1);
  }

  std::vector<Graph::Edge> edges;
  std::size_t k = 0;
  const std::size_t body_start = pos;
  int chunk = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) chunk = take();
      if (chunk & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0 && (chunk & ((1 << (6 - k % 6)) - 1)) != 0) {
    throw ParseError("nonzero padding bits in graph6 body", line,
                     static_cast<int>(body_start + body));
  }
  return Graph(n, edges);
}

}  // namespace

Graph parse_graph6(const std::string& text) { return decode_graph6(trim_newline(text), 1); }

std::string write_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    const VertexSet row = g.neighbors(j);
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (row.contains(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto view = trim_newline(line);
    if (view.empty()) continue;
    out.push_back(decode_graph6(view, number));
  }
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  int declared = -1;
  int highest = -1;
  bool seen_content = false;
  std::vector<Graph::Edge> edges;

  auto parse_int = [&](std::string_view token, int column) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
      throw ParseError("expected a nonnegative integer, got '" + std::string(token) + "'",
                       number, column);
    }
    return value;
  };

  while (std::getline(in, line)) {
    ++number;
    std::vector<std::pair<std::string_view, int>> tokens;
    const std::string_view view = trim_newline(line);
    std::size_t i = 0;
    while (i < view.size()) {
      while (i < view.size() && (view[i] == ' ' || view[i] == '\t')) ++i;
      const std::size_t start = i;
      while (i < view.size() && view[i] != ' ' && view[i] != '\t') ++i;
      if (i > start) tokens.emplace_back(view.substr(start, i - start), static_cast<int>(start) + 1);
    }
    if (tokens.empty() || tokens.front().first.front() == '#') continue;

    if (!seen_content && tokens.front().first == "n") {
      seen_content = true;
      if (tokens.size() != 2) throw ParseError("order line must be 'n <order>'", number, 1);
      declared = parse_int(tokens[1].first, tokens[1].second);
      if (declared > kMaxOrder) {
        throw CapacityError("declared order " + std::to_string(declared) + " exceeds the cap of " +
                            std::to_string(kMaxOrder));
      }
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) {
      throw ParseError("edge line must hold exactly two vertex indices", number,
                       tokens.size() > 2 ? tokens[2].second : 1);
    }
    const int u = parse_int(tokens[0].first, tokens[0].second);
    const int v = parse_int(tokens[1].first, tokens[1].second);
    if (u == v) throw ParseError("self-loop", number, tokens[1].second);
    if (declared >= 0 && (u >= declared || v >= declared)) {
      throw ParseError("vertex index beyond declared order", number,
                       u >= declared ? tokens[0].second : tokens[1].second);
    }
    if (u >= kMaxOrder || v >= kMaxOrder) {
      throw CapacityError("vertex index exceeds the cap of " + std::to_string(kMaxOrder));
    }
    highest = std::max({highest, u, v});
    edges.emplace_back(u, v);
  }
  return Graph(declared >= 0 ? declared : highest + 1, edges);
}

std::string write_dot(const Graph& g, VertexSet highlight) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (highlight.contains(v)) out << " [shape=box, style=filled, fillcolor=lightgray]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pdom
