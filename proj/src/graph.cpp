#include "splitword/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "splitword/errors.hpp"

namespace splitword {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in 0..64");
  adj_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  adj_[u] |= singleton(v);
  adj_[v] |= singleton(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet s : adj_) twice += size_of(s);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for_each_vertex(adj_[u] & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

bool Graph::is_complete() const {
  for (int v = 0; v < order(); ++v) {
    if (adj_[v] != (vertices() & ~singleton(v))) return false;
  }
  return true;
}

bool Graph::is_clique(VertexSet s) const {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if ((s & ~singleton(v) & ~adj_[v]) != 0) ok = false;
  });
  return ok;
}

bool Graph::is_independent(VertexSet s) const {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if ((s & adj_[v]) != 0) ok = false;
  });
  return ok;
}

Graph Graph::induced(const std::vector<int>& vs) const {
  Graph h(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

bool is_induced_embedding(const Graph& host, const Graph& pattern,
                          const Embedding& e) {
  const int p = pattern.order();
  if (static_cast<int>(e.map.size()) != p) return false;
  VertexSet used = 0;
  for (int h : e.map) {
    if (h < 0 || h >= host.order() || contains(used, h)) return false;
    used |= singleton(h);
  }
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (pattern.adjacent(i, j) != host.adjacent(e.map[i], e.map[j])) return false;
  return true;
}

namespace {

struct InducedSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> map;
  VertexSet used = 0;

  bool extend(int i) {
    const int p = pattern.order();
    if (i == p) return true;
    const int need_adj = pattern.degree(i);
    const int need_non = p - 1 - need_adj;
    for (int h = 0; h < host.order(); ++h) {
      if (contains(used, h)) continue;
      if (host.degree(h) < need_adj || host.order() - 1 - host.degree(h) < need_non)
        continue;
      bool consistent = true;
      for (int j = 0; j < i && consistent; ++j)
        consistent = pattern.adjacent(i, j) == host.adjacent(h, map[j]);
      if (!consistent) continue;
      map[i] = h;
      used |= singleton(h);
      if (extend(i + 1)) return true;
      used &= ~singleton(h);
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return std::nullopt;
  InducedSearch search{host, pattern, std::vector<int>(pattern.order(), -1)};
  if (!search.extend(0)) return std::nullopt;
  return Embedding{std::move(search.map)};
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

// ---------------------------------------------------------------------------
// Edge lists

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, int line, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(s) + "'");
  return value;
}

// Splits on `sep`, keeping empty pieces.
std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    for (std::string_view segment : split(line, ';')) {
      segment = trim(segment);
      if (segment.empty() || segment.front() == '#') continue;
      if (!g) {
        if (segment.substr(0, 2) != "n=")
          throw ParseError(line_no, "expected 'n=<int>' header");
        int n = parse_int(segment.substr(2), line_no, "vertex count");
        if (n < 0 || n > kMaxVertices)
          throw ParseError(line_no, "vertex count " + std::to_string(n) + " outside 0..64");
        g.emplace(n);
        continue;
      }
      if (segment == "(no edges)") continue;
      for (std::string_view pair : split(segment, ',')) {
        pair = trim(pair);
        if (pair.empty()) throw ParseError(line_no, "empty edge entry");
        auto dash = pair.find('-');
        if (dash == std::string_view::npos)
          throw ParseError(line_no, "malformed edge '" + std::string(pair) + "'");
        int u = parse_int(pair.substr(0, dash), line_no, "vertex id");
        int v = parse_int(pair.substr(dash + 1), line_no, "vertex id");
        if (u < 0 || v < 0 || u >= g->order() || v >= g->order())
          throw ParseError(line_no, "vertex id out of range in '" + std::string(pair) + "'");
        if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
        g->add_edge(u, v);
      }
    }
  }
  if (!g) throw ParseError(line_no, "missing 'n=<int>' header");
  return *g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  auto edges = g.edges();
  if (edges.empty()) return out + "(no edges)\n";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return out + "\n";
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  line = trim(line);
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  for (char c : line) {
    if (c < 63 || c > 126)
      throw ParseError(1, "graph6 character outside 63..126");
  }
  if (line.empty()) throw ParseError(1, "empty graph6 line");

  std::size_t pos = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126)
      throw ParseError(1, "graph6 vertex count exceeds 64");
    n = ((line[1] - 63L) << 12) | ((line[2] - 63L) << 6) | (line[3] - 63L);
    pos = 4;
  }
  if (n > kMaxVertices) throw ParseError(1, "graph6 vertex count exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t expected = (bits + 5) / 6;
  if (line.size() - pos != expected)
    throw ParseError(1, "graph6 length mismatch: expected " + std::to_string(expected) +
                            " data bytes, got " + std::to_string(line.size() - pos));

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = line[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + 63);
        chunk = filled = 0;
      }
    }
  }
  if (filled) out += static_cast<char>((chunk << (6 - filled)) + 63);
  return out;
}

GraphFormat detect_format(std::string_view text) {
  return trim(text).substr(0, 2) == "n=" ? GraphFormat::EdgeList : GraphFormat::Graph6;
}

Graph parse_graph(std::string_view text, std::optional<GraphFormat> format) {
  switch (format.value_or(detect_format(text))) {
    case GraphFormat::EdgeList:
      return parse_edge_list(text);
    case GraphFormat::Graph6:
      return parse_graph6(text);
  }
  return {};
}

// Defined here to keep errors.hpp header-only apart from these two.
NotLabellable::NotLabellable(int vertex, std::vector<int> labels)
    : Error([&] {
        std::string msg = "vertex " + std::to_string(vertex) +
                          " has a neighborhood that is not an admissible interval: {";
        for (std::size_t i = 0; i < labels.size(); ++i)
          msg += (i ? "," : "") + std::to_string(labels[i]);
        return msg + "}";
      }()),
      vertex_(vertex),
      labels_(std::move(labels)) {}

MissingVertex::MissingVertex(std::vector<int> missing)
    : Error([&] {
        std::string msg = "word is missing vertices:";
        for (int v : missing) msg += " " + std::to_string(v);
        return msg;
      }()),
      missing_(std::move(missing)) {}

}  // namespace splitword
