#include "cei/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "cei/errors.hpp"

namespace cei {

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  out += '}';
  return out;
}

NoOrderExists::NoOrderExists(std::vector<VertexSet> components)
    : std::runtime_error([&] {
        std::string msg = "NoOrderExists: components";
        for (std::size_t k = 0; k < components.size(); ++k) {
          msg += k == 0 ? " " : ",";
          msg += to_string(components[k]);
        }
        return msg;
      }()),
      components_(std::move(components)) {}

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxVertices) {
    throw ValidationError(ValidationError::Kind::TooManyVertices,
                          "vertex count " + std::to_string(n) + " outside [0, 62]");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) {
    int u = std::min(e.u, e.v);
    int v = std::max(e.u, e.v);
    if (u < 0 || v >= n) {
      throw ValidationError(ValidationError::Kind::VertexOutOfRange,
                            "edge endpoint outside [1, " + std::to_string(n) + "]",
                            (u < 0 ? u : v) + 1);
    }
    if (u == v) {
      throw ValidationError(ValidationError::Kind::Loop,
                            "loop at vertex " + std::to_string(u + 1), u + 1);
    }
    if (adj_[static_cast<std::size_t>(u)].contains(v)) {
      throw ValidationError(ValidationError::Kind::DuplicateEdge,
                            "duplicate edge " + std::to_string(u + 1) + " " +
                                std::to_string(v + 1),
                            u + 1);
    }
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
  }
}

Graph Graph::from_labels(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [a, b] : edges) list.push_back({a - 1, b - 1});
  return Graph(n, list);
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if ((mask >> pair_index(u, v)) & 1U) {
        g.adj_[static_cast<std::size_t>(u)].insert(v);
        g.adj_[static_cast<std::size_t>(v)].insert(u);
      }
    }
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet s : adj_) twice += s.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (v > u) out.push_back({u, v});
    }
  }
  return out;
}

std::uint64_t Graph::edge_mask() const {
  std::uint64_t mask = 0;
  for (const Edge& e : edges()) mask |= std::uint64_t{1} << pair_index(e.u, e.v);
  return mask;
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(pos, kHeader.size()) == kHeader) pos += kHeader.size();
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;

  if (pos >= end) throw ParseError("empty graph6 string", pos);
  const int first = static_cast<unsigned char>(text[pos]);
  if (first == 126) throw ParseError("graph6 orders above 62 are not supported", pos);
  if (first < 63 || first > 126) throw ParseError("invalid graph6 order byte", pos);
  const int n = first - 63;
  const std::size_t body_start = pos + 1;

  const int nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (end - body_start != nbytes) {
    throw ParseError("graph6 body has " + std::to_string(end - body_start) +
                         " bytes, expected " + std::to_string(nbytes),
                     std::min(end, body_start + nbytes));
  }

  std::vector<Edge> edges;
  int bit = 0;
  for (std::size_t b = 0; b < nbytes; ++b) {
    const int c = static_cast<unsigned char>(text[body_start + b]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 data byte", body_start + b);
    const int value = c - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (value >> k) & 1;
      if (bit >= nbits) {
        if (set) throw ParseError("nonzero graph6 padding bit", body_start + b);
        continue;
      }
      if (set) {
        // bit index -> (u, v) in column order
        int v = 1;
        while (v * (v + 1) / 2 <= bit) ++v;
        const int u = bit - v * (v - 1) / 2;
        edges.push_back({u, v});
      }
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int value = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(value + 63);
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((value << (6 - filled)) + 63);
  return out;
}

// ---------------------------------------------------------------------------
// edge list

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;

  // Next non-blank line, with its starting offset; false at end of input.
  bool next(std::string_view& line, std::size_t& offset) {
    while (pos < text.size()) {
      std::size_t stop = text.find('\n', pos);
      if (stop == std::string_view::npos) stop = text.size();
      line = text.substr(pos, stop - pos);
      offset = pos;
      pos = stop + 1;
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) return true;
    }
    return false;
  }
};

// Splits a line into unsigned integers, reporting the offset of bad tokens.
std::vector<int> read_ints(std::string_view line, std::size_t offset) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) {
      throw ParseError("expected an integer, got '" + std::string(line.substr(i, j - i)) + "'",
                       offset + i);
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  std::size_t offset = 0;
  if (!reader.next(line, offset)) throw ParseError("missing vertex-count header", text.size());
  const std::vector<int> header = read_ints(line, offset);
  if (header.size() != 1) throw ParseError("header must hold exactly the vertex count", offset);
  const int n = header[0];
  if (n > Graph::kMaxVertices) {
    throw ValidationError(ValidationError::Kind::TooManyVertices,
                          "vertex count " + std::to_string(n) + " exceeds 62");
  }

  std::vector<Edge> edges;
  while (reader.next(line, offset)) {
    const std::vector<int> ends = read_ints(line, offset);
    if (ends.size() != 2) throw ParseError("edge line must hold two vertex labels", offset);
    for (int label : ends) {
      if (label < 1 || label > n) {
        throw ValidationError(ValidationError::Kind::VertexOutOfRange,
                              "vertex label " + std::to_string(label) + " outside [1, " +
                                  std::to_string(n) + "]",
                              label);
      }
    }
    edges.push_back({ends[0] - 1, ends[1] - 1});
  }
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

// ---------------------------------------------------------------------------
// predicates

void validate_standing_assumptions(const Graph& g) {
  if (g.order() < 4) {
    throw ValidationError(ValidationError::Kind::AmbientTooSmall,
                          "AmbientTooSmall: need n >= 4, got " + std::to_string(g.order()));
  }
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw ValidationError(ValidationError::Kind::IsolatedVertex,
                            "IsolatedVertex(" + std::to_string(v + 1) + ")", v + 1);
    }
  }
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen = unseen - comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_forest(const Graph& g) {
  return g.edge_count() ==
         g.order() - static_cast<int>(connected_components(g).size());
}

bool is_tree(const Graph& g) { return is_forest(g) && is_connected(g); }

bool has_cycle(const Graph& g) { return !is_forest(g); }

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v > u && g.neighbors(u).intersects(g.neighbors(v))) return false;
    }
  }
  return true;
}

bool is_disjoint_union_of_edges(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) return false;
  }
  return g.order() > 0;
}

bool is_chordal(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search; ties go to the smallest index.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  VertexSet numbered;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v : g.vertices() - numbered) {
      if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) {
        best = v;
      }
    }
    visit.push_back(best);
    numbered.insert(best);
    for (int w : g.neighbors(best) - numbered) ++weight[static_cast<std::size_t>(w)];
  }
  // Elimination order is the reverse visit order: the neighbours of v that
  // are eliminated after v must form a clique.
  VertexSet later;
  for (int v : visit) {
    const VertexSet higher = g.neighbors(v) & later;
    for (int w : higher) {
      if (!(higher - VertexSet::singleton(w)).is_subset_of(g.neighbors(w))) return false;
    }
    later.insert(v);
  }
  return true;
}

std::vector<VertexSet> triangles(const Graph& g) {
  std::vector<VertexSet> out;
  for (int i = 0; i < g.order(); ++i) {
    for (int j : g.neighbors(i)) {
      if (j <= i) continue;
      for (int k : g.neighbors(i) & g.neighbors(j)) {
        if (k > j) {
          out.push_back(VertexSet::singleton(i) | VertexSet::singleton(j) |
                        VertexSet::singleton(k));
        }
      }
    }
  }
  return out;
}

std::vector<VertexSet> nonedges(const Graph& g) {
  std::vector<VertexSet> out;
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      if (!g.adjacent(i, j)) out.push_back(VertexSet::singleton(i) | VertexSet::singleton(j));
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (VertexSet pair : nonedges(g)) {
    edges.push_back({pair.min(), (pair - VertexSet::singleton(pair.min())).min()});
  }
  return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v : s) index[static_cast<std::size_t>(v)] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) {
      edges.push_back({index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]});
    }
  }
  return Graph(s.size(), edges);
}

Graph line_graph(const Graph& g) {
  const std::vector<Edge> es = g.edges();
  std::vector<Edge> adj;
  for (std::size_t a = 0; a < es.size(); ++a) {
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      if (es[a].ends().intersects(es[b].ends())) {
        adj.push_back({static_cast<int>(a), static_cast<int>(b)});
      }
    }
  }
  return Graph(static_cast<int>(es.size()), adj);
}

}  // namespace cei
