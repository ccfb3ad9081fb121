#include "cei/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "cei/errors.hpp"

namespace cei {

namespace {

void sort_graded_lex(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), graded_lex_less);
}

// Keeps the inclusion-minimal members, sorted by (size, lex).
std::vector<VertexSet> keep_minimal(std::vector<VertexSet> sets) {
  sort_graded_lex(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    const bool redundant = std::any_of(out.begin(), out.end(),
                                       [&](VertexSet kept) { return kept.is_subset_of(s); });
    if (!redundant) out.push_back(s);
  }
  return out;
}

void require_nonzero(const SqfIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw std::invalid_argument(std::string(op) + ": zero ideal");
}

int require_equigenerated(const SqfIdeal& ideal, const char* op) {
  const auto d = ideal.generation_degree();
  if (!d) throw std::invalid_argument(std::string(op) + ": ideal is not equigenerated");
  return *d;
}

}  // namespace

std::string to_string(SqfMonomial m) {
  if (m.support.empty()) return "1";
  std::string out;
  for (int v : m.support) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v + 1);
  }
  return out;
}

SqfMonomial parse_monomial(const std::string& text) {
  if (text == "1") return {};
  SqfMonomial m;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'x') throw std::invalid_argument("bad monomial '" + text + "'");
    std::size_t stop = text.find('*', pos);
    if (stop == std::string::npos) stop = text.size();
    const std::string digits = text.substr(pos + 1, stop - pos - 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("bad monomial '" + text + "'");
    }
    const int label = std::stoi(digits);
    if (label < 1 || label > 64) throw std::invalid_argument("bad variable in '" + text + "'");
    m.support.insert(label - 1);
    pos = stop == text.size() ? stop : stop + 1;
  }
  return m;
}

SqfIdeal::SqfIdeal(int n, std::vector<SqfMonomial> gens) : n_(n) {
  std::vector<VertexSet> supports;
  supports.reserve(gens.size());
  for (SqfMonomial g : gens) {
    if (!g.support.is_subset_of(VertexSet::full(n))) {
      throw std::invalid_argument("generator " + to_string(g) + " outside the ambient ring");
    }
    supports.push_back(g.support);
  }
  for (VertexSet s : keep_minimal(std::move(supports))) gens_.push_back({s});
}

bool SqfIdeal::contains(VertexSet support) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](SqfMonomial g) { return g.support.is_subset_of(support); });
}

std::optional<int> SqfIdeal::generation_degree() const {
  if (gens_.empty()) return std::nullopt;
  const int d = gens_.front().degree();
  for (SqfMonomial g : gens_) {
    if (g.degree() != d) return std::nullopt;
  }
  return d;
}

std::optional<std::size_t> SqfIdeal::index_of(SqfMonomial m) const {
  auto it = std::find(gens_.begin(), gens_.end(), m);
  if (it == gens_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

SqfMonomial edge_generator(const Graph& g, const Edge& e) {
  return {g.vertices() - e.ends()};
}

SqfIdeal complementary_edge_ideal(const Graph& g) {
  validate_standing_assumptions(g);
  std::vector<SqfMonomial> gens;
  for (const Edge& e : g.edges()) gens.push_back(edge_generator(g, e));
  return SqfIdeal(g.order(), std::move(gens));
}

std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> family) {
  // Berge's incremental construction: extend the transversals of the sets
  // seen so far by one vertex of each new set they miss.
  std::vector<VertexSet> current{VertexSet{}};
  for (VertexSet edge : family) {
    if (edge.empty()) return {};
    std::vector<VertexSet> next;
    for (VertexSet t : current) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        for (int v : edge) next.push_back(t | VertexSet::singleton(v));
      }
    }
    current = keep_minimal(std::move(next));
  }
  return current;
}

std::vector<VertexSet> minimal_primes(const SqfIdeal& ideal) {
  require_nonzero(ideal, "minimal_primes");
  std::vector<VertexSet> supports;
  for (SqfMonomial g : ideal.generators()) supports.push_back(g.support);
  return minimal_transversals(supports);
}

int height(const SqfIdeal& ideal) {
  const auto primes = minimal_primes(ideal);
  if (primes.empty()) throw std::invalid_argument("height: unit ideal");
  return primes.front().size();  // sorted by size
}

bool is_unmixed(const SqfIdeal& ideal) {
  const auto primes = minimal_primes(ideal);
  return std::all_of(primes.begin(), primes.end(),
                     [&](VertexSet p) { return p.size() == primes.front().size(); });
}

SqfIdeal alexander_dual(const SqfIdeal& ideal) {
  require_nonzero(ideal, "alexander_dual");
  std::vector<SqfMonomial> gens;
  for (VertexSet p : minimal_primes(ideal)) gens.push_back({p});
  return SqfIdeal(ideal.ambient(), std::move(gens));
}

SqfIdeal degree_component(const SqfIdeal& ideal, int j) {
  if (j < 0) throw std::invalid_argument("degree_component: negative degree");
  const VertexSet all = VertexSet::full(ideal.ambient());
  std::vector<VertexSet> found;
  for (SqfMonomial g : ideal.generators()) {
    const int extra = j - g.degree();
    if (extra < 0) continue;
    std::vector<int> free;
    for (int v : all - g.support) free.push_back(v);
    if (extra > static_cast<int>(free.size())) continue;
    // All `extra`-subsets of the free variables.
    std::function<void(std::size_t, int, VertexSet)> extend = [&](std::size_t from, int left,
                                                                  VertexSet acc) {
      if (left == 0) {
        found.push_back(acc);
        return;
      }
      for (std::size_t k = from; k + static_cast<std::size_t>(left) <= free.size(); ++k) {
        extend(k + 1, left - 1, acc | VertexSet::singleton(free[k]));
      }
    };
    extend(0, extra, g.support);
  }
  std::vector<SqfMonomial> gens;
  for (VertexSet s : found) gens.push_back({s});
  return SqfIdeal(ideal.ambient(), std::move(gens));
}

Graph lcm_graph(const SqfIdeal& ideal) {
  const int d = require_equigenerated(ideal, "lcm_graph");
  const auto gens = ideal.generators();
  if (gens.size() > static_cast<std::size_t>(Graph::kMaxVertices)) {
    throw std::invalid_argument("lcm_graph: more than 62 generators");
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (lcm(gens[a], gens[b]).degree() == d + 1) {
        edges.push_back({static_cast<int>(a), static_cast<int>(b)});
      }
    }
  }
  return Graph(static_cast<int>(gens.size()), edges);
}

bool is_linearly_related(const SqfIdeal& ideal) {
  const int d = require_equigenerated(ideal, "is_linearly_related");
  const auto gens = ideal.generators();
  const std::size_t m = gens.size();
  std::vector<std::vector<std::size_t>> adjacent(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (lcm(gens[a], gens[b]).degree() == d + 1) {
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
      }
    }
  }
  std::vector<char> seen(m);
  std::vector<std::size_t> stack;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const SqfMonomial top = lcm(gens[a], gens[b]);
      std::fill(seen.begin(), seen.end(), 0);
      stack.assign(1, a);
      seen[a] = 1;
      while (!stack.empty() && !seen[b]) {
        const std::size_t w = stack.back();
        stack.pop_back();
        for (std::size_t x : adjacent[w]) {
          if (!seen[x] && gens[x].divides(top)) {
            seen[x] = 1;
            stack.push_back(x);
          }
        }
      }
      if (!seen[b]) return false;
    }
  }
  return true;
}

std::vector<VertexSet> colon_generators(std::span<const SqfMonomial> prefix, SqfMonomial u) {
  std::vector<VertexSet> quotients;
  quotients.reserve(prefix.size());
  for (SqfMonomial w : prefix) quotients.push_back(w.support - u.support);
  return keep_minimal(std::move(quotients));
}

namespace {

bool colon_is_linear(std::span<const SqfMonomial> prefix, SqfMonomial u) {
  for (VertexSet q : colon_generators(prefix, u)) {
    if (q.size() != 1) return false;
  }
  return true;
}

}  // namespace

MonomialOrderCert linear_quotient_order(const Graph& g) {
  const SqfIdeal ideal = complementary_edge_ideal(g);
  auto components = connected_components(g);
  if (components.size() > 1) throw NoOrderExists(std::move(components));

  const int n = g.order();
  std::vector<Edge> listed;
  std::vector<char> done(static_cast<std::size_t>(n * (n - 1) / 2), 0);
  VertexSet grown;

  auto list_incident = [&](int c) {
    for (int other : g.neighbors(c)) {
      const Edge e{std::min(c, other), std::max(c, other)};
      char& flag = done[static_cast<std::size_t>(pair_index(e.u, e.v))];
      if (!flag) {
        flag = 1;
        listed.push_back(e);
      }
    }
    grown.insert(c);
  };

  list_incident(0);
  const auto total = static_cast<std::size_t>(g.edge_count());
  while (listed.size() < total) {
    VertexSet reachable;
    for (int t : grown) reachable |= g.neighbors(t);
    int chosen = -1;
    for (int c : reachable - grown) {
      const bool has_unlisted = std::any_of(
          g.neighbors(c).begin(), g.neighbors(c).end(), [&](int other) {
            return !done[static_cast<std::size_t>(pair_index(std::min(c, other), std::max(c, other)))];
          });
      if (has_unlisted) {
        chosen = c;
        break;
      }
    }
    list_incident(chosen);
  }

  MonomialOrderCert cert;
  for (const Edge& e : listed) {
    const SqfMonomial u = edge_generator(g, e);
    cert.permutation.push_back(*ideal.index_of(u));
    cert.colon_steps.push_back(colon_generators(cert.order, u));
    cert.order.push_back(u);
  }
  return cert;
}

bool is_linear_quotient_order(const SqfIdeal& ideal, std::span<const std::size_t> order) {
  const auto gens = ideal.generators();
  std::vector<char> used(gens.size(), 0);
  if (order.size() != gens.size()) {
    throw std::invalid_argument("is_linear_quotient_order: not a permutation of the generators");
  }
  for (std::size_t k : order) {
    if (k >= gens.size() || used[k]) {
      throw std::invalid_argument("is_linear_quotient_order: not a permutation of the generators");
    }
    used[k] = 1;
  }
  std::vector<SqfMonomial> prefix;
  for (std::size_t k : order) {
    if (!prefix.empty() && !colon_is_linear(prefix, gens[k])) return false;
    prefix.push_back(gens[k]);
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_linear_quotient_order(const SqfIdeal& ideal) {
  const auto gens = ideal.generators();
  const std::size_t m = gens.size();
  if (m > 24) throw std::invalid_argument("find_linear_quotient_order: more than 24 generators");
  if (m == 0) return std::vector<std::size_t>{};

  // Whether the next generator is admissible depends only on the set already
  // placed, so dead prefix sets can be memoized.
  std::unordered_set<std::uint32_t> dead;
  std::vector<std::size_t> order;
  std::vector<SqfMonomial> prefix;
  std::function<bool(std::uint32_t)> search = [&](std::uint32_t placed) {
    if (order.size() == m) return true;
    if (dead.contains(placed)) return false;
    for (std::size_t k = 0; k < m; ++k) {
      if ((placed >> k) & 1U) continue;
      if (!prefix.empty() && !colon_is_linear(prefix, gens[k])) continue;
      order.push_back(k);
      prefix.push_back(gens[k]);
      if (search(placed | (std::uint32_t{1} << k))) return true;
      order.pop_back();
      prefix.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  if (search(0)) return order;
  return std::nullopt;
}

}  // namespace cei
