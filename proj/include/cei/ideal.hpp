#ifndef CEI_IDEAL_HPP
#define CEI_IDEAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cei/graph.hpp"
#include "cei/vertex_set.hpp"

namespace cei {

/// The squarefree monomial prod_{i in support} x_i.
struct SqfMonomial {
  VertexSet support;

  int degree() const { return support.size(); }
  bool divides(SqfMonomial other) const { return support.is_subset_of(other.support); }
  bool operator==(const SqfMonomial&) const = default;
};

inline SqfMonomial lcm(SqfMonomial a, SqfMonomial b) { return {a.support | b.support}; }

/// "x1*x3*x4"; the constant monomial is "1".
std::string to_string(SqfMonomial m);
/// Inverse of to_string; throws std::invalid_argument on malformed text.
SqfMonomial parse_monomial(const std::string& text);

/// Squarefree monomial ideal in K[x_1..x_n], held by its minimal generators.
/// Generators are kept as an antichain sorted by degree, then lexicographically.
class SqfIdeal {
 public:
  SqfIdeal(int n, std::vector<SqfMonomial> gens);

  int ambient() const { return n_; }
  std::span<const SqfMonomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  /// Whether the monomial with this support lies in the ideal.
  bool contains(VertexSet support) const;
  /// The common degree of all generators, if there is one.
  std::optional<int> generation_degree() const;
  /// Position of `m` among the generators, if it is one.
  std::optional<std::size_t> index_of(SqfMonomial m) const;

  bool operator==(const SqfIdeal&) const = default;

 private:
  int n_;
  std::vector<SqfMonomial> gens_;
};

/// I_c(G), one generator x_1...x_n / x_i x_j per edge {i, j}.
SqfIdeal complementary_edge_ideal(const Graph& g);

/// The generator u_e of I_c(G) for the edge e.
SqfMonomial edge_generator(const Graph& g, const Edge& e);

/// Inclusion-minimal transversals of a family of sets, sorted by
/// (size, lex). The empty family has the single transversal {}.
std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> family);

/// Minimal primes P(T) = (x_i : i in T), as the vertex sets T.
std::vector<VertexSet> minimal_primes(const SqfIdeal& ideal);
int height(const SqfIdeal& ideal);
bool is_unmixed(const SqfIdeal& ideal);
SqfIdeal alexander_dual(const SqfIdeal& ideal);

/// I_[j]: the ideal generated by the degree-j squarefree monomials of I.
SqfIdeal degree_component(const SqfIdeal& ideal, int j);

/// Graph on the generator indices: u ~ v iff deg lcm(u, v) = d + 1.
/// Requires an equigenerated ideal with at most 62 generators.
Graph lcm_graph(const SqfIdeal& ideal);

/// Path criterion on the lcm graph restricted to divisors of lcm(u, v).
bool is_linearly_related(const SqfIdeal& ideal);

/// Minimal generators of (prefix) : u, as supports of lcm(w, u) / u.
std::vector<VertexSet> colon_generators(std::span<const SqfMonomial> prefix, SqfMonomial u);

/// A linear quotient order together with the colon ideal of every step.
struct MonomialOrderCert {
  /// Indices into the ideal's generator list.
  std::vector<std::size_t> permutation;
  std::vector<SqfMonomial> order;
  /// colon_steps[i] = minimal generators of (u_1..u_{i-1}) : u_i; empty at i = 0.
  std::vector<std::vector<VertexSet>> colon_steps;
};

/// Ordering obtained by growing a vertex set T from the smallest vertex and
/// listing edges incident to the next vertex adjacent to T. Throws
/// NoOrderExists for disconnected graphs.
MonomialOrderCert linear_quotient_order(const Graph& g);

bool is_linear_quotient_order(const SqfIdeal& ideal, std::span<const std::size_t> order);

/// Exhaustive search over all generator orders (prefix sets memoized).
/// Requires at most 24 generators.
std::optional<std::vector<std::size_t>> find_linear_quotient_order(const SqfIdeal& ideal);

}  // namespace cei

#endif  // CEI_IDEAL_HPP
