#ifndef CEI_COMPLEX_HPP
#define CEI_COMPLEX_HPP

#include <optional>
#include <span>
#include <vector>

#include "cei/graph.hpp"
#include "cei/ideal.hpp"
#include "cei/vertex_set.hpp"

namespace cei {

/// A simplicial complex on a subset of [n], stored by its facets.
///
/// Facets are kept as an inclusion antichain sorted by (size, lex). The void
/// complex has no facets at all; the irrelevant complex {∅} has the single
/// empty facet. They differ in reduced homology, so the distinction matters.
class SimplicialComplex {
 public:
  SimplicialComplex(int n, std::vector<VertexSet> facets);

  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex irrelevant(int n) { return SimplicialComplex(n, {VertexSet{}}); }
  static SimplicialComplex simplex(VertexSet s, int n) { return SimplicialComplex(n, {s}); }

  int ambient() const { return n_; }
  std::span<const VertexSet> facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  VertexSet vertices() const;
  /// -1 for the irrelevant complex; the void complex reports -2.
  int dimension() const;
  bool has_face(VertexSet s) const;
  bool is_facet(VertexSet s) const;

  /// Every face, sorted by (size, lex). Includes ∅ unless the complex is void.
  std::vector<VertexSet> faces() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int n_;
  std::vector<VertexSet> facets_;
};

/// Stanley-Reisner complex of I_c(G): complements of nonedges and triangles.
SimplicialComplex gamma_complex(const Graph& g);

/// Facet complex of I_c(G): the generator supports.
SimplicialComplex facet_complex(const Graph& g);

/// Faces of the complex are the squarefree monomials outside the ideal.
SimplicialComplex stanley_reisner_complex(const SqfIdeal& ideal);

/// Minimal non-faces. The void complex gives the unit ideal.
SqfIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// Δ_W: faces of Δ contained in W.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet w);

/// Δ^W: the facets of Δ that lie inside W.
SimplicialComplex induced_subcollection(const SimplicialComplex& complex, VertexSet w);

/// Smallest vertex lying in every facet, if any.
std::optional<int> is_cone(const SimplicialComplex& complex);

/// Checks that `seq` is a minimal facet cover F_1..F_k and that every other
/// facet H admits some i < k with F_i ⊆ H ∪ F_{i+1} ∪ ... ∪ F_k.
/// Throws std::invalid_argument when an entry is not a facet or repeats.
bool is_well_ordered_facet_cover(const SimplicialComplex& complex,
                                 std::span<const VertexSet> seq);

/// First accepted sequence by length, then by facet index lexicographically.
std::optional<std::vector<VertexSet>> find_well_ordered_cover(const SimplicialComplex& complex,
                                                              int k_max);

}  // namespace cei

#endif  // CEI_COMPLEX_HPP
