#include "cei/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cei {

namespace {

// Keeps the inclusion-maximal members, sorted by (size, lex).
std::vector<VertexSet> keep_maximal(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return graded_lex_less(b, a);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    const bool covered = std::any_of(out.begin(), out.end(),
                                     [&](VertexSet kept) { return s.is_subset_of(kept); });
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n) {
  for (VertexSet f : facets) {
    if (!f.is_subset_of(VertexSet::full(n))) {
      throw std::invalid_argument("facet " + to_string(f) + " outside the vertex range");
    }
  }
  facets_ = keep_maximal(std::move(facets));
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet v;
  for (VertexSet f : facets_) v |= f;
  return v;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  return facets_.back().size() - 1;
}

bool SimplicialComplex::has_face(VertexSet s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return s.is_subset_of(f); });
}

bool SimplicialComplex::is_facet(VertexSet s) const {
  return std::find(facets_.begin(), facets_.end(), s) != facets_.end();
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::vector<VertexSet> out;
  for (VertexSet f : facets_) {
    // Walk every submask of f.
    std::uint64_t sub = f.bits();
    while (true) {
      out.push_back(VertexSet(sub));
      if (sub == 0) break;
      sub = (sub - 1) & f.bits();
    }
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex gamma_complex(const Graph& g) {
  validate_standing_assumptions(g);
  const VertexSet all = g.vertices();
  std::vector<VertexSet> facets;
  for (VertexSet pair : nonedges(g)) facets.push_back(all - pair);
  for (VertexSet tri : triangles(g)) facets.push_back(all - tri);
  return SimplicialComplex(g.order(), std::move(facets));
}

SimplicialComplex facet_complex(const Graph& g) {
  const SqfIdeal ideal = complementary_edge_ideal(g);
  std::vector<VertexSet> facets;
  for (SqfMonomial u : ideal.generators()) facets.push_back(u.support);
  return SimplicialComplex(g.order(), std::move(facets));
}

SimplicialComplex stanley_reisner_complex(const SqfIdeal& ideal) {
  std::vector<VertexSet> supports;
  for (SqfMonomial u : ideal.generators()) supports.push_back(u.support);
  const VertexSet all = VertexSet::full(ideal.ambient());
  std::vector<VertexSet> facets;
  for (VertexSet t : minimal_transversals(supports)) facets.push_back(all - t);
  return SimplicialComplex(ideal.ambient(), std::move(facets));
}

SqfIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  // S is a non-face iff it meets the complement of every facet.
  const VertexSet all = VertexSet::full(complex.ambient());
  std::vector<VertexSet> complements;
  for (VertexSet f : complex.facets()) complements.push_back(all - f);
  std::vector<SqfMonomial> gens;
  for (VertexSet t : minimal_transversals(complements)) gens.push_back({t});
  return SqfIdeal(complex.ambient(), std::move(gens));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet w) {
  std::vector<VertexSet> facets;
  for (VertexSet f : complex.facets()) facets.push_back(f & w);
  return SimplicialComplex(complex.ambient(), std::move(facets));
}

SimplicialComplex induced_subcollection(const SimplicialComplex& complex, VertexSet w) {
  std::vector<VertexSet> facets;
  for (VertexSet f : complex.facets()) {
    if (f.is_subset_of(w)) facets.push_back(f);
  }
  return SimplicialComplex(complex.ambient(), std::move(facets));
}

std::optional<int> is_cone(const SimplicialComplex& complex) {
  if (complex.is_void()) return std::nullopt;
  VertexSet common = VertexSet::full(complex.ambient());
  for (VertexSet f : complex.facets()) common &= f;
  if (common.empty()) return std::nullopt;
  return common.min();
}

namespace {

bool covers(std::span<const VertexSet> seq, VertexSet target, std::size_t skip) {
  VertexSet u;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k != skip) u |= seq[k];
  }
  return target.is_subset_of(u);
}

bool well_ordered_unchecked(const SimplicialComplex& complex, std::span<const VertexSet> seq) {
  const std::size_t k = seq.size();
  if (k == 0) return false;
  const VertexSet target = complex.vertices();
  if (!covers(seq, target, k)) return false;
  // Covering is monotone, so minimality only needs single removals.
  for (std::size_t drop = 0; drop < k; ++drop) {
    if (covers(seq, target, drop)) return false;
  }
  // suffix[i] = F_i ∪ ... ∪ F_k (0-based)
  std::vector<VertexSet> suffix(k + 1);
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] | seq[i];
  for (VertexSet h : complex.facets()) {
    if (std::find(seq.begin(), seq.end(), h) != seq.end()) continue;
    bool absorbed = false;
    for (std::size_t i = 0; i + 1 < k && !absorbed; ++i) {
      absorbed = seq[i].is_subset_of(h | suffix[i + 1]);
    }
    if (!absorbed) return false;
  }
  return true;
}

}  // namespace

bool is_well_ordered_facet_cover(const SimplicialComplex& complex,
                                 std::span<const VertexSet> seq) {
  for (std::size_t a = 0; a < seq.size(); ++a) {
    if (!complex.is_facet(seq[a])) {
      throw std::invalid_argument(to_string(seq[a]) + " is not a facet");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (seq[a] == seq[b]) throw std::invalid_argument("repeated facet " + to_string(seq[a]));
    }
  }
  return well_ordered_unchecked(complex, seq);
}

std::optional<std::vector<VertexSet>> find_well_ordered_cover(const SimplicialComplex& complex,
                                                              int k_max) {
  const auto facets = complex.facets();
  const std::size_t m = facets.size();
  std::vector<VertexSet> seq;
  std::vector<char> used(m, 0);
  const VertexSet target = complex.vertices();

  // Depth-first over ordered sequences of distinct facets of a fixed length.
  auto search = [&](auto&& self, std::size_t length) -> bool {
    if (seq.size() == length) return well_ordered_unchecked(complex, seq);
    for (std::size_t k = 0; k < m; ++k) {
      if (used[k]) continue;
      used[k] = 1;
      seq.push_back(facets[k]);
      // A facet already covered by the earlier ones breaks minimality.
      bool redundant = false;
      for (std::size_t drop = 0; drop < seq.size() && !redundant; ++drop) {
        VertexSet rest;
        for (std::size_t t = 0; t < seq.size(); ++t) {
          if (t != drop) rest |= seq[t];
        }
        redundant = (seq[drop] & target).is_subset_of(rest);
      }
      if (!redundant && self(self, length)) return true;
      seq.pop_back();
      used[k] = 0;
    }
    return false;
  };

  for (int length = 1; length <= k_max && static_cast<std::size_t>(length) <= m; ++length) {
    if (search(search, static_cast<std::size_t>(length))) return seq;
  }
  return std::nullopt;
}

}  // namespace cei
