#ifndef CEI_HOMOLOGY_HPP
#define CEI_HOMOLOGY_HPP

#include <span>
#include <string>
#include <vector>

#include "cei/complex.hpp"
#include "cei/vertex_set.hpp"

namespace cei {

/// Coefficient field: characteristic 0 means the rationals, otherwise GF(p).
class FieldSpec {
 public:
  /// Throws std::invalid_argument unless the characteristic is 0 or a prime.
  explicit FieldSpec(int characteristic);

  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec gf(int p) { return FieldSpec(p); }

  int characteristic() const { return characteristic_; }
  /// "QQ" or "GF(p)".
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  int characteristic_;
};

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  int& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  int operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Rank over the given field. Rationals use fraction-free (Bareiss)
/// elimination on exact integers; GF(2) uses packed bit rows.
std::size_t rank(const IntMatrix& m, FieldSpec field);

/// Matrix of ∂_k from k-faces (columns) to (k-1)-faces (rows), both in
/// lexicographic order; ∂ of a vertex is the empty face.
IntMatrix boundary_matrix(const SimplicialComplex& complex, int k);

/// Reduced homology dimensions, indexed from degree -1.
struct HomologyDims {
  std::vector<long> dims;  // dims[k + 1] = dim H̃_k

  long at(int k) const {
    const auto idx = static_cast<std::size_t>(k + 1);
    return k >= -1 && idx < dims.size() ? dims[idx] : 0;
  }
  int top_degree() const { return static_cast<int>(dims.size()) - 2; }
  bool all_zero() const;
};

HomologyDims reduced_homology_dims(const SimplicialComplex& complex, FieldSpec field);

/// Same computation from an explicit, downward-closed face list.
HomologyDims reduced_homology_of_faces(std::span<const VertexSet> faces, FieldSpec field);

}  // namespace cei

#endif  // CEI_HOMOLOGY_HPP
