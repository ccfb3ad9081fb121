#include "cei/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace cei {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

using FaceGroups = std::vector<std::vector<VertexSet>>;

// groups[s] = faces with s vertices, lexicographically sorted.
FaceGroups group_by_size(std::span<const VertexSet> faces) {
  FaceGroups groups;
  for (VertexSet f : faces) {
    const auto s = static_cast<std::size_t>(f.size());
    if (groups.size() <= s) groups.resize(s + 1);
    groups[s].push_back(f);
  }
  for (auto& g : groups) {
    std::sort(g.begin(), g.end(), lex_less);
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
  return groups;
}

std::size_t position(const std::vector<VertexSet>& sorted, VertexSet face) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), face, lex_less);
  if (it == sorted.end() || *it != face) {
    throw std::invalid_argument("face list is not closed under taking subsets");
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

// Signed boundary, rows indexed by `lower`, columns by `upper`.
IntMatrix boundary_between(const std::vector<VertexSet>& lower,
                           const std::vector<VertexSet>& upper) {
  IntMatrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    int r = 0;
    for (int v : upper[c]) {
      const std::size_t row = position(lower, upper[c] - VertexSet::singleton(v));
      m(row, c) = (r % 2 == 0) ? 1 : -1;
      ++r;
    }
  }
  return m;
}

std::size_t rank_gf2_columns(std::vector<std::vector<std::uint64_t>> columns) {
  if (columns.empty()) return 0;
  const std::size_t words = columns.front().size();
  std::vector<std::vector<std::uint64_t>> basis(words * 64);
  std::vector<char> has(words * 64, 0);
  std::size_t r = 0;
  for (auto& col : columns) {
    while (true) {
      std::size_t w = 0;
      while (w < words && col[w] == 0) ++w;
      if (w == words) break;
      const std::size_t pivot = w * 64 + static_cast<std::size_t>(std::countr_zero(col[w]));
      if (!has[pivot]) {
        has[pivot] = 1;
        basis[pivot] = col;
        ++r;
        break;
      }
      for (std::size_t k = w; k < words; ++k) col[k] ^= basis[pivot][k];
    }
  }
  return r;
}

// Boundary rank over GF(2) without materializing the integer matrix.
std::size_t boundary_rank_gf2(const std::vector<VertexSet>& lower,
                              const std::vector<VertexSet>& upper) {
  if (lower.empty() || upper.empty()) return 0;
  const std::size_t words = (lower.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> columns(upper.size(),
                                                  std::vector<std::uint64_t>(words, 0));
  for (std::size_t c = 0; c < upper.size(); ++c) {
    for (int v : upper[c]) {
      const std::size_t row = position(lower, upper[c] - VertexSet::singleton(v));
      columns[c][row / 64] ^= std::uint64_t{1} << (row % 64);
    }
  }
  return rank_gf2_columns(std::move(columns));
}

std::size_t rank_mod_p(const IntMatrix& m, int p) {
  std::vector<std::vector<int>> a(m.rows, std::vector<int>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = ((m(r, c) % p) + p) % p;
  }
  auto inverse = [p](int x) {
    // Fermat: x^(p-2)
    long long result = 1, base = x, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<int>(result);
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    const long long inv = inverse(a[rank][c]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (a[r][c] == 0) continue;
      const long long factor = a[r][c] * inv % p;
      for (std::size_t k = c; k < m.cols; ++k) {
        a[r][k] = static_cast<int>(((a[r][k] - factor * a[rank][k]) % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_bareiss(const IntMatrix& m) {
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = m(r, c);
  }
  cpp_int previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      for (std::size_t k = c + 1; k < m.cols; ++k) {
        // Exact: every entry stays a minor of the original matrix.
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / previous;
      }
      a[r][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

FieldSpec::FieldSpec(int characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw std::invalid_argument("field characteristic must be 0 or prime, got " +
                                std::to_string(characteristic));
  }
  if (characteristic > 46337) {
    throw std::invalid_argument("field characteristic too large for 32-bit arithmetic");
  }
}

std::string FieldSpec::name() const {
  return characteristic_ == 0 ? "QQ" : "GF(" + std::to_string(characteristic_) + ")";
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::size_t rank(const IntMatrix& m, FieldSpec field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.characteristic() == 0) return rank_bareiss(m);
  if (field.characteristic() == 2) {
    const std::size_t words = (m.rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> columns(m.cols, std::vector<std::uint64_t>(words, 0));
    for (std::size_t c = 0; c < m.cols; ++c) {
      for (std::size_t r = 0; r < m.rows; ++r) {
        if (m(r, c) % 2 != 0) columns[c][r / 64] |= std::uint64_t{1} << (r % 64);
      }
    }
    return rank_gf2_columns(std::move(columns));
  }
  return rank_mod_p(m, field.characteristic());
}

IntMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
  if (k < -1) throw std::invalid_argument("boundary_matrix: degree below -1");
  const std::vector<VertexSet> faces = complex.faces();
  const FaceGroups groups = group_by_size(faces);
  auto group = [&](int dim) -> std::vector<VertexSet> {
    const int s = dim + 1;
    if (s < 0 || static_cast<std::size_t>(s) >= groups.size()) return {};
    return groups[static_cast<std::size_t>(s)];
  };
  return boundary_between(group(k - 1), group(k));
}

bool HomologyDims::all_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](long d) { return d == 0; });
}

HomologyDims reduced_homology_of_faces(std::span<const VertexSet> faces, FieldSpec field) {
  HomologyDims out;
  if (faces.empty()) return out;  // void complex
  const FaceGroups groups = group_by_size(faces);
  const std::size_t levels = groups.size();  // sizes 0 .. levels-1, degrees -1 .. levels-2

  // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> ranks(levels + 1, 0);
  for (std::size_t s = 1; s < levels; ++s) {
    if (field.characteristic() == 2) {
      ranks[s] = boundary_rank_gf2(groups[s - 1], groups[s]);
    } else {
      ranks[s] = rank(boundary_between(groups[s - 1], groups[s]), field);
    }
  }
  out.dims.resize(levels);
  for (std::size_t s = 0; s < levels; ++s) {
    out.dims[s] = static_cast<long>(groups[s].size()) - static_cast<long>(ranks[s]) -
                  static_cast<long>(ranks[s + 1]);
  }
  return out;
}

HomologyDims reduced_homology_dims(const SimplicialComplex& complex, FieldSpec field) {
  const std::vector<VertexSet> faces = complex.faces();
  return reduced_homology_of_faces(faces, field);
}

}  // namespace cei
