#ifndef CEI_BETTI_HPP
#define CEI_BETTI_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cei/homology.hpp"
#include "cei/ideal.hpp"

namespace cei {

/// Graded Betti numbers β_{i,j}(I) of the ideal I (not of S/I), so that
/// β_{0,j} counts minimal generators of degree j.
class BettiTable {
 public:
  BettiTable(int n, FieldSpec field) : n_(n), field_(field) {}

  int ambient() const { return n_; }
  FieldSpec field() const { return field_; }
  const std::map<std::pair<int, int>, long>& entries() const { return entries_; }

  long at(int i, int j) const;
  void add(int i, int j, long value);

  /// Largest homological index with a nonzero entry; -1 for an empty table.
  int pd() const;
  /// Largest j - i over nonzero entries.
  int reg() const;
  /// Sum of the row at homological index i.
  long total(int i) const;

  /// Tables compare by their nonzero entries only.
  bool operator==(const BettiTable& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

 private:
  int n_;
  FieldSpec field_;
  std::map<std::pair<int, int>, long> entries_;
};

/// Tables beyond this ambient dimension are refused (2^n induced subcomplexes).
inline constexpr int kMaxBettiAmbient = 24;

/// β_{i,j}(I) = Σ_{|W|=j} dim H̃_{j-i-2}((Δ_I)_W), Δ_I the Stanley-Reisner complex.
BettiTable hochster_betti(const SqfIdeal& ideal, FieldSpec field);

/// Same table from the upper Koszul simplicial complexes
/// K^σ(I) = {τ ⊆ σ : x^{σ∖τ} ∈ I}, β_{i,σ}(I) = dim H̃_{i-1}(K^σ).
BettiTable koszul_betti(const SqfIdeal& ideal, FieldSpec field);

/// Multigraded Betti number β_{i,σ}(I) via the upper Koszul complex.
long koszul_multigraded_betti(const SqfIdeal& ideal, int i, VertexSet sigma, FieldSpec field);

/// Linear resolution: all nonzero entries satisfy j = i + d.
bool has_linear_resolution(const BettiTable& table, int d);
/// Pure resolution: each homological index carries a single shift.
bool has_pure_resolution(const BettiTable& table);

struct PropertyReport {
  int pd = 0;
  int reg = 0;
  bool linear_resolution = false;
  bool pure_resolution = false;
  bool unmixed = false;
  bool cohen_macaulay = false;
  bool gorenstein = false;
  bool level = false;
  bool componentwise_linear_dual = false;
  /// Reported through the componentwise-linear-dual equivalence.
  bool sequentially_cm = false;

  bool operator==(const PropertyReport&) const = default;
};

/// Ring-theoretic properties of S/I derived from the Betti table of I.
/// Cohen-Macaulayness uses pd(S/I) = height(I).
PropertyReport ring_properties(const SqfIdeal& ideal, FieldSpec field);
/// Same, reusing a table already computed for `ideal`.
PropertyReport ring_properties(const SqfIdeal& ideal, const BettiTable& table);

/// Whether every I_[j] of I has a linear resolution.
bool is_componentwise_linear(const SqfIdeal& ideal, FieldSpec field);

/// Nonzero entries only at (0,n-2), (1,n-1), (1,n), (2,n).
bool betti_positions_check(const BettiTable& table);

/// Staircase rendering: rows j - i, columns i.
std::string render_betti_table(const BettiTable& table);

}  // namespace cei

#endif  // CEI_BETTI_HPP
