#include "cei/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cei/complex.hpp"

namespace cei {

long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

int BettiTable::pd() const {
  int out = -1;
  for (const auto& [key, value] : entries_) {
    if (value != 0) out = std::max(out, key.first);
  }
  return out;
}

int BettiTable::reg() const {
  bool any = false;
  int out = 0;
  for (const auto& [key, value] : entries_) {
    if (value == 0) continue;
    out = any ? std::max(out, key.second - key.first) : key.second - key.first;
    any = true;
  }
  return out;
}

long BettiTable::total(int i) const {
  long sum = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i) sum += value;
  }
  return sum;
}

namespace {

void require_betti_input(const SqfIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw std::invalid_argument(std::string(op) + ": zero ideal");
  if (ideal.ambient() > kMaxBettiAmbient) {
    throw std::invalid_argument(std::string(op) + ": ambient dimension above " +
                                std::to_string(kMaxBettiAmbient));
  }
}

}  // namespace

BettiTable hochster_betti(const SqfIdeal& ideal, FieldSpec field) {
  require_betti_input(ideal, "hochster_betti");
  const int n = ideal.ambient();
  const SimplicialComplex complex = stanley_reisner_complex(ideal);

  std::vector<char> is_face(std::size_t{1} << n, 0);
  for (VertexSet f : complex.faces()) is_face[f.bits()] = 1;

  BettiTable table(n, field);
  std::vector<VertexSet> restricted;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t w = 0; w < subsets; ++w) {
    // Faces of the induced subcomplex on W.
    restricted.clear();
    std::uint64_t sub = w;
    while (true) {
      if (is_face[sub]) restricted.push_back(VertexSet(sub));
      if (sub == 0) break;
      sub = (sub - 1) & w;
    }
    const HomologyDims h = reduced_homology_of_faces(restricted, field);
    const int j = VertexSet(w).size();
    for (int k = -1; k <= h.top_degree(); ++k) {
      const int i = j - k - 2;
      if (i >= 0) table.add(i, j, h.at(k));
    }
  }
  return table;
}

namespace {

// Faces τ ⊆ σ whose complement in σ lies in the ideal.
std::vector<VertexSet> upper_koszul_faces(const SqfIdeal& ideal, VertexSet sigma) {
  std::vector<VertexSet> faces;
  std::uint64_t tau = sigma.bits();
  while (true) {
    if (ideal.contains(sigma - VertexSet(tau))) faces.push_back(VertexSet(tau));
    if (tau == 0) break;
    tau = (tau - 1) & sigma.bits();
  }
  return faces;
}

}  // namespace

long koszul_multigraded_betti(const SqfIdeal& ideal, int i, VertexSet sigma, FieldSpec field) {
  if (i < 0) return 0;
  const std::vector<VertexSet> faces = upper_koszul_faces(ideal, sigma);
  return reduced_homology_of_faces(faces, field).at(i - 1);
}

BettiTable koszul_betti(const SqfIdeal& ideal, FieldSpec field) {
  require_betti_input(ideal, "koszul_betti");
  const int n = ideal.ambient();
  BettiTable table(n, field);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    const VertexSet sigma(s);
    if (!ideal.contains(sigma)) continue;  // K^σ is void
    const HomologyDims h = reduced_homology_of_faces(upper_koszul_faces(ideal, sigma), field);
    for (int k = -1; k <= h.top_degree(); ++k) table.add(k + 1, sigma.size(), h.at(k));
  }
  return table;
}

bool has_linear_resolution(const BettiTable& table, int d) {
  return std::all_of(table.entries().begin(), table.entries().end(), [&](const auto& entry) {
    return entry.second == 0 || entry.first.second == entry.first.first + d;
  });
}

bool has_pure_resolution(const BettiTable& table) {
  std::map<int, int> shift;
  for (const auto& [key, value] : table.entries()) {
    if (value == 0) continue;
    auto [it, inserted] = shift.emplace(key.first, key.second);
    if (!inserted && it->second != key.second) return false;
  }
  return true;
}

bool is_componentwise_linear(const SqfIdeal& ideal, FieldSpec field) {
  if (ideal.is_zero()) return true;
  const int lowest = ideal.generators().front().degree();
  for (int j = lowest; j <= ideal.ambient(); ++j) {
    const SqfIdeal component = degree_component(ideal, j);
    if (component.is_zero()) continue;
    if (!has_linear_resolution(hochster_betti(component, field), j)) return false;
  }
  return true;
}

PropertyReport ring_properties(const SqfIdeal& ideal, const BettiTable& table) {
  if (ideal.is_zero()) throw std::invalid_argument("ring_properties: zero ideal");
  PropertyReport report;
  report.pd = table.pd();
  report.reg = table.reg();
  const auto d = ideal.generation_degree();
  report.linear_resolution = d.has_value() && has_linear_resolution(table, *d);
  report.pure_resolution = has_pure_resolution(table);

  const std::vector<VertexSet> primes = minimal_primes(ideal);
  report.unmixed = std::all_of(primes.begin(), primes.end(),
                               [&](VertexSet p) { return p.size() == primes.front().size(); });
  const int ht = primes.empty() ? 0 : primes.front().size();
  report.cohen_macaulay = report.pd + 1 == ht;

  int last_shifts = 0;
  for (const auto& [key, value] : table.entries()) {
    if (key.first == report.pd && value != 0) ++last_shifts;
  }
  report.gorenstein = report.cohen_macaulay && table.total(report.pd) == 1;
  report.level = report.cohen_macaulay && last_shifts == 1;

  report.componentwise_linear_dual = is_componentwise_linear(alexander_dual(ideal), table.field());
  report.sequentially_cm = report.componentwise_linear_dual;
  return report;
}

PropertyReport ring_properties(const SqfIdeal& ideal, FieldSpec field) {
  return ring_properties(ideal, hochster_betti(ideal, field));
}

bool betti_positions_check(const BettiTable& table) {
  const int n = table.ambient();
  const std::set<std::pair<int, int>> allowed{{0, n - 2}, {1, n - 1}, {1, n}, {2, n}};
  return std::all_of(table.entries().begin(), table.entries().end(), [&](const auto& entry) {
    return entry.second == 0 || allowed.contains(entry.first);
  });
}

std::string render_betti_table(const BettiTable& table) {
  const int pd = table.pd();
  if (pd < 0) return "(zero table)\n";
  int low = 0, high = 0;
  bool first = true;
  for (const auto& [key, value] : table.entries()) {
    if (value == 0) continue;
    const int r = key.second - key.first;
    low = first ? r : std::min(low, r);
    high = first ? r : std::max(high, r);
    first = false;
  }

  std::vector<std::string> labels{"", "total:"};
  for (int r = low; r <= high; ++r) labels.push_back(std::to_string(r) + ":");
  std::vector<std::vector<std::string>> columns;
  for (int i = 0; i <= pd; ++i) {
    std::vector<std::string> col{std::to_string(i), std::to_string(table.total(i))};
    for (int r = low; r <= high; ++r) {
      const long v = table.at(i, i + r);
      col.push_back(v == 0 ? "." : std::to_string(v));
    }
    columns.push_back(std::move(col));
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::ostringstream out;
  for (std::size_t row = 0; row < labels.size(); ++row) {
    out << std::setw(static_cast<int>(label_width)) << labels[row];
    for (const auto& col : columns) {
      std::size_t width = 0;
      for (const auto& cell : col) width = std::max(width, cell.size());
      out << ' ' << std::setw(static_cast<int>(width)) << col[row];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cei
