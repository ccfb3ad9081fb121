#ifndef CEI_CLASSIFY_HPP
#define CEI_CLASSIFY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cei/betti.hpp"
#include "cei/graph.hpp"
#include "cei/homology.hpp"
#include "cei/ideal.hpp"

namespace cei {

/// How the (pd, reg) classification treats complete graphs.
///
/// PaperLiteral groups complete graphs with trees at (1, n-2); Corrected
/// places them at (2, n-2), which is what the squarefree Veronese
/// resolution actually gives.
enum class Mode { Corrected, PaperLiteral };

std::string to_string(Mode mode);
/// "corrected" or "paper-literal"; throws std::invalid_argument otherwise.
Mode parse_mode(const std::string& text);

struct GraphDescriptors {
  int n = 0;
  int edge_count = 0;
  int component_count = 0;
  bool connected = false;
  bool complete = false;
  bool forest = false;
  bool tree = false;
  bool chordal = false;
  bool triangle_free = false;
  bool disjoint_union_of_edges = false;
  bool has_cycle = false;
};

GraphDescriptors describe(const Graph& g);

struct Predictions {
  bool unmixed = false;
  bool sequentially_cm = false;
  bool cohen_macaulay = false;
  bool gorenstein = false;
  bool linear_resolution = false;
  bool pure_resolution = false;
  bool level = false;
  int pd = 0;
  int reg = 0;
};

struct ClassificationReport {
  GraphDescriptors graph;
  Predictions predicted;
  Mode mode = Mode::Corrected;
};

/// Predictions read off from the graph structure alone.
ClassificationReport classify_graph(const Graph& g, Mode mode);

struct ClaimResult {
  std::string claim;
  bool match = true;
  std::string predicted;
  std::string computed;
};

struct ConsistencyResult {
  std::string graph6;
  FieldSpec field = FieldSpec::gf(2);
  Mode mode = Mode::Corrected;
  std::vector<ClaimResult> claims;

  bool all_match() const;
};

/// Claim names in the order verify_graph reports them.
const std::vector<std::string>& claim_names();

/// Everything computed for one graph.
struct GraphAnalysis {
  Graph graph;
  SqfIdeal ideal;
  std::vector<VertexSet> minimal_primes;
  SqfIdeal dual;
  BettiTable betti;
  PropertyReport properties;
  ClassificationReport classification;
  ConsistencyResult consistency;
  /// Present when the Koszul cross-check was requested.
  std::optional<BettiTable> koszul;
  /// Linear quotient certificate for connected graphs.
  std::optional<MonomialOrderCert> order;
};

struct VerifyOptions {
  Mode mode = Mode::Corrected;
  /// Also compute the upper-Koszul table and compare it to Hochster's.
  bool koszul_check = false;
};

GraphAnalysis analyze_graph(const Graph& g, FieldSpec field, const VerifyOptions& options = {});

ConsistencyResult verify_graph(const Graph& g, FieldSpec field, Mode mode = Mode::Corrected);

struct ClaimTally {
  long pass = 0;
  long fail = 0;
  bool operator==(const ClaimTally&) const = default;
};

struct Mismatch {
  std::string graph6;
  std::string field;
  std::string claim;
  std::string predicted;
  std::string computed;
  bool operator==(const Mismatch&) const = default;
};

struct FieldDisagreement {
  std::string graph6;
  /// Field name -> rendered Betti table.
  std::map<std::string, std::string> tables;
  bool operator==(const FieldDisagreement&) const = default;
};

struct SweepOptions {
  int n_min = 4;
  int n_max = 6;
  FieldSpec field = FieldSpec::gf(2);
  Mode mode = Mode::Corrected;
  /// Verify over GF(2), GF(3) and QQ and compare the tables.
  bool cross_field = false;
  bool koszul_check = false;
  int workers = 1;
  /// Called on the calling thread after each vertex count finishes.
  std::function<void(int n, long graphs)> progress;
};

struct SweepReport {
  int n_min = 0;
  int n_max = 0;
  Mode mode = Mode::Corrected;
  std::vector<std::string> fields;
  long graph_count = 0;
  std::map<int, long> graph_count_by_n;
  /// field -> claim -> tally
  std::map<std::string, std::map<std::string, ClaimTally>> tallies;
  /// Sorted by graph6, then field, then claim.
  std::vector<Mismatch> mismatches;
  std::vector<FieldDisagreement> field_disagreements;
  double wall_seconds = 0.0;
};

/// Every labeled graph on [n] without isolated vertices, n_min <= n <= n_max,
/// with 4 <= n_min <= n_max <= 7. Output does not depend on the worker count.
SweepReport sweep(const SweepOptions& options);

/// Calls `visit` on every labeled graph on [n] without isolated vertices, in
/// increasing edge-mask order. Requires n <= 11.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);

/// graph6 strings of the graphs on [n] (no isolated vertices) whose
/// quotient ring is Gorenstein, in edge-mask order.
std::vector<std::string> gorenstein_census(int n, FieldSpec field = FieldSpec::gf(2));

}  // namespace cei

#endif  // CEI_CLASSIFY_HPP
