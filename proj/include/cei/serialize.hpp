#ifndef CEI_SERIALIZE_HPP
#define CEI_SERIALIZE_HPP

#include "json.hpp"

#include "cei/betti.hpp"
#include "cei/classify.hpp"
#include "cei/complex.hpp"
#include "cei/ideal.hpp"

namespace cei {

using nlohmann::json;

inline constexpr const char* kAnalysisSchema = "cei.analysis/1";
inline constexpr const char* kSweepSchema = "cei.sweep/1";

/// 1-based label array.
json to_json(VertexSet s);
/// Array of "x1*x2" strings.
json to_json(const SqfIdeal& ideal);
SqfIdeal ideal_from_json(int n, const json& j);
/// Array of facet label arrays.
json to_json(const SimplicialComplex& complex);

/// {"field": ..., "table": {"i,j": rank}, "pd": ..., "reg": ...}
json to_json(const BettiTable& table);
BettiTable betti_from_json(int n, const json& j);

json to_json(const PropertyReport& report);
json to_json(const ClassificationReport& report);
json to_json(const ConsistencyResult& result);
json to_json(const MonomialOrderCert& cert);

/// Wall time is included only on request so that reports are reproducible.
json to_json(const SweepReport& report, bool include_timing = false);

/// The full single-graph document.
json analysis_document(const GraphAnalysis& analysis);

}  // namespace cei

#endif  // CEI_SERIALIZE_HPP
