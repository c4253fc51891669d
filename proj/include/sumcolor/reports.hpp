#pragma once

#include "json.hpp"
#include "sumcolor/coloring.hpp"
#include "sumcolor/exact_solver.hpp"
#include "sumcolor/graph.hpp"
#include "sumcolor/regular_approx.hpp"
#include "sumcolor/split_bounds.hpp"

namespace sumcolor {

nlohmann::json graph_document_json(const GraphDocument& doc);
nlohmann::json coloring_json(const EdgeColoring& c);
nlohmann::json verification_json(const VerificationReport& rep);
nlohmann::json approx_report_json(const ApproxReport& rep);
nlohmann::json exact_result_json(const ExactResult& res);
nlohmann::json split_report_json(const SplitBoundReport& rep);
nlohmann::json useq_json(const Graph& g, const Bipartition& bp, Side side, const EdgeColoring& c);

}  // namespace sumcolor
