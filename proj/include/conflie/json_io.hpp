#pragma once

#include <json.hpp>

#include "conflie/analysis.hpp"
#include "conflie/equations.hpp"
#include "conflie/generators.hpp"
#include "conflie/springer.hpp"

namespace conflie {

using Json = nlohmann::ordered_json;

Json scalars_to_json(const Vec& v);
Vec scalars_from_json(const Json& j);

Json instance_to_json(const Instance& inst);

// Accepts {"points": ..., "panel": [[...]]} or {"points": ...,
// "pencil": {"sections": [[...]], "sigma_prime": k}}.
Panel panel_from_json(const Json& j);

Json analysis_to_json(const Panel& p, const Analysis& a);

Json equation_set_to_json(const EquationSet& es, const std::vector<std::string>& point_labels);
EquationSet equation_set_from_json(const Json& j);

Json symfun_to_json(const SymFunPoly& f);

Json partition_to_json(const Partition& p);

}  // namespace conflie
