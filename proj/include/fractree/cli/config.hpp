#pragma once

#include <json.hpp>
#include <string>

#include "fractree/model.hpp"

namespace fractree::cli {

// Config document keys: theta_deg, E, G, L, I, A, A_star, a, u, v, P.
// Missing or mistyped keys raise InvalidConfig; out-of-range values raise
// InvalidParams through validate().
TreeParams params_from_json(const nlohmann::json& doc);
nlohmann::json params_to_json(const TreeParams& params);
TreeParams load_params(const std::string& path);

}  // namespace fractree::cli
