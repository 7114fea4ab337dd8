#include "fractree/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

namespace fractree::cli {

namespace {

double number(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::InvalidConfig, std::string("missing key '") + key + "'");
  const auto& value = doc.at(key);
  if (!value.is_number()) throw Error(ErrorCode::InvalidConfig, std::string("key '") + key + "' must be a number");
  return value.get<double>();
}

}  // namespace

TreeParams params_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");
  TreeParams p;
  p.theta = number(doc, "theta_deg") * std::numbers::pi / 180.0;
  p.E = number(doc, "E");
  p.G = number(doc, "G");
  p.L = number(doc, "L");
  p.I = number(doc, "I");
  p.A = number(doc, "A");
  p.Astar = number(doc, "A_star");
  p.a = number(doc, "a");
  p.u = number(doc, "u");
  p.v = number(doc, "v");
  const double levels = number(doc, "P");
  if (levels != std::floor(levels) || std::fabs(levels) > 1e6) {
    throw Error(ErrorCode::InvalidConfig, "key 'P' must be an integer");
  }
  p.P = static_cast<int>(levels);
  return validate(p);
}

nlohmann::json params_to_json(const TreeParams& p) {
  return {{"theta_deg", p.theta * 180.0 / std::numbers::pi},
          {"E", p.E},
          {"G", p.G},
          {"L", p.L},
          {"I", p.I},
          {"A", p.A},
          {"A_star", p.Astar},
          {"a", p.a},
          {"u", p.u},
          {"v", p.v},
          {"P", p.P}};
}

TreeParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open config '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidConfig, "config '" + path + "': " + e.what());
  }
  return params_from_json(doc);
}

}  // namespace fractree::cli
