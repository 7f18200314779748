#include "bcl/io.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace bcl {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

double number_field(const ordered_json& obj, const std::string& key,
                    const std::string& where) {
  if (!obj.contains(key)) fail(where + ": missing \"" + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(where + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

std::vector<std::size_t> order_from_json(const ordered_json& arr,
                                         std::size_t n) {
  if (!arr.is_array()) fail("\"order\" must be an array");
  std::vector<std::size_t> order;
  order.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
      fail("\"order\" entries must be 1-based sensor indices");
    order.push_back(static_cast<std::size_t>(v.get<std::int64_t>()) - 1);
  }
  require_permutation(order, n);
  return order;
}

ordered_json order_to_json(const std::vector<std::size_t>& order) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i : order) arr.push_back(i + 1);
  return arr;
}

ordered_json parse_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("document is not valid JSON: ") + e.what());
  }
}

}  // namespace

ProblemInstance parse_instance(const std::string& text, DocumentExtras& extras) {
  const ordered_json doc = parse_text(text);
  if (!doc.is_object()) fail("instance document must be an object");
  if (!doc.contains("schema_version") ||
      !doc.at("schema_version").is_number_integer() ||
      doc.at("schema_version").get<std::int64_t>() != 1)
    fail("unsupported or missing \"schema_version\" (expected 1)");

  ProblemInstance inst;
  inst.alpha = number_field(doc, "alpha", "document");

  if (!doc.contains("move_cost")) fail("document: missing \"move_cost\"");
  const auto& mc = doc.at("move_cost");
  if (mc.is_string()) {
    if (mc.get<std::string>() != "static")
      fail("\"move_cost\" must be a number or the token \"static\"");
    inst.move_cost = MoveCost::static_marker();
  } else if (mc.is_number()) {
    const double v = mc.get<double>();
    if (!(v >= 0.0)) fail("\"move_cost\" must be >= 0");
    inst.move_cost = MoveCost::finite(v);
  } else {
    fail("\"move_cost\" must be a number or the token \"static\"");
  }

  if (!doc.contains("sensors") || !doc.at("sensors").is_array())
    fail("document: missing \"sensors\" array");
  std::size_t idx = 0;
  for (const auto& js : doc.at("sensors")) {
    ++idx;
    const std::string where = "sensor " + std::to_string(idx);
    if (!js.is_object()) fail(where + ": must be an object");
    Sensor s;
    s.x = number_field(js, "x", where);
    s.battery = number_field(js, "battery", where);
    if (js.contains("rho")) s.rho = number_field(js, "rho", where);
    inst.sensors.push_back(s);
  }
  inst.validate();

  extras = DocumentExtras{};
  if (doc.contains("order"))
    extras.order = order_from_json(doc.at("order"), inst.size());
  if (doc.contains("metadata")) {
    const auto& meta = doc.at("metadata");
    if (!meta.is_object()) fail("\"metadata\" must be an object");
    if (meta.contains("generator")) {
      if (!meta.at("generator").is_string())
        fail("metadata \"generator\" must be a string");
      extras.generator = meta.at("generator").get<std::string>();
    }
    if (meta.contains("seed")) {
      if (!meta.at("seed").is_number_unsigned())
        fail("metadata \"seed\" must be a nonnegative integer");
      extras.seed = meta.at("seed").get<std::uint64_t>();
    }
  }
  return inst;
}

ProblemInstance parse_instance(const std::string& text) {
  DocumentExtras extras;
  return parse_instance(text, extras);
}

std::string serialize_instance(const ProblemInstance& inst,
                               const DocumentExtras& extras) {
  inst.validate();
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["alpha"] = inst.alpha;
  if (inst.move_cost.is_static())
    doc["move_cost"] = "static";
  else
    doc["move_cost"] = inst.move_cost.value();
  ordered_json sensors = ordered_json::array();
  for (const Sensor& s : inst.sensors) {
    ordered_json js;
    js["x"] = s.x;
    js["battery"] = s.battery;
    if (s.rho) js["rho"] = *s.rho;
    sensors.push_back(std::move(js));
  }
  doc["sensors"] = std::move(sensors);
  if (extras.order) doc["order"] = order_to_json(*extras.order);
  if (extras.generator || extras.seed) {
    ordered_json meta;
    if (extras.generator) meta["generator"] = *extras.generator;
    if (extras.seed) meta["seed"] = *extras.seed;
    doc["metadata"] = std::move(meta);
  }
  return doc.dump(2) + "\n";
}

Solution parse_solution(const std::string& text, std::size_t n) {
  const ordered_json doc = parse_text(text);
  if (!doc.is_object()) fail("solution document must be an object");
  Solution sol;
  sol.lifetime = number_field(doc, "lifetime", "solution");
  if (!doc.contains("achievable") || !doc.at("achievable").is_boolean())
    fail("solution: missing boolean \"achievable\"");
  sol.achievable = doc.at("achievable").get<bool>();
  if (!doc.contains("sensors") || !doc.at("sensors").is_array())
    fail("solution: missing \"sensors\" array");
  if (doc.at("sensors").size() != n)
    fail("solution has " + std::to_string(doc.at("sensors").size()) +
         " sensors, expected " + std::to_string(n));
  std::size_t idx = 0;
  for (const auto& js : doc.at("sensors")) {
    ++idx;
    const std::string where = "solution sensor " + std::to_string(idx);
    if (!js.is_object()) fail(where + ": must be an object");
    sol.y.push_back(number_field(js, "y", where));
    const double r = number_field(js, "r", where);
    if (r < 0.0) fail(where + ": radius must be >= 0");
    sol.r.push_back(r);
  }
  if (doc.contains("order")) sol.order = order_from_json(doc.at("order"), n);
  return sol;
}

std::string serialize_solution(const Solution& sol, const SolutionMeta& meta) {
  if (sol.y.size() != sol.r.size())
    fail("solution y/r lengths differ");
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["solver"] = meta.solver;
  doc["epsilon"] = meta.epsilon;
  doc["lifetime"] = sol.lifetime;
  doc["achievable"] = sol.achievable;
  ordered_json sensors = ordered_json::array();
  for (std::size_t i = 0; i < sol.y.size(); ++i) {
    ordered_json js;
    js["y"] = sol.y[i];
    js["r"] = sol.r[i];
    sensors.push_back(std::move(js));
  }
  doc["sensors"] = std::move(sensors);
  if (sol.order) doc["order"] = order_to_json(*sol.order);
  if (meta.wall_time_seconds) doc["wall_time_seconds"] = *meta.wall_time_seconds;
  return doc.dump(2) + "\n";
}

}  // namespace bcl
