#include "tropgrass/exactalg/io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace tropgrass::alg {

using nlohmann::json;

std::string ideal_to_json(const Ideal& ideal) {
  json j;
  j["field"] = ideal.ring()->field.name();
  j["characteristic"] = ideal.ring()->field.characteristic();
  j["variables"] = ideal.ring()->names;
  j["generators"] = json::array();
  for (const auto& g : ideal.generators()) j["generators"].push_back(to_string(g));
  return j.dump(2);
}

Ideal parse_ideal_json(std::string_view text) {
  json j = json::parse(text);
  unsigned p = j.value("characteristic", 0u);
  if (j.contains("field") && !j.contains("characteristic")) {
    std::string f = j.at("field").get<std::string>();
    if (f.rfind("GF(", 0) == 0) p = static_cast<unsigned>(std::stoul(f.substr(3)));
  }
  auto names = j.at("variables").get<std::vector<std::string>>();
  RingPtr ring = make_ring(names, Field(p));
  std::vector<MultiPoly> gens;
  for (const auto& g : j.at("generators")) gens.push_back(parse_poly(ring, g.get<std::string>()));
  return Ideal(ring, std::move(gens));
}

std::vector<Rational> parse_weight_json(std::string_view text, const PolyRing& ring) {
  json j = json::parse(text);
  auto value = [](const json& v) {
    return v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
  };
  std::vector<Rational> w(ring.size());
  if (j.is_array()) {
    if (j.size() != ring.size()) throw std::invalid_argument("weight vector has the wrong length");
    for (std::size_t i = 0; i < j.size(); ++i) w[i] = value(j[i]);
    return w;
  }
  if (!j.is_object()) throw std::invalid_argument("weight must be a JSON array or object");
  if (j.contains("coords")) j = j.at("coords");
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t idx = ring.size();
    for (std::size_t v = 0; v < ring.size(); ++v)
      if (ring.names[v] == it.key() || ring.names[v] == "p_" + it.key()) idx = v;
    if (idx == ring.size()) throw std::invalid_argument("unknown weight key " + it.key());
    w[idx] = value(it.value());
  }
  return w;
}

std::string weight_to_json(const std::vector<Rational>& w, const PolyRing& ring) {
  json j = json::object();
  for (std::size_t i = 0; i < w.size() && i < ring.size(); ++i) j[ring.names[i]] = tropgrass::to_string(w[i]);
  return j.dump();
}

}  // namespace tropgrass::alg
