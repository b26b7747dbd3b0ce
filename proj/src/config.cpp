#include "coopsir/config.hpp"

#include <fstream>
#include <sstream>

#include "coopsir/errors.hpp"

namespace coopsir {
namespace {

using nlohmann::json;

double rate_field(const json& j, const char* key) {
  if (!j.contains(key)) throw BadConfig(std::string("rates missing key '") + key + "'");
  if (!j[key].is_number()) throw BadConfig(std::string("rates key '") + key + "' must be a number");
  return j[key].get<double>();
}

ExtReal beta_field(const json& j, const char* key) {
  if (!j.contains(key)) throw BadConfig(std::string("rates missing key '") + key + "'");
  const auto& v = j[key];
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "infinity") return ExtReal::infinity();
    throw BadConfig(std::string("rates key '") + key + "' must be a number or \"inf\"");
  }
  if (!v.is_number()) throw BadConfig(std::string("rates key '") + key + "' must be a number or \"inf\"");
  return ExtReal(v.get<double>());
}

json beta_to_json(ExtReal b) {
  if (b.is_inf()) return json("inf");
  return json(b.finite());
}

OffspringLaw offspring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw BadConfig("offspring must be an object with 'kind' and 'params'");
  }
  const std::string kind = j["kind"].get<std::string>();
  const json params = j.value("params", json::object());
  try {
    if (kind == "deterministic") return OffspringLaw::deterministic(params.at("k").get<std::uint64_t>());
    if (kind == "binomial") {
      return OffspringLaw::binomial(params.at("n").get<std::uint64_t>(), params.at("p").get<double>());
    }
    if (kind == "poisson") return OffspringLaw::poisson(params.at("lambda").get<double>());
    if (kind == "geometric") return OffspringLaw::geometric(params.at("p").get<double>());
    if (kind == "explicit") return OffspringLaw::explicit_probs(params.at("probs").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw BadConfig("offspring params invalid for kind '" + kind + "': " + e.what());
  }
  throw BadConfig("unknown offspring kind '" + kind + "'");
}

json offspring_to_json(const OffspringLaw& law) {
  // round-trip via the factory parameters is not available; emit from describe()
  // equivalents instead. describe() is "kind(p1,p2)".
  const std::string d = law.describe();
  const auto open = d.find('(');
  const std::string kind = d.substr(0, open);
  const std::string args = d.substr(open + 1, d.size() - open - 2);
  json params = json::object();
  std::vector<std::string> parts;
  std::stringstream ss(args);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(tok);
  if (kind == "deterministic") params["k"] = std::stoull(parts[0]);
  else if (kind == "binomial") {
    params["n"] = std::stoull(parts[0]);
    params["p"] = std::stod(parts[1]);
  } else if (kind == "poisson") params["lambda"] = std::stod(parts[0]);
  else if (kind == "geometric") params["p"] = std::stod(parts[0]);
  else {
    std::vector<double> probs;
    for (const auto& p : parts) probs.push_back(std::stod(p));
    params["probs"] = probs;
  }
  return json{{"kind", kind}, {"params", params}};
}

}  // namespace

std::string to_string(RootState s) {
  switch (s) {
    case RootState::BothInfected: return "both_infected";
    case RootState::OnlyA: return "only_a";
    case RootState::OnlyB: return "only_b";
  }
  return "both_infected";
}

RootState root_state_from_string(const std::string& s) {
  if (s == "both_infected" || s == "both") return RootState::BothInfected;
  if (s == "only_a") return RootState::OnlyA;
  if (s == "only_b") return RootState::OnlyB;
  throw BadConfig("root_state must be both_infected, only_a or only_b (got '" + s + "')");
}

void SimConfig::validate() const {
  validate_rates(rates);
  if (max_generation < 1) throw BadConfig("max_generation must be >= 1");
  if (replicas < 1) throw BadConfig("replicas must be >= 1");
  if (frontier_cap < 1) throw BadConfig("frontier_cap must be >= 1");
}

SimConfig config_from_json(const json& j) {
  SimConfig c;
  try {
    if (!j.contains("rates")) throw BadConfig("config missing 'rates'");
    const auto& r = j["rates"];
    c.rates.alpha1 = rate_field(r, "alpha1");
    c.rates.beta1 = beta_field(r, "beta1");
    c.rates.mu1 = rate_field(r, "mu1");
    c.rates.alpha2 = rate_field(r, "alpha2");
    c.rates.beta2 = beta_field(r, "beta2");
    c.rates.mu2 = rate_field(r, "mu2");
    if (!j.contains("offspring")) throw BadConfig("config missing 'offspring'");
    c.offspring = offspring_from_json(j["offspring"]);
    c.max_generation = j.at("max_generation").get<int>();
    c.replicas = j.at("replicas").get<int>();
    c.master_seed = j.at("master_seed").get<std::uint64_t>();
    c.root_state = root_state_from_string(j.at("root_state").get<std::string>());
    if (j.contains("frontier_cap")) c.frontier_cap = j["frontier_cap"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw BadConfig(std::string("config parse error: ") + e.what());
  }
  c.validate();
  return c;
}

json config_to_json(const SimConfig& c) {
  return json{
      {"rates",
       {{"alpha1", c.rates.alpha1},
        {"beta1", beta_to_json(c.rates.beta1)},
        {"mu1", c.rates.mu1},
        {"alpha2", c.rates.alpha2},
        {"beta2", beta_to_json(c.rates.beta2)},
        {"mu2", c.rates.mu2}}},
      {"offspring", offspring_to_json(c.offspring)},
      {"max_generation", c.max_generation},
      {"replicas", c.replicas},
      {"master_seed", c.master_seed},
      {"root_state", to_string(c.root_state)},
      {"frontier_cap", c.frontier_cap}};
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw BadConfig("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

void apply_override(json& j, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw BadConfig("override must look like key.subkey=value (got '" + assignment + "')");
  }
  const std::string path = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);

  json* node = &j;
  std::stringstream ss(path);
  std::string key;
  std::vector<std::string> keys;
  while (std::getline(ss, key, '.')) keys.push_back(key);
  for (std::size_t i = 0; i + 1 < keys.size(); ++i) node = &(*node)[keys[i]];

  json parsed;
  if (value == "inf" || value == "infinity") {
    parsed = "inf";
  } else if (value == "true" || value == "false") {
    parsed = (value == "true");
  } else {
    try {
      std::size_t used = 0;
      const double d = std::stod(value, &used);
      if (used == value.size()) {
        // keep integers integral so uint fields round-trip
        if (d == static_cast<double>(static_cast<long long>(d)) &&
            value.find_first_of(".eE") == std::string::npos) {
          parsed = static_cast<long long>(d);
        } else {
          parsed = d;
        }
      } else {
        parsed = value;
      }
    } catch (const std::exception&) {
      parsed = value;
    }
  }
  (*node)[keys.back()] = parsed;
}

}  // namespace coopsir
