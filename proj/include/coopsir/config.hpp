// Experiment configuration: rates, offspring law, protocol sizes and the
// master seed. Serialized as JSON; see docs/formats.md for the schema.
#ifndef COOPSIR_CONFIG_HPP
#define COOPSIR_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "coopsir/offspring.hpp"
#include "coopsir/rates.hpp"

namespace coopsir {

enum class RootState { BothInfected, OnlyA, OnlyB };

std::string to_string(RootState s);
RootState root_state_from_string(const std::string& s);

struct SimConfig {
  RateSet rates;
  OffspringLaw offspring = OffspringLaw::deterministic(2);
  int max_generation = 1;
  int replicas = 1;
  std::uint64_t master_seed = 0;
  RootState root_state = RootState::BothInfected;
  std::uint64_t frontier_cap = 10'000'000;

  // throws on violated invariants (max_generation >= 1, replicas >= 1, rates)
  void validate() const;
};

SimConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const SimConfig& c);
SimConfig load_config(const std::filesystem::path& path);

// dotted-key override, e.g. "rates.beta2=1.4" or "root_state=only_a";
// values parse as number, "inf", or string
void apply_override(nlohmann::json& j, const std::string& assignment);

}  // namespace coopsir

#endif
