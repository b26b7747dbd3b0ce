#include "coopsir/node.hpp"

namespace coopsir {

std::pair<DiseaseState, DiseaseState> nine_state(const NodeOutcome& node, double t) {
  return {node.timeline_a.state_at(t), node.timeline_b.state_at(t)};
}

std::string nine_state_label(const NodeOutcome& node, double t) {
  const auto [a, b] = nine_state(node, t);
  const bool active_a = a == DiseaseState::Active;
  const bool active_b = b == DiseaseState::Active;
  const bool rec_a = a == DiseaseState::Recovered;
  const bool rec_b = b == DiseaseState::Recovered;
  if (!active_a && !rec_a && !active_b && !rec_b) return "S";
  std::string label;
  if (active_a) label += "A";
  if (rec_a) label += "a";
  if (active_b) label += "B";
  if (rec_b) label += "b";
  return label;
}

}  // namespace coopsir
