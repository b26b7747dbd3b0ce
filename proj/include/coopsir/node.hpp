// Per-vertex infection/recovery timelines and the derived nine-valued state
// S, A, B, a, b, Ab, aB, AB, ab (capitals = active, lower case = recovered).
#ifndef COOPSIR_NODE_HPP
#define COOPSIR_NODE_HPP

#include <string>
#include <utility>

#include "coopsir/ext_real.hpp"

namespace coopsir {

enum class DiseaseState { Susceptible, Active, Recovered };

struct DiseaseTimeline {
  ExtReal infected_at = ExtReal::infinity();   // inf = never infected
  ExtReal recovered_at = ExtReal::infinity();  // inf while infected_at = inf

  bool ever_infected() const { return infected_at.is_finite(); }

  DiseaseState state_at(double t) const {
    if (infected_at > ExtReal(t)) return DiseaseState::Susceptible;
    if (recovered_at > ExtReal(t)) return DiseaseState::Active;
    return DiseaseState::Recovered;
  }
};

struct NodeOutcome {
  int generation = 0;
  DiseaseTimeline timeline_a;
  DiseaseTimeline timeline_b;

  bool ever_a() const { return timeline_a.ever_infected(); }
  bool ever_b() const { return timeline_b.ever_infected(); }
  bool ever_both() const { return ever_a() && ever_b(); }
};

// derived nine-valued state at time t, as the pair of per-disease states
std::pair<DiseaseState, DiseaseState> nine_state(const NodeOutcome& node, double t);

// conventional labels: "S","A","B","a","b","Ab","aB","AB","ab"
std::string nine_state_label(const NodeOutcome& node, double t);

}  // namespace coopsir

#endif
