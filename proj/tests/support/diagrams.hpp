#pragma once

// Random finite diagrams in Comod and a brute-force check of the colimit's
// universal property against every enumerable competing cocone.

#include <random>
#include <string>
#include <vector>

#include "measuringkit/global_cats.hpp"

namespace testkit {

/// Up to max_objects comodules of dim <= 2 over coalgebras of dim <= 2, with
/// up to two edges drawn from the enumerated global morphisms.
measuringkit::ComodDiagram random_comod_diagram(const measuringkit::Field& field, std::size_t max_objects,
                                                std::mt19937_64& rng);

struct UniversalityTally {
  std::size_t cocones = 0;      // competing cocones enumerated
  std::size_t mismatches = 0;   // mediator missing, not unique, or differs from brute force
  std::string first_witness;
};

/// For each candidate apex, enumerates every cocone (capped per apex) and
/// checks that mediate() returns the single brute-force mediating morphism.
UniversalityTally check_universality(const measuringkit::ComodDiagram& diagram,
                                     const measuringkit::ComodColimit& colimit,
                                     const std::vector<measuringkit::Comodule>& apexes,
                                     std::size_t max_cocones_per_apex = 2048);

/// The colimit apex when small enough to enumerate into, plus `extra` random
/// comodules of dim <= 2 over coalgebras of dim <= 2.
std::vector<measuringkit::Comodule> candidate_apexes(const measuringkit::ComodColimit& colimit, std::size_t extra,
                                                     std::mt19937_64& rng);

}  // namespace testkit
